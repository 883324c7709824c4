//! Core library for analyzing and simulating casino wager processes.
//!
//! A wager is a triple (bet, return, profit) with `profit = return - bet`.
//! Everything here is built around tracking the ratio of total profit (or
//! total return) to total amount bet over long sequences of such wagers:
//!
//! - [`wager`]: the wager triple, RTP/HA computation, streaming ratio
//!   accumulators, and empirical bound checks on ratio traces.
//! - [`rng`]: deterministic, splittable random streams so that replicated
//!   experiments are bit-reproducible regardless of thread count.
//! - [`roulette`]: single-zero roulette with the en prison and partager
//!   zero rules, plus exact per-unit edge computations.
//! - [`labouchere`]: the reverse Labouchere scorecard state machine.
//! - [`leigh`]: the six-chance reverse-Labouchere session experiment and
//!   its aggregate statistics (histogram, winning-progression counts,
//!   Poisson tail report).
//! - [`compound`]: compound wagers resolved over multiple cards/rolls —
//!   exact Three Card Poker enumeration and craps pass-line with free odds.
//! - [`stats`]: streaming moments with exact parallel merge, histograms,
//!   and log-space Poisson tails.
//!
//! Money is integral (francs or abstract units) throughout the simulation
//! paths; analysis paths use exact rational arithmetic ([`Rational`]) so
//! that closed-form expectations are reproduced bit-exactly.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod compound;
mod error;
pub mod labouchere;
pub mod leigh;
pub mod rng;
pub mod roulette;
pub mod stakes;
pub mod stats;
pub mod wager;

pub use error::Error;

/// Exact rational number used by all closed-form analysis paths.
///
/// `i128` components give ample headroom: the largest denominators in the
/// exact enumerations are below 2^63 and products of two such values fit.
pub type Rational = num_rational::Ratio<i128>;

/// Integral money amount (francs or abstract units).
pub type Money = i64;

/// Nearest-f64 view of a rational, for reporting and tolerances.
pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Shorthand result type.
pub type Result<T> = core::result::Result<T, Error>;
