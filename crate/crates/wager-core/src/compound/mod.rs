//! Compound wagers: games where the base bet may be raised mid-coup.
//!
//! Two workloads live here. [`tcp`] is the exact Three Card Poker
//! ante-play analysis by full enumeration of gambler and dealer hands,
//! in integer arithmetic. [`craps`] is the pass-line bet with free odds:
//! closed-form expectations over the dice distribution, a simulation of
//! pass decisions, and the decomposition of continuous play into
//! seven-out rounds.

pub mod cards;
pub mod craps;
pub mod tcp;
