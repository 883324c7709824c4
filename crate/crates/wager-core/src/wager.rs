//! The wager triple and the ratio machinery built on it.
//!
//! A settled wager is `(bet, ret, profit)` with `profit = ret - bet`,
//! `bet >= 0`, `ret >= 0`, and the convention that a zero bet returns
//! nothing. Long-run behavior is tracked through [`RatioState`], whose
//! profit ratio is total profit over total amount bet; for a game with
//! house advantage `ha` that ratio tends to `-ha`. [`BoundSpec`] holds
//! the exact bracket the ratio must eventually respect, and
//! [`check_bounds`] is the empirical check against a simulated trace.

use crate::{rational_to_f64, Error, Money, Rational, Result};

/// Outcome of a single even-money style bet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetOutcome {
    Win,
    Tie,
    Loss,
}

/// A settled wager: bet, return, and profit, with `profit = ret - bet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wager {
    bet: Money,
    ret: Money,
    profit: Money,
}

/// Settle a wager from its bet and return.
///
/// Rejects negative amounts and a nonzero return on a zero bet.
pub fn settle(bet: Money, ret: Money) -> Result<Wager> {
    if bet < 0 || ret < 0 {
        return Err(Error::NegativeAmount);
    }
    if bet == 0 && ret != 0 {
        return Err(Error::ReturnWithoutBet);
    }
    let profit = ret.checked_sub(bet).ok_or(Error::Overflow)?;
    Ok(Wager { bet, ret, profit })
}

impl Wager {
    pub fn bet(&self) -> Money {
        self.bet
    }

    pub fn ret(&self) -> Money {
        self.ret
    }

    pub fn profit(&self) -> Money {
        self.profit
    }
}

/// Return to player and house advantage of a wager distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RtpHa {
    pub rtp: Rational,
    pub ha: Rational,
}

/// Compute RTP and HA from an expected profit and expected bet.
///
/// `ha = -e_profit / e_bet` and `rtp = 1 - ha`, exactly. Requires
/// `e_bet > 0`.
pub fn rtp_ha(e_profit: Rational, e_bet: Rational) -> Result<RtpHa> {
    if e_bet <= Rational::from_integer(0) {
        return Err(Error::NonPositiveExpectedBet);
    }
    let ha = -e_profit / e_bet;
    let rtp = Rational::from_integer(1) - ha;
    Ok(RtpHa { rtp, ha })
}

/// Streaming accumulator for cumulative bet, return, and profit.
///
/// Accumulators are `i128` so that 1e10 coups at the table maximum stake
/// are nowhere near overflow; every update is checked regardless. Merge
/// is exact (integer addition), so splitting a wager stream across
/// workers and merging gives bit-identical totals in any order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RatioState {
    n: u64,
    cum_bet: i128,
    cum_ret: i128,
    cum_profit: i128,
}

impl RatioState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fold one settled wager into the accumulators.
    pub fn update(&mut self, w: &Wager) -> Result<()> {
        self.n = self.n.checked_add(1).ok_or(Error::Overflow)?;
        self.cum_bet = self
            .cum_bet
            .checked_add(w.bet as i128)
            .ok_or(Error::Overflow)?;
        self.cum_ret = self
            .cum_ret
            .checked_add(w.ret as i128)
            .ok_or(Error::Overflow)?;
        self.cum_profit = self
            .cum_profit
            .checked_add(w.profit as i128)
            .ok_or(Error::Overflow)?;
        Ok(())
    }

    /// Merge another state into this one. Associative and commutative.
    pub fn merge(&mut self, other: &RatioState) -> Result<()> {
        self.n = self.n.checked_add(other.n).ok_or(Error::Overflow)?;
        self.cum_bet = self
            .cum_bet
            .checked_add(other.cum_bet)
            .ok_or(Error::Overflow)?;
        self.cum_ret = self
            .cum_ret
            .checked_add(other.cum_ret)
            .ok_or(Error::Overflow)?;
        self.cum_profit = self
            .cum_profit
            .checked_add(other.cum_profit)
            .ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cum_bet(&self) -> i128 {
        self.cum_bet
    }

    pub fn cum_ret(&self) -> i128 {
        self.cum_ret
    }

    pub fn cum_profit(&self) -> i128 {
        self.cum_profit
    }

    /// Total return over total bet. Defined only once money was bet.
    pub fn return_ratio(&self) -> Result<f64> {
        if self.cum_bet <= 0 {
            return Err(Error::NoBetsRecorded);
        }
        Ok(self.cum_ret as f64 / self.cum_bet as f64)
    }

    /// Total profit over total bet. Defined only once money was bet.
    pub fn profit_ratio(&self) -> Result<f64> {
        if self.cum_bet <= 0 {
            return Err(Error::NoBetsRecorded);
        }
        Ok(self.cum_profit as f64 / self.cum_bet as f64)
    }
}

/// Exact bracket for the long-run profit ratio.
///
/// `chi_lo <= chi_hi` are the worst and best per-unit conditional
/// expectations available to the bettor; the return-side bounds are
/// `rho = chi + 1` by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundSpec {
    chi_lo: Rational,
    chi_hi: Rational,
}

impl BoundSpec {
    pub fn from_chi(chi_lo: Rational, chi_hi: Rational) -> Result<Self> {
        if chi_lo > chi_hi {
            return Err(Error::InvalidConfig("chi_lo must be <= chi_hi"));
        }
        Ok(Self { chi_lo, chi_hi })
    }

    /// Degenerate bracket for an HA-invariant game: both bounds equal.
    pub fn exact(chi: Rational) -> Self {
        Self {
            chi_lo: chi,
            chi_hi: chi,
        }
    }

    pub fn chi_lo(&self) -> Rational {
        self.chi_lo
    }

    pub fn chi_hi(&self) -> Rational {
        self.chi_hi
    }

    pub fn rho_lo(&self) -> Rational {
        self.chi_lo + Rational::from_integer(1)
    }

    pub fn rho_hi(&self) -> Rational {
        self.chi_hi + Rational::from_integer(1)
    }
}

/// Result of an empirical bound check on a ratio trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// Smallest ratio observed after burn-in.
    pub min_tail: f64,
    /// Largest ratio observed after burn-in.
    pub max_tail: f64,
    /// True iff the whole tail lies in `[chi_lo - tol, chi_hi + tol]`.
    pub pass: bool,
}

/// Check that every profit-ratio value after `burn_in` lies within the
/// bracket widened by `tol` on each side.
///
/// `tol` is supplied by the caller, typically a small multiple of the
/// standard error of the ratio at the burn-in point.
pub fn check_bounds(
    trace: &[f64],
    spec: &BoundSpec,
    burn_in: usize,
    tol: f64,
) -> Result<BoundReport> {
    let tail = trace.get(burn_in..).ok_or(Error::EmptyTail)?;
    if tail.is_empty() {
        return Err(Error::EmptyTail);
    }
    let mut min_tail = f64::INFINITY;
    let mut max_tail = f64::NEG_INFINITY;
    for &x in tail {
        if x < min_tail {
            min_tail = x;
        }
        if x > max_tail {
            max_tail = x;
        }
    }
    let lo = rational_to_f64(spec.chi_lo) - tol;
    let hi = rational_to_f64(spec.chi_hi) + tol;
    Ok(BoundReport {
        min_tail,
        max_tail,
        pass: min_tail >= lo && max_tail <= hi,
    })
}
