//! Stake-sizing policies for even-money style play.
//!
//! The martingale doubles after each loss and returns to one unit after a
//! win. Without a cap its bet sizes have unbounded second moments and the
//! long-run profit ratio need not converge; with a house-limit cap the
//! doubling resets whenever it would pass the limit, bets stay bounded,
//! and the ratio converges to minus the house advantage like any other
//! bounded system.

use crate::wager::BetOutcome;
use crate::{Error, Money, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StakePolicy {
    /// The same stake every time.
    Flat(Money),
    /// Double after a loss, reset to `unit` after a win; a tie re-bets.
    /// With `cap` set, a doubling that would exceed it resets to `unit`.
    Martingale { unit: Money, cap: Option<Money> },
}

impl StakePolicy {
    pub fn validate(&self) -> Result<()> {
        match *self {
            StakePolicy::Flat(stake) if stake < 1 => {
                Err(Error::InvalidConfig("flat stake must be positive"))
            }
            StakePolicy::Martingale { unit, .. } if unit < 1 => {
                Err(Error::InvalidConfig("martingale unit must be positive"))
            }
            StakePolicy::Martingale { unit, cap: Some(cap) } if cap < unit => {
                Err(Error::InvalidConfig("martingale cap below unit"))
            }
            _ => Ok(()),
        }
    }

    /// Whether bet sizes under this policy are bounded.
    pub fn is_bounded(&self) -> bool {
        match self {
            StakePolicy::Flat(_) => true,
            StakePolicy::Martingale { cap, .. } => cap.is_some(),
        }
    }
}

/// Running stake produced by a policy as outcomes come in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StakeSequence {
    policy: StakePolicy,
    current: Money,
}

impl StakeSequence {
    pub fn new(policy: StakePolicy) -> Result<Self> {
        policy.validate()?;
        let current = match policy {
            StakePolicy::Flat(stake) => stake,
            StakePolicy::Martingale { unit, .. } => unit,
        };
        Ok(Self { policy, current })
    }

    /// The stake to place on the next bet.
    pub fn next_stake(&self) -> Money {
        self.current
    }

    /// Record the outcome of the bet just resolved.
    pub fn record(&mut self, outcome: BetOutcome) {
        if let StakePolicy::Martingale { unit, cap } = self.policy {
            match outcome {
                BetOutcome::Loss => {
                    let doubled = self.current.saturating_mul(2);
                    self.current = match cap {
                        Some(cap) if doubled > cap => unit,
                        _ => doubled,
                    };
                }
                BetOutcome::Win => self.current = unit,
                BetOutcome::Tie => {}
            }
        }
    }
}
