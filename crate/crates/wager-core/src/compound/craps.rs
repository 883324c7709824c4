//! Craps pass-line play with free odds, exact and simulated.
//!
//! The pass-line bet wins on a come-out 7 or 11, loses on 2, 3, or 12,
//! and otherwise establishes a point in {4,5,6,8,9,10} that must repeat
//! before a 7. Once a point is on, the bettor may back the line with a
//! free odds bet of 3x (point 4 or 10), 4x (5 or 9), or 5x (6 or 8) the
//! line bet; the odds pay 2:1, 3:2, and 6:5 respectively, which is fair,
//! so every point win with full odds profits 7 units on a 1-unit line.
//!
//! Continuous play decomposes into rounds ending at each seven-out (a 7
//! while a point is on — a come-out 7 wins and ends no round). Every
//! pass decision begun in a round resolves within it, so round totals
//! account for all wagers with no leakage at the boundaries.

use super::super::stats::StreamingMoments;
use crate::rng::Stream;
use crate::stakes::{StakePolicy, StakeSequence};
use crate::wager::{rtp_ha, settle, BetOutcome, RatioState};
use crate::{Error, Money, Rational, Result};

/// Probability of rolling `total` with two fair dice.
pub fn dice_probability(total: u8) -> Result<Rational> {
    if !(2..=12).contains(&total) {
        return Err(Error::InvalidDiceTotal(total));
    }
    let ways = 6 - (7 - total as i128).abs();
    Ok(Rational::new(ways, 36))
}

/// Source of dice totals: the live stream or a scripted sequence.
pub trait Dice {
    fn next_total(&mut self) -> Result<u8>;
}

/// A live stream rolls two independent fair dice.
impl Dice for Stream {
    fn next_total(&mut self) -> Result<u8> {
        let a = self.next_below(6)? as u8;
        let b = self.next_below(6)? as u8;
        Ok(a + b + 2)
    }
}

/// Pre-recorded totals for deterministic play.
#[derive(Debug, Clone)]
pub struct ScriptedTotals {
    totals: alloc::vec::Vec<u8>,
    next: usize,
}

impl ScriptedTotals {
    pub fn new(totals: &[u8]) -> Result<Self> {
        if let Some(&bad) = totals.iter().find(|t| !(2..=12).contains(*t)) {
            return Err(Error::InvalidDiceTotal(bad));
        }
        Ok(Self {
            totals: totals.into(),
            next: 0,
        })
    }

    pub fn remaining(&self) -> usize {
        self.totals.len() - self.next
    }
}

impl Dice for ScriptedTotals {
    fn next_total(&mut self) -> Result<u8> {
        let t = *self.totals.get(self.next).ok_or(Error::ScriptExhausted)?;
        self.next += 1;
        Ok(t)
    }
}

/// Free-odds schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Odds {
    None,
    /// 3x on points 4/10, 4x on 5/9, 5x on 6/8.
    ThreeFourFive,
}

impl Odds {
    /// Odds stake per unit line bet once `point` is established.
    pub fn multiple(&self, point: u8) -> Money {
        match self {
            Odds::None => 0,
            Odds::ThreeFourFive => match point {
                4 | 10 => 3,
                5 | 9 => 4,
                _ => 5,
            },
        }
    }
}

/// Fair payout of a winning odds bet: 2:1, 3:2, or 6:5 by point.
fn odds_profit_on_win(point: u8, odds_stake: Money) -> Money {
    match point {
        4 | 10 => 2 * odds_stake,
        5 | 9 => odds_stake * 3 / 2,
        _ => odds_stake * 6 / 5,
    }
}

/// One resolved pass-line decision, in units of the line bet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrapsDecision {
    /// Line bet plus odds actually laid.
    pub total_bet: Money,
    pub profit: Money,
    pub rolls_used: u32,
    pub point: Option<u8>,
    /// The decision lost to a 7 while the point was on.
    pub seven_out: bool,
}

/// Roll one pass-line decision to resolution.
pub fn pass_decision<D: Dice>(dice: &mut D, odds: Odds) -> Result<CrapsDecision> {
    let come_out = dice.next_total()?;
    match come_out {
        7 | 11 => Ok(CrapsDecision {
            total_bet: 1,
            profit: 1,
            rolls_used: 1,
            point: None,
            seven_out: false,
        }),
        2 | 3 | 12 => Ok(CrapsDecision {
            total_bet: 1,
            profit: -1,
            rolls_used: 1,
            point: None,
            seven_out: false,
        }),
        point => {
            let odds_stake = odds.multiple(point);
            let total_bet = 1 + odds_stake;
            let mut rolls_used = 1;
            loop {
                let t = dice.next_total()?;
                rolls_used += 1;
                if t == point {
                    return Ok(CrapsDecision {
                        total_bet,
                        profit: 1 + odds_profit_on_win(point, odds_stake),
                        rolls_used,
                        point: Some(point),
                        seven_out: false,
                    });
                }
                if t == 7 {
                    return Ok(CrapsDecision {
                        total_bet,
                        profit: -total_bet,
                        rolls_used,
                        point: Some(point),
                        seven_out: true,
                    });
                }
            }
        }
    }
}

/// Closed-form expectations of one pass-line decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrapsExact {
    pub e_bet: Rational,
    pub e_profit: Rational,
    pub ha_total: Rational,
    pub ha_base: Rational,
    /// Probability the pass-line bet wins.
    pub win_prob: Rational,
}

/// Evaluate the pass-line expectations exactly over the dice law.
pub fn craps_exact(odds: Odds) -> Result<CrapsExact> {
    let one = Rational::from_integer(1);
    let p7 = dice_probability(7)?;
    let mut e_bet = Rational::from_integer(0);
    let mut e_profit = Rational::from_integer(0);
    let mut win_prob = Rational::from_integer(0);
    for total in 2..=12u8 {
        let p = dice_probability(total)?;
        match total {
            7 | 11 => {
                e_bet += p;
                e_profit += p;
                win_prob += p;
            }
            2 | 3 | 12 => {
                e_bet += p;
                e_profit -= p;
            }
            point => {
                let odds_stake = odds.multiple(point);
                let bet = Rational::from_integer(1 + odds_stake as i128);
                // Odds pay p7 : p_point, so a point win profits
                // 1 + odds * p7/p_point.
                let p_make = p / (p + p7);
                let win_profit =
                    one + Rational::from_integer(odds_stake as i128) * (p7 / p);
                e_bet += p * bet;
                e_profit += p * (p_make * win_profit - (one - p_make) * bet);
                win_prob += p * p_make;
            }
        }
    }
    let out = rtp_ha(e_profit, e_bet)?;
    Ok(CrapsExact {
        e_bet,
        e_profit,
        ha_total: out.ha,
        ha_base: -e_profit,
        win_prob,
    })
}

/// Totals of one seven-out round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrapsRound {
    /// Rolls from the first come-out after the previous seven-out through
    /// the seven-out that ends this round.
    pub rolls: u32,
    pub decisions: u32,
    pub bet: Money,
    pub profit: Money,
}

/// Continuous pass-line play split into seven-out rounds.
#[derive(Debug)]
pub struct CrapsSession<D: Dice> {
    dice: D,
    odds: Odds,
    stakes: StakeSequence,
}

impl<D: Dice> CrapsSession<D> {
    /// The stake policy sizes the line bet per round and must be bounded.
    pub fn new(dice: D, odds: Odds, policy: StakePolicy) -> Result<Self> {
        if !policy.is_bounded() {
            return Err(Error::InvalidConfig("stake policy must be bounded"));
        }
        Ok(Self {
            dice,
            odds,
            stakes: StakeSequence::new(policy)?,
        })
    }

    /// Play pass-line decisions until a seven-out ends the round.
    pub fn next_round(&mut self) -> Result<CrapsRound> {
        let stake = self.stakes.next_stake();
        let mut round = CrapsRound {
            rolls: 0,
            decisions: 0,
            bet: 0,
            profit: 0,
        };
        loop {
            let d = pass_decision(&mut self.dice, self.odds)?;
            round.rolls += d.rolls_used;
            round.decisions += 1;
            round.bet += stake * d.total_bet;
            round.profit += stake * d.profit;
            if d.seven_out {
                break;
            }
        }
        self.stakes.record(if round.profit > 0 {
            BetOutcome::Win
        } else if round.profit < 0 {
            BetOutcome::Loss
        } else {
            BetOutcome::Tie
        });
        Ok(round)
    }
}

/// Aggregates of a multi-round run.
#[derive(Debug, Clone, PartialEq)]
pub struct CrapsRunSummary {
    pub rounds: u64,
    pub decisions: u64,
    /// Wager totals accumulated per decision.
    pub totals: RatioState,
    /// Moments of the round length in rolls.
    pub round_rolls: StreamingMoments,
    /// Moments of the round profit.
    pub round_profit: StreamingMoments,
    /// Round-level totals, for the boundary-accounting check against
    /// the per-decision totals.
    pub round_bet_total: i128,
    pub round_profit_total: i128,
}

/// Run `n_rounds` seven-out rounds and aggregate.
pub fn run_rounds<D: Dice>(
    dice: D,
    n_rounds: u64,
    odds: Odds,
    policy: StakePolicy,
) -> Result<CrapsRunSummary> {
    if n_rounds < 1 {
        return Err(Error::InvalidConfig("at least one round"));
    }
    let mut session = CrapsSession::new(dice, odds, policy)?;
    let mut summary = CrapsRunSummary {
        rounds: 0,
        decisions: 0,
        totals: RatioState::new(),
        round_rolls: StreamingMoments::new(),
        round_profit: StreamingMoments::new(),
        round_bet_total: 0,
        round_profit_total: 0,
    };
    for _ in 0..n_rounds {
        let round = session.next_round()?;
        summary.rounds += 1;
        summary.decisions += round.decisions as u64;
        summary
            .totals
            .update(&settle(round.bet, round.bet + round.profit)?)?;
        summary.round_rolls.update(round.rolls as f64);
        summary.round_profit.update(round.profit as f64);
        summary.round_bet_total += round.bet as i128;
        summary.round_profit_total += round.profit as i128;
    }
    Ok(summary)
}
