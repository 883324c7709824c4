//! The reverse Labouchere scorecard.
//!
//! The gambler keeps a list of positive numbers, initially `1,2,3,4`, and
//! always bets the sum of the first and last terms (or the single term of
//! a one-term list). A win appends the amount just won to the list; a
//! loss cancels the first and last terms; a tie changes nothing. The
//! progression aborts when the list empties (a small loss equal to the
//! initial list sum) or when the called bet would exceed the house
//! maximum (a large win), and restarts at once from the initial list.
//!
//! Called bets below the house minimum are played *virtually*: no money
//! is staked, but the list updates as if it had been. Both profit tracks
//! are kept: `f_sys` counts virtual bets as real, `f_act` is actual
//! money. At every point of a progression `f_sys` equals the list sum
//! minus the initial list sum.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::wager::BetOutcome;
use crate::{Error, Money, Result};

/// House limits and the initial scorecard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabConfig {
    pub init_list: Vec<Money>,
    pub min_bet: Money,
    pub max_bet: Money,
}

impl Default for LabConfig {
    /// The Casino Municipale setup: list 1,2,3,4; limits 5 and 2600 francs.
    fn default() -> Self {
        Self {
            init_list: alloc::vec![1, 2, 3, 4],
            min_bet: 5,
            max_bet: 2600,
        }
    }
}

impl LabConfig {
    pub fn validate(&self) -> Result<()> {
        if self.init_list.is_empty() {
            return Err(Error::InvalidConfig("initial list must be nonempty"));
        }
        if self.init_list.iter().any(|&x| x < 1) {
            return Err(Error::InvalidConfig("list terms must be positive"));
        }
        if self.min_bet > self.max_bet {
            return Err(Error::InvalidConfig("min bet exceeds max bet"));
        }
        if called_amount_of(&self.init_list) > self.max_bet {
            return Err(Error::InvalidConfig("initial list already calls over the max bet"));
        }
        Ok(())
    }

    pub fn init_sum(&self) -> Money {
        self.init_list.iter().sum()
    }
}

fn called_amount_of(list: &[Money]) -> Money {
    match list {
        [only] => *only,
        [first, .., last] => first + last,
        [] => unreachable!("called bet on empty list"),
    }
}

fn called_amount_of_deque(list: &VecDeque<Money>) -> Money {
    match (list.front(), list.back()) {
        (Some(&first), Some(&last)) if list.len() > 1 => first + last,
        (Some(&only), _) => only,
        _ => unreachable!("called bet on empty list"),
    }
}

/// The bet the scorecard calls for next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CalledBet {
    pub amount: Money,
    /// Below the house minimum: tracked by the system but not staked.
    pub is_virtual: bool,
}

/// How a progression ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProgressionKind {
    /// The called bet passed the house maximum.
    Winning,
    /// The list emptied.
    Losing,
    /// Play stopped (end of day) mid-progression.
    Incomplete,
}

/// A completed (or cut-off) progression and its profit on both tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProgressionOutcome {
    pub kind: ProgressionKind,
    /// System profit: list sum at the end minus the initial list sum.
    pub amount_sys: Money,
    /// Actual money profit: virtual bets contribute nothing.
    pub amount_act: Money,
    pub coups: u32,
}

/// Result of feeding one coup outcome into the scorecard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApplyResult {
    /// The bet that was riding on this coup.
    pub bet: CalledBet,
    /// Present when this coup completed the progression (the state has
    /// already restarted from the initial list).
    pub completed: Option<ProgressionOutcome>,
}

/// Live scorecard state for one even chance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabState {
    list: VecDeque<Money>,
    f_sys: Money,
    f_act: Money,
    coups: u32,
    /// A win or loss has moved the list since the last restart. Ties
    /// leave the card untouched; a card that never moved is not a
    /// progression in progress (its profit is necessarily zero).
    moved: bool,
}

impl LabState {
    pub fn new(config: &LabConfig) -> Self {
        let mut state = Self {
            list: VecDeque::with_capacity(config.init_list.len() * 4),
            f_sys: 0,
            f_act: 0,
            coups: 0,
            moved: false,
        };
        state.restart(config);
        state
    }

    /// Resume a progression from a recorded scorecard. Profits are set
    /// from the list-sum identity, with no virtual-bet history assumed.
    pub fn resume(list: &[Money], coups: u32, config: &LabConfig) -> Result<Self> {
        if list.is_empty() {
            return Err(Error::InvalidConfig("cannot resume an empty list"));
        }
        if list.iter().any(|&x| x < 1) {
            return Err(Error::InvalidConfig("list terms must be positive"));
        }
        let f_sys = list.iter().sum::<Money>() - config.init_sum();
        Ok(Self {
            list: list.iter().copied().collect(),
            f_sys,
            f_act: f_sys,
            coups,
            moved: true,
        })
    }

    fn restart(&mut self, config: &LabConfig) {
        self.list.clear();
        self.list.extend(config.init_list.iter().copied());
        self.f_sys = 0;
        self.f_act = 0;
        self.coups = 0;
        self.moved = false;
    }

    pub fn list(&self) -> impl Iterator<Item = Money> + '_ {
        self.list.iter().copied()
    }

    pub fn list_sum(&self) -> Money {
        self.list.iter().sum()
    }

    pub fn f_sys(&self) -> Money {
        self.f_sys
    }

    pub fn f_act(&self) -> Money {
        self.f_act
    }

    pub fn coups_in_progression(&self) -> u32 {
        self.coups
    }

    /// The next called bet: first plus last term, or the single term.
    ///
    /// The list is never empty between `apply` calls, and the called
    /// amount never exceeds the house maximum (the progression would
    /// already have aborted).
    pub fn called_bet(&self, config: &LabConfig) -> CalledBet {
        assert!(!self.list.is_empty(), "called bet on an empty list");
        let amount = called_amount_of_deque(&self.list);
        CalledBet {
            amount,
            is_virtual: amount < config.min_bet,
        }
    }

    /// Feed one coup outcome into the scorecard.
    ///
    /// Updates the list and both profit tracks, then aborts and restarts
    /// if the list emptied (losing) or the next called bet would pass
    /// the house maximum (winning).
    pub fn apply(&mut self, outcome: BetOutcome, config: &LabConfig) -> ApplyResult {
        let bet = self.called_bet(config);
        let staked = if bet.is_virtual { 0 } else { bet.amount };
        self.coups += 1;
        match outcome {
            BetOutcome::Win => {
                self.list.push_back(bet.amount);
                self.f_sys += bet.amount;
                self.f_act += staked;
                self.moved = true;
            }
            BetOutcome::Loss => {
                self.list.pop_front();
                self.list.pop_back();
                self.f_sys -= bet.amount;
                self.f_act -= staked;
                self.moved = true;
            }
            BetOutcome::Tie => {}
        }

        let kind = if self.list.is_empty() {
            Some(ProgressionKind::Losing)
        } else if called_amount_of_deque(&self.list) > config.max_bet {
            Some(ProgressionKind::Winning)
        } else {
            None
        };

        let completed = kind.map(|kind| {
            let out = ProgressionOutcome {
                kind,
                amount_sys: self.f_sys,
                amount_act: self.f_act,
                coups: self.coups,
            };
            self.restart(config);
            out
        });
        ApplyResult { bet, completed }
    }

    /// Cut off the progression in flight (end of day), if any, and
    /// restart. A scorecard with no coups played, or one that only tied
    /// (the list never moved, so nothing is in progress and no money
    /// shifted), is left as a fresh card and yields nothing.
    pub fn finalize(&mut self, config: &LabConfig) -> Option<ProgressionOutcome> {
        if self.coups == 0 || !self.moved {
            self.restart(config);
            return None;
        }
        let out = ProgressionOutcome {
            kind: ProgressionKind::Incomplete,
            amount_sys: self.f_sys,
            amount_act: self.f_act,
            coups: self.coups,
        };
        self.restart(config);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn drive(state: &mut LabState, config: &LabConfig, outcomes: &[BetOutcome]) -> Vec<ApplyResult> {
        outcomes.iter().map(|&o| state.apply(o, config)).collect()
    }

    #[test]
    fn default_config_is_the_casino_municipale_one() {
        let config = LabConfig::default();
        config.validate().unwrap();
        assert_eq!(config.init_sum(), 10);
        let state = LabState::new(&config);
        assert_eq!(
            state.called_bet(&config),
            CalledBet {
                amount: 5,
                is_virtual: false
            }
        );
    }

    #[test]
    fn win_then_two_losses_reaches_a_virtual_three() {
        use BetOutcome::*;
        let config = LabConfig::default();
        let mut state = LabState::new(&config);
        drive(&mut state, &config, &[Win, Loss, Loss]);
        assert_eq!(state.list().collect::<Vec<_>>(), alloc::vec![3]);
        let bet = state.called_bet(&config);
        assert_eq!(bet.amount, 3);
        assert!(bet.is_virtual);
        assert_eq!(state.f_sys(), -7);
        assert_eq!(state.f_act(), -7);
    }

    #[test]
    fn virtual_win_appends_the_tracked_amount() {
        use BetOutcome::*;
        let config = LabConfig::default();
        let mut state = LabState::new(&config);
        drive(&mut state, &config, &[Win, Loss, Loss]);
        let res = state.apply(Win, &config);
        assert!(res.bet.is_virtual);
        // The new list is 3,3 (never 3,0) and only f_sys moved.
        assert_eq!(state.list().collect::<Vec<_>>(), alloc::vec![3, 3]);
        assert_eq!(state.called_bet(&config).amount, 6);
        assert_eq!(state.f_sys(), -4);
        assert_eq!(state.f_act(), -7);
    }

    #[test]
    fn virtual_loss_completes_a_losing_progression() {
        use BetOutcome::*;
        let config = LabConfig::default();
        let mut state = LabState::new(&config);
        drive(&mut state, &config, &[Win, Loss, Loss]);
        let res = state.apply(Loss, &config);
        let out = res.completed.expect("list emptied");
        assert_eq!(out.kind, ProgressionKind::Losing);
        assert_eq!(out.amount_sys, -10);
        // The virtual 3 was never staked, so only 7 francs really left.
        assert_eq!(out.amount_act, -7);
        assert_eq!(out.coups, 4);
        // Instant restart.
        assert_eq!(state.called_bet(&config).amount, 5);
        assert_eq!(state.coups_in_progression(), 0);
    }

    #[test]
    fn two_losses_from_fresh_is_minus_ten() {
        use BetOutcome::*;
        let config = LabConfig::default();
        let mut state = LabState::new(&config);
        let results = drive(&mut state, &config, &[Loss, Loss]);
        let out = results[1].completed.expect("losing progression");
        assert_eq!(out.kind, ProgressionKind::Losing);
        assert_eq!(out.amount_sys, -10);
        assert_eq!(out.amount_act, -10);
        assert_eq!(out.coups, 2);
    }

    #[test]
    fn ties_change_nothing_but_count_a_coup() {
        use BetOutcome::*;
        let config = LabConfig::default();
        let mut state = LabState::new(&config);
        let res = state.apply(Tie, &config);
        assert_eq!(res.bet.amount, 5);
        assert!(res.completed.is_none());
        assert_eq!(state.list().collect::<Vec<_>>(), alloc::vec![1, 2, 3, 4]);
        assert_eq!(state.f_sys(), 0);
        assert_eq!(state.coups_in_progression(), 1);
        // A card that only tied has nothing in progress to cut off.
        assert!(state.finalize(&config).is_none());
        assert_eq!(state.coups_in_progression(), 0);
    }

    #[test]
    fn hopplewell_win_aborts_over_the_maximum() {
        // Scorecard from the day-3 account: stake 526+1709 = 2235; the win
        // appends it; the next call 526+2235 = 2761 is over 2600, so the
        // progression completes with 12,970 on the card, 12,960 after the
        // initial 10.
        let config = LabConfig::default();
        let list = [526, 633, 740, 847, 978, 1109, 1240, 1399, 1554, 1709];
        let mut state = LabState::resume(&list, 30, &config).unwrap();
        let bet = state.called_bet(&config);
        assert_eq!(bet.amount, 2235);
        assert!(!bet.is_virtual);

        let res = state.apply(BetOutcome::Win, &config);
        let out = res.completed.expect("over-limit call aborts");
        assert_eq!(out.kind, ProgressionKind::Winning);
        assert_eq!(out.amount_sys, 10_735 + 2235 - 10);
        assert_eq!(out.amount_sys, 12_960);
        assert_eq!(out.coups, 31);
    }

    #[test]
    fn finalize_cuts_off_in_flight_progressions() {
        use BetOutcome::*;
        let config = LabConfig::default();
        let mut state = LabState::new(&config);
        assert!(state.finalize(&config).is_none());

        state.apply(Win, &config);
        let out = state.finalize(&config).expect("in flight");
        assert_eq!(out.kind, ProgressionKind::Incomplete);
        assert_eq!(out.amount_sys, 5);
        assert_eq!(out.coups, 1);
        assert!(state.finalize(&config).is_none());

        state.apply(Loss, &config);
        let out = state.finalize(&config).unwrap();
        assert_eq!(out.amount_sys, -5);
    }

    #[test]
    fn resume_rejects_bad_lists() {
        let config = LabConfig::default();
        assert!(LabState::resume(&[], 0, &config).is_err());
        assert!(LabState::resume(&[1, 0], 0, &config).is_err());
    }

    #[test]
    fn config_validation() {
        let mut config = LabConfig::default();
        config.min_bet = 5000;
        assert!(config.validate().is_err());

        let config = LabConfig {
            init_list: alloc::vec![2600, 2600],
            min_bet: 5,
            max_bet: 2600,
        };
        assert!(config.validate().is_err());

        let config = LabConfig {
            init_list: alloc::vec![],
            ..LabConfig::default()
        };
        assert!(config.validate().is_err());
    }

    proptest! {
        // The cumulative-profit identity f_sys = S - 10 holds after every
        // step, every list term stays positive, and completed progressions
        // carry the forced amounts.
        #[test]
        fn cum_profit_identity_under_random_play(
            outcomes in proptest::collection::vec(0u8..3, 1..2000)
        ) {
            let config = LabConfig::default();
            let mut state = LabState::new(&config);
            for &code in &outcomes {
                let outcome = match code {
                    0 => BetOutcome::Win,
                    1 => BetOutcome::Loss,
                    _ => BetOutcome::Tie,
                };
                let res = state.apply(outcome, &config);
                prop_assert_eq!(state.f_sys(), state.list_sum() - config.init_sum());
                prop_assert!(state.list().all(|x| x >= 1));
                prop_assert!(state.called_bet(&config).amount <= config.max_bet);
                if let Some(out) = res.completed {
                    match out.kind {
                        ProgressionKind::Losing => prop_assert_eq!(out.amount_sys, -10),
                        ProgressionKind::Winning => {
                            // S_T > max bet, so the win clears max - 10.
                            prop_assert!(out.amount_sys > config.max_bet - 10);
                        }
                        ProgressionKind::Incomplete => prop_assert!(false, "apply never emits incomplete"),
                    }
                }
            }
        }

        // The transition function is pure: replaying a script reproduces
        // the exact state.
        #[test]
        fn deterministic_replay(outcomes in proptest::collection::vec(0u8..3, 1..500)) {
            let config = LabConfig::default();
            let decode = |code: u8| match code {
                0 => BetOutcome::Win,
                1 => BetOutcome::Loss,
                _ => BetOutcome::Tie,
            };
            let mut a = LabState::new(&config);
            let mut b = LabState::new(&config);
            for &code in &outcomes {
                a.apply(decode(code), &config);
            }
            for &code in &outcomes {
                b.apply(decode(code), &config);
            }
            prop_assert_eq!(a, b);
        }
    }
}
