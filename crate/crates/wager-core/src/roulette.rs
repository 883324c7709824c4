//! Single-zero roulette: pockets, the six even chances, number bets, and
//! the coup model with the en prison rule.
//!
//! A coup is a single spin if it is nonzero. If zero appears, even-chance
//! stakes are imprisoned and the next nonzero spin completes the coup: the
//! stake is returned (a tie) if the imprisoned chance is hit, lost
//! otherwise. Consecutive zeros keep the stake imprisoned at full value,
//! so the number of spins a coup consumes is geometric with success
//! probability 36/37. Number bets always resolve on the first spin.

use alloc::vec::Vec;

use crate::rng::Stream;
use crate::wager::{settle, BetOutcome, Wager};
use crate::{Error, Money, Rational, Result};

/// Pocket colors; 0 is green.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Red,
    Black,
    Green,
}

/// The standard European red numbers as a bitmask over 1..=36.
const RED_MASK: u64 = {
    let reds = [1, 3, 5, 7, 9, 12, 14, 16, 18, 19, 21, 23, 25, 27, 30, 32, 34, 36];
    let mut mask = 0u64;
    let mut i = 0;
    while i < reds.len() {
        mask |= 1 << reds[i];
        i += 1;
    }
    mask
};

/// A wheel pocket, 0..=36.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pocket(u8);

impl Pocket {
    pub fn new(value: u8) -> Result<Self> {
        if value > 36 {
            return Err(Error::InvalidPocket(value));
        }
        Ok(Pocket(value))
    }

    pub fn value(&self) -> u8 {
        self.0
    }

    pub fn color(&self) -> Color {
        if self.0 == 0 {
            Color::Green
        } else if RED_MASK >> self.0 & 1 == 1 {
            Color::Red
        } else {
            Color::Black
        }
    }
}

/// The six even-money chances. Every nonzero pocket hits exactly three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvenChance {
    Red,
    Black,
    Odd,
    Even,
    Low,
    High,
}

impl EvenChance {
    pub const ALL: [EvenChance; 6] = [
        EvenChance::Red,
        EvenChance::Black,
        EvenChance::Odd,
        EvenChance::Even,
        EvenChance::Low,
        EvenChance::High,
    ];

    pub fn index(self) -> usize {
        match self {
            EvenChance::Red => 0,
            EvenChance::Black => 1,
            EvenChance::Odd => 2,
            EvenChance::Even => 3,
            EvenChance::Low => 4,
            EvenChance::High => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EvenChance::Red => "red",
            EvenChance::Black => "black",
            EvenChance::Odd => "odd",
            EvenChance::Even => "even",
            EvenChance::Low => "low",
            EvenChance::High => "high",
        }
    }

    /// Whether `pocket` hits this chance. Zero hits none.
    pub fn hits(self, pocket: Pocket) -> bool {
        let v = pocket.value();
        if v == 0 {
            return false;
        }
        match self {
            EvenChance::Red => pocket.color() == Color::Red,
            EvenChance::Black => pocket.color() == Color::Black,
            EvenChance::Odd => v % 2 == 1,
            EvenChance::Even => v % 2 == 0,
            EvenChance::Low => v <= 18,
            EvenChance::High => v >= 19,
        }
    }
}

/// Source of wheel spins: the live stream or a scripted sequence.
pub trait Spins {
    fn next_pocket(&mut self) -> Result<Pocket>;
}

/// A live stream spins uniformly over the 37 pockets.
impl Spins for Stream {
    fn next_pocket(&mut self) -> Result<Pocket> {
        Ok(Pocket(self.next_below(37)? as u8))
    }
}

/// Pre-recorded pocket numbers for deterministic play.
#[derive(Debug, Clone)]
pub struct ScriptedSpins {
    pockets: Vec<Pocket>,
    next: usize,
}

impl ScriptedSpins {
    pub fn new(values: &[u8]) -> Result<Self> {
        let pockets = values
            .iter()
            .map(|&v| Pocket::new(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { pockets, next: 0 })
    }

    /// Spins not yet consumed.
    pub fn remaining(&self) -> usize {
        self.pockets.len() - self.next
    }
}

impl Spins for ScriptedSpins {
    fn next_pocket(&mut self) -> Result<Pocket> {
        let p = *self.pockets.get(self.next).ok_or(Error::ScriptExhausted)?;
        self.next += 1;
        Ok(p)
    }
}

/// One resolved coup: the spins it consumed and how each even chance fared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoupResult {
    pub spins_used: u32,
    pub first_pocket: Pocket,
    /// Equals `first_pocket` when that is nonzero; otherwise the nonzero
    /// spin that released the imprisoned stakes.
    pub resolver_pocket: Pocket,
    outcomes: [BetOutcome; 6],
}

impl CoupResult {
    pub fn outcome(&self, chance: EvenChance) -> BetOutcome {
        self.outcomes[chance.index()]
    }

    /// Coup of a single-spin game (no prison): win/loss per chance, all
    /// chances lose on zero.
    pub fn single_spin(pocket: Pocket) -> Self {
        let mut outcomes = [BetOutcome::Loss; 6];
        for c in EvenChance::ALL {
            if c.hits(pocket) {
                outcomes[c.index()] = BetOutcome::Win;
            }
        }
        CoupResult {
            spins_used: 1,
            first_pocket: pocket,
            resolver_pocket: pocket,
            outcomes,
        }
    }
}

/// Play one coup under the en prison rule.
///
/// A nonzero first spin decides all six chances at once. On zero, spins
/// continue until a nonzero pocket appears; chances hit by that pocket
/// tie, the rest lose.
pub fn resolve_coup<S: Spins>(spins: &mut S) -> Result<CoupResult> {
    let first = spins.next_pocket()?;
    let mut spins_used = 1u32;
    if first.value() != 0 {
        return Ok(CoupResult::single_spin(first));
    }
    let resolver = loop {
        let p = spins.next_pocket()?;
        spins_used += 1;
        if p.value() != 0 {
            break p;
        }
    };
    let mut outcomes = [BetOutcome::Loss; 6];
    for c in EvenChance::ALL {
        if c.hits(resolver) {
            outcomes[c.index()] = BetOutcome::Tie;
        }
    }
    Ok(CoupResult {
        spins_used,
        first_pocket: first,
        resolver_pocket: resolver,
        outcomes,
    })
}

/// How a zero settles even-money stakes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroRule {
    /// Zero loses outright.
    Standard,
    /// Zero imprisons the stake; the next nonzero spin returns or takes it.
    EnPrison,
    /// Zero returns half the stake immediately.
    Partager,
}

/// A set of 1..=36 distinct nonzero numbers covered by one bet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumberSet {
    mask: u64,
    count: u8,
}

impl NumberSet {
    pub fn new(numbers: &[u8]) -> Result<Self> {
        if numbers.is_empty() || numbers.len() > 36 {
            return Err(Error::InvalidNumberSet);
        }
        let mut mask = 0u64;
        for &n in numbers {
            if n == 0 || n > 36 || mask >> n & 1 == 1 {
                return Err(Error::InvalidNumberSet);
            }
            mask |= 1 << n;
        }
        Ok(Self {
            mask,
            count: numbers.len() as u8,
        })
    }

    pub fn len(&self) -> u8 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, pocket: Pocket) -> bool {
        let v = pocket.value();
        v != 0 && self.mask >> v & 1 == 1
    }

    pub fn numbers(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=36u8).filter(|&n| self.mask >> n & 1 == 1)
    }
}

/// What a bet covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetTarget {
    Chance(EvenChance),
    Numbers(NumberSet),
}

/// One placed bet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetSpec {
    pub target: BetTarget,
    pub stake: Money,
}

/// Settle one bet against a resolved coup.
///
/// Number bets pay `36/m` for 1 on the covered numbers and resolve on the
/// first spin under every rule, as do even chances under [`ZeroRule::Standard`]
/// and [`ZeroRule::Partager`]; only [`ZeroRule::EnPrison`] consults the coup's
/// post-prison outcome.
pub fn settle_bet(bet: &BetSpec, coup: &CoupResult, rule: ZeroRule) -> Result<Wager> {
    if bet.stake < 0 {
        return Err(Error::NegativeAmount);
    }
    let stake = bet.stake;
    match bet.target {
        BetTarget::Numbers(set) => {
            if set.contains(coup.first_pocket) {
                let gross = stake.checked_mul(36).ok_or(Error::Overflow)?;
                let m = set.len() as Money;
                if gross % m != 0 {
                    return Err(Error::IndivisibleStake);
                }
                settle(stake, gross / m)
            } else {
                settle(stake, 0)
            }
        }
        BetTarget::Chance(chance) => match rule {
            ZeroRule::Standard => {
                let ret = if chance.hits(coup.first_pocket) {
                    2 * stake
                } else {
                    0
                };
                settle(stake, ret)
            }
            ZeroRule::Partager => {
                if coup.first_pocket.value() == 0 {
                    if stake % 2 != 0 {
                        return Err(Error::IndivisibleStake);
                    }
                    settle(stake, stake / 2)
                } else if chance.hits(coup.first_pocket) {
                    settle(stake, 2 * stake)
                } else {
                    settle(stake, 0)
                }
            }
            ZeroRule::EnPrison => {
                if coup.first_pocket.value() == 0 && coup.resolver_pocket.value() == 0 {
                    return Err(Error::InvalidConfig("en prison settle needs a resolved coup"));
                }
                let ret = match coup.outcome(chance) {
                    BetOutcome::Win => 2 * stake,
                    BetOutcome::Tie => stake,
                    BetOutcome::Loss => 0,
                };
                settle(stake, ret)
            }
        },
    }
}

/// Exact distribution of the profit per unit stake of a bet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfitLaw {
    /// `(profit per unit, probability)` pairs; probabilities sum to 1.
    pub support: Vec<(Rational, Rational)>,
}

impl ProfitLaw {
    pub fn mean(&self) -> Rational {
        self.support
            .iter()
            .map(|(x, p)| x * p)
            .fold(Rational::from_integer(0), |a, b| a + b)
    }

    pub fn variance(&self) -> Rational {
        let m = self.mean();
        self.support
            .iter()
            .map(|(x, p)| (x - m) * (x - m) * p)
            .fold(Rational::from_integer(0), |a, b| a + b)
    }

    pub fn variance_f64(&self) -> f64 {
        crate::rational_to_f64(self.variance())
    }
}

/// Exact per-unit profit law of a bet, by enumeration over the wheel.
///
/// For en prison even chances the enumeration runs over first spin and,
/// on zero, the 36 equally likely nonzero resolvers.
pub fn per_unit_profit_law(target: &BetTarget, rule: ZeroRule) -> ProfitLaw {
    let one = Rational::from_integer(1);
    let p_pocket = Rational::new(1, 37);
    match target {
        BetTarget::Numbers(set) => {
            let m = set.len() as i128;
            let hit_profit = Rational::new(36 - m, m);
            ProfitLaw {
                support: alloc::vec![
                    (hit_profit, Rational::new(m, 37)),
                    (-one, Rational::new(37 - m, 37)),
                ],
            }
        }
        BetTarget::Chance(_) => match rule {
            ZeroRule::Standard => ProfitLaw {
                support: alloc::vec![
                    (one, Rational::new(18, 37)),
                    (-one, Rational::new(19, 37)),
                ],
            },
            ZeroRule::Partager => ProfitLaw {
                support: alloc::vec![
                    (one, Rational::new(18, 37)),
                    (-Rational::new(1, 2), p_pocket),
                    (-one, Rational::new(18, 37)),
                ],
            },
            ZeroRule::EnPrison => {
                // 18 of 36 resolvers hit the imprisoned chance.
                let p_tie = p_pocket * Rational::new(18, 36);
                let p_zero_loss = p_pocket * Rational::new(18, 36);
                ProfitLaw {
                    support: alloc::vec![
                        (one, Rational::new(18, 37)),
                        (Rational::from_integer(0), p_tie),
                        (-one, Rational::new(18, 37) + p_zero_loss),
                    ],
                }
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wager::rtp_ha;

    fn rat(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    fn chance_outcomes(coup: &CoupResult) -> [BetOutcome; 6] {
        let mut out = [BetOutcome::Loss; 6];
        for c in EvenChance::ALL {
            out[c.index()] = coup.outcome(c);
        }
        out
    }

    #[test]
    fn red_set_is_the_standard_one() {
        let reds: Vec<u8> = (1..=36)
            .filter(|&v| Pocket::new(v).unwrap().color() == Color::Red)
            .collect();
        assert_eq!(
            reds,
            alloc::vec![1, 3, 5, 7, 9, 12, 14, 16, 18, 19, 21, 23, 25, 27, 30, 32, 34, 36]
        );
        assert_eq!(Pocket::new(0).unwrap().color(), Color::Green);
        assert_eq!(Pocket::new(14).unwrap().color(), Color::Red);
        assert!(Pocket::new(37).is_err());
    }

    #[test]
    fn every_nonzero_pocket_hits_three_chances() {
        for v in 1..=36u8 {
            let p = Pocket::new(v).unwrap();
            let hits = EvenChance::ALL.iter().filter(|c| c.hits(p)).count();
            assert_eq!(hits, 3, "pocket {v}");
        }
        let zero = Pocket::new(0).unwrap();
        assert!(EvenChance::ALL.iter().all(|c| !c.hits(zero)));
    }

    #[test]
    fn coup_nonzero_first_spin() {
        // 14 is red, even, low.
        let mut spins = ScriptedSpins::new(&[14]).unwrap();
        let coup = resolve_coup(&mut spins).unwrap();
        assert_eq!(coup.spins_used, 1);
        assert_eq!(coup.first_pocket.value(), 14);
        assert_eq!(coup.resolver_pocket.value(), 14);
        use BetOutcome::*;
        assert_eq!(chance_outcomes(&coup), [Win, Loss, Loss, Win, Win, Loss]);
    }

    #[test]
    fn coup_zero_then_fifteen() {
        // 15 is black, odd, low: those chances tie, the rest lose.
        let mut spins = ScriptedSpins::new(&[0, 15]).unwrap();
        let coup = resolve_coup(&mut spins).unwrap();
        assert_eq!(coup.spins_used, 2);
        use BetOutcome::*;
        assert_eq!(chance_outcomes(&coup), [Loss, Tie, Tie, Loss, Tie, Loss]);
    }

    #[test]
    fn coup_consecutive_zeros() {
        // 36 is red, even, high.
        let mut spins = ScriptedSpins::new(&[0, 0, 36]).unwrap();
        let coup = resolve_coup(&mut spins).unwrap();
        assert_eq!(coup.spins_used, 3);
        assert_eq!(coup.resolver_pocket.value(), 36);
        use BetOutcome::*;
        assert_eq!(chance_outcomes(&coup), [Tie, Loss, Loss, Tie, Loss, Tie]);
    }

    #[test]
    fn script_exhaustion_is_an_error() {
        let mut spins = ScriptedSpins::new(&[0, 0]).unwrap();
        assert_eq!(resolve_coup(&mut spins), Err(Error::ScriptExhausted));
    }

    #[test]
    fn straight_up_pays_35_to_1() {
        let set = NumberSet::new(&[17]).unwrap();
        let bet = BetSpec {
            target: BetTarget::Numbers(set),
            stake: 1,
        };
        let coup = CoupResult::single_spin(Pocket::new(17).unwrap());
        let w = settle_bet(&bet, &coup, ZeroRule::Standard).unwrap();
        assert_eq!(w.ret(), 36);
        assert_eq!(w.profit(), 35);

        let miss = CoupResult::single_spin(Pocket::new(18).unwrap());
        let w = settle_bet(&bet, &miss, ZeroRule::Standard).unwrap();
        assert_eq!(w.profit(), -1);
    }

    #[test]
    fn number_bets_resolve_on_first_spin_even_in_prison_games() {
        let set = NumberSet::new(&[5, 8]).unwrap();
        let bet = BetSpec {
            target: BetTarget::Numbers(set),
            stake: 2,
        };
        let mut spins = ScriptedSpins::new(&[0, 5]).unwrap();
        let coup = resolve_coup(&mut spins).unwrap();
        // First spin was zero: the number bet loses outright.
        let w = settle_bet(&bet, &coup, ZeroRule::EnPrison).unwrap();
        assert_eq!(w.profit(), -2);
    }

    #[test]
    fn indivisible_stakes_are_rejected() {
        let set = NumberSet::new(&[1, 2, 3, 4, 5]).unwrap();
        let bet = BetSpec {
            target: BetTarget::Numbers(set),
            stake: 1,
        };
        let coup = CoupResult::single_spin(Pocket::new(3).unwrap());
        assert_eq!(
            settle_bet(&bet, &coup, ZeroRule::Standard),
            Err(Error::IndivisibleStake)
        );

        let bet = BetSpec {
            target: BetTarget::Chance(EvenChance::Red),
            stake: 1,
        };
        let zero = CoupResult::single_spin(Pocket::new(0).unwrap());
        assert_eq!(
            settle_bet(&bet, &zero, ZeroRule::Partager),
            Err(Error::IndivisibleStake)
        );
    }

    #[test]
    fn partager_returns_half_on_zero() {
        let bet = BetSpec {
            target: BetTarget::Chance(EvenChance::Red),
            stake: 10,
        };
        let zero = CoupResult::single_spin(Pocket::new(0).unwrap());
        let w = settle_bet(&bet, &zero, ZeroRule::Partager).unwrap();
        assert_eq!(w.ret(), 5);
        assert_eq!(w.profit(), -5);
    }

    #[test]
    fn en_prison_settlement_by_outcome() {
        let bet = BetSpec {
            target: BetTarget::Chance(EvenChance::Black),
            stake: 4,
        };
        let mut spins = ScriptedSpins::new(&[0, 15]).unwrap();
        let coup = resolve_coup(&mut spins).unwrap();
        // 15 is black: imprisoned black stake comes back.
        let w = settle_bet(&bet, &coup, ZeroRule::EnPrison).unwrap();
        assert_eq!(w.ret(), 4);
        assert_eq!(w.profit(), 0);

        let red = BetSpec {
            target: BetTarget::Chance(EvenChance::Red),
            stake: 4,
        };
        let w = settle_bet(&red, &coup, ZeroRule::EnPrison).unwrap();
        assert_eq!(w.profit(), -4);
    }

    #[test]
    fn ha_invariance_exact_for_all_set_sizes() {
        // Expected profit per unit is exactly -1/37 for every m in 1..=36.
        let mut numbers = Vec::new();
        for m in 1..=36u8 {
            numbers.push(m);
            let set = NumberSet::new(&numbers).unwrap();
            let law = per_unit_profit_law(&BetTarget::Numbers(set), ZeroRule::Standard);
            assert_eq!(law.mean(), rat(-1, 37), "m = {m}");
        }
    }

    #[test]
    fn even_chance_edges_by_rule() {
        let target = BetTarget::Chance(EvenChance::Odd);
        assert_eq!(
            per_unit_profit_law(&target, ZeroRule::Standard).mean(),
            rat(-1, 37)
        );
        assert_eq!(
            per_unit_profit_law(&target, ZeroRule::Partager).mean(),
            rat(-1, 74)
        );
        let prison = per_unit_profit_law(&target, ZeroRule::EnPrison);
        assert_eq!(prison.mean(), rat(-1, 74));
        // The prison law: +1 w.p. 18/37, 0 w.p. 1/74, -1 w.p. 37/74.
        assert_eq!(prison.support[0], (rat(1, 1), rat(18, 37)));
        assert_eq!(prison.support[1], (rat(0, 1), rat(1, 74)));
        assert_eq!(prison.support[2], (rat(-1, 1), rat(37, 74)));
        assert_eq!(prison.variance(), rat(5401, 5476));
        // HA follows from the law: 1/74 under either split rule.
        let ha = rtp_ha(prison.mean(), rat(1, 1)).unwrap().ha;
        assert_eq!(ha, rat(1, 74));
    }

    #[test]
    fn spin_frequencies_and_coup_length() {
        use crate::rng::Stream;
        use crate::stats::StreamingMoments;

        // 1e7 coups: zero frequency within 3 SE of 1/37 and mean coup
        // length within 3 SE of 37/36.
        const COUPS: u64 = 10_000_000;
        let mut stream = Stream::derive(7177, 0);
        let mut zero_first = 0u64;
        let mut len = StreamingMoments::new();
        for _ in 0..COUPS {
            let coup = resolve_coup(&mut stream).unwrap();
            if coup.first_pocket.value() == 0 {
                zero_first += 1;
            }
            len.update(coup.spins_used as f64);
        }
        let p = 1.0 / 37.0;
        let se = libm::sqrt(p * (1.0 - p) / COUPS as f64);
        let freq = zero_first as f64 / COUPS as f64;
        assert!((freq - p).abs() < 3.0 * se, "zero freq {freq}");

        let mean_len = 37.0 / 36.0;
        assert!(
            (len.mean() - mean_len).abs() < 3.0 * len.stderr(),
            "mean spins {} vs {}",
            len.mean(),
            mean_len
        );
    }

    #[test]
    fn en_prison_marginals_match_exact_law() {
        use crate::rng::Stream;

        // Empirical win/tie/loss frequencies of one chance over 1e7 coups,
        // each within 3 SE of the exact law.
        const COUPS: u64 = 10_000_000;
        let mut stream = Stream::derive(5309, 1);
        let mut wins = 0u64;
        let mut ties = 0u64;
        for _ in 0..COUPS {
            match resolve_coup(&mut stream).unwrap().outcome(EvenChance::Red) {
                BetOutcome::Win => wins += 1,
                BetOutcome::Tie => ties += 1,
                BetOutcome::Loss => {}
            }
        }
        let law = per_unit_profit_law(&BetTarget::Chance(EvenChance::Red), ZeroRule::EnPrison);
        let p_win = crate::rational_to_f64(law.support[0].1);
        let p_tie = crate::rational_to_f64(law.support[1].1);
        for (count, p) in [(wins, p_win), (ties, p_tie)] {
            let freq = count as f64 / COUPS as f64;
            let se = libm::sqrt(p * (1.0 - p) / COUPS as f64);
            assert!((freq - p).abs() < 3.0 * se, "freq {freq} vs {p}");
        }
    }

    #[test]
    fn joint_consistency_three_win_three_lose() {
        use crate::rng::Stream;
        let mut stream = Stream::derive(11, 3);
        for _ in 0..10_000 {
            let coup = resolve_coup(&mut stream).unwrap();
            let outcomes = chance_outcomes(&coup);
            if coup.first_pocket.value() != 0 {
                let wins = outcomes.iter().filter(|&&o| o == BetOutcome::Win).count();
                let losses = outcomes.iter().filter(|&&o| o == BetOutcome::Loss).count();
                assert_eq!((wins, losses), (3, 3));
            } else {
                let ties = outcomes.iter().filter(|&&o| o == BetOutcome::Tie).count();
                let losses = outcomes.iter().filter(|&&o| o == BetOutcome::Loss).count();
                assert_eq!((ties, losses), (3, 3));
            }
        }
    }
}
