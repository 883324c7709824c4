//! Exact Three Card Poker ante-play analysis.
//!
//! The ante-play wager: ante one unit, see three cards, fold (losing the
//! ante) or play (matching the ante). The dealer qualifies with queen
//! high or better; against a non-qualifying dealer the ante is paid even
//! money and the play wager pushes. Against a qualifying dealer both
//! wagers win, lose, or push by hand comparison. The ante bonus — 1 for
//! a straight, 4 for three of a kind, 5 for a straight flush — is paid
//! regardless of the play decision, the dealer's hand, and the outcome.
//!
//! `tcp_exact` enumerates every gambler hand against every dealer hand
//! (22,100 x 18,424 = 407,170,400 ordered pairs) with integer
//! accumulators, so the resulting expectations are exact rationals. The
//! suit-reduced route enumerates one gambler hand per suit-equivalence
//! orbit and weights by orbit size; it must (and does) reproduce the
//! full enumeration exactly.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::cards::{rank_hand, rank_pattern, Card, HandCategory, HandValue};
use crate::wager::rtp_ha;
use crate::{Rational, Result};

const HANDS: u32 = 22_100; // C(52,3)
const DEALER_HANDS: u32 = 18_424; // C(49,3)

/// Play/fold rule as a function of the gambler's hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Play with unsuited Q-6-4 or better.
    Optimal,
    AlwaysPlay,
    AlwaysFold,
    /// Play with any hand at or above the threshold.
    Threshold(HandValue),
}

impl Strategy {
    pub fn plays(&self, hand: HandValue) -> bool {
        match *self {
            Strategy::Optimal => hand >= optimal_threshold(),
            Strategy::AlwaysPlay => true,
            Strategy::AlwaysFold => false,
            Strategy::Threshold(t) => hand >= t,
        }
    }
}

/// The optimal play threshold: unsuited Q-6-4.
pub fn optimal_threshold() -> HandValue {
    rank_pattern([12, 6, 4]).expect("fixed ranks")
}

/// Dealer qualification threshold: queen high exactly qualifies.
pub fn qualify_threshold() -> HandValue {
    rank_pattern([12, 3, 2]).expect("fixed ranks")
}

/// Ante bonus paid on the gambler's hand, no matter what else happens.
fn ante_bonus(v: HandValue) -> i64 {
    match v.category() {
        HandCategory::Straight => 1,
        HandCategory::ThreeOfAKind => 4,
        HandCategory::StraightFlush => 5,
        _ => 0,
    }
}

/// Which enumeration route to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    /// All 407,170,400 gambler/dealer pairs.
    Full,
    /// One gambler hand per suit-permutation orbit, weighted by orbit size.
    SuitReduced,
}

/// Exact results of the enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TcpAnalysis {
    /// Expected total bet per unit ante.
    pub e_bet: Rational,
    /// Expected profit per unit ante.
    pub e_profit: Rational,
    /// House advantage on the total-bet convention.
    pub ha_total: Rational,
    /// House advantage on the base-bet convention.
    pub ha_base: Rational,
    /// Probability of folding.
    pub fold_fraction: Rational,
    /// Folding hands out of 22,100.
    pub fold_hands: u32,
    /// Raw profit numerator over all gambler/dealer pairs.
    pub profit_sum: i64,
}

/// Value of every three-card combination, indexed `(a*52 + b)*52 + c`
/// for card indices `a < b < c`.
fn value_cube() -> Vec<u16> {
    let mut cube = alloc::vec![0u16; 52 * 52 * 52];
    for a in 0..52u8 {
        for b in (a + 1)..52 {
            for c in (b + 1)..52 {
                let v = rank_hand([
                    Card::new(a).expect("deck index"),
                    Card::new(b).expect("deck index"),
                    Card::new(c).expect("deck index"),
                ])
                .expect("distinct by construction");
                cube[cube_index(a, b, c)] = v.raw();
            }
        }
    }
    cube
}

#[inline]
fn cube_index(a: u8, b: u8, c: u8) -> usize {
    (a as usize * 52 + b as usize) * 52 + c as usize
}

/// Net ante-play profit of one playing gambler hand summed over every
/// dealer hand from the remaining 49 cards (ante bonus excluded).
fn play_profit_vs_all_dealers(cube: &[u16], gambler: [u8; 3], gambler_value: u16) -> i64 {
    let qualify = qualify_threshold().raw();
    let mut rest: [u8; 49] = [0; 49];
    let mut k = 0;
    for card in 0..52u8 {
        if card != gambler[0] && card != gambler[1] && card != gambler[2] {
            rest[k] = card;
            k += 1;
        }
    }
    let mut sum = 0i64;
    for i in 0..49 {
        for j in (i + 1)..49 {
            for l in (j + 1)..49 {
                let dealer = cube[cube_index(rest[i], rest[j], rest[l])];
                sum += if dealer < qualify {
                    // Ante paid even money, play pushed.
                    1
                } else if gambler_value > dealer {
                    2
                } else if gambler_value < dealer {
                    -2
                } else {
                    0
                };
            }
        }
    }
    sum
}

/// Group the 22,100 gambler hands into suit-permutation orbits:
/// representative (the lexicographically least image) and orbit size.
fn suit_orbits() -> BTreeMap<[u8; 3], u32> {
    // All 24 permutations of the four suits.
    let mut perms: Vec<[u8; 4]> = Vec::with_capacity(24);
    let mut suits = [0u8, 1, 2, 3];
    heap_permutations(&mut suits, 4, &mut perms);

    let mut orbits: BTreeMap<[u8; 3], u32> = BTreeMap::new();
    for a in 0..52u8 {
        for b in (a + 1)..52 {
            for c in (b + 1)..52 {
                let mut repr = [a, b, c];
                for perm in &perms {
                    let mut image = [map_suit(a, perm), map_suit(b, perm), map_suit(c, perm)];
                    image.sort_unstable();
                    if image < repr {
                        repr = image;
                    }
                }
                *orbits.entry(repr).or_insert(0) += 1;
            }
        }
    }
    orbits
}

fn map_suit(card: u8, perm: &[u8; 4]) -> u8 {
    (card / 4) * 4 + perm[(card % 4) as usize]
}

fn heap_permutations(items: &mut [u8; 4], k: usize, out: &mut Vec<[u8; 4]>) {
    if k == 1 {
        out.push(*items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Enumerate the ante-play wager exactly under `strategy`.
pub fn tcp_exact(strategy: Strategy, route: Enumeration) -> Result<TcpAnalysis> {
    let cube = value_cube();
    let mut fold_hands = 0u32;
    let mut profit_sum = 0i64;

    let mut eval_hand = |hand: [u8; 3], weight: u32| {
        let value = cube[cube_index(hand[0], hand[1], hand[2])];
        let bonus = ante_bonus(HandValue::from_raw(value));
        let per_pair_bonus = bonus * DEALER_HANDS as i64;
        if strategy.plays(HandValue::from_raw(value)) {
            let net = play_profit_vs_all_dealers(&cube, hand, value);
            profit_sum += weight as i64 * (net + per_pair_bonus);
        } else {
            fold_hands += weight;
            profit_sum += weight as i64 * (per_pair_bonus - DEALER_HANDS as i64);
        }
    };

    match route {
        Enumeration::Full => {
            for a in 0..52u8 {
                for b in (a + 1)..52 {
                    for c in (b + 1)..52 {
                        eval_hand([a, b, c], 1);
                    }
                }
            }
        }
        Enumeration::SuitReduced => {
            let orbits = suit_orbits();
            debug_assert_eq!(orbits.values().sum::<u32>(), HANDS);
            for (repr, weight) in orbits {
                eval_hand(repr, weight);
            }
        }
    }

    let pairs = HANDS as i128 * DEALER_HANDS as i128;
    let e_profit = Rational::new(profit_sum as i128, pairs);
    let play_hands = HANDS - fold_hands;
    let e_bet = Rational::new(fold_hands as i128 + 2 * play_hands as i128, HANDS as i128);
    let out = rtp_ha(e_profit, e_bet)?;
    Ok(TcpAnalysis {
        e_bet,
        e_profit,
        ha_total: out.ha,
        ha_base: -e_profit,
        fold_fraction: Rational::new(fold_hands as i128, HANDS as i128),
        fold_hands,
        profit_sum,
    })
}

/// Census of hand categories over all 22,100 hands.
pub fn category_census() -> [u32; 6] {
    let mut counts = [0u32; 6];
    for a in 0..52u8 {
        for b in (a + 1)..52 {
            for c in (b + 1)..52 {
                let v = rank_hand([
                    Card::new(a).expect("deck index"),
                    Card::new(b).expect("deck index"),
                    Card::new(c).expect("deck index"),
                ])
                .expect("distinct");
                counts[v.category() as usize] += 1;
            }
        }
    }
    counts
}
