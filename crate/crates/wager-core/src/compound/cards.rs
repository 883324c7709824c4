//! Cards and three-card hand ranking.
//!
//! Hands rank straight flush, three of a kind, straight, flush, one
//! pair, no pair; within a category ties break on ordered ranks. Aces
//! play high except in A-2-3, the lowest straight (A-K-Q is the
//! highest). A hand's standing is packed into a single integer so the
//! full 22,100-hand order is a plain numeric comparison.

use crate::{Error, Result};

/// One of the 52 cards, indexed `(rank - 2) * 4 + suit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Card(u8);

impl Card {
    pub fn new(index: u8) -> Result<Self> {
        if index >= 52 {
            return Err(Error::InvalidCard);
        }
        Ok(Card(index))
    }

    /// `rank` in 2..=14 (ace = 14), `suit` in 0..=3.
    pub fn from_rank_suit(rank: u8, suit: u8) -> Result<Self> {
        if !(2..=14).contains(&rank) || suit > 3 {
            return Err(Error::InvalidCard);
        }
        Ok(Card((rank - 2) * 4 + suit))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn rank(self) -> u8 {
        self.0 / 4 + 2
    }

    pub fn suit(self) -> u8 {
        self.0 % 4
    }
}

/// Hand categories, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum HandCategory {
    HighCard = 0,
    Pair = 1,
    Flush = 2,
    Straight = 3,
    ThreeOfAKind = 4,
    StraightFlush = 5,
}

impl HandCategory {
    pub const ALL: [HandCategory; 6] = [
        HandCategory::HighCard,
        HandCategory::Pair,
        HandCategory::Flush,
        HandCategory::Straight,
        HandCategory::ThreeOfAKind,
        HandCategory::StraightFlush,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HandCategory::HighCard => "high card",
            HandCategory::Pair => "pair",
            HandCategory::Flush => "flush",
            HandCategory::Straight => "straight",
            HandCategory::ThreeOfAKind => "three of a kind",
            HandCategory::StraightFlush => "straight flush",
        }
    }
}

/// Total standing of a three-card hand: category then tiebreak ranks,
/// packed most-significant-first into four hex digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HandValue(u16);

impl HandValue {
    pub fn category(self) -> HandCategory {
        match self.0 >> 12 {
            0 => HandCategory::HighCard,
            1 => HandCategory::Pair,
            2 => HandCategory::Flush,
            3 => HandCategory::Straight,
            4 => HandCategory::ThreeOfAKind,
            _ => HandCategory::StraightFlush,
        }
    }

    pub fn raw(self) -> u16 {
        self.0
    }

    /// Rebuild from a raw value previously produced by [`rank_hand`].
    pub(crate) fn from_raw(raw: u16) -> Self {
        HandValue(raw)
    }
}

fn pack(category: HandCategory, a: u8, b: u8, c: u8) -> HandValue {
    HandValue(((category as u16) << 12) | ((a as u16) << 8) | ((b as u16) << 4) | c as u16)
}

/// Rank a three-card hand. The cards must be distinct.
pub fn rank_hand(cards: [Card; 3]) -> Result<HandValue> {
    if cards[0] == cards[1] || cards[0] == cards[2] || cards[1] == cards[2] {
        return Err(Error::DuplicateCard);
    }
    let mut ranks = [cards[0].rank(), cards[1].rank(), cards[2].rank()];
    ranks.sort_unstable_by(|a, b| b.cmp(a));
    let [hi, mid, lo] = ranks;

    let flush = cards[0].suit() == cards[1].suit() && cards[1].suit() == cards[2].suit();
    // A-2-3 plays as the three-high straight.
    let wheel = ranks == [14, 3, 2];
    let straight = wheel || (hi == mid + 1 && mid == lo + 1);
    let straight_high = if wheel { 3 } else { hi };

    let value = if straight && flush {
        pack(HandCategory::StraightFlush, straight_high, 0, 0)
    } else if hi == mid && mid == lo {
        pack(HandCategory::ThreeOfAKind, hi, 0, 0)
    } else if straight {
        pack(HandCategory::Straight, straight_high, 0, 0)
    } else if flush {
        pack(HandCategory::Flush, hi, mid, lo)
    } else if hi == mid {
        pack(HandCategory::Pair, hi, lo, 0)
    } else if mid == lo {
        pack(HandCategory::Pair, mid, hi, 0)
    } else {
        pack(HandCategory::HighCard, hi, mid, lo)
    };
    Ok(value)
}

/// The value of an unsuited (rank-only) hand, for strategy thresholds.
pub fn rank_pattern(ranks: [u8; 3]) -> Result<HandValue> {
    let cards = [
        Card::from_rank_suit(ranks[0], 0)?,
        Card::from_rank_suit(ranks[1], 1)?,
        Card::from_rank_suit(ranks[2], 2)?,
    ];
    rank_hand(cards)
}
