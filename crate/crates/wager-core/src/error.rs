use core::fmt;

/// Domain errors shared across the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A money amount that must be nonnegative was negative.
    NegativeAmount,
    /// A zero bet came with a nonzero return; a wager with no stake
    /// returns nothing.
    ReturnWithoutBet,
    /// RTP/HA are defined only for a positive expected bet.
    NonPositiveExpectedBet,
    /// An accumulator would overflow its integer width.
    Overflow,
    /// `next_below` requires a nonzero modulus.
    ZeroModulus,
    /// Bound check ran out of trace: nothing after the burn-in.
    EmptyTail,
    /// A ratio was requested before any money was bet.
    NoBetsRecorded,
    /// Pocket number outside 0..=36.
    InvalidPocket(u8),
    /// Dice total outside 2..=12.
    InvalidDiceTotal(u8),
    /// A number-set bet must cover 1..=36 distinct nonzero pockets.
    InvalidNumberSet,
    /// The stake cannot be settled in whole money units
    /// (e.g. 36*stake not divisible by the numbers covered, or an odd
    /// stake under the partager rule).
    IndivisibleStake,
    /// A scripted spin/roll source was exhausted mid-game.
    ScriptExhausted,
    /// Duplicate card in a hand.
    DuplicateCard,
    /// Card index outside 0..=51 or rank/suit out of range.
    InvalidCard,
    /// Invalid configuration; the message names the offending field.
    InvalidConfig(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeAmount => write!(f, "money amount must be nonnegative"),
            Error::ReturnWithoutBet => write!(f, "zero bet cannot have a nonzero return"),
            Error::NonPositiveExpectedBet => {
                write!(f, "RTP/HA require a positive expected bet")
            }
            Error::Overflow => write!(f, "accumulator overflow"),
            Error::ZeroModulus => write!(f, "modulus must be at least 1"),
            Error::EmptyTail => write!(f, "trace has no entries after burn-in"),
            Error::NoBetsRecorded => write!(f, "ratio undefined: no amount bet yet"),
            Error::InvalidPocket(v) => write!(f, "pocket {} outside 0..=36", v),
            Error::InvalidDiceTotal(v) => write!(f, "dice total {} outside 2..=12", v),
            Error::InvalidNumberSet => {
                write!(f, "number set must hold 1..=36 distinct nonzero pockets")
            }
            Error::IndivisibleStake => write!(f, "stake not settleable in whole units"),
            Error::ScriptExhausted => write!(f, "scripted outcome source exhausted"),
            Error::DuplicateCard => write!(f, "duplicate card in hand"),
            Error::InvalidCard => write!(f, "card outside the 52-card deck"),
            Error::InvalidConfig(what) => write!(f, "invalid config: {}", what),
        }
    }
}

impl core::error::Error for Error {}
