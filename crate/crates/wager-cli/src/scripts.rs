//! Parsers for scripted-input files: W/T/L outcome symbols, roulette
//! pocket numbers, and dice totals. Parse errors carry the line number.

use wager_core::wager::BetOutcome;

use crate::{CmdError, CmdResult};

/// What a script file contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScriptKind {
    /// Win/tie/loss symbols, possibly run together ("WWLW...").
    Outcomes,
    /// Whitespace-separated pocket numbers 0..=36.
    Pockets,
    /// Whitespace-separated dice totals 2..=12.
    DiceTotals,
}

fn parse_error(line: usize, msg: impl std::fmt::Display) -> CmdError {
    CmdError::usage(format!("script parse error at line {line}: {msg}"))
}

/// Detect outcomes-vs-pockets from the first token: letters mean
/// outcome symbols, digits mean pocket numbers.
pub fn detect_kind(text: &str) -> CmdResult<ScriptKind> {
    for (idx, line) in text.lines().enumerate() {
        let line = strip_comment(line);
        if let Some(token) = line.split_whitespace().next() {
            let first = token.chars().next().expect("nonempty token");
            return if first.is_ascii_digit() {
                Ok(ScriptKind::Pockets)
            } else if matches!(first.to_ascii_uppercase(), 'W' | 'T' | 'L') {
                Ok(ScriptKind::Outcomes)
            } else {
                Err(parse_error(idx + 1, format!("unrecognized token '{token}'")))
            };
        }
    }
    Err(CmdError::usage("script is empty"))
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Parse W/T/L symbols; whitespace optional between symbols.
pub fn parse_outcomes(text: &str) -> CmdResult<Vec<BetOutcome>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        for ch in strip_comment(line).chars() {
            if ch.is_whitespace() {
                continue;
            }
            out.push(match ch.to_ascii_uppercase() {
                'W' => BetOutcome::Win,
                'T' => BetOutcome::Tie,
                'L' => BetOutcome::Loss,
                other => return Err(parse_error(idx + 1, format!("expected W, T, or L, found '{other}'"))),
            });
        }
    }
    if out.is_empty() {
        return Err(CmdError::usage("script holds no outcomes"));
    }
    Ok(out)
}

fn parse_numbers(text: &str, what: &str, max: u16) -> CmdResult<Vec<u8>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        for token in strip_comment(line).split_whitespace() {
            let value: u16 = token
                .parse()
                .map_err(|_| parse_error(idx + 1, format!("expected a {what}, found '{token}'")))?;
            if value > max {
                return Err(parse_error(idx + 1, format!("{what} {value} out of range")));
            }
            out.push(value as u8);
        }
    }
    if out.is_empty() {
        return Err(CmdError::usage(format!("script holds no {what}s")));
    }
    Ok(out)
}

/// Parse pocket numbers 0..=36.
pub fn parse_pockets(text: &str) -> CmdResult<Vec<u8>> {
    let pockets = parse_numbers(text, "pocket number", 36)?;
    Ok(pockets)
}

/// Parse dice totals 2..=12.
pub fn parse_dice_totals(text: &str) -> CmdResult<Vec<u8>> {
    let totals = parse_numbers(text, "dice total", 12)?;
    if let Some(pos) = totals.iter().position(|&t| t < 2) {
        return Err(CmdError::usage(format!(
            "dice total {} out of range (token {})",
            totals[pos],
            pos + 1
        )));
    }
    Ok(totals)
}
