//! Batch front end for the wager-process toolkit: experiment commands,
//! JSON/CSV output formats, scripted-input parsing, and the parallel
//! replication runner.

pub mod commands;
pub mod formats;
pub mod parallel;
pub mod scripts;

use std::fmt;

/// Command failure, split by exit code: usage errors exit 2, runtime
/// errors exit 3.
#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Runtime(String),
}

impl CmdError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CmdError::Usage(msg.into())
    }

    pub fn runtime(msg: impl Into<String>) -> Self {
        CmdError::Runtime(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CmdError::Usage(_) => 2,
            CmdError::Runtime(_) => 3,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(msg) => write!(f, "{msg}"),
            CmdError::Runtime(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CmdError {}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Runtime(e.to_string())
    }
}

pub type CmdResult<T> = Result<T, CmdError>;

/// Core domain errors at command setup are usage errors; anything that
/// fires mid-run is a runtime error.
pub fn usage_err(e: wager_core::Error) -> CmdError {
    CmdError::Usage(e.to_string())
}

pub fn runtime_err(e: wager_core::Error) -> CmdError {
    CmdError::Runtime(e.to_string())
}
