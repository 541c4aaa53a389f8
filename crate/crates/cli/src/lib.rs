//! Library surface of the `qalg` command line tool, exposed so that the
//! commands can be exercised directly by integration tests.

pub mod autospec;
pub mod commands;
pub mod format;
pub mod report;
pub mod selftest;

use qalg_core::Error as CoreError;

/// Command level error with the exit code it maps to: 2 for parse errors,
/// 3 for precondition violations, 4 for internal inconsistencies.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) | CliError::Internal(m) => m,
        }
    }

    /// File-loading context: every core error counts as a parse problem.
    pub fn parse(e: CoreError) -> CliError {
        CliError::Parse(e.to_string())
    }

    /// Computation context: internal inconsistencies keep their own exit
    /// code, everything else is a precondition violation.
    pub fn compute(e: CoreError) -> CliError {
        match e {
            CoreError::InternalInconsistency(_)
            | CoreError::VerificationFailed(_)
            | CoreError::LiftDivergence => CliError::Internal(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message())
    }
}

impl std::error::Error for CliError {}

/// Common options shared by all commands.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub seed: u64,
    pub bound: u64,
    pub attempts: u32,
    pub json: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, bound: 64, attempts: 64, json: false }
    }
}

impl RunOptions {
    pub fn fg(&self) -> qalg_core::FgOptions {
        qalg_core::FgOptions { bound: self.bound, seed: self.seed, attempts: self.attempts }
    }

    pub fn search(&self) -> qalg_core::frobenius::SearchOptions {
        qalg_core::frobenius::SearchOptions { seed: self.seed, attempts: self.attempts }
    }
}
