//! Failures that end a command, each carrying its exit code.

use std::fmt;
use std::process::ExitCode;

use twisted_hodge::{AInfinityError, HochschildError, HodgeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input the argument parser could not catch.
    Usage(String),
    /// A mathematical hypothesis of the requested computation fails.
    Precondition(String),
    /// Two independent computations disagree.
    Internal(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Internal(_) => 4,
            CliError::Budget(_) => 5,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition failed: {m}"),
            CliError::Internal(m) => write!(f, "internal inconsistency: {m}"),
            CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<HodgeError> for CliError {
    fn from(e: HodgeError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<HochschildError> for CliError {
    fn from(e: HochschildError) -> Self {
        match e {
            HochschildError::PreconditionViolation { .. } | HochschildError::InvalidArgument(_) => {
                CliError::Precondition(e.to_string())
            }
            HochschildError::ExactnessViolation { .. } | HochschildError::UnclosedSequence { .. } => {
                CliError::Internal(e.to_string())
            }
            HochschildError::Hodge(h) => h.into(),
        }
    }
}

impl From<AInfinityError> for CliError {
    fn from(e: AInfinityError) -> Self {
        match e {
            AInfinityError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            AInfinityError::Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_documented_codes() {
        let pre: CliError = HochschildError::PreconditionViolation { t_minus_p: 0, d: 7 }.into();
        assert_eq!(pre.exit_code(), ExitCode::from(3));
        let budget: CliError = AInfinityError::BudgetExceeded { needed: 10, limit: 1 }.into();
        assert_eq!(budget.exit_code(), ExitCode::from(5));
        let bug: CliError = HochschildError::UnclosedSequence { rank: 1.into() }.into();
        assert_eq!(bug.exit_code(), ExitCode::from(4));
        let parse: CliError = AInfinityError::Parse { line: 3, message: "x".into() }.into();
        assert_eq!(parse.exit_code(), ExitCode::from(2));
        assert!(pre.to_string().contains("t - p = 0"));
    }
}
