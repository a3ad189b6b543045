use thiserror::Error;

use crate::graph::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("invalid X-graph: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("gauss code: {0}")]
    GaussCode(String),

    #[error("walk: {0}")]
    Walk(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("instance too large: {count} vertices exceeds the cap of {cap}")]
    CapExceeded { count: usize, cap: usize },

    /// A proven invariant did not hold. Never caused by valid input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            message: message.into(),
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
