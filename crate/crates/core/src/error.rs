use thiserror::Error;

use crate::problem::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid coloring problem: {}", render_violations(.0))]
    InvalidProblem(Vec<Violation>),

    #[error("invalid {kind}: {reason}")]
    InvalidStructure { kind: &'static str, reason: String },

    #[error("non-disjoint ground sets: label {0:?} appears in both factors")]
    NonDisjoint(String),

    #[error("cannot combine a {0} with a {1}")]
    MixedVariants(&'static str, &'static str),

    #[error("relabeling is not a bijection: {0}")]
    NonBijective(String),

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate x-value {0} in interpolation points")]
    DuplicateAbscissa(String),

    #[error("interpolation needs at least one point")]
    NoPoints,

    #[error("guard exceeded: {0}")]
    Guard(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn render_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    pub(crate) fn structure(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidStructure {
            kind,
            reason: reason.into(),
        }
    }
}
