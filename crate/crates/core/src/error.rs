use thiserror::Error;

use crate::expr::SyntaxError;
use crate::topology::{BaseViolation, IncomparablePair};

/// Errors raised by the set algebra, the topology checks, the construction
/// pipelines and the law lab.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed number {0:?}")]
    MalformedNumber(String),
    #[error("value {0:?} is outside [0, 1]")]
    OutOfRange(String),
    #[error("{0:?} has more than 4 fractional digits")]
    PrecisionExceeded(String),

    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("duplicate universe element {0:?}")]
    DuplicateElement(String),
    #[error("expected {expected} membership triples, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("grades at element {element:?} sum to {sum} > 1")]
    GradeSumExceeded { element: String, sum: String },
    #[error("unknown universe element {0:?}")]
    UnknownElement(String),
    #[error("no grades given for element {0:?}")]
    MissingElement(String),
    #[error("sets are defined over different universes")]
    UniverseMismatch,

    #[error("family is empty")]
    EmptyFamily,
    #[error("duplicate set name {0:?}")]
    DuplicateName(String),
    #[error("no set named {0:?}")]
    UnknownName(String),
    #[error("member {name:?} is the full or null set")]
    ContainsBoundary { name: String },

    #[error("not a base: {0}")]
    NotABase(Box<BaseViolation>),
    #[error("sub-base is not minimal: {0}")]
    NotMinimal(Box<IncomparablePair>),
    #[error("{first:?} and {second:?} are not balanced, so the chain is broken")]
    NotABalancedChain { first: String, second: String },
    #[error("family is not a topology")]
    NotATopology,

    #[error("unknown law {0:?}")]
    UnknownLaw(String),
    #[error("invalid search domain: {0}")]
    InvalidDomain(String),
    #[error("search domain needs {instances} instances, budget is {budget}")]
    DomainTooLarge { instances: u128, budget: u64 },

    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}
