use std::fmt;

use thiserror::Error;

/// A named precondition that an operation refused to proceed without.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    NotLeftSimple,
    HNotReflexiveUnitary,
    NNotUnitary,
    EmptyIntersection,
    NotUnitary(&'static str),
    NotReflexiveUnitary(&'static str),
    NotSubsemigroup(&'static str),
    ParentMismatch,
    Other(String),
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::NotLeftSimple => write!(f, "semigroup is not left simple"),
            Precondition::HNotReflexiveUnitary => {
                write!(f, "H is not a reflexive unitary subsemigroup")
            }
            Precondition::NNotUnitary => write!(f, "N is not a unitary subsemigroup"),
            Precondition::EmptyIntersection => write!(f, "intersection is empty"),
            Precondition::NotUnitary(what) => write!(f, "{what} is not unitary"),
            Precondition::NotReflexiveUnitary(what) => {
                write!(f, "{what} is not reflexive unitary")
            }
            Precondition::NotSubsemigroup(what) => write!(f, "{what} is not a subsemigroup"),
            Precondition::ParentMismatch => write!(f, "series have different parents"),
            Precondition::Other(msg) => f.write_str(msg),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("Cayley table is empty")]
    EmptyTable,
    #[error("Cayley table is not square: row {row} has {len} entries, expected {expected}")]
    NonSquareTable { row: usize, len: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabels(String),
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("closure of an empty generating set")]
    EmptyGenerator,
    #[error("subset is empty")]
    EmptySubset,
    #[error("subsets belong to semigroups of different orders ({left} vs {right})")]
    ParentMismatch { left: usize, right: usize },
    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),
    #[error("subset is not a subsemigroup: {0}")]
    NotASubsemigroup(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(Precondition),
    #[error("{theorem} check failed: {detail}")]
    TheoremCheckFailed { theorem: &'static str, detail: String },
    #[error("series term {0} is not contained in its predecessor")]
    NotDescending(usize),
    #[error("series term {0} is not a nonempty subsemigroup")]
    SeriesNotSubsemigroup(usize),
    #[error("series term {index} is not reflexive unitary in term {prev}: {witness}", prev = index - 1)]
    NotReflexiveUnitaryInPredecessor { index: usize, witness: String },
    #[error("series must start with the full semigroup")]
    SeriesMustStartAtParent,
    #[error("size must be positive")]
    ZeroSize,
    #[error("not a group")]
    NotAGroup,
    #[error("construction check failed: {0}")]
    ConstructionCheckFailed(String),
    #[error("unknown instance name {0:?}")]
    UnknownInstance(String),
}

impl Error {
    pub(crate) fn theorem(theorem: &'static str, detail: impl Into<String>) -> Self {
        Error::TheoremCheckFailed { theorem, detail: detail.into() }
    }

    pub(crate) fn precondition(p: Precondition) -> Self {
        Error::PreconditionViolated(p)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
