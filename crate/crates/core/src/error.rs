use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which clause of the "normal to" relation `B ◁ A` failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalToFailure {
    /// (i) `B ⊆ A` does not hold.
    NotContained,
    /// (ii) `A` is not conormal.
    NotConormal,
    /// (iii) the pullback of `B` along the embedding of `A` is not normal.
    PullbackNotNormal,
}

impl fmt::Display for NormalToFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalToFailure::NotContained => write!(f, "clause (i): denominator is not contained in numerator"),
            NormalToFailure::NotConormal => write!(f, "clause (ii): numerator is not conormal"),
            NormalToFailure::PullbackNotNormal => {
                write!(f, "clause (iii): pullback of denominator is not normal in numerator")
            }
        }
    }
}

/// The first group law a candidate Cayley table violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableViolation {
    Empty,
    NotSquare { row: usize },
    OutOfRange { row: usize, col: usize, value: usize },
    NoIdentity,
    IdentityNotFirst { found: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    NoInverse { element: usize },
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableViolation::Empty => write!(f, "table is empty"),
            TableViolation::NotSquare { row } => write!(f, "row {row} has the wrong length"),
            TableViolation::OutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is out of range")
            }
            TableViolation::NoIdentity => write!(f, "no two-sided identity"),
            TableViolation::IdentityNotFirst { found } => {
                write!(f, "identity is element {found}, expected element 0")
            }
            TableViolation::NotAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
            TableViolation::NoInverse { element } => write!(f, "element {element} has no inverse"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: operands belong to different structures")]
    ParentMismatch { op: &'static str },
    #[error("cannot compose: target of the first map is not the source of the second")]
    NotComposable,
    #[error("endpoint mismatch: {0}")]
    Endpoint(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not conormal")]
    NotConormal,
    #[error("not normal to: {0}")]
    NotNormalTo(NormalToFailure),
    #[error("morphism does not factor through the embedding: its image is not contained")]
    NoLift,
    #[error("morphism does not factor through the projection: kernel condition fails")]
    NoDescent,
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(TableViolation),
    #[error("not a homomorphism: image of {x}*{y} differs from product of images")]
    NotHomomorphism { x: usize, y: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Invalid(String),
}
