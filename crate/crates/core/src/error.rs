use thiserror::Error;

use crate::presentation::Overlap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0} is not prime")]
    NotPrime(i64),

    #[error("modulus {0} must be an odd prime")]
    EvenModulus(i64),

    #[error("generator index {index} out of range 1..={gens}")]
    GeneratorOutOfRange { index: usize, gens: usize },

    #[error("tail index {tail} not greater than {head}: tail must use larger indices")]
    TailOrdering { head: usize, tail: usize },

    #[error("duplicate relation `{0}`")]
    DuplicateRelation(String),

    #[error("inconsistent presentation: {} failing overlap(s), first {}", .0.len(), .0[0])]
    Inconsistent(Vec<Overlap>),

    #[error("element has {got} exponents, group has {expected} generators")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("subgroup is not normal: conjugate {conjugate:?} of {element:?} lies outside it")]
    NotNormal {
        element: Vec<u32>,
        conjugate: Vec<u32>,
    },

    #[error("group of order p^{log_order} with class {class} is not of maximal class")]
    NotMaximalClass { log_order: u32, class: usize },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogId(String),

    #[error("prime {prime} is not admissible for `{id}` (requires {constraint})")]
    InadmissiblePrime {
        id: String,
        prime: u32,
        constraint: String,
    },

    #[error("group is too large to enumerate: p^{0} elements")]
    TooLarge(u32),

    #[error("invariant profile cannot occur: {0}")]
    ImpossibleProfile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
