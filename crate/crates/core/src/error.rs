use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mismatched moduli: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),
    #[error("{value} is not a quadratic residue mod {p}")]
    NonResidue { value: u64, p: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("characteristic {p} must exceed n = {n}")]
    UnsupportedCharacteristic { p: u64, n: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("n = {n} outside supported range {min}..={max}")]
    DegreeOutOfRange { n: usize, min: usize, max: usize },
    #[error("cycle type {0} does not split in A_n")]
    NonSplitting(String),
    #[error("cell ({i}, {j}) lies outside the diagram of {shape}")]
    CellOutsideDiagram { i: usize, j: usize, shape: String },
    #[error("group of order {0} exceeds the subgroup enumeration limit of 120")]
    GroupTooLarge(usize),
    #[error("group algebra elements live in different ambients")]
    AmbientMismatch,
    #[error("element has a nonzero coefficient on the odd permutation {0}")]
    NotInAlternatingSubalgebra(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("structural check failed: {0}")]
    Structural(String),
    #[error("character values of {0} do not lie in the prime field")]
    OutsidePrimeField(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("codeword budget exceeded: {needed} > {threshold}")]
    BudgetExceeded { needed: u128, threshold: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
