use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("code entry c_{index} = {value} exceeds bound {bound}")]
    CodeOutOfRange { index: usize, value: u32, bound: u32 },
    #[error("length {length} does not equal n - 1 = {expected}")]
    LengthMismatch { length: usize, expected: usize },
    #[error("{0} is not indecomposable")]
    Decomposable(String),
    #[error("{0} is not vexillary")]
    NotVexillary(String),
    #[error("{0} is not a Coxeter element")]
    NotCoxeter(String),
    #[error("{0} is not Grassmannian")]
    NotGrassmannian(String),
    #[error("no special-case formula applies to {0}")]
    NotApplicable(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("n = {n} is outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
