use alloc::string::String;
use alloc::vec::Vec;

use crate::gf::Elem;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {q} exceeds the supported maximum {max}")]
    FieldTooLarge { q: u32, max: u32 },
    #[error("modulus {modulus:?} is not a primitive irreducible polynomial over GF({p})")]
    BadModulus { p: u32, modulus: Vec<u8> },
    #[error("element {value} does not belong to GF({q})")]
    ForeignElement { value: u32, q: u32 },
    #[error("division by zero in GF({0})")]
    ZeroInverse(u32),
    #[error("the zero vector has no projective point")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("objects live in different spaces or fields")]
    SpaceMismatch,
    #[error("flat of dimension {dim} is not a hyperplane of PG({n},q)")]
    NotHyperplane { dim: isize, n: usize },
    #[error("points coincide")]
    CoincidentPoints,
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("generator matrix has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("puncturing drops the rank; message {witness:?} becomes the zero word")]
    RankDrop { witness: Vec<Elem> },
    #[error("q^k = {size} exceeds the enumeration guard {guard}")]
    EnumerationGuard { size: u64, guard: u64 },
    #[error("code is degenerate: coordinate {0} is identically zero")]
    Degenerate(usize),
    #[error("points of the system lie in a common hyperplane")]
    NotSpanning,
    #[error("vector is not a codeword of the code")]
    NotACodeword,
    #[error("the zero codeword has no minimality")]
    ZeroCodeword,
    #[error("point set is not cutting")]
    NotCutting,
    #[error("code is not minimal")]
    NotMinimal,
    #[error("invalid construction parameter: {0}")]
    InvalidParameter(String),
    #[error("construction check failed for {what}: predicted {predicted}, measured {measured}")]
    PredictionMismatch {
        what: &'static str,
        predicted: String,
        measured: String,
    },
    #[error("space PG({n},{q}) has {points} points, the search engine handles at most 64")]
    SpaceTooLarge { n: usize, q: u32, points: u64 },
    #[error("equivalence test refused: {0}")]
    EquivalenceLimit(String),
    #[error("no cutting set of size at most {0} found")]
    NoneFound(usize),
    #[error("node budget exhausted before the search completed")]
    BudgetExhausted,
}
