use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors surfaced by the toolkit. Variants are named after the violated
/// precondition so callers (and the CLI) can report them mechanically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("0^0 is undefined; callers must special-case it")]
    Undefined,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("interpolation nodes repeat")]
    DuplicateNodes,
    #[error("value table is not total on the field")]
    DomainNotTotal,
    #[error("invalid point map: {0}")]
    InvalidPointMap(String),
    #[error("map is not a permutation")]
    NotPermutation,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("exhaustive oracle refused: domain size {size} exceeds cap {cap}")]
    OracleTooLarge { size: u64, cap: u64 },
    #[error("diagram does not commute (witness element rank {witness})")]
    SquareNotCommuting { witness: u64 },
    #[error("map is not bijective")]
    NotBijective,
    #[error("not a permutation of the declared domain")]
    NotPP,
    #[error("bad index parameters: r must be >= 1 and s must divide q-1")]
    BadIndex,
    #[error("gcd(r, q-1) > 1: the single-exponent inverse recipe does not apply")]
    GcdHypothesisFailed,
    #[error("division by zero while assembling an inverse (form invariant violated)")]
    DivisionByZero,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("linearized map is singular")]
    Singular,
    #[error("associated-polynomial coefficients are not in the base field")]
    CoefficientsNotInBaseField,
    #[error("branch images are not pairwise disjoint")]
    BranchesNotDisjoint,
    #[error("branch map is not injective on its block")]
    NotInjectiveOnBranch,
    #[error("field order must be odd")]
    EvenCharacteristic,
    #[error("coset index out of range")]
    IndexOutOfRange,
}
