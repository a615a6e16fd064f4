use thiserror::Error;

/// Errors produced while building fields, codes and reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {order} exceeds the size guard {limit}")]
    FieldTooLarge { order: u64, limit: u64 },
    #[error("element {value} is not in GF({q})")]
    InvalidElement { value: u64, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("subgroup order {e} does not divide q - 1 = {group_order}")]
    SubgroupOrder { e: u32, group_order: u32 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("ambient dimension k = {0} is too small (need k >= 2)")]
    DimensionTooSmall(usize),
    #[error("subspace dimensions must be ascending: {0:?}")]
    UnsortedDims(Vec<usize>),
    #[error("subspace dimension {u} out of range: need 1 <= u_i < k = {k}")]
    DimOutOfRange { u: usize, k: usize },
    #[error(
        "condition 2 violated: sum(q^u_i - 1) = {deleted} must be below q^k - q^(k-1) = {limit}"
    )]
    DeletionTooLarge { deleted: u64, limit: u64 },
    #[error("condition 1 violated: subspaces {0} and {1} intersect nontrivially")]
    SubspacesIntersect(usize, usize),
    #[error("supplied {found} bases for {expected} subspace dimensions")]
    BasisCount { expected: usize, found: usize },
    #[error("basis {index} has dimension {found}, expected {expected}")]
    BasisDimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error(
        "cannot place a subspace of dimension {dim}: coordinate blocks exhausted; supply explicit bases"
    )]
    SelectionFailed { dim: usize },
    #[error("affine construction requires e = q - 1 = {expected}, got e = {found}")]
    AffineRequiresFullGroup { expected: u32, found: u32 },

    #[error("a code needs at least one generator row")]
    EmptyCode,
    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("position {position} out of range for length {n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("copies must be at least 1")]
    ZeroCopies,
    #[error("codimension {codim} invalid for dimension {k}")]
    Codimension { codim: usize, k: usize },
    #[error("enumeration of {size} vectors exceeds the guard {limit}")]
    EnumerationGuard { size: u64, limit: u64 },

    #[error("line count h = {h} out of range: need {k} <= h < {max}")]
    LineCount { h: usize, k: usize, max: u64 },
    #[error("line {0} is the zero vector")]
    ZeroLine(usize),
    #[error("lines {0} and {1} coincide")]
    DuplicateLine(usize, usize),
    #[error("lines do not span the whole space (rank {rank} < {k})")]
    LinesDoNotSpan { rank: usize, k: usize },

    #[error("no [n, k, d] code exists: n = {n} is below the Griesmer sum {bound}")]
    GriesmerViolation { n: u64, bound: u64 },
    #[error("family constraint violated: {0}")]
    FamilyConstraint(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
