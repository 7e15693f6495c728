use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("negative shift power {0}")]
    NegativeShift(i64),

    #[error("polynomial of degree {degree} does not fit in degree bound {bound}")]
    DegreeExceeds { degree: usize, bound: usize },

    #[error("{op} requires constant term {expected}")]
    ConstantTerm {
        op: &'static str,
        expected: &'static str,
    },

    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series coefficient of u^{power} is not divisible by t^{shift}")]
    NotDivisible { power: usize, shift: usize },

    #[error("invalid matroid specification: {0}")]
    InvalidSpec(String),

    #[error("bases violate the exchange axiom: {0}")]
    BasisExchange(String),

    #[error("ground set of {0} elements exceeds the supported maximum of 128")]
    GroundTooLarge(usize),

    #[error("lattice of flats exceeds the cap of {cap} flats")]
    TooManyFlats { cap: usize },

    #[error("flat id {0} is out of range")]
    InvalidFlat(usize),

    #[error("coefficient index must be nonnegative, got {0}")]
    NegativeIndex(i64),

    #[error("rank {d} exceeds the table range {d_max}")]
    RangeExceeded { d: usize, d_max: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("zero polynomial has no square-free part")]
    ZeroPolynomial,

    #[error("polynomial vanishes at t = 0")]
    ZeroAtOrigin,

    #[error("polynomial of degree {degree} has only {real} real roots")]
    NonRealRoots { real: usize, degree: usize },

    #[error("interlacing needs deg f = deg g + 1, got {f} and {g}")]
    DegreeMismatch { f: usize, g: usize },

    #[error("root separation failed after {0} bisections")]
    RefinementCap(usize),

    #[error("group element does not preserve flats: {0}")]
    NotFlatPreserving(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group closure exceeds {0} elements")]
    GroupTooLarge(usize),

    #[error("symmetric function degree {degree} exceeds the supported bound {bound}")]
    SymDegree { degree: usize, bound: usize },

    #[error("negative part {0} in h-product")]
    NegativePart(i64),

    #[error("homogeneous degree mismatch: expected {expected}, found {found}")]
    HomogeneousDegree { expected: usize, found: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
