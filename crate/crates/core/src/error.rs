use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("a braid group needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("cannot parse braid word: {0}")]
    Parse(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("half twist requested on a {0}-curve; half twists exist only for 2-curves")]
    NotTwoCurve(usize),

    #[error("support mismatch between framed braids")]
    SupportMismatch,

    #[error("hole {0} is not in the support")]
    NotInSupport(usize),

    #[error("braid permutation does not preserve the support set")]
    SupportNotPreserved,

    #[error("invalid cluster: {0}")]
    InvalidCluster(String),

    #[error("vertex cap of {cap} exceeded while building a ball")]
    VertexCapExceeded { cap: usize },

    #[error("vertex map is not total: vertex {0} has no image")]
    MapNotTotal(usize),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("mapping class is not geometric (braid-realizable)")]
    NonGeometric,

    #[error("mapping class has no image for curve {0}")]
    MissingCurveImage(String),

    #[error("boundary data invalid: {0}")]
    InvalidBoundaryData(String),

    #[error("wrong curve type: {0}")]
    WrongCurveType(String),

    #[error("not a Farey triangle: {0}")]
    NotATriangle(String),

    #[error("wrong parameter arity: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
