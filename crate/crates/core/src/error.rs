use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a chain must have at least one element")]
    EmptyChain,

    #[error("expected {expected} values for a chain of length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("value {value} at position {position} is outside the chain 0..{n}")]
    OutOfRange { position: usize, value: u32, n: u32 },

    #[error(
        "not an endomorphism of the join-semilattice: value {previous} at position {} \
         exceeds value {next} at position {position}", position - 1
    )]
    NotMonotone { position: usize, previous: u32, next: u32 },

    #[error("chain lengths differ: {left} vs {right}")]
    ChainMismatch { left: u32, right: u32 },

    #[error("exponent must be at least 1")]
    ZeroExponent,

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("a simplex needs at least one vertex")]
    EmptyVertexSet,

    #[error("vertices must be strictly increasing, found {previous} before {next}")]
    VerticesNotIncreasing { previous: u32, next: u32 },

    #[error("vertex {vertex} is outside the chain 0..{n}")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("face dimension {dim} is outside 1..={k}")]
    FaceDimension { dim: usize, k: usize },

    #[error("vertices {face:?} do not form a face of a simplex on {vertices:?}")]
    NotAFace { face: Vec<u32>, vertices: Vec<u32> },

    #[error("vertex index {index} is outside 0..{k}")]
    VertexIndex { index: usize, k: usize },

    #[error("{what} {value} is outside {min}..={max}")]
    ParameterRange { what: &'static str, value: u64, min: u64, max: u64 },

    #[error("carrier has {count} members, above the enumeration cap of {cap}")]
    TooLarge { count: u128, cap: usize },

    #[error("{endo} does not lie in the simplex")]
    NotAMember { endo: String },

    #[error("{reason}")]
    Unsupported { reason: String },

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}
