use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index x{index} is out of range 1..={arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("arity must be at least 1")]
    ZeroArity,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("operation is undefined on the empty monomial")]
    EmptyMonomial,

    #[error("monomial {0} does not begin with x1")]
    NotInQ0(String),

    #[error("polynomial is not invariant under the circular group")]
    NotInvariant,

    #[error("polynomial is not invariant modulo the ideal")]
    NotInvariantModIdeal,

    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),

    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeAboveBound { degree: u32, bound: u32 },

    #[error("{what} is out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("reduction could not be certified: {0}")]
    Uncertified(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("invariance and commutation disagree on a matrix tuple: invariant={invariant}, commuting={commuting}")]
    EquivalenceViolated { invariant: bool, commuting: bool },

    #[error("matrix tuple is malformed: {0}")]
    MalformedTuple(String),
}
