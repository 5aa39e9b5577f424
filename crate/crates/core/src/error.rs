use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("singular curve y^2 = x^3 + ({a})x + ({b}): discriminant is zero")]
    Singular { a: String, b: String },

    #[error("cubic algebra context mismatch: ({0}) vs ({1})")]
    ContextMismatch(String, String),

    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },

    #[error("degenerate fiber: {0}")]
    DegenerateFiber(String),

    #[error("quartic has a repeated root")]
    RepeatedRoot,

    #[error("kernel has dimension {found}, expected {expected}")]
    KernelDimension { expected: usize, found: usize },

    #[error("map `{map}` is not defined here: {denominator} vanishes")]
    Indeterminate { map: String, denominator: String },

    #[error("degenerate point: {0}")]
    DegeneratePoint(String),

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("unknown {kind} `{name}` (known: {known})")]
    UnknownName { kind: &'static str, name: String, known: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
