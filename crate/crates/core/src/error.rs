use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root not bracketed on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NotBracketed {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A scan failed to isolate a root that must exist. Indicates a bug.
    #[error("failed to bracket root: {0}")]
    BracketFailure(String),

    #[error("empty spectrum: {0}")]
    EmptySpectrum(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("enumeration guard exceeded: more than {limit} configurations")]
    GuardExceeded { limit: u64 },

    #[error("coherent-state information is negative ({value} bits): overcompleteness regime")]
    Overcompleteness { value: f64 },

    #[error(
        "zeta tail estimate {tail:.3e} exceeds 1% of total {total:.3e}; use a deeper spectrum"
    )]
    ZetaTail { tail: f64, total: f64 },

    #[error("value outside numeric range: {0}")]
    OutOfRange(String),

    #[error("method does not apply to this spectrum: {0}")]
    MethodMismatch(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
