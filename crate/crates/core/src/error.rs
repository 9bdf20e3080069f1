use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input outside the domain of the model; the message names the rule.
    #[error("domain error: {0}")]
    Domain(String),
    /// Both matching rows are degenerate.
    #[error("singular matching system at E = {energy}, m = {m}")]
    Singular { energy: f64, m: i32 },
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

impl From<specfun::Error> for Error {
    fn from(e: specfun::Error) -> Self {
        match e {
            specfun::Error::Domain(msg) => Error::Domain(msg),
            other @ specfun::Error::NoConvergence { .. } => Error::NoConvergence(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
