use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("parameters outside the supported regime: {0}")]
    OutOfRegime(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("unknown distribution `{0}`")]
    UnknownDistribution(String),

    #[error("distribution `{name}` failed validation: {reason}")]
    InvalidDistribution { name: String, reason: String },

    #[error("degenerate sample variance in Monte Carlo estimate")]
    DegenerateVariance,
}

pub(crate) fn out_of_range(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}

/// Common precondition for a pair `(X_(k), X_(k+t))` from a sample of size `n`.
pub(crate) fn check_pair(n: usize, k: usize, t: usize) -> Result<()> {
    if k < 1 || t < 1 || k + t > n {
        return Err(out_of_range(format!(
            "need k >= 1, t >= 1, k + t <= n; got n={n}, k={k}, t={t}"
        )));
    }
    Ok(())
}
