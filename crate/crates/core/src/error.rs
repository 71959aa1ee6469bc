use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values from different ring instances were combined.
    #[error("ring instance mismatch: {0}")]
    InstanceMismatch(String),

    /// A mathematical precondition does not hold (zero ideal, unit ideal,
    /// non-prime modulus, non-coprime CRT moduli, index out of range, ...).
    #[error("{0}")]
    Domain(String),

    /// The oracle was asked to do more work than its budget allows.
    #[error("budget exceeded: {required} evaluations needed, budget is {budget}")]
    Budget { required: String, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
