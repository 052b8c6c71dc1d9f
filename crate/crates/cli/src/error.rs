use orderstat::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(Error),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange(_)
            | Error::OutOfRegime(_)
            | Error::InvalidArgument(_)
            | Error::UnknownDistribution(_)
            | Error::InvalidDistribution { .. } => CliError::Usage(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}
