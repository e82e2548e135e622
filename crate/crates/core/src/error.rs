use alloc::string::String;

/// Errors raised by the engine. The variants line up with the command-line
/// exit codes: input problems, resource aborts, and internal check failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("algebra is not split over the chosen field: {0}")]
    NotSplit(String),
    #[error("algebra is not split basic: {0}")]
    NotBasic(String),
    #[error("quiver relations are not admissible: {0}")]
    NotAdmissible(String),
    #[error("invalid automorphism: {0}")]
    Automorphism(String),
    #[error("|G| = {0} is not invertible in the field")]
    GroupOrderNotInvertible(usize),
    #[error("character group is incomplete over this field: {0}")]
    IncompleteCharacters(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
