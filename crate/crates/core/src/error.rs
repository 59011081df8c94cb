use thiserror::Error;

/// Errors shared by all modules.
///
/// Operations that can fail return `Result<_, Error>`; invariants that are
/// programming errors (mismatched matrix shapes built internally, for
/// example) panic instead.
#[derive(Debug, Error)]
pub enum Error {
    /// Input data violates a structural precondition (shapes, well-formed
    /// maps, missing fields).
    #[error("structural error: {0}")]
    Structural(String),

    /// An operation that needs an effective (non-virtual) character was
    /// handed one with a negative coefficient.
    #[error("virtual character: {0}")]
    VirtualCharacter(String),

    /// A substitution chain refers back to a variable being eliminated.
    #[error("cyclic substitution: {0}")]
    CyclicSubstitution(String),

    /// Window saturation produced different canonical structures at
    /// consecutive window sizes; both are carried for inspection.
    #[error("no stabilization at window {window}: {at_window} vs {at_next}")]
    NoStabilization {
        window: usize,
        at_window: String,
        at_next: String,
    },

    /// An element's support does not fit the computation window.
    #[error("window too small: {0}")]
    WindowTooSmall(String),

    /// The input is valid but outside what this operation supports.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Bundled or user-provided data is internally inconsistent.
    #[error("inconsistent data: {0}")]
    Data(String),

    /// The requested case lies outside the scope of the decision procedure.
    #[error("out of scope: {0}")]
    OutOfScope(String),
}

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }
}
