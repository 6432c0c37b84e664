use thiserror::Error;

/// Everything that can go wrong between reading a job and emitting a report.
///
/// Variants are grouped by the CLI exit code they map to: input problems,
/// violated geometric hypotheses, resource caps, and internal inconsistencies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unsupported specialization: {0}")]
    Unsupported(String),

    #[error("vector field is not tangent: {0}")]
    NotTangent(String),
    #[error("B = O/(X) is infinite dimensional: the vector field has a non-isolated zero in the ambient space")]
    InfiniteDimB,
    #[error(
        "O_V/I_k(phi) is infinite dimensional: the germ does not have an isolated singularity"
    )]
    NotIsolatedSingularity,
    #[error("ideal is not zero-dimensional at the origin")]
    NotZeroDimensional,

    #[error("degree cap {cap} exceeded during local reduction")]
    DegreeCap { cap: u32 },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl IndexError {
    /// Process exit code for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            IndexError::Syntax { .. }
            | IndexError::Input(_)
            | IndexError::Shape(_)
            | IndexError::Unsupported(_) => 2,
            IndexError::NotTangent(_)
            | IndexError::InfiniteDimB
            | IndexError::NotIsolatedSingularity
            | IndexError::NotZeroDimensional => 3,
            IndexError::DegreeCap { .. } => 4,
            IndexError::Inconsistency(_) => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, IndexError>;
