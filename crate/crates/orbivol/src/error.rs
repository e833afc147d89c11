use crate::hp::HPReal;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("configuration: {0}")]
    Config(String),

    #[error("domain error in {function}({argument}): {detail}")]
    Domain {
        function: &'static str,
        argument: String,
        detail: String,
    },

    #[error("quadrature did not converge within {evaluations} evaluations (best estimate {best_value}, error {best_error})")]
    Quadrature {
        best_value: HPReal,
        best_error: HPReal,
        evaluations: usize,
    },

    #[error("parse error at position {position}: {detail}")]
    Parse { position: usize, detail: String },

    #[error("validation: {0}")]
    Validation(String),

    #[error("unresolved dashed edge between nodes {i} and {j}: length unknown")]
    UnresolvedEdge { i: usize, j: usize },

    #[error("non-realizable configuration: {0}")]
    NonRealizable(String),

    #[error("ambiguous solution: both lengths {0} and {1} satisfy the constraints")]
    Ambiguous(String, String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("dependency: {0}")]
    Dependency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(function: &'static str, argument: impl ToString, detail: impl ToString) -> Error {
        Error::Domain {
            function,
            argument: argument.to_string(),
            detail: detail.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
