use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("sign requested for non-real element {0}")]
    NotReal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("basis {0} is degenerate: cannot expand in it")]
    SingularBasis(String),

    #[error("element is not in the span of basis {0}")]
    NotInSpan(String),

    #[error("basis element {index} of {basis} is not an ad(Z) eigenvector")]
    NotHomogeneous { basis: String, index: usize },

    #[error("matrix does not belong to so(3,2)")]
    NotInAlgebra,

    #[error("point is not on the model hypersurface M_o: {0}")]
    NotOnModel(String),

    #[error("point is off the tube hypersurface: {0}")]
    OffHypersurface(String),

    #[error("point is the apex of the light cone")]
    Apex,

    #[error("no exterior-derivative rule for generator {0}")]
    MissingRule(String),

    #[error("constraint table is inconsistent: {0}")]
    InconsistentConstraint(String),

    #[error("unknown curvature symbol or index {0:?}")]
    UnknownSymbol(String),

    #[error("shifting degree {0} is not one of 1, 2, 3")]
    UnsupportedDegree(i32),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("unsupported output format {0:?}")]
    UnsupportedFormat(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
