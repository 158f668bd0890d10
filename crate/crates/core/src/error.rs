use thiserror::Error;

use crate::pauli::PauliOp;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed ring `{name}`: {reason}")]
    MalformedRing { name: String, reason: String },

    #[error("unknown ring `{0}`")]
    UnknownRing(String),

    #[error("pair ({0},{1}) is not admissible")]
    NotAdmissible(usize, usize),

    #[error("points {0} and {1} are not distant")]
    NotDistant(String, String),

    #[error("no GL(2,R) element maps the first triple onto the second")]
    NoTransitivityWitness,

    #[error("operators {0} and {1} do not commute")]
    NotCommuting(PauliOp, PauliOp),

    #[error("product of {0:?} is not a multiple of the identity")]
    ProductNotIdentity([PauliOp; 3]),

    #[error("{line}: {source}")]
    MerminLine {
        line: String,
        #[source]
        source: Box<Error>,
    },

    #[error("triples do not partition the 15 operators: {0}")]
    NotAPartition(String),

    #[error("spread triple {index}: {source}")]
    SpreadTriple {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("not a generalized quadrangle collinearity graph: {0}")]
    NotQuadrangleGraph(String),

    #[error("hyperplane {0:?} fits none of ovoid / perp-set / grid")]
    UnclassifiedHyperplane(Vec<usize>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
