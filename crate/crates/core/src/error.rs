use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("illegal family/rank combination: {0}")]
    IllegalHost(String),
    #[error("not a finite or affine Dynkin diagram: {0}")]
    NotDynkin(String),
    #[error("labels defined only for irreducible affine diagrams")]
    LabelsScope,
    #[error("malformed input: {0}")]
    BadInput(String),
    #[error("host out of scope: {0}")]
    HostScope(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("internal error: {0}")]
    Internal(String),
}
