use thiserror::Error;

/// Malformed textual input (compositions, permutations, pipe dreams, ...).
#[derive(Debug, Clone, Error)]
#[error("parse error: {0}")]
pub struct ParseError(String);

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError(msg.into())
    }
}

/// Structurally valid input outside an operation's domain, e.g. a
/// multi-descent permutation where a Grassmannian one is required.
#[derive(Debug, Clone, Error)]
#[error("domain error: {0}")]
pub struct DomainError(String);

impl DomainError {
    pub fn new(msg: impl Into<String>) -> Self {
        DomainError(msg.into())
    }
}
