//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands use different scalar backends or contexts")]
    MixedBackend,
    #[error("scalar is not in the base ring: {0}")]
    NotInBaseRing(String),
    #[error("denominator vanishes at beta = {0}")]
    BetaPole(String),
    #[error("truncation degree too small: {0}")]
    Truncation(String),
    #[error("table-mode division requires a unit times root factors")]
    NonRootDivision,
    #[error("requires the hyperbolic backend")]
    RequiresHyperbolic,
    #[error("requires a rank-one root datum")]
    RequiresRankOne,
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("invalid formal group law table: {0}")]
    InvalidTable(String),
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),
    #[error("support exceeds the configured ball radius {0}")]
    SupportOverflow(u32),
    #[error("element lies outside the spanned basis: {0}")]
    NotInSpan(String),
    #[error("linear solve failed: {0}")]
    SolveFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
