use thiserror::Error;

use crate::label::Label;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank parameter k must be a positive integer, got {0}")]
    InvalidRank(u32),
    #[error("{label} is not a simple for k = {k}")]
    InvalidLabel { label: Label, k: u32 },
    #[error("pair ({0}, {0}) is degenerate: both residues coincide")]
    DegeneratePair(u32),
    #[error("no fusion rule covers {0} ⊠ {1}; complete the table first")]
    Uncovered(Label, Label),
    #[error("{0} ⊠ {1} contains degenerate diagonal summands that are not expanded")]
    Unexpanded(Label, Label),
    #[error("cell {0} ⊠ {1} is unresolved in this table")]
    Unresolved(Label, Label),
    #[error("{label} has no dual: {reason}")]
    NoDual { label: String, reason: String },
    #[error("simple-current check failed: {0}")]
    SimpleCurrents(String),
    #[error("residual search space has {0} assignments, above the limit of {1}")]
    SearchSpaceTooLarge(u128, u128),
    #[error("k mismatch: table is for k = {table}, query for k = {query}")]
    RankMismatch { table: u32, query: u32 },
    #[error("invalid table export: {0}")]
    Export(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse label {0:?}: expected N(i,j), D(i,e), T(i,e), (i j), ~(i e) or ^(i e)")]
pub struct LabelParseError(pub String);
