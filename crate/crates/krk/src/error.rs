use thiserror::Error;

use crate::cartan::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("unknown type tag `{0}`")]
    UnknownFamily(String),
    #[error("rank {rank} is below the bound {min} for type {family}")]
    RankTooSmall { family: Family, rank: usize, min: usize },
    #[error("index {0} is out of range")]
    BadIndex(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KrError {
    #[error("B^{{1,1}} is not perfect for {0}")]
    NotPerfect(String),
    #[error("operation only defined in type A1, got {0}")]
    NotTypeA(String),
    #[error("no node labelled `{0}`")]
    NoSuchNode(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("empty colour word")]
    Empty,
    #[error("word {0:?} has no walk in B^{{1,1}}")]
    NoWalk(Vec<usize>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("zero character")]
    Zero,
    #[error("character is not divisible by {0}")]
    NotDivisible(String),
    #[error("c = {c} exceeds -a_ij = {bound}")]
    BadStringLength { c: i64, bound: i64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("no stabilisation after {0} rounds")]
    NoStabilization(usize),
    #[error("no highest-weight node with weight {0:?}")]
    NoTarget(Vec<i64>),
    #[error("isomorphism fails at {0}")]
    NotIsomorphic(String),
    #[error("Λ_{0} is not of level one")]
    NotLevelOne(usize),
    #[error("model inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Kr(#[from] KrError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("marker sets overlap at position {0}")]
    MarkerOverlap(usize),
    #[error("relation `{relation}` fails at {context}")]
    Relation { relation: String, context: String },
    #[error(transparent)]
    Char(#[from] CharError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategorifyError {
    #[error("index {0} is forbidden for this type")]
    Forbidden(usize),
    #[error("node {0} lies outside the trusted region")]
    Untrusted(usize),
    #[error("no cyclotomic path for node {0}")]
    NoPath(usize),
    #[error("inequivalent paths for node {node}: {paths:?}")]
    Ambiguous { node: usize, paths: Vec<Vec<usize>> },
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error(transparent)]
    Kr(#[from] KrError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
