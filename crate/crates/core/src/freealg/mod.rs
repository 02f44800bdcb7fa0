//! Free anticommutative / skew ternary structures: association types, normal-form
//! multilinear monomials, the symmetric-group action, liftings and the identity text
//! format.

mod poly;
mod shape;
mod space;
mod text;
mod tree;

pub use poly::{lift, LiftMode, Poly};
pub use shape::{count_types, enumerate_types, standard_cmp, Shape, TypeCounts};
pub use space::{all_permutations, MonomialSpace, Node, TypeInfo};
pub use text::{format_terms, parse_terms, TermList};
pub use tree::Tree;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which products may occur in a monomial.
///
/// `Mixed` admits every type built from either product, so it contains the pure
/// binary and pure ternary types as well.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpSet {
    Binary,
    Ternary,
    Mixed,
}

impl OpSet {
    pub fn allows_binary(self) -> bool {
        matches!(self, OpSet::Binary | OpSet::Mixed)
    }

    pub fn allows_ternary(self) -> bool {
        matches!(self, OpSet::Ternary | OpSet::Mixed)
    }

    /// Smallest operation set containing both.
    pub fn join(self, other: OpSet) -> OpSet {
        if self == other {
            self
        } else {
            OpSet::Mixed
        }
    }

    pub fn contains(self, other: OpSet) -> bool {
        self == other || self == OpSet::Mixed
    }
}

impl fmt::Display for OpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpSet::Binary => "binary",
            OpSet::Ternary => "ternary",
            OpSet::Mixed => "mixed",
        })
    }
}

impl FromStr for OpSet {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "binary" => Ok(OpSet::Binary),
            "ternary" => Ok(OpSet::Ternary),
            "mixed" => Ok(OpSet::Mixed),
            other => crate::error::arg(format!("unknown operation set {other:?}")),
        }
    }
}

/// Largest supported degree.
pub const MAX_DEGREE: usize = 7;
