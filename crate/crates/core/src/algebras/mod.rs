//! Generator families, Casimir operators and the named relation catalog.

pub mod casimir;
pub mod catalog;
pub mod expr;
mod generators;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::qnum::Deformation;
use crate::Error;

pub use casimir::{casimir, casimir_relation, named_casimirs, Casimir};
pub use catalog::{printed_variants, relation_catalog, ModeHint, Relation, RelationInfo};
pub use expr::{Expr, NumericGens};
pub use generators::{adjoint_pairs, counterpart, GeneratorSet, MIN_CUTOFF};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "classical")]
    ClassicalSp4,
    #[serde(rename = "qboson")]
    QBosonSp4,
    #[serde(rename = "tensor")]
    TensorSp4,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::ClassicalSp4, Family::QBosonSp4, Family::TensorSp4];

    pub fn deformation(self) -> Deformation {
        match self {
            Family::ClassicalSp4 => Deformation::Classical,
            _ => Deformation::Quantum,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::ClassicalSp4 => "classical",
            Family::QBosonSp4 => "qboson",
            Family::TensorSp4 => "tensor",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "classical" | "sp4" => Ok(Family::ClassicalSp4),
            "qboson" | "spq4" => Ok(Family::QBosonSp4),
            "tensor" | "spt4" => Ok(Family::TensorSp4),
            _ => Err(Error::InvalidArgument(format!("unknown family '{s}'"))),
        }
    }
}
