//! Serialized forms of the printed structure equations and constraint lists.

use serde::{Deserialize, Serialize};

use crate::numfield::AlgNum;

/// `coefficient · a ∧ b` with generator labels such as `"theta^{-2}"`.
pub type WedgeTerm = (AlgNum, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsTermDoc {
    pub symbol: String,
    pub wedge: (String, String),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constrained_by: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationDoc {
    pub generator: String,
    /// Terms moved to the left-hand side next to `d(generator)`.
    pub mc: Vec<WedgeTerm>,
    pub rhs: Vec<RhsTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEquationsFixture {
    pub equations: Vec<EquationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintGroupDoc {
    pub name: String,
    pub title: String,
    /// Symbol references; `conj(...)` and either lower-index order are accepted.
    pub vanishing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub name: String,
    pub lhs: String,
    pub rhs: Vec<(AlgNum, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintsFixture {
    pub groups: Vec<ConstraintGroupDoc>,
    pub relations: Vec<RelationDoc>,
}
