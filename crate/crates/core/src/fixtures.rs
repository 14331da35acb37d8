//! Transcribed reference data, embedded at build time and optionally
//! overridden from a directory.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfield::AlgNum;
use crate::structeq::fixture::{ConstraintsFixture, StructureEquationsFixture};

pub const APPENDIX_FILE: &str = "appendix.json";
pub const STRUCTURE_EQUATIONS_FILE: &str = "structure_equations.json";
pub const CONSTRAINTS_FILE: &str = "constraints.json";

const APPENDIX_JSON: &str = include_str!("../../../fixtures/appendix.json");
const STRUCTURE_EQUATIONS_JSON: &str = include_str!("../../../fixtures/structure_equations.json");
const CONSTRAINTS_JSON: &str = include_str!("../../../fixtures/constraints.json");

/// `(coefficient, label)`; labels are `"i_jk"` for τ components and
/// `"alpha_beta"` for components of `A`, 1-based.
pub type Term = (AlgNum, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm {
    pub tau: String,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub tau: String,
    pub a: String,
    pub printed: AlgNum,
    pub computed: AlgNum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFormGroup {
    pub degree: i32,
    pub forms: Vec<LinearForm>,
    #[serde(default)]
    pub errata: Vec<Erratum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConversionFormula {
    pub component: String,
    pub terms: Vec<Term>,
    /// `computed = factor · printed` when the printed formula is off by a unit.
    #[serde(default)]
    pub erratum_factor: Option<AlgNum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionWitness {
    pub generator: usize,
    pub component: String,
    pub value: AlgNum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixFixture {
    pub killing_matrix_f: Vec<Vec<i64>>,
    pub linear_forms: Vec<LinearFormGroup>,
    pub degree2_system: Vec<Vec<Term>>,
    pub degree3_system: Vec<Vec<Term>>,
    pub degree3_reduced: Vec<Vec<Term>>,
    pub cr_conversion: Vec<ConversionFormula>,
    pub torsion_witnesses: Vec<TorsionWitness>,
}

impl AppendixFixture {
    pub fn linear_forms(&self, degree: i32) -> Option<&LinearFormGroup> {
        self.linear_forms.iter().find(|g| g.degree == degree)
    }
}

#[derive(Clone, Debug)]
pub struct Fixtures {
    pub appendix: AppendixFixture,
    pub structure_equations: StructureEquationsFixture,
    pub constraints: ConstraintsFixture,
}

impl Fixtures {
    pub fn embedded() -> Result<Self> {
        Ok(Fixtures {
            appendix: serde_json::from_str(APPENDIX_JSON)?,
            structure_equations: serde_json::from_str(STRUCTURE_EQUATIONS_JSON)?,
            constraints: serde_json::from_str(CONSTRAINTS_JSON)?,
        })
    }

    /// Loads every fixture from `dir`; missing files fall back to the embedded copy.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let base = Self::embedded()?;
        Ok(Fixtures {
            appendix: read_or(dir, APPENDIX_FILE, base.appendix)?,
            structure_equations: read_or(dir, STRUCTURE_EQUATIONS_FILE, base.structure_equations)?,
            constraints: read_or(dir, CONSTRAINTS_FILE, base.constraints)?,
        })
    }
}

fn read_or<T: DeserializeOwned>(dir: &Path, file: &str, fallback: T) -> Result<T> {
    let path = dir.join(file);
    if !path.exists() {
        return Ok(fallback);
    }
    let text = fs::read_to_string(&path).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}
