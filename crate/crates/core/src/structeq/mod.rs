//! Exterior calculus over the coframe, structure equations and constraint tables.

pub mod constraints;
pub mod emit;
pub mod equations;
pub mod fixture;
pub mod forms;
pub mod iz;
pub mod symbols;

pub use constraints::{ConstraintTable, Relation, SymbolStatus, VanishingEntry};
pub use emit::{emit_constraints, emit_equations, EmitFormat};
pub use equations::{
    diff_against_fixture, fixture_equations, generate_structure_equations, maurer_cartan_forms, EquationDiff,
    StructureEquation,
};
pub use forms::{ExteriorDerivative, Form, Gen, Poly};
pub use iz::{iz_negative_control, verify_iz_change_of_frame, IzResiduals};
pub use symbols::CurvSym;
