//! Exact reconstruction of the graded Lie algebra so(3,2) and the Cartan
//! connection apparatus of 5-dimensional girdled CR hypersurfaces.

pub mod cohomology;
pub mod error;
pub mod fixtures;
pub mod liealg;
pub mod linalg;
pub mod model;
pub mod numfield;
pub mod structeq;
pub mod verify;

pub use error::{Error, Result};
pub use fixtures::Fixtures;
pub use liealg::{Basis, BasisKind, LieElement};
pub use linalg::Matrix;
pub use numfield::{AlgNum, Part, Radical};
pub use verify::{run_suite, Report, Status, Suite};
