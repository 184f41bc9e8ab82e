//! Lattice diagram determinants, symmetric differential operators acting on
//! them by cell movements, and the tableau involution behind those rules.

pub mod diagram;
pub mod error;
pub mod mspace;
pub mod operators;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod symfun;
pub mod tableau;

pub use diagram::{delta, ferrers, transpose, Cell, LatticeDiagram, SignedDiagramSum};
pub use error::{Error, Result};
pub use operators::StageOrder;
pub use oracle::{run_suite, verify_instance, OperatorKind, SuiteConfig, VerificationReport};
pub use partition::{Composition, Partition};
pub use poly::{Axis, Monomial, Polynomial, Var};
pub use tableau::{psi, ColumnTableauFamily, ShapeOrbit};
