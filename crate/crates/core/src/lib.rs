//! Exact structure-constant engine for finite-dimensional quasi-Hopf
//! algebras.
//!
//! The crate represents algebras, coalgebra data, actions and coactions by
//! sparse structure-constant tensors over an exact field (ℚ or 𝔽ₚ), builds
//! the crossed products and twisted tensor products living on top of them
//! (smash, generalized smash, L-R-smash, diagonal crossed, two-sided,
//! Clifford, ⊙ and ⋄), and mechanically verifies axiom systems and explicit
//! isomorphisms by exhaustive basis evaluation. There is no floating point
//! and no tolerance anywhere: every check is an exact identity of tensors.

pub mod algebra;
pub mod cat;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod linear;
pub mod morphism;
pub mod quasi_hopf;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use algebra::{Algebra, Elem, Hom, Space};
pub use error::{Error, Result};
pub use linear::LinearMap;
pub use report::{AxiomResult, Report};
pub use scalar::{FieldSpec, Scalar};
pub use tensor::{Axis, Tensor, TensorBuilder};

// Placeholder until the CLI lands.
pub fn cli_main() -> i32 { 0 }
