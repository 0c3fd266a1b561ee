//! Exact computations with 3-Lie algebras, their representations and
//! generalized representations, cohomology and abelian extensions.

pub mod algebra;
pub mod cochain;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod extension;
pub mod gencohom;
pub mod index;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
pub use exec::Exec;
pub use linalg::Matrix;
pub use scalar::{ParameterAssignment, Scalar};
