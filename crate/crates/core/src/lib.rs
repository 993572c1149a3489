//! Exact computational homological algebra on two concrete models: finitely
//! presented graded modules over k[x_1..x_n] and finitely generated
//! k[t]-modules, connected by dehomogenization.
//!
//! Everything is computed with exact arithmetic over the rationals or a
//! prime field.

pub mod endo;
pub mod error;
pub mod field;
pub mod graded;
pub mod k0;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod suite;
pub mod theta;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
