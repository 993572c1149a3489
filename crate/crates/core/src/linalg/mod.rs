//! Exact linear algebra over a field and Smith normal form over k[t].

mod matrix;
mod snf;
mod unipoly;

pub use matrix::{EchelonSpace, Matrix, Rref};
pub use snf::{hermite_columns, snf_unipoly, Snf, UniPolyMatrix};
pub use unipoly::UniPoly;
