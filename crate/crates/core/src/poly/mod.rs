//! Multivariate polynomials over an exact field and Gröbner bases for
//! homogeneous submodules of graded free modules.

mod groebner;
mod hilbert;
mod module;
mod monomial;
mod multipoly;
mod parse;

pub use groebner::{
    buchberger, buchberger_with, in_span, relations, syzygies, BuchbergerOptions, GroebnerBasis,
};
pub use hilbert::{hilbert_numerator, monomial_quotient_numerator};
pub use module::{FreeGradedModule, ModVec};
pub use monomial::Monomial;
pub use multipoly::{variable_names, MultiPoly};
pub use parse::parse_poly;
