//! Finitely presented graded modules over k[x_1..x_n]: morphisms, kernels
//! and cokernels, degree pieces, canonical filtrations and Koszul homology.

mod filtration;
mod json;
mod koszul;
mod morphism;
mod piece;
mod presentation;

pub use json::{MorphismDoc, PresentationDoc, RelationDoc};
pub use koszul::KoszulComplex;
pub use morphism::{is_exact_at, GradedMorphism};
pub use piece::GradedPiece;
pub use presentation::{GradedPresentation, Minimalization, Relation};
