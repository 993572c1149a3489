//! Finitely generated k[t]-modules: a vector space with an endomorphism `t`.
//! Everything is decided through Smith normal forms over the PID k[t].

mod checks;
mod filtration;
mod module;
mod morphism;
mod submodule;

pub use checks::{one_minus_t_surjective, split_sequence_check};
pub use filtration::{artin_rees_holds, artin_rees_index, ExtensionRule, TFiltration};
pub use module::{parse_unipoly, unipoly_from_multi, unipoly_to_multi, EndoDoc, EndoModule, TVector};
pub use morphism::{is_exact_at, EndoMorphism};
pub use submodule::SubmoduleRep;
