//! Grothendieck-group classes and additivity checks.

mod checks;
mod kpoly;

pub use checks::{
    check_base_change, check_devissage_classes, check_filtration_additivity,
    check_localization_classes, check_main_diagram, check_ses_additivity, check_tf_decomposition,
    kpoly, EndoSes, GradedSes, ShortExactSequence,
};
pub use kpoly::KPolynomial;
