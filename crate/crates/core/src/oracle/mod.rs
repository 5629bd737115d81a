//! Explicit matrix realizations of parameter points, used as ground truth
//! for the classifier.
//!
//! Everything here works with actual 2x2 complex matrices: parameters are
//! recomputed from traces of products, and the discreteness test goes
//! through the square roots `h1`, `h2` rather than through closed formulas.

mod criterion;
mod mobius;
mod realize;

pub use criterion::{
    class_name, classify_mobius, compute_h1, compute_h2, half_length_of, jorgensen_check, sqrt_in_psl,
    verify_criterion_psl,
};
pub use mobius::Mobius;
pub use realize::{
    params_of, realize, realize_general, realize_hyp, realize_lox, realize_parabolic_pair, realize_strip,
    realize_strip_gamma, MobiusPair, Provenance,
};
