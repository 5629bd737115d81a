//! Discreteness, free regions and orbifold presentations for two-generator
//! subgroups `<f, g>` of PSL(2, C) with real parameters `(beta, 0, gamma)`,
//! where `beta = tr^2 f - 4`, `gamma = tr[f, g] - 2` and `g` is parabolic.
//!
//! The crate is `no_std` (it needs `alloc`). Module map:
//!
//! * [`types`]: extended orders, half-lengths, element classification and
//!   the numeric recognizers that turn floats back into symbolic witnesses.
//! * [`trace`]: trace identities for a parabolic generator.
//! * [`classifier`]: the decision procedure for every quadrant of the
//!   `(gamma, beta)` plane, plus the free regions.
//! * [`orbifold`]: group presentations for the `beta < -4, gamma > 0` family.
//! * [`oracle`]: explicit matrix realizations, used as an independent check.
//! * [`slice`]: enumeration of the curve families and SVG/CSV emission.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classifier;
mod error;
pub(crate) mod math;
pub mod oracle;
pub mod orbifold;
pub mod slice;
pub mod trace;
pub mod types;

pub use classifier::{classify_point, free_region, CaseTag, Certificate, Config, RegionTag, Sign, Verdict, WitnessSet};
pub use error::Error;
pub use types::{ElementClass, ExtendedOrder, HalfLength};

pub type Result<T> = core::result::Result<T, Error>;
