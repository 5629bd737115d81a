//! Extended orders, half-lengths, element classes and the recognizers that
//! map floating-point parameters back to symbolic witnesses.

mod element;
mod half_length;
mod order;
mod recognize;

pub(crate) use element::valid_rotation;
pub use element::{c_constant, classify_element, ElementClass, EllipticOrder};
pub(crate) use half_length::cos_pi_over;
pub use half_length::HalfLength;
pub use order::ExtendedOrder;
pub use recognize::{
    recognize_elliptic_beta, recognize_half_length, scan_elliptic_beta, scan_half_length, CoshFamily, Recognition,
    DEFAULT_BOUND, DEFAULT_TOL,
};
