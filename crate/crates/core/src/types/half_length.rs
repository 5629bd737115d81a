use core::fmt;

use super::ExtendedOrder;
use crate::math;

/// A complex translation half-length `u`: `i pi / p` for a primitive
/// elliptic element of order `p`, `0` for a parabolic one, or a positive
/// real `d` for a hyperbolic one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HalfLength {
    Elliptic(u32),
    Parabolic,
    Hyperbolic(f64),
}

impl HalfLength {
    /// `cosh u`, which is `cos(pi / p)` in the elliptic case.
    pub fn cosh(self) -> f64 {
        match self {
            HalfLength::Elliptic(p) => cos_pi_over(p),
            HalfLength::Parabolic => 1.0,
            HalfLength::Hyperbolic(d) => math::cosh(d),
        }
    }

    pub fn cosh_sq(self) -> f64 {
        let c = self.cosh();
        c * c
    }

    /// The order `t(u)`.
    pub fn order(self) -> ExtendedOrder {
        match self {
            HalfLength::Elliptic(p) => ExtendedOrder::Finite(p),
            HalfLength::Parabolic => ExtendedOrder::Omega,
            HalfLength::Hyperbolic(_) => ExtendedOrder::BarOmega,
        }
    }

    /// Builds the half-length with the given `cosh u >= 1`.
    pub fn from_cosh_at_least_one(c: f64) -> HalfLength {
        if c <= 1.0 {
            HalfLength::Parabolic
        } else {
            HalfLength::Hyperbolic(math::acosh(c))
        }
    }
}

/// `cos(pi / p)` with the `p = 2` value pinned to zero.
pub(crate) fn cos_pi_over(p: u32) -> f64 {
    if p == 2 {
        0.0
    } else {
        math::cos(math::PI / p as f64)
    }
}

impl fmt::Display for HalfLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfLength::Elliptic(p) => write!(f, "pi/{p}"),
            HalfLength::Parabolic => f.write_str("par"),
            HalfLength::Hyperbolic(d) => write!(f, "hyp:{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosh_buckets() {
        for p in 2..50 {
            let c = HalfLength::Elliptic(p).cosh();
            assert!((0.0..1.0).contains(&c), "p={p} c={c}");
        }
        assert_eq!(HalfLength::Elliptic(2).cosh(), 0.0);
        assert_eq!(HalfLength::Parabolic.cosh(), 1.0);
        assert!(HalfLength::Hyperbolic(1e-3).cosh() > 1.0);
    }

    #[test]
    fn orders() {
        assert_eq!(HalfLength::Elliptic(5).order(), ExtendedOrder::Finite(5));
        assert_eq!(HalfLength::Parabolic.order(), ExtendedOrder::Omega);
        assert_eq!(HalfLength::Hyperbolic(2.0).order(), ExtendedOrder::BarOmega);
    }
}
