use super::ExtendedOrder;
use crate::math;
use crate::{Error, Result};

/// Order data of an elliptic element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticOrder {
    /// Not resolved; only the bucket is known.
    Unresolved,
    /// Rotation through `2 pi q / n` with `gcd(q, n) = 1`.
    Finite { n: u32, q: u32 },
    /// No rotation `2 pi q / n` with `n <= n_max` matches: infinite order as
    /// far as the bound can tell.
    Irrational,
    /// The rotation angle is below `2 pi / n_max`, so a primitive match of
    /// higher order cannot be excluded.
    BeyondBound,
}

/// Classification of an element of PSL(2, C) by `beta = tr^2 - 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    Identity,
    Elliptic(EllipticOrder),
    Parabolic,
    Hyperbolic,
    PiLoxodromic,
    StrictlyLoxodromic,
}

impl ElementClass {
    pub fn is_primitive_elliptic(self) -> bool {
        matches!(self, ElementClass::Elliptic(EllipticOrder::Finite { q: 1, .. }))
    }

    /// The order `t` of a hyperbolic, parabolic or primitive elliptic
    /// element, the classes that occur as `t(u)` for `u` in the half-length
    /// set.
    pub fn half_length_order(self) -> Option<ExtendedOrder> {
        match self {
            ElementClass::Elliptic(EllipticOrder::Finite { n, q: 1 }) => Some(ExtendedOrder::Finite(n)),
            ElementClass::Parabolic => Some(ExtendedOrder::Omega),
            ElementClass::Hyperbolic => Some(ExtendedOrder::BarOmega),
            _ => None,
        }
    }
}

/// Buckets a real `beta`: `[-4, 0)` elliptic, `0` parabolic, positive
/// hyperbolic, below `-4` pi-loxodromic. Only `beta = -4` gets its order
/// resolved here (a half-turn).
pub fn classify_element(beta: f64) -> ElementClass {
    if beta == -4.0 {
        ElementClass::Elliptic(EllipticOrder::Finite { n: 2, q: 1 })
    } else if (-4.0..0.0).contains(&beta) {
        ElementClass::Elliptic(EllipticOrder::Unresolved)
    } else if beta == 0.0 {
        ElementClass::Parabolic
    } else if beta > 0.0 {
        ElementClass::Hyperbolic
    } else {
        ElementClass::PiLoxodromic
    }
}

/// `C(q, n) = sin^2(q pi / n) / sin^2(pi / n)`, the factor relating the
/// parameters of a non-primitive elliptic generator to those of its
/// primitive power. Equals 1 for `n = Omega` (a parabolic generator).
pub fn c_constant(q: u32, n: ExtendedOrder) -> Result<f64> {
    match n {
        ExtendedOrder::Omega if q == 1 => Ok(1.0),
        ExtendedOrder::Finite(n) if valid_rotation(q, n) => {
            if q == 1 {
                Ok(1.0)
            } else {
                Ok(math::sin_sq_frac(q, n) / math::sin_sq_frac(1, n))
            }
        }
        ExtendedOrder::Finite(n) => Err(Error::InvalidRotation { q, n }),
        _ => Err(Error::InvalidRotation { q, n: 0 }),
    }
}

/// `(q, n) = (1, 2)`, or `gcd(q, n) = 1` with `1 <= q < n / 2`.
pub(crate) fn valid_rotation(q: u32, n: u32) -> bool {
    (n == 2 && q == 1) || (q >= 1 && 2 * q < n && math::gcd(q, n) == 1)
}
