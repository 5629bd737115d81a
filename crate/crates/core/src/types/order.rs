use core::fmt;

/// An element order extended by two points at infinity.
///
/// `Omega` is the order of a parabolic element (written `inf`), `BarOmega`
/// that of a hyperbolic one (written `infbar`). The derived ordering puts
/// every finite order below `Omega` and `Omega` below `BarOmega`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedOrder {
    Finite(u32),
    Omega,
    BarOmega,
}

impl ExtendedOrder {
    /// Divides by a positive integer. Finite orders must be divisible;
    /// both infinities are fixed by division.
    pub fn checked_div(self, d: u32) -> Option<ExtendedOrder> {
        match self {
            ExtendedOrder::Finite(n) if d != 0 && n % d == 0 => Some(ExtendedOrder::Finite(n / d)),
            ExtendedOrder::Finite(_) => None,
            other if d != 0 => Some(other),
            _ => None,
        }
    }

    /// `(t, 2) = 1`: coprimality with 2 forces the order to be finite.
    pub fn is_odd(self) -> bool {
        matches!(self, ExtendedOrder::Finite(n) if n % 2 == 1)
    }

    /// `(t, 2) = 2`, which both infinities satisfy.
    pub fn is_even_or_infinite(self) -> bool {
        !self.is_odd()
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedOrder::Finite(_))
    }

    /// `self >= n` for a finite bound.
    pub fn at_least(self, n: u32) -> bool {
        self >= ExtendedOrder::Finite(n)
    }
}

impl fmt::Display for ExtendedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedOrder::Finite(n) => write!(f, "{n}"),
            ExtendedOrder::Omega => f.write_str("inf"),
            ExtendedOrder::BarOmega => f.write_str("infbar"),
        }
    }
}
