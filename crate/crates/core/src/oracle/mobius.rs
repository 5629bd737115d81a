use core::ops::Mul;

use num_complex::Complex64;

type C = Complex64;

/// An element of SL(2, C), read projectively as an element of PSL(2, C).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: C,
    pub b: C,
    pub c: C,
    pub d: C,
}

impl Mobius {
    pub const IDENTITY: Mobius =
        Mobius { a: C::new(1.0, 0.0), b: C::new(0.0, 0.0), c: C::new(0.0, 0.0), d: C::new(1.0, 0.0) };

    pub fn new(a: C, b: C, c: C, d: C) -> Self {
        Self { a, b, c, d }
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn det(&self) -> C {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> C {
        self.a + self.d
    }

    /// `tr^2 - 4`.
    pub fn beta(&self) -> C {
        let t = self.trace();
        t * t - 4.0
    }

    /// Inverse of a determinant-one matrix.
    pub fn inv(&self) -> Self {
        Self::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn scale(&self, s: C) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Rescales to determinant one.
    pub fn normalized(&self) -> Self {
        let det = self.det();
        if det == C::new(1.0, 0.0) {
            *self
        } else {
            self.scale(det.sqrt().inv())
        }
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.a.norm().max(self.b.norm()).max(self.c.norm()).max(self.d.norm())
    }

    /// `self^k`, by repeated squaring; negative `k` uses the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inv() } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = Mobius::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Entrywise distance to `other` up to a global sign, relative to the
    /// larger entry size.
    pub fn projective_distance(&self, other: &Mobius) -> f64 {
        let diff = |s: f64| {
            let o = other.scale(C::new(s, 0.0));
            (self.a - o.a).norm().max((self.b - o.b).norm()).max((self.c - o.c).norm()).max((self.d - o.d).norm())
        };
        let scale = self.max_norm().max(other.max_norm()).max(1.0);
        diff(1.0).min(diff(-1.0)) / scale
    }

    pub fn projectively_eq(&self, other: &Mobius, tol: f64) -> bool {
        self.projective_distance(other) <= tol
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.projectively_eq(&Mobius::IDENTITY, tol)
    }
}

impl Mul for Mobius {
    type Output = Mobius;

    fn mul(self, o: Mobius) -> Mobius {
        Mobius::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_powers() {
        let g = Mobius::real(1.0, 1.0, 0.0, 1.0);
        assert_eq!(g.pow(5), Mobius::real(1.0, 5.0, 0.0, 1.0));
        assert!(g.pow(-3).projectively_eq(&Mobius::real(1.0, -3.0, 0.0, 1.0), 1e-15));
        assert!((g * g.inv()).is_identity(1e-15));
        assert!(Mobius::IDENTITY.scale(C::new(-1.0, 0.0)).is_identity(1e-15));
    }

    #[test]
    fn normalization() {
        let m = Mobius::real(2.0, 0.0, 0.0, 2.0).normalized();
        assert!((m.det() - 1.0).norm() < 1e-15);
    }
}
