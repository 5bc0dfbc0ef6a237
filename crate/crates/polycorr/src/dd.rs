//! Minimal double-double arithmetic (error-free transformations).
//!
//! Used where a finite alternating sum cancels more digits than the
//! target tolerance allows — the Jacobi coefficient inner sums lose up to
//! ~8 digits at m ≈ 12 in plain f64, which would leak into the oracle
//! equivalence and difference-equation checks.

use crate::real::Real;

/// Unevaluated hi + lo pair with |lo| ≤ ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd<T> {
    pub hi: T,
    pub lo: T,
}

#[inline]
fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod<T: Real>(a: T, b: T) -> (T, T) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl<T: Real> Dd<T> {
    pub fn zero() -> Self {
        Dd {
            hi: T::zero(),
            lo: T::zero(),
        }
    }

    pub fn one() -> Self {
        Dd {
            hi: T::one(),
            lo: T::zero(),
        }
    }

    #[cfg(test)]
    pub fn from(x: T) -> Self {
        Dd {
            hi: x,
            lo: T::zero(),
        }
    }

    /// Exact a + b as a double-double.
    pub fn sum2(a: T, b: T) -> Self {
        let (s, e) = two_sum(a, b);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn add_scalar(self, f: T) -> Self {
        let (s, e) = two_sum(self.hi, f);
        Dd::renorm(s, e + self.lo)
    }

    #[inline]
    pub fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    fn renorm(hi: T, lo: T) -> Self {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn add(self, other: Dd<T>) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        Dd::renorm(s, e + self.lo + other.lo)
    }

    #[inline]
    pub fn mul(self, other: Dd<T>) -> Self {
        let (p, e) = two_prod(self.hi, other.hi);
        Dd::renorm(p, e + self.hi * other.lo + self.lo * other.hi)
    }

    #[inline]
    pub fn mul_scalar(self, f: T) -> Self {
        let (p, e) = two_prod(self.hi, f);
        Dd::renorm(p, e + self.lo * f)
    }

    #[inline]
    pub fn div(self, other: Dd<T>) -> Self {
        let q0 = self.hi / other.hi;
        let r = self.add(other.mul_scalar(-q0));
        let q1 = (r.hi + r.lo) / other.hi;
        Dd::renorm(q0, q1)
    }

    pub fn value(self) -> T {
        self.hi + self.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_digits() {
        // Σ of a large alternating pair plus a tiny rest, exactly
        let a = Dd::from(1.0_f64).add(Dd::from(2e-17)).add(Dd::from(-1.0));
        assert!((a.value() - 2e-17).abs() < 1e-32);
    }

    #[test]
    fn product_splits() {
        let x = Dd::from(1.0_f64 / 3.0);
        let p = x.mul_scalar(3.0);
        assert!((p.value() - 1.0).abs() < 1e-16);
        // hi+lo carries the residual of the f64 rounding of 1/3
        assert!(p.lo != 0.0);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Dd::from(std::f64::consts::PI);
        let b = Dd::from(std::f64::consts::E);
        let q = a.mul(b).div(b);
        assert!((q.hi - a.hi).abs() < 1e-15 && (q.value() - a.value()).abs() < 1e-30);
    }
}
