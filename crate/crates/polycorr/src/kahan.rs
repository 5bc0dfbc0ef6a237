//! Neumaier-compensated accumulation.
//!
//! The alternating, cancellation-prone sums in this crate (hypergeometric
//! terms, quadrature, coefficient expansions) all run through this
//! accumulator. It also tracks the absolute-value sum, which yields the
//! classical a-posteriori roundoff bound `eps * sum(|t_i|)`.

use crate::real::Real;

/// Compensated running sum (Neumaier's variant of Kahan summation).
#[derive(Debug, Clone, Copy)]
pub struct NeumaierSum<T> {
    sum: T,
    comp: T,
    abs: T,
}

impl<T: Real> Default for NeumaierSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real> NeumaierSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            comp: T::zero(),
            abs: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, value: T) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
        self.abs += value.abs();
    }

    /// Compensated value of the sum.
    #[inline]
    pub fn value(&self) -> T {
        self.sum + self.comp
    }

    /// Sum of absolute values of everything added so far.
    #[inline]
    pub fn abs_sum(&self) -> T {
        self.abs
    }

    /// A-posteriori roundoff bound for the accumulated sum.
    #[inline]
    pub fn est_error(&self) -> T {
        self.abs * T::epsilon()
    }

    pub fn sum_iter<I: IntoIterator<Item = T>>(iter: I) -> T {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensates_small_against_large() {
        let mut s = NeumaierSum::<f64>::new();
        s.add(1e16);
        for _ in 0..1000 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 1000.0);
    }

    #[test]
    fn tracks_abs_sum() {
        let mut s = NeumaierSum::<f64>::new();
        s.add(3.0);
        s.add(-4.0);
        assert_eq!(s.value(), -1.0);
        assert_eq!(s.abs_sum(), 7.0);
        assert!(s.est_error() > 0.0);
    }
}
