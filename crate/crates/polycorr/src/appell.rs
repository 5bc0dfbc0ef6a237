//! Terminating Appell F₂ double series and its symmetric-argument
//! reductions.
//!
//! F₂(a; b₁,b₂; c₁,c₂; x,y) = Σ (a)_{j+k} (b₁)_j (b₂)_k /
//! ((c₁)_j (c₂)_k j! k!) x^j y^k, terminating because a = −m: the double
//! sum runs over j + k ≤ m. The |x|+|y| < 1 convergence condition of the
//! infinite series is irrelevant here and is not enforced.

use crate::error::{Error, Result};

use crate::hyp::HypSeries;
use crate::kahan::NeumaierSum;
use crate::real::Real;

/// A terminating Appell F₂ specification (first parameter a = −m).
#[derive(Debug, Clone, PartialEq)]
pub struct AppellF2<T = f64> {
    a: T,
    m: u32,
    pub b1: T,
    pub b2: T,
    pub c1: T,
    pub c2: T,
    pub x: T,
    pub y: T,
}

impl<T: Real> AppellF2<T> {
    /// Builds the spec; `a` must be a non-positive integer −m, and the
    /// lower parameters must not hit a pole inside the summed range.
    pub fn new(a: T, b1: T, b2: T, c1: T, c2: T, x: T, y: T) -> Result<Self> {
        if !a.is_nonpositive_int() {
            return Err(Error::NotTerminating(format!(
                "Appell F2 first parameter {a} is not a non-positive integer"
            )));
        }
        let m = (-a)
            .to_u32()
            .ok_or_else(|| Error::NotTerminating(format!("termination index -({a}) too large")))?;
        for &c in &[c1, c2] {
            if c.is_nonpositive_int() {
                let pole = (-c).to_u32().unwrap_or(u32::MAX);
                if pole < m {
                    return Err(Error::IllPosedSeries(format!(
                        "lower parameter {c} hits a pole inside the j+k <= {m} range"
                    )));
                }
            }
        }
        Ok(Self {
            a,
            m,
            b1,
            b2,
            c1,
            c2,
            x,
            y,
        })
    }

    pub fn a(&self) -> T {
        self.a
    }

    /// Termination index m (a = −m).
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Saalschütz balance of the F₂ parameters: 1 + a + b₁ + b₂ = c₁ + c₂.
    pub fn is_saalschutzian(&self) -> bool {
        let up = self.a + self.b1 + self.b2;
        let lo = self.c1 + self.c2;
        let scale = T::one() + up.abs() + lo.abs();
        (T::one() + up - lo).abs() <= T::of(64.0) * T::epsilon() * scale
    }

    /// The finite double sum with compensated accumulation; returns the
    /// value and an a-posteriori roundoff estimate.
    pub fn eval_with_est(&self) -> (T, T) {
        let m = self.m;
        let mut acc = NeumaierSum::new();
        // t_j = (a)_j (b1)_j / ((c1)_j j!) x^j, advanced by ratio updates
        let mut tj = T::one();
        for j in 0..=m {
            let jj = T::of_usize(j as usize);
            // inner: t_{j,k} = t_j (a+j)_k (b2)_k / ((c2)_k k!) y^k
            let mut t = tj;
            acc.add(t);
            for k in 0..(m - j) {
                let kk = T::of_usize(k as usize);
                t *= (self.a + jj + kk) * (self.b2 + kk) / ((self.c2 + kk) * (kk + T::one()))
                    * self.y;
                acc.add(t);
            }
            if j < m {
                tj *= (self.a + jj) * (self.b1 + jj) / ((self.c1 + jj) * (jj + T::one())) * self.x;
            }
        }
        (acc.value(), acc.est_error())
    }

    pub fn eval(&self) -> T {
        self.eval_with_est().0
    }

    /// Single-series expansion of the symmetric case F₂(…; −x, x):
    /// Σ_k (−m)_k (b₂)_k / (c₂)_k · x^k/k! · ₃F₂(−k, b₁, 1−c₂−k; c₁, 1−b₂−k; 1).
    ///
    /// Requires the argument pattern x = −y.
    pub fn symmetric_single_sum(&self) -> Result<T> {
        if self.x != -self.y {
            return Err(Error::TransformInapplicable(
                "symmetric expansion needs arguments (-x, x)".into(),
            ));
        }
        let x = self.y;
        let one = T::one();
        let mut acc = NeumaierSum::new();
        let mut outer = T::one(); // (-m)_k (b2)_k / ((c2)_k k!) x^k
        for k in 0..=self.m {
            let kk = T::of_usize(k as usize);
            let inner = HypSeries::with_termination(
                vec![-kk, self.b1, one - self.c2 - kk],
                vec![self.c1, one - self.b2 - kk],
                one,
                k,
            )?;
            acc.add(outer * inner.eval());
            outer *= (self.a + kk) * (self.b2 + kk) / ((self.c2 + kk) * (kk + one)) * x;
        }
        Ok(acc.value())
    }

    /// Reduction of the special pattern F₂(a; b₁,b₂; 2b₁,2b₂; −x, x) to a
    /// single ₄F₃ with argument x²:
    /// upper {a/2, (a+1)/2, (b₁+b₂)/2, (b₁+b₂+1)/2},
    /// lower {b₁+1/2, b₂+1/2, b₁+b₂}.
    ///
    /// Errors when the spec does not match the pattern.
    pub fn symmetric_to_4f3(&self) -> Result<HypSeries<T>> {
        let two = T::of(2.0);
        if self.x != -self.y || self.c1 != two * self.b1 || self.c2 != two * self.b2 {
            return Err(Error::TransformInapplicable(
                "4F3 reduction needs lower parameters (2b1, 2b2) and arguments (-x, x)".into(),
            ));
        }
        let x = self.y;
        let half = T::of(0.5);
        let s = self.b1 + self.b2;
        HypSeries::auto(
            vec![
                self.a / two,
                (self.a + T::one()) / two,
                s / two,
                (s + T::one()) / two,
            ],
            vec![self.b1 + half, self.b2 + half, s],
            x * x,
        )
    }
}
