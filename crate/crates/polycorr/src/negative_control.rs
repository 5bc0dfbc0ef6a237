//! Deliberately wrong evaluator variants used as negative controls.
//!
//! Each function differs from the shipped closed form by exactly one
//! sign or one Pochhammer/Γ index. The verification suites must flag every
//! one of them; they exist only to prove the test harness has teeth and
//! are never called by the real evaluators.

use crate::error::Result;
use crate::gamma::gamma_ratio;
use crate::kahan::NeumaierSum;
use crate::real::Real;

/// The three documented single-token mutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// ChebyshevT coefficient sum with Γ(n+1+k) → Γ(n+2+k).
    ChebyshevTGammaIndex,
    /// Hermite closed form with (m+1)ₙ → (m)ₙ.
    HermitePochhammerIndex,
    /// Laguerre closed form with the overall sign flipped.
    LaguerreSign,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::ChebyshevTGammaIndex,
        Mutation::HermitePochhammerIndex,
        Mutation::LaguerreSign,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Mutation::ChebyshevTGammaIndex => "chebyshev-t-gamma-index",
            Mutation::HermitePochhammerIndex => "hermite-pochhammer-index",
            Mutation::LaguerreSign => "laguerre-sign",
        }
    }

    pub fn parse(s: &str) -> Option<Mutation> {
        Mutation::ALL.iter().copied().find(|m| m.name() == s)
    }
}

/// ChebyshevT R_{m,n}(y) with the Γ(n+1+k) denominator index off by one.
pub fn chebyshev_t_gamma_index<T: Real>(m: u32, n: u32, y: T) -> Result<T> {
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let mut acc = NeumaierSum::new();
    let mut k = 0;
    while 2 * k < m {
        let kf = T::of_usize(k as usize);
        let ratio = gamma_ratio(
            &[mf + nf - kf, mf - kf],
            // mutation: n+2+k instead of n+1+k
            &[nf + two + kf, mf + one - kf - kf, mf - kf - kf, kf + one],
        )?;
        acc.add(ratio * (two * y).powi((m - 2 * k) as i32));
        k += 1;
    }
    Ok(T::PI() * (nf + mf) / two * acc.value())
}

/// Hermite R_{m,n}(y) with (m)ₙ in place of (m+1)ₙ.
pub fn hermite_pochhammer_index<T: Real>(m: u32, n: u32, y: T) -> Result<T> {
    let pm = gamma_ratio(
        &[T::of_usize((m + n) as usize)],
        // mutation: Γ(m+n)/Γ(m) = (m)ₙ instead of (m+1)ₙ
        &[T::of_usize(m as usize)],
    )?;
    Ok(T::PI().sqrt() * T::of(2.0).powi((n + m) as i32) * pm * y.powi(m as i32))
}

/// Laguerre R_{m,n}(y) with the leading sign flipped.
pub fn laguerre_sign<T: Real>(alpha: T, m: u32, n: u32, y: T) -> Result<T> {
    Ok(-crate::corr::corr_laguerre(alpha, m, n, y)?)
}
