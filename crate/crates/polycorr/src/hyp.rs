//! Terminating generalized hypergeometric series and the two series
//! transforms used by the correlation closed forms.
//!
//! A series here is always a finite sum: some upper parameter is a
//! non-positive integer −K and summation stops at k = K. Lower-parameter
//! poles are legal as long as they sit beyond the termination index
//! (termination-before-pole); this is what resolves forms whose printed
//! lower parameter is 1−m at m = 1.

use crate::error::{Error, Result};
use crate::gamma::pochhammer;
use crate::kahan::NeumaierSum;
use crate::real::Real;

/// A terminating pFq specification: upper/lower parameter lists, argument
/// and the termination index K (the series is Σ_{k=0}^{K}).
#[derive(Debug, Clone, PartialEq)]
pub struct HypSeries<T = f64> {
    upper: Vec<T>,
    lower: Vec<T>,
    argument: T,
    k_end: u32,
}

/// Smallest j ≥ 0 with some upper parameter equal to −j, if any.
fn auto_termination<T: Real>(upper: &[T]) -> Option<u32> {
    let mut k: Option<u32> = None;
    for &u in upper {
        if u.is_nonpositive_int() {
            if let Some(j) = (-u).to_u32() {
                k = Some(k.map_or(j, |cur| cur.min(j)));
            }
        }
    }
    k
}

/// Rejects lower parameters that are non-positive integers −M with
/// M ≤ K−1: those hit a zero denominator before the series terminates.
fn check_lower<T: Real>(lower: &[T], k_end: u32) -> Result<()> {
    for &l in lower {
        if l.is_nonpositive_int() {
            let m = (-l).to_u32().unwrap_or(u32::MAX);
            if m < k_end {
                return Err(Error::IllPosedSeries(format!(
                    "lower parameter {l} hits a pole at index {} before termination at {k_end}",
                    m + 1
                )));
            }
        }
    }
    Ok(())
}

impl<T: Real> HypSeries<T> {
    /// Builds a series with automatic termination: requires at least one
    /// non-positive-integer upper parameter.
    pub fn auto(upper: Vec<T>, lower: Vec<T>, argument: T) -> Result<Self> {
        let k_end = auto_termination(&upper).ok_or_else(|| {
            Error::NotTerminating(format!("no non-positive integer in upper {upper:?}"))
        })?;
        check_lower(&lower, k_end)?;
        Ok(Self {
            upper,
            lower,
            argument,
            k_end,
        })
    }

    /// Builds a series with an explicit termination index.
    pub fn with_termination(upper: Vec<T>, lower: Vec<T>, argument: T, k_end: u32) -> Result<Self> {
        check_lower(&lower, k_end)?;
        Ok(Self {
            upper,
            lower,
            argument,
            k_end,
        })
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn argument(&self) -> T {
        self.argument
    }

    pub fn termination(&self) -> u32 {
        self.k_end
    }

    /// Saalschütz balance: 1 + Σ upper = Σ lower (to roundoff).
    pub fn is_saalschutzian(&self) -> bool {
        let up = NeumaierSum::sum_iter(self.upper.iter().copied());
        let lo = NeumaierSum::sum_iter(self.lower.iter().copied());
        let scale = T::one() + up.abs() + lo.abs();
        (T::one() + up - lo).abs() <= T::of(64.0) * T::epsilon() * scale
    }

    /// Evaluates the terminating sum with compensated accumulation,
    /// returning the value and an a-posteriori roundoff estimate.
    ///
    /// Terms are updated by ratios (term ×= ∏(u+k)/∏(l+k) · x/(k+1)), never
    /// by fresh Pochhammer products, so large parameters do not overflow.
    pub fn eval_with_est(&self) -> (T, T) {
        let mut acc = NeumaierSum::new();
        let mut term = T::one();
        acc.add(term);
        for k in 0..self.k_end {
            let kk = T::of_usize(k as usize);
            for &u in &self.upper {
                term *= u + kk;
            }
            for &l in &self.lower {
                term /= l + kk;
            }
            term *= self.argument / (kk + T::one());
            acc.add(term);
        }
        (acc.value(), acc.est_error())
    }

    /// Value of the terminating sum; exact 1 when K = 0.
    pub fn eval(&self) -> T {
        self.eval_with_est().0
    }

    /// Series reversal: for F with upper {−n, a₁…a_p}, lower {b₁…b_p} and
    /// argument x ≠ 0, returns (prefactor, reversed) with
    /// prefactor = ∏(aᵢ)ₙ/∏(bᵢ)ₙ · (−x)ⁿ, reversed upper {−n, 1−bᵢ−n},
    /// lower {1−aᵢ−n}, argument 1/x, such that F = prefactor · reversed.
    pub fn lemma1_reverse(&self) -> Result<(T, HypSeries<T>)> {
        let n = self.k_end;
        if self.argument == T::zero() {
            return Err(Error::TransformInapplicable(
                "series reversal needs a nonzero argument".into(),
            ));
        }
        let neg_n = -T::of_usize(n as usize);
        let pos = self.upper.iter().position(|&u| u == neg_n).ok_or_else(|| {
            Error::TransformInapplicable(format!(
                "no upper parameter equal to -{n} (the termination index)"
            ))
        })?;
        let others: Vec<T> = self
            .upper
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, &u)| u)
            .collect();

        let mut prefactor = (-self.argument).powi(n as i32);
        for &a in &others {
            prefactor *= pochhammer(a, n);
        }
        for &b in &self.lower {
            let pb = pochhammer(b, n);
            if pb == T::zero() {
                return Err(Error::TransformInapplicable(format!(
                    "(b)_n = 0 for lower parameter {b}"
                )));
            }
            prefactor /= pb;
        }

        let shift = T::one() - T::of_usize(n as usize);
        let mut upper = vec![neg_n];
        upper.extend(self.lower.iter().map(|&b| shift - b));
        let lower: Vec<T> = others.iter().map(|&a| shift - a).collect();
        let reversed = HypSeries::auto(upper, lower, self.argument.recip())?;
        Ok((prefactor, reversed))
    }
}

/// Result of the negative-integer-lower-parameter shift (the regularized
/// transform): 1/Γ(−M) · F(upper; {−M, b₂…}; x) = prefactor · F(shifted).
///
/// The shifted parameter lists are exposed raw because the left side is not
/// itself a valid terminating series; [`Lemma2Shift::series`] builds the
/// shifted series when it terminates.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma2Shift<T = f64> {
    pub prefactor: T,
    pub upper: Vec<T>,
    pub lower: Vec<T>,
    pub argument: T,
}

impl<T: Real> Lemma2Shift<T> {
    /// The shifted series as a terminating spec (errors if it does not
    /// terminate or is ill-posed).
    pub fn series(&self) -> Result<HypSeries<T>> {
        HypSeries::auto(self.upper.clone(), self.lower.clone(), self.argument)
    }

    /// prefactor × shifted-series value.
    pub fn eval(&self) -> Result<T> {
        Ok(self.prefactor * self.series()?.eval())
    }
}

/// Shift transform for a pFq whose lower parameters contain exactly one
/// non-positive integer −M.
///
/// prefactor = x^{M+1} ∏(aᵢ)_{M+1} / (Γ(M+2) ∏(bᵢ)_{M+1}); the shifted
/// series has every upper parameter + (M+1) and lower {M+2, bᵢ+M+1}, same
/// argument. The identity is in the regularized sense 1/Γ(−M) · F.
pub fn lemma2_shift<T: Real>(upper: &[T], lower: &[T], argument: T) -> Result<Lemma2Shift<T>> {
    let mut pole_idx: Option<usize> = None;
    for (i, &l) in lower.iter().enumerate() {
        if l.is_nonpositive_int() {
            if pole_idx.is_some() {
                return Err(Error::TransformInapplicable(
                    "more than one non-positive-integer lower parameter".into(),
                ));
            }
            pole_idx = Some(i);
        }
    }
    let pole_idx = pole_idx.ok_or_else(|| {
        Error::TransformInapplicable("no non-positive-integer lower parameter".into())
    })?;
    let m_big = (-lower[pole_idx]).to_u32().ok_or_else(|| {
        Error::TransformInapplicable("lower parameter pole index out of range".into())
    })?;
    let rest: Vec<T> = lower
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pole_idx)
        .map(|(_, &b)| b)
        .collect();

    let shift = T::of_usize(m_big as usize + 1);
    let mut prefactor = argument.powi(m_big as i32 + 1);
    for &a in upper {
        prefactor *= pochhammer(a, m_big + 1);
    }
    // Γ(M+2) = (M+1)!
    prefactor /= pochhammer(T::one(), m_big + 1);
    for &b in &rest {
        let pb = pochhammer(b, m_big + 1);
        if pb == T::zero() {
            return Err(Error::TransformInapplicable(format!(
                "(b)_(M+1) = 0 for lower parameter {b}"
            )));
        }
        prefactor /= pb;
    }

    let new_upper: Vec<T> = upper.iter().map(|&a| a + shift).collect();
    let mut new_lower = vec![shift + T::one()];
    new_lower.extend(rest.iter().map(|&b| b + shift));
    Ok(Lemma2Shift {
        prefactor,
        upper: new_upper,
        lower: new_lower,
        argument,
    })
}
