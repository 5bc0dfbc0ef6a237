//! Closed-form evaluation of the correlation function R_{m,n}(y).
//!
//! Every family has (at least) two equivalent representations:
//!
//! * a coefficient sum — the exact polynomial coefficients of R_{m,n} as
//!   a degree-m polynomial in y, evaluated by Horner/compensated sums.
//!   Stable for all y; the default.
//! * a hypergeometric form — a terminating ₄F₃ in 4/y² (Appell F₂ in ∓2/y
//!   for Jacobi, ₁F₁ in y for Laguerre, a single monomial for Hermite).
//!   The 4/y² argument explodes as y → 0 while the true value is a
//!   polynomial, so these are used only for |y| ≥ 2 and for cross-checks.
//!
//! Out-of-range terms in the coefficient sums are cut off by the
//! 1/Γ(non-positive integer) = 0 convention (see [`crate::gamma`]).
//!
//! m = 0 bypasses the closed forms entirely: R_{0,n}(y) = hₙ for every y,
//! because pₙ(x+y) − pₙ(x) has degree n−1 in x.

use crate::appell::AppellF2;
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::gamma::gamma_ratio;
use crate::hyp::HypSeries;
use crate::kahan::NeumaierSum;
use crate::real::Real;

/// |y| threshold above which the 1/y-argument hypergeometric forms are
/// preferred over the coefficient sums.
pub const Y_SWITCH: f64 = 2.0;

/// Which representation produced a [`CorrResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// Terminating hypergeometric (₄F₃ / F₂ / ₁F₁) form.
    HypForm,
    /// Polynomial coefficient sum evaluated at y.
    CoeffForm,
    /// Single monomial (Hermite).
    Monomial,
    /// m = 0 constant path (value is hₙ).
    NormConstant,
    /// Oracle-interpolated coefficients (degenerate-parameter fallback).
    OracleCoeffs,
}

impl Representation {
    pub fn name(&self) -> &'static str {
        match self {
            Representation::HypForm => "hyp_form",
            Representation::CoeffForm => "coeff_form",
            Representation::Monomial => "monomial",
            Representation::NormConstant => "norm_constant",
            Representation::OracleCoeffs => "oracle_coeffs",
        }
    }
}

/// The point at which R_{m,n}(y) is requested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationQuery<T = f64> {
    pub family: Family<T>,
    pub m: u32,
    pub n: u32,
    pub y: T,
}

/// A correlation value, the representation used and an a-posteriori
/// roundoff estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrResult<T = f64> {
    pub value: T,
    pub representation: Representation,
    pub est_error: T,
}

/// Exact coefficient list of R_{m,n} as a degree-m polynomial in y
/// (c₀…c_m; c₀ = 0 for m ≥ 1 by orthogonality).
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector<T = f64> {
    m: u32,
    coeffs: Vec<T>,
}

impl<T: Real> CoeffVector<T> {
    pub fn new(m: u32, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != (m + 1) as usize {
            return Err(Error::ParameterDomain(format!(
                "coefficient vector for degree {m} must have {} entries, got {}",
                m + 1,
                coeffs.len()
            )));
        }
        Ok(Self { m, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// c_j, the coefficient of y^j.
    pub fn coeff(&self, j: u32) -> T {
        self.coeffs[j as usize]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Σ c_j y^j with compensated accumulation.
    pub fn eval_with_est(&self, y: T) -> (T, T) {
        let mut acc = NeumaierSum::new();
        let mut pow = T::one();
        for &c in &self.coeffs {
            acc.add(c * pow);
            pow *= y;
        }
        (acc.value(), acc.est_error())
    }

    pub fn eval(&self, y: T) -> T {
        self.eval_with_est(y).0
    }
}

// ---------------------------------------------------------------------
// coefficient sums
// ---------------------------------------------------------------------

/// Shared shape of the even/odd coefficient sums: coefficient of
/// y^{m-2k} is scale · Γ-ratio(k) · 2^{m-2k} for k = 0..⌊(m-1)/2⌋.
fn even_odd_coeffs<T: Real, F>(m: u32, scale: T, term: F) -> Result<Vec<T>>
where
    F: Fn(u32) -> Result<T>,
{
    let mut coeffs = vec![T::zero(); (m + 1) as usize];
    if m == 0 {
        return Ok(coeffs);
    }
    let mut k = 0;
    while 2 * k < m {
        let power = m - 2 * k;
        let ratio = term(k)?;
        coeffs[power as usize] = scale * ratio * T::of(2.0).powi(power as i32);
        k += 1;
    }
    Ok(coeffs)
}

fn chebyshev_t_coeffs<T: Real>(m: u32, n: u32) -> Result<CoeffVector<T>> {
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let scale = T::PI() * (nf + mf) / T::of(2.0);
    let coeffs = even_odd_coeffs(m, scale, |k| {
        let kf = T::of_usize(k as usize);
        gamma_ratio(
            &[mf + nf - kf, mf - kf],
            &[nf + one + kf, mf + one - kf - kf, mf - kf - kf, kf + one],
        )
    })?;
    CoeffVector::new(m, coeffs)
}

fn chebyshev_u_coeffs<T: Real>(m: u32, n: u32) -> Result<CoeffVector<T>> {
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let scale = T::PI() * (nf + one) / two;
    let coeffs = even_odd_coeffs(m, scale, |k| {
        let kf = T::of_usize(k as usize);
        gamma_ratio(
            &[mf + nf + one - kf, mf - kf],
            &[nf + two + kf, mf + one - kf - kf, mf - kf - kf, kf + one],
        )
    })?;
    CoeffVector::new(m, coeffs)
}

fn legendre_coeffs<T: Real>(m: u32, n: u32) -> Result<CoeffVector<T>> {
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let half = T::of(0.5);
    let coeffs = even_odd_coeffs(m, T::one(), |k| {
        let kf = T::of_usize(k as usize);
        gamma_ratio(
            &[nf + mf + half - kf, mf - kf],
            &[
                nf + one + half + kf,
                mf + one - kf - kf,
                mf - kf - kf,
                kf + one,
            ],
        )
    })?;
    CoeffVector::new(m, coeffs)
}

fn gegenbauer_coeffs<T: Real>(alpha: T, m: u32, n: u32) -> Result<CoeffVector<T>> {
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let scale = T::PI() * two.powf(one - two * alpha);
    let coeffs = even_odd_coeffs(m, scale, |k| {
        let kf = T::of_usize(k as usize);
        gamma_ratio(
            &[nf + two * alpha, mf + nf + alpha - kf, mf - kf],
            &[
                nf + one,
                alpha,
                alpha,
                nf + alpha + one + kf,
                mf + one - kf - kf,
                mf - kf - kf,
                kf + one,
            ],
        )
    })?;
    CoeffVector::new(m, coeffs)
}

fn laguerre_coeffs<T: Real>(alpha: T, m: u32, n: u32) -> Result<CoeffVector<T>> {
    let nf = T::of_usize(n as usize);
    let one = T::one();
    let two = T::of(2.0);
    let mut coeffs = vec![T::zero(); (m + 1) as usize];
    if m >= 1 {
        // c_{k+1} = -Γ(n+1+α)/n! · (1-m)_k / ((2)_k k!)
        let mut t = -gamma_ratio(&[nf + one + alpha], &[nf + one])?;
        let one_minus_m = one - T::of_usize(m as usize);
        for k in 0..m {
            coeffs[(k + 1) as usize] = t;
            let kf = T::of_usize(k as usize);
            t *= (one_minus_m + kf) / ((two + kf) * (kf + one));
        }
    }
    CoeffVector::new(m, coeffs)
}

fn hermite_coeffs<T: Real>(m: u32, n: u32) -> Result<CoeffVector<T>> {
    let mut coeffs = vec![T::zero(); (m + 1) as usize];
    coeffs[m as usize] = hermite_leading(m, n)?;
    CoeffVector::new(m, coeffs)
}

/// 2^{n+m} √π (m+1)ₙ, the single Hermite coefficient.
fn hermite_leading<T: Real>(m: u32, n: u32) -> Result<T> {
    let pm = gamma_ratio(
        &[T::of_usize((m + n + 1) as usize)],
        &[T::of_usize((m + 1) as usize)],
    )?;
    Ok(T::PI().sqrt() * T::of(2.0).powi((n + m) as i32) * pm)
}

fn jacobi_coeffs<T: Real>(alpha: T, beta: T, m: u32, n: u32) -> Result<CoeffVector<T>> {
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let s = alpha + beta;

    let scale = two.powf(s + one)
        * gamma_ratio(
            &[alpha + nf + one, beta + nf + one, s + two * (mf + nf) + one],
            &[s + two * nf + two, s + mf + nf + one, nf + one, mf + one],
        )?;

    // The j-alternating inner sums cancel up to ~13 digits near m = 12 and
    // are equally sensitive to rounding in the derived parameters (the f64
    // sum α+β alone perturbs the low coefficients at the 1e-4 level), so
    // the parameters and Pochhammer tables are carried in double-double.
    let s_dd = Dd::sum2(alpha, beta);
    let b1 = Dd::sum2(beta, nf + one);
    let b2 = Dd::sum2(-beta, -(mf + nf));
    let c1 = s_dd.add_scalar(two * nf + two);
    let c2 = s_dd.neg().add_scalar(-two * (mf + nf));

    let msize = m as usize;
    let mut pb1 = vec![Dd::one(); msize + 1];
    let mut pb2 = vec![Dd::one(); msize + 1];
    let mut pc1 = vec![Dd::one(); msize + 1];
    let mut pc2 = vec![Dd::one(); msize + 1];
    let mut fact = vec![Dd::one(); msize + 1];
    for i in 0..msize {
        let fi = T::of_usize(i);
        pb1[i + 1] = pb1[i].mul(b1.add_scalar(fi));
        pb2[i + 1] = pb2[i].mul(b2.add_scalar(fi));
        pc1[i + 1] = pc1[i].mul(c1.add_scalar(fi));
        pc2[i + 1] = pc2[i].mul(c2.add_scalar(fi));
        fact[i + 1] = fact[i].mul_scalar(fi + one);
    }

    // expand (y/2)^m F₂(…; -2/y, 2/y) in powers of y: the y^{m-s}
    // coefficient collects all j+k = s terms of the double sum
    let mut coeffs = vec![T::zero(); msize + 1];
    let mut poch_minus_m = T::one();
    for s_idx in 0..=msize {
        let mut inner = Dd::zero();
        for j in 0..=s_idx {
            let k = s_idx - j;
            let sign = if j % 2 == 0 { T::one() } else { -T::one() };
            let num = pb1[j].mul(pb2[k]).mul_scalar(sign);
            let den = pc1[j].mul(pc2[k]).mul(fact[j].mul(fact[k]));
            inner = inner.add(num.div(den));
        }
        coeffs[msize - s_idx] =
            scale * two.powi(s_idx as i32 - m as i32) * poch_minus_m * inner.value();
        poch_minus_m *= T::of_usize(s_idx) - mf;
    }
    if m >= 1 {
        // R_{m,n}(0) = ∫ pₙ pₙ₊ₘ w = 0 by orthogonality
        coeffs[0] = T::zero();
    }
    CoeffVector::new(m, coeffs)
}

/// Exact coefficient list of R_{m,n} as a degree-m polynomial in y.
pub fn coefficient_vector<T: Real>(family: &Family<T>, m: u32, n: u32) -> Result<CoeffVector<T>> {
    family.validate()?;
    if m == 0 {
        let h = family.norm_h(n)?;
        return CoeffVector::new(0, vec![h]);
    }
    match *family {
        Family::ChebyshevT => chebyshev_t_coeffs(m, n),
        Family::ChebyshevU => chebyshev_u_coeffs(m, n),
        Family::Legendre => legendre_coeffs(m, n),
        Family::Gegenbauer { alpha } => gegenbauer_coeffs(alpha, m, n),
        Family::Laguerre { alpha } => laguerre_coeffs(alpha, m, n),
        Family::Hermite => hermite_coeffs(m, n),
        Family::Jacobi { alpha, beta } => jacobi_coeffs(alpha, beta, m, n),
    }
}

// ---------------------------------------------------------------------
// hypergeometric forms
// ---------------------------------------------------------------------

/// The hypergeometric representation emitted for a query: prefactor times
/// a terminating series (or Appell F₂ for Jacobi).
#[derive(Debug, Clone, PartialEq)]
pub enum HypForm<T = f64> {
    Series { prefactor: T, series: HypSeries<T> },
    Appell { prefactor: T, f2: AppellF2<T> },
}

impl<T: Real> HypForm<T> {
    pub fn value_with_est(&self) -> (T, T) {
        match self {
            HypForm::Series { prefactor, series } => {
                let (v, e) = series.eval_with_est();
                let value = *prefactor * v;
                (
                    value,
                    prefactor.abs() * e + value.abs() * T::of(16.0) * T::epsilon(),
                )
            }
            HypForm::Appell { prefactor, f2 } => {
                let (v, e) = f2.eval_with_est();
                let value = *prefactor * v;
                (
                    value,
                    prefactor.abs() * e + value.abs() * T::of(16.0) * T::epsilon(),
                )
            }
        }
    }

    pub fn value(&self) -> T {
        self.value_with_est().0
    }

    /// Saalschütz balance of the emitted parameters.
    pub fn is_saalschutzian(&self) -> bool {
        match self {
            HypForm::Series { series, .. } => series.is_saalschutzian(),
            HypForm::Appell { f2, .. } => f2.is_saalschutzian(),
        }
    }
}

/// The shared ₄F₃ upper list {−m/2, (1−m)/2, (1−m)/2, (2−m)/2}.
fn quarter_uppers<T: Real>(m: u32) -> Vec<T> {
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    vec![
        -mf / two,
        (one - mf) / two,
        (one - mf) / two,
        (two - mf) / two,
    ]
}

fn require_m_ge_1(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::ParameterDomain(
            "hypergeometric closed forms require m >= 1 (m = 0 is the norm-constant path)".into(),
        ));
    }
    Ok(())
}

fn require_y_nonzero<T: Real>(y: T) -> Result<()> {
    if y == T::zero() {
        return Err(Error::ParameterDomain(
            "1/y-argument hypergeometric forms require y != 0".into(),
        ));
    }
    Ok(())
}

fn chebyshev_t_hyp<T: Real>(m: u32, n: u32, y: T) -> Result<HypForm<T>> {
    require_m_ge_1(m)?;
    require_y_nonzero(y)?;
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let prefactor = T::PI()
        * gamma_ratio(&[mf + nf + one], &[mf + one, nf + one])?
        * two.powi(m as i32 - 1)
        * y.powi(m as i32);
    let series = HypSeries::auto(
        quarter_uppers(m),
        vec![one - mf, one - mf - nf, nf + one],
        T::of(4.0) / (y * y),
    )?;
    Ok(HypForm::Series { prefactor, series })
}

fn gegenbauer_hyp<T: Real>(alpha: T, m: u32, n: u32, y: T) -> Result<HypForm<T>> {
    require_m_ge_1(m)?;
    require_y_nonzero(y)?;
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let prefactor = T::PI()
        * two.powf(one - two * alpha + mf)
        * gamma_ratio(
            &[two * alpha + nf, alpha + mf + nf],
            &[alpha, alpha, alpha + nf + one, nf + one, mf + one],
        )?
        * y.powi(m as i32);
    let series = HypSeries::auto(
        quarter_uppers(m),
        vec![one - mf, one - mf - nf - alpha, nf + alpha + one],
        T::of(4.0) / (y * y),
    )?;
    Ok(HypForm::Series { prefactor, series })
}

fn legendre_hyp<T: Real>(m: u32, n: u32, y: T) -> Result<HypForm<T>> {
    require_m_ge_1(m)?;
    require_y_nonzero(y)?;
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let half = T::of(0.5);
    let prefactor = gamma_ratio(&[mf + nf + half], &[mf + one, nf + one + half])?
        * (T::of(2.0) * y).powi(m as i32);
    let series = HypSeries::auto(
        quarter_uppers(m),
        vec![one - mf, half - mf - nf, nf + one + half],
        T::of(4.0) / (y * y),
    )?;
    Ok(HypForm::Series { prefactor, series })
}

fn jacobi_appell<T: Real>(alpha: T, beta: T, m: u32, n: u32, y: T) -> Result<HypForm<T>> {
    require_m_ge_1(m)?;
    require_y_nonzero(y)?;
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let s = alpha + beta;
    let prefactor = two.powf(s + one)
        * gamma_ratio(
            &[alpha + nf + one, beta + nf + one, s + two * (mf + nf) + one],
            &[s + two * nf + two, s + mf + nf + one, nf + one, mf + one],
        )?
        * (y / two).powi(m as i32);
    let f2 = AppellF2::new(
        -mf,
        beta + nf + one,
        -beta - mf - nf,
        s + two * nf + two,
        -s - two * (mf + nf),
        -two / y,
        two / y,
    )?;
    Ok(HypForm::Appell { prefactor, f2 })
}

fn laguerre_hyp<T: Real>(alpha: T, m: u32, n: u32, y: T) -> Result<HypForm<T>> {
    require_m_ge_1(m)?;
    let nf = T::of_usize(n as usize);
    let one = T::one();
    let prefactor = -gamma_ratio(&[nf + one + alpha], &[nf + one])? * y;
    let series = HypSeries::auto(vec![one - T::of_usize(m as usize)], vec![T::of(2.0)], y)?;
    Ok(HypForm::Series { prefactor, series })
}

/// The hypergeometric representation for a family (m ≥ 1; y ≠ 0 where the
/// argument is 1/y-based). Hermite has none — its closed form is a single
/// monomial.
pub fn hyp_form<T: Real>(family: &Family<T>, m: u32, n: u32, y: T) -> Result<HypForm<T>> {
    family.validate()?;
    match *family {
        Family::ChebyshevT => chebyshev_t_hyp(m, n, y),
        Family::ChebyshevU => gegenbauer_hyp(T::one(), m, n, y),
        Family::Legendre => legendre_hyp(m, n, y),
        Family::Gegenbauer { alpha } => gegenbauer_hyp(alpha, m, n, y),
        Family::Jacobi { alpha, beta } => jacobi_appell(alpha, beta, m, n, y),
        Family::Laguerre { alpha } => laguerre_hyp(alpha, m, n, y),
        Family::Hermite => Err(Error::TransformInapplicable(
            "hermite R_{m,n} is a single monomial, not a hypergeometric form".into(),
        )),
    }
}

// ---------------------------------------------------------------------
// per-family correlation values
// ---------------------------------------------------------------------

fn policy_value<T: Real>(
    family: &Family<T>,
    m: u32,
    n: u32,
    y: T,
) -> Result<(T, Representation, T)> {
    if y.abs() >= T::of(Y_SWITCH) {
        let (v, e) = hyp_form(family, m, n, y)?.value_with_est();
        Ok((v, Representation::HypForm, e))
    } else {
        let (v, e) = coefficient_vector(family, m, n)?.eval_with_est(y);
        Ok((v, Representation::CoeffForm, e))
    }
}

/// ChebyshevT R_{m,n}(y), m ≥ 1 (coefficient sum below |y| = 2, ₄F₃ above).
pub fn corr_chebyshev_t<T: Real>(m: u32, n: u32, y: T) -> Result<T> {
    require_m_ge_1(m)?;
    Ok(policy_value(&Family::ChebyshevT, m, n, y)?.0)
}

/// ChebyshevU R_{m,n}(y), m ≥ 1.
pub fn corr_chebyshev_u<T: Real>(m: u32, n: u32, y: T) -> Result<T> {
    require_m_ge_1(m)?;
    Ok(policy_value(&Family::ChebyshevU, m, n, y)?.0)
}

/// Legendre R_{m,n}(y), m ≥ 1.
pub fn corr_legendre<T: Real>(m: u32, n: u32, y: T) -> Result<T> {
    require_m_ge_1(m)?;
    Ok(policy_value(&Family::Legendre, m, n, y)?.0)
}

/// Gegenbauer R_{m,n}(y), m ≥ 1, α > −1/2, α ≠ 0.
pub fn corr_gegenbauer<T: Real>(alpha: T, m: u32, n: u32, y: T) -> Result<T> {
    require_m_ge_1(m)?;
    Ok(policy_value(&Family::gegenbauer(alpha)?, m, n, y)?.0)
}

/// Jacobi R_{m,n}(y) through the Appell-F₂ theorem form (m ≥ 1, y ≠ 0).
pub fn corr_jacobi_f2<T: Real>(alpha: T, beta: T, m: u32, n: u32, y: T) -> Result<T> {
    Family::jacobi(alpha, beta)?;
    Ok(jacobi_appell(alpha, beta, m, n, y)?.value())
}

/// Laguerre R_{m,n}(y) = −Γ(n+1+α)/n! · y · ₁F₁(1−m; 2; y), m ≥ 1,
/// evaluated as the terminating coefficient sum.
pub fn corr_laguerre<T: Real>(alpha: T, m: u32, n: u32, y: T) -> Result<T> {
    require_m_ge_1(m)?;
    let fam = Family::laguerre(alpha)?;
    Ok(coefficient_vector(&fam, m, n)?.eval(y))
}

/// Hermite R_{m,n}(y) = 2^{n+m} √π (m+1)ₙ y^m (valid for all m ≥ 0).
pub fn corr_hermite<T: Real>(m: u32, n: u32, y: T) -> Result<T> {
    Ok(hermite_leading::<T>(m, n)? * y.powi(m as i32))
}

/// Reversed-summation Gegenbauer forms: even m uses lower {3/2, 3/2, 2},
/// odd m uses lower {1/2, 1, 3/2}, both with argument y²/4.
pub fn corr_gegenbauer_reversed<T: Real>(alpha: T, m: u32, n: u32, y: T) -> Result<T> {
    require_m_ge_1(m)?;
    Family::gegenbauer(alpha)?;
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let half = T::of(0.5);
    let arg = y * y / T::of(4.0);
    let base = T::PI() * gamma_ratio(&[nf + two * alpha], &[alpha, alpha, nf + one])?;
    if m % 2 == 0 {
        let prefactor = base * two.powf(-two * alpha) * mf * (mf + two * nf + two * alpha) * y * y;
        let series = HypSeries::auto(
            vec![
                (two - mf) / two,
                (two + mf) / two,
                (two - mf) / two - nf - alpha,
                (two + mf) / two + nf + alpha,
            ],
            vec![one + half, one + half, two],
            arg,
        )?;
        Ok(prefactor * series.eval())
    } else {
        let prefactor = base * two.powf(two - two * alpha) * y;
        let series = HypSeries::auto(
            vec![
                (one - mf) / two,
                (one + mf) / two,
                (one - mf) / two - nf - alpha,
                (one + mf) / two + nf + alpha,
            ],
            vec![half, one, one + half],
            arg,
        )?;
        Ok(prefactor * series.eval())
    }
}

/// Reversed-summation ChebyshevT forms (companions of the Gegenbauer
/// ones with the α-dependence collapsed); test support.
pub fn chebyshev_t_reversed<T: Real>(m: u32, n: u32, y: T) -> Result<T> {
    require_m_ge_1(m)?;
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let half = T::of(0.5);
    let arg = y * y / T::of(4.0);
    if m % 2 == 0 {
        let prefactor = T::PI() * mf * (mf + nf) * (mf + two * nf) * arg;
        let series = HypSeries::auto(
            vec![
                (two - mf) / two,
                (two + mf) / two,
                (two - mf) / two - nf,
                (two + mf) / two + nf,
            ],
            vec![one + half, one + half, two],
            arg,
        )?;
        Ok(prefactor * series.eval())
    } else {
        let prefactor = T::PI() * (mf + nf) * y;
        let series = HypSeries::auto(
            vec![
                (one - mf) / two,
                (one + mf) / two,
                (one - mf) / two - nf,
                (one + mf) / two + nf,
            ],
            vec![half, one, one + half],
            arg,
        )?;
        Ok(prefactor * series.eval())
    }
}

/// The four equivalent Legendre forms (hyp, Pochhammer-prefactor, binomial,
/// Γ-ratio sum); test support. All agree with [`corr_legendre`].
pub fn legendre_form_variants<T: Real>(m: u32, n: u32, y: T) -> Result<[T; 4]> {
    require_m_ge_1(m)?;
    require_y_nonzero(y)?;
    let nf = T::of_usize(n as usize);
    let mf = T::of_usize(m as usize);
    let one = T::one();
    let two = T::of(2.0);
    let half = T::of(0.5);

    let form1 = legendre_hyp(m, n, y)?.value();

    // 2 (2n+2)_{2m-1} / ((n+1)_m m!) (y/2)^m × the same ₄F₃
    let series = HypSeries::auto(
        quarter_uppers(m),
        vec![one - mf, half - mf - nf, nf + one + half],
        T::of(4.0) / (y * y),
    )?;
    let form2 =
        two * gamma_ratio(
            &[two * nf + two * mf + one, nf + one],
            &[two * nf + two, nf + mf + one, mf + one],
        )? * (y / two).powi(m as i32)
            * series.eval();

    // Σ C(n+m-1/2-k, n+1/2+k) C(m-1-k, k) (2y)^{m-2k}/(m-2k)
    let mut acc = NeumaierSum::new();
    let mut k = 0;
    while 2 * k < m {
        let kf = T::of_usize(k as usize);
        let binom1 = gamma_ratio(
            &[nf + mf + half - kf],
            &[nf + one + half + kf, mf - kf - kf],
        )?;
        let binom2 = gamma_ratio(&[mf - kf], &[kf + one, mf - kf - kf])?;
        acc.add(binom1 * binom2 / (mf - kf - kf) * (two * y).powi((m - 2 * k) as i32));
        k += 1;
    }
    let form3 = acc.value();

    let form4 = legendre_coeffs(m, n)?.eval(y);
    Ok([form1, form2, form3, form4])
}

// ---------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------

/// R_{m,n}(y) with the representation policy:
/// m = 0 → hₙ; Hermite → monomial; Laguerre → coefficient sum;
/// other families → coefficient sum for |y| < 2, hypergeometric form
/// otherwise. A Jacobi query whose F₂ lower parameters degenerate falls
/// back to oracle-interpolated coefficients, flagged in the representation.
pub fn corr<T: Real>(query: &CorrelationQuery<T>) -> Result<CorrResult<T>> {
    query.family.validate()?;
    let (m, n, y) = (query.m, query.n, query.y);
    if m == 0 {
        let h = query.family.norm_h(n)?;
        return Ok(CorrResult {
            value: h,
            representation: Representation::NormConstant,
            est_error: h.abs() * T::of(8.0) * T::epsilon(),
        });
    }
    match query.family {
        Family::Hermite => {
            let value = corr_hermite(m, n, y)?;
            Ok(CorrResult {
                value,
                representation: Representation::Monomial,
                est_error: value.abs() * T::of(8.0) * T::epsilon(),
            })
        }
        Family::Laguerre { .. } => {
            let (value, est_error) = coefficient_vector(&query.family, m, n)?.eval_with_est(y);
            Ok(CorrResult {
                value,
                representation: Representation::CoeffForm,
                est_error,
            })
        }
        Family::Jacobi { .. } if y.abs() >= T::of(Y_SWITCH) => {
            match hyp_form(&query.family, m, n, y) {
                Ok(form) => {
                    let (value, est_error) = form.value_with_est();
                    Ok(CorrResult {
                        value,
                        representation: Representation::HypForm,
                        est_error,
                    })
                }
                // degenerate F₂ lower parameter: oracle-interpolated
                // coefficients, flagged in the representation
                Err(Error::IllPosedSeries(_)) => {
                    let cv = crate::quad::oracle_coefficients(&query.family, m, n)?;
                    let (value, est_error) = cv.eval_with_est(y);
                    Ok(CorrResult {
                        value,
                        representation: Representation::OracleCoeffs,
                        est_error,
                    })
                }
                Err(e) => Err(e),
            }
        }
        _ => {
            let (value, representation, est_error) = policy_value(&query.family, m, n, y)?;
            Ok(CorrResult {
                value,
                representation,
                est_error,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::pochhammer;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn chebyshev_t_paper_fixtures() {
        // m=8, n=4: π(384y² + 20160y⁴ + 96768y⁶ + 63360y⁸)
        let cv = coefficient_vector(&Family::<f64>::ChebyshevT, 8, 4).unwrap();
        for (j, want) in [(2u32, 384.0), (4, 20160.0), (6, 96768.0), (8, 63360.0)] {
            assert_relative_eq!(cv.coeff(j), PI * want, max_relative = 1e-13);
        }
        for j in [0u32, 1, 3, 5, 7] {
            assert_eq!(cv.coeff(j), 0.0);
        }
        // m=9, n=4: π(13y + 6240y³ + 131040y⁵ + 384384y⁷ + 183040y⁹)
        let cv = coefficient_vector(&Family::<f64>::ChebyshevT, 9, 4).unwrap();
        for (j, want) in [
            (1u32, 13.0),
            (3, 6240.0),
            (5, 131040.0),
            (7, 384384.0),
            (9, 183040.0),
        ] {
            assert_relative_eq!(cv.coeff(j), PI * want, max_relative = 1e-13);
        }
        // single-term case: R_{1,0}(y) = πy
        assert_relative_eq!(
            corr_chebyshev_t(1, 0, 0.37).unwrap(),
            PI * 0.37,
            max_relative = 1e-14
        );
        // tabulated value at y=1
        assert_relative_eq!(
            corr_chebyshev_t(8, 4, 1.0).unwrap(),
            180672.0 * PI,
            max_relative = 1e-12
        );
    }

    #[test]
    fn chebyshev_u_paper_fixtures() {
        let cv = coefficient_vector(&Family::<f64>::ChebyshevU, 8, 4).unwrap();
        for (j, want) in [(2u32, 180.0), (4, 12000.0), (6, 73920.0), (8, 63360.0)] {
            assert_relative_eq!(cv.coeff(j), PI * want, max_relative = 1e-13);
        }
        let cv = coefficient_vector(&Family::<f64>::ChebyshevU, 9, 4).unwrap();
        for (j, want) in [
            (1u32, 5.0),
            (3, 3000.0),
            (5, 79200.0),
            (7, 295680.0),
            (9, 183040.0),
        ] {
            assert_relative_eq!(cv.coeff(j), PI * want, max_relative = 1e-13);
        }
        assert_relative_eq!(
            corr_chebyshev_u(1, 0, 0.8).unwrap(),
            PI * 0.8,
            max_relative = 1e-14
        );
    }

    #[test]
    fn legendre_paper_fixtures() {
        let cv = coefficient_vector(&Family::<f64>::Legendre, 8, 4).unwrap();
        for (j, want) in [
            (2u32, 68.0),
            (4, 8075.0 / 2.0),
            (6, 88179.0 / 4.0),
            (8, 1062347.0 / 64.0),
        ] {
            assert_relative_eq!(cv.coeff(j), want, max_relative = 1e-13);
        }
        // m=9, n=4; exact symbolic integration gives 26558675/576 for the
        // leading coefficient (the 26558675/64 seen in some references is
        // exactly 9x too large and contradicts the oracle)
        let cv = coefficient_vector(&Family::<f64>::Legendre, 9, 4).unwrap();
        for (j, want) in [
            (1u32, 2.0),
            (3, 3230.0 / 3.0),
            (5, 101745.0 / 4.0),
            (7, 676039.0 / 8.0),
            (9, 26558675.0 / 576.0),
        ] {
            assert_relative_eq!(cv.coeff(j), want, max_relative = 1e-13);
        }
        assert_relative_eq!(
            corr_legendre(1, 0, 1.3).unwrap(),
            2.0 * 1.3,
            max_relative = 1e-14
        );
    }

    #[test]
    fn legendre_variants_agree() {
        for &(m, n) in &[(1u32, 0u32), (2, 0), (4, 2), (5, 2), (9, 4)] {
            for &y in &[0.8, -1.3, 2.4] {
                let forms = legendre_form_variants(m, n, y).unwrap();
                let base = forms[3];
                for f in &forms {
                    assert_relative_eq!(f, &base, max_relative = 1e-11);
                }
            }
        }
    }

    #[test]
    fn hermite_closed_form() {
        let sqrt_pi = PI.sqrt();
        // R_{0,0} = √π; R_{2,1} = 24√π y²; R_{3,0}(-1) = -8√π
        assert_relative_eq!(
            corr_hermite(0, 0, 9.9).unwrap(),
            sqrt_pi,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            corr_hermite(2, 1, 0.5).unwrap(),
            24.0 * sqrt_pi * 0.25,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            corr_hermite(3, 0, -1.0).unwrap(),
            -8.0 * sqrt_pi,
            max_relative = 1e-13
        );
    }

    #[test]
    fn laguerre_closed_form() {
        // m=1: -Γ(n+1+α)/n! · y for any α, n
        let v = corr_laguerre(0.7, 1, 3, 0.9).unwrap();
        let expect = -gamma_ratio::<f64>(&[4.7], &[4.0]).unwrap() * 0.9;
        assert_relative_eq!(v, expect, max_relative = 1e-13);
        // α=0, m=2, n=0: (y²-2y)/2, brute-force moment integration oracle
        for &y in &[0.3, 1.7, -0.4] {
            assert_relative_eq!(
                corr_laguerre(0.0, 2, 0, y).unwrap(),
                (y * y - 2.0 * y) / 2.0,
                max_relative = 1e-13
            );
        }
        // m=7, n=4: |c_j| = {1/24,1/8,5/48,5/144,1/192,1/2880,1/120960}·Γ(5+α),
        // signs (-1)^j — the oracle-confirmed orientation of the closed form
        let magnitudes = [
            1.0 / 24.0,
            1.0 / 8.0,
            5.0 / 48.0,
            5.0 / 144.0,
            1.0 / 192.0,
            1.0 / 2880.0,
            1.0 / 120960.0,
        ];
        for alpha in [0.0, 1.0] {
            let g5a = gamma_ratio::<f64>(&[5.0 + alpha], &[]).unwrap();
            let cv = coefficient_vector(&Family::laguerre(alpha).unwrap(), 7, 4).unwrap();
            for (idx, &mag) in magnitudes.iter().enumerate() {
                let j = idx as u32 + 1;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                assert_relative_eq!(cv.coeff(j), sign * mag * g5a, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn laguerre_structure_independent_of_n_and_alpha() {
        // R·n!/Γ(n+1+α) depends only on (m, y)
        let y = 1.37;
        let base = corr_laguerre(0.0, 5, 0, y).unwrap();
        for &(alpha, n) in &[(0.5, 2u32), (2.5, 7), (-0.4, 0)] {
            let scale = gamma_ratio::<f64>(&[n as f64 + 1.0 + alpha], &[n as f64 + 1.0]).unwrap();
            let v = corr_laguerre(alpha, 5, n, y).unwrap();
            assert_relative_eq!(v / scale, base, max_relative = 1e-12);
        }
    }

    #[test]
    fn gegenbauer_representations_agree() {
        for &(alpha, m, n) in &[
            (0.75_f64, 5u32, 4u32),
            (0.6, 6, 3),
            (-0.3, 4, 2),
            (2.5, 9, 1),
        ] {
            for &y in &[0.6, 1.1, -0.9] {
                let coeff = gegenbauer_coeffs(alpha, m, n).unwrap().eval(y);
                let hyp = gegenbauer_hyp(alpha, m, n, y).unwrap().value();
                let rev = corr_gegenbauer_reversed(alpha, m, n, y).unwrap();
                assert_relative_eq!(hyp, coeff, max_relative = 1e-10);
                assert_relative_eq!(rev, coeff, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn gegenbauer_odd_reversed_matches_chebyshev_u_table() {
        // α = 1 is ChebyshevU: the odd-m reversed form at (9, 4) must hit
        // the tabulated π(5y + 3000y³ + 79200y⁵ + 295680y⁷ + 183040y⁹)
        let y = 0.3_f64;
        let expect = PI
            * (5.0 * y
                + 3000.0 * y.powi(3)
                + 79200.0 * y.powi(5)
                + 295680.0 * y.powi(7)
                + 183040.0 * y.powi(9));
        assert_relative_eq!(
            corr_gegenbauer_reversed(1.0, 9, 4, y).unwrap(),
            expect,
            max_relative = 1e-12
        );
    }

    #[test]
    fn jacobi_gegenbauer_connection() {
        // Cₙ^(λ) = Γ(2λ+n)Γ(λ+1/2)/(Γ(2λ)Γ(λ+n+1/2)) Pₙ^(λ-1/2,λ-1/2):
        // two connection factors turn S_J[α=β=λ-1/2] into S_G(λ)
        for &lambda in &[0.75_f64, 1.5, 2.2] {
            let a = lambda - 0.5;
            for &(m, n) in &[(1u32, 0u32), (4, 2), (7, 3)] {
                for &y in &[0.6, 2.4] {
                    let factor = |k: u32| {
                        gamma_ratio::<f64>(
                            &[2.0 * lambda + k as f64, lambda + 0.5],
                            &[2.0 * lambda, lambda + k as f64 + 0.5],
                        )
                        .unwrap()
                    };
                    let sj = corr_jacobi_f2(a, a, m, n, y).unwrap();
                    let sg = corr_gegenbauer(lambda, m, n, y).unwrap();
                    assert_relative_eq!(factor(n) * factor(n + m) * sj, sg, max_relative = 1e-10);
                }
            }
        }
    }

    #[test]
    fn gegenbauer_reversed_small_case() {
        // m=2, n=0 even form reduces to π 2^{2-2α}(1+α)Γ(2α)/Γ(α)² y²
        for &alpha in &[0.75_f64, 1.5, 0.3] {
            let y = 0.9;
            let expect = PI
                * 2.0_f64.powf(2.0 - 2.0 * alpha)
                * (1.0 + alpha)
                * gamma_ratio::<f64>(&[2.0 * alpha], &[alpha, alpha]).unwrap()
                * y
                * y;
            assert_relative_eq!(
                corr_gegenbauer_reversed(alpha, 2, 0, y).unwrap(),
                expect,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn chebyshev_t_reversed_agrees() {
        for &(m, n) in &[(8u32, 4u32), (9, 4), (2, 1), (1, 1), (5, 0)] {
            for &y in &[0.8, -0.45] {
                let a = chebyshev_t_reversed(m, n, y).unwrap();
                let b = chebyshev_t_coeffs::<f64>(m, n).unwrap().eval(y);
                assert_relative_eq!(a, b, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn specialization_chain() {
        // Gegenbauer(1) = ChebyshevU, Gegenbauer(1/2) = Legendre
        for m in 1..=8u32 {
            for n in [0u32, 2, 5] {
                for &y in &[0.25, 1.5] {
                    assert_relative_eq!(
                        corr_gegenbauer(1.0, m, n, y).unwrap(),
                        corr_chebyshev_u(m, n, y).unwrap(),
                        max_relative = 1e-11
                    );
                    assert_relative_eq!(
                        corr_gegenbauer(0.5, m, n, y).unwrap(),
                        corr_legendre(m, n, y).unwrap(),
                        max_relative = 1e-11
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_chebyshev_t_connection() {
        // S_T = 2^{4n+2m} Γ(n+1)²Γ(n+m+1)²/(Γ(2n+1)Γ(2n+2m+1)) S_J[-1/2,-1/2]
        for &(m, n) in &[(1u32, 0u32), (3, 2), (8, 4), (5, 1)] {
            for &y in &[0.7, 2.5] {
                let nf = n as f64;
                let mf = m as f64;
                let scale = 4.0_f64.powi((2 * n + m) as i32)
                    * gamma_ratio::<f64>(
                        &[nf + 1.0, nf + 1.0, nf + mf + 1.0, nf + mf + 1.0],
                        &[2.0 * nf + 1.0, 2.0 * (nf + mf) + 1.0],
                    )
                    .unwrap();
                let sj = corr_jacobi_f2(-0.5, -0.5, m, n, y).unwrap();
                assert_relative_eq!(
                    scale * sj,
                    corr_chebyshev_t(m, n, y).unwrap(),
                    max_relative = 1e-10
                );
            }
        }
    }

    #[test]
    fn jacobi_f2_against_frozen_oracle() {
        // mpmath: R_{3,2}(0.7) for α=0.3, β=1.2 = 21.7009999917237403
        let v = corr_jacobi_f2(0.3, 1.2, 3, 2, 0.7).unwrap();
        assert_relative_eq!(v, 21.7009999917237403, max_relative = 1e-11);
        // coefficient expansion agrees
        let cv = coefficient_vector(&Family::jacobi(0.3, 1.2).unwrap(), 3, 2).unwrap();
        assert_relative_eq!(cv.eval(0.7), 21.7009999917237403, max_relative = 1e-11);
    }

    #[test]
    fn dispatch_and_representations() {
        // m = 0 returns hₙ regardless of y
        let q = CorrelationQuery {
            family: Family::<f64>::Hermite,
            m: 0,
            n: 3,
            y: 7.7,
        };
        let r = corr(&q).unwrap();
        assert_eq!(r.representation, Representation::NormConstant);
        assert_relative_eq!(r.value, 48.0 * PI.sqrt(), max_relative = 1e-13);

        let r = corr(&CorrelationQuery {
            family: Family::<f64>::ChebyshevT,
            m: 8,
            n: 4,
            y: 1.0,
        })
        .unwrap();
        assert_eq!(r.representation, Representation::CoeffForm);
        assert_relative_eq!(r.value, 180672.0 * PI, max_relative = 1e-12);

        let r = corr(&CorrelationQuery {
            family: Family::<f64>::ChebyshevT,
            m: 8,
            n: 4,
            y: 2.5,
        })
        .unwrap();
        assert_eq!(r.representation, Representation::HypForm);

        let r = corr(&CorrelationQuery {
            family: Family::<f64>::Hermite,
            m: 2,
            n: 1,
            y: 1.0,
        })
        .unwrap();
        assert_eq!(r.representation, Representation::Monomial);
        assert!(r.est_error >= 0.0);

        // Legendre m=0, n=5 → 2/11
        let r = corr(&CorrelationQuery {
            family: Family::<f64>::Legendre,
            m: 0,
            n: 5,
            y: 3.0,
        })
        .unwrap();
        assert_relative_eq!(r.value, 2.0 / 11.0, max_relative = 1e-14);
    }

    #[test]
    fn parity() {
        let fams: Vec<Family<f64>> = vec![
            Family::Legendre,
            Family::ChebyshevT,
            Family::ChebyshevU,
            Family::gegenbauer(0.75).unwrap(),
            Family::jacobi(1.3, 1.3).unwrap(),
            Family::Hermite,
        ];
        for fam in &fams {
            for m in 1..=7u32 {
                for &y in &[0.6, 2.7] {
                    let plus = corr(&CorrelationQuery {
                        family: *fam,
                        m,
                        n: 3,
                        y,
                    })
                    .unwrap()
                    .value;
                    let minus = corr(&CorrelationQuery {
                        family: *fam,
                        m,
                        n: 3,
                        y: -y,
                    })
                    .unwrap()
                    .value;
                    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                    assert_relative_eq!(minus, sign * plus, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn coefficient_vector_shapes() {
        // Hermite: single nonzero c_m = 2^{n+m}√π(m+1)ₙ
        let cv = coefficient_vector(&Family::<f64>::Hermite, 3, 2).unwrap();
        assert_relative_eq!(
            cv.coeff(3),
            2.0_f64.powi(5) * PI.sqrt() * pochhammer(4.0, 2),
            max_relative = 1e-13
        );
        assert_eq!(cv.coeff(0), 0.0);
        assert_eq!(cv.coeff(1), 0.0);
        assert_eq!(cv.coeff(2), 0.0);
        // Legendre m=0: c₀ = h₅ = 2/11
        let cv = coefficient_vector(&Family::<f64>::Legendre, 0, 5).unwrap();
        assert_relative_eq!(cv.coeff(0), 2.0 / 11.0, max_relative = 1e-14);
        // symmetric families: off-parity coefficients are exactly zero
        let cv = coefficient_vector(&Family::<f64>::ChebyshevU, 8, 4).unwrap();
        for j in [1u32, 3, 5, 7] {
            assert_eq!(cv.coeff(j), 0.0);
        }
        assert!(cv.coeff(8) != 0.0);
    }

    #[test]
    fn saalschutz_balance_of_emitted_forms() {
        let fams: Vec<Family<f64>> = vec![
            Family::Legendre,
            Family::ChebyshevT,
            Family::ChebyshevU,
            Family::gegenbauer(0.75).unwrap(),
            Family::jacobi(0.3, 1.2).unwrap(),
        ];
        for fam in &fams {
            for m in 1..=9u32 {
                for n in [0u32, 4] {
                    let form = hyp_form(fam, m, n, 2.5).unwrap();
                    assert!(form.is_saalschutzian(), "{fam:?} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn hermite_addition_formula_reproduces_closed_form() {
        // Hₙ₊ₘ(x+y) = Σₖ C(n+m,k) Hₖ(x) (2y)^{n+m-k}; integrating term by
        // term against Hₙ w with quadrature leaves the k = n term
        let fam = Family::<f64>::Hermite;
        let (m, n, y) = (3u32, 2u32, 0.8_f64);
        let rule = crate::quad::QuadratureRule::gauss(&fam, (n + m + 2) as usize).unwrap();
        let mut total = 0.0;
        for k in 0..=(n + m) {
            let binom = gamma_ratio::<f64>(
                &[(n + m + 1) as f64],
                &[(k + 1) as f64, (n + m - k + 1) as f64],
            )
            .unwrap();
            let overlap =
                rule.integrate(|x| fam.eval_poly(n, x).unwrap() * fam.eval_poly(k, x).unwrap());
            total += binom * (2.0 * y).powi((n + m - k) as i32) * overlap;
        }
        assert_relative_eq!(total, corr_hermite(m, n, y).unwrap(), max_relative = 1e-12);
    }

    #[test]
    fn laguerre_addition_formula_reproduces_closed_form() {
        // L^{(α+β+1)}ₙ₊ₘ(x+y) = Σₖ L^{(α)}ₖ(x) L^{(β)}ₙ₊ₘ₋ₖ(y): integrating
        // against L^{(γ)}ₙ w_γ with γ = α+β+1 rebuilds R_{m,n}(y)
        let (alpha, beta) = (0.4_f64, 0.9_f64);
        let gamma_p = alpha + beta + 1.0;
        let fam_g = Family::laguerre(gamma_p).unwrap();
        let fam_a = Family::laguerre(alpha).unwrap();
        let fam_b = Family::laguerre(beta).unwrap();
        let (m, n, y) = (4u32, 2u32, 1.3_f64);
        let rule = crate::quad::QuadratureRule::gauss(&fam_g, (n + m + 2) as usize).unwrap();
        let mut total = 0.0;
        for k in 0..=(n + m) {
            let weight_y = fam_b.eval_poly(n + m - k, y).unwrap();
            let overlap =
                rule.integrate(|x| fam_g.eval_poly(n, x).unwrap() * fam_a.eval_poly(k, x).unwrap());
            total += weight_y * overlap;
        }
        assert_relative_eq!(
            total,
            corr_laguerre(gamma_p, m, n, y).unwrap(),
            max_relative = 1e-11
        );
    }

    #[test]
    fn preconditions() {
        assert!(corr_chebyshev_t::<f64>(0, 3, 0.5).is_err());
        assert!(corr_jacobi_f2::<f64>(0.3, 1.2, 2, 1, 0.0).is_err());
        assert!(corr_gegenbauer::<f64>(0.0, 2, 1, 0.5).is_err());
        assert!(corr_laguerre::<f64>(-1.5, 2, 1, 0.5).is_err());
    }
}
