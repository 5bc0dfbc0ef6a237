//! Log-gamma, sign-tracked gamma ratios and Pochhammer symbols.
//!
//! `ln_gamma_signed` is a Lanczos approximation (g = 607/128, 15
//! coefficients) with the reflection formula below 1/2. Reconstructed Γ is
//! accurate to better than 1e-13 relative over [-50, 170] in `f64`.
//!
//! `gamma_ratio` evaluates ∏Γ(nums)/∏Γ(dens) in log space with sign
//! tracking. A pole in a denominator makes the whole ratio exactly 0, the
//! `1/Γ(non-positive integer) = 0` convention that the coefficient sums of
//! the correlation forms rely on to cut off out-of-range terms.

use crate::error::{Error, Result};
use crate::real::Real;

const LANCZOS_G: f64 = 4.7421875; // 607/128

// Godfrey's 15-term coefficient set for g = 607/128.
const LANCZOS_COEFFS: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

/// sin(πx) via argument reduction, accurate near integer x.
fn sin_pi<T: Real>(x: T) -> T {
    let k = x.round();
    // exact by Sterbenz; |r| ≤ 1/2 keeps sin(π·) well conditioned
    let r = x - k;
    // parity of k is meaningless past 2^53, but such arguments are far
    // outside every documented accuracy window anyway
    let sign = if k.to_i64().unwrap_or(0).rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    };
    sign * (T::PI() * r).sin()
}

/// ln Γ for x > 1/2 (no reflection needed).
///
/// The dominant (x+1/2)·ln(t) term is split with an exact product so the
/// assembly stays near 1 ulp of the result; without this the plain sum
/// loses ~3 ulp and misses the 1e-13 Γ-reconstruction contract near the
/// top of the range.
fn ln_gamma_positive<T: Real>(x: T) -> T {
    let mut acc = T::of(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += T::of(c) / (x + T::of_usize(i));
    }
    let t = x + T::of(LANCZOS_G) + T::of(0.5);
    let half_ln_two_pi = T::of(0.918_938_533_204_672_74); // ln(2π)/2
    let a = x + T::of(0.5);
    // ln t = e·ln2 + ln m with m = t/2^e ∈ [1,2): the mantissa log carries
    // at most half an ulp of |ln m| ≤ ln 2, and e·ln2_hi is exact, so the
    // products below lose nothing that the compensation cannot recover
    let e = t.log2().floor().to_i32().unwrap_or(0);
    let m = t / T::of(2.0).powi(e);
    let ef = T::of(e as f64);
    let ln2_hi = T::of(0.693_147_180_369_123_816_49); // 20 trailing zero bits
    let ln2_lo = T::of(1.908_214_929_270_587_700_02e-10);
    let mut sum = crate::kahan::NeumaierSum::new();
    for &factor in &[ef * ln2_hi, m.ln()] {
        let p = a * factor;
        sum.add(p);
        sum.add(a.mul_add(factor, -p));
    }
    sum.add(a * ef * ln2_lo);
    sum.add(-t);
    sum.add(half_ln_two_pi);
    sum.add((acc / x).ln());
    sum.value()
}

/// ln|Γ(x)| together with the sign of Γ(x).
///
/// Errors with [`Error::GammaPole`] at non-positive integers.
pub fn ln_gamma_signed<T: Real>(x: T) -> Result<(T, T)> {
    if x.is_nonpositive_int() {
        return Err(Error::GammaPole(x.to_f64().unwrap_or(f64::NAN)));
    }
    if x >= T::of(0.5) {
        return Ok((ln_gamma_positive(x), T::one()));
    }
    // reflection: Γ(x)Γ(1-x) = π / sin(πx); Γ(1-x) > 0 here
    let s = sin_pi(x);
    let ln = T::PI().ln() - s.abs().ln() - ln_gamma_positive(T::one() - x);
    let sign = if s > T::zero() { T::one() } else { -T::one() };
    Ok((ln, sign))
}

/// Γ(x) reconstructed from [`ln_gamma_signed`]; overflows to ±∞ for large x.
pub fn gamma<T: Real>(x: T) -> Result<T> {
    let (ln, sign) = ln_gamma_signed(x)?;
    Ok(sign * ln.exp())
}

/// ∏Γ(nums) / ∏Γ(dens), stable in log space with sign tracking.
///
/// A non-positive-integer denominator argument yields exactly 0 (provided
/// every numerator argument is regular); a numerator pole is an error.
pub fn gamma_ratio<T: Real>(nums: &[T], dens: &[T]) -> Result<T> {
    let mut pole_in_den = false;
    for &d in dens {
        if d.is_nonpositive_int() {
            pole_in_den = true;
        }
    }
    for &n in nums {
        if n.is_nonpositive_int() {
            return Err(Error::GammaPole(n.to_f64().unwrap_or(f64::NAN)));
        }
    }
    if pole_in_den {
        return Ok(T::zero());
    }
    let mut ln = T::zero();
    let mut sign = T::one();
    for &n in nums {
        let (l, s) = ln_gamma_signed(n)?;
        ln += l;
        sign *= s;
    }
    for &d in dens {
        let (l, s) = ln_gamma_signed(d)?;
        ln -= l;
        sign *= s;
    }
    Ok(sign * ln.exp())
}

/// Rising factorial (a)_k = a(a+1)⋯(a+k-1), with (a)_0 = 1.
pub fn pochhammer<T: Real>(a: T, k: u32) -> T {
    let mut r = T::one();
    for i in 0..k {
        r *= a + T::of_usize(i as usize);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // (x, ln|Γ(x)|, sign) computed with mpmath at 40 digits.
    const LN_GAMMA_REFS: &[(f64, f64, f64)] = &[
        (-49.5, -145.374525604871227, 1.0),
        (-35.75, -93.32991325495027948, 1.0),
        (-20.2, -41.26457001936857072, -1.0),
        (-11.3, -16.88231816574250328, 1.0),
        (-6.5, -6.389634350909332781, -1.0),
        (-3.7, -1.379739904965824496, 1.0),
        (-1.5, 0.8600470153764810145, 1.0),
        (-0.5, 1.265512123484645396, -1.0),
        (-0.25, 1.58957531255118599, -1.0),
        (0.1, 2.252712651734205902, 1.0),
        (0.25, 1.288022524698077457, 1.0),
        (0.5, 0.5723649429247000871, 1.0),
        (0.75, 0.2032809514312953715, 1.0),
        (1.0, 0.0, 1.0),
        (1.2, -0.08537409000331583688, 1.0),
        (1.4612, -0.1214862001678921181, 1.0),
        (2.0, 0.0, 1.0),
        (2.5, 0.2846828704729191596, 1.0),
        (3.7, 1.428072326665388129, 1.0),
        (5.0, 3.17805383034794562, 1.0),
        (8.25, 9.033186919605122853, 1.0),
        (12.5, 18.7343475119364457, 1.0),
        (20.0, 39.33988418719949404, 1.0),
        (33.3, 82.60372358165494301, 1.0),
        (50.0, 144.565743946344886, 1.0),
        (77.7, 259.2604368975979851, 1.0),
        (101.25, 364.8922267039509135, 1.0),
        (128.0, 491.5534482232980035, 1.0),
        (150.5, 602.513954870585412, 1.0),
        (169.5, 698.8715748073841658, 1.0),
        (-0.75, 1.575704597149858385, -1.0),
        (-2.5, -0.05624371649767405067, -1.0),
        (-7.25, -7.541883443475750024, 1.0),
        (-15.5, -28.13302462919141439, 1.0),
        (-30.3, -74.32837301253049656, -1.0),
        (-44.75, -126.678885097094849, -1.0),
        (0.0001, 9.210282658633962211, 1.0),
        (-0.0001, 9.210398101767743888, -1.0),
        (1e-08, 18.42068073818020888, 1.0),
        (4.9999, 3.177903219687725701, 1.0),
        (5.0001, 3.178204443221395096, 1.0),
        (100.0, 359.1342053695753988, 1.0),
        (170.0, 701.4372638087370853, 1.0),
        (-49.9999, -139.2670343645123561, 1.0),
    ];

    #[test]
    fn ln_gamma_matches_high_precision_reference() {
        // the contract: reconstructed Γ accurate to 1e-13 rel on [-50, 170]
        for &(x, ln_ref, sign_ref) in LN_GAMMA_REFS {
            let (ln, sign) = ln_gamma_signed(x).unwrap();
            assert_eq!(sign, sign_ref, "sign at x = {x}");
            let rel = ((ln - ln_ref).exp() - 1.0).abs();
            assert!(rel <= 1e-13, "x = {x}: rel gamma error {rel:.3e}");
        }
    }

    #[test]
    fn ln_gamma_trivial_values() {
        let (ln, s) = ln_gamma_signed(5.0_f64).unwrap();
        assert_relative_eq!(ln, 24.0_f64.ln(), max_relative = 1e-14);
        assert_eq!(s, 1.0);
        let (ln, s) = ln_gamma_signed(0.5_f64).unwrap();
        assert_relative_eq!(ln, std::f64::consts::PI.sqrt().ln(), max_relative = 1e-13);
        assert_eq!(s, 1.0);
        // Γ(-1.5) = 4√π/3, cross-checked against mpmath
        let (ln, s) = ln_gamma_signed(-1.5_f64).unwrap();
        assert_relative_eq!(
            ln,
            (4.0 * std::f64::consts::PI.sqrt() / 3.0).ln(),
            max_relative = 1e-13
        );
        assert_eq!(s, 1.0);
    }

    #[test]
    fn ln_gamma_rejects_poles() {
        assert!(matches!(ln_gamma_signed(0.0_f64), Err(Error::GammaPole(_))));
        assert!(matches!(
            ln_gamma_signed(-3.0_f64),
            Err(Error::GammaPole(_))
        ));
    }

    #[test]
    fn gamma_ratio_values() {
        assert_relative_eq!(
            gamma_ratio::<f64>(&[5.0], &[3.0]).unwrap(),
            12.0,
            max_relative = 1e-14
        );
        // denominator pole -> exact zero (the 1/Γ convention)
        assert_eq!(gamma_ratio::<f64>(&[1.0], &[0.0]).unwrap(), 0.0);
        assert_eq!(gamma_ratio::<f64>(&[2.5], &[-4.0, 1.5]).unwrap(), 0.0);
        assert_relative_eq!(
            gamma_ratio::<f64>(&[2.5], &[0.5]).unwrap(),
            0.75,
            max_relative = 1e-14
        );
        // numerator pole is an error even when a denominator pole coexists
        assert!(gamma_ratio::<f64>(&[-2.0], &[0.0]).is_err());
        // negative arguments carry signs: Γ(-0.5) < 0 < Γ(-1.5)
        assert!(gamma_ratio::<f64>(&[-0.5, -1.5], &[]).unwrap() < 0.0);
        assert!(gamma_ratio::<f64>(&[-1.5], &[2.0]).unwrap() > 0.0);
        assert!(gamma_ratio::<f64>(&[-0.5], &[2.0]).unwrap() < 0.0);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.0_f64, 4), 360.0);
        assert_eq!(pochhammer(-2.0_f64, 5), 0.0);
        assert_eq!(pochhammer(-7.5_f64, 0), 1.0);
        assert_eq!(pochhammer(0.5_f64, 2), 0.75);
    }

    #[test]
    fn pochhammer_consistent_with_gamma_ratio() {
        for &(a, k) in &[(0.3_f64, 5u32), (2.7, 8), (1.25, 12)] {
            let via_gamma = gamma_ratio(&[a + k as f64], &[a]).unwrap();
            assert_relative_eq!(pochhammer(a, k), via_gamma, max_relative = 1e-12);
        }
    }
}
