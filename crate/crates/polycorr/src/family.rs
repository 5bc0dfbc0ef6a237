//! The seven classical orthogonal polynomial families.
//!
//! Recurrence data, weights, supports and norm constants follow the usual
//! normalizations: pₙ₊₁(x) = (Bₙ + Aₙx)pₙ(x) − Cₙpₙ₋₁(x) with p₋₁ = 0.
//! Cₙ at n = 0 multiplies p₋₁ and is fixed to 0 for every family.
//!
//! Evaluation is plain forward recurrence in the working precision; it is
//! dependable for degrees up to 64, beyond which no accuracy is promised.

use crate::error::{Error, Result};
use crate::gamma::gamma_ratio;
use crate::real::Real;

/// One of the classical families together with its real parameters.
///
/// Construct through the checked constructors ([`Family::jacobi`],
/// [`Family::gegenbauer`], [`Family::laguerre`]) or validate explicit enum
/// values with [`Family::validate`]. The Gegenbauer α = 0 convention of the
/// norm table (hₙ = 2π/n²) uses a different normalization and is rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family<T = f64> {
    Legendre,
    ChebyshevT,
    ChebyshevU,
    Gegenbauer { alpha: T },
    Jacobi { alpha: T, beta: T },
    Laguerre { alpha: T },
    Hermite,
}

/// Coefficients of the three-term recurrence at one degree index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceCoeffs<T = f64> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> Family<T> {
    pub fn gegenbauer(alpha: T) -> Result<Self> {
        let f = Family::Gegenbauer { alpha };
        f.validate()?;
        Ok(f)
    }

    pub fn jacobi(alpha: T, beta: T) -> Result<Self> {
        let f = Family::Jacobi { alpha, beta };
        f.validate()?;
        Ok(f)
    }

    pub fn laguerre(alpha: T) -> Result<Self> {
        let f = Family::Laguerre { alpha };
        f.validate()?;
        Ok(f)
    }

    /// Checks the parameter-domain invariants (weight integrability).
    /// Negated comparisons so NaN parameters are rejected too.
    pub fn validate(&self) -> Result<()> {
        let minus_one = -T::one();
        match *self {
            Family::Jacobi { alpha, beta } if !(alpha > minus_one) || !(beta > minus_one) => {
                Err(Error::ParameterDomain(format!(
                    "jacobi requires alpha > -1 and beta > -1, got alpha = {alpha}, beta = {beta}"
                )))
            }
            Family::Gegenbauer { alpha } if !(alpha > -T::of(0.5)) || alpha == T::zero() => {
                Err(Error::ParameterDomain(format!(
                    "gegenbauer requires alpha > -1/2 and alpha != 0, got alpha = {alpha}"
                )))
            }
            Family::Laguerre { alpha } if !(alpha > minus_one) => Err(Error::ParameterDomain(
                format!("laguerre requires alpha > -1, got alpha = {alpha}"),
            )),
            _ => Ok(()),
        }
    }

    /// Lowercase name used by the CLI and output records.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Legendre => "legendre",
            Family::ChebyshevT => "chebyshev-t",
            Family::ChebyshevU => "chebyshev-u",
            Family::Gegenbauer { .. } => "gegenbauer",
            Family::Jacobi { .. } => "jacobi",
            Family::Laguerre { .. } => "laguerre",
            Family::Hermite => "hermite",
        }
    }

    pub fn alpha(&self) -> Option<T> {
        match *self {
            Family::Gegenbauer { alpha }
            | Family::Jacobi { alpha, .. }
            | Family::Laguerre { alpha } => Some(alpha),
            _ => None,
        }
    }

    pub fn beta(&self) -> Option<T> {
        match *self {
            Family::Jacobi { beta, .. } => Some(beta),
            _ => None,
        }
    }

    /// The orthogonality interval (a, b); infinite endpoints are ±∞.
    pub fn support(&self) -> (T, T) {
        match self {
            Family::Legendre
            | Family::ChebyshevT
            | Family::ChebyshevU
            | Family::Gegenbauer { .. }
            | Family::Jacobi { .. } => (-T::one(), T::one()),
            Family::Laguerre { .. } => (T::zero(), T::infinity()),
            Family::Hermite => (T::neg_infinity(), T::infinity()),
        }
    }

    /// Recurrence coefficients (Aₙ, Bₙ, Cₙ); C₀ is fixed to 0.
    pub fn recurrence_coeffs(&self, n: u32) -> Result<RecurrenceCoeffs<T>> {
        self.validate()?;
        let nn = T::of_usize(n as usize);
        let one = T::one();
        let two = T::of(2.0);
        let zero = T::zero();
        let mut rc = match *self {
            Family::Legendre => RecurrenceCoeffs {
                a: (two * nn + one) / (nn + one),
                b: zero,
                c: nn / (nn + one),
            },
            Family::ChebyshevT | Family::ChebyshevU => RecurrenceCoeffs {
                a: two,
                b: zero,
                c: one,
            },
            Family::Gegenbauer { alpha } => RecurrenceCoeffs {
                a: two * (nn + alpha) / (nn + one),
                b: zero,
                c: (nn + two * alpha - one) / (nn + one),
            },
            Family::Laguerre { alpha } => RecurrenceCoeffs {
                a: -(one / (nn + one)),
                b: (two * nn + alpha + one) / (nn + one),
                c: (nn + alpha) / (nn + one),
            },
            Family::Hermite => RecurrenceCoeffs {
                a: two,
                b: zero,
                c: two * nn,
            },
            Family::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                let a = (two * nn + s + one) * (two * nn + s + two)
                    / (two * (nn + one) * (nn + s + one));
                // n = 0 takes the (α-β)/2 limit: the generic formula has a
                // removable 0/0 at α+β = 0
                let b = if n == 0 {
                    (alpha - beta) / two
                } else {
                    (two * nn + s + one) * (alpha * alpha - beta * beta)
                        / (two * (nn + one) * (nn + s + one) * (two * nn + s))
                };
                let c = if n == 0 {
                    zero
                } else {
                    (nn + alpha) * (nn + beta) * (two * nn + s + two)
                        / ((nn + one) * (nn + s + one) * (two * nn + s))
                };
                RecurrenceCoeffs { a, b, c }
            }
        };
        if n == 0 {
            rc.c = zero;
        }
        Ok(rc)
    }

    /// Coefficients of the step that actually generates pₙ₊₁ from
    /// (pₙ, pₙ₋₁). Identical to [`Family::recurrence_coeffs`] except for
    /// ChebyshevT at n = 0, where the table's A₀ = 2 does not generate
    /// T₁ = x: the generating step has A₀ = 1. Basis conversions and the
    /// Golub–Welsch symmetrization must use these.
    pub fn recurrence_coeffs_generating(&self, n: u32) -> Result<RecurrenceCoeffs<T>> {
        if n == 0 {
            if let Family::ChebyshevT = self {
                return Ok(RecurrenceCoeffs {
                    a: T::one(),
                    b: T::zero(),
                    c: T::zero(),
                });
            }
        }
        self.recurrence_coeffs(n)
    }

    /// p₁(x) for the family. ChebyshevT is the one family whose p₁ is not
    /// generated by the n = 0 recurrence step.
    fn p1(&self, x: T) -> T {
        match *self {
            Family::Legendre | Family::ChebyshevT => x,
            Family::ChebyshevU | Family::Hermite => T::of(2.0) * x,
            Family::Gegenbauer { alpha } => T::of(2.0) * alpha * x,
            Family::Laguerre { alpha } => -x + alpha + T::one(),
            Family::Jacobi { alpha, beta } => {
                (alpha - beta + (alpha + beta + T::of(2.0)) * x) / T::of(2.0)
            }
        }
    }

    /// pₙ(x) by forward three-term recurrence.
    pub fn eval_poly(&self, n: u32, x: T) -> Result<T> {
        self.validate()?;
        if n == 0 {
            return Ok(T::one());
        }
        let mut prev = T::one();
        let mut cur = self.p1(x);
        for k in 1..n {
            let rc = self.recurrence_coeffs(k)?;
            let next = (rc.b + rc.a * x) * cur - rc.c * prev;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// Weight w(x) for x strictly inside the support.
    pub fn weight(&self, x: T) -> Result<T> {
        self.validate()?;
        let (a, b) = self.support();
        if !(x > a && x < b) {
            return Err(Error::OutsideSupport {
                x: x.to_f64().unwrap_or(f64::NAN),
                a: a.to_f64().unwrap_or(f64::NAN),
                b: b.to_f64().unwrap_or(f64::NAN),
            });
        }
        let one = T::one();
        Ok(match *self {
            Family::Legendre => one,
            Family::ChebyshevT => one / (one - x * x).sqrt(),
            Family::ChebyshevU => (one - x * x).sqrt(),
            Family::Gegenbauer { alpha } => (one - x * x).powf(alpha - T::of(0.5)),
            Family::Jacobi { alpha, beta } => (one - x).powf(alpha) * (one + x).powf(beta),
            Family::Laguerre { alpha } => (-x).exp() * x.powf(alpha),
            Family::Hermite => (-x * x).exp(),
        })
    }

    /// Norm constant hₙ = ∫ pₙ² w.
    pub fn norm_h(&self, n: u32) -> Result<T> {
        self.validate()?;
        let nn = T::of_usize(n as usize);
        let one = T::one();
        let two = T::of(2.0);
        let pi = T::PI();
        Ok(match *self {
            Family::Legendre => two / (two * nn + one),
            Family::ChebyshevT => {
                if n == 0 {
                    pi
                } else {
                    pi / two
                }
            }
            Family::ChebyshevU => pi / two,
            Family::Gegenbauer { alpha } => {
                // π 2^{1-2α} Γ(n+2α) / (n! (n+α) Γ(α)²)
                let ratio = gamma_ratio(&[nn + two * alpha], &[nn + one, alpha, alpha])?;
                pi * two.powf(one - two * alpha) * ratio / (nn + alpha)
            }
            Family::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                let ratio = gamma_ratio(
                    &[nn + alpha + one, nn + beta + one],
                    &[nn + one, nn + s + one],
                )?;
                two.powf(s + one) / (two * nn + s + one) * ratio
            }
            Family::Laguerre { alpha } => gamma_ratio(&[nn + alpha + one], &[nn + one])?,
            Family::Hermite => pi.sqrt() * two.powi(n as i32) * gamma_ratio(&[nn + one], &[])?,
        })
    }
}
