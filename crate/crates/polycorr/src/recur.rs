//! The two-variable second-order difference equation of the correlation
//! function, used both as a residual checker and as a table propagator.
//!
//! With the family's recurrence coefficients Aₖ, Bₖ, Cₖ:
//!
//! R_{m+1,n+1} = (A_{n+m+1}/A_{n+1}) R_{m-1,n+2}
//!             + (A_{n+m+1}C_{n+1}/A_{n+1}) R_{m+1,n}
//!             + (B_{n+m+1} + y A_{n+m+1} - (A_{n+m+1}/A_{n+1}) B_{n+1}) R_{m,n+1}
//!             - C_{n+m+1} R_{m-1,n+1}
//!
//! valid for m ≥ 1, n ≥ 0 (only coefficients at indices ≥ 1 appear).

use crate::error::{Error, Result};
use crate::family::Family;
use crate::real::Real;

/// Origin of a table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Seed,
    Propagated,
}

/// Residual of the difference equation at one (m, n): raw and normalized
/// by the largest participating term magnitude (scale-free).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual<T = f64> {
    pub raw: T,
    pub normalized: T,
}

/// A rectangular-ish table of R_{m,n}(y) values for one family and shift.
#[derive(Debug, Clone)]
pub struct CorrTable<T = f64> {
    family: Family<T>,
    y: T,
    rows: Vec<Vec<Option<(T, Provenance)>>>,
}

impl<T: Real> CorrTable<T> {
    pub fn new(family: Family<T>, y: T) -> Self {
        Self {
            family,
            y,
            rows: Vec::new(),
        }
    }

    pub fn family(&self) -> &Family<T> {
        &self.family
    }

    pub fn y(&self) -> T {
        self.y
    }

    pub fn set(&mut self, m: u32, n: u32, value: T, provenance: Provenance) {
        let (m, n) = (m as usize, n as usize);
        if self.rows.len() <= m {
            self.rows.resize(m + 1, Vec::new());
        }
        if self.rows[m].len() <= n {
            self.rows[m].resize(n + 1, None);
        }
        self.rows[m][n] = Some((value, provenance));
    }

    pub fn get(&self, m: u32, n: u32) -> Option<T> {
        self.entry(m, n).map(|(v, _)| v)
    }

    pub fn entry(&self, m: u32, n: u32) -> Option<(T, Provenance)> {
        self.rows
            .get(m as usize)
            .and_then(|row| row.get(n as usize))
            .and_then(|e| *e)
    }
}

/// The four stencil coefficients of the equation solved for R_{m+1,n+1}:
/// (on R_{m-1,n+2}, R_{m+1,n}, R_{m,n+1}, R_{m-1,n+1}).
fn stencil_coeffs<T: Real>(family: &Family<T>, m: u32, n: u32, y: T) -> Result<[T; 4]> {
    let lo = family.recurrence_coeffs(n + 1)?;
    let hi = family.recurrence_coeffs(n + m + 1)?;
    let ratio = hi.a / lo.a;
    Ok([ratio, ratio * lo.c, hi.b + y * hi.a - ratio * lo.b, -hi.c])
}

/// Residual of the difference equation at (m ≥ 1, n), with R values served
/// by `lookup`. Missing stencil entries give an incomplete-stencil error.
pub fn recurrence_residual<T: Real, F>(
    family: &Family<T>,
    m: u32,
    n: u32,
    y: T,
    lookup: F,
) -> Result<Residual<T>>
where
    F: Fn(u32, u32) -> Option<T>,
{
    if m < 1 {
        return Err(Error::ParameterDomain(
            "the difference equation needs m >= 1".into(),
        ));
    }
    let fetch = |mm: u32, nn: u32| lookup(mm, nn).ok_or(Error::IncompleteStencil { m: mm, n: nn });
    let target = fetch(m + 1, n + 1)?;
    let r_a = fetch(m - 1, n + 2)?;
    let r_b = fetch(m + 1, n)?;
    let r_c = fetch(m, n + 1)?;
    let r_d = fetch(m - 1, n + 1)?;
    let c = stencil_coeffs(family, m, n, y)?;
    let terms = [c[0] * r_a, c[1] * r_b, c[2] * r_c, c[3] * r_d];
    let rhs = terms[0] + terms[1] + terms[2] + terms[3];
    let raw = target - rhs;
    let scale = terms.iter().map(|t| t.abs()).fold(target.abs(), T::max);
    let normalized = if scale > T::zero() { raw / scale } else { raw };
    Ok(Residual { raw, normalized })
}

/// Propagates a seeded table to all (m ≤ m_max, n ≤ n_max) by solving the
/// equation for R_{m+1,n+1}, sweeping m upward then n upward.
///
/// Required seed fringe:
/// * rows m = 0 and m = 1 for n = 0 ..= n_max + m_max,
/// * the n = 0 column entries (m, 0) for m = 2 ..= m_max.
///
/// Every row m ≥ 2 is filled as far as its stencil reaches (row m extends
/// to n_max + m_max − ⌈m/2⌉ ≥ n_max), entirely from seeds and previously
/// propagated entries, so the output is deterministic.
pub fn propagate_table<T: Real>(
    family: &Family<T>,
    y: T,
    m_max: u32,
    n_max: u32,
    seeds: &CorrTable<T>,
) -> Result<CorrTable<T>> {
    family.validate()?;
    let fringe_n = n_max + m_max;
    let mut out = CorrTable::new(*family, y);
    for m in 0..=1u32.min(m_max) {
        for n in 0..=fringe_n {
            let v = seeds.get(m, n).ok_or(Error::IncompleteStencil { m, n })?;
            out.set(m, n, v, Provenance::Seed);
        }
    }
    for m in 2..=m_max.max(1) {
        if m > m_max {
            break;
        }
        let v = seeds
            .get(m, 0)
            .ok_or(Error::IncompleteStencil { m, n: 0 })?;
        out.set(m, 0, v, Provenance::Seed);
    }
    if m_max < 2 {
        return Ok(out);
    }
    for target_m in 2..=m_max {
        // stencil for (target_m, target_n): equation at (m, n) with
        // m = target_m - 1, n = target_n - 1
        let m = target_m - 1;
        let mut target_n = 1u32;
        loop {
            let n = target_n - 1;
            let needed = [(m - 1, n + 2), (m + 1, n), (m, n + 1), (m - 1, n + 1)];
            if needed.iter().any(|&(mm, nn)| out.get(mm, nn).is_none()) {
                break;
            }
            let c = stencil_coeffs(family, m, n, y)?;
            let value = c[0] * out.get(m - 1, n + 2).unwrap()
                + c[1] * out.get(m + 1, n).unwrap()
                + c[2] * out.get(m, n + 1).unwrap()
                + c[3] * out.get(m - 1, n + 1).unwrap();
            out.set(target_m, target_n, value, Provenance::Propagated);
            target_n += 1;
        }
        // the sweep must at least cover the requested rectangle
        if target_n <= n_max {
            return Err(Error::IncompleteStencil {
                m: target_m,
                n: target_n,
            });
        }
    }
    Ok(out)
}
