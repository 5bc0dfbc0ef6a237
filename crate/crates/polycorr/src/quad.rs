//! Gauss quadrature oracle.
//!
//! Rules come from the Golub–Welsch construction: symmetrize the
//! three-term recurrence into a Jacobi matrix, take its eigenvalues as
//! nodes and μ₀ × (squared first eigenvector components) as weights. The
//! eigensolver is an in-house implicit-shift QL on the tridiagonal matrix,
//! accumulating only the first eigenvector components, so the oracle
//! shares no code path with the closed forms it validates.
//!
//! An N-point rule integrates polynomials of degree ≤ 2N−1 against the
//! weight exactly (up to rounding), which makes `corr_oracle` exact for
//! the correlation integrand regardless of the infinite Laguerre/Hermite
//! intervals.

use crate::corr::CoeffVector;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::gamma::gamma_ratio;
use crate::kahan::NeumaierSum;
use crate::real::Real;

/// Nodes and weights of an N-point Gauss rule for a family's weight.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T = f64> {
    family: Family<T>,
    nodes: Vec<T>,
    weights: Vec<T>,
}

/// μ₀ = ∫ w = h₀ for the family.
pub fn moment_zero<T: Real>(family: &Family<T>) -> Result<T> {
    family.validate()?;
    let one = T::one();
    let two = T::of(2.0);
    Ok(match *family {
        Family::Legendre => two,
        Family::ChebyshevT => T::PI(),
        Family::ChebyshevU => T::PI() / two,
        Family::Gegenbauer { alpha } => {
            // ∫(1-x²)^{α-1/2} = √π Γ(α+1/2)/Γ(α+1)
            T::PI().sqrt() * gamma_ratio(&[alpha + T::of(0.5)], &[alpha + one])?
        }
        Family::Jacobi { alpha, beta } => {
            two.powf(alpha + beta + one)
                * gamma_ratio(&[alpha + one, beta + one], &[alpha + beta + two])?
        }
        Family::Laguerre { alpha } => gamma_ratio(&[alpha + one], &[])?,
        Family::Hermite => T::PI().sqrt(),
    })
}

/// Symmetrized recurrence (Jacobi) matrix of size N: diagonal aₖ = −Bₖ/Aₖ,
/// off-diagonal bₖ = √(Cₖ₊₁/(AₖAₖ₊₁)).
pub fn jacobi_matrix<T: Real>(family: &Family<T>, n: usize) -> Result<(Vec<T>, Vec<T>)> {
    if n == 0 {
        return Err(Error::ParameterDomain("rule size must be >= 1".into()));
    }
    let mut diag = Vec::with_capacity(n);
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    let mut rc = family.recurrence_coeffs_generating(0)?;
    for k in 0..n {
        diag.push(-rc.b / rc.a);
        if k + 1 < n {
            let next = family.recurrence_coeffs_generating((k + 1) as u32)?;
            let radicand = next.c / (rc.a * next.a);
            if radicand <= T::zero() {
                return Err(Error::InternalConsistency(format!(
                    "non-positive symmetrization radicand at k = {k}"
                )));
            }
            offdiag.push(radicand.sqrt());
            rc = next;
        }
    }
    Ok((diag, offdiag))
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix,
/// accumulating only the first components of the eigenvectors.
///
/// Returns (eigenvalue, first-component²) pairs in ascending eigenvalue
/// order. Errors after 50 iterations on any single eigenvalue.
pub fn tridiag_eigen<T: Real>(diag: &[T], offdiag: &[T]) -> Result<Vec<(T, T)>> {
    let n = diag.len();
    if offdiag.len() + 1 != n && !(n == 1 && offdiag.is_empty()) {
        return Err(Error::ParameterDomain(
            "off-diagonal must have length n-1".into(),
        ));
    }
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(T::zero());
    // first row of the accumulated orthogonal transform
    let mut z = vec![T::zero(); n];
    z[0] = T::one();

    for l in 0..n {
        let mut iter = 0;
        loop {
            // find a negligible off-diagonal element
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::NoConvergence(format!(
                    "eigenvalue {l} not isolated after 50 QL sweeps"
                )));
            }
            // implicit shift from the 2x2 block at l
            let two = T::of(2.0);
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            let sign_r = if g >= T::zero() { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // rotate the first-row accumulation
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if r == T::zero() && m > l + 1 {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }

    let mut pairs: Vec<(T, T)> = d.into_iter().zip(z.into_iter().map(|v| v * v)).collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("eigenvalues are finite"));
    Ok(pairs)
}

impl<T: Real> QuadratureRule<T> {
    /// Golub–Welsch N-point rule for the family's weight.
    pub fn gauss(family: &Family<T>, n: usize) -> Result<Self> {
        let (diag, offdiag) = jacobi_matrix(family, n)?;
        let mu0 = moment_zero(family)?;
        let eig = tridiag_eigen(&diag, &offdiag)?;
        let nodes: Vec<T> = eig.iter().map(|&(x, _)| x).collect();
        let weights: Vec<T> = eig.iter().map(|&(_, q)| mu0 * q).collect();
        Ok(Self {
            family: *family,
            nodes,
            weights,
        })
    }

    pub fn family(&self) -> &Family<T> {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Σ wᵢ f(xᵢ) with compensated accumulation.
    pub fn integrate<F: FnMut(T) -> T>(&self, mut f: F) -> T {
        self.integrate_with_est(&mut f).0
    }

    /// Σ wᵢ f(xᵢ) together with the accumulation roundoff estimate.
    pub fn integrate_with_est<F: FnMut(T) -> T>(&self, mut f: F) -> (T, T) {
        let mut acc = NeumaierSum::new();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * f(x));
        }
        (acc.value(), acc.est_error())
    }
}

/// Node count that makes the rule exact for the correlation integrand of
/// degree 2n+m.
fn oracle_nodes(m: u32, n: u32) -> usize {
    ((2 * n + m + 2) / 2 + 2) as usize
}

/// R_{m,n}(y) by Gauss quadrature: exact up to rounding because the
/// integrand's polynomial part has degree 2n+m ≤ 2N−1.
pub fn corr_oracle<T: Real>(family: &Family<T>, m: u32, n: u32, y: T) -> Result<T> {
    Ok(corr_oracle_with_est(family, m, n, y)?.0)
}

/// Oracle value together with the quadrature-sum roundoff estimate.
pub fn corr_oracle_with_est<T: Real>(family: &Family<T>, m: u32, n: u32, y: T) -> Result<(T, T)> {
    let rule = QuadratureRule::gauss(family, oracle_nodes(m, n))?;
    corr_oracle_on_rule(&rule, m, n, y)
}

/// Oracle evaluation reusing a prebuilt rule (must have enough nodes).
pub fn corr_oracle_on_rule<T: Real>(
    rule: &QuadratureRule<T>,
    m: u32,
    n: u32,
    y: T,
) -> Result<(T, T)> {
    if 2 * rule.len() < (2 * n + m + 1) as usize {
        return Err(Error::ParameterDomain(format!(
            "rule with {} nodes cannot integrate degree {}",
            rule.len(),
            2 * n + m
        )));
    }
    let fam = rule.family;
    let mut acc = NeumaierSum::new();
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let p = fam.eval_poly(n, x)?;
        let q = fam.eval_poly(n + m, x + y)?;
        acc.add(w * p * q);
    }
    Ok((acc.value(), acc.est_error()))
}

/// Coefficients of the degree-m polynomial R_{m,n}(y), recovered by Newton
/// interpolation of oracle values at m+1 Chebyshev points on [−1, 1].
///
/// Relative accuracy ~1e−9 for m ≤ 12; conditioning degrades beyond that.
pub fn oracle_coefficients<T: Real>(family: &Family<T>, m: u32, n: u32) -> Result<CoeffVector<T>> {
    let count = (m + 1) as usize;
    let rule = QuadratureRule::gauss(family, oracle_nodes(m, n))?;
    // Chebyshev roots on [-1, 1], ascending
    let mut ys = Vec::with_capacity(count);
    for i in 0..count {
        let angle = T::PI() * T::of_usize(2 * i + 1) / T::of_usize(2 * count);
        ys.push(-angle.cos());
    }
    let mut vals = Vec::with_capacity(count);
    for &y in &ys {
        vals.push(corr_oracle_on_rule(&rule, m, n, y)?.0);
    }
    // divided differences
    let mut dd = vals;
    for order in 1..count {
        for i in (order..count).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (ys[i] - ys[i - order]);
        }
    }
    // expand the Newton form to monomial coefficients
    let mut coeffs = vec![T::zero(); count];
    let mut basis = vec![T::zero(); count];
    basis[0] = T::one();
    coeffs[0] = dd[0];
    for i in 1..count {
        // basis *= (y - ys[i-1])
        for j in (1..=i).rev() {
            basis[j] = basis[j - 1] - ys[i - 1] * basis[j];
        }
        basis[0] = -ys[i - 1] * basis[0];
        for j in 0..=i {
            coeffs[j] += dd[i] * basis[j];
        }
    }
    CoeffVector::new(m, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn moment_zero_examples() {
        assert_relative_eq!(
            moment_zero(&Family::<f64>::Hermite).unwrap(),
            std::f64::consts::PI.sqrt(),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            moment_zero(&Family::laguerre(1.5_f64).unwrap()).unwrap(),
            gamma_ratio(&[2.5], &[]).unwrap(),
            max_relative = 1e-13
        );
        assert_eq!(moment_zero(&Family::<f64>::Legendre).unwrap(), 2.0);
    }

    #[test]
    fn jacobi_matrix_examples() {
        let (d, e) = jacobi_matrix(&Family::<f64>::Hermite, 2).unwrap();
        assert_eq!(d, vec![0.0, 0.0]);
        assert_relative_eq!(e[0], 0.5_f64.sqrt(), max_relative = 1e-15);

        let (d, e) = jacobi_matrix(&Family::<f64>::Legendre, 2).unwrap();
        assert_eq!(d, vec![0.0, 0.0]);
        assert_relative_eq!(e[0], (1.0_f64 / 3.0).sqrt(), max_relative = 1e-15);

        let (d, e) = jacobi_matrix(&Family::laguerre(0.0_f64).unwrap(), 1).unwrap();
        assert_relative_eq!(d[0], 1.0, max_relative = 1e-15);
        assert!(e.is_empty());
    }

    #[test]
    fn tridiag_eigen_small_cases() {
        let eig = tridiag_eigen(&[0.0_f64], &[]).unwrap();
        assert_eq!(eig, vec![(0.0, 1.0)]);

        let eig = tridiag_eigen(&[0.0_f64, 0.0], &[1.0]).unwrap();
        assert_relative_eq!(eig[0].0, -1.0, max_relative = 1e-14);
        assert_relative_eq!(eig[1].0, 1.0, max_relative = 1e-14);
        assert_relative_eq!(eig[0].1, 0.5, max_relative = 1e-13);
        assert_relative_eq!(eig[1].1, 0.5, max_relative = 1e-13);
    }

    #[test]
    fn first_components_stay_normalized() {
        for n in [3usize, 8, 17, 40] {
            let (d, e) = jacobi_matrix(&Family::jacobi(0.3_f64, 1.2).unwrap(), n).unwrap();
            let eig = tridiag_eigen(&d, &e).unwrap();
            let total: f64 = eig.iter().map(|&(_, q)| q).sum();
            assert!((total - 1.0).abs() <= 1e-13, "n = {n}: {total}");
        }
    }

    #[test]
    fn classical_rules() {
        // Hermite 1-point: node 0, weight √π
        let r = QuadratureRule::gauss(&Family::<f64>::Hermite, 1).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert_relative_eq!(
            r.weights()[0],
            std::f64::consts::PI.sqrt(),
            max_relative = 1e-14
        );

        // Legendre 2-point: nodes ∓1/√3, weights 1, 1
        let r = QuadratureRule::gauss(&Family::<f64>::Legendre, 2).unwrap();
        let inv_sqrt3 = 1.0 / 3.0_f64.sqrt();
        assert_relative_eq!(r.nodes()[0], -inv_sqrt3, max_relative = 1e-14);
        assert_relative_eq!(r.nodes()[1], inv_sqrt3, max_relative = 1e-14);
        assert_relative_eq!(r.weights()[0], 1.0, max_relative = 1e-13);
        assert_relative_eq!(r.weights()[1], 1.0, max_relative = 1e-13);

        // Laguerre α=0 2-point: nodes 2∓√2, weights (2±√2)/4
        let r = QuadratureRule::gauss(&Family::laguerre(0.0_f64).unwrap(), 2).unwrap();
        let s2 = 2.0_f64.sqrt();
        assert_relative_eq!(r.nodes()[0], 2.0 - s2, max_relative = 1e-13);
        assert_relative_eq!(r.nodes()[1], 2.0 + s2, max_relative = 1e-13);
        assert_relative_eq!(r.weights()[0], (2.0 + s2) / 4.0, max_relative = 1e-12);
        assert_relative_eq!(r.weights()[1], (2.0 - s2) / 4.0, max_relative = 1e-12);
    }

    #[test]
    fn weights_sum_to_mu0() {
        let fams: Vec<Family<f64>> = vec![
            Family::Legendre,
            Family::ChebyshevT,
            Family::ChebyshevU,
            Family::gegenbauer(0.75).unwrap(),
            Family::jacobi(-0.4, 2.5).unwrap(),
            Family::laguerre(1.0).unwrap(),
            Family::Hermite,
        ];
        for fam in &fams {
            for n in [1usize, 5, 12, 25] {
                let r = QuadratureRule::gauss(fam, n).unwrap();
                let total: f64 = NeumaierSum::sum_iter(r.weights().iter().copied());
                let mu0 = moment_zero(fam).unwrap();
                assert_relative_eq!(total, mu0, max_relative = 1e-12);
                // nodes strictly increasing and inside the support
                let (a, b) = fam.support();
                for w in r.nodes().windows(2) {
                    assert!(w[0] < w[1]);
                }
                assert!(r.nodes()[0] > a && r.nodes()[n - 1] < b);
                assert!(r.weights().iter().all(|&w| w > 0.0));
            }
        }
    }

    #[test]
    fn oracle_spot_values() {
        // Hermite R_{2,1}(y) = 24 √π y²
        let v = corr_oracle(&Family::<f64>::Hermite, 2, 1, 0.7).unwrap();
        assert_relative_eq!(
            v,
            24.0 * std::f64::consts::PI.sqrt() * 0.49,
            max_relative = 1e-13
        );
        // m = 0, n = 0 gives μ₀ for every family
        for fam in [
            Family::<f64>::Legendre,
            Family::ChebyshevT,
            Family::Hermite,
            Family::laguerre(0.3).unwrap(),
        ] {
            let v = corr_oracle(&fam, 0, 0, 1.7).unwrap();
            assert_relative_eq!(v, moment_zero(&fam).unwrap(), max_relative = 1e-12);
        }
        // ChebyshevT reference value at y = 1: 180672 π
        let v = corr_oracle(&Family::<f64>::ChebyshevT, 8, 4, 1.0).unwrap();
        assert_relative_eq!(v, 180672.0 * std::f64::consts::PI, max_relative = 1e-12);
    }

    #[test]
    fn oracle_self_consistency() {
        // N and N+5 nodes agree to 1e-12
        let fam = Family::jacobi(0.3_f64, 1.2).unwrap();
        let base = QuadratureRule::gauss(&fam, oracle_nodes(3, 2)).unwrap();
        let more = QuadratureRule::gauss(&fam, oracle_nodes(3, 2) + 5).unwrap();
        let a = corr_oracle_on_rule(&base, 3, 2, 0.7).unwrap().0;
        let b = corr_oracle_on_rule(&more, 3, 2, 0.7).unwrap().0;
        assert_relative_eq!(a, b, max_relative = 1e-12);
        // frozen mpmath value
        assert_relative_eq!(a, 21.7009999917237403, max_relative = 1e-12);
    }

    #[test]
    fn oracle_coefficient_examples() {
        // Hermite m=3, n=2: only c₃ = 2⁵ √π (4)₂ = 640 √π
        let cv = oracle_coefficients(&Family::<f64>::Hermite, 3, 2).unwrap();
        let c3 = 640.0 * std::f64::consts::PI.sqrt();
        assert_relative_eq!(cv.coeff(3), c3, max_relative = 1e-12);
        for j in 0..3 {
            assert!(cv.coeff(j).abs() <= 1e-9 * c3);
        }
        // Laguerre α=0, m=2, n=0: {c₁, c₂} = {-1, 1/2}
        let cv = oracle_coefficients(&Family::laguerre(0.0_f64).unwrap(), 2, 0).unwrap();
        assert_relative_eq!(cv.coeff(1), -1.0, max_relative = 1e-10);
        assert_relative_eq!(cv.coeff(2), 0.5, max_relative = 1e-10);
        assert!(cv.coeff(0).abs() < 1e-12);
    }
}
