//! Named verification suites.
//!
//! These are the machine-checkable claims of the crate: paper fixtures,
//! closed-form/oracle equivalence, the difference-equation residual,
//! specialization chains, the series-transform identities, structural
//! properties and the quadrature self-test. The CLI `verify` subcommand
//! and the acceptance test target both run them; tolerances are fixed
//! here and only scaled by an explicit override.

use crate::corr::{self, CorrelationQuery};
use crate::error::Result;
use crate::family::Family;
use crate::gamma::{gamma_ratio, pochhammer};
use crate::hyp::{lemma2_shift, HypSeries};
use crate::kahan::NeumaierSum;
use crate::negative_control::{self, Mutation};
use crate::quad::{self, QuadratureRule};
use crate::recur;
use crate::AppellF2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

pub const TOL_FIXTURE_CLOSED: f64 = 1e-12;
pub const TOL_FIXTURE_ORACLE: f64 = 1e-9;
pub const TOL_ORACLE_SWEEP: f64 = 1e-9;
pub const ABS_FLOOR_SWEEP: f64 = 1e-12;
pub const TOL_RESIDUAL: f64 = 1e-8;
pub const TOL_SPECIALIZATION: f64 = 1e-10;
pub const TOL_SPECIALIZATION_JACOBI: f64 = 1e-9;
pub const TOL_LEMMA: f64 = 1e-11;
pub const TOL_PARITY: f64 = 1e-12;
pub const TOL_DEGREE: f64 = 1e-10;
pub const TOL_NORM_CONSTANT: f64 = 1e-12;
pub const TOL_MOMENTS: f64 = 1e-11;
pub const TOL_ORACLE_SELF: f64 = 1e-12;

/// Configuration shared by all suites.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Restrict family-specific checks to one family name.
    pub family: Option<String>,
    /// Multiplier applied to every suite's default tolerance.
    pub tol_scale: f64,
    /// Seed for the randomized transform suites.
    pub seed: u64,
    /// Negative-control injection: swap in one mutated evaluator.
    pub mutation: Option<Mutation>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            family: None,
            tol_scale: 1.0,
            seed: 0x706f_6c79,
            mutation: None,
        }
    }
}

/// Result of one suite.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    /// Worst deviation/residual observed (suite-specific normalization).
    pub worst: f64,
    /// Effective tolerance the checks ran at.
    pub tolerance: f64,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            checks: 0,
            failures: 0,
            worst: 0.0,
            tolerance,
            notes: Vec::new(),
        }
    }

    fn record(&mut self, deviation: f64) {
        self.checks += 1;
        if deviation > self.worst {
            self.worst = deviation;
        }
        if !(deviation <= self.tolerance) {
            self.failures += 1;
        }
    }

    fn fail_note(&mut self, note: String) {
        self.checks += 1;
        self.failures += 1;
        self.notes.push(note);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn rel_dev(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        return 0.0;
    }
    (a - b).abs() / scale
}

/// Normalized deviation: relative where the values are well above the
/// floors, with an absolute floor near zeros and an a-posteriori noise
/// floor where one side's own roundoff bound exceeds the tolerance band
/// (e.g. the oracle integrand cancels ~13 digits at m = 0, y = ±4,
/// n = 12, where no evaluation strategy can reach 1e-9).
fn sweep_dev(a: f64, b: f64, tol: f64, abs_floor: f64, noise: f64) -> f64 {
    let diff = (a - b).abs();
    let denom = a.abs().max(b.abs()).max(abs_floor / tol).max(noise / tol);
    diff / denom
}

/// Closed-form value with the configured negative-control mutation
/// substituted where it applies.
fn closed_value(cfg: &VerifyConfig, family: &Family<f64>, m: u32, n: u32, y: f64) -> Result<f64> {
    if m >= 1 {
        match (cfg.mutation, family) {
            (Some(Mutation::ChebyshevTGammaIndex), Family::ChebyshevT) => {
                return negative_control::chebyshev_t_gamma_index(m, n, y);
            }
            (Some(Mutation::HermitePochhammerIndex), Family::Hermite) => {
                return negative_control::hermite_pochhammer_index(m, n, y);
            }
            (Some(Mutation::LaguerreSign), Family::Laguerre { alpha }) => {
                return negative_control::laguerre_sign(*alpha, m, n, y);
            }
            _ => {}
        }
    }
    corr::corr(&CorrelationQuery {
        family: *family,
        m,
        n,
        y,
    })
    .map(|r| r.value)
}

/// The parameter grid: base families plus α(,β) ∈ {−0.4, 0.3, 1, 2.5}.
pub fn family_grid() -> Vec<Family<f64>> {
    let ps = [-0.4, 0.3, 1.0, 2.5];
    let mut fams = vec![
        Family::Legendre,
        Family::ChebyshevT,
        Family::ChebyshevU,
        Family::Hermite,
    ];
    for &a in &ps {
        fams.push(Family::gegenbauer(a).expect("grid alpha valid"));
        fams.push(Family::laguerre(a).expect("grid alpha valid"));
    }
    for &a in &ps {
        for &b in &ps {
            fams.push(Family::jacobi(a, b).expect("grid alpha/beta valid"));
        }
    }
    fams
}

fn keep(cfg: &VerifyConfig, family: &Family<f64>) -> bool {
    cfg.family.as_deref().is_none_or(|f| f == family.name())
}

// ---------------------------------------------------------------------
// suite 1: paper fixtures
// ---------------------------------------------------------------------

struct Fixture {
    family: Family<f64>,
    m: u32,
    n: u32,
    /// (power, exact coefficient)
    coeffs: Vec<(u32, f64)>,
}

fn fixtures() -> Vec<Fixture> {
    use std::f64::consts::PI;
    let mut v = vec![
        Fixture {
            family: Family::ChebyshevT,
            m: 8,
            n: 4,
            coeffs: vec![
                (2, 384.0 * PI),
                (4, 20160.0 * PI),
                (6, 96768.0 * PI),
                (8, 63360.0 * PI),
            ],
        },
        Fixture {
            family: Family::ChebyshevT,
            m: 9,
            n: 4,
            coeffs: vec![
                (1, 13.0 * PI),
                (3, 6240.0 * PI),
                (5, 131040.0 * PI),
                (7, 384384.0 * PI),
                (9, 183040.0 * PI),
            ],
        },
        Fixture {
            family: Family::ChebyshevU,
            m: 8,
            n: 4,
            coeffs: vec![
                (2, 180.0 * PI),
                (4, 12000.0 * PI),
                (6, 73920.0 * PI),
                (8, 63360.0 * PI),
            ],
        },
        Fixture {
            family: Family::ChebyshevU,
            m: 9,
            n: 4,
            coeffs: vec![
                (1, 5.0 * PI),
                (3, 3000.0 * PI),
                (5, 79200.0 * PI),
                (7, 295680.0 * PI),
                (9, 183040.0 * PI),
            ],
        },
        Fixture {
            family: Family::Legendre,
            m: 8,
            n: 4,
            coeffs: vec![
                (2, 68.0),
                (4, 8075.0 / 2.0),
                (6, 88179.0 / 4.0),
                (8, 1062347.0 / 64.0),
            ],
        },
        // exact leading coefficient by symbolic integration: 26558675/576;
        // the value 26558675/64 that appears in some references is exactly
        // 9x too large and fails the oracle
        Fixture {
            family: Family::Legendre,
            m: 9,
            n: 4,
            coeffs: vec![
                (1, 2.0),
                (3, 3230.0 / 3.0),
                (5, 101745.0 / 4.0),
                (7, 676039.0 / 8.0),
                (9, 26558675.0 / 576.0),
            ],
        },
    ];
    // Laguerre m=7, n=4 at α ∈ {0, 1}: magnitudes Γ(5+α)·{…}, signs (−1)^j.
    // Sign verdict (quadrature oracle): R = −Γ(n+1+α)/n!·y·₁F₁(1−m;2;y)
    // holds as written, so c₁ < 0; the circulated R_{7,4} table with the
    // opposite overall sign fails the oracle.
    let mags = [
        1.0 / 24.0,
        1.0 / 8.0,
        5.0 / 48.0,
        5.0 / 144.0,
        1.0 / 192.0,
        1.0 / 2880.0,
        1.0 / 120960.0,
    ];
    for alpha in [0.0, 1.0] {
        let g5a = gamma_ratio(&[5.0 + alpha], &[]).expect("Γ(5+α)");
        let coeffs = mags
            .iter()
            .enumerate()
            .map(|(i, &mag)| {
                let j = (i + 1) as u32;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                (j, sign * mag * g5a)
            })
            .collect();
        v.push(Fixture {
            family: Family::laguerre(alpha).expect("alpha valid"),
            m: 7,
            n: 4,
            coeffs,
        });
    }
    // Hermite: c_m = 2^{n+m} √π (m+1)ₙ for all m, n ≤ 10
    for m in 0..=10u32 {
        for n in 0..=10u32 {
            let cm = std::f64::consts::PI.sqrt()
                * 2.0_f64.powi((n + m) as i32)
                * pochhammer((m + 1) as f64, n);
            v.push(Fixture {
                family: Family::Hermite,
                m,
                n,
                coeffs: vec![(m, cm)],
            });
        }
    }
    v
}

/// Displayed Gegenbauer R_{5,4} / R_{6,4} polynomial coefficients.
fn gegenbauer_display(m: u32, alpha: f64) -> Vec<(u32, f64)> {
    let a = alpha;
    let base = std::f64::consts::PI.sqrt() * gamma_ratio(&[2.5 + a], &[5.0 + a]).expect("Γ ratio");
    let poly8 = a * a * (1.0 + a) * (1.0 + a) * (2.0 + a) * (3.0 + a) * (4.0 + a);
    match m {
        5 => vec![
            (1, base / 3.0 * 4.0 * poly8),
            (3, base / 3.0 * 8.0 * poly8 * (6.0 + a) * (7.0 + a)),
            (
                5,
                base / 45.0 * 8.0 * poly8 * (5.0 + a) * (6.0 + a) * (7.0 + a) * (8.0 + a),
            ),
        ],
        6 => vec![
            (2, base * 4.0 * poly8 * (7.0 + a)),
            (
                4,
                base / 9.0 * 16.0 * poly8 * (6.0 + a) * (7.0 + a) * (8.0 + a),
            ),
            (
                6,
                base / 135.0
                    * 8.0
                    * poly8
                    * (5.0 + a)
                    * (6.0 + a)
                    * (7.0 + a)
                    * (8.0 + a)
                    * (9.0 + a),
            ),
        ],
        _ => unreachable!("only m = 5, 6 are displayed"),
    }
}

pub fn paper_fixtures(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("paper-fixtures", TOL_FIXTURE_CLOSED * cfg.tol_scale);
    let oracle_tol = TOL_FIXTURE_ORACLE * cfg.tol_scale;
    let mut worst_oracle = 0.0_f64;
    for fx in fixtures() {
        if !keep(cfg, &fx.family) {
            continue;
        }
        let closed = match corr::coefficient_vector(&fx.family, fx.m, fx.n) {
            Ok(cv) => cv,
            Err(e) => {
                out.fail_note(format!("{} m={} n={}: {e}", fx.family.name(), fx.m, fx.n));
                continue;
            }
        };
        let oracle = match quad::oracle_coefficients(&fx.family, fx.m, fx.n) {
            Ok(cv) => cv,
            Err(e) => {
                out.fail_note(format!("{} m={} n={}: {e}", fx.family.name(), fx.m, fx.n));
                continue;
            }
        };
        for &(j, exact) in &fx.coeffs {
            out.record(rel_dev(closed.coeff(j), exact));
            // oracle interpolation path at its own documented accuracy
            let dev = rel_dev(oracle.coeff(j), exact);
            worst_oracle = worst_oracle.max(dev);
            out.checks += 1;
            if !(dev <= oracle_tol) {
                out.failures += 1;
                out.notes.push(format!(
                    "oracle coeff {} m={} n={} c{j}: dev {dev:.3e}",
                    fx.family.name(),
                    fx.m,
                    fx.n
                ));
            }
        }
        // value-level check of the fixture polynomial (negative-control aware)
        for &y in &[0.3_f64, 0.9, 1.7] {
            let exact: f64 = fx.coeffs.iter().map(|&(j, c)| c * y.powi(j as i32)).sum();
            match closed_value(cfg, &fx.family, fx.m, fx.n, y) {
                Ok(v) => out.record(rel_dev(v, exact)),
                Err(e) => out.fail_note(format!("{} value: {e}", fx.family.name())),
            }
        }
    }
    // Gegenbauer displayed polynomials vs corr_gegenbauer, rel 1e-10
    let geg_tol = TOL_SPECIALIZATION * cfg.tol_scale;
    if cfg.family.as_deref().is_none_or(|f| f == "gegenbauer") {
        for &alpha in &[0.75, 1.5] {
            for m in [5u32, 6] {
                let coeffs = gegenbauer_display(m, alpha);
                for &y in &[0.35_f64, 0.8, 1.6] {
                    let exact: f64 = coeffs.iter().map(|&(j, c)| c * y.powi(j as i32)).sum();
                    match corr::corr_gegenbauer(alpha, m, 4, y) {
                        Ok(v) => {
                            let dev = rel_dev(v, exact);
                            out.checks += 1;
                            if !(dev <= geg_tol) {
                                out.failures += 1;
                                out.notes
                                    .push(format!("gegenbauer display m={m} α={alpha}: {dev:.3e}"));
                            }
                            if dev > out.worst {
                                out.worst = dev;
                            }
                        }
                        Err(e) => out.fail_note(format!("gegenbauer display: {e}")),
                    }
                }
            }
        }
    }
    if cfg.family.as_deref().is_none_or(|f| f == "laguerre") {
        out.notes.push(
            "laguerre sign verdict: oracle confirms R = -Γ(n+1+α)/n!·y·₁F₁(1-m;2;y), \
             so coefficient signs are (-1)^j with c₁ < 0; the opposite-overall-sign \
             variant of the R_{7,4} table fails the oracle"
                .into(),
        );
    }
    out.notes.push(format!(
        "oracle-path fixture tolerance {oracle_tol:.1e}, worst {worst_oracle:.3e}"
    ));
    out
}

// ---------------------------------------------------------------------
// suite 2: closed forms vs quadrature oracle
// ---------------------------------------------------------------------

pub fn oracle_equivalence(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("oracle-equivalence", TOL_ORACLE_SWEEP * cfg.tol_scale);
    let ys = [-4.0, -2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0, 4.0];
    for fam in family_grid() {
        if !keep(cfg, &fam) {
            continue;
        }
        let mut rules: HashMap<usize, QuadratureRule<f64>> = HashMap::new();
        for m in 0..=12u32 {
            for n in 0..=12u32 {
                let nodes = ((2 * n + m + 2) / 2 + 2) as usize;
                let rule = rules
                    .entry(nodes)
                    .or_insert_with(|| QuadratureRule::gauss(&fam, nodes).expect("rule"));
                for &y in &ys {
                    let (oracle, est) = match quad::corr_oracle_on_rule(rule, m, n, y) {
                        Ok(pair) => pair,
                        Err(e) => {
                            out.fail_note(format!("oracle {} m={m} n={n}: {e}", fam.name()));
                            continue;
                        }
                    };
                    // beyond the accumulation bound, the oracle carries
                    // node-rounding and recurrence-evaluation error of
                    // order (degree × log-derivative) × eps × Σ|w·p·q|;
                    // 64·(deg+2) covers |p'/p|·|x| ≤ 64 on the grid
                    let noise = est * 64.0 * (2 * n + m + 2) as f64;
                    match closed_value(cfg, &fam, m, n, y) {
                        Ok(v) => {
                            out.record(sweep_dev(v, oracle, out.tolerance, ABS_FLOOR_SWEEP, noise))
                        }
                        Err(e) => out.fail_note(format!("closed {} m={m} n={n}: {e}", fam.name())),
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// suite 3: difference-equation residual
// ---------------------------------------------------------------------

pub fn difference_equation(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("difference-equation", TOL_RESIDUAL * cfg.tol_scale);
    let ys = [0.3, -0.3, 1.7, -1.7];
    for fam in family_grid() {
        if !keep(cfg, &fam) {
            continue;
        }
        for &y in &ys {
            let lookup = |mm: u32, nn: u32| closed_value(cfg, &fam, mm, nn, y).ok();
            for m in 1..=10u32 {
                for n in 0..=10u32 {
                    match recur::recurrence_residual(&fam, m, n, y, lookup) {
                        Ok(r) => out.record(r.normalized.abs()),
                        Err(e) => out.fail_note(format!("{} m={m} n={n}: {e}", fam.name())),
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// suite 4: specialization chains
// ---------------------------------------------------------------------

pub fn specializations(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("specializations", TOL_SPECIALIZATION * cfg.tol_scale);
    let jacobi_tol = TOL_SPECIALIZATION_JACOBI * cfg.tol_scale;
    if cfg.family.is_some() {
        out.notes
            .push("specialization chains ignore the family filter".into());
    }
    let t = Family::ChebyshevT;
    let u = Family::ChebyshevU;
    let p = Family::Legendre;
    let g1 = Family::gegenbauer(1.0).expect("α=1");
    let g_half = Family::gegenbauer(0.5).expect("α=1/2");
    let j_cheb = Family::jacobi(-0.5, -0.5).expect("α=β=-1/2");
    for m in 1..=10u32 {
        for n in 0..=8u32 {
            for &y in &[0.25, 1.5] {
                let cu = closed_value(cfg, &u, m, n, y).expect("chebyshev-u");
                let cg1 = closed_value(cfg, &g1, m, n, y).expect("gegenbauer 1");
                out.record(rel_dev(cu, cg1));
                let cp = closed_value(cfg, &p, m, n, y).expect("legendre");
                let cgh = closed_value(cfg, &g_half, m, n, y).expect("gegenbauer 1/2");
                out.record(rel_dev(cp, cgh));
                // S_T = 2^{4n+2m} Γ(n+1)²Γ(n+m+1)² / (Γ(2n+1)Γ(2n+2m+1)) · S_J[-1/2,-1/2]
                let nf = n as f64;
                let mf = m as f64;
                let scale = 4.0_f64.powi((2 * n + m) as i32)
                    * gamma_ratio(
                        &[nf + 1.0, nf + 1.0, nf + mf + 1.0, nf + mf + 1.0],
                        &[2.0 * nf + 1.0, 2.0 * (nf + mf) + 1.0],
                    )
                    .expect("Γ ratio");
                let sj = closed_value(cfg, &j_cheb, m, n, y).expect("jacobi(-1/2,-1/2)");
                let st = closed_value(cfg, &t, m, n, y).expect("chebyshev-t");
                let dev = rel_dev(scale * sj, st);
                out.checks += 1;
                if !(dev <= jacobi_tol) {
                    out.failures += 1;
                    out.notes
                        .push(format!("jacobi→chebyshev-t m={m} n={n} y={y}: {dev:.3e}"));
                }
                if dev > out.worst {
                    out.worst = dev;
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// suite 5: lemma/transform identities on randomized instances
// ---------------------------------------------------------------------

fn draw_nonintegral(rng: &mut ChaCha8Rng, lo: f64, hi: f64, guard: f64) -> f64 {
    loop {
        let v: f64 = rng.gen_range(lo..hi);
        if (v - v.round()).abs() > guard && (2.0 * v - (2.0 * v).round()).abs() > guard {
            return v;
        }
    }
}

fn draw_arg(rng: &mut ChaCha8Rng, max: f64) -> f64 {
    loop {
        let v: f64 = rng.gen_range(-max..max);
        if v.abs() > 0.2 {
            return v;
        }
    }
}

pub fn lemma_properties(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("lemma-properties", TOL_LEMMA * cfg.tol_scale);
    if cfg.family.is_some() {
        out.notes
            .push("transform identities are family-independent; filter ignored".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    // series reversal: 500 terminating instances
    for _ in 0..500 {
        let n: u32 = rng.gen_range(0..=8);
        let p: usize = rng.gen_range(1..=3);
        let mut upper = vec![-(n as f64)];
        for _ in 0..p {
            upper.push(draw_nonintegral(&mut rng, -8.0, 8.0, 0.06));
        }
        let lower: Vec<f64> = (0..p)
            .map(|_| draw_nonintegral(&mut rng, -8.0, 8.0, 0.06))
            .collect();
        let x = draw_arg(&mut rng, 3.0);
        let series = HypSeries::auto(upper, lower, x).expect("draws avoid poles");
        let (lhs, est_l) = series.eval_with_est();
        match series.lemma1_reverse() {
            Ok((pref, rev)) => {
                let (rv, est_r) = rev.eval_with_est();
                let rhs = pref * rv;
                let noise = 32.0 * (est_l + pref.abs() * est_r);
                out.record(sweep_dev(lhs, rhs, out.tolerance, 0.0, noise));
            }
            Err(e) => out.fail_note(format!("lemma1: {e}")),
        }
    }

    // regularized shift: 500 terminating instances, LHS from the direct
    // regularized sum Σ_{k>M} ∏(a)_k x^k / (Γ(k−M) ∏(b)_k k!)
    for _ in 0..500 {
        let k_end: u32 = rng.gen_range(1..=8);
        let m_low: u32 = rng.gen_range(0..k_end.min(5));
        let p: usize = rng.gen_range(1..=2);
        let mut upper = vec![-(k_end as f64)];
        for _ in 0..p {
            upper.push(draw_nonintegral(&mut rng, -8.0, 8.0, 0.06));
        }
        let b2 = draw_nonintegral(&mut rng, -8.0, 8.0, 0.06);
        let lower = vec![-(m_low as f64), b2];
        let x = draw_arg(&mut rng, 2.0);
        let mut lhs = NeumaierSum::new();
        for k in (m_low + 1)..=k_end {
            let mut t = x.powi(k as i32);
            for &a in &upper {
                t *= pochhammer(a, k);
            }
            t /= pochhammer(b2, k);
            // Γ(k−M)·k! written as (1)_{k−M−1}·(1)_k
            t /= pochhammer(1.0, k - m_low - 1) * pochhammer(1.0, k);
            lhs.add(t);
        }
        let est_l = lhs.est_error();
        let lhs = lhs.value();
        let rhs = lemma2_shift(&upper, &lower, x).and_then(|s| {
            let (v, e) = s.series()?.eval_with_est();
            Ok((s.prefactor * v, s.prefactor.abs() * e))
        });
        match rhs {
            Ok((rhs, est_r)) => {
                let noise = 32.0 * (est_l + est_r);
                out.record(sweep_dev(lhs, rhs, out.tolerance, 0.0, noise));
            }
            Err(e) => out.fail_note(format!("lemma2: {e}")),
        }
    }

    // symmetric F₂ single-sum expansion: 200 instances
    for _ in 0..200 {
        let m: u32 = rng.gen_range(1..=6);
        let b1 = draw_nonintegral(&mut rng, -8.0, 8.0, 0.1);
        let b2 = draw_nonintegral(&mut rng, -8.0, 8.0, 0.1);
        let c1 = draw_nonintegral(&mut rng, -8.0, 8.0, 0.1);
        let c2 = draw_nonintegral(&mut rng, -8.0, 8.0, 0.1);
        let x = draw_arg(&mut rng, 2.0);
        let f2 = AppellF2::new(-(m as f64), b1, b2, c1, c2, -x, x).expect("draws avoid poles");
        match f2.symmetric_single_sum() {
            Ok(single) => {
                let (double, est) = f2.eval_with_est();
                out.record(sweep_dev(single, double, out.tolerance, 0.0, 64.0 * est));
            }
            Err(e) => out.fail_note(format!("symmetric expansion: {e}")),
        }
    }

    // ₄F₃ reduction of the (2b1, 2b2) pattern: 200 instances
    for _ in 0..200 {
        let m: u32 = rng.gen_range(1..=8);
        let (b1, b2) = loop {
            let b1 = draw_nonintegral(&mut rng, -4.0, 4.0, 0.1);
            let b2 = draw_nonintegral(&mut rng, -4.0, 4.0, 0.1);
            let s: f64 = b1 + b2;
            if (s - s.round()).abs() > 0.1 && (2.0 * s - (2.0 * s).round()).abs() > 0.1 {
                break (b1, b2);
            }
        };
        let x = draw_arg(&mut rng, 2.0);
        let f2 = AppellF2::new(-(m as f64), b1, b2, 2.0 * b1, 2.0 * b2, -x, x)
            .expect("draws avoid poles");
        match f2.symmetric_to_4f3() {
            Ok(series) => {
                let (reduced, est_r) = series.eval_with_est();
                let (double, est_d) = f2.eval_with_est();
                out.record(sweep_dev(
                    reduced,
                    double,
                    out.tolerance,
                    0.0,
                    32.0 * (est_r + est_d),
                ));
            }
            Err(e) => out.fail_note(format!("4F3 reduction: {e}")),
        }
    }
    out
}

// ---------------------------------------------------------------------
// suite 6: structural properties
// ---------------------------------------------------------------------

pub fn structural(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("structural", TOL_PARITY * cfg.tol_scale);
    let degree_tol = TOL_DEGREE * cfg.tol_scale;
    let norm_tol = TOL_NORM_CONSTANT * cfg.tol_scale;

    // parity for symmetric weights (and Jacobi α=β)
    let mut symmetric: Vec<Family<f64>> = vec![
        Family::Legendre,
        Family::ChebyshevT,
        Family::ChebyshevU,
        Family::Hermite,
        Family::gegenbauer(0.75).expect("α"),
        Family::gegenbauer(2.5).expect("α"),
        Family::jacobi(1.3, 1.3).expect("α=β"),
        Family::jacobi(-0.4, -0.4).expect("α=β"),
    ];
    symmetric.retain(|f| keep(cfg, f));
    for fam in &symmetric {
        for m in 1..=8u32 {
            for n in [0u32, 3, 6] {
                for &y in &[0.6, 2.7] {
                    let plus = closed_value(cfg, fam, m, n, y).expect("closed");
                    let minus = closed_value(cfg, fam, m, n, -y).expect("closed");
                    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                    out.record(rel_dev(minus, sign * plus));
                }
            }
        }
    }

    // degree exactly m: Newton interpolation through m+2 points has a
    // negligible degree-(m+1) coefficient and a live degree-m one
    let assay: Vec<Family<f64>> = family_grid().into_iter().filter(|f| keep(cfg, f)).collect();
    for fam in &assay {
        for m in [1u32, 2, 3, 5, 8, 12] {
            for n in [0u32, 3] {
                let count = (m + 2) as usize;
                let mut ys = Vec::with_capacity(count);
                let mut vals = Vec::with_capacity(count);
                for i in 0..count {
                    let angle = std::f64::consts::PI * (2 * i + 1) as f64 / (2 * count) as f64;
                    let y = -angle.cos();
                    ys.push(y);
                    vals.push(closed_value(cfg, fam, m, n, y).expect("closed"));
                }
                let coeffs = newton_monomials(&ys, &vals);
                let scale = coeffs.iter().fold(0.0_f64, |acc, c| acc.max(c.abs()));
                let top = coeffs[count - 1].abs() / scale;
                out.checks += 1;
                if !(top <= degree_tol) {
                    out.failures += 1;
                    out.notes.push(format!(
                        "degree>{m} leakage {} m={m} n={n}: {top:.3e}",
                        fam.name()
                    ));
                }
                if top > out.worst {
                    out.worst = top;
                }
                let lead = coeffs[count - 2].abs() / scale;
                out.checks += 1;
                if !(lead > degree_tol) {
                    out.failures += 1;
                    out.notes
                        .push(format!("degree<{m} (dead c_m) {} m={m} n={n}", fam.name()));
                }
            }
        }
    }

    // m = 0 constancy: corr(…, 0, n, y) = hₙ for all y
    for fam in &assay {
        for n in 0..=6u32 {
            let h = fam.norm_h(n).expect("norm");
            for &y in &[-3.3, -1.0, 0.2, 2.8] {
                let v = closed_value(cfg, fam, 0, n, y).expect("closed");
                let dev = rel_dev(v, h);
                out.checks += 1;
                if !(dev <= norm_tol) {
                    out.failures += 1;
                    out.notes
                        .push(format!("m=0 {} n={n} y={y}: {dev:.3e}", fam.name()));
                }
                if dev > out.worst {
                    out.worst = dev;
                }
            }
        }
    }

    // Saalschütz balance on every emitted hypergeometric form
    for fam in &assay {
        if matches!(fam, Family::Laguerre { .. } | Family::Hermite) {
            continue;
        }
        for m in 1..=12u32 {
            for n in 0..=12u32 {
                let form = corr::hyp_form(fam, m, n, 2.5).expect("hyp form");
                out.checks += 1;
                if !form.is_saalschutzian() {
                    out.failures += 1;
                    out.notes
                        .push(format!("saalschütz violation {} m={m} n={n}", fam.name()));
                }
            }
        }
    }
    out
}

/// Monomial coefficients of the Newton interpolant through (xs, vals).
fn newton_monomials(xs: &[f64], vals: &[f64]) -> Vec<f64> {
    let count = xs.len();
    let mut dd = vals.to_vec();
    for order in 1..count {
        for i in (order..count).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - order]);
        }
    }
    let mut coeffs = vec![0.0; count];
    let mut basis = vec![0.0; count];
    basis[0] = 1.0;
    coeffs[0] = dd[0];
    for i in 1..count {
        for j in (1..=i).rev() {
            basis[j] = basis[j - 1] - xs[i - 1] * basis[j];
        }
        basis[0] *= -xs[i - 1];
        for j in 0..=i {
            coeffs[j] += dd[i] * basis[j];
        }
    }
    coeffs
}

// ---------------------------------------------------------------------
// suite 7: quadrature self-test
// ---------------------------------------------------------------------

pub fn quadrature_selftest(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("quadrature-selftest", TOL_MOMENTS * cfg.tol_scale);
    let self_tol = TOL_ORACLE_SELF * cfg.tol_scale;
    let max_n = 40usize;
    let fams: Vec<Family<f64>> = family_grid().into_iter().filter(|f| keep(cfg, f)).collect();
    for fam in &fams {
        // exact moments via basis conversion: x^k = Σ_j c_j p_j(x) using
        // x·p_j = (p_{j+1} − B_j p_j + C_j p_{j−1})/A_j; μ_k = c_0 μ₀
        let mu0 = quad::moment_zero(fam).expect("μ₀");
        let top = 2 * max_n; // need k ≤ 2N−1
        let mut moments = Vec::with_capacity(top);
        let mut basis = vec![0.0_f64; 1];
        basis[0] = 1.0;
        moments.push(mu0); // μ₀
        for _k in 1..top {
            let mut next = vec![0.0_f64; basis.len() + 1];
            for (j, &cj) in basis.iter().enumerate() {
                if cj == 0.0 {
                    continue;
                }
                let rc = fam.recurrence_coeffs_generating(j as u32).expect("coeffs");
                next[j + 1] += cj / rc.a;
                next[j] -= cj * rc.b / rc.a;
                if j > 0 {
                    next[j - 1] += cj * rc.c / rc.a;
                }
            }
            moments.push(next[0] * mu0);
            basis = next;
        }

        let mut prev_nodes: Vec<f64> = Vec::new();
        for n in 1..=max_n {
            let rule = QuadratureRule::gauss(fam, n).expect("rule");
            // moment exactness for all k ≤ 2N−1
            for (k, &mu) in moments.iter().enumerate().take(2 * n) {
                let mut acc = NeumaierSum::new();
                let mut scale = 0.0_f64;
                for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
                    let t = w * x.powi(k as i32);
                    acc.add(t);
                    scale += t.abs();
                }
                let q = acc.value();
                out.record((q - mu).abs() / mu.abs().max(scale).max(1e-300));
            }
            // interlacing against the previous rule
            if !prev_nodes.is_empty() {
                let nodes = rule.nodes();
                let mut ok = true;
                for (i, &prev) in prev_nodes.iter().enumerate() {
                    if !(nodes[i] < prev && prev < nodes[i + 1]) {
                        ok = false;
                    }
                }
                out.checks += 1;
                if !ok {
                    out.failures += 1;
                    out.notes
                        .push(format!("interlacing violated {} at N={n}", fam.name()));
                }
            }
            prev_nodes = rule.nodes().to_vec();
        }
    }
    // oracle self-consistency: N vs N+5 nodes
    for fam in &fams {
        for &(m, n, y) in &[(3u32, 2u32, 0.7), (8, 4, 1.3), (1, 0, -2.2)] {
            let base_nodes = ((2 * n + m + 2) / 2 + 2) as usize;
            let a = quad::corr_oracle_on_rule(
                &QuadratureRule::gauss(fam, base_nodes).expect("rule"),
                m,
                n,
                y,
            )
            .expect("oracle")
            .0;
            let b = quad::corr_oracle_on_rule(
                &QuadratureRule::gauss(fam, base_nodes + 5).expect("rule"),
                m,
                n,
                y,
            )
            .expect("oracle")
            .0;
            let dev = rel_dev(a, b);
            out.checks += 1;
            if !(dev <= self_tol) {
                out.failures += 1;
                out.notes.push(format!(
                    "oracle N vs N+5 {} m={m} n={n}: {dev:.3e}",
                    fam.name()
                ));
            }
            if dev > out.worst {
                out.worst = dev;
            }
        }
    }
    out
}

/// Runs every suite in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteOutcome> {
    vec![
        paper_fixtures(cfg),
        oracle_equivalence(cfg),
        difference_equation(cfg),
        specializations(cfg),
        lemma_properties(cfg),
        structural(cfg),
        quadrature_selftest(cfg),
    ]
}
