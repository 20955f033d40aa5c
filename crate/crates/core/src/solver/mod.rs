//! Root finding by strict descent on `|P|^2`.
//!
//! At a point `z0` with `P(z0) != 0` write `P(z0 + w) = c0 + w^k Q(w)` and
//! `alpha = conj(c0) Q(0)`. Along `z0 + r zeta`,
//!
//! ```text
//! |P(z0 + r zeta)|^2 - |P(z0)|^2 = 2 r^k Re[conj(c0) zeta^k Q(r zeta)] + r^2k |zeta^k Q(r zeta)|^2
//! ```
//!
//! so any `zeta` with `Re[alpha zeta^k] < 0` decreases `|P|^2` for small
//! enough `r`. The candidate directions come from [`crate::estermann`]; the
//! step radius is found by dyadic backtracking. No roots of any order,
//! angles or derivatives are taken.

mod config;
mod local_bound;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::estermann::FloatDirections;
use crate::poly::{ComplexPoly, LocalForm, PolyError};

pub use config::{DescentConfig, CONFIG_KEYS};
pub use local_bound::{verify_remark2_bound, Remark2Report, Remark2Sample};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("point is already an exact root; no descent step exists")]
    AtRoot,
    #[error("no acceptable step after {backtracks} backtracks")]
    StepFailure { backtracks: usize },
    #[error("descent value vanishes numerically although P(z0) != 0")]
    DegenerateDirection,
    #[error(
        "no convergence after {attempts} attempts; best point {best} with residual {residual:e}"
    )]
    ConvergenceFailure {
        best: Complex64,
        residual: f64,
        attempts: usize,
    },
    #[error("root {stage} (after {stage} deflations): {source}")]
    Stage {
        stage: usize,
        #[source]
        source: Box<SolveError>,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// One accepted descent step.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepRecord {
    /// Attempt index: 0 for the initial start, then one per restart.
    pub attempt: usize,
    pub from: [f64; 2],
    pub from_modulus_sq: f64,
    /// Point reached.
    pub z: [f64; 2],
    /// `|P(z)|^2` at the point reached.
    pub modulus_sq: f64,
    pub zeta: [f64; 2],
    pub k: usize,
    pub r: f64,
    pub backtracks: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct DescentTrace {
    pub steps: Vec<StepRecord>,
}

impl DescentTrace {
    /// Every step lowers `|P|^2`, and within an attempt each step starts
    /// where the previous one ended.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.steps.iter().all(|s| s.modulus_sq < s.from_modulus_sq)
            && self.steps.windows(2).all(|w| {
                w[0].attempt != w[1].attempt
                    || (w[1].from == w[0].z && w[1].modulus_sq < w[0].modulus_sq)
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootResult {
    pub root: Complex64,
    /// `|P(root)|`.
    pub residual: f64,
    /// Accepted steps, restarts and polishing included.
    pub iterations: usize,
    pub multiplicity_estimate: usize,
    pub trace: Option<DescentTrace>,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Result of a successful [`descent_step`].
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub z: Complex64,
    pub record: StepRecord,
}

/// Shared state for repeated steps on one polynomial: the direction sets
/// are built once per local order.
struct Descender<'a> {
    p: &'a ComplexPoly,
    cfg: &'a DescentConfig,
    directions: Vec<Option<FloatDirections>>,
}

impl<'a> Descender<'a> {
    fn new(p: &'a ComplexPoly, cfg: &'a DescentConfig) -> Self {
        Self {
            p,
            cfg,
            directions: Vec::new(),
        }
    }

    fn directions(&mut self, k: usize) -> &FloatDirections {
        if self.directions.len() <= k {
            self.directions.resize(k + 1, None);
        }
        self.directions[k].get_or_insert_with(|| {
            FloatDirections::for_order(k as u64).expect("local order is at least 1")
        })
    }

    fn modulus_sq(&self, z: Complex64) -> f64 {
        self.p
            .eval(&z)
            .map(|v| v.norm_sqr())
            .unwrap_or(f64::INFINITY)
    }

    /// One descent step from `z0`. With `r_prev = None` the search starts at
    /// the largest dyadic `r` with `|ck| r^k <= |c0|`.
    fn step(&mut self, z0: Complex64, r_prev: Option<f64>) -> Result<Step, SolveError> {
        let lf: LocalForm<Complex64> =
            self.p
                .local_form(&z0, self.cfg.tau_k_detect)
                .map_err(|e| match e {
                    PolyError::DegenerateLocalForm => SolveError::DegenerateDirection,
                    other => other.into(),
                })?;
        if lf.c0.norm_sqr() == 0.0 {
            return Err(SolveError::AtRoot);
        }
        let k = lf.k;
        let (zeta, value) = match self.directions(k).select(lf.alpha()) {
            Some((_, zeta, value)) => (zeta, value),
            None => return Err(SolveError::DegenerateDirection),
        };
        let f0 = lf.c0.norm_sqr();
        let predicted = self.cfg.sufficient_decrease_sigma * value.abs();
        let mut r = match r_prev {
            Some(r) => r * self.cfg.step_growth,
            None => initial_radius(&lf),
        };
        for backtracks in 0..=self.cfg.max_backtracks {
            if r == 0.0 || !r.is_finite() {
                break;
            }
            let z1 = z0 + zeta * r;
            let f1 = self.modulus_sq(z1);
            if f1 < f0 && f1 <= f0 - predicted * r.powi(k as i32) {
                return Ok(Step {
                    z: z1,
                    record: StepRecord {
                        attempt: 0,
                        from: pair(z0),
                        from_modulus_sq: f0,
                        z: pair(z1),
                        modulus_sq: f1,
                        zeta: pair(zeta),
                        k,
                        r,
                        backtracks,
                    },
                });
            }
            r *= self.cfg.step_shrink;
        }
        Err(SolveError::StepFailure {
            backtracks: self.cfg.max_backtracks,
        })
    }
}

/// Largest power of two `r` with `|ck| r^k <= |c0|` (at least the smallest
/// normal double): the radius where the leading terms balance, found by
/// doubling and halving only.
fn initial_radius(lf: &LocalForm<Complex64>) -> f64 {
    let c0 = lf.c0.norm();
    let ck = lf.ck.norm();
    let k = lf.k as i32;
    let mut r = 1.0f64;
    if ck * r.powi(k) <= c0 {
        while r < 1e300 && ck * (2.0 * r).powi(k) <= c0 {
            r *= 2.0;
        }
    } else {
        while r > f64::MIN_POSITIVE && ck * r.powi(k) > c0 {
            r *= 0.5;
        }
    }
    r
}

/// One dyadic-backtracking descent step from `z0`, starting the radius
/// search at `r_prev * step_growth` (or at the balance radius when `r_prev`
/// is `None`).
pub fn descent_step(
    p: &ComplexPoly,
    z0: Complex64,
    r_prev: Option<f64>,
    cfg: &DescentConfig,
) -> Result<Step, SolveError> {
    Descender::new(p, cfg).step(z0, r_prev)
}

/// Radical inverse of `i` in `base`.
fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let mut inv = 1.0 / base as f64;
    let mut out = 0.0;
    while i > 0 {
        out += (i % base) as f64 * inv;
        i /= base;
        inv /= base as f64;
    }
    out
}

/// Deterministic restart points: the (2, 3) Halton sequence on the square
/// `[-R, R]^2`, keeping the points inside the open disc of radius `R`.
struct RestartPoints {
    radius: f64,
    index: u64,
}

impl RestartPoints {
    fn new(radius: f64, seed: u64) -> Self {
        Self {
            radius,
            index: seed.wrapping_add(1),
        }
    }
}

impl Iterator for RestartPoints {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        loop {
            let i = self.index;
            self.index = self.index.wrapping_add(1);
            let x = (2.0 * radical_inverse(i, 2) - 1.0) * self.radius;
            let y = (2.0 * radical_inverse(i, 3) - 1.0) * self.radius;
            if x * x + y * y < self.radius * self.radius {
                return Some(Complex64::new(x, y));
            }
        }
    }
}

/// Residual threshold at `z`: `tol * sum_j |a_j| |z|^j`, the size of the
/// rounding noise in evaluating `P(z)` scaled by the tolerance.
fn residual_threshold(p: &ComplexPoly, z: Complex64, tol: f64) -> f64 {
    tol * p.eval_abs(z.norm())
}

struct Descent {
    z: Complex64,
    residual: f64,
    steps: usize,
    converged: bool,
}

impl<'a> Descender<'a> {
    /// Descends from `start` until the residual test passes and `polish`
    /// further steps have been taken, or no step can be made.
    fn run(
        &mut self,
        start: Complex64,
        attempt: usize,
        budget: usize,
        polish: usize,
        trace: &mut Option<DescentTrace>,
    ) -> Result<Descent, SolveError> {
        let tol = self.cfg.tol_residual;
        let mut z = start;
        let mut residual = self.p.eval(&z)?.norm();
        let mut r_prev = None;
        let mut steps = 0;
        let mut converged_at = None;
        while steps < budget {
            if converged_at.is_none() && residual <= residual_threshold(self.p, z, tol) {
                converged_at = Some(steps);
            }
            if converged_at.is_some_and(|c| steps >= c + polish) {
                break;
            }
            match self.step(z, r_prev) {
                Ok(step) => {
                    z = step.z;
                    residual = step.record.modulus_sq.sqrt();
                    r_prev = Some(step.record.r);
                    steps += 1;
                    if let Some(t) = trace.as_mut() {
                        t.steps.push(StepRecord {
                            attempt,
                            ..step.record
                        });
                    }
                }
                Err(SolveError::AtRoot)
                | Err(SolveError::StepFailure { .. })
                | Err(SolveError::DegenerateDirection) => break,
                Err(other) => return Err(other),
            }
        }
        let converged = residual <= residual_threshold(self.p, z, tol);
        Ok(Descent {
            z,
            residual,
            steps,
            converged,
        })
    }
}

/// Estimated number of roots clustered at `z`.
///
/// For a dyadic ladder of radii `rho` below the enclosure radius, looks for
/// an index `m` whose term dominates the shifted polynomial,
/// `|c_m| rho^m > sum_{j != m} |c_j| rho^j + noise(rho)`, which certifies
/// `m` roots in `|w - z| < rho` for every polynomial within rounding
/// distance of `P`. The smallest positive such `m` over the ladder is the
/// size of the tightest cluster around `z`. `noise` bounds the rounding
/// error of the shifted coefficients by shifting `|a_j|` to `|z|`.
pub fn multiplicity_estimate(p: &ComplexPoly, z: Complex64) -> Result<usize, PolyError> {
    let radius = p.root_bound()?;
    let shifted = p.taylor_shift(&z)?;
    let mags: Vec<f64> = shifted.coeffs().iter().map(|c| c.norm()).collect();
    let abs_poly = ComplexPoly::new(
        p.coeffs()
            .iter()
            .map(|a| Complex64::new(a.norm(), 0.0))
            .collect(),
    );
    let gamma = 4.0 * mags.len() as f64 * f64::EPSILON;
    let noise: Vec<f64> = abs_poly
        .taylor_shift(&Complex64::new(z.norm(), 0.0))?
        .coeffs()
        .iter()
        .map(|c| gamma * c.re)
        .collect();
    let mut best = None;
    let mut rho = radius;
    for _ in 0..1100 {
        rho *= 0.5;
        if rho < f64::MIN_POSITIVE {
            break;
        }
        let mut pw = 1.0;
        let mut terms = Vec::with_capacity(mags.len());
        let mut slack = 0.0;
        for (m, e) in mags.iter().zip(&noise) {
            terms.push(m * pw);
            slack += e * pw;
            pw *= rho;
        }
        let total: f64 = terms.iter().sum();
        if let Some((m, _)) = terms
            .iter()
            .enumerate()
            .find(|&(_, &t)| t > total - t + slack)
        {
            if m == 0 {
                break;
            }
            best = Some(best.map_or(m, |b: usize| b.min(m)));
        }
    }
    Ok(best.unwrap_or(1))
}

/// Descends from `z_init`, restarting at deterministic points inside the
/// enclosure disc whenever the descent stalls above the residual tolerance.
pub fn find_root(
    p: &ComplexPoly,
    z_init: Complex64,
    cfg: &DescentConfig,
    with_trace: bool,
) -> Result<RootResult, SolveError> {
    cfg.validate()?;
    let radius = p.root_bound()?;
    if !z_init.re.is_finite() || !z_init.im.is_finite() {
        return Err(SolveError::InvalidInput("non-finite starting point".into()));
    }
    let mut descender = Descender::new(p, cfg);
    let mut trace = with_trace.then(DescentTrace::default);
    let mut restarts = RestartPoints::new(radius, cfg.seed);
    let mut best: Option<(Complex64, f64)> = None;
    let mut iterations = 0;
    let mut start = z_init;
    for attempt in 0..=cfg.restart_attempts {
        let run = descender.run(start, attempt, cfg.max_iters, cfg.polish_iters, &mut trace)?;
        iterations += run.steps;
        if run.converged {
            return Ok(RootResult {
                root: run.z,
                residual: run.residual,
                iterations,
                multiplicity_estimate: multiplicity_estimate(p, run.z)?,
                trace,
            });
        }
        if best.is_none_or(|(_, r)| run.residual < r) {
            best = Some((run.z, run.residual));
        }
        start = restarts.next().expect("restart sequence is infinite");
    }
    let (best, residual) = best.expect("at least one attempt ran");
    Err(SolveError::ConvergenceFailure {
        best,
        residual,
        attempts: cfg.restart_attempts + 1,
    })
}

/// Further descent against `p` from a point already near a root.
fn polish(
    p: &ComplexPoly,
    z: Complex64,
    cfg: &DescentConfig,
    attempt: usize,
    trace: &mut Option<DescentTrace>,
) -> Result<(Complex64, usize), SolveError> {
    let mut descender = Descender::new(p, cfg);
    let run = descender.run(z, attempt, cfg.polish_iters, cfg.polish_iters, trace)?;
    Ok((run.z, run.steps))
}

/// All `n` roots, with multiplicity, sorted by `(re, im)`.
///
/// Roots are found one at a time on the deflated polynomial starting from
/// 0, polished against the original polynomial, then divided out. A final
/// pass polishes every root against the original polynomial once more.
pub fn find_all_roots(
    p: &ComplexPoly,
    cfg: &DescentConfig,
    with_trace: bool,
) -> Result<Vec<RootResult>, SolveError> {
    cfg.validate()?;
    let n = match p.degree() {
        None => return Err(PolyError::ZeroPolynomial.into()),
        Some(0) => return Err(PolyError::Constant.into()),
        Some(n) => n,
    };
    let scale = p.scale()?;
    let mut current = p.clone();
    let mut found: Vec<(Complex64, usize, Option<DescentTrace>)> = Vec::with_capacity(n);
    for stage in 0..n {
        let wrap = |e: SolveError| SolveError::Stage {
            stage,
            source: Box::new(e),
        };
        let mut res =
            find_root(&current, Complex64::new(0.0, 0.0), cfg, with_trace).map_err(wrap)?;
        let attempts = res
            .trace
            .as_ref()
            .map_or(0, |t| t.steps.last().map_or(0, |s| s.attempt + 1));
        let (z, extra) = polish(p, res.root, cfg, attempts, &mut res.trace).map_err(wrap)?;
        current = current.deflate(&z).map_err(|e| wrap(e.into()))?.0;
        found.push((z, res.iterations + extra, res.trace));
    }
    let mut results = Vec::with_capacity(n);
    for (stage, (z, iters, mut trace)) in found.into_iter().enumerate() {
        let attempt = trace
            .as_ref()
            .and_then(|t| t.steps.last())
            .map_or(0, |s| s.attempt + 1);
        let (z, extra) = polish(p, z, cfg, attempt, &mut trace)?;
        let residual = p.eval(&z)?.norm();
        if residual > cfg.tol_residual * scale {
            return Err(SolveError::Stage {
                stage,
                source: Box::new(SolveError::ConvergenceFailure {
                    best: z,
                    residual,
                    attempts: 1,
                }),
            });
        }
        results.push(RootResult {
            root: z,
            residual,
            iterations: iters + extra,
            multiplicity_estimate: multiplicity_estimate(p, z)?,
            trace,
        });
    }
    results.sort_by(|a, b| {
        a.root
            .re
            .total_cmp(&b.root.re)
            .then(a.root.im.total_cmp(&b.root.im))
    });
    Ok(results)
}

/// The nonnegative `b` with `b^n = a`, as the modulus of a root of
/// `z^n - a`; the square root inside the modulus is the only radical taken.
pub fn nth_root(a: f64, n: u32, cfg: &DescentConfig) -> Result<f64, SolveError> {
    if !(a.is_finite() && a >= 0.0) {
        return Err(SolveError::InvalidInput(format!(
            "a must be finite and >= 0, got {a}"
        )));
    }
    if n == 0 {
        return Err(SolveError::InvalidInput("n must be at least 1".into()));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n as usize + 1];
    coeffs[0] = Complex64::new(-a, 0.0);
    coeffs[n as usize] = Complex64::new(1.0, 0.0);
    let p = ComplexPoly::new(coeffs);
    let res = find_root(&p, Complex64::new(0.0, 0.0), cfg, false)?;
    Ok((res.root.re * res.root.re + res.root.im * res.root.im).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn step_on_z2_minus_1_from_origin() {
        let p = ComplexPoly::from_real(&[-1.0, 0.0, 1.0]);
        let cfg = DescentConfig::default();
        let step = descent_step(&p, c(0.0, 0.0), None, &cfg).unwrap();
        assert_eq!(step.record.k, 2);
        assert_eq!(step.record.zeta, [1.0, 0.0]);
        assert_eq!(step.record.r, 1.0);
        assert_eq!(step.record.backtracks, 0);
        assert_eq!(step.z, c(1.0, 0.0));
        assert_eq!(step.record.modulus_sq, 0.0);
    }

    #[test]
    fn step_on_linear_polynomials() {
        let cfg = DescentConfig::default();
        for cst in [c(3.0, 0.0), c(-2.0, 0.5), c(0.1, -4.0), c(-1.0, -1.0)] {
            let p = ComplexPoly::new(vec![cst, c(1.0, 0.0)]);
            // Brute force over the four units: the one minimizing Re[conj(c) zeta].
            let units = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
            let mut best = 0;
            for i in 1..4 {
                if (cst.conj() * units[i]).re < (cst.conj() * units[best]).re {
                    best = i;
                }
            }
            let step = descent_step(&p, c(0.0, 0.0), None, &cfg).unwrap();
            assert_eq!(step.record.k, 1);
            assert_eq!(step.record.zeta, [units[best].re, units[best].im]);
            assert!(step.record.modulus_sq < cst.norm_sqr());
        }
    }

    #[test]
    fn no_step_at_a_root() {
        let p = ComplexPoly::from_real(&[0.0, 0.0, 1.0]);
        assert_eq!(
            descent_step(&p, c(0.0, 0.0), None, &DescentConfig::default()),
            Err(SolveError::AtRoot)
        );
    }

    #[test]
    fn step_fails_when_budget_is_too_small() {
        // From a huge radius one halving is not enough to reach the basin.
        let p = ComplexPoly::from_real(&[-1.0, 0.0, 1.0]);
        let cfg = DescentConfig {
            max_backtracks: 1,
            ..DescentConfig::default()
        };
        assert_eq!(
            descent_step(&p, c(0.0, 0.0), Some(1e6), &cfg),
            Err(SolveError::StepFailure { backtracks: 1 })
        );
    }

    #[test]
    fn initial_radius_is_dyadic_balance_point() {
        let p = ComplexPoly::from_real(&[-8.0, 0.0, 0.0, 1.0]);
        let lf = p.local_form(&c(0.0, 0.0), 1e-12).unwrap();
        assert_eq!(initial_radius(&lf), 2.0);
        let p = ComplexPoly::from_real(&[-0.001, 1.0]);
        let lf = p.local_form(&c(0.0, 0.0), 1e-12).unwrap();
        assert_eq!(initial_radius(&lf), 2f64.powi(-10));
    }

    #[test]
    fn restart_points_stay_in_the_disc() {
        let pts: Vec<_> = RestartPoints::new(3.0, 0).take(200).collect();
        assert!(pts.iter().all(|z| z.norm() < 3.0));
        let again: Vec<_> = RestartPoints::new(3.0, 0).take(200).collect();
        assert_eq!(pts, again);
        let other: Vec<_> = RestartPoints::new(3.0, 5).take(10).collect();
        assert_ne!(pts[..10], other[..]);
    }

    #[test]
    fn find_root_examples() {
        let cfg = DescentConfig::default();
        let p = ComplexPoly::from_real(&[1.0, 0.0, 1.0]);
        let res = find_root(&p, c(0.0, 0.0), &cfg, true).unwrap();
        assert!((res.root - c(0.0, 1.0)).norm() < 1e-8 || (res.root - c(0.0, -1.0)).norm() < 1e-8);
        assert!(res.residual <= 1e-10 * p.scale().unwrap());
        assert!(res.trace.unwrap().is_strictly_decreasing());
        assert_eq!(res.multiplicity_estimate, 1);

        let p = ComplexPoly::from_real(&[-5.0, 1.0]);
        let res = find_root(&p, c(0.0, 0.0), &cfg, false).unwrap();
        assert!((res.root - c(5.0, 0.0)).norm() < 1e-12);

        let p = ComplexPoly::from_real(&[-1.0, 3.0, -3.0, 1.0]);
        let res = find_root(&p, c(0.0, 0.0), &cfg, true).unwrap();
        assert!((res.root - c(1.0, 0.0)).norm() < 1e-4, "{}", res.root);
        assert_eq!(res.multiplicity_estimate, 3);
        assert!(res.trace.unwrap().is_strictly_decreasing());
    }

    #[test]
    fn find_root_rejects_constants() {
        let cfg = DescentConfig::default();
        assert_eq!(
            find_root(&ComplexPoly::from_real(&[2.0]), c(0.0, 0.0), &cfg, false),
            Err(SolveError::Poly(PolyError::Constant))
        );
    }

    #[test]
    fn convergence_failure_reports_best_point() {
        let cfg = DescentConfig {
            max_iters: 1,
            polish_iters: 0,
            restart_attempts: 2,
            ..DescentConfig::default()
        };
        let p = ComplexPoly::from_real(&[1.0, 0.3, -2.0, 0.7, 1.0, 0.2, 1.0]);
        match find_root(&p, c(0.0, 0.0), &cfg, false) {
            Err(SolveError::ConvergenceFailure {
                residual, attempts, ..
            }) => {
                assert_eq!(attempts, 3);
                assert!(residual > 0.0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn all_roots_of_unity_cubed() {
        let p = ComplexPoly::from_real(&[-1.0, 0.0, 0.0, 1.0]);
        let roots = find_all_roots(&p, &DescentConfig::default(), false).unwrap();
        let h = 3f64.sqrt() / 2.0;
        let want = [c(-0.5, -h), c(-0.5, h), c(1.0, 0.0)];
        for (r, w) in roots.iter().zip(want) {
            assert!((r.root - w).norm() < 1e-10, "{} vs {}", r.root, w);
            assert!(r.residual <= 1e-10 * p.scale().unwrap());
        }
    }

    #[test]
    fn all_roots_with_a_double_root() {
        let p = ComplexPoly::from_real(&[2.0, -3.0, 0.0, 1.0]);
        let roots = find_all_roots(&p, &DescentConfig::default(), true).unwrap();
        assert_eq!(roots.len(), 3);
        assert!((roots[0].root - c(-2.0, 0.0)).norm() < 1e-8);
        assert_eq!(roots[0].multiplicity_estimate, 1);
        for r in &roots[1..] {
            assert!((r.root - c(1.0, 0.0)).norm() < 1e-4, "{}", r.root);
            assert_eq!(r.multiplicity_estimate, 2);
        }
        for r in &roots {
            assert!(r.trace.as_ref().unwrap().is_strictly_decreasing());
        }
    }

    #[test]
    fn all_roots_errors() {
        let cfg = DescentConfig::default();
        assert_eq!(
            find_all_roots(&ComplexPoly::from_real(&[3.0]), &cfg, false),
            Err(SolveError::Poly(PolyError::Constant))
        );
        assert_eq!(
            find_all_roots(&ComplexPoly::zero(), &cfg, false),
            Err(SolveError::Poly(PolyError::ZeroPolynomial))
        );
        let bad = DescentConfig {
            sufficient_decrease_sigma: 0.0,
            ..cfg
        };
        assert!(matches!(
            find_all_roots(&ComplexPoly::from_real(&[1.0, 1.0]), &bad, false),
            Err(SolveError::InvalidConfig(_))
        ));
    }

    #[test]
    fn nth_root_examples() {
        let cfg = DescentConfig::default();
        assert!((nth_root(8.0, 3, &cfg).unwrap() - 2.0).abs() < 1e-13);
        assert_eq!(nth_root(0.0, 5, &cfg).unwrap(), 0.0);
        assert!((nth_root(2.0, 2, &cfg).unwrap() - std::f64::consts::SQRT_2).abs() < 1e-14);
        assert!((nth_root(7.0, 1, &cfg).unwrap() - 7.0).abs() < 1e-14);
        assert!(nth_root(-1.0, 2, &cfg).is_err());
        assert!(nth_root(1.0, 0, &cfg).is_err());
    }

    #[test]
    fn multiplicity_of_simple_and_clustered_roots() {
        let p = ComplexPoly::from_real(&[-1.0, 3.0, -3.0, 1.0]);
        assert_eq!(multiplicity_estimate(&p, c(1.0 + 1e-6, 0.0)).unwrap(), 3);
        let q = ComplexPoly::from_real(&[-1.0, 0.0, 1.0]);
        assert_eq!(multiplicity_estimate(&q, c(1.0, 0.0)).unwrap(), 1);
    }
}
