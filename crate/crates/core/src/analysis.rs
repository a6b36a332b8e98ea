//! Error measurement and the random-interval benchmark.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::approx::{antiderivative, p_tilde, MethodKind};
use crate::error::{Error, Result};
use crate::quadrature::{
    adaptive_simpson, cos_cos, periodic_oracle, periodic_oracle_detailed, Interval,
};
use crate::special::ApproxConstants;

/// Oracle tolerance used for error measurement.
pub const DEFAULT_TOL_REF: f64 = 1e-10;
/// Tolerance of the timed reference quadrature.
pub const DEFAULT_TOL_TIME: f64 = 1e-6;
/// Trials per bounds entry in the reference experiment.
pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_SEED: u64 = 42;
/// Repetitions whose median is taken as one timing sample.
pub const TIMING_REPEATS: usize = 5;

/// Half-widths of the six reference bounds `[-w, w]`.
pub const REFERENCE_HALF_WIDTHS: [f64; 6] = [1.0, 5.0, 10.0, 20.0, 50.0, 100.0];

/// The six symmetric bounds of the reference experiment.
pub fn reference_bounds() -> Vec<Interval> {
    REFERENCE_HALF_WIDTHS
        .iter()
        .map(|&w| Interval::symmetric(w).expect("finite bounds"))
        .collect()
}

/// A definite integral with its cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefiniteIntegral {
    pub value: f64,
    pub method: MethodKind,
    /// Quadrature error estimate; `None` for closed forms.
    pub error_estimate: Option<f64>,
    /// Integrand evaluations for quadrature, antiderivative evaluations for closed forms.
    pub evaluations: usize,
}

/// Integral of `cos(cos x)` over `iv` with the given method.
///
/// Closed forms difference the antiderivative at the bounds; `tol` only
/// affects the quadrature methods.
pub fn definite_integral(
    iv: Interval,
    method: MethodKind,
    c: &ApproxConstants,
    tol: f64,
) -> Result<DefiniteIntegral> {
    match method {
        MethodKind::C1 | MethodKind::C2 => {
            let value = antiderivative(iv.hi(), method, c)? - antiderivative(iv.lo(), method, c)?;
            Ok(DefiniteIntegral {
                value,
                method,
                error_estimate: None,
                evaluations: 2,
            })
        }
        MethodKind::AdaptiveSimpson => {
            let q = adaptive_simpson(cos_cos, iv, tol)?;
            Ok(DefiniteIntegral {
                value: q.value,
                method,
                error_estimate: Some(q.error_estimate),
                evaluations: q.evaluations,
            })
        }
        MethodKind::PeriodicOracle => {
            let q = periodic_oracle_detailed(iv, tol)?;
            Ok(DefiniteIntegral {
                value: q.value,
                method,
                error_estimate: Some(q.error_estimate),
                evaluations: q.evaluations,
            })
        }
    }
}

/// Absolute error of a closed-form method against [`periodic_oracle`].
pub fn approximation_error(
    iv: Interval,
    method: MethodKind,
    c: &ApproxConstants,
    tol: f64,
) -> Result<f64> {
    let approx = definite_integral(iv, method, c, tol)?.value;
    Ok((approx - periodic_oracle(iv, tol)?).abs())
}

fn require_nonempty(h_range: &[i64]) -> Result<()> {
    if h_range.is_empty() {
        return Err(Error::InvalidArgument("h_range must be nonempty".into()));
    }
    Ok(())
}

/// `[-π/4 + hπ/2, π/4 + hπ/2]`, where the C₁ error peaks.
pub fn worst_case_interval(h: i64) -> Interval {
    let centre = h as f64 * FRAC_PI_2;
    Interval::new(centre - FRAC_PI_4, centre + FRAC_PI_4).expect("finite bounds")
}

/// `[hπ/2, (h+1)π/2]`, where P̃ vanishes at both ends.
pub fn best_case_interval(h: i64) -> Interval {
    Interval::new(h as f64 * FRAC_PI_2, (h + 1) as f64 * FRAC_PI_2).expect("finite bounds")
}

/// Largest C₁ error over the worst-case intervals indexed by `h_range`.
pub fn worst_case_error(h_range: &[i64], c: &ApproxConstants, tol: f64) -> Result<f64> {
    require_nonempty(h_range)?;
    h_range.iter().try_fold(0.0f64, |acc, &h| {
        Ok(acc.max(approximation_error(
            worst_case_interval(h),
            MethodKind::C1,
            c,
            tol,
        )?))
    })
}

/// Largest error of `method` over the best-case intervals indexed by `h_range`.
pub fn best_case_error(
    h_range: &[i64],
    method: MethodKind,
    c: &ApproxConstants,
    tol: f64,
) -> Result<f64> {
    require_nonempty(h_range)?;
    h_range.iter().try_fold(0.0f64, |acc, &h| {
        Ok(acc.max(approximation_error(best_case_interval(h), method, c, tol)?))
    })
}

/// Analytic worst-case bound `|P̃(π/4)|·(k_a − k_b)` for C₁.
pub fn analytic_bound(c: &ApproxConstants) -> f64 {
    p_tilde(FRAC_PI_4).expect("finite").abs() * (c.k_a - c.k_b)
}

/// Residual of the composite-integration identity
/// `∫ f(g) = F(g)/g' − ∫ F(g)·(1/g')'` for `f = g = cos` on `iv`.
///
/// Both integrals are computed by adaptive Simpson at `tol`. `iv` must sit
/// strictly inside one `(tπ, (t+1)π)` with margin 0.05 from its ends.
pub fn verify_identity_eq1(iv: Interval, tol: f64) -> Result<f64> {
    const MARGIN: f64 = 0.05;
    let t = (iv.lo() / PI).floor();
    let (left, right) = (t * PI, (t + 1.0) * PI);
    if iv.lo() - left < MARGIN || right - iv.hi() < MARGIN {
        return Err(Error::Precondition(format!(
            "[{}, {}] must lie inside ({left}, {right}) with margin {MARGIN}",
            iv.lo(),
            iv.hi()
        )));
    }
    if iv.is_degenerate() {
        return Ok(0.0);
    }
    let lhs = adaptive_simpson(cos_cos, iv, tol)?.value;
    let boundary = |x: f64| -(x.cos().sin()) / x.sin();
    // (−1/sin x)' = cos x / sin² x
    let inner = |x: f64| x.cos().sin() * x.cos() / x.sin().powi(2);
    let rhs = boundary(iv.hi()) - boundary(iv.lo()) - adaptive_simpson(inner, iv, tol)?.value;
    Ok((lhs - rhs).abs())
}

/// One row of the random-interval benchmark.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkRow {
    pub bounds: Interval,
    pub n_trials: usize,
    pub mean_error_c1: f64,
    pub mean_error_c2: f64,
    /// Seconds per definite integral.
    pub mean_time_c1: f64,
    pub mean_time_c2: f64,
    pub mean_time_ref: f64,
}

/// Parameters of [`run_benchmark`].
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkConfig {
    pub bounds: Vec<Interval>,
    pub n_trials: usize,
    pub seed: u64,
    pub tol_ref: f64,
    pub tol_time: f64,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        Self {
            bounds: reference_bounds(),
            n_trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            tol_ref: DEFAULT_TOL_REF,
            tol_time: DEFAULT_TOL_TIME,
        }
    }
}

/// Uniform random subintervals of `bounds`: two independent endpoints, ordered.
pub fn random_subintervals(bounds: Interval, n: usize, rng: &mut impl Rng) -> Vec<Interval> {
    (0..n)
        .map(|_| {
            let a = rng.random_range(bounds.lo()..=bounds.hi());
            let b = rng.random_range(bounds.lo()..=bounds.hi());
            Interval::new(a.min(b), a.max(b)).expect("finite bounds")
        })
        .collect()
}

fn median_seconds<F: FnMut() -> Result<f64>>(mut f: F) -> Result<f64> {
    let mut samples = [0.0f64; TIMING_REPEATS];
    for s in samples.iter_mut() {
        let start = Instant::now();
        black_box(f()?);
        *s = start.elapsed().as_secs_f64();
    }
    samples.sort_by(f64::total_cmp);
    Ok(samples[TIMING_REPEATS / 2])
}

/// Runs the random-interval experiment.
///
/// One RNG seeded from `config.seed` is shared across rows in order, so the
/// error columns are reproducible. Times are medians of
/// [`TIMING_REPEATS`] runs per trial, averaged over trials.
pub fn run_benchmark(config: &BenchmarkConfig, c: &ApproxConstants) -> Result<Vec<BenchmarkRow>> {
    if config.bounds.is_empty() {
        return Err(Error::InvalidArgument("bounds list is empty".into()));
    }
    if config.n_trials == 0 {
        return Err(Error::InvalidArgument("n_trials must be at least 1".into()));
    }
    for tol in [config.tol_ref, config.tol_time] {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "tolerances must be positive and finite, got {tol}"
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    config
        .bounds
        .iter()
        .map(|&bounds| {
            let trials = random_subintervals(bounds, config.n_trials, &mut rng);
            let n = trials.len() as f64;
            let (mut e1, mut e2, mut t1, mut t2, mut tref) = (0.0, 0.0, 0.0, 0.0, 0.0);
            for &iv in &trials {
                let truth = periodic_oracle(iv, config.tol_ref)?;
                e1 += (definite_integral(iv, MethodKind::C1, c, 0.0)?.value - truth).abs();
                e2 += (definite_integral(iv, MethodKind::C2, c, 0.0)?.value - truth).abs();
                t1 += median_seconds(|| {
                    Ok(definite_integral(black_box(iv), MethodKind::C1, c, 0.0)?.value)
                })?;
                t2 += median_seconds(|| {
                    Ok(definite_integral(black_box(iv), MethodKind::C2, c, 0.0)?.value)
                })?;
                tref += median_seconds(|| {
                    Ok(adaptive_simpson(cos_cos, black_box(iv), config.tol_time)?.value)
                })?;
            }
            Ok(BenchmarkRow {
                bounds,
                n_trials: config.n_trials,
                mean_error_c1: e1 / n,
                mean_error_c2: e2 / n,
                mean_time_c1: t1 / n,
                mean_time_c2: t2 / n,
                mean_time_ref: tref / n,
            })
        })
        .collect()
}
