//! Closed-form approximations C₁ and C₂ of `∫ cos(cos x) dx`.
//!
//! Both share the π-periodic odd part
//! `P̃(x) = (sin 1 · cos x − sin(cos x)) / sin x` and the exact linear part
//! `L(x) = J₀(1)·x`. C₁ scales P̃ by the constant `k`, C₂ by the
//! π-periodic multiplier `k(x)`.
//!
//! P̃ reads 0/0 at every multiple of π. Evaluation reduces the argument to
//! `δ = x − tπ ∈ [−π/2, π/2]` (P̃ is π-periodic) and rewrites the numerator
//! in terms of `u = 1 − cos δ = 2 sin²(δ/2)`, which removes the
//! cancellation. Within [`SINGULARITY_RADIUS`] of tπ the local expansion
//! `(cos 1 − sin 1)·δ/2 + (cos 1 + 2 sin 1)·δ³/24` is used.

use std::f64::consts::PI;

use crate::error::{finite, Error, Result};
use crate::special::ApproxConstants;

/// Switch-over radius for the Taylor branch around multiples of π.
pub const SINGULARITY_RADIUS: f64 = 1e-4;

/// A finite evaluation abscissa in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EvalPoint(f64);

impl EvalPoint {
    pub fn new(x: f64) -> Result<Self> {
        finite(x).map(Self)
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for EvalPoint {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        Self::new(x)
    }
}

/// Integration strategy selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodKind {
    /// Constant-multiplier approximation C₁.
    C1,
    /// Variable-multiplier approximation C₂.
    C2,
    /// Adaptive Cavalieri-Simpson quadrature.
    AdaptiveSimpson,
    /// Whole-period reduction plus quadrature of the remainder.
    PeriodicOracle,
}

impl MethodKind {
    pub fn is_closed_form(self) -> bool {
        matches!(self, MethodKind::C1 | MethodKind::C2)
    }

    pub fn name(self) -> &'static str {
        match self {
            MethodKind::C1 => "c1",
            MethodKind::C2 => "c2",
            MethodKind::AdaptiveSimpson => "simpson",
            MethodKind::PeriodicOracle => "oracle",
        }
    }
}

impl std::fmt::Display for MethodKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MethodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c1" => Ok(MethodKind::C1),
            "c2" => Ok(MethodKind::C2),
            "simpson" | "adaptive-simpson" => Ok(MethodKind::AdaptiveSimpson),
            "oracle" | "periodic-oracle" => Ok(MethodKind::PeriodicOracle),
            other => Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
        }
    }
}

/// Splits `x` into `δ = x − tπ` with `|δ| <= π/2`.
fn reduce_mod_pi(x: f64) -> f64 {
    let t = (x / PI).round();
    x - t * PI
}

/// `sin 1 · cos δ − sin(cos δ)` without cancellation for small δ.
fn numerator(delta: f64, sin1: f64, cos1: f64) -> f64 {
    let half = (delta * 0.5).sin();
    let u = 2.0 * half * half;
    let v = (u * 0.5).sin();
    cos1 * u.sin() - sin1 * u + 2.0 * sin1 * v * v
}

/// `cos δ · sin(cos δ) − sin 1` without cancellation for small δ.
fn derivative_numerator(delta: f64, sin1: f64, cos1: f64) -> f64 {
    let half = (delta * 0.5).sin();
    let u = 2.0 * half * half;
    let v = (u * 0.5).sin();
    let (su, cu) = u.sin_cos();
    -2.0 * sin1 * v * v - cos1 * su - u * sin1 * cu + u * cos1 * su
}

/// Periodic part P̃(x) = −sin(cos x)/sin x + sin(1)·cot x.
///
/// Defined for every finite `x`; at multiples of π the removable
/// singularity is filled with its limit 0.
pub fn p_tilde(x: f64) -> Result<f64> {
    let x = finite(x)?;
    let (sin1, cos1) = 1f64.sin_cos();
    let delta = reduce_mod_pi(x);
    if delta.abs() < SINGULARITY_RADIUS {
        let d3 = delta * delta * delta;
        return Ok((cos1 - sin1) * delta / 2.0 + (cos1 + 2.0 * sin1) * d3 / 24.0);
    }
    Ok(numerator(delta, sin1, cos1) / delta.sin())
}

/// Analytic derivative of P̃:
/// `cos(cos x) + (cos x · sin(cos x) − sin 1) / sin² x`.
///
/// The limit at multiples of π is `(cos 1 − sin 1)/2`.
pub fn p_tilde_derivative(x: f64) -> Result<f64> {
    let x = finite(x)?;
    let (sin1, cos1) = 1f64.sin_cos();
    let delta = reduce_mod_pi(x);
    if delta.abs() < SINGULARITY_RADIUS {
        return Ok((cos1 - sin1) / 2.0 + (cos1 + 2.0 * sin1) * delta * delta / 8.0);
    }
    let s = delta.sin();
    Ok(delta.cos().cos() + derivative_numerator(delta, sin1, cos1) / (s * s))
}

/// Linear part L(x) = J₀(1)·x.
pub fn l_linear(x: f64, c: &ApproxConstants) -> f64 {
    c.j0_1 * x
}

/// Multiplier k(x) = (k_a − k_b)/2 · cos 2x + (k_a + k_b)/2, always in [k_b, k_a].
pub fn k_of_x(x: f64, c: &ApproxConstants) -> f64 {
    let v = (c.k_a - c.k_b) / 2.0 * (2.0 * x).cos() + (c.k_a + c.k_b) / 2.0;
    v.clamp(c.k_b, c.k_a)
}

/// First approximation C₁(x) = k·P̃(x) + J₀(1)·x.
pub fn c1(x: f64, c: &ApproxConstants) -> Result<f64> {
    Ok(c.k * p_tilde(x)? + l_linear(x, c))
}

/// Improved approximation C₂(x) = k(x)·P̃(x) + J₀(1)·x.
pub fn c2(x: f64, c: &ApproxConstants) -> Result<f64> {
    Ok(k_of_x(x, c) * p_tilde(x)? + l_linear(x, c))
}

/// Evaluates the closed-form antiderivative selected by `method`.
pub fn antiderivative(x: f64, method: MethodKind, c: &ApproxConstants) -> Result<f64> {
    match method {
        MethodKind::C1 => c1(x, c),
        MethodKind::C2 => c2(x, c),
        other => Err(Error::InvalidArgument(format!(
            "`{other}` is not a closed-form approximation"
        ))),
    }
}

/// Antiderivative of `A·cos(cos(m·x + q))`, i.e. `(A/m)·C(m·x + q)`.
pub fn scaled_antiderivative(
    x: f64,
    amplitude: f64,
    frequency: f64,
    phase: f64,
    method: MethodKind,
    c: &ApproxConstants,
) -> Result<f64> {
    finite(amplitude)?;
    finite(frequency)?;
    finite(phase)?;
    if frequency == 0.0 {
        return Err(Error::DegenerateParameter(
            "frequency m must be nonzero".into(),
        ));
    }
    if !method.is_closed_form() {
        return Err(Error::InvalidArgument(format!(
            "`{method}` is not a closed-form approximation"
        )));
    }
    let inner = frequency * finite(x)? + phase;
    Ok(amplitude / frequency * antiderivative(inner, method, c)?)
}

/// One row of [`sample_functions`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRow {
    pub x: f64,
    pub cos_cos: f64,
    /// P̃'(x) in its analytic form.
    pub derivative: f64,
    pub c1: f64,
    pub c2: f64,
    pub linear: f64,
}

/// Tabulates the integrand, the P̃ derivative, C₁, C₂ and L on `n`
/// equally spaced points covering `[lo, hi]`.
pub fn sample_functions(lo: f64, hi: f64, n: usize, c: &ApproxConstants) -> Result<Vec<SampleRow>> {
    finite(lo)?;
    finite(hi)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 sample points, got {n}"
        )));
    }
    if lo >= hi {
        return Err(Error::InvalidArgument(format!(
            "sample range requires lo < hi, got [{lo}, {hi}]"
        )));
    }
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let x = if i == n - 1 { hi } else { lo + step * i as f64 };
            Ok(SampleRow {
                x,
                cos_cos: x.cos().cos(),
                derivative: p_tilde_derivative(x)?,
                c1: c1(x, c)?,
                c2: c2(x, c)?,
                linear: l_linear(x, c),
            })
        })
        .collect()
}
