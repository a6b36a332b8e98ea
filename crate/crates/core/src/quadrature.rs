//! Reference integrators for `cos(cos x)`.
//!
//! [`adaptive_simpson`] is the classic recursive Cavalieri-Simpson scheme:
//! a panel is accepted when `|S_left + S_right − S_whole| <= 15·tol`, the
//! tolerance is halved for each child, and accepted panels carry the
//! Richardson correction `(S_left + S_right − S_whole)/15`. Panels wider
//! than [`MAX_ACCEPTED_WIDTH`] are always split: on a periodic integrand the
//! five samples of a wide panel can agree by accident and pass the test.
//!
//! [`periodic_oracle`] uses that `cos(cos x)` has period π and mean J₀(1):
//! every whole period contributes exactly `π·J₀(1)`, and only the remainder
//! shorter than π is integrated numerically.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::constants;

/// Deepest allowed bisection level.
pub const MAX_DEPTH: u32 = 60;

/// Widest panel the acceptance test may accept.
pub const MAX_ACCEPTED_WIDTH: f64 = 1.0;

/// A closed integration interval `[lo, hi]` with finite `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "interval bounds must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo > hi {
            return Err(Error::InvalidArgument(format!(
                "interval requires lo <= hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    /// `[-half_width, half_width]`.
    pub fn symmetric(half_width: f64) -> Result<Self> {
        Self::new(-half_width, half_width)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Both bounds moved by `offset`.
    pub fn shifted(&self, offset: f64) -> Result<Self> {
        Self::new(self.lo + offset, self.hi + offset)
    }
}

/// Outcome of an adaptive quadrature run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Sum of `|S_left + S_right − S_whole| / 15` over accepted panels.
    pub error_estimate: f64,
    /// Number of integrand evaluations.
    pub evaluations: usize,
    pub max_depth_reached: u32,
}

/// The integrand `cos(cos x)`.
pub fn cos_cos(x: f64) -> f64 {
    x.cos().cos()
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

struct Simpson<F> {
    f: F,
    evaluations: usize,
    max_depth: u32,
    min_depth: u32,
    error_estimate: f64,
}

impl<F: Fn(f64) -> f64> Simpson<F> {
    fn eval(&mut self, x: f64) -> f64 {
        self.evaluations += 1;
        (self.f)(x)
    }

    fn refine(&mut self, p: Panel, tol: f64, depth: u32) -> Result<f64> {
        self.max_depth = self.max_depth.max(depth);
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let flm = self.eval(lm);
        let frm = self.eval(rm);
        let h = p.b - p.a;
        let left = h / 12.0 * (p.fa + 4.0 * flm + p.fm);
        let right = h / 12.0 * (p.fm + 4.0 * frm + p.fb);
        let delta = left + right - p.whole;

        if depth >= self.min_depth && delta.abs() <= 15.0 * tol {
            self.error_estimate += delta.abs() / 15.0;
            return Ok(left + right + delta / 15.0);
        }
        if depth >= MAX_DEPTH {
            return Err(Error::ConvergenceFailure {
                lo: p.a,
                hi: p.b,
                depth,
            });
        }
        let l = self.refine(
            Panel {
                a: p.a,
                b: m,
                fa: p.fa,
                fm: flm,
                fb: p.fm,
                whole: left,
            },
            tol / 2.0,
            depth + 1,
        )?;
        let r = self.refine(
            Panel {
                a: m,
                b: p.b,
                fa: p.fm,
                fm: frm,
                fb: p.fb,
                whole: right,
            },
            tol / 2.0,
            depth + 1,
        )?;
        Ok(l + r)
    }
}

/// Adaptive Cavalieri-Simpson quadrature of `f` over `iv` to absolute
/// tolerance `tol`.
///
/// A degenerate interval returns 0 without evaluating `f`. Fails with
/// [`Error::ConvergenceFailure`] if a panel still misses its tolerance at
/// depth [`MAX_DEPTH`].
pub fn adaptive_simpson<F>(f: F, iv: Interval, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    if iv.is_degenerate() {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
            max_depth_reached: 0,
        });
    }

    let (a, b) = (iv.lo(), iv.hi());
    let min_depth = ((b - a) / MAX_ACCEPTED_WIDTH).log2().ceil().max(0.0) as u32;
    if min_depth >= MAX_DEPTH {
        return Err(Error::InvalidArgument(format!(
            "interval [{a}, {b}] is too wide for adaptive quadrature"
        )));
    }
    let mut s = Simpson {
        f,
        evaluations: 0,
        max_depth: 0,
        min_depth,
        error_estimate: 0.0,
    };
    let m = 0.5 * (a + b);
    let fa = s.eval(a);
    let fm = s.eval(m);
    let fb = s.eval(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let value = s.refine(
        Panel {
            a,
            b,
            fa,
            fm,
            fb,
            whole,
        },
        tol,
        0,
    )?;
    Ok(QuadratureResult {
        value,
        error_estimate: s.error_estimate,
        evaluations: s.evaluations,
        max_depth_reached: s.max_depth,
    })
}

/// Splits `iv` into whole π-periods and a left-anchored remainder
/// `[lo, lo + r]` with `0 <= r < π`.
pub fn period_decomposition(iv: Interval) -> (u64, Interval) {
    let width = iv.width();
    let mut periods = (width / PI).floor();
    let mut rem = width - periods * PI;
    // `floor` can land one period off when `width` is within rounding of a multiple of π
    if rem < 0.0 {
        periods -= 1.0;
        rem += PI;
    } else if rem >= PI {
        periods += 1.0;
        rem -= PI;
    }
    let rem = rem.max(0.0);
    let remainder = Interval {
        lo: iv.lo(),
        hi: iv.lo() + rem,
    };
    (periods as u64, remainder)
}

/// Integral of `cos(cos x)` over `iv` by period reduction:
/// `n·π·J₀(1) + ∫_{lo}^{lo+r} cos(cos x) dx`.
pub fn periodic_oracle(iv: Interval, tol: f64) -> Result<f64> {
    Ok(periodic_oracle_detailed(iv, tol)?.value)
}

/// [`periodic_oracle`] returning the remainder quadrature's counters.
pub fn periodic_oracle_detailed(iv: Interval, tol: f64) -> Result<QuadratureResult> {
    let (periods, remainder) = period_decomposition(iv);
    let mut q = adaptive_simpson(cos_cos, remainder, tol)?;
    q.value += periods as f64 * PI * constants().j0_1;
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn interval_validation() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert!(Interval::new(f64::NAN, 0.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(2.0, 2.0).unwrap().is_degenerate());
    }

    #[test]
    fn simpson_bessel_identity() {
        let q = adaptive_simpson(cos_cos, iv(0.0, PI), 1e-10).unwrap();
        assert!((q.value - 2.4039394306).abs() < 1e-9, "{}", q.value);
        assert!((q.value - PI * constants().j0_1).abs() < 1e-9);
        assert!(q.evaluations >= 5);
        assert!(q.error_estimate >= 0.0);
    }

    #[test]
    fn simpson_exact_for_cubics() {
        let q = adaptive_simpson(|_| 1.0, iv(0.0, 3.0), 1e-10).unwrap();
        assert_eq!(q.value, 3.0);
        assert!(q.evaluations >= 5);
        let q = adaptive_simpson(|_| 1.0, iv(0.0, 0.5), 1e-10).unwrap();
        assert_eq!(q.evaluations, 5);
        let q = adaptive_simpson(|x| x * x * x - x, iv(-1.0, 2.0), 1e-10).unwrap();
        assert!((q.value - 2.25).abs() < 1e-14);
    }

    #[test]
    fn simpson_degenerate_interval() {
        let q = adaptive_simpson(cos_cos, iv(1.3, 1.3), 1e-3).unwrap();
        assert_eq!(q.value, 0.0);
    }

    #[test]
    fn simpson_rejects_bad_tolerance() {
        for tol in [0.0, -1e-6, f64::NAN] {
            assert!(matches!(
                adaptive_simpson(cos_cos, iv(0.0, 1.0), tol),
                Err(Error::InvalidArgument(_))
            ));
        }
    }

    #[test]
    fn simpson_reports_convergence_failure() {
        // a jump cannot be resolved; the panel width at MAX_DEPTH stays
        // well above the spacing of representable numbers near the jump
        let jump = 3.0e5 + 0.1;
        let step = move |x: f64| if x < jump { 0.0 } else { 1.0 };
        match adaptive_simpson(step, iv(0.0, 1.0e6), 1e-280) {
            Err(Error::ConvergenceFailure { lo, hi, depth }) => {
                assert_eq!(depth, MAX_DEPTH);
                assert!(lo <= jump && jump <= hi);
            }
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }

    #[test]
    fn oracle_whole_periods() {
        let want = 100.0 * PI * constants().j0_1;
        let got = periodic_oracle(iv(0.0, 100.0 * PI), 1e-10).unwrap();
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        let ten = adaptive_simpson(cos_cos, iv(0.0, 10.0 * PI), 1e-10).unwrap();
        let oracle = periodic_oracle(iv(0.0, 10.0 * PI), 1e-10).unwrap();
        assert!((ten.value - oracle).abs() < 1e-8);
    }

    #[test]
    fn oracle_even_integrand() {
        let full = periodic_oracle(iv(-1.0, 1.0), 1e-12).unwrap();
        let half = adaptive_simpson(cos_cos, iv(0.0, 1.0), 1e-12)
            .unwrap()
            .value;
        assert!((full - 2.0 * half).abs() < 1e-10);
    }

    #[test]
    fn oracle_matches_simpson_on_ten_wide() {
        let a = adaptive_simpson(cos_cos, iv(-10.0, 10.0), 1e-10)
            .unwrap()
            .value;
        let b = periodic_oracle(iv(-10.0, 10.0), 1e-10).unwrap();
        assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn wide_symmetric_interval_is_not_accepted_early() {
        // the unrestricted scheme stops after 33 evaluations here with a value far off
        for w in [20.0, 50.0, 100.0] {
            let q = adaptive_simpson(cos_cos, Interval::symmetric(w).unwrap(), 1e-6).unwrap();
            let truth = periodic_oracle(Interval::symmetric(w).unwrap(), 1e-12).unwrap();
            assert!(
                (q.value - truth).abs() < 1e-6,
                "w = {w}: {} vs {truth}",
                q.value
            );
        }
    }

    #[test]
    fn decomposition_remainder_is_short() {
        for (lo, hi) in [(0.0, PI), (-3.0, 7.5), (1.0, 1.0), (-50.0, 50.0)] {
            let (n, r) = period_decomposition(iv(lo, hi));
            assert!(r.width() >= 0.0 && r.width() < PI);
            assert_eq!(r.lo(), lo);
            assert!((n as f64 * PI + r.width() - (hi - lo)).abs() < 1e-12);
        }
    }
}
