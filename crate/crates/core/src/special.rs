//! Bessel function J₀ and the scalar constants shared by the approximations.
//!
//! J₀ is summed from its ascending power series
//! `J₀(x) = Σ (−1)^m (x/2)^{2m} / (m!)²`. Terms are generated by the
//! recurrence `t_{m+1} = −t_m · (x/2)² / (m+1)²` and accumulated in
//! double-double arithmetic, so cancellation between the large alternating
//! terms for |x| near 10 does not leak into the last digits.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest |x| accepted by [`bessel_j0`].
pub const J0_DOMAIN_LIMIT: f64 = 30.0;

/// Relative truncation threshold of the series.
const SERIES_CUTOFF: f64 = 1e-18;

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl DoubleDouble {
    const fn new(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Self { hi: s, lo: err }
    }

    fn quick_two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        Self {
            hi: s,
            lo: b - (s - a),
        }
    }

    fn add(self, other: Self) -> Self {
        let s = Self::two_sum(self.hi, other.hi);
        let t = Self::two_sum(self.lo, other.lo);
        let s = Self::quick_two_sum(s.hi, s.lo + t.hi);
        Self::quick_two_sum(s.hi, s.lo + t.lo)
    }

    fn mul(self, other: Self) -> Self {
        let p = self.hi * other.hi;
        let err = self.hi.mul_add(other.hi, -p);
        let err = err + (self.hi * other.lo + self.lo * other.hi);
        Self::quick_two_sum(p, err)
    }

    fn div_f64(self, d: f64) -> Self {
        let q1 = self.hi / d;
        // remainder self - q1 * d, exact product via fma
        let p = q1 * d;
        let p_err = q1.mul_add(d, -p);
        let r = Self::two_sum(self.hi, -p);
        let r_lo = r.lo + self.lo - p_err;
        let q2 = (r.hi + r_lo) / d;
        Self::quick_two_sum(q1, q2)
    }

    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// Bessel function of the first kind of order zero.
///
/// Accurate to about 1e-15 absolute for |x| <= 10. Arguments with
/// |x| > [`J0_DOMAIN_LIMIT`] are rejected.
pub fn bessel_j0(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    if x.abs() > J0_DOMAIN_LIMIT {
        return Err(Error::OutOfDomain {
            x,
            limit: J0_DOMAIN_LIMIT,
        });
    }

    let half = DoubleDouble::new(x * 0.5);
    let quarter_sq = half.mul(half);

    let mut term = DoubleDouble::new(1.0);
    let mut sum = DoubleDouble::new(1.0);
    let mut m = 0u32;
    loop {
        let next = f64::from(m + 1);
        term = term.mul(quarter_sq).div_f64(next * next).neg();
        sum = sum.add(term);
        m += 1;
        if term.hi.abs() < SERIES_CUTOFF * (sum.hi.abs() + 1.0) {
            break;
        }
    }
    Ok(sum.value())
}

/// Scalar constants used by every approximation formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxConstants {
    pub sin1: f64,
    pub cos1: f64,
    /// J₀(1), the exact slope of the linear component of the antiderivative.
    pub j0_1: f64,
    /// Amplitude multiplier matched at multiples of π.
    pub k_a: f64,
    /// Amplitude multiplier matched at odd multiples of π/2.
    pub k_b: f64,
    /// Mean of `k_a` and `k_b`.
    pub k: f64,
}

/// Derives all constants from `sin`, `cos` and [`bessel_j0`].
pub fn derive_constants() -> ApproxConstants {
    let sin1 = 1f64.sin();
    let cos1 = 1f64.cos();
    let j0_1 = bessel_j0(1.0).expect("1 lies inside the J0 domain");
    let k_a = 2.0 * (cos1 - j0_1) / (cos1 - sin1);
    let k_b = (1.0 - j0_1) / (1.0 - sin1);
    let k = (k_a + k_b) / 2.0;
    ApproxConstants {
        sin1,
        cos1,
        j0_1,
        k_a,
        k_b,
        k,
    }
}

/// Process-wide constants, derived on first use.
pub fn constants() -> &'static ApproxConstants {
    static CONSTANTS: OnceLock<ApproxConstants> = OnceLock::new();
    CONSTANTS.get_or_init(derive_constants)
}

impl Default for ApproxConstants {
    fn default() -> Self {
        *constants()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain-f64 series with a fixed number of terms, built from factorials
    /// instead of the recurrence.
    fn series_fixed_terms(x: f64, terms: usize) -> f64 {
        let q = (x / 2.0).powi(2);
        let mut fact = 1.0f64;
        let mut sum = 0.0;
        for m in 0..terms {
            if m > 0 {
                fact *= m as f64;
            }
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * q.powi(m as i32) / (fact * fact);
        }
        sum
    }

    #[test]
    fn j0_at_zero_is_one() {
        assert_eq!(bessel_j0(0.0).unwrap(), 1.0);
    }

    #[test]
    fn j0_at_one_matches_truncated_series() {
        let a = series_fixed_terms(1.0, 25);
        let b = series_fixed_terms(1.0, 40);
        assert!((a - b).abs() < 1e-15);
        let v = bessel_j0(1.0).unwrap();
        assert!((v - a).abs() < 1e-15, "{v} vs {a}");
        assert!((v - 0.7651976865579666).abs() < 1e-14);
    }

    #[test]
    fn j0_first_root_by_bisection() {
        let (mut lo, mut hi) = (2.0, 3.0);
        let f = |x: f64| bessel_j0(x).unwrap();
        assert!(f(lo) > 0.0 && f(hi) < 0.0);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!((root - 2.404825557695773).abs() < 1e-12, "{root}");
        assert!(f(2.404825557695773).abs() < 1e-10);
    }

    #[test]
    fn j0_tabulated_values() {
        // Reference values from standard tables.
        let cases = [
            (2.0, 0.22389077914123567),
            (3.0, -0.26005195490193345),
            (5.0, -0.1775967713143383),
            (10.0, -0.24593576445134834),
        ];
        for (x, want) in cases {
            let got = bessel_j0(x).unwrap();
            assert!((got - want).abs() < 1e-14, "J0({x}) = {got}, want {want}");
            assert_eq!(got, bessel_j0(-x).unwrap());
        }
    }

    #[test]
    fn j0_truncation_depths_agree_on_grid() {
        // N = 25 and N + 15 terms of the factorial series over |x| <= 3.
        for i in 0..100 {
            let x = -3.0 + 6.0 * i as f64 / 99.0;
            let a = series_fixed_terms(x, 25);
            let b = series_fixed_terms(x, 40);
            assert!((a - b).abs() < 1e-15, "x = {x}");
            assert!((bessel_j0(x).unwrap() - b).abs() < 1e-15, "x = {x}");
        }
    }

    #[test]
    fn j0_rejects_out_of_domain() {
        assert!(matches!(bessel_j0(30.5), Err(Error::OutOfDomain { .. })));
        assert!(matches!(bessel_j0(f64::NAN), Err(Error::NonFinite(_))));
        assert!(bessel_j0(-30.0).is_ok());
    }

    #[test]
    fn constants_match_closed_forms() {
        let c = derive_constants();
        assert!(c.j0_1 > 0.765197 && c.j0_1 < 0.765198);
        assert!((c.k_a - 1.4934845).abs() < 1e-6, "{}", c.k_a);
        assert!((c.k_b - 1.4811315).abs() < 1e-6, "{}", c.k_b);
        assert_eq!(c.k, (c.k_a + c.k_b) / 2.0);
        assert!(c.k_b < c.k && c.k < c.k_a);
    }

    #[test]
    fn k_a_solves_matching_condition_at_zero() {
        // cos(cos 0) = k_a cos(cos 0) + k_a L + J0(1), where L is the limit of
        // (cos x sin(cos x) - sin 1) / sin^2 x at 0, estimated by Richardson
        // extrapolation of the raw quotient.
        let c = derive_constants();
        let q = |x: f64| (x.cos() * x.cos().sin() - c.sin1) / x.sin().powi(2);
        let h = 2e-3;
        let limit = (4.0 * q(h / 2.0) - q(h)) / 3.0;
        let k_a = (c.cos1 - c.j0_1) / (c.cos1 + limit);
        assert!((k_a - c.k_a).abs() < 1e-6, "{k_a} vs {}", c.k_a);
    }

    #[test]
    fn k_b_solves_matching_condition_at_half_pi() {
        let c = derive_constants();
        let x = std::f64::consts::FRAC_PI_2;
        let lhs = x.cos().cos();
        let bracket = x.cos().cos() + (x.cos() * x.cos().sin() - c.sin1) / x.sin().powi(2);
        let k_b = (lhs - c.j0_1) / bracket;
        assert!((k_b - c.k_b).abs() < 1e-6);
    }

    #[test]
    fn derive_constants_is_pure() {
        let a = derive_constants();
        let b = derive_constants();
        assert_eq!(a.k_a.to_bits(), b.k_a.to_bits());
        assert_eq!(a.k_b.to_bits(), b.k_b.to_bits());
        assert_eq!(a.j0_1.to_bits(), b.j0_1.to_bits());
        assert_eq!(*constants(), a);
    }
}
