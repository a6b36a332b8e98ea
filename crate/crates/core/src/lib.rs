//! Closed-form approximations of `∫ cos(cos x) dx`, which has no elementary
//! antiderivative, together with the quadrature used to check them.
//!
//! * [`special`]: J₀ by power series and the derived constants.
//! * [`approx`]: P̃, L, k(x) and the approximations C₁, C₂.
//! * [`quadrature`]: adaptive Simpson and the period-reduction oracle.
//! * [`analysis`]: error measurement and the random-interval benchmark.

pub mod analysis;
pub mod approx;
pub mod error;
pub mod quadrature;
pub mod special;

pub use analysis::{
    analytic_bound, best_case_error, definite_integral, run_benchmark, verify_identity_eq1,
    worst_case_error, BenchmarkConfig, BenchmarkRow, DefiniteIntegral,
};
pub use approx::{
    c1, c2, k_of_x, l_linear, p_tilde, p_tilde_derivative, sample_functions, scaled_antiderivative,
    EvalPoint, MethodKind, SampleRow,
};
pub use error::{Error, Result};
pub use quadrature::{adaptive_simpson, cos_cos, periodic_oracle, Interval, QuadratureResult};
pub use special::{bessel_j0, constants, derive_constants, ApproxConstants};
