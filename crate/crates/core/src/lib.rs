//! Moments, covariances and correlation coefficients of order statistics.
//!
//! Exponential and uniform samples are handled in exact rational arithmetic:
//! the exponential case reduces to ratios of harmonic square sums through the
//! spacing representation `X_(k) = Y_1 + ... + Y_k`, and the uniform case has
//! a closed form. Arbitrary continuous distributions go through quadrature in
//! probability space, with a seeded Monte Carlo estimator as an independent
//! cross-check.
//!
//! The core formulas are generic over [`Scalar`], so the same code evaluates
//! exactly in [`Rational`] or approximately in `f64`/`f32`. Verification
//! routines (unimodality, exponential-vs-uniform comparison, bounds, proof
//! inequalities) always run in exact arithmetic.
//!
//! ```
//! use orderstat::{corr_table, h_exp, ExactCorrTable, ExactFamily, Rational};
//!
//! let exact: Rational = h_exp(5, 1, 1)?;
//! assert_eq!(exact, Rational::new(16.into(), 41.into()));
//! let approx: f64 = h_exp(5, 1, 1)?;
//! assert!((approx - 16.0 / 41.0).abs() < 1e-15);
//! let table: ExactCorrTable = corr_table(9, 2, ExactFamily::Exponential)?;
//! assert_eq!(table.peak_k, 4);
//! # Ok::<(), orderstat::Error>(())
//! ```

pub mod bounds;
pub mod decimal;
pub mod dist;
pub mod error;
pub mod exact;
pub mod golden;
pub mod proofcheck;
pub mod report;
pub mod scalar;
pub mod scan;
pub mod verify;

pub use bounds::{h_bounds, rho_asymptotic_bounds, rho_peak_bounds, AsymptoticBounds, BoundsPair};
pub use error::{Error, Result};
pub use exact::{
    corr_table, exp_cov, exp_os_moments, h_exp, h_uniform, harmonic_sum, identity_one, identity_two, CorrTable,
    DistTag, ExactFamily, HarmonicOrder, OsMoments, SquareSums,
};
pub use report::{Failure, Quantity, VerificationReport};
pub use scalar::Scalar;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

pub type ExactCorrTable = CorrTable<Rational>;
pub type FloatCorrTable = CorrTable<f64>;
pub type ExactBounds = BoundsPair<Rational>;
pub type ExactMoments = OsMoments<Rational>;
