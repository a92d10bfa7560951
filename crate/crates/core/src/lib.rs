//! Numerical machinery for the normalized argument functions
//! `(1/pi) Arg zeta(1/2 + it)` and `(1/pi) Arg Gamma(1/4 + it/2)`.
//!
//! * [`special`] evaluates log-gamma, Riemann-Siegel theta, Lambert W,
//!   zeta on the critical line and Hardy's Z.
//! * [`zeros`] scans for critical-line zeros, counts them per unit interval
//!   and compares floor-based counting formulas with Bessel and Airy oracles.
//! * [`estimator`] holds the Lambert-W zero estimate, the smooth counting
//!   equation and the half-integer staircase.
//! * [`approx`] builds the round-to-integer approximation of the argument,
//!   its exact expansion over `{1, pi, ln pi, ln p}` and the coefficient laws.
//! * [`render`] draws unit-interval counts as a grayscale density image.
//! * [`reference`] keeps printed reference values next to their corrections.
//! * [`verify`] replays the acceptance checks.

// `!(x > 0.0)` is used on purpose throughout: it rejects NaN along with
// out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod dd;
pub mod error;
pub mod estimator;
pub mod reference;
pub mod render;
pub mod special;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
