//! Zero-ordinate estimates from the smooth counting equation, the carrier
//! functions and the half-integer staircase.

mod staircase;

pub use staircase::{
    staircase, staircase_counts, staircase_defects, staircase_jumps, StaircaseDefect,
};

use std::f64::consts::{E, PI};

use serde::Serialize;

use crate::approx::main_term;
use crate::dd;
use crate::error::{Error, Result};
use crate::special::lambert_w0;

/// Offset of the zero index in the smooth counting equation.
const INDEX_SHIFT: f64 = 11.0 / 8.0;
const NEWTON_MAX_ITERATIONS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimateMethod {
    LambertClosedForm,
    SmoothSolve,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroEstimate {
    pub index_n: u64,
    pub estimate: f64,
    pub method: EstimateMethod,
}

impl ZeroEstimate {
    pub fn compute(index_n: u64, method: EstimateMethod) -> Result<Self> {
        let estimate = match method {
            EstimateMethod::LambertClosedForm => zero_estimate_lambert(index_n)?,
            EstimateMethod::SmoothSolve => solve_smooth_transcendental(index_n)?,
        };
        Ok(Self {
            index_n,
            estimate,
            method,
        })
    }
}

fn check_index(function: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            function,
            value: 0.0,
            constraint: "n >= 1",
        });
    }
    Ok(())
}

/// `2pi (n - 11/8) / W((n - 11/8) / e)`, the explicit inverse of the smooth
/// counting equation.
pub fn zero_estimate_lambert(n: u64) -> Result<f64> {
    check_index("zero_estimate_lambert", n)?;
    let m = n as f64 - INDEX_SHIFT;
    let w = lambert_w0(m / E)?;
    Ok(2.0 * PI * m / w)
}

/// Left side of the smooth counting equation, `(y/2pi) ln(y/(2pi e))`.
pub fn smooth_counting_lhs(y: f64) -> f64 {
    let log = dd::DoubleDouble::ln(y) - dd::LN_2PI - 1.0;
    (log * dd::INV_2PI).mul_f64(y).to_f64()
}

/// Solve `(y/2pi) ln(y/(2pi e)) = n - 11/8` by Newton's method started from
/// the Lambert-W value, on the increasing branch `y > 2pi`.
pub fn solve_smooth_transcendental(n: u64) -> Result<f64> {
    check_index("solve_smooth_transcendental", n)?;
    let target = n as f64 - INDEX_SHIFT;
    let tol = 1e-12 * target.abs().max(1.0);
    let mut y = zero_estimate_lambert(n)?;
    for _ in 0..NEWTON_MAX_ITERATIONS {
        if !(y > 2.0 * PI) {
            return Err(Error::Domain {
                function: "solve_smooth_transcendental",
                value: n as f64,
                constraint: "Newton iterate must stay on the branch y > 2 pi",
            });
        }
        let residual = smooth_counting_lhs(y) - target;
        let slope = (y / (2.0 * PI)).ln() / (2.0 * PI);
        let dy = residual / slope;
        y -= dy;
        if residual.abs() <= tol || dy.abs() <= 4.0 * f64::EPSILON * y {
            let final_residual = smooth_counting_lhs(y) - target;
            if final_residual.abs() <= tol {
                return Ok(y);
            }
        }
    }
    Err(Error::NoConvergence {
        what: "smooth counting equation",
        iterations: NEWTON_MAX_ITERATIONS,
    })
}

/// Carrier of the zeta argument: the counting main term shifted by 1/2.
pub fn carrier_g(n: f64) -> f64 {
    main_term(n) + 0.5
}

/// Carrier of the gamma argument, `n ln(sqrt(pi)) / pi`.
pub fn carrier_gamma(n: f64) -> f64 {
    n * dd::LN_PI.hi / (2.0 * PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambert_estimate_first_zeros() {
        let y1 = zero_estimate_lambert(1).unwrap();
        assert!((y1 - 14.134725141734693).abs() < 1.0, "{y1}");
        let y2 = zero_estimate_lambert(2).unwrap();
        assert!((y2 - 21.022039638771555).abs() < 1.0, "{y2}");
        assert!(zero_estimate_lambert(0).is_err());
    }

    #[test]
    fn inversion_identity() {
        for n in 2..=500u64 {
            let y = zero_estimate_lambert(n).unwrap();
            let back = smooth_counting_lhs(y);
            assert!((back - (n as f64 - 1.375)).abs() <= 1e-10, "n = {n}");
        }
    }

    #[test]
    fn smooth_solve_agrees_with_closed_form() {
        for n in [1u64, 2, 10, 100, 1000, 4000] {
            let a = zero_estimate_lambert(n).unwrap();
            let b = solve_smooth_transcendental(n).unwrap();
            assert!((a - b).abs() <= 1e-9 * a.max(1.0), "n = {n}: {a} vs {b}");
        }
        let y = solve_smooth_transcendental(100).unwrap();
        assert!((smooth_counting_lhs(y) - 98.625).abs() <= 1e-12);
        let y10 = solve_smooth_transcendental(10).unwrap();
        assert!((y10 - 49.773_832_477_672_3).abs() < 1.0);
    }

    #[test]
    fn carriers() {
        assert!((carrier_g(1.0) - 0.92333784).abs() < 1e-7);
        assert!((carrier_g(2.0) - 0.69231130).abs() < 1e-7);
        assert_eq!(carrier_gamma(0.0), 0.0);
        assert!((carrier_gamma(1.0) - 0.182_189_419_837_953_14).abs() < 1e-16);
        assert_eq!(carrier_gamma(2.0), 2.0 * carrier_gamma(1.0));
    }

    #[test]
    fn carrier_identity_holds_to_the_last_bit() {
        let mut x: u64 = 0x9e3779b97f4a7c15;
        for _ in 0..1000 {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            let n = 1.0 + (x >> 11) as f64 / (1u64 << 53) as f64 * 9999.0;
            let g = carrier_g(n);
            // adding 1/2 may drop the last bit of a main term below 1/2
            let ulp = f64::EPSILON * g.abs().max(0.5);
            assert!((g - main_term(n) - 0.5).abs() <= ulp, "n = {n}");
        }
    }
}
