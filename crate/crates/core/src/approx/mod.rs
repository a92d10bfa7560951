//! Closed-form approximations of the normalized arguments, their exact
//! expansion over `{1, pi, ln pi, ln p}` and the coefficient laws.

mod arith;
mod symbolic;

pub use arith::{
    coeff_sequence, coefficient_law, factorize, p_adic_valuation, ruler_normalized, Prime,
};
pub use symbolic::{
    symbolic_expression, symbolic_gamma_expression, SymbolicArgExpression, SYMBOLIC_MAX_N,
};

use crate::dd::{self, DoubleDouble};
use crate::error::{Error, Result};
use crate::special::{theta_dd, ThetaSeries};

/// Smooth zero-counting term `(n/2pi) ln(n/(2pi e)) + 7/8`.
pub fn main_term(n: f64) -> f64 {
    main_term_dd(n).to_f64()
}

pub(crate) fn main_term_dd(n: f64) -> DoubleDouble {
    let log = DoubleDouble::ln(n) - dd::LN_2PI - 1.0;
    (log * dd::INV_2PI).mul_f64(n) + 0.875
}

fn approx_arg_zeta_dd(n: u64) -> DoubleDouble {
    assert!(n >= 1, "approximation index must be at least 1");
    let main = main_term_dd(n as f64);
    -main + main.round_ties_even()
}

/// `round(main_term(n)) - main_term(n)`, ties to even.
///
/// # Panics
/// If `n == 0`.
pub fn approx_arg_zeta(n: u64) -> f64 {
    approx_arg_zeta_dd(n).to_f64()
}

fn theta_reference_dd(n: u64) -> DoubleDouble {
    let main = main_term_dd(n as f64);
    -(theta_dd(n as f64) * dd::INV_PI) + (main.round_ties_even() - 1.0)
}

/// `round(main_term(n)) - 1 - theta(n)/pi`, the value the corrected
/// approximation converges to, carried in double-double throughout.
pub fn theta_reference(n: u64) -> f64 {
    theta_reference_dd(n).to_f64()
}

fn check_from_two(function: &'static str, n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain {
            function,
            value: n as f64,
            constraint: "n >= 2",
        });
    }
    Ok(())
}

/// `approx_arg_zeta(n) - (1/pi) sum coeffs[k] n^-(2k+1)` with `order` terms.
pub fn corrected_approx(n: u64, order: usize) -> Result<f64> {
    check_from_two("corrected_approx", n)?;
    let series = ThetaSeries::new(order)?;
    Ok((approx_arg_zeta_dd(n) - series.correction_dd(n as f64) * dd::INV_PI).to_f64())
}

fn approx_error_dd(n: u64) -> DoubleDouble {
    theta_dd(n as f64) * dd::INV_PI + 1.0 - main_term_dd(n as f64)
}

/// `approx_arg_zeta(n) - theta_reference(n)`; positive, about `1/(48 pi n)`.
pub fn approx_error(n: u64) -> Result<f64> {
    check_from_two("approx_error", n)?;
    Ok(approx_error_dd(n).to_f64())
}

/// [`approx_error`] minus the first `k + 1` correction terms; of order `n^-(2k+3)`.
pub fn correction_remainder(n: u64, k: usize) -> Result<f64> {
    check_from_two("correction_remainder", n)?;
    let series = ThetaSeries::new(k + 1)?;
    Ok((approx_error_dd(n) - series.correction_dd(n as f64) * dd::INV_PI).to_f64())
}

/// Unwrapped gamma approximation `main_term(n) - 1 + n ln(pi) / 2pi`.
fn gamma_unwrapped_dd(n: u64) -> DoubleDouble {
    assert!(n >= 1, "approximation index must be at least 1");
    main_term_dd(n as f64) - 1.0 + (dd::LN_PI * dd::INV_2PI).mul_f64(n as f64)
}

/// The `m` with `unwrapped - 2m` in `(-1, 1]`.
pub(crate) fn gamma_wrap_multiple(n: u64) -> i64 {
    let x = gamma_unwrapped_dd(n);
    -((-x + 1.0) * 0.5).floor() as i64
}

/// Gamma approximation wrapped into `(-1, 1]`.
///
/// # Panics
/// If `n == 0`.
pub fn approx_arg_gamma(n: u64) -> f64 {
    let m = gamma_wrap_multiple(n);
    (gamma_unwrapped_dd(n) - 2.0 * m as f64).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{arg_gamma_quarter, theta_exact};
    use std::f64::consts::{E, PI};

    #[test]
    fn main_term_values() {
        assert!((main_term(1.0) - 0.4233378).abs() < 1e-7);
        assert!((main_term(2.0) - 0.1923113).abs() < 1e-7);
        assert!((main_term(2.0 * PI * E) - 0.875).abs() < 1e-15);
    }

    #[test]
    fn approximation_values() {
        assert!((approx_arg_zeta(1) + 0.423337836994).abs() < 1e-12);
        assert!((approx_arg_zeta(4) - 0.0491062514140).abs() < 1e-12);
        // printed to 12 places but accurate to about 1e-11
        assert!((approx_arg_zeta(16) - 0.291255403206).abs() < 1e-10);
        assert!((approx_arg_zeta(16) - 0.291_255_403_213_937_2).abs() < 1e-15);
        for n in 1..=10_000 {
            let a = approx_arg_zeta(n);
            assert!(a > -0.5 && a <= 0.5);
        }
    }

    #[test]
    fn corrected_form() {
        let n = 10_000;
        let one = corrected_approx(n, 1).unwrap();
        assert!((one - (approx_arg_zeta(n) - 1.0 / (48.0 * PI * n as f64))).abs() < 1e-15);
        assert_eq!(corrected_approx(2, 0).unwrap(), approx_arg_zeta(2));
        let d = (corrected_approx(100, 4).unwrap() - theta_reference(100)).abs();
        assert!(d <= 1e-12, "{d}");
        assert!(corrected_approx(1, 4).is_err());
    }

    #[test]
    fn reference_matches_f64_composition() {
        for n in [50u64, 100, 1000, 5000] {
            let main = main_term(n as f64);
            let naive = main.round() - 1.0 - theta_exact(n as f64) / PI;
            assert!((theta_reference(n) - naive).abs() < 1e-11);
        }
    }

    #[test]
    fn error_is_about_one_over_48_pi_n() {
        let e = approx_error(10_000).unwrap();
        assert!((e - 6.6314559621623e-7).abs() < 1e-12, "{e}");
        let scaled = 10_000.0 * e * 48.0 * PI;
        assert!((scaled - 1.0).abs() < 0.01);
        for n in 2..200 {
            assert!(approx_error(n).unwrap() > 0.0);
        }
        let corrected = corrected_approx(2, 4).unwrap() - theta_reference(2);
        assert!(corrected.abs() < approx_error(2).unwrap());
    }

    fn slope(k: usize) -> f64 {
        let pts: Vec<(f64, f64)> = (0..=20)
            .map(|i| 100.0 * 10f64.powf(i as f64 / 10.0))
            .map(|n| {
                let r = correction_remainder(n.round() as u64, k).unwrap();
                (n.round().ln(), r.abs().ln())
            })
            .collect();
        let m = pts.len() as f64;
        let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
        let (mx, my) = (sx / m, sy / m);
        let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        num / den
    }

    #[test]
    fn remainder_slopes() {
        assert!((slope(0) + 3.0).abs() < 0.1, "{}", slope(0));
        assert!((slope(1) + 5.0).abs() < 0.1, "{}", slope(1));
    }

    #[test]
    fn gamma_approximation() {
        let expect = -(4.0 * 2f64.ln() + PI + 4.0) / (8.0 * PI);
        assert!((approx_arg_gamma(1) - expect).abs() < 1e-15);
        assert!((approx_arg_gamma(1) + 0.394472743168).abs() < 1e-12);
        for n in 1..=100u64 {
            let a = approx_arg_gamma(n);
            assert!(a > -1.0 && a <= 1.0);
            let d = (a - arg_gamma_quarter(n as f64)).rem_euclid(2.0);
            assert!(d.min(2.0 - d) < 0.02, "n = {n}");
        }
        let gap = (approx_arg_gamma(100) - arg_gamma_quarter(100.0)).abs();
        assert!(gap <= 1.0 / (48.0 * PI * 100.0) + 1e-6, "{gap}");
    }
}
