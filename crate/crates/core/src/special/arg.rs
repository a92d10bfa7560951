use crate::dd;
use crate::error::{Error, Result};

use super::{theta_dd, zeta_critical_line};

/// `|zeta|` below which the argument is reported as undefined.
pub const AT_ZERO_THRESHOLD: f64 = 1e-12;

/// `(1/pi) Arg zeta(1/2 + it)` with the principal argument, in `(-1, 1]`.
pub fn arg_zeta_principal(t: f64) -> Result<f64> {
    let z = zeta_critical_line(t)?;
    let modulus = z.norm();
    if modulus < AT_ZERO_THRESHOLD {
        return Err(Error::AtZero { t, modulus });
    }
    Ok(normalize(z.im.atan2(z.re) / std::f64::consts::PI))
}

/// `(1/pi) Arg Gamma(1/4 + it/2)` with the principal argument, in `(-1, 1]`.
///
/// The continuous argument is `theta(t) + (t/2) ln pi`; it is reduced modulo
/// `2 pi` in double-double arithmetic before the final division.
pub fn arg_gamma_quarter(t: f64) -> f64 {
    if t < 0.0 {
        return normalize(-arg_gamma_quarter(-t));
    }
    let continuous = theta_dd(t) + dd::LN_PI.mul_f64(0.5 * t);
    let turns = (continuous / dd::TWO_PI).round_ties_even();
    let reduced = continuous - dd::TWO_PI.mul_f64(turns);
    normalize((reduced / dd::PI).to_f64())
}

/// Folds `-1` (and rounding spill past it) onto `1`.
fn normalize(x: f64) -> f64 {
    if x <= -1.0 {
        x + 2.0
    } else if x > 1.0 {
        x - 2.0
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::log_gamma_complex;
    use num_complex::Complex64;

    #[test]
    fn published_zeta_arguments() {
        let cases = [
            (1.0, -0.437_372_012_317),
            (2.0, -0.195_977_582_921),
            (4000.0, -0.382_343_520_341),
        ];
        for (t, expect) in cases {
            let got = arg_zeta_principal(t).unwrap();
            assert!((got - expect).abs() <= 1e-9, "t = {t}: {got}");
        }
    }

    #[test]
    fn zeta_argument_at_origin_is_one() {
        // zeta(1/2) < 0, so the principal argument is +pi, never -pi
        assert_eq!(arg_zeta_principal(0.0).unwrap(), 1.0);
    }

    #[test]
    fn at_zero_is_signalled() {
        // Z changes sign on [14.134725141734, 14.134725141735]
        let t = 14.134_725_141_734_693;
        match arg_zeta_principal(t) {
            Err(Error::AtZero { modulus, .. }) => assert!(modulus < 1e-12),
            other => panic!("expected at-zero, got {other:?}"),
        }
    }

    #[test]
    fn gamma_argument_values_and_symmetry() {
        assert!((arg_gamma_quarter(1.0) + 0.380_438_567_847).abs() <= 1e-9);
        assert_eq!(arg_gamma_quarter(0.0), 0.0);
        assert!((arg_gamma_quarter(-1.0) - 0.380_438_567_847).abs() <= 1e-9);
        for i in 1..=1000 {
            let t = 0.1 * i as f64;
            let s = arg_gamma_quarter(t) + arg_gamma_quarter(-t);
            // an exact +-1 pair folds to the same endpoint
            assert!(s.abs() <= 1e-13 || (s - 2.0).abs() <= 1e-13, "t = {t}");
        }
    }

    #[test]
    fn gamma_argument_matches_log_gamma() {
        for t in [0.5, 3.0, 30.0, 500.0] {
            let lg = log_gamma_complex(Complex64::new(0.25, 0.5 * t)).unwrap();
            let principal = Complex64::from_polar(1.0, lg.im).arg() / std::f64::consts::PI;
            let d = (arg_gamma_quarter(t) - principal).abs();
            assert!(d < 1e-11 || (d - 2.0).abs() < 1e-11, "t = {t}");
        }
    }

    #[test]
    fn principal_range() {
        for i in 0..400 {
            let t = 0.37 + 2.5 * i as f64;
            if let Ok(v) = arg_zeta_principal(t) {
                assert!(v > -1.0 && v <= 1.0);
            }
            let g = arg_gamma_quarter(t);
            assert!(g > -1.0 && g <= 1.0);
        }
    }
}
