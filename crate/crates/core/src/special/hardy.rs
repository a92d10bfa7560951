use num_complex::Complex64;

use super::rs_coeffs::{C0, C1, C2, C3, C4};
use super::{theta_exact, zeta_critical_line, CompensatedSum};
use crate::error::{Error, Result};

/// Ordinates on which [`hardy_z`] is supported.
pub const HARDY_Z_WINDOW: (f64, f64) = (2.0, 1e4);

/// From this ordinate up, Z uses the Riemann-Siegel formula; below it,
/// `e^{i theta} zeta(1/2 + it)` from Euler-Maclaurin.
pub const RS_THRESHOLD: f64 = 1000.0;

/// Hardy's function `Z(t) = e^{i theta(t)} zeta(1/2 + it)`, real for real `t`.
pub fn hardy_z(t: f64) -> Result<f64> {
    if !(HARDY_Z_WINDOW.0..=HARDY_Z_WINDOW.1).contains(&t) {
        return Err(Error::Range {
            function: "hardy_z",
            t,
            lo: HARDY_Z_WINDOW.0,
            hi: HARDY_Z_WINDOW.1,
        });
    }
    if t < RS_THRESHOLD {
        let zeta = zeta_critical_line(t)?;
        Ok((Complex64::from_polar(1.0, theta_exact(t)) * zeta).re)
    } else {
        Ok(riemann_siegel_z(t))
    }
}

/// Riemann-Siegel main sum plus the remainder terms `C0..C4`.
///
/// Accurate to better than 1e-9 for `t >= 1000`; usable (with larger error)
/// down to `t` of a few hundred.
pub fn riemann_siegel_z(t: f64) -> f64 {
    let a = (t / std::f64::consts::TAU).sqrt();
    let n = a.floor() as usize;
    let p = a - n as f64;
    let theta = theta_exact(t);

    let mut sum = CompensatedSum::default();
    for k in 1..=n {
        let kf = k as f64;
        sum.add((theta - t * kf.ln()).cos() / kf.sqrt());
    }

    let z = 2.0 * p - 1.0;
    let z2 = z * z;
    let inv_a = a.recip();
    let terms = [
        horner(&C0, z2),
        z * horner(&C1, z2),
        horner(&C2, z2),
        z * horner(&C3, z2),
        horner(&C4, z2),
    ];
    let remainder = terms.iter().rev().fold(0.0, |acc, &c| acc * inv_a + c);
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * sum.value() + sign * remainder / a.sqrt()
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{euler_maclaurin_terms, zeta_euler_maclaurin};

    #[test]
    fn vanishes_near_first_zero() {
        assert!(hardy_z(14.134725).unwrap().abs() <= 1e-5);
    }

    #[test]
    fn rotates_onto_zeta() {
        let t = 20.0;
        let z = hardy_z(t).unwrap();
        let rotated = Complex64::from_polar(z, -theta_exact(t));
        assert!((rotated - zeta_critical_line(t).unwrap()).norm() < 1e-8);
    }

    #[test]
    fn real_part_at_theta_root() {
        let t = 17.8456;
        let z = hardy_z(t).unwrap();
        let zeta = zeta_critical_line(t).unwrap();
        // |theta(17.8456)| is below 1e-5, so the imaginary leakage is bounded by that
        assert!((z - zeta.re).abs() < 1e-8 + theta_exact(t).abs() * zeta.norm());
    }

    #[test]
    fn riemann_siegel_agrees_with_euler_maclaurin() {
        for t in [
            1000.0, 1000.5, 1234.567, 2000.0, 3210.25, 5000.0, 7005.08, 9876.5, 1e4,
        ] {
            let rs = riemann_siegel_z(t);
            let em = zeta_euler_maclaurin(t, euler_maclaurin_terms(t)).norm();
            assert!((rs.abs() - em).abs() <= 1e-8, "t = {t}: {rs} vs {em}");
        }
    }

    #[test]
    fn remainder_polynomials_match_psi() {
        // C0(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p)
        for p in [0.0, 0.1, 0.3, 0.45, 0.6, 0.9] {
            let psi = (std::f64::consts::TAU * (p * p - p - 0.0625)).cos()
                / (std::f64::consts::TAU * p).cos();
            let z: f64 = 2.0 * p - 1.0;
            assert!((horner(&C0, z * z) - psi).abs() < 1e-14, "p = {p}");
        }
    }

    #[test]
    fn window_is_enforced() {
        assert!(matches!(hardy_z(1.5), Err(Error::Range { .. })));
        assert!(hardy_z(10_001.0).is_err());
    }
}
