use num_complex::Complex64;

use super::{CompensatedSum, BERNOULLI_EVEN};
use crate::error::{Error, Result};

/// Ordinates on which [`zeta_critical_line`] is supported.
pub const ZETA_WINDOW: (f64, f64) = (0.0, 1e4);

const CORRECTION_TERMS: usize = 6;

/// Truncation length used by [`zeta_critical_line`] at ordinate `t`.
pub fn euler_maclaurin_terms(t: f64) -> usize {
    (1.3 * t).ceil() as usize + 30
}

/// `zeta(1/2 + it)` by Euler-Maclaurin summation.
pub fn zeta_critical_line(t: f64) -> Result<Complex64> {
    if !(ZETA_WINDOW.0..=ZETA_WINDOW.1).contains(&t) {
        return Err(Error::Range {
            function: "zeta_critical_line",
            t,
            lo: ZETA_WINDOW.0,
            hi: ZETA_WINDOW.1,
        });
    }
    Ok(zeta_euler_maclaurin(t, euler_maclaurin_terms(t)))
}

/// Euler-Maclaurin sum for `zeta(1/2 + it)` with `n` as the cut point:
/// `sum_{k<n} k^-s + n^(1-s)/(s-1) + n^-s/2 + sum_j B_2j/(2j)! (s)_(2j-1) n^(-s-2j+1)`.
pub fn zeta_euler_maclaurin(t: f64, n: usize) -> Complex64 {
    assert!(n >= 2, "Euler-Maclaurin cut point must be at least 2");
    let s = Complex64::new(0.5, t);
    let mut re = CompensatedSum::default();
    let mut im = CompensatedSum::default();
    for k in 1..n {
        let kf = k as f64;
        let (sin, cos) = (t * kf.ln()).sin_cos();
        let mag = kf.sqrt().recip();
        re.add(mag * cos);
        im.add(-mag * sin);
    }

    let nf = n as f64;
    let ln_n = nf.ln();
    let (sin, cos) = (t * ln_n).sin_cos();
    // n^-s
    let n_pow = Complex64::new(cos, -sin) / nf.sqrt();
    let mut tail = n_pow * nf / (s - 1.0) + n_pow * 0.5;

    // (s)_(2j-1) n^(-s-2j+1) B_2j / (2j)!
    let mut rising = s;
    let mut n_power = n_pow / nf;
    let mut factorial = 2.0;
    for (j, &(num, den)) in BERNOULLI_EVEN.iter().take(CORRECTION_TERMS).enumerate() {
        let j = j + 1;
        tail += rising * n_power * (num as f64 / den as f64 / factorial);
        let m = (2 * j) as f64;
        rising *= (s + (m - 1.0)) * (s + m);
        n_power /= nf * nf;
        factorial *= (m + 1.0) * (m + 2.0);
    }

    let value = Complex64::new(re.value(), im.value()) + tail;
    // normalise a negative zero imaginary part at t = 0
    Complex64::new(value.re, value.im + 0.0)
}
