use num_complex::Complex64;

use super::{log_gamma_complex, BERNOULLI_EVEN};
use crate::dd::{self, ComplexDd, DoubleDouble};
use crate::error::{Error, Result};

/// Smallest ordinate accepted by [`theta_series`]; the expansion is asymptotic.
pub const THETA_SERIES_MIN_T: f64 = 10.0;

/// Half-ordinate above which theta is evaluated directly from the Stirling
/// series of `ln Gamma(1/4 + iy)` in double-double arithmetic.
const DIRECT_HALF_T: f64 = 12.0;

/// Riemann-Siegel theta, `Im ln Gamma(1/4 + it/2) - (t/2) ln pi`.
///
/// Odd in `t` by construction. The large terms are carried in double-double
/// arithmetic, so the returned `f64` is the correctly rounded value for all
/// practical purposes.
pub fn theta_exact(t: f64) -> f64 {
    theta_dd(t).hi
}

pub(crate) fn theta_dd(t: f64) -> DoubleDouble {
    if t < 0.0 {
        return -theta_dd(-t);
    }
    if t == 0.0 {
        return DoubleDouble::ZERO;
    }
    let y = 0.5 * t;
    if y < DIRECT_HALF_T {
        let lg = log_gamma_complex(Complex64::new(0.25, y)).expect("Re = 1/4 > 0");
        return DoubleDouble::from(lg.im) - dd::LN_PI.mul_f64(y);
    }
    im_log_gamma_quarter_dd(y) - dd::LN_PI.mul_f64(y)
}

/// `Im ln Gamma(1/4 + iy)` for `y >= 12` from the unshifted Stirling series.
fn im_log_gamma_quarter_dd(y: f64) -> DoubleDouble {
    let x = DoubleDouble::from(0.25);
    let yd = DoubleDouble::from(y);
    // ln|w| = ln y + (1/2) ln(1 + x^2 / y^2)
    let ratio_sq = x.sqr() / yd.sqr();
    let ln_mod = DoubleDouble::ln(y) + DoubleDouble::ln_1p_small(ratio_sq).mul_f64(0.5);
    // arg w = pi/2 - atan(x / y)
    let arg = dd::HALF_PI - DoubleDouble::atan_small(x / yd);
    // Im[(w - 1/2) ln w - w] = y ln|w| + (x - 1/2) arg w - y
    let mut acc = ln_mod.mul_f64(y) + arg.mul_f64(-0.25) - y;

    let inv = ComplexDd::new(x, yd).recip();
    let inv2 = inv * inv;
    let mut power = inv;
    for (k, &(num, den)) in BERNOULLI_EVEN.iter().enumerate() {
        let m = (2 * k + 2) as i64;
        let coeff = DoubleDouble::ratio(num, den * m * (m - 1));
        let term = (power.im * coeff).hi;
        acc = acc + power.im * coeff;
        if term.abs() < 1e-34 * acc.hi.abs() {
            break;
        }
        power = power * inv2;
    }
    acc
}

/// Rational coefficients of the large-t expansion of theta.
///
/// `coeffs[k]` multiplies `t^-(2k+1)`; the k-th coefficient is
/// `(1 - 2^(1-2m)) |B_2m| / (4m (2m - 1))` with `m = k + 1`. The default
/// order 4 gives 1/48, 7/5760, 31/80640, 127/430080.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSeries {
    coeffs: Vec<(i64, i64)>,
}

impl ThetaSeries {
    pub const MAX_ORDER: usize = 10;

    pub fn new(order: usize) -> Result<Self> {
        if order > Self::MAX_ORDER {
            return Err(Error::InvalidConfig(format!(
                "theta series order {order} exceeds {}",
                Self::MAX_ORDER
            )));
        }
        let coeffs = (1..=order as u32)
            .map(|m| {
                let (b_num, b_den) = BERNOULLI_EVEN[(m - 1) as usize];
                let pow = 1i128 << (2 * m - 1);
                let m = m as i128;
                let num = (pow - 1) * (b_num as i128).abs();
                let den = pow * 4 * m * (2 * m - 1) * b_den as i128;
                let g = gcd(num, den);
                ((num / g) as i64, (den / g) as i64)
            })
            .collect();
        Ok(Self { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[(i64, i64)] {
        &self.coeffs
    }

    pub(crate) fn coeff_dd(&self, k: usize) -> DoubleDouble {
        let (n, d) = self.coeffs[k];
        DoubleDouble::ratio(n, d)
    }

    /// `sum coeffs[k] t^-(2k+1)` in double-double arithmetic.
    pub(crate) fn correction_dd(&self, t: f64) -> DoubleDouble {
        let inv = DoubleDouble::from(t).recip();
        let inv2 = inv.sqr();
        let mut power = inv;
        let mut acc = DoubleDouble::ZERO;
        for k in 0..self.order() {
            acc = acc + self.coeff_dd(k) * power;
            power = power * inv2;
        }
        acc
    }

    pub fn correction(&self, t: f64) -> f64 {
        self.correction_dd(t).to_f64()
    }
}

impl Default for ThetaSeries {
    fn default() -> Self {
        Self::new(4).expect("order 4 is supported")
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Truncated asymptotic expansion
/// `theta(t) ~ (t/2) ln(t/2pi) - t/2 - pi/8 + sum coeffs[k] t^-(2k+1)`.
pub fn theta_series(t: f64, order: usize) -> Result<f64> {
    Ok(theta_series_dd(t, order)?.hi)
}

pub(crate) fn theta_series_dd(t: f64, order: usize) -> Result<DoubleDouble> {
    if !(t >= THETA_SERIES_MIN_T) || !t.is_finite() {
        return Err(Error::Domain {
            function: "theta_series",
            value: t,
            constraint: "t >= 10 (asymptotic regime)",
        });
    }
    let series = ThetaSeries::new(order)?;
    let half = 0.5 * t;
    let lead = (DoubleDouble::ln(t) - dd::LN_2PI).mul_f64(half) - half - dd::PI_OVER_8;
    Ok(lead + series.correction_dd(t))
}
