//! Double-double arithmetic.
//!
//! A value is the unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`,
//! giving roughly 106 bits of significand. Only the handful of operations
//! needed by the phase computations are provided: the field operations,
//! a natural logarithm of an `f64`, and short Taylor kernels for small
//! arguments.

use std::f64::consts;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

pub const PI: DoubleDouble = DoubleDouble::new(consts::PI, 1.2246467991473532e-16);
pub const TWO_PI: DoubleDouble = DoubleDouble::new(consts::TAU, 2.4492935982947064e-16);
pub const HALF_PI: DoubleDouble = DoubleDouble::new(consts::FRAC_PI_2, 6.123233995736766e-17);
pub const LN_2: DoubleDouble = DoubleDouble::new(consts::LN_2, 2.3190468138462996e-17);
pub const LN_PI: DoubleDouble = DoubleDouble::new(1.1447298858494002, 1.0265951162707826e-17);
pub const LN_2PI: DoubleDouble = DoubleDouble::new(1.8378770664093456, -7.756588316134483e-17);
pub const INV_PI: DoubleDouble = DoubleDouble::new(consts::FRAC_1_PI, -1.9678676675182486e-17);
pub const INV_2PI: DoubleDouble = DoubleDouble::new(0.15915494309189535, -9.839338337591243e-18);
pub const PI_OVER_8: DoubleDouble = DoubleDouble::new(consts::FRAC_PI_8, 1.5308084989341915e-17);

impl DoubleDouble {
    pub const ZERO: Self = Self::new(0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0);

    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact quotient `num / den` of two integers, each below 2^53 in magnitude.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_f64(num as f64) / Self::from_f64(den as f64)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    /// Nearest integer, ties to even.
    pub fn round_ties_even(self) -> f64 {
        let r = self.hi.round_ties_even();
        if r == self.hi {
            // hi already integral; lo is below half an ulp of hi
            return r + self.lo.round_ties_even();
        }
        let diff = self.hi - r;
        if diff.abs() == 0.5 {
            if self.lo == 0.0 {
                return r;
            }
            // hi is an exact half-integer; the tail decides the direction
            let down = self.hi - 0.5;
            return if self.lo > 0.0 { down + 1.0 } else { down };
        }
        r
    }

    pub fn floor(self) -> f64 {
        let f = self.hi.floor();
        if f == self.hi {
            f + self.lo.floor()
        } else {
            f
        }
    }

    /// Natural logarithm of a positive finite `f64`, to double-double accuracy.
    pub fn ln(x: f64) -> Self {
        assert!(x > 0.0 && x.is_finite(), "DoubleDouble::ln of {x}");
        let (m, e) = split_exponent(x);
        // ln m = 2 atanh(s), s = (m - 1) / (m + 1), |s| <= 0.1716
        let (sum_hi, sum_lo) = two_sum(m, 1.0);
        let s = Self::from_f64(m - 1.0) / Self::new(sum_hi, sum_lo);
        let s2 = s.sqr();
        let mut term = s;
        let mut acc = s;
        for k in 1..40 {
            term = term * s2;
            let contrib = term.div_f64((2 * k + 1) as f64);
            acc = acc + contrib;
            if contrib.hi.abs() <= 1e-34 * acc.hi.abs().max(f64::MIN_POSITIVE) {
                break;
            }
        }
        acc.mul_f64(2.0) + LN_2.mul_f64(e as f64)
    }

    /// `atan(u)` for `|u| <= 0.1` by its Taylor series.
    pub fn atan_small(u: Self) -> Self {
        debug_assert!(u.hi.abs() <= 0.1);
        let u2 = u.sqr();
        let mut term = u;
        let mut acc = u;
        for k in 1..60 {
            term = -(term * u2);
            let contrib = term.div_f64((2 * k + 1) as f64);
            acc = acc + contrib;
            if contrib.hi.abs() <= 1e-34 * acc.hi.abs().max(f64::MIN_POSITIVE) {
                break;
            }
        }
        acc
    }

    /// `ln(1 + v)` for `|v| <= 0.01` by its Taylor series.
    pub fn ln_1p_small(v: Self) -> Self {
        debug_assert!(v.hi.abs() <= 0.01);
        let mut power = v;
        let mut acc = v;
        for k in 2..60 {
            power = -(power * v);
            let contrib = power.div_f64(k as f64);
            acc = acc + contrib;
            if contrib.hi.abs() <= 1e-34 * acc.hi.abs().max(f64::MIN_POSITIVE) {
                break;
            }
        }
        acc
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Self { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let (s, f) = two_sum(self.hi, -p);
        let q2 = (s + (f - e + self.lo)) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }
}

/// Writes `x = m * 2^e` with `m` in `[1/sqrt 2, sqrt 2)`.
fn split_exponent(x: f64) -> (f64, i32) {
    let (x, bias) = if x < f64::MIN_POSITIVE {
        (x * 2f64.powi(64), -64)
    } else {
        (x, 0)
    };
    let bits = x.to_bits();
    let mut e = ((bits >> 52) & 0x7ff) as i32 - 1023;
    let mut m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1023u64 << 52));
    if m > std::f64::consts::SQRT_2 {
        m *= 0.5;
        e += 1;
    }
    (m, e + bias)
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.hi, -self.lo)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Add<f64> for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Sub<f64> for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: f64) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: f64) -> Self {
        self.mul_f64(b)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + q3
    }
}

impl Div<f64> for DoubleDouble {
    type Output = Self;
    #[inline]
    fn div(self, b: f64) -> Self {
        self.div_f64(b)
    }
}

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexDd {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

impl ComplexDd {
    pub fn new(re: DoubleDouble, im: DoubleDouble) -> Self {
        Self { re, im }
    }

    pub fn norm_sqr(self) -> DoubleDouble {
        self.re.sqr() + self.im.sqr()
    }

    pub fn recip(self) -> Self {
        let d = self.norm_sqr();
        Self::new(self.re / d, -(self.im / d))
    }

    pub fn scale(self, k: DoubleDouble) -> Self {
        Self::new(self.re * k, self.im * k)
    }
}

impl Add for ComplexDd {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self::new(self.re + b.re, self.im + b.im)
    }
}

impl Mul for ComplexDd {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        Self::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_consistent() {
        let two_pi = PI.mul_f64(2.0);
        assert_eq!(two_pi, TWO_PI);
        assert_eq!(PI.div_f64(2.0), HALF_PI);
        let prod = PI * INV_PI;
        assert!((prod - 1.0).to_f64().abs() < 1e-31);
        let ln2pi = LN_2 + LN_PI;
        assert!((ln2pi - LN_2PI).to_f64().abs() < 1e-31);
    }

    #[test]
    fn ln_matches_constants() {
        assert!((DoubleDouble::ln(2.0) - LN_2).to_f64().abs() < 1e-31);
        assert!(
            (DoubleDouble::ln(std::f64::consts::PI) - LN_PI)
                .to_f64()
                .abs()
                < 1e-15
        );
        assert_eq!(DoubleDouble::ln(1.0).to_f64(), 0.0);
        // ln(e^k) for integer k, against exp of the result in f64
        for x in [0.1, 0.5, 3.0, 17.25, 5000.0, 1e-300, 1e300] {
            let l = DoubleDouble::ln(x);
            assert!((l.hi - x.ln()).abs() <= 2.0 * f64::EPSILON * x.ln().abs().max(1.0));
        }
    }

    #[test]
    fn ln_is_additive_to_dd_precision() {
        // ln(a*b) = ln a + ln b holds exactly when a*b is exact in f64
        for (a, b) in [(3.0, 7.0), (10.0, 1000.0), (1.5, 1.25), (12345.0, 0.5)] {
            let lhs = DoubleDouble::ln(a * b);
            let rhs = DoubleDouble::ln(a) + DoubleDouble::ln(b);
            let scale = lhs.hi.abs().max(1.0);
            assert!((lhs - rhs).to_f64().abs() < 1e-30 * scale, "{a} {b}");
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = DoubleDouble::new(31415.926535897932, 3.8e-13);
        let b = DoubleDouble::new(std::f64::consts::E, 1.4456468917292502e-16);
        let q = a / b;
        assert!(((q * b) - a).to_f64().abs() < 1e-27);
    }

    #[test]
    fn rounding_uses_the_tail() {
        assert_eq!(DoubleDouble::new(2.5, 1e-20).round_ties_even(), 3.0);
        assert_eq!(DoubleDouble::new(2.5, -1e-20).round_ties_even(), 2.0);
        assert_eq!(DoubleDouble::new(2.5, 0.0).round_ties_even(), 2.0);
        assert_eq!(DoubleDouble::new(3.5, 0.0).round_ties_even(), 4.0);
        assert_eq!(DoubleDouble::new(-0.4, 0.0).round_ties_even(), 0.0);
        assert_eq!(DoubleDouble::new(7.0, -1e-20).floor(), 6.0);
    }

    #[test]
    fn small_series_kernels() {
        let u = 0.01;
        assert!((DoubleDouble::atan_small(u.into()).hi - u.atan()).abs() < 1e-18);
        assert!((DoubleDouble::ln_1p_small(u.into()).hi - u.ln_1p()).abs() < 1e-18);
    }
}
