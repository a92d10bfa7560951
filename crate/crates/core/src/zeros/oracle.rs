//! Independent zero oracles for J0 and Ai(-x): series or asymptotic
//! evaluation of the function and its derivative, asymptotic starting
//! values, and Newton refinement.

use std::f64::consts::PI;

/// Above this argument the Hankel expansion replaces the power series of J0, J1.
const BESSEL_ASYMPTOTIC_FROM: f64 = 14.0;
/// Above this argument the oscillatory expansion replaces the Maclaurin series of Ai(-x).
const AIRY_ASYMPTOTIC_FROM: f64 = 7.0;

const NEWTON_ITERATIONS: usize = 30;

fn bessel_series(nu: u32, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = (0.5 * x).powi(nu as i32);
    for k in 1..=nu {
        term /= k as f64;
    }
    let mut sum = term;
    for m in 1..200 {
        term *= q / (m as f64 * (m + nu) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) && m > 5 {
            break;
        }
    }
    sum
}

fn bessel_hankel(nu: u32, x: f64) -> f64 {
    let mu = 4.0 * (nu * nu) as f64;
    let (mut p, mut q) = (0.0, 0.0);
    let mut a = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 0..60 {
        // a_k(nu) / x^k, with alternating signs folded into P and Q
        let mag = a.abs();
        if mag > last || mag < 1e-18 {
            break;
        }
        last = mag;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * a;
        } else {
            q += sign * a;
        }
        let odd = (2 * k + 1) as f64;
        a *= (mu - odd * odd) / ((k + 1) as f64 * 8.0 * x);
    }
    let chi = x - (0.5 * nu as f64 + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Bessel function of the first kind of order 0 or 1.
pub fn bessel_j(nu: u32, x: f64) -> f64 {
    debug_assert!(nu <= 1 && x >= 0.0);
    if x < BESSEL_ASYMPTOTIC_FROM {
        bessel_series(nu, x)
    } else {
        bessel_hankel(nu, x)
    }
}

/// Positive zeros of J0 up to `x_max`.
pub fn bessel_j0_zeros(x_max: f64) -> Vec<f64> {
    let mut zeros = Vec::new();
    for k in 1.. {
        let beta = (k as f64 - 0.25) * PI;
        let mut x = beta + 1.0 / (8.0 * beta) - 124.0 / (1536.0 * beta.powi(3));
        for _ in 0..NEWTON_ITERATIONS {
            // J0' = -J1
            let dx = bessel_j(0, x) / bessel_j(1, x);
            x += dx;
            if dx.abs() < 1e-15 * x {
                break;
            }
        }
        if x > x_max {
            break;
        }
        zeros.push(x);
    }
    zeros
}

const AI0: f64 = 0.355_028_053_887_817_2;
const AIP0: f64 = 0.258_819_403_792_806_8;

/// `(Ai(-x), d/dx Ai(-x))`.
pub fn airy_ai_neg(x: f64) -> (f64, f64) {
    if x < AIRY_ASYMPTOTIC_FROM {
        airy_maclaurin(-x)
    } else {
        airy_oscillatory(x)
    }
}

/// Maclaurin series; returns `(Ai(z), -Ai'(z))` so that the second entry is
/// the derivative of `x -> Ai(-x)` at `x = -z`.
fn airy_maclaurin(z: f64) -> (f64, f64) {
    let z3 = z * z * z;
    // Ai = c1 f - c2 g with f = sum f_k ~ z^3k and g = sum g_k ~ z^(3k+1);
    // f' = sum 3k f_k / z and g' = sum (3k+1) g_k / z
    let (mut f, mut g) = (1.0, z);
    let (mut sf, mut sg) = (f, g);
    let (mut df, mut dg) = (0.0, 1.0);
    for k in 0..200 {
        let k3 = 3.0 * k as f64;
        f *= z3 / ((k3 + 2.0) * (k3 + 3.0));
        g *= z3 / ((k3 + 3.0) * (k3 + 4.0));
        sf += f;
        sg += g;
        if z != 0.0 {
            df += (k3 + 3.0) * f / z;
            dg += (k3 + 4.0) * g / z;
        }
        if f.abs() + g.abs() < 1e-18 * (sf.abs() + sg.abs()) && k > 3 {
            break;
        }
    }
    let ai = AI0 * sf - AIP0 * sg;
    let aip = AI0 * df - AIP0 * dg;
    (ai, -aip)
}

fn airy_oscillatory(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let (mut p, mut q, mut pv, mut qv) = (0.0, 0.0, 0.0, 0.0);
    let mut u = 1.0f64;
    let mut pow = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 0..60usize {
        let term = u * pow;
        if term > last || term < 1e-18 {
            break;
        }
        last = term;
        let kf = k as f64;
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * term;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
            pv += sign * v;
        } else {
            q += sign * term;
            qv += sign * v;
        }
        let k1 = kf + 1.0;
        u *= (6.0 * k1 - 5.0) * (6.0 * k1 - 3.0) * (6.0 * k1 - 1.0)
            / ((2.0 * k1 - 1.0) * 216.0 * k1);
        pow /= zeta;
    }
    let phase = zeta - 0.25 * PI;
    let (s, c) = phase.sin_cos();
    let ai = (c * p + s * q) / (PI.sqrt() * x.powf(0.25));
    let aip_neg = x.powf(0.25) / PI.sqrt() * (s * pv - c * qv);
    // d/dx Ai(-x) = -Ai'(-x)
    (ai, -aip_neg)
}

/// Positive zeros of `x -> Ai(-x)` up to `x_max`.
pub fn airy_neg_zeros(x_max: f64) -> Vec<f64> {
    let mut zeros = Vec::new();
    for k in 1.. {
        let t = 3.0 * PI / 8.0 * (4.0 * k as f64 - 1.0);
        let t2 = t.powi(-2);
        let mut x = t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 * t2 - 5.0 / 36.0 * t2 * t2);
        for _ in 0..NEWTON_ITERATIONS {
            let (v, d) = airy_ai_neg(x);
            let dx = v / d;
            x -= dx;
            if dx.abs() < 1e-15 * x {
                break;
            }
        }
        if x > x_max {
            break;
        }
        zeros.push(x);
    }
    zeros
}

/// Number of entries of the sorted `zeros` lying in `[n, n+1)`.
pub fn count_in_unit_interval(zeros: &[f64], n: u64) -> i64 {
    let (a, b) = (n as f64, n as f64 + 1.0);
    (zeros.partition_point(|&y| y < b) - zeros.partition_point(|&y| y < a)) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_values() {
        assert_eq!(bessel_j(0, 0.0), 1.0);
        assert_eq!(bessel_j(1, 0.0), 0.0);
        // J0(1), J1(1)
        assert!((bessel_j(0, 1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
        assert!((bessel_j(1, 1.0) - 0.440_050_585_744_933_5).abs() < 1e-15);
    }

    #[test]
    fn bessel_branches_meet() {
        for x in [13.5, 14.0, 14.5] {
            for nu in 0..=1 {
                let d = (bessel_series(nu, x) - bessel_hankel(nu, x)).abs();
                assert!(d < 1e-11, "nu = {nu}, x = {x}: {d}");
            }
        }
    }

    #[test]
    fn bessel_zeros() {
        let z = bessel_j0_zeros(20.0);
        let known = [
            2.404_825_557_695_773,
            5.520_078_110_286_311,
            8.653_727_912_911_013,
            11.791_534_439_014_28,
            14.930_917_708_487_79,
            18.071_063_967_910_92,
        ];
        assert_eq!(z.len(), known.len());
        for (a, b) in z.iter().zip(known) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
        for &x in &bessel_j0_zeros(250.0) {
            assert!(bessel_j(0, x).abs() < 1e-11);
        }
    }

    #[test]
    fn airy_values() {
        assert!((airy_ai_neg(0.0).0 - AI0).abs() < 1e-17);
        assert!((airy_ai_neg(0.0).1 - AIP0).abs() < 1e-17);
        // Ai(-1), Ai'(-1)
        let (v, d) = airy_ai_neg(1.0);
        assert!((v - 0.535_560_883_292_352_1).abs() < 1e-14);
        assert!((d - 0.010_160_567_116_645_3).abs() < 1e-14);
        for x in [6.5, 7.0, 7.5] {
            let (a, da) = airy_maclaurin(-x);
            let (b, db) = airy_oscillatory(x);
            assert!((a - b).abs() < 1e-9, "x = {x}");
            assert!((da - db).abs() < 1e-8, "x = {x}");
        }
    }

    #[test]
    fn airy_zeros() {
        let z = airy_neg_zeros(10.0);
        let known = [
            2.338_107_410_459_767,
            4.087_949_444_130_97,
            5.520_559_828_095_551,
            6.786_708_090_071_759,
            7.944_133_587_120_853,
            9.022_650_853_340_98,
        ];
        assert_eq!(z.len(), known.len());
        for (a, b) in z.iter().zip(known) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }
}
