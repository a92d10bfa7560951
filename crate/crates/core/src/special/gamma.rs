use num_complex::Complex64;

use super::BERNOULLI_EVEN;
use crate::error::{Error, Result};

/// Modulus above which the Stirling series is used directly.
const STIRLING_RADIUS: f64 = 15.0;
const STIRLING_TERMS: usize = 12;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Principal branch of `ln Gamma(z)` for `Re z > 0`.
///
/// Small arguments are shifted up with `ln Gamma(z) = ln Gamma(z + m) - sum ln(z + k)`
/// until `|z + m| >= 15`, then the Stirling series is summed to `B_24`. Each
/// `ln(z + k)` is a principal logarithm of a point in the right half-plane,
/// so the imaginary part stays continuous along vertical lines.
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain {
            function: "log_gamma_complex",
            value: z.re,
            constraint: "Re z > 0 and finite",
        });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < STIRLING_RADIUS {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

fn stirling(w: Complex64) -> Complex64 {
    let mut acc = (w - 0.5) * w.ln() - w + HALF_LN_2PI;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut power = inv;
    for (k, &(num, den)) in BERNOULLI_EVEN.iter().take(STIRLING_TERMS).enumerate() {
        let m = (2 * k + 2) as f64;
        acc += power * (num as f64 / (den as f64 * m * (m - 1.0)));
        power *= inv2;
    }
    acc
}
