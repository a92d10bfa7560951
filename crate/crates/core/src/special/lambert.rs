use crate::error::{Error, Result};

/// The branch point `-1/e`.
pub const NEG_INV_E: f64 = -0.367_879_441_171_442_33;

const MAX_ITERATIONS: usize = 50;

/// Principal branch `W0(x)` of the Lambert W function, `W0(x) >= -1`.
///
/// Starts from the branch-point series near `-1/e`, `ln(1 + x)` in the
/// middle range and `ln x - ln ln x` for large `x`, then applies Halley's
/// iteration.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if x.is_nan() || x < NEG_INV_E {
        return Err(Error::Domain {
            function: "lambert_w0",
            value: x,
            constraint: "x >= -1/e",
        });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == NEG_INV_E {
        return Ok(-1.0);
    }
    if x == f64::INFINITY {
        return Ok(f64::INFINITY);
    }

    let mut w = initial_guess(x);
    for _ in 0..MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - x;
        // residual at rounding level; near the branch point f' -> 0 and
        // the step size alone never settles
        if f.abs() <= 2.0 * f64::EPSILON * x.abs() {
            return Ok(w);
        }
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            return Ok(w);
        }
    }
    Err(Error::NoConvergence {
        what: "lambert_w0 Halley iteration",
        iterations: MAX_ITERATIONS,
    })
}

fn initial_guess(x: f64) -> f64 {
    if x < -0.32 {
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x < 3.0 {
        x.ln_1p()
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    }
}
