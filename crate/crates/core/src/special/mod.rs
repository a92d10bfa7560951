//! Special-function evaluators on and around the critical line.

mod arg;
mod gamma;
mod hardy;
mod lambert;
mod rs_coeffs;
mod theta;
mod zeta;

pub use arg::{arg_gamma_quarter, arg_zeta_principal, AT_ZERO_THRESHOLD};
pub use gamma::log_gamma_complex;
pub use hardy::{hardy_z, riemann_siegel_z, HARDY_Z_WINDOW, RS_THRESHOLD};
pub use lambert::{lambert_w0, NEG_INV_E};
pub use theta::{theta_exact, theta_series, ThetaSeries, THETA_SERIES_MIN_T};
pub use zeta::{euler_maclaurin_terms, zeta_critical_line, zeta_euler_maclaurin, ZETA_WINDOW};

pub(crate) use theta::theta_dd;

/// Even-index Bernoulli numbers B_2, B_4, ..., B_28 as exact fractions.
pub(crate) const BERNOULLI_EVEN: [(i64, i64); 14] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
];

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    #[inline]
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}
