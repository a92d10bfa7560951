use rayon::prelude::*;
use serde::Serialize;

use super::carrier_g;
use crate::error::Result;
use crate::special::arg_zeta_principal;
use crate::zeros::UnitIntervalCounts;

/// `s(n) = g(n) + (1/pi) Arg zeta(1/2 + in)` for `n = 1..=n_max`.
///
/// Each value lies near `N(n) + 1/2`, where `N(n)` counts the zeros below `n`,
/// as long as the principal argument has not wrapped.
pub fn staircase(n_max: u64) -> Result<Vec<f64>> {
    (1..=n_max)
        .into_par_iter()
        .map(|n| Ok(carrier_g(n as f64) + arg_zeta_principal(n as f64)?))
        .collect()
}

/// Staircase values rounded to the nearest half-integer `k + 1/2`, reported as `k`.
pub fn staircase_counts(values: &[f64]) -> Vec<i64> {
    values
        .iter()
        .map(|s| (s - 0.5).round_ties_even() as i64)
        .collect()
}

/// `jumps[i]` estimates the number of zeros in `[n, n+1)` for `n = i + 1`.
pub fn staircase_jumps(values: &[f64]) -> Vec<i64> {
    staircase_counts(values)
        .windows(2)
        .map(|w| w[1] - w[0])
        .collect()
}

/// Integer `n` at which the cumulative staircase count disagrees with the
/// zeros counted below `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StaircaseDefect {
    pub n: u64,
    pub staircase: i64,
    pub zeros: i64,
}

impl StaircaseDefect {
    /// Staircase count minus zero count; negative when zeros go uncounted.
    pub fn excess(&self) -> i64 {
        self.staircase - self.zeros
    }
}

/// Compare cumulative staircase counts with cumulative F for `n = 2..=n_max`.
pub fn staircase_defects(values: &[f64], counts: &UnitIntervalCounts) -> Vec<StaircaseDefect> {
    let steps = staircase_counts(values);
    let Some(&base) = steps.first() else {
        return Vec::new();
    };
    let mut zeros = 0i64;
    let mut defects = Vec::new();
    for (i, &c) in steps.iter().enumerate().skip(1) {
        let n = i as u64 + 1;
        zeros += counts.get(n - 1) as i64;
        let staircase = c - base;
        if staircase != zeros {
            defects.push(StaircaseDefect {
                n,
                staircase,
                zeros,
            });
        }
    }
    defects
}
