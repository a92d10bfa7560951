use serde::Serialize;

use super::ZeroList;
use crate::error::{Error, Result};

/// Number of zeros with integer part `n`, for `1 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitIntervalCounts {
    counts: Vec<u32>,
}

impl UnitIntervalCounts {
    /// Counts for `n = 1, 2, ...` in order.
    pub fn from_counts(counts: Vec<u32>) -> Self {
        Self { counts }
    }

    pub fn n_max(&self) -> u64 {
        self.counts.len() as u64
    }

    /// F(n); zero outside `1..=n_max`.
    pub fn get(&self, n: u64) -> u32 {
        n.checked_sub(1)
            .and_then(|i| self.counts.get(i as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.counts
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// All `n` with `F(n) = value`.
    pub fn positions_of(&self, value: u32) -> Vec<u64> {
        self.iter()
            .filter(|&(_, c)| c == value)
            .map(|(n, _)| n)
            .collect()
    }

    /// Mean of F over `a..=b`.
    pub fn mean_over(&self, a: u64, b: u64) -> f64 {
        let (a, b) = (a.max(1), b.min(self.n_max()));
        if a > b {
            return f64::NAN;
        }
        (a..=b).map(|n| self.get(n) as f64).sum::<f64>() / (b - a + 1) as f64
    }
}

/// F(n) = #{y : floor(y) = n} for `1 <= n <= n_max`.
pub fn unit_interval_counts(zeros: &ZeroList, n_max: u64) -> Result<UnitIntervalCounts> {
    let need_hi = n_max as f64 + 1.0;
    let (lo, hi) = zeros.span();
    if lo > 1.0 || hi < need_hi {
        return Err(Error::Coverage {
            lo,
            hi,
            need_lo: 1.0,
            need_hi,
        });
    }
    let mut counts = vec![0u32; n_max as usize];
    for &y in zeros.in_range(1.0, need_hi) {
        counts[y.floor() as usize - 1] += 1;
    }
    Ok(UnitIntervalCounts { counts })
}

/// Mean number of zeros per unit interval near height `n`, `ln(n) / 2pi`.
pub fn point_density_zeta(n: f64) -> Result<f64> {
    let bound = 2.0 * std::f64::consts::PI * std::f64::consts::E;
    if !(n > bound) || !n.is_finite() {
        return Err(Error::Domain {
            function: "point_density_zeta",
            value: n,
            constraint: "n > 2 pi e",
        });
    }
    Ok(n.ln() / (2.0 * std::f64::consts::PI))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::ZeroSource;
    use std::f64::consts::PI;

    fn list() -> ZeroList {
        ZeroList::new(
            vec![14.13, 21.02, 25.01, 30.42, 32.93, 37.58, 40.91],
            ZeroSource::Ingested,
            (0.0, 41.0),
        )
        .unwrap()
    }

    #[test]
    fn counts_by_integer_part() {
        let c = unit_interval_counts(&list(), 40).unwrap();
        assert_eq!(c.n_max(), 40);
        assert_eq!(c.get(14), 1);
        assert_eq!(c.get(13), 0);
        assert_eq!(c.get(0), 0);
        assert_eq!(c.get(41), 0);
        assert_eq!(c.positions_of(1).first(), Some(&14));
        assert_eq!(c.total(), 7);
    }

    #[test]
    fn coverage_is_enforced() {
        assert!(matches!(
            unit_interval_counts(&list(), 41),
            Err(Error::Coverage { .. })
        ));
        let late = ZeroList::new(vec![14.13], ZeroSource::Ingested, (2.0, 20.0)).unwrap();
        assert!(unit_interval_counts(&late, 10).is_err());
    }

    #[test]
    fn density_formula() {
        assert!((point_density_zeta(6500.0).unwrap() - 1.3973).abs() < 1e-4);
        assert!((point_density_zeta((2.0 * PI).exp()).unwrap() - 1.0).abs() < 1e-15);
        assert!(point_density_zeta(2.0 * PI * std::f64::consts::E).is_err());
        assert!(point_density_zeta(f64::NAN).is_err());
    }
}
