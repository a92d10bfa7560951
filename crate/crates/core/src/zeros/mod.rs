//! Critical-line zero census and floor-based zero counters.

mod cache;
mod counters;
mod counts;
pub mod oracle;
mod scan;

pub use cache::{read_zero_cache, write_zero_cache, CacheHeader, CACHE_MAGIC};
pub use counters::{
    airy_counter, airy_counter_corrected, bessel_j0_counter, bessel_j0_counter_corrected,
    counter_from_counting_function, divergence_report, floor_counter, CounterFamily,
    CounterReading, Divergence, DivergenceReport,
};
pub use counts::{point_density_zeta, unit_interval_counts, UnitIntervalCounts};
pub use scan::{scan_zeros, scan_zeros_partitioned, ScanConfig, ScanDiagnostic, ScanReport};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroSource {
    Scanned,
    Ingested,
}

impl ZeroSource {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroSource::Scanned => "scanned",
            ZeroSource::Ingested => "ingested",
        }
    }
}

/// Strictly increasing positive ordinates of critical-line zeros, together
/// with the ordinate range `span` they are known to cover completely.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroList {
    ordinates: Vec<f64>,
    source: ZeroSource,
    span: (f64, f64),
}

impl ZeroList {
    pub fn new(ordinates: Vec<f64>, source: ZeroSource, span: (f64, f64)) -> Result<Self> {
        let (lo, hi) = span;
        if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && lo <= hi) {
            return Err(Error::InvalidZeroList(format!("bad span [{lo}, {hi}]")));
        }
        for (i, &y) in ordinates.iter().enumerate() {
            if !(y.is_finite() && y > 0.0) {
                return Err(Error::InvalidZeroList(format!(
                    "ordinate #{} = {y} is not a positive finite number",
                    i + 1
                )));
            }
            if i > 0 && ordinates[i - 1] >= y {
                return Err(Error::InvalidZeroList(format!(
                    "ordinates #{} and #{} are not strictly increasing",
                    i,
                    i + 1
                )));
            }
            if y < lo || y > hi {
                return Err(Error::InvalidZeroList(format!(
                    "ordinate {y} lies outside the span [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self {
            ordinates,
            source,
            span,
        })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    pub fn span(&self) -> (f64, f64) {
        self.span
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// The n-th ordinate, 1-based.
    pub fn ordinate(&self, n: usize) -> Option<f64> {
        n.checked_sub(1)
            .and_then(|i| self.ordinates.get(i).copied())
    }

    /// Number of ordinates `<= t`.
    pub fn count_up_to(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&y| y <= t)
    }

    /// Number of ordinates `< t`.
    pub fn count_below(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&y| y < t)
    }

    /// Ordinates in `[a, b)`.
    pub fn in_range(&self, a: f64, b: f64) -> &[f64] {
        &self.ordinates[self.count_below(a)..self.count_below(b)]
    }

    /// Union of two lists from the same source whose spans touch or overlap.
    /// Ordinates closer than `tol` are treated as one zero.
    pub fn merge(&self, other: &ZeroList, tol: f64) -> Result<ZeroList> {
        if self.source != other.source {
            return Err(Error::MixedSources(
                self.source.as_str(),
                other.source.as_str(),
            ));
        }
        let (a, b) = if self.span.0 <= other.span.0 {
            (self, other)
        } else {
            (other, self)
        };
        if b.span.0 > a.span.1 {
            return Err(Error::InvalidZeroList(format!(
                "spans [{}, {}] and [{}, {}] leave a gap",
                a.span.0, a.span.1, b.span.0, b.span.1
            )));
        }
        let mut all: Vec<f64> = a.ordinates.iter().chain(&b.ordinates).copied().collect();
        all.sort_by(f64::total_cmp);
        all.dedup_by(|later, earlier| (*later - *earlier).abs() <= tol);
        ZeroList::new(all, self.source, (a.span.0, a.span.1.max(b.span.1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsorted_and_nonpositive() {
        assert!(ZeroList::new(vec![2.0, 1.0], ZeroSource::Ingested, (0.0, 3.0)).is_err());
        assert!(ZeroList::new(vec![1.0, 1.0], ZeroSource::Ingested, (0.0, 3.0)).is_err());
        assert!(ZeroList::new(vec![0.0], ZeroSource::Ingested, (0.0, 3.0)).is_err());
        assert!(ZeroList::new(vec![5.0], ZeroSource::Ingested, (0.0, 3.0)).is_err());
    }

    #[test]
    fn counting_queries() {
        let z = ZeroList::new(
            vec![14.1, 21.0, 25.0, 30.4],
            ZeroSource::Ingested,
            (0.0, 31.0),
        )
        .unwrap();
        assert_eq!(z.count_up_to(21.0), 2);
        assert_eq!(z.count_below(21.0), 1);
        assert_eq!(z.in_range(21.0, 26.0), &[21.0, 25.0]);
        assert_eq!(z.ordinate(1), Some(14.1));
        assert_eq!(z.ordinate(0), None);
        assert_eq!(z.ordinate(5), None);
    }

    #[test]
    fn merging_rejects_mixed_sources() {
        let a = ZeroList::new(vec![14.1], ZeroSource::Scanned, (0.0, 20.0)).unwrap();
        let b = ZeroList::new(vec![21.0], ZeroSource::Ingested, (20.0, 22.0)).unwrap();
        assert!(matches!(a.merge(&b, 1e-9), Err(Error::MixedSources(..))));
        let c = ZeroList::new(vec![21.0], ZeroSource::Scanned, (20.0, 22.0)).unwrap();
        let m = a.merge(&c, 1e-9).unwrap();
        assert_eq!(m.ordinates(), &[14.1, 21.0]);
        assert_eq!(m.span(), (0.0, 22.0));
        let gap = ZeroList::new(vec![], ZeroSource::Scanned, (25.0, 30.0)).unwrap();
        assert!(a.merge(&gap, 1e-9).is_err());
    }
}
