use std::f64::consts::PI;

use serde::Serialize;

use super::oracle::{airy_neg_zeros, bessel_j0_zeros, count_in_unit_interval};

/// `floor((n+1) alpha) - floor(n alpha)`.
pub fn floor_counter(n: u64, alpha: f64) -> i64 {
    ((n + 1) as f64 * alpha).floor() as i64 - (n as f64 * alpha).floor() as i64
}

/// `floor(f(n+1)) - floor(f(n))`: the number of zeros in `[n, n+1)` whenever
/// `floor(f)` is the counting function at integers.
pub fn counter_from_counting_function<F: Fn(f64) -> f64>(f: F, n: u64) -> i64 {
    f((n + 1) as f64).floor() as i64 - f(n as f64).floor() as i64
}

/// The J0 counter read literally: the n-dependent slope `4n / (pi (4n - 1))`
/// passed to [`floor_counter`] as a constant.
pub fn bessel_j0_counter(n: u64) -> i64 {
    let nf = n as f64;
    floor_counter(n, 4.0 * nf / (PI * (4.0 * nf - 1.0)))
}

/// J0 counter from the counting function `x/pi + 1/4`.
pub fn bessel_j0_counter_corrected(n: u64) -> i64 {
    counter_from_counting_function(|x| x / PI + 0.25, n)
}

/// Ai(-x) counter from `2 x^(3/2) / (3 pi)`, without phase offset.
pub fn airy_counter(n: u64) -> i64 {
    counter_from_counting_function(|x| 2.0 * x.powf(1.5) / (3.0 * PI), n)
}

/// Ai(-x) counter from `2 x^(3/2) / (3 pi) + 1/4`.
pub fn airy_counter_corrected(n: u64) -> i64 {
    counter_from_counting_function(|x| 2.0 * x.powf(1.5) / (3.0 * PI) + 0.25, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CounterFamily {
    BesselJ0,
    AiryNegative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CounterReading {
    Literal,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub n: u64,
    pub formula: i64,
    pub oracle: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivergenceReport {
    pub family: CounterFamily,
    pub reading: CounterReading,
    pub n_max: u64,
    pub divergences: Vec<Divergence>,
}

impl DivergenceReport {
    pub fn first(&self) -> Option<u64> {
        self.divergences.first().map(|d| d.n)
    }

    pub fn agrees(&self) -> bool {
        self.divergences.is_empty()
    }
}

/// Compare a counter against its zero oracle for `1 <= n <= n_max`.
pub fn divergence_report(
    family: CounterFamily,
    reading: CounterReading,
    n_max: u64,
) -> DivergenceReport {
    let limit = n_max as f64 + 1.0;
    let (zeros, counter): (Vec<f64>, fn(u64) -> i64) = match (family, reading) {
        (CounterFamily::BesselJ0, CounterReading::Literal) => {
            (bessel_j0_zeros(limit), bessel_j0_counter)
        }
        (CounterFamily::BesselJ0, CounterReading::Corrected) => {
            (bessel_j0_zeros(limit), bessel_j0_counter_corrected)
        }
        (CounterFamily::AiryNegative, CounterReading::Literal) => {
            (airy_neg_zeros(limit), airy_counter)
        }
        (CounterFamily::AiryNegative, CounterReading::Corrected) => {
            (airy_neg_zeros(limit), airy_counter_corrected)
        }
    };
    let divergences = (1..=n_max)
        .filter_map(|n| {
            let formula = counter(n);
            let oracle = count_in_unit_interval(&zeros, n);
            (formula != oracle).then_some(Divergence { n, formula, oracle })
        })
        .collect();
    DivergenceReport {
        family,
        reading,
        n_max,
        divergences,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_counter_basics() {
        let pattern: Vec<i64> = (1..10).map(|n| floor_counter(n, 1.0 / PI)).collect();
        assert_eq!(pattern, [0, 0, 1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(floor_counter(3, 1.0 / PI), 1);
        assert_eq!(floor_counter(0, 0.99), 0);
        for n in [0, 1, 17, 1_000_000] {
            assert_eq!(floor_counter(n, 1.0), 1);
        }
    }

    #[test]
    fn counting_function_reading() {
        assert_eq!(
            counter_from_counting_function(|x| x / PI, 3),
            floor_counter(3, 1.0 / PI)
        );
        assert_eq!(bessel_j0_counter_corrected(8), 1);
        assert_eq!(airy_counter_corrected(6), 1);
    }

    #[test]
    fn bessel_literal_values() {
        assert_eq!(bessel_j0_counter(2), 1);
        assert_eq!(bessel_j0_counter(3), 0);
        assert_eq!(bessel_j0_counter(8), 0);
    }

    #[test]
    fn airy_uncorrected_values() {
        assert_eq!(airy_counter(2), 1);
        assert_eq!(airy_counter(5), 1);
        assert_eq!(airy_counter(6), 0);
    }

    #[test]
    fn corrected_counters_match_oracles() {
        for family in [CounterFamily::BesselJ0, CounterFamily::AiryNegative] {
            let r = divergence_report(family, CounterReading::Corrected, 200);
            assert!(r.agrees(), "{family:?}: {:?}", r.divergences);
        }
    }

    #[test]
    fn literal_readings_diverge() {
        let airy = divergence_report(CounterFamily::AiryNegative, CounterReading::Literal, 200);
        assert_eq!(airy.first(), Some(6));
        let bessel = divergence_report(CounterFamily::BesselJ0, CounterReading::Literal, 200);
        assert!(bessel
            .divergences
            .iter()
            .any(|d| d.n == 8 && d.formula == 0 && d.oracle == 1));
    }
}
