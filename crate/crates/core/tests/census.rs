//! Whole-census properties; the scan to 6501 takes a couple of seconds.

use std::f64::consts::PI;
use std::sync::OnceLock;

use critline::approx::main_term;
use critline::estimator::{staircase, staircase_jumps};
use critline::zeros::{scan_zeros, unit_interval_counts, ScanConfig, UnitIntervalCounts, ZeroList};

const T_MAX: f64 = 6501.0;
const N_MAX: u64 = 6500;

fn census() -> &'static (ZeroList, UnitIntervalCounts) {
    static CENSUS: OnceLock<(ZeroList, UnitIntervalCounts)> = OnceLock::new();
    CENSUS.get_or_init(|| {
        let report = scan_zeros(&ScanConfig::new(0.0, T_MAX)).unwrap();
        assert!(report.is_clean(), "{:?}", report.diagnostics);
        let counts = unit_interval_counts(&report.zeros, N_MAX).unwrap();
        (report.zeros, counts)
    })
}

#[test]
fn counts_sum_to_the_census() {
    let (zeros, counts) = census();
    assert_eq!(counts.total() as usize, zeros.count_below(T_MAX));
    assert_eq!(counts.iter().map(|(_, f)| f).max(), Some(3));
}

#[test]
fn count_tracks_the_smooth_main_term() {
    let (zeros, _) = census();
    for t in [100.0, 500.0, 1000.0, 2500.0, 5000.0, 6500.0] {
        let n = zeros.count_up_to(t) as f64;
        assert!(
            (n - main_term(t)).abs() <= 2.0,
            "t = {t}: {n} vs {}",
            main_term(t)
        );
    }
}

#[test]
fn block_means_follow_log_density() {
    let (_, counts) = census();
    for (a, b) in [(1000, 2000), (2000, 4000), (4000, 6500)] {
        let mean = counts.mean_over(a, b);
        let density = (a..=b)
            .map(|n| (n as f64 / (2.0 * PI)).ln() / (2.0 * PI))
            .sum::<f64>()
            / (b - a + 1) as f64;
        assert!(
            (mean - density).abs() < 0.02,
            "[{a}, {b}]: {mean} vs {density}"
        );
    }
}

#[test]
fn staircase_jumps_agree_with_counts_early_on() {
    let (_, counts) = census();
    let values = staircase(300).unwrap();
    let jumps = staircase_jumps(&values);
    let mismatches: Vec<u64> = (1u64..300)
        .filter(|&n| jumps[(n - 1) as usize] != counts.get(n) as i64)
        .collect();
    assert!(mismatches.is_empty(), "{mismatches:?}");
}
