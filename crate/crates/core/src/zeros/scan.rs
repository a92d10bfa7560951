use rayon::prelude::*;
use serde::Serialize;

use super::{ZeroList, ZeroSource};
use crate::approx::main_term;
use crate::error::{Error, Result};
use crate::special::{hardy_z, theta_exact, HARDY_Z_WINDOW};

/// Largest admissible scan step.
const MAX_STEP: f64 = 0.05;

/// Integers after a disagreeing interval over which the mean of the
/// reconstructed S is taken to tell a winding from a lost pair of zeros.
const WINDING_WINDOW: i64 = 24;

/// A lost pair shifts the reconstructed S by 2; a genuine winding leaves its
/// mean near 0.
const WINDING_MEAN_BOUND: f64 = 0.75;

/// Allowed distance between the found count and the smooth main term.
const COUNT_DEVIATION_BOUND: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanConfig {
    pub t_lo: f64,
    pub t_hi: f64,
    pub step: f64,
    pub refine_tol: f64,
}

impl ScanConfig {
    pub const DEFAULT_STEP: f64 = 0.05;
    pub const DEFAULT_REFINE_TOL: f64 = 1e-9;

    pub fn new(t_lo: f64, t_hi: f64) -> Self {
        Self {
            t_lo,
            t_hi,
            step: Self::DEFAULT_STEP,
            refine_tol: Self::DEFAULT_REFINE_TOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if !(self.t_lo.is_finite() && self.t_hi.is_finite()) || self.t_lo < 0.0 {
            return bad(format!(
                "scan range [{}, {}] is not finite and nonnegative",
                self.t_lo, self.t_hi
            ));
        }
        if self.t_lo >= self.t_hi {
            return bad(format!(
                "t_lo = {} must be below t_hi = {}",
                self.t_lo, self.t_hi
            ));
        }
        if self.t_hi > HARDY_Z_WINDOW.1 {
            return bad(format!("t_hi = {} exceeds {}", self.t_hi, HARDY_Z_WINDOW.1));
        }
        if !(self.step > 0.0 && self.step <= MAX_STEP) {
            return bad(format!("step = {} must lie in (0, {MAX_STEP}]", self.step));
        }
        if !(self.refine_tol > 0.0 && self.refine_tol < self.step) {
            return bad(format!(
                "refine_tol = {} must lie in (0, step)",
                self.refine_tol
            ));
        }
        Ok(())
    }

    /// First ordinate actually scanned; Z is only evaluated from t = 2 on.
    fn start(&self) -> f64 {
        self.t_lo.max(HARDY_Z_WINDOW.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ScanDiagnostic {
    /// Unit interval `[n, n+1)` rescanned at a quarter step after its count
    /// disagreed with the theta-based prediction by 2 or more.
    Rescanned {
        n: i64,
        before: usize,
        after: usize,
        predicted: i64,
    },
    /// Count still differs from the prediction, but the reconstructed S
    /// stays centred: the principal argument wrapped, no zero is missing.
    Winding {
        n: i64,
        found: usize,
        predicted: i64,
    },
    /// Count still differs from the prediction and the reconstructed S is
    /// offset afterwards: zeros are probably missing.
    SuspectInterval {
        n: i64,
        found: usize,
        predicted: i64,
        mean_s: f64,
    },
    /// Zeros found on `(0, t]` against the smooth main term.
    CountCheck {
        t: f64,
        found: usize,
        main_term: f64,
        suspect: bool,
    },
}

impl ScanDiagnostic {
    pub fn is_suspect(&self) -> bool {
        match self {
            ScanDiagnostic::SuspectInterval { .. } => true,
            ScanDiagnostic::CountCheck { suspect, .. } => *suspect,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub zeros: ZeroList,
    pub diagnostics: Vec<ScanDiagnostic>,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        !self.diagnostics.iter().any(ScanDiagnostic::is_suspect)
    }
}

/// Locate the zeros of Z on `[t_lo, t_hi]` by sign changes on a grid anchored
/// at multiples of `step`, refine them by bisection, then cross-check the
/// counts interval by interval.
pub fn scan_zeros(cfg: &ScanConfig) -> Result<ScanReport> {
    scan_zeros_partitioned(cfg, 1)
}

/// As [`scan_zeros`], with the grid split into `parts` chunks that are
/// scanned concurrently. Chunk boundaries are grid points, so the result is
/// identical to the single-chunk scan.
pub fn scan_zeros_partitioned(cfg: &ScanConfig, parts: usize) -> Result<ScanReport> {
    cfg.validate()?;
    let start = cfg.start();
    if start >= cfg.t_hi {
        let zeros = ZeroList::new(Vec::new(), ZeroSource::Scanned, (cfg.t_lo, cfg.t_hi))?;
        return Ok(ScanReport {
            zeros,
            diagnostics: Vec::new(),
        });
    }
    let bounds = chunk_bounds(start, cfg.t_hi, cfg.step, parts.max(1));
    let chunks: Vec<Vec<f64>> = bounds
        .par_windows(2)
        .map(|w| scan_grid(&grid(w[0], w[1], cfg.step), cfg.step, cfg.refine_tol))
        .collect();
    let mut ordinates: Vec<f64> = chunks.into_iter().flatten().collect();
    ordinates.dedup();

    let diagnostics = post_pass(cfg, start, &mut ordinates);
    let zeros = ZeroList::new(ordinates, ZeroSource::Scanned, (cfg.t_lo, cfg.t_hi))?;
    Ok(ScanReport { zeros, diagnostics })
}

/// Grid points `a`, every `i * step` strictly inside `(a, b)`, and `b`.
fn grid(a: f64, b: f64, step: f64) -> Vec<f64> {
    let mut points = vec![a];
    let mut i = (a / step).floor() as i64 + 1;
    loop {
        let t = i as f64 * step;
        if t >= b {
            break;
        }
        if t > a {
            points.push(t);
        }
        i += 1;
    }
    points.push(b);
    points
}

fn chunk_bounds(a: f64, b: f64, step: f64, parts: usize) -> Vec<f64> {
    let mut bounds = vec![a];
    for k in 1..parts {
        let target = a + (b - a) * k as f64 / parts as f64;
        let t = (target / step).round() * step;
        if t > *bounds.last().unwrap() && t < b {
            bounds.push(t);
        }
    }
    bounds.push(b);
    bounds
}

fn z(t: f64) -> f64 {
    hardy_z(t).expect("scan grid stays inside the Hardy Z window")
}

/// Z at `t`, moved right by `nudge` when the grid point is itself a zero.
fn sample(t: f64, nudge: f64) -> (f64, f64) {
    let v = z(t);
    if v == 0.0 {
        let moved = t + nudge;
        (moved, z(moved))
    } else {
        (t, v)
    }
}

fn scan_grid(points: &[f64], step: f64, tol: f64) -> Vec<f64> {
    let nudge = step / 10.0;
    let mut found = Vec::new();
    let mut prev = sample(points[0], nudge);
    for &t in &points[1..] {
        let cur = sample(t, nudge);
        if prev.1.signum() != cur.1.signum() && cur.0 > prev.0 {
            found.push(bisect(prev, cur, tol));
        }
        prev = cur;
    }
    found
}

fn bisect((mut a, mut za): (f64, f64), (mut b, _): (f64, f64), tol: f64) -> f64 {
    while b - a > tol {
        let m = 0.5 * (a + b);
        let zm = z(m);
        if zm == 0.0 {
            return m;
        }
        if zm.signum() == za.signum() {
            a = m;
            za = zm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Principal value of `(1/pi) arg zeta(1/2 + it)` from the sign of Z and theta.
fn principal_s(t: f64) -> f64 {
    let mut s = -theta_exact(t) / std::f64::consts::PI;
    if z(t) < 0.0 {
        s += 1.0;
    }
    let wrapped = s - 2.0 * (s / 2.0).round();
    if wrapped <= -1.0 {
        wrapped + 2.0
    } else {
        wrapped
    }
}

fn post_pass(cfg: &ScanConfig, start: f64, ordinates: &mut Vec<f64>) -> Vec<ScanDiagnostic> {
    let mut diagnostics = Vec::new();
    let first = start.ceil() as i64;
    let last = cfg.t_hi.floor() as i64;

    if last > first {
        let theta_over_pi: Vec<f64> = (first..=last)
            .map(|n| theta_exact(n as f64) / std::f64::consts::PI)
            .collect();
        let s_p: Vec<f64> = (first..=last).map(|n| principal_s(n as f64)).collect();
        let predicted: Vec<i64> = (0..theta_over_pi.len() - 1)
            .map(|i| (theta_over_pi[i + 1] - theta_over_pi[i] + s_p[i + 1] - s_p[i]).round() as i64)
            .collect();

        let mut disagreeing = Vec::new();
        for (i, &p) in predicted.iter().enumerate() {
            let n = first + i as i64;
            let found = count_in(ordinates, n as f64, (n + 1) as f64);
            if (found as i64 - p).abs() < 2 {
                continue;
            }
            diagnostics.push(rescan_unit(cfg, ordinates, n, p));
            if (count_in(ordinates, n as f64, (n + 1) as f64) as i64 - p).abs() >= 2 {
                // a winding next door can shift the mismatch by one interval
                for m in [n - 1, n + 1] {
                    if m >= first && m < last {
                        let pm = predicted[(m - first) as usize];
                        diagnostics.push(rescan_unit(cfg, ordinates, m, pm));
                    }
                }
                disagreeing.push((n, p));
            }
        }

        // Reconstructed S at integers, anchored so that |S| < 1 at the start.
        let offset = (theta_over_pi[0] + 1.0 + s_p[0]).round()
            - count_in(ordinates, 0.0, first as f64) as f64;
        let s_found = |n: i64| {
            let i = (n - first) as usize;
            count_in(ordinates, 0.0, n as f64) as f64 + offset - theta_over_pi[i] - 1.0
        };
        for (n, p) in disagreeing {
            let found = count_in(ordinates, n as f64, (n + 1) as f64);
            if (found as i64 - p).abs() < 2 {
                continue;
            }
            if found as i64 > p {
                // sign-change scanning cannot invent zeros
                diagnostics.push(ScanDiagnostic::Winding {
                    n,
                    found,
                    predicted: p,
                });
                continue;
            }
            let window: Vec<f64> = (n + 1..=(n + WINDING_WINDOW).min(last))
                .map(s_found)
                .collect();
            let mean_s = if window.len() >= (WINDING_WINDOW / 3) as usize {
                window.iter().sum::<f64>() / window.len() as f64
            } else {
                f64::NAN
            };
            if mean_s.abs() < WINDING_MEAN_BOUND {
                diagnostics.push(ScanDiagnostic::Winding {
                    n,
                    found,
                    predicted: p,
                });
            } else {
                diagnostics.push(ScanDiagnostic::SuspectInterval {
                    n,
                    found,
                    predicted: p,
                    mean_s,
                });
            }
        }
    }

    if cfg.t_lo <= start && start <= HARDY_Z_WINDOW.0 && cfg.t_hi > 2.0 * std::f64::consts::PI {
        let main = main_term(cfg.t_hi);
        let found = ordinates.len();
        diagnostics.push(ScanDiagnostic::CountCheck {
            t: cfg.t_hi,
            found,
            main_term: main,
            suspect: (found as f64 - main).abs() > COUNT_DEVIATION_BOUND,
        });
    }
    diagnostics
}

/// Rescan `[n, n+1)` at a quarter step, keeping the finer result if it finds more.
fn rescan_unit(
    cfg: &ScanConfig,
    ordinates: &mut Vec<f64>,
    n: i64,
    predicted: i64,
) -> ScanDiagnostic {
    let (a, b) = (n as f64, (n + 1) as f64);
    let before = count_in(ordinates, a, b);
    let fine: Vec<f64> = scan_grid(&grid(a, b, cfg.step / 4.0), cfg.step / 4.0, cfg.refine_tol)
        .into_iter()
        .filter(|&y| y < b)
        .collect();
    let after = fine.len().max(before);
    if fine.len() > before {
        let lo = ordinates.partition_point(|&y| y < a);
        let hi = ordinates.partition_point(|&y| y < b);
        ordinates.splice(lo..hi, fine);
    }
    ScanDiagnostic::Rescanned {
        n,
        before,
        after,
        predicted,
    }
}

fn count_in(ordinates: &[f64], a: f64, b: f64) -> usize {
    ordinates.partition_point(|&y| y < b) - ordinates.partition_point(|&y| y < a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(lo: f64, hi: f64) -> ScanReport {
        scan_zeros(&ScanConfig::new(lo, hi)).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(ScanConfig::new(0.0, 50.0).validate().is_ok());
        assert!(ScanConfig::new(50.0, 50.0).validate().is_err());
        assert!(ScanConfig::new(-1.0, 50.0).validate().is_err());
        assert!(ScanConfig::new(0.0, 1e4 + 1.0).validate().is_err());
        let mut c = ScanConfig::new(0.0, 50.0);
        c.step = 0.1;
        assert!(c.validate().is_err());
        c.step = 0.05;
        c.refine_tol = 0.0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn grid_is_anchored_at_multiples_of_step() {
        let g = grid(2.0, 2.3, 0.1);
        assert_eq!(g.len(), 4);
        assert_eq!(g[1], 21.0 * 0.1);
        assert_eq!(*g.last().unwrap(), 2.3);
        let b = chunk_bounds(2.0, 100.0, 0.05, 4);
        assert_eq!(b.len(), 5);
        for t in &b[1..4] {
            assert_eq!(*t, (t / 0.05).round() * 0.05);
        }
    }

    #[test]
    fn first_ten_zeros() {
        let r = scan(0.0, 50.0);
        assert!(r.is_clean(), "{:?}", r.diagnostics);
        let floors: Vec<i64> = r
            .zeros
            .ordinates()
            .iter()
            .map(|y| y.floor() as i64)
            .collect();
        assert_eq!(floors, [14, 21, 25, 30, 32, 37, 40, 43, 48, 49]);
        assert!((r.zeros.ordinates()[0] - 14.134725141734693).abs() < 1e-9);
        for &y in r.zeros.ordinates() {
            assert!(hardy_z(y).unwrap().abs() <= 1e-6);
        }
    }

    #[test]
    fn nothing_below_fourteen() {
        assert!(scan(0.0, 14.0).zeros.is_empty());
        assert!(scan(0.0, 1.5).zeros.is_empty());
    }

    #[test]
    fn twenty_nine_below_one_hundred() {
        let r = scan(0.0, 100.0);
        assert_eq!(r.zeros.len(), 29);
        assert!(r.is_clean());
    }

    #[test]
    fn partitioned_scan_is_identical() {
        let cfg = ScanConfig::new(0.0, 400.0);
        let one = scan_zeros(&cfg).unwrap();
        let many = scan_zeros_partitioned(&cfg, 7).unwrap();
        assert_eq!(one.zeros.ordinates(), many.zeros.ordinates());
    }

    #[test]
    fn subrange_scan_agrees_with_full_scan() {
        let full = scan(0.0, 200.0);
        let part = scan(100.0, 200.0);
        assert_eq!(full.zeros.in_range(100.0, 200.0), part.zeros.ordinates());
        assert!(part.is_clean(), "{:?}", part.diagnostics);
    }

    #[test]
    fn post_pass_repairs_a_coarse_scan() {
        let cfg = ScanConfig::new(5800.0, 5850.0);
        let fine = scan_zeros(&cfg).unwrap();
        assert_eq!(fine.zeros.in_range(5826.0, 5827.0).len(), 3);

        // a grid ten times too coarse steps over close pairs
        let mut coarse = scan_grid(&grid(5800.0, 5850.0, 0.5), 0.5, cfg.refine_tol);
        assert!(coarse.len() < fine.zeros.len());
        let diags = post_pass(&cfg, 5800.0, &mut coarse);
        assert!(diags.iter().any(|d| matches!(
            d,
            ScanDiagnostic::Rescanned {
                n: 5826,
                after: 3,
                ..
            }
        )));
        assert!(!diags.iter().any(ScanDiagnostic::is_suspect), "{diags:?}");
        assert_eq!(coarse.len(), fine.zeros.len());
        for (a, b) in coarse.iter().zip(fine.zeros.ordinates()) {
            assert!((a - b).abs() <= 2.0 * cfg.refine_tol);
        }
    }
}
