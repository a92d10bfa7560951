//! Zero lists from explicit files or from the scan cache directory.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use critline::verify::CENSUS_T_MAX;
use critline::zeros::{read_zero_cache, scan_zeros, write_zero_cache, ScanConfig, ZeroList};

use crate::emit::write_atomic;

/// Gap tolerated between the spans of merged zero files.
const MERGE_TOL: f64 = 1e-9;

pub fn read_zero_file(path: &Path) -> Result<ZeroList> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let (zeros, _) = read_zero_cache(BufReader::new(file))
        .with_context(|| format!("cannot read zero list {}", path.display()))?;
    Ok(zeros)
}

/// Read and merge the given files in order.
pub fn read_zero_files(paths: &[PathBuf]) -> Result<ZeroList> {
    let Some((first, rest)) = paths.split_first() else {
        bail!("no zero files given");
    };
    let mut merged = read_zero_file(first)?;
    for path in rest {
        let next = read_zero_file(path)?;
        merged = merged
            .merge(&next, MERGE_TOL)
            .with_context(|| format!("cannot merge {}", path.display()))?;
    }
    Ok(merged)
}

/// `ZETA_CACHE_DIR`, else `$XDG_CACHE_HOME/critline`, else `$HOME/.cache/critline`.
pub fn cache_dir() -> Result<PathBuf> {
    if let Some(dir) = std::env::var_os("ZETA_CACHE_DIR").filter(|d| !d.is_empty()) {
        return Ok(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return Ok(PathBuf::from(dir).join("critline"));
    }
    match std::env::var_os("HOME").filter(|d| !d.is_empty()) {
        Some(home) => Ok(PathBuf::from(home).join(".cache").join("critline")),
        None => bail!("no cache directory: set ZETA_CACHE_DIR"),
    }
}

/// Upper scan bound used for a census that must reach `t_needed`: the
/// standard census when it suffices, so that one cache file serves most runs.
pub fn census_bound(t_needed: f64) -> f64 {
    if t_needed <= CENSUS_T_MAX {
        CENSUS_T_MAX
    } else {
        t_needed.ceil()
    }
}

/// Census on `[0, t_hi]` from the cache directory, scanned and stored on first use.
pub fn cached_census(t_hi: f64) -> Result<ZeroList> {
    let dir = cache_dir()?;
    let path = dir.join(format!("zeros-0-{t_hi}.txt"));
    if path.is_file() {
        return read_zero_file(&path);
    }
    let cfg = ScanConfig::new(0.0, t_hi);
    let report = scan_zeros(&cfg).context("census scan failed")?;
    for d in report.diagnostics.iter().filter(|d| d.is_suspect()) {
        eprintln!("warning: {d:?}");
    }
    if !report.is_clean() {
        bail!("census scan on [0, {t_hi}] has suspect intervals; not caching it");
    }
    std::fs::create_dir_all(&dir)
        .with_context(|| format!("cannot create cache directory {}", dir.display()))?;
    write_atomic(&path, |w| {
        Ok(write_zero_cache(w, &report.zeros, Some(&cfg))?)
    })?;
    Ok(report.zeros)
}

/// Zeros from `files` when given, else the cached census reaching `t_needed`.
pub fn load_zeros(files: &[PathBuf], t_needed: f64) -> Result<ZeroList> {
    if files.is_empty() {
        cached_census(census_bound(t_needed))
    } else {
        read_zero_files(files)
    }
}
