//! Plain-text zero cache: one ordinate per line with 12 decimals, strictly
//! ascending, `#` comment lines allowed. Recognised comments record how the
//! list was produced:
//!
//! ```text
//! # critline zero cache
//! # generator: critline 0.1.0
//! # source: scanned
//! # range: 0 6501
//! # step: 0.05
//! # refine_tol: 1e-9
//! 14.134725141735
//! ```

use std::io::{BufRead, Write};

use super::{ScanConfig, ZeroList, ZeroSource};
use crate::error::{Error, Result};

pub const CACHE_MAGIC: &str = "# critline zero cache";

#[derive(Debug, Clone, PartialEq)]
pub struct CacheHeader {
    pub generator: Option<String>,
    pub source: ZeroSource,
    pub span: Option<(f64, f64)>,
    pub step: Option<f64>,
    pub refine_tol: Option<f64>,
}

pub fn write_zero_cache<W: Write>(
    mut w: W,
    zeros: &ZeroList,
    scan: Option<&ScanConfig>,
) -> Result<()> {
    writeln!(w, "{CACHE_MAGIC}")?;
    writeln!(w, "# generator: critline {}", env!("CARGO_PKG_VERSION"))?;
    writeln!(w, "# source: {}", zeros.source().as_str())?;
    let (lo, hi) = zeros.span();
    writeln!(w, "# range: {lo} {hi}")?;
    if let Some(cfg) = scan {
        writeln!(w, "# step: {}", cfg.step)?;
        writeln!(w, "# refine_tol: {:e}", cfg.refine_tol)?;
    }
    for y in zeros.ordinates() {
        writeln!(w, "{y:.12}")?;
    }
    w.flush()?;
    Ok(())
}

/// Read a cache or an external zero table. Without a `source` comment the
/// list counts as ingested; without a `range` comment it is taken to cover
/// `[0, last ordinate]`.
pub fn read_zero_cache<R: BufRead>(r: R) -> Result<(ZeroList, CacheHeader)> {
    let mut header = CacheHeader {
        generator: None,
        source: ZeroSource::Ingested,
        span: None,
        step: None,
        refine_tol: None,
    };
    let mut ordinates: Vec<f64> = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if let Some(comment) = text.strip_prefix('#') {
            parse_comment(comment.trim(), line_no, &mut header)?;
            continue;
        }
        let y: f64 = text.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("expected an ordinate, found {text:?}"),
        })?;
        if !(y.is_finite() && y > 0.0) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("ordinate {text} is not positive"),
            });
        }
        if let Some(&prev) = ordinates.last() {
            if y <= prev {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("ordinate {text} does not exceed the previous {prev:.12}"),
                });
            }
        }
        ordinates.push(y);
    }
    let span = header
        .span
        .unwrap_or((0.0, ordinates.last().copied().unwrap_or(0.0)));
    let list = ZeroList::new(ordinates, header.source, span)?;
    Ok((list, header))
}

fn parse_comment(comment: &str, line: usize, header: &mut CacheHeader) -> Result<()> {
    let Some((key, value)) = comment.split_once(':') else {
        return Ok(());
    };
    let value = value.trim();
    let err = |what: &str| Error::Parse {
        line,
        message: format!("malformed {what} comment {value:?}"),
    };
    let number = |s: &str, what: &str| s.parse::<f64>().map_err(|_| err(what));
    match key.trim() {
        "generator" => header.generator = Some(value.to_string()),
        "source" => {
            header.source = match value {
                "scanned" => ZeroSource::Scanned,
                "ingested" => ZeroSource::Ingested,
                _ => return Err(err("source")),
            }
        }
        "range" => {
            let mut parts = value.split_whitespace();
            let (Some(lo), Some(hi), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err("range"));
            };
            header.span = Some((number(lo, "range")?, number(hi, "range")?));
        }
        "step" => header.step = Some(number(value, "step")?),
        "refine_tol" => header.refine_tol = Some(number(value, "refine_tol")?),
        _ => {}
    }
    Ok(())
}
