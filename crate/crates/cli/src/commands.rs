//! One function per subcommand. Each returns whether the run succeeded in the
//! domain sense (clean scan, all checks passed); I/O and evaluation problems
//! are errors.

use anyhow::{bail, ensure, Context, Result};
use critline::approx::{
    approx_arg_zeta, coeff_sequence, ruler_normalized, symbolic_expression, Prime,
};
use critline::estimator::{
    staircase, staircase_counts, staircase_defects, EstimateMethod, ZeroEstimate,
};
use critline::render::{beat_width, render_counts};
use critline::special::{arg_gamma_quarter, arg_zeta_principal, theta_exact, theta_series};
use critline::verify::{run_verification, VerifyOptions};
use critline::zeros::{scan_zeros, unit_interval_counts, write_zero_cache, ScanConfig};
use serde_json::Value;

use crate::cli::{
    CountsArgs, EstimateArgs, Format, Method, PointsArgs, RenderArgs, SequenceKind, SequencesArgs,
    StaircaseArgs, TableArgs, ThetaArgs, VerifyArgs, ZerosArgs,
};
use crate::emit::{with_output, write_atomic, Cell, Table};
use crate::source::{cache_dir, load_zeros, read_zero_files};

/// Largest index accepted by the per-integer commands (the evaluator window).
const N_LIMIT: u64 = 10_000;

pub enum Outcome {
    Success,
    Failure,
}

fn check_range(from: u64, to: u64) -> Result<()> {
    ensure!(from >= 1, "--from must be at least 1");
    ensure!(from <= to, "empty range {from}..={to}");
    ensure!(to <= N_LIMIT, "--to = {to} exceeds {N_LIMIT}");
    Ok(())
}

fn check_n_max(n_max: u64) -> Result<()> {
    ensure!(n_max >= 1, "--n-max must be at least 1");
    ensure!(n_max < N_LIMIT, "--n-max = {n_max} must be below {N_LIMIT}");
    Ok(())
}

pub fn theta(args: &ThetaArgs) -> Result<Outcome> {
    let mut table = match args.order {
        None => Table::new(&["t", "theta"]),
        Some(_) => Table::new(&["t", "theta", "series", "difference"]),
    };
    for &t in &args.t {
        ensure!(t.is_finite(), "t = {t} is not finite");
        let exact = theta_exact(t);
        let mut row = vec![Cell::from(t), Cell::from(exact)];
        if let Some(order) = args.order {
            let series = theta_series(t, order)?;
            row.push(series.into());
            row.push((series - exact).into());
        }
        table.push(row);
    }
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn arg_zeta(args: &PointsArgs) -> Result<Outcome> {
    let mut table = Table::new(&["t", "arg"]);
    for &t in &args.t {
        table.push(vec![t.into(), arg_zeta_principal(t)?.into()]);
    }
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn arg_gamma(args: &PointsArgs) -> Result<Outcome> {
    let mut table = Table::new(&["t", "arg"]);
    for &t in &args.t {
        ensure!(t.is_finite(), "t = {t} is not finite");
        table.push(vec![t.into(), arg_gamma_quarter(t).into()]);
    }
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn zeros(args: &ZerosArgs) -> Result<Outcome> {
    let cfg = ScanConfig {
        t_lo: args.min,
        t_hi: args.max,
        step: args.step,
        refine_tol: args.tol,
    };
    cfg.validate()?;
    let path = match &args.out {
        Some(path) => path.clone(),
        None => {
            let dir = cache_dir()?;
            std::fs::create_dir_all(&dir)
                .with_context(|| format!("cannot create cache directory {}", dir.display()))?;
            dir.join(format!("zeros-{}-{}.txt", args.min, args.max))
        }
    };
    crate::emit::check_parent(&path)?;
    let report = scan_zeros(&cfg)?;
    write_atomic(&path, |w| {
        Ok(write_zero_cache(w, &report.zeros, Some(&cfg))?)
    })?;
    for d in report.diagnostics.iter().filter(|d| d.is_suspect()) {
        eprintln!("suspect: {d:?}");
    }
    eprintln!("{} zeros written to {}", report.zeros.len(), path.display());
    Ok(if report.is_clean() {
        Outcome::Success
    } else {
        Outcome::Failure
    })
}

pub fn counts(args: &CountsArgs) -> Result<Outcome> {
    check_n_max(args.n_max)?;
    let zeros = load_zeros(&args.zeros.files, (args.n_max + 1) as f64)?;
    let counts = unit_interval_counts(&zeros, args.n_max)?;
    let table = match args.equal {
        Some(k) => {
            let mut table = Table::new(&["n"]);
            for n in counts.positions_of(k) {
                table.push(vec![n.into()]);
            }
            table
        }
        None => {
            let mut table = Table::new(&["n", "zeros"]);
            for (n, f) in counts.iter() {
                table.push(vec![n.into(), f.into()]);
            }
            table
        }
    };
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn table(args: &TableArgs) -> Result<Outcome> {
    check_range(args.from, args.to)?;
    let mut table = Table::new(&["n", "true", "approx", "expr"]);
    for n in args.from..=args.to {
        let expr = symbolic_expression(n)?;
        let json = serde_json::to_value(&expr)?;
        table.push(vec![
            n.into(),
            arg_zeta_principal(n as f64)?.into(),
            approx_arg_zeta(n).into(),
            Cell::Rich(expr.to_string(), json),
        ]);
    }
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn sequences(args: &SequencesArgs) -> Result<Outcome> {
    let p = Prime::new(args.prime)?;
    ensure!(args.n_max >= 1, "--n-max must be at least 1");
    let values: Vec<i64> = match args.kind {
        SequenceKind::Coefficients => coeff_sequence(p, args.n_max),
        SequenceKind::Ruler => (1..=args.n_max).map(|n| ruler_normalized(p, n)).collect(),
    };
    let mut table = Table::new(&["n", "value"]);
    for (n, v) in (1u64..).zip(values) {
        table.push(vec![n.into(), v.into()]);
    }
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn estimate(args: &EstimateArgs) -> Result<Outcome> {
    ensure!(args.from >= 1, "--from must be at least 1");
    ensure!(
        args.from <= args.to,
        "empty range {}..={}",
        args.from,
        args.to
    );
    let method = match args.method {
        Method::Lambert => EstimateMethod::LambertClosedForm,
        Method::Smooth => EstimateMethod::SmoothSolve,
    };
    let estimates = (args.from..=args.to)
        .map(|n| ZeroEstimate::compute(n, method))
        .collect::<critline::Result<Vec<_>>>()?;
    let table = if args.compare {
        let reach = estimates.last().map_or(0.0, |e| e.estimate) + 2.0;
        let zeros = load_zeros(&args.zeros.files, reach)?;
        let mut table = Table::new(&["n", "estimate", "actual", "difference"]);
        for e in &estimates {
            let Some(actual) = zeros.ordinate(e.index_n as usize) else {
                bail!("zero list has no ordinate number {}", e.index_n);
            };
            table.push(vec![
                e.index_n.into(),
                e.estimate.into(),
                actual.into(),
                (e.estimate - actual).into(),
            ]);
        }
        table
    } else {
        let mut table = Table::new(&["n", "estimate"]);
        for e in &estimates {
            table.push(vec![e.index_n.into(), e.estimate.into()]);
        }
        table
    };
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn staircase_cmd(args: &StaircaseArgs) -> Result<Outcome> {
    check_n_max(args.n_max)?;
    let values = staircase(args.n_max)?;
    let table = if args.defects {
        let zeros = load_zeros(&args.zeros.files, (args.n_max + 1) as f64)?;
        let counts = unit_interval_counts(&zeros, args.n_max)?;
        let mut table = Table::new(&["n", "staircase", "zeros", "excess"]);
        for d in staircase_defects(&values, &counts) {
            table.push(vec![
                d.n.into(),
                d.staircase.into(),
                d.zeros.into(),
                d.excess().into(),
            ]);
        }
        table
    } else {
        let mut table = Table::new(&["n", "value", "count"]);
        let steps = staircase_counts(&values);
        for ((n, v), c) in (1u64..).zip(&values).zip(steps) {
            table.push(vec![n.into(), (*v).into(), c.into()]);
        }
        table
    };
    table.emit(&args.output)?;
    Ok(Outcome::Success)
}

pub fn render(args: &RenderArgs) -> Result<Outcome> {
    check_n_max(args.n_max)?;
    let width = match args.beat_scale {
        Some(scale) => beat_width(scale)?.round() as usize,
        None => args.width,
    };
    crate::emit::check_parent(&args.out)?;
    let zeros = load_zeros(&args.zeros.files, (args.n_max + 1) as f64)?;
    let counts = unit_interval_counts(&zeros, args.n_max)?;
    let image = render_counts(&counts, width)?;
    write_atomic(&args.out, |w| Ok(image.write_pgm(w)?))?;
    Ok(Outcome::Success)
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome> {
    ensure!(
        args.format != Format::Csv,
        "verify reports are text or json"
    );
    let zeros = if args.files.is_empty() {
        None
    } else {
        Some(read_zero_files(&args.files)?)
    };
    let opts = VerifyOptions {
        only: args.only.clone(),
        zeros,
        parts: args.parts.max(1),
    };
    let report = run_verification(&opts)?;
    with_output(None, |w| {
        match args.format {
            Format::Json => {
                let mut value = serde_json::to_value(&report)?;
                if let Value::Object(map) = &mut value {
                    map.insert("passed".into(), report.all_passed().into());
                }
                serde_json::to_writer_pretty(&mut *w, &value)?;
                writeln!(w)?;
            }
            _ => {
                for c in &report.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(
                        w,
                        "{status} [{}] {}: expected {}, got {}",
                        c.group, c.id, c.expected, c.got
                    )?;
                }
                let failed = report.failures().count();
                writeln!(
                    w,
                    "{} checks, {} passed, {failed} failed",
                    report.checks.len(),
                    report.checks.len() - failed
                )?;
            }
        }
        Ok(())
    })?;
    Ok(if report.all_passed() {
        Outcome::Success
    } else {
        Outcome::Failure
    })
}
