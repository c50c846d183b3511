//! Command-line front end for the `eulerzeta` evaluators.

pub mod args;
pub mod cache;
pub mod report;
mod table;

use std::io::{self, Write};
use std::time::Instant;

use eulerzeta::accel::{self, RationalArgument};
use eulerzeta::exact::{self, parse_rational};
use eulerzeta::precision::DecimalRounding;
use eulerzeta::{check, BigReal, PrecisionConfig, Rational};
use serde::Serialize;
use serde_json::json;

pub use args::{Cli, Command, Format, TableKind};
use report::{csv_error, query, render, series_report, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    NotConverged(String),
    #[error("{0} identity check(s) failed")]
    ChecksFailed(usize),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// 2 for bad input, 3 when a series misses its target, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::NotConverged(_) => 3,
            CliError::ChecksFailed(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<eulerzeta::Error> for CliError {
    fn from(e: eulerzeta::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn argument(m: u64, i: u64, k: u32) -> Result<RationalArgument, CliError> {
    Ok(RationalArgument::new(m, i, k)?)
}

/// Runs one invocation, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = PrecisionConfig::from_text(cli.prec, &cli.eps, cli.max_terms)?;
    let bits = cfg.precision_bits();
    let start = Instant::now();
    let report = match &cli.command {
        Command::Zeta { k } => {
            let res = accel::zeta_int(*k, &cfg)?;
            series_report("zeta", query(&[("k", json!(k))]), &res, bits, elapsed_ms(start))?
        }
        Command::Zetahat { k } => {
            let res = accel::zetahat(*k, &cfg)?;
            series_report("zetahat", query(&[("k", json!(k))]), &res, bits, elapsed_ms(start))?
        }
        Command::Catalan => {
            let res = accel::catalan(&cfg);
            series_report("catalan", query(&[]), &res, bits, elapsed_ms(start))?
        }
        Command::M { m, i, k } => {
            let res = accel::m_accel(argument(*m, *i, *k)?, &cfg)?;
            let q = query(&[("m", json!(m)), ("i", json!(i)), ("k", json!(k))]);
            series_report("m", q, &res, bits, elapsed_ms(start))?
        }
        Command::Hurwitz { k, i, m } => {
            let res = accel::hurwitz_rational(*k, *i, *m, &cfg)?;
            let q = query(&[("k", json!(k)), ("i", json!(i)), ("m", json!(m))]);
            series_report("hurwitz", q, &res, bits, elapsed_ms(start))?
        }
        Command::Harmonic { n, k, exact: as_rational } => {
            let h = exact::harmonic_generalized(*n, *k);
            let q = query(&[("n", json!(n)), ("k", json!(k))]);
            harmonic_report(q, &h, *as_rational, bits, *n, start)?
        }
        Command::Table {
            what,
            k,
            m,
            i,
            terms,
            reference,
        } => {
            let spec = table::TableSpec::new(*what, *k, *m, *i, *terms, reference)?;
            return table::run_table(&spec, &cfg, cli.cache.as_deref(), cli.format, out);
        }
        Command::Bench { what, digits } => return bench(what, *digits, cli, out),
        Command::Check => return run_checks(&cfg, cli.format, out),
    };
    report.write(cli.format, out)
}

fn harmonic_report(
    q: serde_json::Map<String, serde_json::Value>,
    h: &Rational,
    as_rational: bool,
    bits: usize,
    n: usize,
    start: Instant,
) -> Result<Report, CliError> {
    let (value, error_bound) = if as_rational {
        (h.to_string(), "0".to_string())
    } else {
        let prec = bits + 64;
        render(&BigReal::from_rational(h, prec), &BigReal::zero(prec), bits)?
    };
    Ok(Report {
        command: "harmonic".into(),
        query: q,
        value,
        error_bound,
        terms_used: n,
        precision_bits: bits,
        elapsed_ms: elapsed_ms(start),
    })
}

#[derive(Debug, Serialize)]
struct BenchReport {
    what: String,
    digits: u32,
    accelerated_terms: usize,
    naive_terms: String,
    value: String,
    error_bound: String,
    precision_bits: usize,
    elapsed_ms: f64,
}

enum BenchTarget {
    Zetahat(u32),
    Zeta(u32),
    Catalan,
    M(RationalArgument),
}

fn parse_bench_target(what: &str) -> Result<BenchTarget, CliError> {
    let bad = || CliError::Invalid(format!("unknown bench target {what:?}; use zetahat-K, zeta-K, catalan or m-M-I-K"));
    let parts: Vec<&str> = what.split('-').collect();
    let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
    let order = |s: &str| s.parse::<u32>().map_err(|_| bad());
    match parts.as_slice() {
        ["catalan"] => Ok(BenchTarget::Catalan),
        ["zetahat", k] => Ok(BenchTarget::Zetahat(order(k)?)),
        ["zeta", k] => Ok(BenchTarget::Zeta(order(k)?)),
        ["m", m, i, k] => Ok(BenchTarget::M(argument(num(m)?, num(i)?, order(k)?)?)),
        _ => Err(bad()),
    }
}

fn bench(what: &str, digits: u32, cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    if digits < 4 {
        return Err(CliError::Invalid(format!("bench needs --digits >= 4, got {digits}")));
    }
    let target = parse_bench_target(what)?;
    let eps = parse_rational(&format!("1e-{digits}"))?;
    let bits = cli.prec.max((digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32);
    let cfg = PrecisionConfig::new(bits, &eps, cli.max_terms)?;
    let start = Instant::now();
    let (res, naive) = match target {
        BenchTarget::Zetahat(k) => (accel::zetahat(k, &cfg)?, accel::leibniz_terms(argument(1, 1, k)?, &eps)?),
        BenchTarget::Zeta(k) => {
            let res = accel::zeta_int(k, &cfg)?;
            // the alternating series must reach eps divided by the prefactor
            let inner = &eps / accel::zeta_prefactor(k);
            (res, accel::leibniz_terms(argument(1, 1, k)?, &inner)?)
        }
        BenchTarget::Catalan => (accel::catalan(&cfg), accel::leibniz_terms(argument(2, 1, 2)?, &eps)?),
        BenchTarget::M(arg) => (accel::m_accel(arg, &cfg)?, accel::leibniz_terms(arg, &eps)?),
    };
    let report = series_report("bench", query(&[]), &res, bits, elapsed_ms(start))?;
    let bench = BenchReport {
        what: what.to_string(),
        digits,
        accelerated_terms: res.terms_used,
        naive_terms: naive.to_string(),
        value: report.value,
        error_bound: report.error_bound,
        precision_bits: bits,
        elapsed_ms: report.elapsed_ms,
    };
    match cli.format {
        Format::Plain => {
            writeln!(out, "bench {what} digits={digits}")?;
            writeln!(out, "accelerated_terms: {}", bench.accelerated_terms)?;
            writeln!(out, "naive_terms: {}", bench.naive_terms)?;
            writeln!(out, "value: {}", bench.value)?;
            writeln!(out, "error_bound: {}", bench.error_bound)?;
            writeln!(out, "precision_bits: {}", bench.precision_bits)?;
            writeln!(out, "elapsed_ms: {:.3}", bench.elapsed_ms)?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &bench).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.serialize(&bench).map_err(csv_error)?;
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct CheckRow {
    name: String,
    holds: bool,
    difference: String,
    tolerance: String,
}

fn run_checks(cfg: &PrecisionConfig, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let shown = |v: &BigReal| v.to_decimal_with(3, DecimalRounding::AwayFromZero);
    let rows: Vec<CheckRow> = check::identity_suite(cfg)?
        .iter()
        .map(|c| CheckRow {
            name: c.name.clone(),
            holds: c.holds(),
            difference: shown(&c.difference()),
            tolerance: shown(&c.tolerance),
        })
        .collect();
    match format {
        Format::Plain => {
            for r in &rows {
                let verdict = if r.holds { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {}: |lhs - rhs| = {} (tolerance {})", r.name, r.difference, r.tolerance)?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &rows {
                w.serialize(r).map_err(csv_error)?;
            }
            w.flush()?;
        }
    }
    let failed = rows.iter().filter(|r| !r.holds).count();
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}
