//! Rendering of results with a certified printed error bound.

use std::io::{self, Write};

use eulerzeta::precision::{output_digits, DecimalRounding};
use eulerzeta::{BigReal, SeriesResult};
use serde::Serialize;

use crate::args::Format;
use crate::CliError;

/// Digits printed for error bounds; the rendering rounds up.
const BOUND_DIGITS: usize = 3;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub query: serde_json::Map<String, serde_json::Value>,
    pub value: String,
    pub error_bound: String,
    pub terms_used: usize,
    pub precision_bits: usize,
    pub elapsed_ms: f64,
}

/// Query parameters echoed back with a result.
pub fn query(pairs: &[(&str, serde_json::Value)]) -> serde_json::Map<String, serde_json::Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// `value` printed at `bits` bits plus the bound on `|true - printed|`:
/// the tail bound, the exact rendering error and a `2^-bits · max(1,|v|)`
/// allowance for rounding in the working arithmetic.
pub fn render(value: &BigReal, tail_bound: &BigReal, bits: usize) -> Result<(String, String), CliError> {
    let text = value.to_decimal_with(output_digits(bits), DecimalRounding::Nearest);
    let prec = value.precision().max(bits) + 64;
    let printed = BigReal::parse(&text, prec).map_err(CliError::from)?;
    let rendering = (&printed - value).abs();
    let one = BigReal::one(prec);
    let slack = one.max(&value.abs()).mul_pow2(-(bits as i64));
    let bound = tail_bound + &rendering + &slack;
    Ok((text, bound.to_decimal_with(BOUND_DIGITS, DecimalRounding::AwayFromZero)))
}

/// Report for a converged series, or a non-convergence error.
pub fn series_report(
    command: &str,
    query: serde_json::Map<String, serde_json::Value>,
    res: &SeriesResult,
    bits: usize,
    elapsed_ms: f64,
) -> Result<Report, CliError> {
    if !res.converged {
        return Err(CliError::NotConverged(format!(
            "{command}: target not reached after {} terms (tail bound {})",
            res.terms_used,
            res.tail_bound.to_decimal_with(BOUND_DIGITS, DecimalRounding::AwayFromZero)
        )));
    }
    let (value, error_bound) = render(&res.value, &res.tail_bound, bits)?;
    Ok(Report {
        command: command.to_string(),
        query,
        value,
        error_bound,
        terms_used: res.terms_used,
        precision_bits: bits,
        elapsed_ms,
    })
}

fn query_text(query: &serde_json::Map<String, serde_json::Value>) -> String {
    query
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl Report {
    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        let q = query_text(&self.query);
        match format {
            Format::Plain => {
                writeln!(out, "{} {q}", self.command)?;
                writeln!(out, "value: {}", self.value)?;
                writeln!(out, "error_bound: {}", self.error_bound)?;
                writeln!(out, "terms_used: {}", self.terms_used)?;
                writeln!(out, "precision_bits: {}", self.precision_bits)?;
                writeln!(out, "elapsed_ms: {:.3}", self.elapsed_ms)?;
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self).map_err(io::Error::other)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["command", "query", "value", "error_bound", "terms_used", "precision_bits", "elapsed_ms"])
                    .map_err(csv_error)?;
                w.write_record([
                    self.command.clone(),
                    q,
                    self.value.clone(),
                    self.error_bound.clone(),
                    self.terms_used.to_string(),
                    self.precision_bits.to_string(),
                    format!("{:.3}", self.elapsed_ms),
                ])
                .map_err(csv_error)?;
                w.flush()?;
            }
        }
        Ok(())
    }
}

pub fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(io::Error::other(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_covers_rendering_error() {
        let third = BigReal::parse("1/3", 192).unwrap();
        let zero = BigReal::zero(192);
        let (text, bound) = render(&third, &zero, 64).unwrap();
        assert!(text.starts_with("0.3333"));
        let printed = BigReal::parse(&text, 256).unwrap();
        let exact = BigReal::parse("1/3", 256).unwrap();
        let bound = BigReal::parse(&bound, 256).unwrap();
        assert!((&printed - &exact).abs() <= bound);
    }

    #[test]
    fn unconverged_results_are_rejected() {
        let res = SeriesResult {
            value: BigReal::one(128),
            tail_bound: BigReal::infinity(128),
            terms_used: 5,
            converged: false,
        };
        let err = series_report("x", query(&[]), &res, 128, 0.0).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
