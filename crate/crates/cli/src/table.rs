//! Term-by-term convergence tables.

use std::io::{self, Write};
use std::path::Path;

use eulerzeta::accel::{self, RationalArgument, SeriesKind};
use eulerzeta::precision::{output_digits, DecimalRounding};
use eulerzeta::{BigReal, PrecisionConfig};
use serde::Serialize;

use crate::args::{Format, TableKind};
use crate::cache::ConstantCache;
use crate::report::csv_error;
use crate::CliError;

/// Significant digits of the error column.
const ERROR_DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    None,
    Pi,
    Ln2,
    Catalan,
    Zeta(u32),
    Eta(u32),
    M(RationalArgument),
}

impl Reference {
    fn parse(text: &str) -> Option<Self> {
        match text {
            "none" => Some(Reference::None),
            "pi" => Some(Reference::Pi),
            "ln2" => Some(Reference::Ln2),
            "catalan" => Some(Reference::Catalan),
            _ => {
                if let Some(k) = text.strip_prefix("zeta").and_then(|k| k.parse().ok()) {
                    (k >= 2).then_some(Reference::Zeta(k))
                } else {
                    let k = text.strip_prefix("eta")?.parse().ok()?;
                    (k >= 1).then_some(Reference::Eta(k))
                }
            }
        }
    }

    /// The limit of the series itself.
    fn auto(kind: SeriesKind) -> Self {
        match kind {
            SeriesKind::Zeta { k } => Reference::Zeta(k),
            SeriesKind::Zetahat { k: 1 } => Reference::Ln2,
            SeriesKind::Zetahat { k } => Reference::Eta(k),
            SeriesKind::Catalan => Reference::Catalan,
            SeriesKind::Accelerated(a) | SeriesKind::Naive(a) => match (a.m, a.i, a.k) {
                (1, 1, 1) => Reference::Ln2,
                (1, 1, k) => Reference::Eta(k),
                (2, 1, 2) => Reference::Catalan,
                _ => Reference::M(a),
            },
        }
    }

    /// Cache key.
    pub fn name(&self) -> Option<String> {
        Some(match self {
            Reference::None => return None,
            Reference::Pi => "pi".into(),
            Reference::Ln2 => "ln2".into(),
            Reference::Catalan => "catalan".into(),
            Reference::Zeta(k) => format!("zeta({k})"),
            Reference::Eta(k) => format!("eta({k})"),
            Reference::M(a) => format!("M_{}^({},{})", a.k, a.m, a.i),
        })
    }

    fn generator(&self) -> &'static str {
        match self {
            Reference::None => "",
            Reference::Pi | Reference::Ln2 => "astro-float constant",
            Reference::Catalan => "accel::catalan",
            Reference::Zeta(_) => "accel::zeta_int",
            Reference::Eta(_) => "accel::zetahat",
            Reference::M(_) => "accel::m_accel",
        }
    }

    fn compute(&self, cfg: &PrecisionConfig) -> Result<BigReal, CliError> {
        let prec = cfg.working_precision();
        let res = match self {
            Reference::None => unreachable!("no reference requested"),
            Reference::Pi => return Ok(BigReal::pi(prec)),
            Reference::Ln2 => return Ok(BigReal::ln2(prec)),
            Reference::Catalan => accel::catalan(cfg),
            Reference::Zeta(k) => accel::zeta_int(*k, cfg)?,
            Reference::Eta(k) => accel::zetahat(*k, cfg)?,
            Reference::M(a) => accel::m_accel(*a, cfg)?,
        };
        if !res.converged {
            return Err(CliError::NotConverged(format!(
                "reference {} did not converge in {} terms",
                self.name().unwrap_or_default(),
                res.terms_used
            )));
        }
        Ok(res.value)
    }
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub kind: SeriesKind,
    /// Index of the first row.
    pub first: usize,
    pub terms: usize,
    pub reference: Reference,
}

impl TableSpec {
    pub fn new(
        what: TableKind,
        k: Option<u32>,
        m: Option<u64>,
        i: Option<u64>,
        terms: usize,
        reference: &str,
    ) -> Result<Self, CliError> {
        let need = |v: Option<u64>, name: &str| {
            v.ok_or_else(|| CliError::Invalid(format!("table {what:?} needs --{name}")))
        };
        let order = || k.ok_or_else(|| CliError::Invalid(format!("table {what:?} needs --k")));
        let pair = || -> Result<RationalArgument, CliError> {
            Ok(RationalArgument::new(need(m, "m")?, need(i, "i")?, order()?)?)
        };
        let (kind, first) = match what {
            TableKind::Zeta => {
                let k = order()?;
                if k < 2 {
                    return Err(CliError::Invalid(format!("zeta table needs k >= 2, got {k}")));
                }
                (SeriesKind::Zeta { k }, 1)
            }
            TableKind::Zetahat => {
                let k = order()?;
                if k < 1 {
                    return Err(CliError::Invalid("zetahat table needs k >= 1".into()));
                }
                (SeriesKind::Zetahat { k }, 1)
            }
            TableKind::Catalan => (SeriesKind::Catalan, 0),
            TableKind::M => {
                let a = pair()?;
                if a.k == 0 {
                    return Err(CliError::Invalid("m table needs k >= 1".into()));
                }
                (SeriesKind::Accelerated(a), 0)
            }
            TableKind::NaiveM => (SeriesKind::Naive(pair()?), 0),
        };
        let reference = match reference {
            "auto" => Reference::auto(kind),
            other => Reference::parse(other)
                .ok_or_else(|| CliError::Invalid(format!("unknown reference {other:?}")))?,
        };
        Ok(Self {
            kind,
            first,
            terms,
            reference,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub n: usize,
    pub term: String,
    pub partial_sum: String,
    pub abs_error_vs_reference: String,
    pub term_times_2pow_n: String,
}

/// Reference value accurate well past the table's own precision.
fn reference_value(
    spec: &TableSpec,
    cfg: &PrecisionConfig,
    cache: Option<&mut ConstantCache>,
) -> Result<Option<BigReal>, CliError> {
    let Some(name) = spec.reference.name() else {
        return Ok(None);
    };
    let bits = 2 * cfg.precision_bits();
    let eps = BigReal::one(bits).mul_pow2(-(bits as i64));
    let ref_cfg = cfg
        .with_precision(bits)
        .with_eps(eps)
        .with_max_terms(cfg.max_terms().max(16 * bits));
    let compute = || spec.reference.compute(&ref_cfg);
    let value = match cache {
        Some(c) => c.get_or_insert_with(&name, bits, spec.reference.generator(), compute)?,
        None => compute()?,
    };
    Ok(Some(value))
}

pub fn table_rows(spec: &TableSpec, cfg: &PrecisionConfig, reference: Option<&BigReal>) -> Result<Vec<Row>, CliError> {
    let prec = cfg.working_precision();
    let digits = output_digits(cfg.precision_bits());
    let show = |v: &BigReal| v.to_decimal_with(digits, DecimalRounding::Nearest);
    let terms = accel::term_sequence(spec.kind, spec.terms, prec)?;
    let mut partial = BigReal::zero(prec);
    let mut rows = Vec::with_capacity(terms.len());
    for (j, term) in terms.iter().enumerate() {
        let n = spec.first + j;
        partial = &partial + term;
        let error = reference
            .map(|r| (&partial - r).abs().to_decimal_with(ERROR_DIGITS, DecimalRounding::Nearest))
            .unwrap_or_default();
        rows.push(Row {
            n,
            term: show(term),
            partial_sum: show(&partial),
            abs_error_vs_reference: error,
            term_times_2pow_n: show(&term.mul_pow2(n as i64)),
        });
    }
    Ok(rows)
}

pub fn run_table(
    spec: &TableSpec,
    cfg: &PrecisionConfig,
    cache_path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if spec.terms > cfg.max_terms() {
        return Err(CliError::Invalid(format!(
            "table of {} terms exceeds --max-terms {}",
            spec.terms,
            cfg.max_terms()
        )));
    }
    let mut cache = cache_path.map(ConstantCache::open);
    let reference = reference_value(spec, cfg, cache.as_mut())?;
    if let Some(c) = cache.as_mut() {
        c.save()?;
    }
    let rows = table_rows(spec, cfg, reference.as_ref())?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        Format::Plain | Format::Csv => {
            // header written by hand so an empty table still has one
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *out);
            w.write_record(["n", "term", "partial_sum", "abs_error_vs_reference", "term_times_2pow_n"])
                .map_err(csv_error)?;
            for r in &rows {
                w.serialize(r).map_err(csv_error)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
