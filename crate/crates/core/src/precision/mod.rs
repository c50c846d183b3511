//! Configurable-precision reals and tail-certified series summation.

mod real;
mod series;

pub use real::{output_digits, word_aligned, BigReal, DecimalRounding};
pub use series::{sum_alternating_series, sum_majorized_series, sum_positive_series};

use crate::error::{invalid, Result};
use crate::exact::Rational;

/// Precision, accuracy target and term budget for one evaluation.
#[derive(Debug, Clone)]
pub struct PrecisionConfig {
    precision_bits: usize,
    target_eps: BigReal,
    max_terms: usize,
}

impl PrecisionConfig {
    pub const DEFAULT_PRECISION: usize = 128;
    pub const DEFAULT_MAX_TERMS: usize = 10_000;

    pub fn new(precision_bits: usize, target_eps: &Rational, max_terms: usize) -> Result<Self> {
        if precision_bits < 53 {
            return Err(invalid(format!("precision must be at least 53 bits, got {precision_bits}")));
        }
        if *target_eps <= Rational::from_integer(0.into()) {
            return Err(invalid("target epsilon must be positive"));
        }
        if max_terms == 0 {
            return Err(invalid("max_terms must be at least 1"));
        }
        let mut cfg = Self {
            precision_bits,
            target_eps: BigReal::zero(64),
            max_terms,
        };
        cfg.target_eps = BigReal::from_rational(target_eps, cfg.working_precision());
        Ok(cfg)
    }

    /// Parses the epsilon from decimal text such as `"1e-30"`.
    pub fn from_text(precision_bits: usize, target_eps: &str, max_terms: usize) -> Result<Self> {
        Self::new(precision_bits, &crate::exact::parse_rational(target_eps)?, max_terms)
    }

    pub fn precision_bits(&self) -> usize {
        self.precision_bits
    }

    pub fn target_eps(&self) -> &BigReal {
        &self.target_eps
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Requested precision plus 32 guard bits plus `ceil(log2(max_terms))`.
    pub fn working_precision(&self) -> usize {
        let log_terms = usize::BITS - (self.max_terms.max(1) - 1).leading_zeros();
        self.precision_bits + 32 + log_terms as usize
    }

    pub fn with_eps(&self, eps: BigReal) -> Self {
        let mut cfg = self.clone();
        cfg.target_eps = eps.with_precision(self.working_precision());
        cfg
    }

    /// Same configuration with the epsilon multiplied by `factor`.
    pub fn scale_eps(&self, factor: &BigReal) -> Self {
        self.with_eps(&self.target_eps * factor)
    }

    pub fn with_precision(&self, precision_bits: usize) -> Self {
        let mut cfg = self.clone();
        cfg.precision_bits = precision_bits.max(53);
        cfg.target_eps = self.target_eps.with_precision(cfg.working_precision());
        cfg
    }

    pub fn with_max_terms(&self, max_terms: usize) -> Self {
        let mut cfg = self.clone();
        cfg.max_terms = max_terms.max(1);
        cfg.target_eps = self.target_eps.with_precision(cfg.working_precision());
        cfg
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        let eps = crate::exact::parse_rational("1e-30").expect("literal");
        Self::new(Self::DEFAULT_PRECISION, &eps, Self::DEFAULT_MAX_TERMS).expect("valid defaults")
    }
}

/// A truncated series value with a certified bound on the discarded tail.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub value: BigReal,
    /// Upper bound on `|true sum - value|`, up to rounding at working precision.
    pub tail_bound: BigReal,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesResult {
    /// A value known without truncation error.
    pub fn exact(value: BigReal) -> Self {
        let prec = value.precision();
        Self {
            value,
            tail_bound: BigReal::zero(prec),
            terms_used: 0,
            converged: true,
        }
    }

    /// Multiplies the value by `factor` and the bound by `|factor|`.
    pub fn scaled(&self, factor: &BigReal) -> Self {
        Self {
            value: &self.value * factor,
            tail_bound: &self.tail_bound * factor.abs(),
            terms_used: self.terms_used,
            converged: self.converged,
        }
    }

    /// Sum of two results; bounds and term counts add.
    pub fn plus(&self, other: &Self) -> Self {
        Self {
            value: &self.value + &other.value,
            tail_bound: &self.tail_bound + &other.tail_bound,
            terms_used: self.terms_used + other.terms_used,
            converged: self.converged && other.converged,
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(&-BigReal::one(other.value.precision())))
    }

    /// Does `reference` lie within `tail_bound + slack` of the value?
    pub fn contains(&self, reference: &BigReal, slack: &BigReal) -> bool {
        (&self.value - reference).abs() <= &self.tail_bound + slack
    }
}

/// Correctly rounded conversion of an exact rational.
pub fn rational_to_real(q: &Rational, precision_bits: usize) -> BigReal {
    BigReal::from_rational(q, precision_bits)
}

/// The elementary functions needed by the identities.
#[derive(Debug, Clone, Copy)]
pub enum Elementary<'a> {
    Pi,
    Ln2,
    Sin(&'a BigReal),
    Cot(&'a BigReal),
    Ln(&'a BigReal),
    Pow(&'a BigReal, &'a BigReal),
    Sqrt(&'a BigReal),
}

/// Evaluates an elementary function at `precision_bits`.
///
/// `pi` and `ln 2` are correctly rounded; the others are accurate to a few ulps.
pub fn elementary(f: Elementary<'_>, precision_bits: usize) -> Result<BigReal> {
    let at = |x: &BigReal| x.with_precision(precision_bits.max(x.precision()));
    match f {
        Elementary::Pi => Ok(BigReal::pi(precision_bits)),
        Elementary::Ln2 => Ok(BigReal::ln2(precision_bits)),
        Elementary::Sin(x) => Ok(at(x).sin()),
        Elementary::Cot(x) => at(x).cot(),
        Elementary::Ln(x) => at(x).ln(),
        Elementary::Pow(x, y) => at(x).pow(&at(y)),
        Elementary::Sqrt(x) => at(x).sqrt(),
    }
}
