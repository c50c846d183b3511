//! `BigReal`: a binary floating-point value with an explicit precision.
//!
//! Arithmetic is delegated to `astro-float` (round-half-to-even). Precision
//! is handled in whole 64-bit words, so a requested precision is rounded up
//! to the next multiple of 64. Conversions from exact rationals and to
//! decimal text are done here with exact integer arithmetic so that they
//! are correctly rounded.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint, Sign as IntSign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: usize = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache allocation"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Rounds a precision up to whole words (minimum one word).
pub fn word_aligned(bits: usize) -> usize {
    bits.max(1).div_ceil(WORD_BITS) * WORD_BITS
}

/// Number of significant decimal digits printed for a given binary precision:
/// `floor(bits · log10 2) - 2`, at least 1.
pub fn output_digits(bits: usize) -> usize {
    let digits = (bits as f64 * std::f64::consts::LOG10_2).floor() as usize;
    digits.saturating_sub(2).max(1)
}

/// Decimal rounding direction for [`BigReal::to_decimal_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecimalRounding {
    Nearest,
    /// Round the magnitude up; used for printing error bounds.
    AwayFromZero,
}

#[derive(Clone)]
pub struct BigReal {
    value: BigFloat,
    prec: usize,
}

impl BigReal {
    fn wrap(value: BigFloat, prec: usize) -> Self {
        Self { value, prec }
    }

    pub fn zero(prec: usize) -> Self {
        let prec = word_aligned(prec);
        Self::wrap(BigFloat::new(prec), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn infinity(prec: usize) -> Self {
        Self::wrap(astro_float::INF_POS, word_aligned(prec))
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::from_bigint(&BigInt::from(v), prec)
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        let prec = word_aligned(prec.max(64));
        Self::wrap(BigFloat::from_f64(v, prec), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: usize) -> Self {
        Self::from_parts(v, 0, prec)
    }

    /// `mantissa · 2^exp2`, correctly rounded to `prec` bits.
    pub fn from_parts(mantissa: &BigInt, exp2: i64, prec: usize) -> Self {
        let prec = word_aligned(prec);
        let (sign, mag) = split_sign(mantissa);
        let (mag, exp) = round_magnitude(mag, exp2, prec, false);
        Self::assemble(sign, &mag, exp, prec)
    }

    /// `mantissa · 2^exp2` held exactly; the precision grows to fit.
    pub fn exact_from_parts(mantissa: &BigInt, exp2: i64) -> Self {
        let prec = word_aligned(mantissa.bits() as usize);
        Self::from_parts(mantissa, exp2, prec)
    }

    /// Correctly rounded (half-to-even) conversion of an exact rational.
    pub fn from_rational(q: &Rational, prec: usize) -> Self {
        let prec = word_aligned(prec);
        if q.is_zero() {
            return Self::zero(prec);
        }
        let (sign, num) = split_sign(q.numer());
        let den = q.denom().magnitude().clone();
        let shift = (prec + 2) as i64 + den.bits() as i64 - num.bits() as i64;
        let (quot, rem) = if shift >= 0 {
            (num << shift as usize).div_rem(&den)
        } else {
            num.div_rem(&(den << (-shift) as usize))
        };
        let (mag, exp) = round_magnitude(quot, -shift, prec, !rem.is_zero());
        Self::assemble(sign, &mag, exp, prec)
    }

    fn assemble(sign: Sign, mag: &BigUint, exp: i64, prec: usize) -> Self {
        if mag.is_zero() {
            return Self::zero(prec);
        }
        let mut words = mag.to_u64_digits();
        words.resize(prec / WORD_BITS, 0);
        let top = exp + (words.len() * WORD_BITS) as i64;
        let top = i32::try_from(top).expect("exponent within astro-float range");
        Self::wrap(BigFloat::from_words(&words, sign, top), prec)
    }

    /// Exact value as `mantissa · 2^exp`; `None` for NaN and infinities.
    pub fn to_parts(&self) -> Option<(BigInt, i64)> {
        if self.value.is_zero() {
            return Some((BigInt::zero(), 0));
        }
        let (words, _, sign, exp, _) = self.value.as_raw_parts()?;
        let mut digits = Vec::with_capacity(words.len() * 2);
        for w in words {
            digits.push(*w as u32);
            digits.push((*w >> 32) as u32);
        }
        let mag = BigUint::new(digits);
        let exp2 = exp as i64 - (words.len() * WORD_BITS) as i64;
        let int_sign = if sign.is_negative() {
            IntSign::Minus
        } else {
            IntSign::Plus
        };
        Some((BigInt::from_biguint(int_sign, mag), exp2))
    }

    pub fn to_rational(&self) -> Option<Rational> {
        let (m, e) = self.to_parts()?;
        Some(if e >= 0 {
            Rational::from_integer(m << e as usize)
        } else {
            Rational::new(m, BigInt::one() << (-e) as usize)
        })
    }

    pub fn to_f64(&self) -> f64 {
        if self.value.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.value.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        let Some((m, e)) = self.to_parts() else {
            return f64::NAN;
        };
        let shift = m.bits().saturating_sub(64);
        let top = (&m >> shift).to_f64().unwrap_or(0.0);
        let exp = e + shift as i64;
        // two steps keep intermediate powers of two in range
        let half = exp / 2;
        top * 2f64.powi(half as i32) * 2f64.powi((exp - half) as i32)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Rounds (or widens) to `prec` bits.
    pub fn with_precision(&self, prec: usize) -> Self {
        let prec = word_aligned(prec);
        let mut value = self.value.clone();
        // only allocation failure can make this fail
        value.set_precision(prec, RM).expect("precision change");
        Self::wrap(value, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.value.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.prec)
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() || !self.is_finite() {
            return self.clone();
        }
        let mut value = self.value.clone();
        let e = value.exponent().expect("finite value") as i64 + k;
        value.set_exponent(i32::try_from(e).expect("exponent within astro-float range"));
        Self::wrap(value, self.prec)
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.value.powi(n, self.prec, RM), self.prec)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.prec, RM), self.prec)
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn pi(prec: usize) -> Self {
        let prec = word_aligned(prec);
        Self::wrap(with_consts(|cc| cc.pi(prec, RM)), prec)
    }

    pub fn ln2(prec: usize) -> Self {
        let prec = word_aligned(prec);
        Self::wrap(with_consts(|cc| cc.ln_2(prec, RM)), prec)
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("sqrt of a negative number".into()));
        }
        Ok(Self::wrap(self.value.sqrt(self.prec, RM), self.prec))
    }

    pub fn ln(&self) -> Result<Self> {
        if self.is_negative() || self.is_zero() {
            return Err(Error::Domain("ln of a non-positive number".into()));
        }
        Ok(Self::wrap(with_consts(|cc| self.value.ln(self.prec, RM, cc)), self.prec))
    }

    pub fn exp(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.exp(self.prec, RM, cc)), self.prec)
    }

    /// `self^y` for `self > 0`, or `self = 0` with `y > 0`.
    pub fn pow(&self, y: &Self) -> Result<Self> {
        let prec = self.prec.max(y.prec);
        if self.is_zero() {
            return if y.is_negative() || y.is_zero() {
                Err(Error::Domain("0 raised to a non-positive power".into()))
            } else {
                Ok(Self::zero(prec))
            };
        }
        if self.is_negative() {
            return Err(Error::Domain("negative base in real power".into()));
        }
        Ok(Self::wrap(with_consts(|cc| self.value.pow(&y.value, prec, RM, cc)), prec))
    }

    pub fn sin(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.sin(self.prec, RM, cc)), self.prec)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.cos(self.prec, RM, cc)), self.prec)
    }

    pub fn cot(&self) -> Result<Self> {
        let s = self.sin();
        if s.is_zero() {
            return Err(Error::Domain("cot at a zero of sin".into()));
        }
        Ok(&self.cos() / &s)
    }

    /// Parses a decimal or `p/q` literal and rounds it to `prec` bits.
    pub fn parse(text: &str, prec: usize) -> Result<Self> {
        Ok(Self::from_rational(&crate::exact::parse_rational(text)?, prec))
    }

    /// Decimal rendering with [`output_digits`] significant digits.
    pub fn to_decimal(&self) -> String {
        self.to_decimal_with(output_digits(self.prec), DecimalRounding::Nearest)
    }

    /// Decimal rendering with `digits` significant digits. Values with a
    /// decimal exponent in `[-5, digits)` are written in fixed notation,
    /// others as `d.ddd…e±x`.
    pub fn to_decimal_with(&self, digits: usize, rounding: DecimalRounding) -> String {
        let digits = digits.max(1);
        if self.value.is_nan() {
            return "nan".into();
        }
        if self.value.is_inf() {
            return if self.value.is_negative() { "-inf" } else { "inf" }.into();
        }
        let q = self.to_rational().expect("finite");
        if q.is_zero() {
            return "0".into();
        }
        let negative = q.is_negative();
        let mag = q.abs();
        let (int_digits, dec_exp) = decimal_digits(&mag, digits, rounding);
        let body = layout(&int_digits, dec_exp, digits);
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn split_sign(v: &BigInt) -> (Sign, BigUint) {
    let sign = if v.is_negative() { Sign::Neg } else { Sign::Pos };
    (sign, v.magnitude().clone())
}

/// Rounds `mag · 2^exp` to at most `prec` significant bits, half to even.
/// `sticky` records nonzero bits already discarded below `mag`.
fn round_magnitude(mag: BigUint, exp: i64, prec: usize, sticky: bool) -> (BigUint, i64) {
    let bits = mag.bits() as usize;
    if bits <= prec {
        return (mag, exp);
    }
    let drop = bits - prec;
    let kept = &mag >> drop;
    let rest = &mag - (&kept << drop);
    let half = BigUint::one() << (drop - 1);
    let round_up = match rest.cmp(&half) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => sticky || kept.is_odd(),
    };
    let mut kept = if round_up { kept + 1u32 } else { kept };
    let mut exp = exp + drop as i64;
    if kept.bits() as usize > prec {
        kept >>= 1;
        exp += 1;
    }
    (kept, exp)
}

/// Returns the `digits` leading decimal digits of `mag > 0` and the decimal
/// exponent of the first one.
fn decimal_digits(mag: &Rational, digits: usize, rounding: DecimalRounding) -> (BigUint, i64) {
    let ten = BigInt::from(10u32);
    let log2_est = mag.numer().bits() as f64 - mag.denom().bits() as f64;
    let mut exp10 = (log2_est * std::f64::consts::LOG10_2).floor() as i64;
    let lower = num_traits::pow(BigUint::from(10u32), digits - 1);
    let upper = &lower * 10u32;
    loop {
        let shift = digits as i64 - 1 - exp10;
        let scaled = if shift >= 0 {
            mag * Rational::from_integer(ten.clone().pow(shift as u32))
        } else {
            mag / Rational::from_integer(ten.clone().pow((-shift) as u32))
        };
        let (num, den) = (scaled.numer(), scaled.denom());
        let rounded = match rounding {
            DecimalRounding::Nearest => (num * 2 + den) / (den * 2),
            DecimalRounding::AwayFromZero => (num + den - 1u32) / den,
        };
        let rounded = rounded.magnitude().clone();
        if rounded >= upper {
            exp10 += 1;
        } else if rounded < lower {
            exp10 -= 1;
        } else {
            return (rounded, exp10);
        }
    }
}

fn layout(int_digits: &BigUint, exp10: i64, digits: usize) -> String {
    let s = int_digits.to_string();
    debug_assert_eq!(s.len(), digits);
    if exp10 < -5 || exp10 >= digits as i64 {
        let (head, tail) = s.split_at(1);
        let sign = if exp10 < 0 { '-' } else { '+' };
        if tail.is_empty() {
            format!("{head}e{sign}{}", exp10.abs())
        } else {
            format!("{head}.{tail}e{sign}{}", exp10.abs())
        }
    } else if exp10 >= 0 {
        let split = exp10 as usize + 1;
        let (head, tail) = s.split_at(split);
        if tail.is_empty() {
            head.to_string()
        } else {
            format!("{head}.{tail}")
        }
    } else {
        let zeros = "0".repeat((-exp10 - 1) as usize);
        format!("0.{zeros}{s}")
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({}, {} bits)", self.to_decimal(), self.prec)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let prec = self.prec.max(rhs.prec);
                BigReal::wrap(self.value.$method(&rhs.value, prec, RM), prec)
            }
        }

        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }

        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
    };
}

binary_op!(Add, add);
binary_op!(Sub, sub);
binary_op!(Mul, mul);
binary_op!(Div, div);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(self.value.neg(), self.prec)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(self.value.clone().neg(), self.prec)
    }
}
