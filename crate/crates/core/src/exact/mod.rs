//! Exact-rational combinatorics.
//!
//! Everything here is computed with arbitrary-precision rationals in
//! canonical form (positive denominator, reduced), so equalities between
//! recursions and their defining sums can be asserted exactly.

mod diff;
mod harmonic;
mod numbers;

pub(crate) use diff::check_pair;
pub use diff::{a_closed, a_direct, a_unit, DiffRows, DiffTable};
pub use harmonic::{
    harmonic_classical, harmonic_generalized, symmetric_identity_check, HarmonicRows,
    HarmonicTable,
};
pub use numbers::{bernoulli, bernoulli_numbers, euler_number};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact ratio of arbitrary-precision integers, always kept in lowest terms
/// with a positive denominator.
pub type Rational = BigRational;

/// `n / d` as a canonical rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn uint_rational(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// Parses `"-12"`, `"3/7"`, `"0.25"`, `"1e-30"` or `"-1.5E+3"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = || Error::Parse(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| err())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let all: String = [int_part, frac_part].concat();
    let n: BigInt = all.parse().map_err(|_| err())?;
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let mut value = if scale >= 0 {
        Rational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(n, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Rising factorial `(a)_n = a(a+1)…(a+n-1)`, with `(a)_0 = 1`.
pub fn rising_factorial(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 0..n {
        let next = &row[j] * (n - j) / (j + 1);
        row.push(next);
    }
    row
}

/// `Δ^n a_1 = Σ_{m=0}^{n} (-1)^m C(n,m) a_{m+1}`, where `seq[0]` is `a_1`.
pub fn finite_difference(seq: &[Rational], n: usize) -> Result<Rational> {
    if seq.len() < n + 1 {
        return Err(Error::InsufficientLength {
            len: seq.len(),
            order: n,
        });
    }
    let row = binomial_row(n);
    let mut acc = Rational::zero();
    for (m, (c, a)) in row.iter().zip(seq).enumerate() {
        let term = a * Rational::from_integer(c.clone());
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}
