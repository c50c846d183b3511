//! The binomial sums `A(n,k) = Σ_{j=0}^{n} (-1)^j C(n,j) / (mj+i)^k` and their
//! normalized form `C(n,k) = A(n,k) / A(n,1)`.
//!
//! `A(n,1)` has the closed form `n! / (m (i/m)_{n+1})`, and the normalized
//! table obeys
//!
//! ```text
//! C(n,1) = 1,   C(0,k) = i^{1-k},
//! C(n,k) = C(n-1,k) + C(n,k-1) / (mn+i)      (n ≥ 1, k ≥ 2)
//! ```
//!
//! so `A(n,k) = A(n,1) · C(n,k)` holds by construction for every `i`. For
//! `m = i = 1` the table is the harmonic table shifted by one:
//! `C(n,k) = H_{n+1}^{(k-1)}`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use super::{binomial_row, factorial, rising_factorial, uint_rational, Rational};
use crate::error::{invalid, Error, Result};

pub(crate) fn check_pair(m: u64, i: u64) -> Result<()> {
    if m == 0 || i == 0 || i > m {
        return Err(invalid(format!("need 1 <= i <= m, got m={m}, i={i}")));
    }
    Ok(())
}

/// The raw binomial sum `A(n,k)`. `k` may be zero or negative.
pub fn a_direct(m: u64, i: u64, k: i64, n: usize) -> Result<Rational> {
    check_pair(m, i)?;
    let row = binomial_row(n);
    let mut acc = Rational::zero();
    for (j, c) in row.into_iter().enumerate() {
        let base = BigInt::from(m) * j + i;
        let power = base.pow(k.unsigned_abs() as u32);
        let term = if k >= 0 {
            Rational::new(c, power)
        } else {
            Rational::from_integer(c * power)
        };
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `A(n,1) = n! / (m (i/m)_{n+1})`.
pub fn a_unit(m: u64, i: u64, n: usize) -> Result<Rational> {
    check_pair(m, i)?;
    let shift = Rational::new(BigInt::from(i), BigInt::from(m));
    let denom = rising_factorial(&shift, n + 1) * Rational::from_integer(BigInt::from(m));
    Ok(Rational::from_integer(factorial(n)) / denom)
}

/// Streams the rows `[C(n,1), …, C(n,max_k)]` for `n = 0, 1, …`.
#[derive(Debug, Clone)]
pub struct DiffRows {
    m: BigUint,
    i: BigUint,
    n: usize,
    row: Vec<Rational>,
}

impl DiffRows {
    pub fn new(m: u64, i: u64, max_k: usize) -> Result<Self> {
        check_pair(m, i)?;
        Ok(Self::from_big(&BigUint::from(m), &BigUint::from(i), max_k))
    }

    /// Same as [`DiffRows::new`] for parameters beyond `u64`; the caller
    /// guarantees `1 ≤ i ≤ m`.
    pub(crate) fn from_big(m: &BigUint, i: &BigUint, max_k: usize) -> Self {
        Self {
            m: m.clone(),
            i: i.clone(),
            n: 0,
            row: Vec::with_capacity(max_k),
        }
        .with_width(max_k)
    }

    fn with_width(mut self, max_k: usize) -> Self {
        self.row = vec![Rational::zero(); max_k];
        self
    }
}

impl Iterator for DiffRows {
    type Item = Vec<Rational>;

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.n;
        if n == 0 {
            let i = uint_rational(&self.i);
            let mut power = Rational::one();
            for entry in self.row.iter_mut() {
                *entry = Rational::one() / &power;
                power *= &i;
            }
        } else {
            let step = uint_rational(&(&self.m * n + &self.i));
            if let Some(first) = self.row.first_mut() {
                *first = Rational::one();
            }
            for k in 1..self.row.len() {
                let inc = &self.row[k - 1] / &step;
                self.row[k] += inc;
            }
        }
        self.n += 1;
        Some(self.row.clone())
    }
}

/// Dense exact table of `C(n,k)` for `0 ≤ n ≤ max_n`, `1 ≤ k ≤ max_k`.
#[derive(Debug, Clone)]
pub struct DiffTable {
    m: u64,
    i: u64,
    max_k: usize,
    rows: Vec<Vec<Rational>>,
}

impl DiffTable {
    pub fn build(m: u64, i: u64, max_n: usize, max_k: usize) -> Result<Self> {
        let rows = DiffRows::new(m, i, max_k)?.take(max_n + 1).collect();
        Ok(Self { m, i, max_k, rows })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    /// `C(n,k)` for `k ≥ 1`.
    pub fn get(&self, n: usize, k: usize) -> Option<&Rational> {
        if k == 0 {
            return None;
        }
        self.rows.get(n).and_then(|row| row.get(k - 1))
    }
}

/// `A(n,k)` through the closed form `n!/(m (i/m)_{n+1}) · C(n,k)`.
pub fn a_closed(table: &DiffTable, n: usize, k: usize) -> Result<Rational> {
    let c = table.get(n, k).ok_or(Error::TableBounds {
        n,
        k,
        max_n: table.max_n(),
        max_k: table.max_k(),
    })?;
    Ok(a_unit(table.m, table.i, n)? * c)
}
