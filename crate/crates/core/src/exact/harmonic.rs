use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::Rational;

/// Classical generalized harmonic number `h_n^{(k)} = Σ_{j=1}^{n} 1/j^k`.
/// The empty sum gives `h_0^{(k)} = 0`.
pub fn harmonic_classical(n: usize, k: u32) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(BigInt::one(), BigInt::from(j).pow(k))
    })
}

/// Iterated harmonic number `H_n^{(k)}`, defined by `H_n^{(0)} = 1` and
/// `H_n^{(k)} = Σ_{j=1}^{n} H_j^{(k-1)} / j`.
///
/// `H_0^{(k)} = 0` for `k ≥ 1` (empty sum).
pub fn harmonic_generalized(n: usize, k: usize) -> Rational {
    if n == 0 {
        return if k == 0 { Rational::one() } else { Rational::zero() };
    }
    HarmonicRows::new(k)
        .nth(n - 1)
        .map(|row| row[k].clone())
        .expect("row iterator is unbounded")
}

/// Streams the rows `[H_n^{(0)}, …, H_n^{(max_k)}]` for `n = 1, 2, …`.
///
/// Row `n` is built from row `n-1` with
/// `H_n^{(k)} = H_{n-1}^{(k)} + H_n^{(k-1)} / n`.
#[derive(Debug, Clone)]
pub struct HarmonicRows {
    n: usize,
    row: Vec<Rational>,
}

impl HarmonicRows {
    pub fn new(max_k: usize) -> Self {
        let mut row = vec![Rational::zero(); max_k + 1];
        row[0] = Rational::one();
        Self { n: 0, row }
    }
}

impl Iterator for HarmonicRows {
    type Item = Vec<Rational>;

    fn next(&mut self) -> Option<Self::Item> {
        self.n += 1;
        let inv_n = Rational::new(BigInt::one(), BigInt::from(self.n));
        for k in 1..self.row.len() {
            let step = &self.row[k - 1] * &inv_n;
            self.row[k] += step;
        }
        Some(self.row.clone())
    }
}

/// Dense table of `H_n^{(k)}` for `0 ≤ n ≤ max_n`, `0 ≤ k ≤ max_k`.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    max_k: usize,
    rows: Vec<Vec<Rational>>,
}

impl HarmonicTable {
    pub fn new(max_n: usize, max_k: usize) -> Self {
        let mut rows = Vec::with_capacity(max_n + 1);
        let mut zero_row = vec![Rational::zero(); max_k + 1];
        zero_row[0] = Rational::one();
        rows.push(zero_row);
        rows.extend(HarmonicRows::new(max_k).take(max_n));
        Self { max_k, rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Rational> {
        self.rows.get(n).and_then(|row| row.get(k))
    }
}

/// Checks the expansions of `H_n^{(1..=3)}` in power sums `h_n^{(j)}`:
///
/// - `H_n^{(1)} = h_n^{(1)}`
/// - `H_n^{(2)} = H_n²/2 + h_n^{(2)}/2`
/// - `H_n^{(3)} = H_n³/6 + H_n h_n^{(2)}/2 + h_n^{(3)}/3`
pub fn symmetric_identity_check(n: usize) -> [bool; 3] {
    let table = HarmonicTable::new(n, 3);
    let big = |k| table.get(n, k).expect("in range").clone();
    let h1 = harmonic_classical(n, 1);
    let h2 = harmonic_classical(n, 2);
    let h3 = harmonic_classical(n, 3);
    let half = Rational::new(1.into(), 2.into());
    let third = Rational::new(1.into(), 3.into());
    let sixth = Rational::new(1.into(), 6.into());

    let second = &h1 * &h1 * &half + &h2 * &half;
    let third_order = &h1 * &h1 * &h1 * &sixth + &h1 * &h2 * &half + &h3 * &third;
    [big(1) == h1, big(2) == second, big(3) == third_order]
}
