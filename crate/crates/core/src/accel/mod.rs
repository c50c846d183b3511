//! Euler-accelerated evaluators.
//!
//! Every alternating sum `M_k^{(m,i)} = Σ_{j≥0} (-1)^j/(mj+i)^k` is summed
//! through its transformed series
//!
//! ```text
//! M_k^{(m,i)} = Σ_{n≥0} A(n,1) C(n,k) / 2^{n+1},   A(n,1) = n! / (m (i/m)_{n+1})
//! ```
//!
//! whose terms shrink at least geometrically with ratio `1/2`.

mod hurwitz;

pub use hurwitz::{hurwitz_naive_bracket, hurwitz_rational, m_hurwitz_identity_check, NaiveBracket};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::exact::{self, DiffRows, HarmonicRows, Rational};
use crate::precision::{sum_positive_series, BigReal, PrecisionConfig, SeriesResult};

/// The parameters `(m, i, k)` of `M_k^{(m,i)}`, with `1 ≤ i ≤ m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalArgument {
    pub m: u64,
    pub i: u64,
    pub k: u32,
}

impl RationalArgument {
    pub fn new(m: u64, i: u64, k: u32) -> Result<Self> {
        exact::check_pair(m, i)?;
        Ok(Self { m, i, k })
    }
}

const RATIO_CUTOFF: (i64, i64) = (95, 100);

/// Certified bound on `t_{j+1}/t_j` for all `j ≥ n` of the transformed series.
///
/// The factor `C(n+1,k)/C(n,k)` is at most `1/(1 - max(1,i)/(m(n+1)+i))`
/// because `C(n+1,k-1) ≤ max(1,i) C(n+1,k)`. Returns `None` while the bound
/// is too weak to be useful.
fn transformed_ratio_bound(m: &BigUint, i: &BigUint, n: usize) -> Option<Rational> {
    let m = exact::uint_rational(m);
    let i = exact::uint_rational(i);
    let n1 = Rational::from_integer(BigInt::from(n + 1));
    let lead = &n1 / (Rational::from_integer(2.into()) * (&n1 + &i / &m));
    let grow = Rational::one() - i.clone().max(Rational::one()) / (&m * &n1 + &i);
    if grow <= Rational::zero() {
        return None;
    }
    let r = lead / grow;
    (r < exact::ratio(RATIO_CUTOFF.0, RATIO_CUTOFF.1)).then_some(r)
}

/// Source of the normalized differences `C(n,k)` for one `k`.
enum DiffColumn {
    Exact { rows: DiffRows, k: usize },
    Float { m: BigReal, i: BigReal, row: Vec<BigReal>, n: usize },
}

impl DiffColumn {
    fn exact(m: &BigUint, i: &BigUint, k: usize) -> Self {
        DiffColumn::Exact { rows: DiffRows::from_big(m, i, k), k }
    }

    fn float(m: &BigUint, i: &BigUint, k: usize, prec: usize) -> Self {
        DiffColumn::Float {
            m: uint_real(m, prec),
            i: uint_real(i, prec),
            row: Vec::with_capacity(k),
            n: 0,
        }
        .with_width(k)
    }

    fn with_width(mut self, k: usize) -> Self {
        if let DiffColumn::Float { row, i, .. } = &mut self {
            let inv = i.recip();
            let mut power = BigReal::one(i.precision());
            for _ in 0..k {
                row.push(power.clone());
                power = &power * &inv;
            }
        }
        self
    }

    fn next(&mut self, prec: usize) -> BigReal {
        match self {
            DiffColumn::Exact { rows, k } => {
                let row = rows.next().expect("unbounded");
                BigReal::from_rational(&row[*k - 1], prec)
            }
            DiffColumn::Float { m, i, row, n } => {
                if *n > 0 {
                    let step = (&*m * BigReal::from_i64(*n as i64, prec) + &*i).recip();
                    for k in 1..row.len() {
                        let inc = &row[k - 1] * &step;
                        row[k] = &row[k] + inc;
                    }
                }
                *n += 1;
                row.last().cloned().unwrap_or_else(|| BigReal::zero(prec))
            }
        }
    }
}

pub(crate) fn uint_real(v: &BigUint, prec: usize) -> BigReal {
    BigReal::from_bigint(&BigInt::from(v.clone()), prec.max(v.bits() as usize))
}

/// Term stream of the transformed series for `(m, i, k)`.
struct TransformedTerms {
    m: BigReal,
    i: BigReal,
    weight: BigReal,
    column: DiffColumn,
    n: usize,
    prec: usize,
}

impl TransformedTerms {
    fn new(m: &BigUint, i: &BigUint, k: usize, prec: usize, exact_column: bool) -> Self {
        let column = if exact_column {
            DiffColumn::exact(m, i, k)
        } else {
            DiffColumn::float(m, i, k, prec)
        };
        let mr = uint_real(m, prec);
        let ir = uint_real(i, prec);
        Self {
            weight: ir.recip().mul_pow2(-1).with_precision(prec),
            m: mr,
            i: ir,
            column,
            n: 0,
            prec,
        }
    }

    /// `A(n,1) C(n,k) / 2^{n+1}` for successive `n`.
    fn next_term(&mut self) -> BigReal {
        if self.n > 0 {
            // A(n,1)/A(n-1,1) = mn/(mn+i)
            let mn = &self.m * BigReal::from_i64(self.n as i64, self.prec);
            let den = (&mn + &self.i).mul_pow2(1);
            self.weight = &self.weight * mn / den;
        }
        self.n += 1;
        &self.weight * self.column.next(self.prec)
    }
}

fn sum_transformed(m: &BigUint, i: &BigUint, k: u32, cfg: &PrecisionConfig, exact_column: bool) -> SeriesResult {
    let prec = cfg.working_precision();
    let mut terms = TransformedTerms::new(m, i, k as usize, prec, exact_column);
    let one = BigReal::one(prec);
    sum_positive_series(
        |_| terms.next_term(),
        |n| {
            transformed_ratio_bound(m, i, n)
                .map(|r| BigReal::from_rational(&r, prec))
                .unwrap_or_else(|| one.clone())
        },
        cfg,
    )
}

fn quarter_eps(cfg: &PrecisionConfig) -> PrecisionConfig {
    cfg.with_eps(cfg.target_eps().mul_pow2(-2))
}

/// `M_k^{(m,i)}` from the transformed series with exact difference tables.
pub fn m_accel(arg: RationalArgument, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    if arg.k == 0 {
        return Err(invalid("m_accel needs k >= 1"));
    }
    let (m, i) = (BigUint::from(arg.m), BigUint::from(arg.i));
    Ok(sum_transformed(&m, &i, arg.k, &quarter_eps(cfg), true))
}

/// `M_k^{(m,i)}` for parameters beyond `u64`, with the differences carried in
/// floating point. All recursion steps add positive quantities.
pub(crate) fn m_accel_big(m: &BigUint, i: &BigUint, k: u32, cfg: &PrecisionConfig) -> SeriesResult {
    sum_transformed(m, i, k, cfg, false)
}

/// The first `count` partial sums of `Σ (-1)^j/(mj+i)^k`.
pub fn m_naive(arg: RationalArgument, count: usize) -> Vec<Rational> {
    let mut acc = Rational::zero();
    (0..count)
        .map(|j| {
            acc += naive_term(arg, j);
            acc.clone()
        })
        .collect()
}

fn naive_term(arg: RationalArgument, j: usize) -> Rational {
    let base = BigInt::from(arg.m) * j + arg.i;
    let t = Rational::new(BigInt::one(), num_traits::pow(base, arg.k as usize));
    if j % 2 == 0 {
        t
    } else {
        -t
    }
}

/// Fewest terms `N` after which the Leibniz bound `(mN+i)^{-k}` on the
/// alternating sum drops strictly below `eps`.
pub fn leibniz_terms(arg: RationalArgument, eps: &Rational) -> Result<BigUint> {
    if !num_traits::Signed::is_positive(eps) || arg.k == 0 {
        return Err(invalid("leibniz_terms needs eps > 0 and k >= 1"));
    }
    let inv = eps.recip();
    let (p, q) = (inv.numer().magnitude().clone(), inv.denom().magnitude().clone());
    let k = arg.k;
    // smallest x with x^k q > p
    let mut x = num_integer::Roots::nth_root(&(&p / &q), k);
    while num_traits::pow(x.clone(), k as usize) * &q <= p {
        x += 1u32;
    }
    let (m, i) = (BigUint::from(arg.m), BigUint::from(arg.i));
    if x <= i {
        return Ok(BigUint::zero());
    }
    Ok(num_integer::Integer::div_ceil(&(x - i), &m))
}

/// Alternating zeta `ζ̂(k) = Σ_{n≥1} H_n^{(k-1)}/(n 2^n)`; `ζ̂(0) = 1/2`.
pub fn zetahat(k: u32, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.working_precision();
    if k == 0 {
        return Ok(SeriesResult::exact(BigReal::from_rational(&exact::ratio(1, 2), prec)));
    }
    let mut rows = HarmonicRows::new(k as usize - 1);
    let mut weight = BigReal::one(prec);
    let half = BigReal::from_rational(&exact::ratio(1, 2), prec);
    // H_{n+1}/H_n ≤ (n+1)/n, so consecutive terms shrink by at least 1/2
    Ok(sum_positive_series(
        |j| {
            let n = j + 1;
            let row = rows.next().expect("unbounded");
            weight = weight.mul_pow2(-1);
            BigReal::from_rational(&row[k as usize - 1], prec) * &weight / BigReal::from_i64(n as i64, prec)
        },
        |_| half.clone(),
        &quarter_eps(cfg),
    ))
}

/// Floating-point rows `[H_n^{(0)}, …, H_n^{(max_k)}]` for `n = 1, 2, …`.
///
/// The recursion only adds positive quantities, so the relative error of row
/// `n` stays below about `(n + max_k)` units in the last place.
pub(crate) struct RealHarmonicRows {
    n: usize,
    row: Vec<BigReal>,
    prec: usize,
}

impl RealHarmonicRows {
    pub(crate) fn new(max_k: usize, prec: usize) -> Self {
        let mut row = vec![BigReal::zero(prec); max_k + 1];
        row[0] = BigReal::one(prec);
        Self { n: 0, row, prec }
    }
}

impl Iterator for RealHarmonicRows {
    type Item = Vec<BigReal>;

    fn next(&mut self) -> Option<Self::Item> {
        self.n += 1;
        let inv_n = BigReal::from_i64(self.n as i64, self.prec).recip();
        for k in 1..self.row.len() {
            let step = &self.row[k - 1] * &inv_n;
            self.row[k] = &self.row[k] + step;
        }
        Some(self.row.clone())
    }
}

/// `ζ̂(0), ζ̂(1), …, ζ̂(max_k)` from one shared stream of floating-point
/// harmonic rows; exact rows at high order have unwieldy denominators.
pub fn zetahat_range(max_k: u32, cfg: &PrecisionConfig) -> Vec<SeriesResult> {
    let prec = cfg.working_precision();
    let eps = cfg.target_eps().mul_pow2(-2);
    let mut out = vec![SeriesResult::exact(BigReal::from_rational(&exact::ratio(1, 2), prec))];
    if max_k == 0 {
        return out;
    }
    let width = max_k as usize;
    let mut acc = vec![BigReal::zero(prec); width];
    let mut weight = BigReal::one(prec);
    let mut last = BigReal::infinity(prec);
    let mut used = cfg.max_terms();
    for (j, row) in RealHarmonicRows::new(width - 1, prec).take(cfg.max_terms()).enumerate() {
        weight = weight.mul_pow2(-1);
        let scale = &weight / BigReal::from_i64(j as i64 + 1, prec);
        let mut largest = BigReal::zero(prec);
        for (total, h) in acc.iter_mut().zip(&row) {
            let t = h * &scale;
            largest = largest.max(&t);
            *total = &*total + &t;
        }
        // ratio 1/2 for every order, so each tail is at most its last term
        last = largest;
        if last <= eps {
            used = j + 1;
            break;
        }
    }
    let converged = last <= eps;
    out.extend(acc.into_iter().map(|value| SeriesResult {
        value,
        tail_bound: last.clone(),
        terms_used: used,
        converged,
    }));
    out
}

/// `2^{k-1}/(2^{k-1}-1)`, the factor taking `ζ̂(k)` to `ζ(k)`.
pub fn zeta_prefactor(k: u32) -> Rational {
    let p = Rational::from_integer(BigInt::one() << (k as usize - 1));
    &p / (&p - Rational::one())
}

/// Riemann `ζ(k)` for integers `k ≥ 2`.
pub fn zeta_int(k: u32, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    if k < 2 {
        return Err(invalid(format!("zeta needs k >= 2, got {k}")));
    }
    let prec = cfg.working_precision();
    let factor = BigReal::from_rational(&zeta_prefactor(k), prec);
    let inner = cfg.with_eps(cfg.target_eps() / &factor);
    Ok(zetahat(k, &inner)?.scaled(&factor))
}

/// Exact `n-th` term `n! (H_{2n+1} - H_n/2) / (2 (2n+1)!!)` of the Catalan series.
pub fn catalan_term(n: usize) -> Rational {
    let h = |j: usize| exact::harmonic_classical(j, 1);
    let double_fact = (0..=n).fold(BigInt::one(), |acc, j| acc * (2 * j + 1));
    let weight = Rational::new(exact::factorial(n), double_fact * 2);
    weight * (h(2 * n + 1) - h(n) / exact::integer(2))
}

/// Catalan's constant from the harmonic-number series.
pub fn catalan(cfg: &PrecisionConfig) -> SeriesResult {
    let prec = cfg.working_precision();
    let half = BigReal::from_rational(&exact::ratio(1, 2), prec);
    let mut weight = Rational::new(BigInt::one(), BigInt::from(2));
    let mut h_odd = Rational::one();
    let mut h_n = Rational::zero();
    let mut last = 0usize;
    // the terms coincide with those of M_2^{(2,1)}, so the ratio is at most 1/2
    sum_positive_series(
        |n| {
            if n > 0 {
                debug_assert_eq!(n, last + 1);
                weight = weight.clone() * Rational::new(BigInt::from(n), BigInt::from(2 * n + 1));
                h_odd += Rational::new(BigInt::one(), BigInt::from(2 * n))
                    + Rational::new(BigInt::one(), BigInt::from(2 * n + 1));
                h_n += Rational::new(BigInt::one(), BigInt::from(n));
            }
            last = n;
            let t = &weight * (&h_odd - &h_n / exact::integer(2));
            BigReal::from_rational(&t, prec)
        },
        |_| half.clone(),
        &quarter_eps(cfg),
    )
}

/// Checks `lower ≤ |ζ(k) - S_m| ≤ upper` for the partial sum
/// `S_m = prefactor · Σ_{n=0}^{m} H_{n+1}^{(k-1)}/(2^{n+1}(n+1))`, with
/// `lower = (ln 2 - 1/2)/(2^{m+1}(m+1))` and `upper = 2^{-(m+1)}`.
///
/// The reference uncertainty is counted against both inequalities.
pub fn partial_sum_envelope(k: u32, m_terms: usize, cfg: &PrecisionConfig) -> Result<(bool, bool)> {
    if k < 2 {
        return Err(invalid(format!("envelope needs k >= 2, got {k}")));
    }
    let prec = cfg.working_precision().max(2 * m_terms + 128);
    let mut partial = Rational::zero();
    for (n, row) in HarmonicRows::new(k as usize - 1).take(m_terms + 1).enumerate() {
        let den = BigInt::from(n + 1) << (n + 1);
        partial += &row[k as usize - 1] / Rational::from_integer(den);
    }
    partial *= zeta_prefactor(k);
    let scale = BigReal::one(prec).mul_pow2(-(m_terms as i64) - 1);
    let lower = (BigReal::ln2(prec) - BigReal::from_rational(&exact::ratio(1, 2), prec)) * &scale
        / BigReal::from_i64(m_terms as i64 + 1, prec);
    let ref_cfg = PrecisionConfig::new(prec - 40, &exact::ratio(1, 1), cfg.max_terms().max(4 * m_terms + 400))?
        .with_eps(lower.mul_pow2(-40));
    let reference = zeta_int(k, &ref_cfg)?;
    let diff = (&reference.value - BigReal::from_rational(&partial, prec)).abs();
    let lower_ok = &diff - &reference.tail_bound >= lower;
    let upper_ok = &diff + &reference.tail_bound <= scale;
    Ok((lower_ok, upper_ok))
}

/// `M_k^{(m,1)}` for `k = 1..=k_max`.
pub fn monotonicity_report(m: u64, k_max: u32, cfg: &PrecisionConfig) -> Result<Vec<SeriesResult>> {
    (1..=k_max)
        .map(|k| m_accel(RationalArgument::new(m, 1, k)?, cfg))
        .collect()
}

/// A series whose individual terms can be listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `prefactor · H_n^{(k-1)}/(n 2^n)`, `n ≥ 1`.
    Zeta { k: u32 },
    /// `H_n^{(k-1)}/(n 2^n)`, `n ≥ 1`.
    Zetahat { k: u32 },
    Catalan,
    /// Transformed-series terms of `M_k^{(m,i)}`.
    Accelerated(RationalArgument),
    /// `(-1)^j/(mj+i)^k`.
    Naive(RationalArgument),
}

/// The first `count` terms of `kind` at `prec` bits.
pub fn term_sequence(kind: SeriesKind, count: usize, prec: usize) -> Result<Vec<BigReal>> {
    match kind {
        SeriesKind::Zeta { k } | SeriesKind::Zetahat { k } => {
            if k == 0 || (matches!(kind, SeriesKind::Zeta { .. }) && k < 2) {
                return Err(invalid(format!("order {k} out of range")));
            }
            let factor = match kind {
                SeriesKind::Zeta { .. } => BigReal::from_rational(&zeta_prefactor(k), prec),
                _ => BigReal::one(prec),
            };
            Ok(HarmonicRows::new(k as usize - 1)
                .take(count)
                .enumerate()
                .map(|(j, row)| {
                    let den = BigInt::from(j + 1) << (j + 1);
                    &factor * BigReal::from_rational(&(&row[k as usize - 1] / Rational::from_integer(den)), prec)
                })
                .collect())
        }
        SeriesKind::Catalan => Ok((0..count).map(|n| BigReal::from_rational(&catalan_term(n), prec)).collect()),
        SeriesKind::Accelerated(arg) => {
            if arg.k == 0 {
                return Err(invalid("accelerated series needs k >= 1"));
            }
            let mut terms =
                TransformedTerms::new(&BigUint::from(arg.m), &BigUint::from(arg.i), arg.k as usize, prec, true);
            Ok((0..count).map(|_| terms.next_term()).collect())
        }
        SeriesKind::Naive(arg) => Ok((0..count).map(|j| BigReal::from_rational(&naive_term(arg, j), prec)).collect()),
    }
}
