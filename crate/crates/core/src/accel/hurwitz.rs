//! Hurwitz `ζ(k, i/m)` by dyadic telescoping of alternating sums.
//!
//! With `S(M,I) = Σ_{j≥0} (Mj+I)^{-k}` one has
//! `S(M,I) = M_k^{(M,I)} + 2 S(2M, M+I)`, so
//!
//! ```text
//! S(m,i) = Σ_{t=0}^{T} 2^t M_k^{(M_t,I_t)} + 2^{T+1} S(M_{T+1}, I_{T+1}),
//! M_t = 2^t m,   I_t = (2^t - 1) m + i,
//! ```
//!
//! and `ζ(k, i/m) = m^k S(m,i)`. Stage parameters outgrow `u64` quickly, so
//! the stages carry their differences in floating point.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use super::{m_accel, m_accel_big, RationalArgument};
use crate::error::{invalid, Result};
use crate::exact::{self, Rational};
use crate::precision::{BigReal, PrecisionConfig, SeriesResult};

/// Directed-rounded enclosure `lo ≤ ζ(k,a) ≤ hi`.
#[derive(Debug, Clone)]
pub struct NaiveBracket {
    pub lo: BigReal,
    pub hi: BigReal,
}

impl NaiveBracket {
    pub fn contains(&self, x: &BigReal) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn width(&self) -> BigReal {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigReal {
        (&self.lo + &self.hi).mul_pow2(-1)
    }
}

/// Brackets `ζ(k,a)` by `N` explicit terms plus integral bounds on the rest:
///
/// ```text
/// lo = Σ_{j<N} (j+a)^{-k} + (N+a)^{1-k}/(k-1)
/// hi = Σ_{j<N} (j+a)^{-k} + (N-1+a)^{1-k}/(k-1)
/// ```
///
/// Both ends are accumulated in exact fixed point with `lo` rounded down and
/// `hi` rounded up, so the enclosure survives rounding.
pub fn hurwitz_naive_bracket(k: u32, a: &Rational, n: usize, precision_bits: usize) -> Result<NaiveBracket> {
    if k < 2 {
        return Err(invalid(format!("bracket needs k >= 2, got {k}")));
    }
    if !a.is_positive() || *a > Rational::one() {
        return Err(invalid(format!("bracket needs 0 < a <= 1, got {a}")));
    }
    if n == 0 {
        return Err(invalid("bracket needs at least one explicit term"));
    }
    let frac_bits = precision_bits + 2 * (usize::BITS - n.leading_zeros()) as usize + 16;
    let (p, q) = (a.numer().clone(), a.denom().clone());
    let scaled = |num: BigInt, den: BigInt| {
        let (quot, rem) = (num << frac_bits).div_rem(&den);
        let ceil = if rem.is_zero() { quot.clone() } else { &quot + 1 };
        (quot, ceil)
    };
    let qk: BigInt = q.clone().pow(k);
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for j in 0..n {
        let base: BigInt = &q * j + &p;
        let (f, c) = scaled(qk.clone(), base.pow(k));
        lo += f;
        hi += c;
    }
    let qk1: BigInt = q.clone().pow(k - 1);
    let tail = |shift: usize| {
        let base: BigInt = &q * shift + &p;
        base.pow(k - 1) * (k - 1)
    };
    lo += scaled(qk1.clone(), tail(n)).0;
    hi += scaled(qk1, tail(n - 1)).1;
    let exp = -(frac_bits as i64);
    Ok(NaiveBracket {
        lo: BigReal::exact_from_parts(&lo, exp),
        hi: BigReal::exact_from_parts(&hi, exp),
    })
}

const FINAL_BRACKET_TERMS: usize = 16;

/// `m^k 2^{T+1} · 2 I_{T+1}^{-k} (1 + 1/(k-1))`, a generous bound on the
/// telescoped remainder in units of `ζ`.
fn remainder_estimate(k: u32, m: &BigUint, t1: usize, scale_mk: &BigReal, prec: usize) -> BigReal {
    let i_next = super::uint_real(&(m * ((BigUint::one() << t1) - 1u32)), prec);
    let kk = BigReal::from_i64(k as i64, prec);
    let margin = &kk / BigReal::from_i64(k as i64 - 1, prec);
    (scale_mk * i_next.powi(k as usize).recip() * margin).mul_pow2(t1 as i64 + 1)
}

/// `ζ(k, i/m)` for `k ≥ 2` and `1 ≤ i ≤ m`.
pub fn hurwitz_rational(k: u32, i: u64, m: u64, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    if k < 2 {
        return Err(invalid(format!("hurwitz needs k >= 2, got {k}")));
    }
    exact::check_pair(m, i)?;
    let prec = cfg.working_precision();
    let eps = cfg.target_eps().clone();
    let half_eps = eps.mul_pow2(-1);
    let (mb, ib) = (BigUint::from(m), BigUint::from(i));
    let scale_mk = BigReal::from_bigint(&BigInt::from(m).pow(k), prec);

    // I_{T+1} ≥ (2^{T+1} - 1) m, so the estimate with that floor is safe
    let mut depth = 0usize;
    while remainder_estimate(k, &mb, depth + 1, &scale_mk, prec) > half_eps {
        depth += 1;
        if depth > 8 * prec {
            return Err(invalid("telescope depth exceeded the working precision"));
        }
    }

    let stages = depth + 1;
    let stage_share = half_eps / (&scale_mk * BigReal::from_i64(stages as i64, prec));
    let mut total = SeriesResult::exact(BigReal::zero(prec));
    let mut big_m = mb.clone();
    let mut big_i = ib.clone();
    for t in 0..stages {
        let stage_cfg = cfg.with_eps(stage_share.mul_pow2(-(t as i64)));
        let stage = m_accel_big(&big_m, &big_i, k, &stage_cfg);
        total = total.plus(&stage.scaled(&BigReal::one(prec).mul_pow2(t as i64)));
        big_i = &big_m + &big_i;
        big_m <<= 1;
    }
    total = total.scaled(&scale_mk);

    // 2^{T+1} S(M,I) = 2^{T+1} M^{-k} ζ(k, I/M), and m^k 2^{T+1} M^{-k} = 2^{(T+1)(1-k)}
    let a = Rational::new(BigInt::from(big_i), BigInt::from(big_m));
    let bracket = hurwitz_naive_bracket(k, &a, FINAL_BRACKET_TERMS, prec)?;
    let factor_exp = -((stages * (k as usize - 1)) as i64);
    let remainder = SeriesResult {
        value: bracket.midpoint().mul_pow2(factor_exp).with_precision(prec),
        tail_bound: bracket.width().mul_pow2(factor_exp - 1).with_precision(prec),
        terms_used: FINAL_BRACKET_TERMS,
        converged: true,
    };
    let mut result = total.plus(&remainder);
    result.converged = result.converged && result.tail_bound <= eps;
    Ok(result)
}

/// Checks `M_k^{(m,i)} = (2m)^{-k} (ζ(k, i/(2m)) - ζ(k, (m+i)/(2m)))` within the
/// combined bounds of both sides.
pub fn m_hurwitz_identity_check(arg: RationalArgument, cfg: &PrecisionConfig) -> Result<bool> {
    if arg.k < 2 {
        return Err(invalid("the Hurwitz relation needs k >= 2"));
    }
    let prec = cfg.working_precision();
    let lhs = m_accel(arg, cfg)?;
    let scale = BigReal::from_bigint(&BigInt::from(2 * arg.m).pow(arg.k), prec).recip();
    let a = hurwitz_rational(arg.k, arg.i, 2 * arg.m, cfg)?;
    let b = hurwitz_rational(arg.k, arg.m + arg.i, 2 * arg.m, cfg)?;
    let rhs = a.minus(&b).scaled(&scale);
    let slack = BigReal::one(prec).mul_pow2(16 - prec as i64);
    Ok(lhs.converged && rhs.converged && lhs.contains(&rhs.value, &(&rhs.tail_bound + &slack)))
}
