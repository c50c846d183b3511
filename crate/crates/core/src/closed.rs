//! Closed forms from Bernoulli and Euler numbers, used as references for the
//! accelerated series.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::accel::{self, RationalArgument};
use crate::check::{rounding_slack, Check};
use crate::error::{invalid, Result};
use crate::exact::{self, Rational};
use crate::precision::{BigReal, PrecisionConfig, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedTag {
    /// `ζ(2l)`
    ZetaEven,
    /// `M_{2k+1}^{(2m,m)}`
    OddCenter,
    /// Two-sided `Σ_{j∈Z} (-1)^j/(2mj+m)^{2k+1}`
    OddCenterTwoSided,
    /// Two-sided `Σ_{j∈Z} 1/(4j+1)^{2k}`
    FourOneEven,
}

/// `exact_factor · π^{pi_power}`.
#[derive(Debug, Clone)]
pub struct ClosedValue {
    pub tag: ClosedTag,
    pub value: BigReal,
    pub exact_factor: Rational,
    pub pi_power: u32,
}

impl ClosedValue {
    fn new(tag: ClosedTag, exact_factor: Rational, pi_power: u32, prec: usize) -> Self {
        let value = BigReal::from_rational(&exact_factor, prec) * BigReal::pi(prec).powi(pi_power as usize);
        Self {
            tag,
            value,
            exact_factor,
            pi_power,
        }
    }
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer(exact::factorial(n))
}

fn pow2(n: usize) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

/// `ζ(2l) = (-1)^{l+1} B_{2l} (2π)^{2l} / (2 (2l)!)` for `l ≥ 1`.
pub fn zeta_even_closed(l: u32, cfg: &PrecisionConfig) -> ClosedValue {
    let n = 2 * l as usize;
    let factor = sign(l % 2 == 0) * exact::bernoulli(n) * pow2(n) / (exact::integer(2) * factorial(n));
    ClosedValue::new(ClosedTag::ZetaEven, factor, 2 * l, cfg.working_precision())
}

/// `M_{2k+1}^{(2m,m)} = (-1)^k E_{2k} π^{2k+1} / (2 (2m)^{2k+1} (2k)!)` together
/// with the two-sided sum, which is twice as large.
#[derive(Debug, Clone)]
pub struct OddCenter {
    pub one_sided: ClosedValue,
    pub two_sided: ClosedValue,
}

pub fn m_odd_center_closed(m: u64, k: u32, cfg: &PrecisionConfig) -> OddCenter {
    let prec = cfg.working_precision();
    let n = 2 * k as usize;
    let euler = Rational::from_integer(exact::euler_number(n).expect("even index"));
    let base = Rational::from_integer(BigInt::from(2 * m).pow(2 * k + 1));
    let factor = sign(k % 2 == 1) * euler / (exact::integer(2) * base * factorial(n));
    let two_sided = &factor * exact::integer(2);
    OddCenter {
        one_sided: ClosedValue::new(ClosedTag::OddCenter, factor, 2 * k + 1, prec),
        two_sided: ClosedValue::new(ClosedTag::OddCenterTwoSided, two_sided, 2 * k + 1, prec),
    }
}

/// `Σ_{j∈Z} (4j+1)^{-2k} = π^{2k} (2^{2k} - 1) (-1)^{k+1} B_{2k} / (2 (2k)!)` for `k ≥ 1`.
pub fn s_4_1_closed(k: u32, cfg: &PrecisionConfig) -> ClosedValue {
    let n = 2 * k as usize;
    let factor = (pow2(n) - Rational::one()) * sign(k % 2 == 0) * exact::bernoulli(n)
        / (exact::integer(2) * factorial(n));
    ClosedValue::new(ClosedTag::FourOneEven, factor, 2 * k, cfg.working_precision())
}

/// Checks `16 K = ζ(2,1/4) - ζ(2,3/4)` and `ζ(2,1/4) + ζ(2,3/4) = 2π²`.
pub fn catalan_hurwitz_relation(cfg: &PrecisionConfig) -> Result<(Check, Check)> {
    let prec = cfg.working_precision();
    let slack = rounding_slack(prec);
    let k = accel::catalan(cfg);
    let a = accel::hurwitz_rational(2, 1, 4, cfg)?;
    let b = accel::hurwitz_rational(2, 3, 4, cfg)?;
    let diff = a.minus(&b);
    let sum = a.plus(&b);
    let sixteen_k = k.scaled(&BigReal::from_i64(16, prec));
    let two_pi2 = BigReal::pi(prec).powi(2).mul_pow2(1);
    Ok((
        Check::new(
            "16 K = zeta(2,1/4) - zeta(2,3/4)",
            sixteen_k.value.clone(),
            diff.value.clone(),
            &sixteen_k.tail_bound + &diff.tail_bound + &slack,
        ),
        Check::new(
            "zeta(2,1/4) + zeta(2,3/4) = 2 pi^2",
            sum.value.clone(),
            two_pi2,
            &sum.tail_bound + cfg.target_eps() + &slack,
        ),
    ))
}

/// `ζ(2,1/4) = π² + 8K`, obtained by solving the two relations above.
pub fn zeta_quarter_from_catalan(cfg: &PrecisionConfig) -> SeriesResult {
    let prec = cfg.working_precision();
    let k = accel::catalan(cfg).scaled(&BigReal::from_i64(8, prec));
    SeriesResult::exact(BigReal::pi(prec).powi(2)).plus(&k)
}

/// `π^{2l} = (-1)^{l+1} (2l)! / ((2^{2l-1} - 1) B_{2l}) · Σ_{n≥1} H_n^{(2l-1)}/(n 2^n)`.
pub fn pi_power_series(l: u32, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    if l == 0 {
        return Err(invalid("pi_power_series needs l >= 1"));
    }
    let n = 2 * l as usize;
    let factor = sign(l % 2 == 0) * factorial(n) / ((pow2(n - 1) - Rational::one()) * exact::bernoulli(n));
    let prec = cfg.working_precision();
    let f = BigReal::from_rational(&factor, prec);
    let inner = cfg.with_eps(cfg.target_eps() / BigReal::from_rational(&factor.abs(), prec));
    Ok(accel::zetahat(2 * l, &inner)?.scaled(&f))
}

/// `M_k^{(m,i)} + (-1)^{k+1} M_k^{(m,m-i)}` for `1 ≤ i ≤ m-1`.
pub fn parity_combination(m: u64, i: u64, k: u32, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    if i == 0 || i >= m {
        return Err(invalid(format!("parity combination needs 1 <= i <= m-1, got m={m}, i={i}")));
    }
    let half = cfg.with_eps(cfg.target_eps().mul_pow2(-1));
    let a = accel::m_accel(RationalArgument::new(m, i, k)?, &half)?;
    let b = accel::m_accel(RationalArgument::new(m, m - i, k)?, &half)?;
    Ok(if k % 2 == 1 { a.plus(&b) } else { a.minus(&b) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::from_text(128, "1e-30", 10_000).unwrap()
    }

    #[test]
    fn even_zeta_factors() {
        let c = cfg();
        assert_eq!(zeta_even_closed(1, &c).exact_factor, ratio(1, 6));
        assert_eq!(zeta_even_closed(2, &c).exact_factor, ratio(1, 90));
        assert_eq!(zeta_even_closed(3, &c).exact_factor, ratio(1, 945));
        let z = zeta_even_closed(2, &c);
        assert_eq!(z.pi_power, 4);
        assert!(z.value.to_decimal().starts_with("1.082323233711138191516003696541"));
    }

    #[test]
    fn closed_matches_series() {
        let c = cfg();
        for l in 1..=5u32 {
            let closed = zeta_even_closed(l, &c);
            let series = accel::zeta_int(2 * l, &c).unwrap();
            assert!(series.contains(&closed.value, &rounding_slack(c.working_precision())));
        }
    }

    #[test]
    fn odd_centre_factors() {
        let c = cfg();
        assert_eq!(m_odd_center_closed(1, 0, &c).one_sided.exact_factor, ratio(1, 4));
        assert_eq!(m_odd_center_closed(1, 1, &c).one_sided.exact_factor, ratio(1, 32));
        assert_eq!(m_odd_center_closed(2, 0, &c).one_sided.exact_factor, ratio(1, 8));
        assert_eq!(m_odd_center_closed(2, 0, &c).two_sided.exact_factor, ratio(1, 4));
        for (m, k) in [(1u64, 0u32), (1, 1), (2, 0), (3, 2)] {
            let closed = m_odd_center_closed(m, k, &c);
            let series = accel::m_accel(RationalArgument::new(2 * m, m, 2 * k + 1).unwrap(), &c).unwrap();
            assert!(series.contains(&closed.one_sided.value, &rounding_slack(c.working_precision())));
        }
    }

    #[test]
    fn four_one_sums() {
        let c = cfg();
        assert_eq!(s_4_1_closed(1, &c).exact_factor, ratio(1, 8));
        assert_eq!(s_4_1_closed(2, &c).exact_factor, ratio(1, 96));
        let p = c.working_precision();
        for k in 1..=2u32 {
            let a = accel::hurwitz_rational(2 * k, 1, 4, &c).unwrap();
            let b = accel::hurwitz_rational(2 * k, 3, 4, &c).unwrap();
            let scale = BigReal::from_i64(4, p).powi(2 * k as usize);
            let closed = s_4_1_closed(k, &c).value * scale;
            assert!((&a.value + &b.value - closed).abs().to_f64() < 1e-20);
        }
    }

    #[test]
    fn catalan_relations() {
        let c = cfg();
        let (diff, sum) = catalan_hurwitz_relation(&c).unwrap();
        assert!(diff.holds(), "{:?}", diff.difference());
        assert!(sum.holds(), "{:?}", sum.difference());
        let quarter = zeta_quarter_from_catalan(&c);
        assert!(quarter.value.to_decimal().starts_with("17.1973"));
    }

    #[test]
    fn even_pi_powers() {
        let c = cfg();
        let p = c.working_precision();
        for l in 1..=3u32 {
            let s = pi_power_series(l, &c).unwrap();
            let pi = BigReal::pi(p).powi(2 * l as usize);
            assert!((&s.value - &pi).abs().to_f64() < 1e-25);
        }
    }

    #[test]
    fn parity_examples() {
        let c = cfg();
        let p = c.working_precision();
        let pi = BigReal::pi(p);
        let a = parity_combination(2, 1, 1, &c).unwrap();
        assert!((&a.value - pi.mul_pow2(-1)).abs().to_f64() < 1e-28);
        let b = parity_combination(2, 1, 2, &c).unwrap();
        assert!(b.value.abs().to_f64() < 1e-28);
        // Σ_{j∈Z} (-1)^j/(4j+1) = π/(4 sin(π/4)) = π√2/4
        let c411 = parity_combination(4, 1, 1, &c).unwrap();
        let reference = &pi * BigReal::from_i64(2, p).sqrt().unwrap() / BigReal::from_i64(4, p);
        assert!((&c411.value - &reference).abs().to_f64() < 1e-28);
        assert!(parity_combination(3, 3, 1, &c).is_err());
    }

    #[test]
    fn parity_against_folded_partial_sums() {
        // pairs j and -1-j fold Σ_{j∈Z} (-1)^j/(4j+1) into Σ_{j≥0} (-1)^j (1/(4j+1) + 1/(4j+3))
        let mut partial = Vec::new();
        let mut acc = Rational::from_integer(0.into());
        for j in 0..2000i64 {
            let t = ratio(1, 4 * j + 1) + ratio(1, 4 * j + 3);
            acc += if j % 2 == 0 { t } else { -t };
            partial.push(acc.clone());
        }
        let n = partial.len();
        let avg = (&partial[n - 1] + &partial[n - 2]) / exact::integer(2);
        let combo = parity_combination(4, 1, 1, &cfg()).unwrap();
        assert!((combo.value.to_f64() - BigReal::from_rational(&avg, 64).to_f64()).abs() < 1e-7);
    }
}
