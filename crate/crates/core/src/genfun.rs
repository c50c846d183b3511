//! Generating functions of iterated harmonic numbers and of eta values.
//!
//! - `f_n(x) = Σ_{j≥0} H_{j+1}^{(n)} x^j`, with `f_0(x) = 1/(1-x)` and
//!   `f_n(x) = (x(1-x))^{-1} ∫_0^x f_{n-1}`.
//! - `Q(x,y) = Σ_{n≥0} y^n f_n(x) = B(x,1-y,1+y) / (x^{1-y} (1-x)^{1+y})`.
//! - `Σ_{j≥0} ζ̂(j) y^j = B(1/2, 1-y, 1+y)`.
//!
//! Since `H_{j+1}^{(n)} ≤ j+1`, every `f_n(x)` is at most `1/(1-x)^2` and its
//! tails have closed-form majorants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::accel::{self, RealHarmonicRows};
use crate::check::{rounding_slack, Check};
use crate::error::{invalid, Error, Result};
use crate::exact::{HarmonicRows, Rational};
use crate::precision::{sum_majorized_series, BigReal, DecimalRounding, PrecisionConfig, SeriesResult};

fn unit_interval(x: &BigReal) -> Result<()> {
    let one = BigReal::one(x.precision());
    if x.is_negative() || x.is_zero() || *x >= one {
        return Err(Error::Domain(format!("x = {x} must lie in (0,1)")));
    }
    Ok(())
}

fn open_disc(y: &BigReal) -> Result<()> {
    if y.abs() >= BigReal::one(y.precision()) {
        return Err(Error::Domain(format!("|y| = {} must be below 1", y.abs())));
    }
    Ok(())
}

/// `Σ_{j>J} (j+1) x^j = x^{J+1} (J+2 - (J+1)x) / (1-x)^2`.
fn weighted_geometric_tail(x: &BigReal, last: usize, prec: usize) -> BigReal {
    let one = BigReal::one(prec);
    let j1 = BigReal::from_i64(last as i64 + 1, prec);
    let j2 = BigReal::from_i64(last as i64 + 2, prec);
    x.powi(last + 1) * (j2 - &j1 * x) / (&one - x).powi(2)
}

/// `f_0(x), …, f_{max_n}(x)` from a shared stream of floating-point harmonic rows.
pub fn f_eval_many(max_n: usize, x: &BigReal, cfg: &PrecisionConfig) -> Result<Vec<SeriesResult>> {
    unit_interval(x)?;
    let prec = cfg.working_precision();
    let x = x.with_precision(prec);
    let eps = cfg.target_eps();
    let mut acc = vec![BigReal::zero(prec); max_n + 1];
    let mut power = BigReal::one(prec);
    let mut tail = BigReal::infinity(prec);
    let mut used = 0;
    for (j, row) in RealHarmonicRows::new(max_n, prec).take(cfg.max_terms()).enumerate() {
        for (total, h) in acc.iter_mut().zip(&row) {
            *total = &*total + h * &power;
        }
        power = &power * &x;
        used = j + 1;
        tail = weighted_geometric_tail(&x, j, prec);
        if tail <= *eps {
            break;
        }
    }
    let converged = tail <= *eps;
    Ok(acc
        .into_iter()
        .map(|value| SeriesResult {
            value,
            tail_bound: tail.clone(),
            terms_used: used,
            converged,
        })
        .collect())
}

/// `f_n(x)` for `0 < x < 1`.
pub fn f_eval(n: usize, x: &BigReal, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    Ok(f_eval_many(n, x, cfg)?.pop().expect("non-empty"))
}

/// The first `count` power-series coefficients of `f_n`, built from
/// `f_0 = 1/(1-x)` by integrating, dividing by `x` and multiplying by
/// `1/(1-x)` in exact arithmetic.
pub fn f_coefficients(n: usize, count: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::one(); count];
    for _ in 0..n {
        let mut running = Rational::zero();
        coeffs = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                running += c / Rational::from_integer(BigInt::from(j + 1));
                running.clone()
            })
            .collect();
    }
    coeffs
}

/// Compares `f_n(x)` with `(x(1-x))^{-1} ∫_0^x f_{n-1}`, the integral taken
/// termwise over the series of `f_{n-1}`.
pub fn f_recursion_check(n: usize, x: &BigReal, cfg: &PrecisionConfig) -> Result<Check> {
    if n == 0 {
        return Err(invalid("the integral recursion starts at n = 1"));
    }
    unit_interval(x)?;
    let prec = cfg.working_precision();
    let x = x.with_precision(prec);
    let one = BigReal::one(prec);
    let lhs = f_eval(n, &x, cfg)?;
    let outer = (&x * (&one - &x)).recip();
    let target = cfg.target_eps() / &outer;
    let mut integral = BigReal::zero(prec);
    let mut power = x.clone();
    let mut tail = BigReal::infinity(prec);
    for (j, row) in HarmonicRows::new(n - 1).take(cfg.max_terms()).enumerate() {
        let inc = BigReal::from_rational(&row[n - 1], prec) * &power / BigReal::from_i64(j as i64 + 1, prec);
        integral = integral + inc;
        power = &power * &x;
        // H_{j+1}/(j+1) ≤ 1, so the rest is at most Σ_{j'>j} x^{j'+1}
        tail = &power / (&one - &x);
        if tail <= target {
            break;
        }
    }
    let rhs = &integral * &outer;
    let tolerance = &lhs.tail_bound + &tail * &outer + rounding_slack(prec);
    Ok(Check::new(format!("f_{n} = integral recursion"), lhs.value, rhs, tolerance))
}

/// `Σ_j (1-b)_j x^j / (j! (a+j))`, so that `B(x,a,b) = x^a` times this sum.
pub fn beta_series(x: &BigReal, a: &BigReal, b: &BigReal, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    unit_interval(x)?;
    if a.is_negative() || a.is_zero() {
        return Err(Error::Domain(format!("incomplete beta needs a > 0, got {a}")));
    }
    let prec = cfg.working_precision();
    let (x, a, b) = (x.with_precision(prec), a.with_precision(prec), b.with_precision(prec));
    let one = BigReal::one(prec);
    let mut coeff = BigReal::one(prec);
    Ok(sum_majorized_series(
        |j| {
            if j > 0 {
                let jr = BigReal::from_i64(j as i64, prec);
                // (1-b)_j / j! from its predecessor
                coeff = &coeff * (&jr - &b) * &x / &jr;
            }
            &coeff / (&a + BigReal::from_i64(j as i64, prec))
        },
        // |t_{j+1}/t_j| ≤ x |1 - b/(j+1)|, and |1 - b/(j+1)| ≤ max(1, |1 - b/(n+1)|) for j ≥ n
        |n| {
            let shrink = (&one - &b / BigReal::from_i64(n as i64 + 1, prec)).abs();
            &x * shrink.max(&one)
        },
        cfg,
    ))
}

/// Incomplete beta `B(x,a,b) = ∫_0^x t^{a-1} (1-t)^{b-1} dt` for `0 < x < 1`, `a > 0`.
pub fn incomplete_beta(x: &BigReal, a: &BigReal, b: &BigReal, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    let prec = cfg.working_precision();
    let xa = x.with_precision(prec).pow(&a.with_precision(prec))?;
    let inner = cfg.with_eps(cfg.target_eps() / &xa);
    Ok(beta_series(x, a, b, &inner)?.scaled(&xa))
}

/// `Q(x,y)` from its beta-function closed form, evaluated as
/// `beta_series(x, 1-y, 1+y) / (1-x)^{1+y}`.
pub fn q_eval(x: &BigReal, y: &BigReal, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    unit_interval(x)?;
    open_disc(y)?;
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let (x, y) = (x.with_precision(prec), y.with_precision(prec));
    let scale = (&one - &x).pow(&(&one + &y))?.recip();
    let inner = cfg.with_eps(cfg.target_eps() / &scale);
    Ok(beta_series(&x, &(&one - &y), &(&one + &y), &inner)?.scaled(&scale))
}

/// `Σ_{n<terms} y^n f_n(x)` with the remainder bounded by
/// `|y|^{terms}/((1-|y|)(1-x)^2)`.
pub fn q_double_sum(x: &BigReal, y: &BigReal, terms: usize, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    open_disc(y)?;
    if terms == 0 {
        return Err(invalid("the double sum needs at least one outer term"));
    }
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let (x, y) = (x.with_precision(prec), y.with_precision(prec));
    let fs = f_eval_many(terms - 1, &x, cfg)?;
    let mut total = SeriesResult::exact(BigReal::zero(prec));
    let mut power = BigReal::one(prec);
    for f in &fs {
        total = total.plus(&f.scaled(&power));
        power = &power * &y;
    }
    let outer = power.abs() / ((&one - y.abs()) * (&one - &x).powi(2));
    total.tail_bound = &total.tail_bound + outer;
    total.terms_used = fs.first().map_or(0, |f| f.terms_used);
    Ok(total)
}

/// `Σ_{j≥0} ζ̂(j) y^j = B(1/2, 1-y, 1+y)` for `|y| < 1`.
pub fn zetahat_gf(y: &BigReal, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    open_disc(y)?;
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let y = y.with_precision(prec);
    let half = one.mul_pow2(-1);
    incomplete_beta(&half, &(&one - &y), &(&one + &y), cfg)
}

/// `Σ_{j<terms} ζ̂(j) y^j` plus the remainder bound `|y|^{terms}/(1-|y|)`
/// (every `ζ̂(j) ≤ 1`).
pub fn zetahat_gf_direct(y: &BigReal, terms: usize, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    open_disc(y)?;
    if terms == 0 {
        return Err(invalid("the direct sum needs at least one term"));
    }
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let y = y.with_precision(prec);
    let needed = outer_terms(&y, cfg).min(terms);
    let etas = accel::zetahat_range(needed as u32 - 1, cfg);
    let mut total = SeriesResult::exact(BigReal::zero(prec));
    let mut power = BigReal::one(prec);
    for z in &etas {
        total = total.plus(&z.scaled(&power));
        power = &power * &y;
    }
    total.tail_bound = &total.tail_bound + power.abs() / (&one - y.abs());
    total.terms_used = etas.last().map_or(0, |z| z.terms_used);
    Ok(total)
}

/// Smallest `J ≥ 1` with `|y|^J/(1-|y|) ≤ eps/2`, capped at `max_terms`.
fn outer_terms(y: &BigReal, cfg: &PrecisionConfig) -> usize {
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let target = cfg.target_eps().mul_pow2(-1) * (&one - y.abs());
    let ay = y.abs();
    let mut power = ay.clone();
    let mut j = 1;
    while power > target && j < cfg.max_terms() {
        power = &power * &ay;
        j += 1;
    }
    j
}

/// `2^{y-1} Σ_j (-y)_j / (j! (j+1-y) 2^j)`; valid for `0 < y < 1`.
pub fn zetahat_gf_expansion(y: &BigReal, cfg: &PrecisionConfig) -> Result<SeriesResult> {
    unit_interval(y)?;
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let y = y.with_precision(prec);
    let half = one.mul_pow2(-1);
    let lead = BigReal::from_i64(2, prec).pow(&(&y - &one))?;
    let mut coeff = BigReal::one(prec);
    let inner = cfg.with_eps(cfg.target_eps() / &lead);
    let sum = sum_majorized_series(
        |j| {
            let jr = BigReal::from_i64(j as i64, prec);
            if j > 0 {
                // (-y)_j / j! from its predecessor
                coeff = &coeff * (&jr - &one - &y) * &half / &jr;
            }
            &coeff / (&jr + &one - &y)
        },
        // |(j-y)/(j+1)| < 1 and (j+1-y)/(j+2-y) < 1
        |_| half.clone(),
        &inner,
    );
    Ok(sum.scaled(&lead))
}

/// Even-index sums `Σ_{j≥1} ζ̂(2j) t^{2j}` and `Σ_{j≥1} ζ(2j) t^{2j}`.
fn even_sums(t: &BigReal, cfg: &PrecisionConfig) -> Result<(SeriesResult, SeriesResult)> {
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let t2 = (t * t).with_precision(prec);
    let needed = outer_terms(&t2, cfg) + 1;
    let etas = accel::zetahat_range(2 * needed as u32, cfg);
    let mut eta = SeriesResult::exact(BigReal::zero(prec));
    let mut zeta = SeriesResult::exact(BigReal::zero(prec));
    let mut power = one.clone();
    for j in 1..=needed {
        power = &power * &t2;
        let factor = BigReal::from_rational(&accel::zeta_prefactor(2 * j as u32), prec);
        let e = etas[2 * j].scaled(&power);
        zeta = zeta.plus(&e.scaled(&factor));
        eta = eta.plus(&e);
    }
    // ζ̂(2j) ≤ 1 and ζ(2j) ≤ 2 beyond the truncation
    let rest = &power * &t2 / (&one - &t2);
    eta.tail_bound = &eta.tail_bound + &rest;
    zeta.tail_bound = &zeta.tail_bound + rest.mul_pow2(1);
    Ok((eta, zeta))
}

fn check_from(name: String, lhs: &SeriesResult, rhs: BigReal, extra: &BigReal, prec: usize) -> Check {
    let tolerance = &lhs.tail_bound + extra + rounding_slack(prec);
    Check::new(name, lhs.value.clone(), rhs, tolerance)
}

/// Even generating-function identities at `t`, `0 < |t| < 1`:
///
/// - `Σ ζ̂(2j) t^{2j} = πt/sin(πt) - 1` and `Σ ζ(2j) t^{2j} = 1 - πt cot(πt)` as stated;
/// - the same with the right sides halved, which is what the series equal.
pub fn even_gf_check(t: &BigReal, cfg: &PrecisionConfig) -> Result<Vec<Check>> {
    open_disc(t)?;
    let prec = cfg.working_precision();
    let t = t.with_precision(prec);
    let one = BigReal::one(prec);
    let (eta_rhs, zeta_rhs) = if t.is_zero() {
        (BigReal::zero(prec), BigReal::zero(prec))
    } else {
        let pt = BigReal::pi(prec) * &t;
        (&pt / pt.sin() - &one, &one - &pt * pt.cot()?)
    };
    let (eta, zeta) = if t.is_zero() {
        (SeriesResult::exact(BigReal::zero(prec)), SeriesResult::exact(BigReal::zero(prec)))
    } else {
        even_sums(&t, cfg)?
    };
    let label = t.to_decimal_with(6, DecimalRounding::Nearest);
    let eps = cfg.target_eps().clone();
    Ok(vec![
        check_from(format!("sum eta(2j) t^2j = pi t/sin(pi t) - 1 at t = {label}"), &eta, eta_rhs.clone(), &eps, prec),
        check_from(format!("sum zeta(2j) t^2j = 1 - pi t cot(pi t) at t = {label}"), &zeta, zeta_rhs.clone(), &eps, prec),
        check_from(
            format!("sum eta(2j) t^2j = (pi t/sin(pi t) - 1)/2 at t = {label}"),
            &eta,
            eta_rhs.mul_pow2(-1),
            &eps,
            prec,
        ),
        check_from(
            format!("sum zeta(2j) t^2j = (1 - pi t cot(pi t))/2 at t = {label}"),
            &zeta,
            zeta_rhs.mul_pow2(-1),
            &eps,
            prec,
        ),
    ])
}

/// Odd generating-function identity at `y`, `0 < |y| < 1`:
/// `Σ ζ̂(2j+1) y^{2j+1} = B(1/2,1-y,1+y) + 1 - πy/sin(πy)` as stated, and the
/// consistent form `B(1/2,1-y,1+y) - πy/(2 sin(πy))`.
pub fn odd_gf_check(y: &BigReal, cfg: &PrecisionConfig) -> Result<Vec<Check>> {
    open_disc(y)?;
    if y.is_zero() {
        return Err(Error::Domain("the odd identity needs y != 0".into()));
    }
    let prec = cfg.working_precision();
    let y = y.with_precision(prec);
    let one = BigReal::one(prec);
    let y2 = &y * &y;
    let needed = outer_terms(&y2, cfg) + 1;
    let etas = accel::zetahat_range(2 * needed as u32 + 1, cfg);
    let mut lhs = SeriesResult::exact(BigReal::zero(prec));
    let mut power = y.clone();
    for j in 0..=needed {
        lhs = lhs.plus(&etas[2 * j + 1].scaled(&power));
        power = &power * &y2;
    }
    lhs.tail_bound = &lhs.tail_bound + power.abs() / (&one - &y2);
    let beta = zetahat_gf(&y, cfg)?;
    let py = BigReal::pi(prec) * &y;
    let ratio = &py / py.sin();
    let stated = &beta.value + &one - &ratio;
    let consistent = &beta.value - ratio.mul_pow2(-1);
    let label = y.to_decimal_with(6, DecimalRounding::Nearest);
    let extra = &beta.tail_bound + cfg.target_eps();
    Ok(vec![
        check_from(
            format!("sum eta(2j+1) y^(2j+1) = B(1/2,1-y,1+y) + 1 - pi y/sin(pi y) at y = {label}"),
            &lhs,
            stated,
            &extra,
            prec,
        ),
        check_from(
            format!("sum eta(2j+1) y^(2j+1) = B(1/2,1-y,1+y) - pi y/(2 sin(pi y)) at y = {label}"),
            &lhs,
            consistent,
            &extra,
            prec,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, HarmonicTable};

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::from_text(128, "1e-25", 10_000).unwrap()
    }

    fn real(q: Rational) -> BigReal {
        BigReal::from_rational(&q, cfg().working_precision())
    }

    fn near(a: &BigReal, b: &BigReal, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol
    }

    #[test]
    fn f_closed_values() {
        let c = cfg();
        let p = c.working_precision();
        for x in [ratio(1, 5), ratio(1, 2), ratio(7, 10)] {
            let f0 = f_eval(0, &real(x.clone()), &c).unwrap();
            let exact = real(Rational::one() / (Rational::one() - x));
            assert!(f0.contains(&exact, &rounding_slack(p)));
        }
        let f1 = f_eval(1, &real(ratio(1, 2)), &c).unwrap();
        assert!(f1.contains(&BigReal::ln2(p).mul_pow2(2), &rounding_slack(p)));
        assert!(f_eval(1, &real(ratio(3, 2)), &c).is_err());
        assert!(f_eval(1, &real(ratio(0, 1)), &c).is_err());
    }

    #[test]
    fn f_at_half_is_four_eta() {
        let c = cfg();
        let half = real(ratio(1, 2));
        let fs = f_eval_many(8, &half, &c).unwrap();
        for k in 1..=8u32 {
            let z = accel::zetahat(k, &c).unwrap();
            assert!(near(&fs[k as usize].value, &z.value.mul_pow2(2), 1e-24));
        }
    }

    #[test]
    fn coefficients_match_harmonic_table() {
        let table = HarmonicTable::new(31, 5);
        for n in 0..=5 {
            let coeffs = f_coefficients(n, 31);
            for (j, c) in coeffs.iter().enumerate() {
                assert_eq!(c, table.get(j + 1, n).unwrap());
            }
        }
    }

    #[test]
    fn float_rows_match_exact_coefficients() {
        let c = cfg();
        let x = real(ratio(3, 5));
        let f = f_eval(3, &x, &c).unwrap();
        let mut exact_sum = BigReal::zero(c.working_precision());
        let mut power = BigReal::one(c.working_precision());
        for h in f_coefficients(3, f.terms_used) {
            exact_sum = exact_sum + BigReal::from_rational(&h, c.working_precision()) * &power;
            power = &power * &x;
        }
        assert!(near(&f.value, &exact_sum, 1e-40));
    }

    #[test]
    fn integral_recursion() {
        let c = cfg();
        for (n, x) in [(1usize, ratio(1, 2)), (2, ratio(1, 4)), (4, ratio(7, 10))] {
            let check = f_recursion_check(n, &real(x), &c).unwrap();
            assert!(check.holds(), "{}", check.name);
        }
        // f_1(x) = 1 + (3/2) x + O(x^2)
        let tiny = f_eval(1, &real(ratio(1, 1_000_000)), &c).unwrap();
        assert!(near(&tiny.value, &real(ratio(1, 1)), 2e-6));
        assert!(near(&tiny.value, &real(ratio(2_000_003, 2_000_000)), 1e-11));
    }

    #[test]
    fn incomplete_beta_values() {
        let c = cfg();
        let one = real(ratio(1, 1));
        let two = real(ratio(2, 1));
        let b = incomplete_beta(&real(ratio(1, 2)), &one, &one, &c).unwrap();
        assert!(near(&b.value, &real(ratio(1, 2)), 1e-30));
        for x in [ratio(1, 10), ratio(1, 2), ratio(9, 10)] {
            let b = incomplete_beta(&real(x.clone()), &one, &two, &c).unwrap();
            let expected = &x - &x * &x / crate::exact::integer(2);
            assert!(near(&b.value, &real(expected), 1e-24));
        }
        assert!(incomplete_beta(&real(ratio(1, 2)), &real(ratio(0, 1)), &one, &c).is_err());
    }

    #[test]
    fn beta_expansion_agrees() {
        let c = cfg();
        for y in [ratio(1, 2), ratio(1, 10), ratio(9, 10)] {
            let yr = real(y);
            let a = zetahat_gf(&yr, &c).unwrap();
            let b = zetahat_gf_expansion(&yr, &c).unwrap();
            assert!(near(&a.value, &b.value, 1e-24));
        }
        assert!(zetahat_gf_expansion(&real(ratio(-1, 2)), &c).is_err());
    }

    #[test]
    fn q_matches_double_sum() {
        let c = cfg();
        let p = c.working_precision();
        for x in [ratio(1, 5), ratio(1, 2), ratio(7, 10)] {
            for y in [ratio(-2, 5), ratio(1, 5), ratio(2, 5)] {
                let (xr, yr) = (real(x.clone()), real(y));
                let q = q_eval(&xr, &yr, &c).unwrap();
                let d = q_double_sum(&xr, &yr, 120, &c).unwrap();
                assert!(
                    (&q.value - &d.value).abs() <= &q.tail_bound + &d.tail_bound + rounding_slack(p),
                    "{x}"
                );
            }
        }
        let q0 = q_eval(&real(ratio(3, 10)), &real(ratio(0, 1)), &c).unwrap();
        assert!(near(&q0.value, &real(ratio(10, 7)), 1e-24));
        let qsmall = q_eval(&real(ratio(1, 1_000_000_000)), &real(ratio(1, 2)), &c).unwrap();
        assert!(near(&qsmall.value, &real(ratio(2, 1)), 1e-8));
    }

    #[test]
    fn eta_generating_function() {
        let c = cfg();
        let p = c.working_precision();
        let zero = zetahat_gf(&real(ratio(0, 1)), &c).unwrap();
        assert!(near(&zero.value, &real(ratio(1, 2)), 1e-30));
        for y in [ratio(2, 5), ratio(-2, 5)] {
            let yr = real(y);
            let b = zetahat_gf(&yr, &c).unwrap();
            let d = zetahat_gf_direct(&yr, 100, &c).unwrap();
            assert!((&b.value - &d.value).abs() <= &b.tail_bound + &d.tail_bound + rounding_slack(p));
        }
    }

    #[test]
    fn even_identity_holds_only_halved() {
        let c = cfg();
        for t in [ratio(3, 10), ratio(1, 2)] {
            let checks = even_gf_check(&real(t), &c).unwrap();
            assert!(!checks[0].holds() && !checks[1].holds());
            assert!(checks[2].holds() && checks[3].holds());
        }
        let at_half = even_gf_check(&real(ratio(1, 2)), &c).unwrap();
        let pi = BigReal::pi(c.working_precision());
        assert!(near(&at_half[0].rhs, &(pi.mul_pow2(-1) - real(ratio(1, 1))), 1e-30));
        let zero = even_gf_check(&real(ratio(0, 1)), &c).unwrap();
        assert!(zero.iter().all(Check::holds));
    }

    #[test]
    fn odd_identity() {
        let c = cfg();
        let checks = odd_gf_check(&real(ratio(3, 10)), &c).unwrap();
        assert!(!checks[0].holds());
        assert!(checks[1].holds());
        let flipped = odd_gf_check(&real(ratio(-3, 10)), &c).unwrap();
        assert!(near(&flipped[1].lhs, &-&checks[1].lhs, 1e-30));
        let small = odd_gf_check(&real(ratio(1, 1_000_000)), &c).unwrap();
        let ln2 = BigReal::ln2(c.working_precision());
        assert!(near(&small[1].lhs, &(&ln2 * real(ratio(1, 1_000_000))), 1e-12));
    }
}
