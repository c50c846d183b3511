//! Numerical identity checks.

use crate::accel::{self, RationalArgument};
use crate::closed;
use crate::error::Result;
use crate::exact::ratio;
use crate::genfun;
use crate::precision::{BigReal, PrecisionConfig};

/// One side-by-side comparison `|lhs - rhs| ≤ tolerance`.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub lhs: BigReal,
    pub rhs: BigReal,
    pub tolerance: BigReal,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: BigReal, rhs: BigReal, tolerance: BigReal) -> Self {
        Self {
            name: name.into(),
            lhs,
            rhs,
            tolerance,
        }
    }

    pub fn difference(&self) -> BigReal {
        (&self.lhs - &self.rhs).abs()
    }

    pub fn holds(&self) -> bool {
        self.difference() <= self.tolerance
    }
}

/// Rounding allowance added to certified bounds at working precision `prec`.
pub(crate) fn rounding_slack(prec: usize) -> BigReal {
    BigReal::one(prec).mul_pow2(24 - prec as i64)
}

/// The identities exercised by `eulerzeta check`.
///
/// The even and odd eta generating-function identities are listed both in
/// the stated normalization and in the halved one that the series satisfy.
pub fn identity_suite(cfg: &PrecisionConfig) -> Result<Vec<Check>> {
    let prec = cfg.working_precision();
    let eps = cfg.target_eps().clone();
    let slack = rounding_slack(prec);
    let tol = |a: &BigReal, b: &BigReal| a + b + &slack;
    let mut out = Vec::new();

    let pi = BigReal::pi(prec);
    for l in 1..=3u32 {
        let closed = closed::zeta_even_closed(l, cfg);
        let series = accel::zeta_int(2 * l, cfg)?;
        out.push(Check::new(
            format!("zeta({}) series = Bernoulli closed form", 2 * l),
            series.value.clone(),
            closed.value,
            tol(&series.tail_bound, &eps),
        ));
    }

    let z1 = accel::zetahat(1, cfg)?;
    out.push(Check::new("eta(1) = ln 2", z1.value.clone(), BigReal::ln2(prec), tol(&z1.tail_bound, &eps)));

    let cat = accel::catalan(cfg);
    let m212 = accel::m_accel(RationalArgument::new(2, 1, 2)?, cfg)?;
    out.push(Check::new(
        "Catalan series = M_2^(2,1)",
        cat.value.clone(),
        m212.value.clone(),
        tol(&cat.tail_bound, &m212.tail_bound),
    ));
    let (diff, sum) = closed::catalan_hurwitz_relation(cfg)?;
    out.push(diff);
    out.push(sum);

    for (m, k) in [(1u64, 0u32), (1, 1), (2, 0)] {
        let c = closed::m_odd_center_closed(m, k, cfg);
        let s = accel::m_accel(RationalArgument::new(2 * m, m, 2 * k + 1)?, cfg)?;
        out.push(Check::new(
            format!("M_{}^({},{}) = Euler-number closed form", 2 * k + 1, 2 * m, m),
            s.value.clone(),
            c.one_sided.value,
            tol(&s.tail_bound, &eps),
        ));
    }

    for l in 1..=3u32 {
        let s = closed::pi_power_series(l, cfg)?;
        out.push(Check::new(
            format!("pi^{} from the harmonic series", 2 * l),
            s.value.clone(),
            pi.powi(2 * l as usize),
            tol(&s.tail_bound, &eps),
        ));
    }

    let half = BigReal::from_rational(&ratio(1, 2), prec);
    for k in 1..=4u32 {
        let f = genfun::f_eval(k as usize, &half, cfg)?;
        let z = accel::zetahat(k, cfg)?;
        out.push(Check::new(
            format!("f_{k}(1/2) = 4 eta({k})"),
            f.value.clone(),
            z.value.mul_pow2(2),
            tol(&f.tail_bound, &z.tail_bound.mul_pow2(2)),
        ));
    }

    for y in [ratio(2, 5), ratio(-2, 5)] {
        let yr = BigReal::from_rational(&y, prec);
        let label = y.to_string();
        let beta = genfun::zetahat_gf(&yr, cfg)?;
        let direct = genfun::zetahat_gf_direct(&yr, 200, cfg)?;
        out.push(Check::new(
            format!("sum y^j eta(j) = B(1/2, 1-y, 1+y) at y = {label}"),
            direct.value.clone(),
            beta.value.clone(),
            tol(&direct.tail_bound, &beta.tail_bound),
        ));
    }

    for t in [ratio(3, 10), ratio(1, 2)] {
        out.extend(genfun::even_gf_check(&BigReal::from_rational(&t, prec), cfg)?);
    }
    out.extend(genfun::odd_gf_check(&BigReal::from_rational(&ratio(3, 10), prec), cfg)?);
    Ok(out)
}
