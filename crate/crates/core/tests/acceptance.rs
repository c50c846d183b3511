//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p eulerzeta --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use eulerzeta::accel::{self, RationalArgument, SeriesKind};
use eulerzeta::closed;
use eulerzeta::exact::{self, ratio, DiffTable, Rational};
use eulerzeta::genfun;
use eulerzeta::precision::DecimalRounding;
use eulerzeta::{BigReal, PrecisionConfig};
use num_bigint::BigUint;

type Outcome = Result<Vec<String>, Vec<String>>;

fn cfg() -> PrecisionConfig {
    PrecisionConfig::default()
}

fn prec() -> usize {
    cfg().working_precision()
}

fn real(q: Rational) -> BigReal {
    BigReal::from_rational(&q, prec())
}

fn tol(text: &str) -> BigReal {
    BigReal::parse(text, prec()).unwrap()
}

struct Tally {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self { failures: Vec::new(), notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(format!("ok   {what}"));
        } else {
            self.failures.push(format!("fail {what}"));
        }
    }

    fn within(&mut self, a: &BigReal, b: &BigReal, tolerance: &str, what: &str) {
        let diff = (a - b).abs();
        let ok = diff <= tol(tolerance);
        self.expect(ok, format!("{what}: |diff| = {} (tol {tolerance})", diff.to_decimal_with(3, DecimalRounding::Nearest)));
    }

    fn finish(self) -> Outcome {
        if self.failures.is_empty() {
            Ok(self.notes)
        } else {
            let mut all = self.failures;
            all.extend(self.notes);
            Err(all)
        }
    }
}

fn pi() -> BigReal {
    BigReal::pi(prec())
}

/// Pair-averaged partial sums of `Σ_{j≥0} (-1)^j/(mj+i)^k` after `n` and `n+1` terms.
fn pair_averaged_alternating(m: i64, i: i64, k: usize, n: usize) -> BigReal {
    let p = prec() + 64;
    let mut acc = BigReal::zero(p);
    let mut last = BigReal::zero(p);
    for j in 0..=n {
        let t = BigReal::from_i64(m * j as i64 + i, p).powi(k).recip();
        last = if j % 2 == 0 { t } else { -t };
        acc = &acc + &last;
    }
    let before = &acc - &last;
    (acc + before).mul_pow2(-1)
}

fn exact_recursion() -> Outcome {
    let mut t = Tally::new();
    let mut compared = 0;
    let mut mismatches = 0;
    for m in 1..=4u64 {
        for i in 1..=m {
            let table = DiffTable::build(m, i, 20, 8).unwrap();
            for k in 1..=8usize {
                for n in 0..=20usize {
                    compared += 1;
                    if exact::a_closed(&table, n, k).unwrap() != exact::a_direct(m, i, k as i64, n).unwrap() {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    t.expect(mismatches == 0, format!("{compared} entries compared, {mismatches} mismatches"));
    t.finish()
}

fn negative_orders_vanish() -> Outcome {
    let mut t = Tally::new();
    let mut nonzero = 0;
    let mut compared = 0;
    for m in 1..=3u64 {
        for i in 1..=m {
            for k in 0..=5i64 {
                for n in (k as usize + 1)..=12 {
                    compared += 1;
                    if exact::a_direct(m, i, -k, n).unwrap() != ratio(0, 1) {
                        nonzero += 1;
                    }
                }
            }
        }
    }
    t.expect(nonzero == 0, format!("{compared} sums checked, {nonzero} nonzero"));
    t.finish()
}

fn riemann_values() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    for l in 1..=5u32 {
        let z = accel::zeta_int(2 * l, &c).unwrap();
        let closed = closed::zeta_even_closed(l, &c);
        t.within(&z.value, &closed.value, "1e-18", &format!("zeta({})", 2 * l));
        t.expect(z.terms_used <= 120, format!("zeta({}) used {} terms (max 120)", 2 * l, z.terms_used));
    }
    let z3 = accel::zeta_int(3, &c).unwrap();
    let oracle = pair_averaged_alternating(1, 1, 3, 1_000_000) * real(ratio(4, 3));
    t.within(&z3.value, &oracle, "1e-12", "zeta(3) vs pair-averaged alternating oracle");
    t.expect(z3.terms_used <= 120, format!("zeta(3) used {} terms (max 120)", z3.terms_used));
    t.finish()
}

fn eta_one() -> Outcome {
    let mut t = Tally::new();
    let z = accel::zetahat(1, &cfg()).unwrap();
    t.within(&z.value, &BigReal::ln2(prec()), "1e-20", "eta(1) vs ln 2");
    t.finish()
}

fn catalan_routes() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    let direct = accel::catalan(&c).value;
    let accelerated = accel::m_accel(RationalArgument::new(2, 1, 2).unwrap(), &c).unwrap().value;
    let a = accel::hurwitz_rational(2, 1, 4, &c).unwrap().value;
    let b = accel::hurwitz_rational(2, 3, 4, &c).unwrap().value;
    let hurwitz = (a - b).mul_pow2(-4);
    t.within(&direct, &accelerated, "1e-12", "catalan() vs M_2^(2,1)");
    t.within(&direct, &hurwitz, "1e-12", "catalan() vs Hurwitz difference");
    t.within(&accelerated, &hurwitz, "1e-12", "M_2^(2,1) vs Hurwitz difference");
    let oracle = pair_averaged_alternating(2, 1, 2, 1_000_000);
    t.within(&direct, &oracle, "1e-14", "catalan() vs pair-averaged alternating oracle");
    t.within(&oracle, &tol("0.915965594177219015"), "1e-14", "oracle vs 0.915965594177219015");
    t.finish()
}

fn euler_closed_forms() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    let m1 = accel::m_accel(RationalArgument::new(2, 1, 1).unwrap(), &c).unwrap();
    let m3 = accel::m_accel(RationalArgument::new(2, 1, 3).unwrap(), &c).unwrap();
    t.within(&m1.value, &pi().mul_pow2(-2), "1e-18", "M_1^(2,1) vs pi/4");
    t.within(&m3.value, &pi().powi(3).mul_pow2(-5), "1e-18", "M_3^(2,1) vs pi^3/32");
    t.finish()
}

fn error_envelope() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    let mut bad = Vec::new();
    for k in 2..=6u32 {
        for m in 5..=40usize {
            let (lo, hi) = accel::partial_sum_envelope(k, m, &c).unwrap();
            if !(lo && hi) {
                bad.push(format!("(k={k}, m={m}, lower={lo}, upper={hi})"));
            }
        }
    }
    t.expect(bad.is_empty(), format!("180 cases, violations: {}", if bad.is_empty() { "none".into() } else { bad.join(" ") }));
    t.finish()
}

fn monotonicity() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    for m in 1..=4u64 {
        let report = accel::monotonicity_report(m, 12, &c).unwrap();
        let increasing = report.windows(2).all(|w| w[0].value < w[1].value);
        t.expect(increasing, format!("M_k^({m},1) strictly increasing for k = 1..12"));
        if m == 2 {
            let gap = (&report[11].value - BigReal::one(prec())).abs();
            t.expect(gap < tol("1e-5"), format!("|M_12^(2,1) - 1| = {}", gap.to_decimal_with(3, DecimalRounding::Nearest)));
        }
    }
    let scaled: Vec<BigReal> = (2..=12u32)
        .map(|k| {
            let z = accel::zeta_int(k, &c).unwrap().value;
            let factor = Rational::from_integer(1.into()) - Rational::new(1.into(), num_bigint::BigInt::from(1) << (k - 1));
            z * real(factor)
        })
        .collect();
    t.expect(scaled.windows(2).all(|w| w[0] < w[1]), "zeta(k)(1 - 2^(1-k)) increasing for k = 2..12");
    t.finish()
}

fn hurwitz_values() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    for (k, i, m) in [(2u32, 1u64, 3u64), (3, 2, 5), (4, 3, 4), (2, 1, 4), (2, 3, 4)] {
        let z = accel::hurwitz_rational(k, i, m, &c).unwrap();
        let b = accel::hurwitz_naive_bracket(k, &ratio(i as i64, m as i64), 100_000, prec()).unwrap();
        let inside = &b.lo - &z.tail_bound <= z.value && z.value <= &b.hi + &z.tail_bound;
        t.expect(inside, format!("zeta({k},{i}/{m}) inside the 10^5-term bracket"));
    }
    let a = accel::hurwitz_rational(2, 1, 4, &c).unwrap().value;
    let b = accel::hurwitz_rational(2, 3, 4, &c).unwrap().value;
    let sum = &a + &b;
    t.within(&sum, &pi().powi(2).mul_pow2(1), "1e-12", "zeta(2,1/4) + zeta(2,3/4) vs 2 pi^2");
    let s41 = sum.mul_pow2(-4);
    t.within(&s41, &closed::s_4_1_closed(1, &c).value, "1e-12", "S(2,4,1) from Hurwitz vs pi^2/8");
    t.finish()
}

fn generating_functions() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    let half = real(ratio(1, 2));
    let fs = genfun::f_eval_many(8, &half, &c).unwrap();
    for k in 1..=8u32 {
        let z = accel::zetahat(k, &c).unwrap();
        t.within(&fs[k as usize].value, &z.value.mul_pow2(2), "1e-12", &format!("f_{k}(1/2) vs 4 eta({k})"));
    }
    for y in [ratio(2, 5), ratio(-2, 5)] {
        let yr = real(y.clone());
        let q = genfun::q_eval(&half, &yr, &c).unwrap();
        let d = genfun::q_double_sum(&half, &yr, 120, &c).unwrap();
        t.within(&q.value, &d.value, "1e-10", &format!("Q(1/2,{y}) vs double sum"));
    }
    for tv in [ratio(3, 10), ratio(1, 2)] {
        let checks = genfun::even_gf_check(&real(tv.clone()), &c).unwrap();
        t.within(&checks[0].lhs, &checks[0].rhs, "1e-10", &format!("sum eta(2j) t^2j vs pi t/sin(pi t) - 1 at t = {tv}"));
        t.notes.push(format!(
            "info halved right side at t = {tv}: |diff| = {}",
            checks[2].difference().to_decimal_with(3, DecimalRounding::Nearest)
        ));
    }
    let pi_half = pi().mul_pow2(-1) - BigReal::one(prec());
    let at_half = genfun::even_gf_check(&half, &c).unwrap();
    t.within(&at_half[0].lhs, &pi_half, "1e-10", "sum eta(2j) 4^-j vs pi/2 - 1");
    let odd = genfun::odd_gf_check(&real(ratio(3, 10)), &c).unwrap();
    t.within(&odd[0].lhs, &odd[0].rhs, "1e-10", "odd eta generating function at y = 3/10");
    t.notes.push(format!(
        "info odd identity with B(1/2,1-y,1+y) - pi y/(2 sin pi y): |diff| = {}",
        odd[1].difference().to_decimal_with(3, DecimalRounding::Nearest)
    ));
    let expansion = genfun::zetahat_gf_expansion(&half, &c).unwrap();
    let direct = genfun::zetahat_gf_direct(&half, 200, &c).unwrap();
    t.within(&expansion.value, &direct.value, "1e-10", "2^(y-1) expansion vs sum y^j eta(j) at y = 1/2");
    t.finish()
}

fn pi_powers() -> Outcome {
    let mut t = Tally::new();
    let c = cfg();
    for l in 1..=3u32 {
        let s = closed::pi_power_series(l, &c).unwrap();
        t.within(&s.value, &pi().powi(2 * l as usize), "1e-15", &format!("pi^{}", 2 * l));
    }
    t.finish()
}

fn convergence_speed() -> Outcome {
    let mut t = Tally::new();
    let c = PrecisionConfig::from_text(128, "1e-12", 10_000).unwrap();
    let z = accel::zetahat(2, &c).unwrap();
    t.expect(z.converged && z.terms_used <= 50, format!("eta(2) to 1e-12 in {} terms (max 50)", z.terms_used));
    let naive = accel::leibniz_terms(RationalArgument::new(1, 1, 2).unwrap(), &ratio(1, 1_000_000_000_000)).unwrap();
    t.expect(naive >= BigUint::from(100_000u32), format!("Leibniz bound needs {naive} terms (min 10^5)"));
    let half = BigReal::from_rational(&ratio(1, 2), 192);
    let mut worst = BigReal::zero(192);
    for m in 1..=4u64 {
        for i in 1..=m {
            for k in 1..=4u32 {
                let arg = RationalArgument::new(m, i, k).unwrap();
                let terms = accel::term_sequence(SeriesKind::Accelerated(arg), 201, 192).unwrap();
                for (n, term) in terms.iter().enumerate() {
                    let scaled = term.mul_pow2(n as i64) / BigReal::from_i64(n as i64 + 1, 192).powi(k as usize);
                    worst = worst.max(&scaled);
                }
            }
        }
    }
    t.expect(
        worst <= half,
        format!("max t_n 2^n/(n+1)^k over n <= 200 and the grid = {}", worst.to_decimal_with(6, DecimalRounding::Nearest)),
    );
    t.finish()
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("exact recursion equivalence", exact_recursion),
        ("negative orders vanish", negative_orders_vanish),
        ("Riemann zeta values", riemann_values),
        ("eta(1) = ln 2", eta_one),
        ("Catalan three ways", catalan_routes),
        ("Euler closed forms", euler_closed_forms),
        ("partial-sum error envelope", error_envelope),
        ("monotonicity in the order", monotonicity),
        ("Hurwitz values", hurwitz_values),
        ("generating functions", generating_functions),
        ("even pi powers", pi_powers),
        ("convergence speed", convergence_speed),
    ];
    let mut failed = 0;
    for (index, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (status, lines) = match outcome {
            Ok(lines) => ("PASS", lines),
            Err(lines) => {
                failed += 1;
                ("FAIL", lines)
            }
        };
        println!("{status} criterion {:>2}: {name} ({secs:.1}s)", index + 1);
        for line in lines {
            println!("       {line}");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
