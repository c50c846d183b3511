use super::{BigReal, PrecisionConfig, SeriesResult};

fn finish(value: BigReal, tail_bound: BigReal, terms_used: usize, converged: bool) -> SeriesResult {
    SeriesResult {
        value,
        tail_bound,
        terms_used,
        converged,
    }
}

/// Sums non-negative terms `t_0, t_1, ...` under a certified ratio majorant.
///
/// `ratio_bound(n)` must bound `t_{j+1}/t_j` for every `j >= n`. After adding
/// `t_n` the tail is at most `t_n r/(1-r)`; summation stops at the first `n`
/// where that is within the target epsilon. A zero term ends the series.
pub fn sum_positive_series<T, R>(term: T, ratio_bound: R, cfg: &PrecisionConfig) -> SeriesResult
where
    T: FnMut(usize) -> BigReal,
    R: FnMut(usize) -> BigReal,
{
    sum_majorized_series(term, ratio_bound, cfg)
}

/// Like [`sum_positive_series`] for signed terms, with `ratio_bound(n)`
/// bounding `|t_{j+1}|/|t_j|` for `j >= n`.
pub fn sum_majorized_series<T, R>(mut term: T, mut ratio_bound: R, cfg: &PrecisionConfig) -> SeriesResult
where
    T: FnMut(usize) -> BigReal,
    R: FnMut(usize) -> BigReal,
{
    let prec = cfg.working_precision();
    let one = BigReal::one(prec);
    let eps = cfg.target_eps();
    let mut acc = BigReal::zero(prec);
    let mut best = BigReal::infinity(prec);
    for n in 0..cfg.max_terms() {
        let t = term(n).with_precision(prec);
        acc = &acc + &t;
        if t.is_zero() {
            return finish(acc, BigReal::zero(prec), n + 1, true);
        }
        let r = ratio_bound(n).with_precision(prec);
        if r < one {
            let bound = t.abs() * &r / (&one - &r);
            if bound <= *eps {
                return finish(acc, bound, n + 1, true);
            }
            best = bound;
        } else {
            best = BigReal::infinity(prec);
        }
    }
    finish(acc, best, cfg.max_terms(), false)
}

/// Sums a series whose signed terms alternate and decrease in magnitude from
/// index `monotone_from` on. The bound after stopping is the first omitted
/// term's magnitude.
pub fn sum_alternating_series<T>(mut term: T, monotone_from: usize, cfg: &PrecisionConfig) -> SeriesResult
where
    T: FnMut(usize) -> BigReal,
{
    let prec = cfg.working_precision();
    let eps = cfg.target_eps();
    let mut acc = BigReal::zero(prec);
    let mut next = term(0).with_precision(prec);
    for n in 0..cfg.max_terms() {
        acc = &acc + &next;
        next = term(n + 1).with_precision(prec);
        if n + 1 >= monotone_from && next.abs() <= *eps {
            return finish(acc, next.abs(), n + 1, true);
        }
    }
    let bound = if cfg.max_terms() >= monotone_from {
        next.abs()
    } else {
        BigReal::infinity(prec)
    };
    finish(acc, bound, cfg.max_terms(), false)
}
