use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial_row, Rational};
use crate::error::{Error, Result};

/// Bernoulli numbers `B_0..=B_max` from `Σ_{j=0}^{n} C(n+1,j) B_j = 0`,
/// which fixes `B_1 = -1/2`.
pub fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut values: Vec<Rational> = Vec::with_capacity(max + 1);
    values.push(Rational::one());
    for n in 1..=max {
        let row = binomial_row(n + 1);
        let acc = values
            .iter()
            .zip(&row)
            .fold(Rational::zero(), |acc, (b, c)| acc + b * Rational::from_integer(c.clone()));
        values.push(-acc / Rational::from_integer(BigInt::from(n + 1)));
    }
    values
}

pub fn bernoulli(n: usize) -> Rational {
    bernoulli_numbers(n).pop().expect("non-empty")
}

/// Secant Euler number `E_n` for even `n`, from
/// `Σ_{j=0}^{n/2} C(n,2j) E_{2j} = 0` and `E_0 = 1`.
pub fn euler_number(n: usize) -> Result<BigInt> {
    if n % 2 == 1 {
        return Err(Error::OddEulerIndex(n));
    }
    let mut even: Vec<BigInt> = vec![BigInt::one()];
    for half in 1..=n / 2 {
        let row = binomial_row(2 * half);
        let acc = even
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (j, e)| acc + &row[2 * j] * e);
        even.push(-acc);
    }
    Ok(even.pop().expect("non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, ratio};

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), integer(1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(4), ratio(-1, 30));
        assert_eq!(bernoulli(6), ratio(1, 42));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
        let all = bernoulli_numbers(21);
        for odd in (3..=21).step_by(2) {
            assert_eq!(all[odd], integer(0));
        }
    }

    #[test]
    fn euler_examples() {
        let values: Vec<i64> = (0..=10)
            .step_by(2)
            .map(|n| i64::try_from(euler_number(n).unwrap()).unwrap())
            .collect();
        assert_eq!(values, vec![1, -1, 5, -61, 1385, -50521]);
        assert_eq!(euler_number(3), Err(Error::OddEulerIndex(3)));
    }
}
