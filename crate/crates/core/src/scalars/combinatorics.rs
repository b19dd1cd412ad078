use num_bigint::BigInt;
use num_traits::One;

use super::{CoeffPoly, Rational, ScalarError};

/// The q-number `{n} = 1 + q + ... + q^(n-1)`; `{0} = 0`.
pub fn qnum(n: u32) -> CoeffPoly {
    (0..n as i32).fold(CoeffPoly::zero(), |acc, k| acc + CoeffPoly::q_pow(k))
}

/// `{n}! = {1}{2}...{n}`.
pub fn qfactorial(n: u32) -> CoeffPoly {
    (1..=n).fold(CoeffPoly::one(), |acc, k| &acc * &qnum(k))
}

/// Gaussian binomial coefficient, built row by row with the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn qbinomial(n: u32, k: u32) -> Result<CoeffPoly, ScalarError> {
    if k > n {
        return Err(ScalarError::BinomialDomain { n, k });
    }
    let mut row = vec![CoeffPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m as usize {
            let left = if j >= 1 { row[j - 1].clone() } else { CoeffPoly::zero() };
            let right = if j < row.len() { &CoeffPoly::q_pow(j as i32) * &row[j] } else { CoeffPoly::zero() };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `n! / prod(parts_i!)`.
pub fn multinomial(n: u32, parts: &[u32]) -> Result<Rational, ScalarError> {
    let sum: u64 = parts.iter().map(|&p| p as u64).sum();
    if sum != n as u64 {
        return Err(ScalarError::MultinomialSum { n, sum });
    }
    let mut remaining = n;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    Ok(Rational::from_integer(acc))
}
