//! Rational scalar helpers: factorials, binomials, rising/lower factorials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Product of per-coordinate factorials `n_1! n_2! ... n_d!`.
pub fn multi_factorial(n: &[u32]) -> BigInt {
    n.iter().map(|&v| factorial(v as usize)).product()
}

/// Product of per-coordinate binomials `C(n_1,k_1) ... C(n_d,k_d)`.
pub fn multi_binomial(n: &[u32], k: &[u32]) -> BigInt {
    debug_assert_eq!(n.len(), k.len());
    n.iter()
        .zip(k)
        .map(|(&nv, &kv)| binomial(nv as u64, kv as u64))
        .product()
}

/// Upper (rising) factorial `x^(n) = x(x+1)...(x+n-1)`, with `x^(0) = 1`.
pub fn rising_factorial(x: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    for k in 0..n {
        acc *= x + rat(k as i64);
    }
    acc
}

/// Lower (falling) factorial `(x)_n = x(x-1)...(x-n+1)`, with `(x)_0 = 1`.
pub fn lower_factorial(x: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    for k in 0..n {
        acc *= x - rat(k as i64);
    }
    acc
}

/// True iff `q` is an integer `>= 0`.
pub fn is_nonneg_integer(q: &BigRational) -> bool {
    q.is_integer() && !q.is_negative()
}

/// Parse `p/q` or `p` into a rational, rejecting a zero denominator.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("invalid rational `{s}`")))?;
    let den: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("invalid rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::invalid(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(8, 4), BigInt::from(70));
    }

    #[test]
    fn rising_factorial_values() {
        assert_eq!(rising_factorial(&rat(1), 3), rat(6));
        assert_eq!(rising_factorial(&rat(-2), 2), rat(2));
        assert_eq!(rising_factorial(&rat(5), 0), rat(1));
        assert_eq!(rising_factorial(&frac(1, 2), 2), frac(3, 4));
    }

    #[test]
    fn lower_factorial_values() {
        assert_eq!(lower_factorial(&rat(4), 2), rat(12));
        assert_eq!(lower_factorial(&rat(2), 3), rat(0));
    }

    #[test]
    fn parse_rational_accepts_both_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational(" 6/-4 ").unwrap(), frac(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
