//! The upper-factorial basis `x^(n) = x(x+1)...(x+n-1)`.
//!
//! The upper factorials are the basic sequence of the backward difference
//! operator (`Δ x^(n) = n x^(n-1)`, `x^(0) = 1`), and products of them form
//! the natural basis for everything built on Δ. The change of basis from
//! monomials is unitriangular with respect to the product order on exponent
//! vectors, which makes the conversion below exact and invertible.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::exponent::ExponentVec;
use super::poly::MultiPoly;
use super::scalar::rat;

/// The polynomial `x_var^(n) = x_var (x_var + 1) ... (x_var + n - 1)` in
/// `arity` variables; `n = 0` gives the constant 1.
pub fn upper_factorial(arity: usize, var: usize, n: u32) -> MultiPoly {
    assert!(var < arity, "variable index out of range");
    rising_factorial_poly(&MultiPoly::var(arity, var), n as usize)
}

/// `prod_v x_v^(k_v)` for an exponent vector `k`.
pub fn upper_factorial_product(k: &ExponentVec) -> MultiPoly {
    let arity = k.arity();
    let mut acc = MultiPoly::one(arity);
    for var in 0..arity {
        acc = &acc * &upper_factorial(arity, var, k.get(var));
    }
    acc
}

/// `base (base + 1) ... (base + n - 1)` for a polynomial `base`.
pub fn rising_factorial_poly(base: &MultiPoly, n: usize) -> MultiPoly {
    let arity = base.arity();
    let mut acc = MultiPoly::one(arity);
    for k in 0..n {
        acc = &acc * &(base + &MultiPoly::constant(arity, rat(k as i64)));
    }
    acc
}

/// Coefficients `c_k` with `p = sum_k c_k prod_v x_v^(k_v)`.
///
/// Exact and invertible: [`from_upper_factorial_basis`] reproduces `p`.
pub fn to_upper_factorial_basis(p: &MultiPoly) -> BTreeMap<ExponentVec, BigRational> {
    let mut coeffs = BTreeMap::new();
    let mut rest = p.clone();
    // The expansion of prod x_v^(e_v) has leading monomial x^e (coefficient
    // 1) and otherwise only monomials with componentwise smaller exponents,
    // so peeling the graded-lex maximum term terminates.
    while let Some((e, c)) = rest.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
        rest = &rest - &upper_factorial_product(&e).scale(&c);
        coeffs.insert(e, c);
    }
    coeffs.retain(|_, c| !c.is_zero());
    coeffs
}

/// Inverse of [`to_upper_factorial_basis`].
pub fn from_upper_factorial_basis(
    arity: usize,
    coeffs: &BTreeMap<ExponentVec, BigRational>,
) -> MultiPoly {
    let mut acc = MultiPoly::zero(arity);
    for (e, c) in coeffs {
        assert_eq!(e.arity(), arity, "exponent arity mismatch");
        acc = &acc + &upper_factorial_product(e).scale(c);
    }
    acc
}
