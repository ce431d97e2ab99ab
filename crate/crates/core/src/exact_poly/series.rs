//! Box-truncated formal power series with exact rational coefficients.
//!
//! Just enough series algebra for the Appell relation: sums, products, and
//! the expansion of `(1-s)^{-x}`. Truncation is per variable (box shaped):
//! any operation discards terms whose exponent in some variable reaches that
//! variable's order, and arithmetic between series truncates to the
//! componentwise minimum of the operands' orders.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exponent::ExponentVec;
use super::scalar::{factorial, rising_factorial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    arity: usize,
    orders: Vec<usize>,
    terms: BTreeMap<ExponentVec, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(arity: usize, orders: Vec<usize>) -> Self {
        assert_eq!(orders.len(), arity);
        assert!(orders.iter().all(|&o| o >= 1), "orders must be >= 1");
        TruncatedSeries {
            arity,
            orders,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize, orders: Vec<usize>) -> Self {
        let mut s = Self::zero(arity, orders);
        s.add_term(ExponentVec::zeros(arity), BigRational::one());
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVec) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    fn in_box(&self, e: &ExponentVec) -> bool {
        (0..self.arity).all(|v| (e.get(v) as usize) < self.orders[v])
    }

    pub fn add_term(&mut self, e: ExponentVec, c: BigRational) {
        assert_eq!(e.arity(), self.arity);
        if c.is_zero() || !self.in_box(&e) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn joint_orders(&self, rhs: &Self) -> Vec<usize> {
        assert_eq!(self.arity, rhs.arity, "series arity mismatch");
        self.orders
            .iter()
            .zip(&rhs.orders)
            .map(|(a, b)| *a.min(b))
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.arity, self.joint_orders(rhs));
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.arity, self.joint_orders(rhs));
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.arity, self.joint_orders(rhs));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.plus(eb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.arity, self.orders.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Multiply by the monomial `var^power` (shifting exponents, truncating).
    pub fn mul_monomial(&self, var: usize, power: u32) -> Self {
        assert!(var < self.arity);
        let mut out = Self::zero(self.arity, self.orders.clone());
        for (e, c) in &self.terms {
            out.add_term(e.with(var, e.get(var) + power), c.clone());
        }
        out
    }

    /// Restrict to a smaller truncation box.
    pub fn truncate(&self, orders: &[usize]) -> Self {
        assert_eq!(orders.len(), self.arity);
        assert!(
            orders.iter().zip(&self.orders).all(|(new, old)| new <= old),
            "cannot extend a truncated series"
        );
        let mut out = Self::zero(self.arity, orders.to_vec());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// The expansion of `(1 - s_var)^{-x}` to the given order in each
    /// variable: `sum_{m < order} x^(m) / m! * s_var^m`.
    pub fn inv_pow(arity: usize, var: usize, x: &BigRational, order: usize) -> Self {
        assert!(var < arity);
        let mut out = Self::zero(arity, vec![order; arity]);
        for m in 0..order {
            let coeff = rising_factorial(x, m) / BigRational::from_integer(factorial(m));
            out.add_term(ExponentVec::zeros(arity).with(var, m as u32), coeff);
        }
        out
    }
}

/// Univariate `(1 - s)^{-x}` truncated below `order`, the building block of
/// the Appell relation.
pub fn series_inv_pow(x_value: &BigRational, order: usize) -> TruncatedSeries {
    TruncatedSeries::inv_pow(1, 0, x_value, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::scalar::rat;

    fn ev(v: &[u32]) -> ExponentVec {
        ExponentVec::from(v)
    }

    #[test]
    fn inv_pow_at_zero_is_one() {
        let s = series_inv_pow(&rat(0), 6);
        assert_eq!(s, TruncatedSeries::one(1, vec![6]));
    }

    #[test]
    fn inv_pow_at_one_is_geometric() {
        // 1^(m) = m!, so (1-s)^{-1} = 1 + s + s^2 + s^3
        let s = series_inv_pow(&rat(1), 4);
        for m in 0..4u32 {
            assert_eq!(s.coeff(&ev(&[m])), rat(1));
        }
    }

    #[test]
    fn inv_pow_at_two() {
        // 2^(m)/m! = m + 1: 1 + 2s + 3s^2
        let s = series_inv_pow(&rat(2), 3);
        assert_eq!(s.coeff(&ev(&[0])), rat(1));
        assert_eq!(s.coeff(&ev(&[1])), rat(2));
        assert_eq!(s.coeff(&ev(&[2])), rat(3));
    }

    #[test]
    fn product_truncates_to_box() {
        // (1-s)^{-1} * (1-s)^{-1} = (1-s)^{-2}: coefficients 2^(m)/m! = m+1
        let s = series_inv_pow(&rat(1), 5);
        let sq = s.mul(&s);
        assert_eq!(sq, series_inv_pow(&rat(2), 5));
    }

    #[test]
    fn additivity_of_exponents_bivariate() {
        // (1-s)^{-x} (1-s)^{-y} = (1-s)^{-(x+y)} in a 2-variable box
        let a = TruncatedSeries::inv_pow(2, 0, &rat(3), 4);
        let b = TruncatedSeries::inv_pow(2, 0, &rat(2), 4);
        assert_eq!(a.mul(&b), TruncatedSeries::inv_pow(2, 0, &rat(5), 4));
    }

    #[test]
    fn mul_monomial_shifts_and_truncates() {
        let s = series_inv_pow(&rat(1), 3).mul_monomial(0, 2);
        assert_eq!(s.coeff(&ev(&[2])), rat(1));
        assert_eq!(s.coeff(&ev(&[0])), rat(0));
        // s^2 * s^1 would land at order 3 and must be dropped
        assert_eq!(s.terms().count(), 1);
    }
}
