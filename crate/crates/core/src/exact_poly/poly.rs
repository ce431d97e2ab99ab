//! Sparse multivariate polynomials over `BigRational`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::exponent::ExponentVec;
use super::scalar;
use crate::error::{Error, Result};

/// Multivariate polynomial in `arity` positional variables `x0, x1, ...`.
///
/// Terms map exponent vectors to nonzero rational coefficients; the zero
/// polynomial is the empty map. The term map is keyed by the graded-lex
/// order, so iteration (and the text/JSON forms) are deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<ExponentVec, BigRational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(ExponentVec::zeros(arity), c);
        p
    }

    /// The variable `x_var` as a polynomial.
    pub fn var(arity: usize, var: usize) -> Self {
        assert!(var < arity, "variable index out of range");
        let mut p = Self::zero(arity);
        p.add_term(ExponentVec::unit(arity, var), BigRational::one());
        p
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVec, BigRational)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.arity(), arity, "exponent arity mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &BigRational)> {
        self.terms.iter()
    }

    /// The graded-lex maximal term, if any.
    pub fn leading_term(&self) -> Option<(&ExponentVec, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, e: &ExponentVec) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Per-variable maximum exponent over all terms.
    pub fn coordinate_degree(&self) -> ExponentVec {
        let mut deg = vec![0u32; self.arity];
        for e in self.terms.keys() {
            for (v, d) in deg.iter_mut().enumerate() {
                *d = (*d).max(e.get(v));
            }
        }
        ExponentVec::new(deg)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.get(var)).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVec, c: BigRational) {
        if c.is_zero() {
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

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Replace `x_var` by `x_var + amount`, expanded exactly.
    pub fn shift(&self, var: usize, amount: &BigRational) -> Self {
        assert!(var < self.arity, "variable index out of range");
        if amount.is_zero() {
            return self.clone();
        }
        let mut out = Self::zero(self.arity);
        // powers of `amount` up to the degree in x_var
        let max_deg = self.degree_in(var) as usize;
        let mut pow = Vec::with_capacity(max_deg + 1);
        pow.push(BigRational::one());
        for _ in 0..max_deg {
            pow.push(pow.last().unwrap() * amount);
        }
        for (e, c) in &self.terms {
            let d = e.get(var);
            // (x + a)^d = sum_k C(d,k) a^(d-k) x^k
            for k in 0..=d {
                let coeff = c
                    * BigRational::from_integer(scalar::binomial(d as u64, k as u64))
                    * &pow[(d - k) as usize];
                out.add_term(e.with(var, k), coeff);
            }
        }
        out
    }

    /// Backward difference in `x_var`: `p - p(.., x_var - 1, ..)`.
    pub fn delta(&self, var: usize) -> Self {
        self - &self.shift(var, &-BigRational::one())
    }

    /// `Δ_{x_v}^{orders[v]}` applied in every variable. The operators
    /// commute, so the application order is immaterial.
    pub fn mixed_delta(&self, orders: &ExponentVec) -> Self {
        assert_eq!(orders.arity(), self.arity, "orders arity mismatch");
        let mut p = self.clone();
        for var in 0..self.arity {
            for _ in 0..orders.get(var) {
                p = p.delta(var);
            }
        }
        p
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        // per-variable power tables
        let deg = self.coordinate_degree();
        let mut pows: Vec<Vec<BigRational>> = Vec::with_capacity(self.arity);
        for (v, x) in point.iter().enumerate() {
            let mut table = Vec::with_capacity(deg.get(v) as usize + 1);
            table.push(BigRational::one());
            for _ in 0..deg.get(v) {
                table.push(table.last().unwrap() * x);
            }
            pows.push(table);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for v in 0..self.arity {
                term *= &pows[v][e.get(v) as usize];
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute `arg` for the single variable of a univariate polynomial.
    ///
    /// `self` must have arity 1; the result has `arg`'s arity.
    pub fn substitute(&self, arg: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, 1, "substitute requires a univariate polynomial");
        // Horner over descending powers
        let deg = self.degree_in(0);
        let mut acc = MultiPoly::zero(arg.arity());
        for d in (0..=deg).rev() {
            acc = &acc * arg;
            let c = self.coeff(&ExponentVec::new(vec![d]));
            if !c.is_zero() {
                acc.add_term(ExponentVec::zeros(arg.arity()), c);
            }
        }
        acc
    }

    /// Reinterpret the variables inside a wider (or reordered) variable set:
    /// old variable `v` becomes `map[v]`. Distinct old variables must map to
    /// distinct new ones.
    pub fn remap_variables(&self, new_arity: usize, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.arity);
        assert!(map.iter().all(|&v| v < new_arity));
        let mut out = MultiPoly::zero(new_arity);
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; new_arity];
            for (v, &target) in map.iter().enumerate() {
                exps[target] += e.get(v);
            }
            out.add_term(ExponentVec::new(exps), c.clone());
        }
        out
    }

    /// Terms as JSON-ready records, in graded-lex ascending order.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                exps: e.as_slice().to_vec(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(arity: usize, terms: &[TermJson]) -> Result<Self> {
        let mut p = Self::zero(arity);
        for t in terms {
            if t.exps.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: t.exps.len(),
                });
            }
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::invalid(format!("invalid numerator `{}`", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::invalid(format!("invalid denominator `{}`", t.den)))?;
            if den.is_zero() {
                return Err(Error::invalid("zero denominator in polynomial term"));
            }
            p.add_term(ExponentVec::new(t.exps.clone()), BigRational::new(num, den));
        }
        Ok(p)
    }
}

/// One polynomial term in the JSON wire format.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

fn assert_same_arity(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(a.arity, b.arity, "polynomial arity mismatch");
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_same_arity(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_same_arity(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_same_arity(self, rhs);
        let mut out = MultiPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.plus(eb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// Sum of terms `c * x0^e0 * x1^e1` in graded-lex descending order;
    /// zero-exponent factors are omitted and rationals print as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &BigRational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{magnitude}")?;
            for v in 0..self.arity {
                if e.get(v) > 0 {
                    write!(f, " * x{v}^{}", e.get(v))?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.arity, self)
    }
}
