//! Exponent vectors under the product order and graded-lex total order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial in `arity` variables.
///
/// Two orders matter here. The *product order* `k ⪯ n` (componentwise `<=`)
/// governs which grid indices a Goncarov polynomial depends on, and is only a
/// partial order. The derived `Ord` is *graded lexicographic* (total degree
/// first, then lex), a linear extension of the product order used to make all
/// term streams and serialized output deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVec(Vec<u32>);

impl ExponentVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVec(exps)
    }

    pub fn zeros(arity: usize) -> Self {
        ExponentVec(vec![0; arity])
    }

    /// The standard unit vector `e_var`.
    pub fn unit(arity: usize, var: usize) -> Self {
        assert!(var < arity);
        let mut exps = vec![0; arity];
        exps[var] = 1;
        ExponentVec(exps)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product order `self ⪯ other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.arity() == other.arity() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn plus_unit(&self, var: usize) -> Self {
        let mut exps = self.0.clone();
        exps[var] += 1;
        ExponentVec(exps)
    }

    /// Componentwise difference, or `None` when `other ⪯ self` fails.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if other.dominated_by(self) {
            Some(ExponentVec(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn with(&self, var: usize, value: u32) -> Self {
        let mut exps = self.0.clone();
        exps[var] = value;
        ExponentVec(exps)
    }

    /// Drop coordinate `var`, lowering the arity by one.
    pub fn drop_var(&self, var: usize) -> Self {
        let mut exps = self.0.clone();
        exps.remove(var);
        ExponentVec(exps)
    }
}

impl Ord for ExponentVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVec {
    fn from(exps: Vec<u32>) -> Self {
        ExponentVec(exps)
    }
}

impl From<&[u32]> for ExponentVec {
    fn from(exps: &[u32]) -> Self {
        ExponentVec(exps.to_vec())
    }
}

/// All indices `k ⪯ extent`, in lexicographic (odometer) order.
///
/// Lex order is a linear extension of the product order, so consumers may
/// resolve triangular recursions by iterating this stream directly.
pub fn box_iter(extent: &ExponentVec) -> impl Iterator<Item = ExponentVec> + '_ {
    BoxIter {
        extent,
        next: Some(vec![0; extent.arity()]),
    }
}

struct BoxIter<'a> {
    extent: &'a ExponentVec,
    next: Option<Vec<u32>>,
}

impl Iterator for BoxIter<'_> {
    type Item = ExponentVec;

    fn next(&mut self) -> Option<ExponentVec> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < self.extent.get(pos) {
                succ[pos] += 1;
                for v in succ.iter_mut().skip(pos + 1) {
                    *v = 0;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(ExponentVec(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVec {
        ExponentVec::from(v)
    }

    #[test]
    fn graded_lex_ordering() {
        assert!(ev(&[0, 0]) < ev(&[1, 0]));
        assert!(ev(&[0, 1]) < ev(&[1, 0])); // same degree, lex breaks the tie
        assert!(ev(&[2, 0]) > ev(&[1, 0]));
        assert!(ev(&[0, 3]) > ev(&[1, 1])); // degree wins over lex
    }

    #[test]
    fn product_order() {
        assert!(ev(&[1, 2]).dominated_by(&ev(&[2, 2])));
        assert!(!ev(&[3, 0]).dominated_by(&ev(&[2, 2])));
        assert_eq!(ev(&[2, 2]).checked_sub(&ev(&[1, 0])), Some(ev(&[1, 2])));
        assert_eq!(ev(&[2, 2]).checked_sub(&ev(&[3, 0])), None);
    }

    #[test]
    fn box_iter_is_complete_and_lex() {
        let all: Vec<_> = box_iter(&ev(&[2, 1])).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], ev(&[0, 0]));
        assert_eq!(all[1], ev(&[0, 1]));
        assert_eq!(all[2], ev(&[1, 0]));
        assert_eq!(all[5], ev(&[2, 1]));
        // lex order extends the product order
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(!b.dominated_by(a) || a == b);
            }
        }
    }

    #[test]
    fn box_iter_zero_extent() {
        let all: Vec<_> = box_iter(&ev(&[0, 0, 0])).collect();
        assert_eq!(all, vec![ev(&[0, 0, 0])]);
    }
}
