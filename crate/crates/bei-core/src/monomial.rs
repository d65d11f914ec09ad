//! Dense exponent-vector monomials and monomial orders.
//!
//! Exponent vectors are dense `u8` slices; the rings in play have at most a
//! few dozen variables and total degrees stay far below 255. Variable index 0
//! is the greatest variable of the order.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;

type Exps = SmallVec<[u8; 28]>;

/// A monomial as a dense exponent vector over the ring's variable sequence.
/// The derived `Ord` is a plain structural order for use as a map key; the
/// algebraic comparisons live in [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exps,
    degree: u16,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; num_vars], degree: 0 }
    }

    pub fn from_exps(exps: &[u8]) -> Self {
        let degree = exps.iter().map(|&e| e as u16).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    /// Single variable `var^k`.
    pub fn var_pow(num_vars: usize, var: usize, k: u8) -> Self {
        let mut exps: Exps = smallvec::smallvec![0; num_vars];
        exps[var] = k;
        Monomial { exps, degree: k as u16 }
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u16 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn exponent(&self, var: usize) -> u8 {
        self.exps[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Exps =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: Exps =
            other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u16).sum();
        Monomial { exps, degree }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree within the leading block of `k` variables.
    pub fn block_degree(&self, k: usize) -> u16 {
        self.exps[..k].iter().map(|&e| e as u16).sum()
    }

    /// Drop the first `k` variables (used when mapping elimination-ring
    /// results back into the base ring).
    pub fn strip_front(&self, k: usize) -> Monomial {
        Monomial::from_exps(&self.exps[k..])
    }

    /// Prepend `k` zero exponents (base ring into elimination ring).
    pub fn pad_front(&self, k: usize) -> Monomial {
        let mut exps: Exps = smallvec::smallvec![0; k];
        exps.extend_from_slice(&self.exps);
        Monomial { exps, degree: self.degree }
    }
}

/// Total, multiplicative well-orders on monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic; the workhorse default.
    DegRevLex,
    /// Pure lexicographic.
    Lex,
    /// Eliminate the first `block` variables: compare the degree within the
    /// block first, then fall back to DegRevLex on the full vector. Any
    /// monomial involving a block variable beats any monomial that avoids
    /// them, which is what elimination needs.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Elimination { block } => a
                .block_degree(*block)
                .cmp(&b.block_degree(*block))
                .then_with(|| degrevlex(a, b)),
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps().iter().zip(b.exps().iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        other => return other,
    }
    // a > b iff the rightmost nonzero entry of a - b is negative
    for (x, y) in a.exps().iter().zip(b.exps().iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination { block } => write!(f, "elim:{block}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u8]) -> Monomial {
        Monomial::from_exps(exps)
    }

    #[test]
    fn degrevlex_breaks_ties_on_last_variable() {
        // x1*y2 vs x2*y1 in k[x1,x2,y1,y2]: the rightmost difference is at y2
        // with positive sign, so x1*y2 is the smaller monomial.
        let a = m(&[1, 0, 0, 1]);
        let b = m(&[0, 1, 1, 0]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let u = m(&[1, 0, 2, 0]);
        let v = m(&[0, 1, 1, 1]);
        let w = m(&[2, 1, 0, 3]);
        for ord in [
            MonomialOrder::DegRevLex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination { block: 1 },
        ] {
            let c = ord.cmp(&u, &v);
            assert_eq!(ord.cmp(&u.mul(&w), &v.mul(&w)), c);
        }
    }

    #[test]
    fn elimination_dominates_on_block() {
        let ord = MonomialOrder::Elimination { block: 1 };
        // t^1 beats any t-free monomial of any degree
        let t = m(&[1, 0, 0]);
        let big = m(&[0, 5, 5]);
        assert_eq!(ord.cmp(&t, &big), Ordering::Greater);
    }

    #[test]
    fn lcm_quotient_roundtrip() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        let l = a.lcm(&b);
        assert_eq!(l.exps(), &[2, 3, 1]);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient(&l).mul(&a), l);
        assert!(!a.coprime(&b));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 2, 1])));
    }
}
