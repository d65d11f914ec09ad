//! Buchberger's algorithm, normal forms, and ideal-membership decisions.
//!
//! Plain Buchberger with the coprime and chain criteria and the normal pair
//! selection strategy (minimal lcm degree first). Generators are pre-sorted
//! so the computation is deterministic for a fixed input set and monomial
//! order; the output is the reduced Groebner basis, which is the unique
//! canonical form of the ideal. Over the rationals every intermediate result
//! is content-normalized to keep coefficient growth in check.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::collections::BTreeSet;
use std::sync::Arc;

/// A reduced Groebner basis: monic generators, no term of any element
/// divisible by the leading term of another, sorted ascending by leading
/// monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// True iff the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].degree() == Some(0)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

/// Compute the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if !g.same_ring(&Polynomial::zero(ring)) {
            return Err(Error::RingMismatch);
        }
    }
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.primitive())
        .collect();
    basis.sort_by(|a, b| a.cmp_canonical(b));
    basis.dedup();

    // pair queue keyed by (lcm degree, i, j); BTreeSet pops the minimum
    let mut pairs: BTreeSet<(u16, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lm = |basis: &Vec<Polynomial>, i: usize| -> Monomial {
        basis[i].leading_monomial().expect("nonzero basis element").clone()
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let l = lm(&basis, i).lcm(&lm(&basis, j));
            pairs.insert((l.degree(), i, j));
        }
    }

    while let Some(&entry) = pairs.iter().next() {
        pairs.remove(&entry);
        let (_, i, j) = entry;
        done.insert((i, j));
        let lmi = lm(&basis, i);
        let lmj = lm(&basis, j);
        if lmi.coprime(&lmj) {
            continue;
        }
        let lcm = lmi.lcm(&lmj);
        // chain criterion: some k with lt_k | lcm and both (i,k),(j,k) done
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce_full(&s, &basis).primitive();
        if !r.is_zero() {
            let t = basis.len();
            basis.push(r);
            for k in 0..t {
                let l = lm(&basis, k).lcm(&lm(&basis, t));
                pairs.insert((l.degree(), k, t));
            }
        }
    }

    Ok(reduce_basis(ring, basis))
}

/// S-polynomial of two nonzero polynomials.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient(&lcm), &field.inv(fc));
    let b = g.mul_term(&gm.quotient(&lcm), &field.inv(gc));
    a.sub(&b).expect("same ring")
}

/// Remainder of `p` on full division by `set`: no term of the result is
/// divisible by the leading term of any element of `set`. The reducer is the
/// first matching element, so the walk is deterministic.
pub fn reduce_full(p: &Polynomial, set: &[Polynomial]) -> Polynomial {
    reduce_with_strategy(p, set, false)
}

/// Same remainder computed with an alternative reducer choice (last matching
/// element). Against a Groebner basis both strategies agree.
pub fn reduce_full_alt(p: &Polynomial, set: &[Polynomial]) -> Polynomial {
    reduce_with_strategy(p, set, true)
}

fn reduce_with_strategy(p: &Polynomial, set: &[Polynomial], pick_last: bool) -> Polynomial {
    let ring = p.ring().clone();
    let field = *ring.field();
    let mut rem_terms: Vec<(Monomial, crate::field::Scalar)> = Vec::new();
    let mut work = p.clone();
    'outer: while let Some((m, c)) = work.leading_term() {
        let m = m.clone();
        let c = c.clone();
        let candidates = set.iter().filter(|g| {
            !g.is_zero() && g.leading_monomial().unwrap().divides(&m)
        });
        let reducer = if pick_last { candidates.last() } else { candidates.clone().next() };
        if let Some(g) = reducer {
            let (gm, gc) = g.leading_term().unwrap();
            let q = gm.quotient(&m);
            let f = field.div(&c, gc);
            work = work.sub(&g.mul_term(&q, &f)).expect("same ring");
            continue 'outer;
        }
        rem_terms.push((m.clone(), c.clone()));
        work = work
            .sub(&Polynomial::monomial(&ring, m, c))
            .expect("same ring");
    }
    Polynomial::from_terms(&ring, rem_terms)
}

/// Turn a Groebner basis into the reduced Groebner basis: drop redundant
/// elements, tail-reduce the rest, normalize monic, sort by leading monomial.
fn reduce_basis(ring: &Arc<PolyRing>, mut basis: Vec<Polynomial>) -> GroebnerBasis {
    basis.retain(|g| !g.is_zero());
    // minimize: remove g when some other leading term divides lt(g)
    let mut keep: Vec<Polynomial> = Vec::new();
    'next: for i in 0..basis.len() {
        let lmi = basis[i].leading_monomial().unwrap();
        for (j, other) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let lmj = other.leading_monomial().unwrap();
            if lmj.divides(lmi) && (lmj != lmi || j < i) {
                continue 'next;
            }
        }
        keep.push(basis[i].clone());
    }
    // tail-reduce each survivor against the others
    let mut reduced: Vec<Polynomial> = keep.clone();
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Polynomial> = reduced
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = reduce_full(&reduced[i], &others).monic();
            if r != reduced[i] {
                reduced[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reduced.retain(|g| !g.is_zero());
    for g in reduced.iter_mut() {
        *g = g.monic();
    }
    reduced.sort_by(|a, b| {
        ring.cmp_monomials(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    GroebnerBasis { ring: ring.clone(), gens: reduced }
}

/// Normal form of `p` modulo the basis; the unique representative with no
/// term divisible by a basis leading term.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    reduce_full(p, &gb.gens)
}

/// Membership test via normal form.
pub fn in_ideal(p: &Polynomial, gb: &GroebnerBasis) -> bool {
    normal_form(p, gb).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::poly::parse_polynomial;

    fn ring(n: usize) -> Arc<PolyRing> {
        PolyRing::new(n, CoefficientField::Rationals)
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn principal_ideal_basis_is_the_monic_generator() {
        let r = ring(2);
        let f = p(&r, "3*x1*y2 - 3*x2*y1");
        let gb = buchberger(&r, &[f]).unwrap();
        assert_eq!(gb.len(), 1);
        // monic under degrevlex: leading monomial is x2*y1
        assert_eq!(gb.gens()[0], p(&r, "x2*y1 - x1*y2"));
    }

    #[test]
    fn path_generators_are_already_a_basis() {
        // two edge binomials of the path 1-2-3 have coprime leading terms
        let r = ring(3);
        let f12 = p(&r, "x1*y2 - x2*y1");
        let f23 = p(&r, "x2*y3 - x3*y2");
        let gb = buchberger(&r, &[f12.clone(), f23.clone()]).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(in_ideal(&f12, &gb));
        assert!(in_ideal(&f23, &gb));
        assert!(!in_ideal(&p(&r, "x1*y3 - x3*y1"), &gb));
    }

    #[test]
    fn triangle_standard_basis_is_the_three_minors() {
        // the 2x2 minors of a generic 2x3 matrix are a universal Groebner
        // basis, so the triangle ideal gains nothing
        let r = ring(3);
        let gens = vec![
            p(&r, "x1*y2 - x2*y1"),
            p(&r, "x2*y3 - x3*y2"),
            p(&r, "x1*y3 - x3*y1"),
        ];
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.len(), 3);
        // membership: x2*y1*y3 - x3*y1*y2 = y1 * f23 lies in the ideal
        let member = p(&r, "x2*y1*y3 - x3*y1*y2");
        assert!(in_ideal(&member, &gb));
        // x2*f13 = x1*f23 + x3*f12 is in the ideal
        let f13 = p(&r, "x1*y3 - x3*y1");
        let x2 = p(&r, "x2");
        assert!(in_ideal(&x2.mul(&f13).unwrap(), &gb));
    }

    #[test]
    fn parity_triangle_basis_grows() {
        // the parity triangle needs a cubic: x3*g12 - x2*g13 = y1*f23 up to sign
        let r = ring(3);
        let gens = vec![
            p(&r, "x1*x2 - y1*y2"),
            p(&r, "x2*x3 - y2*y3"),
            p(&r, "x1*x3 - y1*y3"),
        ];
        let gb = buchberger(&r, &gens).unwrap();
        assert!(gb.len() > 3, "parity triangle basis must grow, got {}", gb.len());
        for g in gb.gens() {
            assert!(g.is_homogeneous());
        }
    }

    #[test]
    fn normal_form_of_generator_is_zero() {
        let r = ring(2);
        let g = p(&r, "x1*x2 - y1*y2");
        let gb = buchberger(&r, &[g.clone()]).unwrap();
        assert!(normal_form(&g, &gb).is_zero());
    }

    #[test]
    fn normal_form_of_unit_in_proper_ideal_is_itself() {
        let r = ring(2);
        let gb = buchberger(&r, &[p(&r, "x1*y2 - x2*y1")]).unwrap();
        let one = Polynomial::one(&r);
        assert_eq!(normal_form(&one, &gb), one);
    }

    #[test]
    fn empty_input_is_the_zero_ideal() {
        let r = ring(2);
        let gb = buchberger(&r, &[]).unwrap();
        assert!(gb.is_empty());
        let f = p(&r, "x1");
        assert_eq!(normal_form(&f, &gb), f);
    }

    #[test]
    fn homogeneous_input_keeps_basis_homogeneous() {
        let r = ring(3);
        let gens = vec![
            p(&r, "x1*x2 - y1*y2"),
            p(&r, "x2*x3 - y2*y3"),
            p(&r, "x1*y3 - x3*y1"),
        ];
        let gb = buchberger(&r, &gens).unwrap();
        for g in gb.gens() {
            assert!(g.is_homogeneous());
        }
    }

    #[test]
    fn reduced_basis_property_holds() {
        let r = ring(3);
        let gens = vec![
            p(&r, "x1*x2 - y1*y2"),
            p(&r, "x2*x3 - y2*y3"),
            p(&r, "x1*x3 - y1*y3"),
        ];
        let gb = buchberger(&r, &gens).unwrap();
        for (i, g) in gb.gens().iter().enumerate() {
            assert!(g.leading_term().unwrap().1 == &r.field().one());
            for (j, h) in gb.gens().iter().enumerate() {
                if i == j {
                    continue;
                }
                let hlm = h.leading_monomial().unwrap();
                for (m, _) in g.terms() {
                    assert!(!hlm.divides(m), "basis not reduced");
                }
            }
        }
    }
}
