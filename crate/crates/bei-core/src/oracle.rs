//! Independent brute-force oracles for the test suites.
//!
//! Everything here decides questions by exhaustive linear algebra or
//! exhaustive search, deliberately avoiding the Groebner-basis code paths it
//! is used to cross-check. The row reduction is a self-contained
//! implementation on dense coordinate maps.

use crate::field::{CoefficientField, Scalar};
use crate::graph::Graph;
use crate::ideal::monomials_of_degree;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

/// Plain row space over sorted monomial keys, independent of `linalg`.
struct Span {
    field: CoefficientField,
    rows: Vec<BTreeMap<Monomial, Scalar>>,
}

impl Span {
    fn new(field: CoefficientField) -> Self {
        Span { field, rows: Vec::new() }
    }

    fn reduce(&self, mut row: BTreeMap<Monomial, Scalar>) -> BTreeMap<Monomial, Scalar> {
        loop {
            let Some((lead, lc)) = row.iter().next().map(|(m, c)| (m.clone(), c.clone()))
            else {
                return row;
            };
            let Some(pivot) = self
                .rows
                .iter()
                .find(|r| r.keys().next() == Some(&lead))
            else {
                return row;
            };
            let factor = self.field.div(&lc, pivot.values().next().unwrap());
            for (m, c) in pivot {
                let entry = row.entry(m.clone()).or_insert_with(|| self.field.zero());
                *entry = self.field.sub(entry, &self.field.mul(c, &factor));
            }
            row.retain(|_, c| !self.field.is_zero(c));
        }
    }

    fn insert(&mut self, row: BTreeMap<Monomial, Scalar>) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            false
        } else {
            self.rows.push(reduced);
            true
        }
    }

    fn contains(&self, row: BTreeMap<Monomial, Scalar>) -> bool {
        self.reduce(row).is_empty()
    }
}

fn poly_to_row(p: &Polynomial) -> BTreeMap<Monomial, Scalar> {
    p.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Membership through the degree-truncated linear span: `p` (homogeneous
/// components of degree <= `bound`) lies in the ideal generated by the
/// homogeneous `gens` iff each component lies in the span of
/// `{ m * g : deg(m g) = component degree }`. Exact for homogeneous ideals.
pub fn membership_by_truncated_span(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    p: &Polynomial,
    bound: usize,
) -> bool {
    if p.is_zero() {
        return true;
    }
    // split into homogeneous components
    let mut components: BTreeMap<u16, Vec<(Monomial, Scalar)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        components.entry(m.degree()).or_default().push((m.clone(), c.clone()));
    }
    for (deg, terms) in components {
        if deg as usize > bound {
            return false;
        }
        let mut span = Span::new(*ring.field());
        for g in gens {
            let Some(gd) = g.degree() else { continue };
            if gd > deg {
                continue;
            }
            for m in monomials_of_degree(ring, (deg - gd) as usize) {
                let prod = g.mul_term(&m, &ring.field().one());
                span.insert(poly_to_row(&prod));
            }
        }
        let component = Polynomial::from_terms(ring, terms);
        if !span.contains(poly_to_row(&component)) {
            return false;
        }
    }
    true
}

/// Dimension of the degree-`deg` slice of the span of the given homogeneous
/// polynomials (no ideal closure, just the listed elements).
pub fn span_dimension(field: CoefficientField, polys: &[Polynomial], deg: u16) -> usize {
    let mut span = Span::new(field);
    let mut rank = 0;
    for p in polys {
        if p.degree() == Some(deg) && span.insert(poly_to_row(p)) {
            rank += 1;
        }
    }
    rank
}

/// Koszul Betti numbers of a regular sequence with the given generator
/// degrees: `beta_{k, D}` counts the k-subsets with degree sum `D`.
pub fn koszul_betti(degrees: &[u16]) -> BTreeMap<(usize, usize), usize> {
    let mut out: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    out.insert((0, 0), 1);
    let r = degrees.len();
    for mask in 1u64..(1 << r) {
        let k = mask.count_ones() as usize;
        let d: usize = (0..r)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| degrees[i] as usize)
            .sum();
        *out.entry((k, d)).or_default() += 1;
    }
    out
}

/// Count connected unicyclic graphs on `n` labeled-then-dedup'd vertices by
/// raw edge-subset enumeration and permutation isomorphism, independent of
/// the canonical-form machinery.
pub fn brute_force_unicyclic_count(n: usize) -> usize {
    assert!(n <= 6, "oracle enumeration kept tiny");
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    // choose exactly n of the pairs
    let total = pairs.len();
    let mut chooser = vec![false; total];
    fn rec(
        idx: usize,
        left: usize,
        chooser: &mut Vec<bool>,
        pairs: &[(usize, usize)],
        n: usize,
        reps: &mut Vec<Graph>,
        seen: &mut HashSet<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(chooser.iter())
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_unicyclic() {
                return;
            }
            if !seen.insert(edges.clone()) {
                return;
            }
            if reps.iter().all(|r| !brute_isomorphic(r, &g)) {
                reps.push(g);
            }
            return;
        }
        if idx >= pairs.len() || pairs.len() - idx < left {
            return;
        }
        chooser[idx] = true;
        rec(idx + 1, left - 1, chooser, pairs, n, reps, seen);
        chooser[idx] = false;
        rec(idx + 1, left, chooser, pairs, n, reps, seen);
    }
    rec(0, n, &mut chooser, &pairs, n, &mut reps, &mut seen);
    reps.len()
}

/// Isomorphism by trying all vertex permutations.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.num_edges() != b.num_edges() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..=n).collect();
    fn rec(perm: &mut Vec<usize>, k: usize, a: &Graph, b: &Graph) -> bool {
        let n = a.n();
        if k > n {
            return a.edges().all(|(i, j)| b.has_edge(perm[i], perm[j]));
        }
        for swap in k..=n {
            perm.swap(k, swap);
            // prune on degree mismatch
            if a.degree(k) == b.degree(perm[k]) && rec(perm, k + 1, a, b) {
                return true;
            }
            perm.swap(k, swap);
        }
        false
    }
    rec(&mut perm, 1, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::{binomial_edge_ideal, EdgeBinomialKind};
    use crate::graph::{build_cycle, build_path};
    use crate::poly::parse_polynomial;

    const Q: CoefficientField = CoefficientField::Rationals;

    #[test]
    fn truncated_span_membership_matches_hand_identities() {
        let ring = PolyRing::new(3, Q);
        let c3 = build_cycle(3).unwrap();
        let j = binomial_edge_ideal(&ring, &c3, EdgeBinomialKind::Standard).unwrap();
        // y1 * f23 lies in the ideal (degree 3)
        let member = parse_polynomial(&ring, "x2*y1*y3 - x3*y1*y2").unwrap();
        assert!(membership_by_truncated_span(&ring, j.generators(), &member, 3));
        // x1*y2 alone does not
        let non = parse_polynomial(&ring, "x1*y2").unwrap();
        assert!(!membership_by_truncated_span(&ring, j.generators(), &non, 3));
    }

    #[test]
    fn span_dimension_counts_squares() {
        let ring = PolyRing::new(3, Q);
        let c3 = build_cycle(3).unwrap();
        let j = binomial_edge_ideal(&ring, &c3, EdgeBinomialKind::Standard).unwrap();
        let sq = j.power(2).unwrap();
        assert_eq!(span_dimension(Q, sq.generators(), 4), 6);
    }

    #[test]
    fn koszul_table_for_three_quadrics() {
        let t = koszul_betti(&[2, 2, 2]);
        assert_eq!(t.get(&(1, 2)), Some(&3));
        assert_eq!(t.get(&(2, 4)), Some(&3));
        assert_eq!(t.get(&(3, 6)), Some(&1));
    }

    #[test]
    fn brute_unicyclic_counts_match_enumeration() {
        for n in [3, 4, 5] {
            assert_eq!(
                brute_force_unicyclic_count(n),
                crate::graph::enumerate_unicyclic(n).unwrap().len()
            );
        }
    }

    #[test]
    fn brute_isomorphism_sanity() {
        let p4 = build_path(4).unwrap();
        let relabeled = Graph::new(4, &[(4, 2), (2, 1), (1, 3)]).unwrap();
        assert!(brute_isomorphic(&p4, &relabeled));
        let star = crate::graph::build_star(3).unwrap();
        assert!(!brute_isomorphic(&p4, &star));
    }
}
