//! Graph-to-ideal constructions and the colon identities for (parity)
//! binomial edge ideals, as executable checks.
//!
//! For an edge `{i,j}` the standard edge binomial is `f_ij = x_i y_j - x_j y_i`
//! and the parity edge binomial is `g_ij = x_i x_j - y_i y_j`. `J_G` collects
//! the `f`, `I_G` the `g`. Binomials are stored with leading coefficient +1
//! under the ring order, which only flips signs and never changes ideals.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeBinomialKind {
    /// `f_ij = x_i y_j - x_j y_i`
    Standard,
    /// `g_ij = x_i x_j - y_i y_j`
    Parity,
}

impl EdgeBinomialKind {
    pub fn label(&self) -> &'static str {
        match self {
            EdgeBinomialKind::Standard => "standard",
            EdgeBinomialKind::Parity => "parity",
        }
    }
}

/// The (parity) edge binomial of `{i,j}`, normalized monic.
pub fn edge_binomial(
    ring: &Arc<PolyRing>,
    i: usize,
    j: usize,
    kind: EdgeBinomialKind,
) -> Result<Polynomial> {
    if i == j {
        return Err(Error::BadEdge(i, j, "loops have no edge binomial".into()));
    }
    let n = ring.n_vertices();
    if i < 1 || j < 1 || i > n || j > n {
        return Err(Error::BadEdge(i, j, format!("outside 1..={n}")));
    }
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    let field = ring.field();
    let one = field.one();
    let minus = field.neg(&one);
    let mk = |vars: [(usize, usize); 2], coef: crate::field::Scalar| {
        let mut exps = vec![0u8; ring.num_vars()];
        for (v, e) in vars {
            exps[v] += e as u8;
        }
        (crate::monomial::Monomial::from_exps(&exps), coef)
    };
    let terms = match kind {
        EdgeBinomialKind::Standard => vec![
            mk([(ring.x(i), 1), (ring.y(j), 1)], one),
            mk([(ring.x(j), 1), (ring.y(i), 1)], minus),
        ],
        EdgeBinomialKind::Parity => vec![
            mk([(ring.x(i), 1), (ring.x(j), 1)], one),
            mk([(ring.y(i), 1), (ring.y(j), 1)], minus),
        ],
    };
    Ok(Polynomial::from_terms(ring, terms).monic())
}

/// `J_G` (standard) or `I_G` (parity): one generator per edge.
pub fn binomial_edge_ideal(ring: &Arc<PolyRing>, g: &Graph, kind: EdgeBinomialKind) -> Result<Ideal> {
    if ring.n_vertices() < g.n() {
        return Err(Error::InfeasibleSize(format!(
            "graph on {} vertices needs a ring with at least as many",
            g.n()
        )));
    }
    let gens = g
        .edges()
        .map(|(i, j)| edge_binomial(ring, i, j, kind))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ring, gens)?.with_provenance(format!(
        "{} edge ideal, n={}, |E|={}",
        kind.label(),
        g.n(),
        g.num_edges()
    )))
}

/// The ring swap `x_i <-> y_i` for every `i` in the second partition class.
/// For a bipartite graph with that partition it maps `J_G` onto `I_G`.
pub fn phi_map(
    p: &Polynomial,
    v1: &BTreeSet<usize>,
    v2: &BTreeSet<usize>,
) -> Result<Polynomial> {
    let ring = p.ring();
    let n = ring.n_vertices();
    if v1.intersection(v2).next().is_some()
        || v1.len() + v2.len() != n
        || v1.union(v2).any(|&v| v < 1 || v > n)
    {
        return Err(Error::BadPartition);
    }
    let mut perm: Vec<usize> = (0..ring.num_vars()).collect();
    for &i in v2 {
        perm[ring.x(i)] = ring.y(i);
        perm[ring.y(i)] = ring.x(i);
    }
    Ok(p.permute_vars(&perm))
}

/// Apply [`phi_map`] to every generator.
pub fn phi_ideal(i: &Ideal, v1: &BTreeSet<usize>, v2: &BTreeSet<usize>) -> Result<Ideal> {
    let gens = i
        .generators()
        .iter()
        .map(|g| phi_map(g, v1, v2))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(i.ring(), gens)?.with_provenance(format!("phi({})", i.provenance())))
}

/// Outcome of one colon-identity check, with both reduced bases kept for
/// diagnosis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub identity_name: String,
    pub graph: Graph,
    pub edge: (usize, usize),
    pub lhs_gb: Vec<String>,
    pub rhs_gb: Vec<String>,
    pub equal: bool,
    /// Bipartite-swap cross-check where the identity provides one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_cross_check: Option<bool>,
}

impl CheckResult {
    fn new(
        name: &str,
        graph: &Graph,
        edge: (usize, usize),
        lhs: &Ideal,
        rhs: &Ideal,
    ) -> Result<Self> {
        Ok(CheckResult {
            identity_name: name.to_string(),
            graph: graph.clone(),
            edge,
            lhs_gb: lhs.groebner_basis().to_strings(),
            rhs_gb: rhs.groebner_basis().to_strings(),
            equal: lhs.equal(rhs)?,
            phi_cross_check: None,
        })
    }
}

/// Bridge colon: for a non-edge `e = {i,j}` that is a bridge in `G + e`,
/// `J_G : f_e` equals `J_{G_e}`.
pub fn colon_identity_bridge(
    ring: &Arc<PolyRing>,
    g: &Graph,
    e: (usize, usize),
) -> Result<CheckResult> {
    let (i, j) = e;
    if g.has_edge(i, j) {
        return Err(Error::BadEdge(i, j, "must be a non-edge".into()));
    }
    let plus = g.add_edge(i, j)?;
    if !plus.is_bridge(i, j)? {
        return Err(Error::BadEdge(i, j, "must be a bridge in G + e".into()));
    }
    let jg = binomial_edge_ideal(ring, g, EdgeBinomialKind::Standard)?;
    let fe = edge_binomial(ring, i, j, EdgeBinomialKind::Standard)?;
    let lhs = jg.colon_element(&fe)?;
    let rhs = binomial_edge_ideal(ring, &g.completion_ge(i, j)?, EdgeBinomialKind::Standard)?;
    CheckResult::new("bridge-colon", g, e, &lhs, &rhs)
}

/// Path colon: for any non-edge `e = {i,j}`,
/// `J_G : f_e = J_{G_e} + < g_{P,t} >` over all simple `i`-`j` paths `P`,
/// where for a path with inner vertices `i_1..i_s` the extra generators are
/// `g_{P,0} = x_{i_1}..x_{i_s}` and
/// `g_{P,t} = y_{i_1}..y_{i_t} x_{i_{t+1}}..x_{i_s}`.
pub fn colon_identity_path(
    ring: &Arc<PolyRing>,
    g: &Graph,
    e: (usize, usize),
) -> Result<CheckResult> {
    let (i, j) = e;
    if g.has_edge(i, j) {
        return Err(Error::BadEdge(i, j, "must be a non-edge".into()));
    }
    let jg = binomial_edge_ideal(ring, g, EdgeBinomialKind::Standard)?;
    let fe = edge_binomial(ring, i, j, EdgeBinomialKind::Standard)?;
    let lhs = jg.colon_element(&fe)?;
    let mut rhs =
        binomial_edge_ideal(ring, &g.completion_ge(i, j)?, EdgeBinomialKind::Standard)?;
    let mut extra: Vec<Polynomial> = Vec::new();
    for path in g.simple_paths(i, j) {
        let inner = &path[1..path.len() - 1];
        if inner.is_empty() {
            continue;
        }
        for t in 0..=inner.len() {
            let mut exps = vec![0u8; ring.num_vars()];
            for (pos, &v) in inner.iter().enumerate() {
                if pos < t {
                    exps[ring.y(v)] += 1;
                } else {
                    exps[ring.x(v)] += 1;
                }
            }
            extra.push(Polynomial::monomial(
                ring,
                crate::monomial::Monomial::from_exps(&exps),
                ring.field().one(),
            ));
        }
    }
    rhs = rhs.sum(&Ideal::new(ring, extra)?)?;
    CheckResult::new("path-colon", g, e, &lhs, &rhs)
}

/// Parity colon after deleting the odd edge: `G` non-bipartite, `e` an edge
/// with `G - e` bipartite. Then `I_{G-e} : g_e` equals
/// `I_{G-e} + < f_kl >` over pairs inside the `G-e` neighborhoods of the
/// endpoints, and also equals `phi(J_{(G-e)_e})`.
pub fn colon_identity_parity_deleted_edge(
    ring: &Arc<PolyRing>,
    g: &Graph,
    e: (usize, usize),
) -> Result<CheckResult> {
    let (u, v) = e;
    if g.is_bipartite() {
        return Err(Error::Precondition("graph must be non-bipartite".into()));
    }
    if !g.has_edge(u, v) {
        return Err(Error::BadEdge(u, v, "must be an edge".into()));
    }
    let minus = g.remove_edge(u, v)?;
    if !minus.is_bipartite() {
        return Err(Error::Precondition("G - e must be bipartite".into()));
    }
    let ig = binomial_edge_ideal(ring, &minus, EdgeBinomialKind::Parity)?;
    let ge = edge_binomial(ring, u, v, EdgeBinomialKind::Parity)?;
    let lhs = ig.colon_element(&ge)?;
    let rhs = ig.sum(&neighborhood_pairs_ideal(ring, &minus, u, v)?)?;
    let mut result = CheckResult::new("parity-deleted-edge-colon", g, e, &lhs, &rhs)?;
    // cross-check against the bipartite swap of the completed graph
    let (v1, v2) = minus.bipartition().expect("checked bipartite");
    let completed = minus.completion_ge(u, v)?;
    let phi_side = phi_ideal(
        &binomial_edge_ideal(ring, &completed, EdgeBinomialKind::Standard)?,
        &v1,
        &v2,
    )?;
    result.phi_cross_check = Some(lhs.equal(&phi_side)?);
    Ok(result)
}

/// Parity bridge colon: `G` bipartite, non-edge `e = {i,j}` a bridge in
/// `G + e`. Then `I_G : g_e = I_G + < f_kl >` over pairs inside `N_G(i)` and
/// `N_G(j)`.
pub fn colon_identity_parity_bridge(
    ring: &Arc<PolyRing>,
    g: &Graph,
    e: (usize, usize),
) -> Result<CheckResult> {
    let (i, j) = e;
    if !g.is_bipartite() {
        return Err(Error::Precondition("graph must be bipartite".into()));
    }
    if g.has_edge(i, j) {
        return Err(Error::BadEdge(i, j, "must be a non-edge".into()));
    }
    let plus = g.add_edge(i, j)?;
    if !plus.is_bridge(i, j)? {
        return Err(Error::BadEdge(i, j, "must be a bridge in G + e".into()));
    }
    let ig = binomial_edge_ideal(ring, g, EdgeBinomialKind::Parity)?;
    let ge = edge_binomial(ring, i, j, EdgeBinomialKind::Parity)?;
    let lhs = ig.colon_element(&ge)?;
    let rhs = ig.sum(&neighborhood_pairs_ideal(ring, g, i, j)?)?;
    CheckResult::new("parity-bridge-colon", g, e, &lhs, &rhs)
}

/// `< f_kl : k,l both in N(u) or both in N(v) >`.
fn neighborhood_pairs_ideal(
    ring: &Arc<PolyRing>,
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<Ideal> {
    let mut gens = Vec::new();
    for w in [u, v] {
        let nb = g.neighbors(w);
        for (a, &k) in nb.iter().enumerate() {
            for &l in &nb[a + 1..] {
                gens.push(edge_binomial(ring, k, l, EdgeBinomialKind::Standard)?);
            }
        }
    }
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::graph::{build_cycle, build_path, build_star, Graph};
    use crate::poly::parse_polynomial;

    fn ring(n: usize) -> Arc<PolyRing> {
        PolyRing::new(n, CoefficientField::Rationals)
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn edge_binomials_match_definitions() {
        let r = ring(2);
        let f12 = edge_binomial(&r, 1, 2, EdgeBinomialKind::Standard).unwrap();
        // monic under degrevlex means the x2*y1 term leads with +1
        assert_eq!(f12, p(&r, "x2*y1 - x1*y2"));
        assert!(
            f12 == p(&r, "x1*y2 - x2*y1") || f12 == p(&r, "x1*y2 - x2*y1").neg(),
            "value agrees with x1*y2 - x2*y1 up to sign"
        );
        let g12 = edge_binomial(&r, 1, 2, EdgeBinomialKind::Parity).unwrap();
        assert_eq!(g12, p(&r, "x1*x2 - y1*y2"));
        // order of endpoints does not matter
        assert_eq!(f12, edge_binomial(&r, 2, 1, EdgeBinomialKind::Standard).unwrap());
        assert_eq!(g12, edge_binomial(&r, 2, 1, EdgeBinomialKind::Parity).unwrap());
        assert!(edge_binomial(&r, 1, 1, EdgeBinomialKind::Standard).is_err());
    }

    #[test]
    fn edge_ideal_generator_counts() {
        let r = ring(3);
        let empty = Graph::empty(3);
        assert!(binomial_edge_ideal(&r, &empty, EdgeBinomialKind::Standard)
            .unwrap()
            .is_zero_ideal());
        let p2 = build_path(2).unwrap();
        let r2 = ring(2);
        let j = binomial_edge_ideal(&r2, &p2, EdgeBinomialKind::Standard).unwrap();
        assert_eq!(j.num_generators(), 1);
        let c3 = build_cycle(3).unwrap();
        let j3 = binomial_edge_ideal(&r, &c3, EdgeBinomialKind::Standard).unwrap();
        assert_eq!(j3.minimal_generators().unwrap().len(), 3);
    }

    #[test]
    fn phi_swaps_partition_class() {
        let r = ring(2);
        let f12 = p(&r, "x1*y2 - x2*y1");
        let v1: BTreeSet<usize> = [1].into();
        let v2: BTreeSet<usize> = [2].into();
        let image = phi_map(&f12, &v1, &v2).unwrap();
        assert_eq!(image, p(&r, "x1*x2 - y1*y2"));
        // involution
        assert_eq!(phi_map(&image, &v1, &v2).unwrap(), f12);
        // bad partition
        assert!(phi_map(&f12, &v1, &v1).is_err());
    }

    #[test]
    fn phi_maps_even_cycle_ideal_onto_parity_ideal() {
        let r = ring(4);
        let c4 = build_cycle(4).unwrap();
        let (v1, v2) = c4.bipartition().unwrap();
        let j = binomial_edge_ideal(&r, &c4, EdgeBinomialKind::Standard).unwrap();
        let i = binomial_edge_ideal(&r, &c4, EdgeBinomialKind::Parity).unwrap();
        assert!(phi_ideal(&j, &v1, &v2).unwrap().equal(&i).unwrap());
    }

    #[test]
    fn bridge_colon_examples() {
        // G = {12, 13}, e = {1,4}: the completion adds f23
        let r = ring(4);
        let g = Graph::new(4, &[(1, 2), (1, 3)]).unwrap();
        let res = colon_identity_bridge(&r, &g, (1, 4)).unwrap();
        assert!(res.equal, "lhs {:?} rhs {:?}", res.lhs_gb, res.rhs_gb);

        // two disjoint edges, e = {2,3}: nothing is added
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let res = colon_identity_bridge(&r, &g, (2, 3)).unwrap();
        assert!(res.equal);

        // leaf extension on P2
        let r3 = ring(3);
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        let res = colon_identity_bridge(&r3, &g, (2, 3)).unwrap();
        assert!(res.equal);

        // non-bridge non-edge is rejected
        let c4_minus = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(colon_identity_bridge(&r, &c4_minus, (1, 4)).is_err());
    }

    #[test]
    fn path_colon_examples() {
        // path 1-2-3, e = {1,3}: the unique path contributes x2 and y2
        let r = ring(3);
        let path3 = build_path(3).unwrap();
        let res = colon_identity_path(&r, &path3, (1, 3)).unwrap();
        assert!(res.equal);
        let jg = binomial_edge_ideal(&r, &path3, EdgeBinomialKind::Standard).unwrap();
        let f13 = edge_binomial(&r, 1, 3, EdgeBinomialKind::Standard).unwrap();
        let colon = jg.colon_element(&f13).unwrap();
        let expect = jg
            .sum(&Ideal::new(&r, vec![p(&r, "x2"), p(&r, "y2")]).unwrap())
            .unwrap();
        assert!(colon.equal(&expect).unwrap());

        // path 1-2-3-4, e = {1,4}: inner vertices 2,3 give x2*x3, y2*x3, y2*y3
        let r4 = ring(4);
        let path4 = build_path(4).unwrap();
        let res = colon_identity_path(&r4, &path4, (1, 4)).unwrap();
        assert!(res.equal);

        // bridge case degenerates to the bridge identity
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let via_path = colon_identity_path(&r4, &g, (2, 3)).unwrap();
        let via_bridge = colon_identity_bridge(&r4, &g, (2, 3)).unwrap();
        assert!(via_path.equal && via_bridge.equal);
        assert_eq!(via_path.lhs_gb, via_bridge.lhs_gb);
    }

    #[test]
    fn parity_deleted_edge_examples() {
        // C3 with any edge deleted
        let r = ring(3);
        let c3 = build_cycle(3).unwrap();
        let res = colon_identity_parity_deleted_edge(&r, &c3, (1, 2)).unwrap();
        assert!(res.equal);
        assert_eq!(res.phi_cross_check, Some(true));

        // C5 with the closing edge
        let r5 = ring(5);
        let c5 = build_cycle(5).unwrap();
        let res = colon_identity_parity_deleted_edge(&r5, &c5, (1, 5)).unwrap();
        assert!(res.equal);
        assert_eq!(res.phi_cross_check, Some(true));

        // bipartite input is rejected
        let c4 = build_cycle(4).unwrap();
        assert!(colon_identity_parity_deleted_edge(&ring(4), &c4, (1, 2)).is_err());
    }

    #[test]
    fn parity_bridge_example() {
        // star K_{1,2} plus isolated vertex 4; e = {1,4} bridges the parts
        let r = ring(4);
        let star = Graph::new(4, &[(1, 2), (1, 3)]).unwrap();
        let res = colon_identity_parity_bridge(&r, &star, (1, 4)).unwrap();
        assert!(res.equal);
        // and the added generator is exactly f23
        let ig = binomial_edge_ideal(&r, &star, EdgeBinomialKind::Parity).unwrap();
        let ge = edge_binomial(&r, 1, 4, EdgeBinomialKind::Parity).unwrap();
        let lhs = ig.colon_element(&ge).unwrap();
        let f23 = edge_binomial(&r, 2, 3, EdgeBinomialKind::Standard).unwrap();
        let rhs = ig.sum(&Ideal::new(&r, vec![f23]).unwrap()).unwrap();
        assert!(lhs.equal(&rhs).unwrap());

        let k13 = build_star(3).unwrap();
        assert!(colon_identity_parity_bridge(&ring(4), &k13, (2, 3)).is_err());
    }

    #[test]
    fn parity_colon_power_stability_with_isolated_vertex() {
        // ring on 4 vertices, triangle on {1,2,3}, colon by g14
        let r = ring(4);
        let c3 = build_cycle(3).unwrap();
        let ig = binomial_edge_ideal(&r, &c3, EdgeBinomialKind::Parity).unwrap();
        let g14 = edge_binomial(&r, 1, 4, EdgeBinomialKind::Parity).unwrap();
        assert!(ig.colon_power_stability(&g14, 3).unwrap());
    }

    #[test]
    fn standard_colon_power_stability_path() {
        let r = ring(3);
        let path3 = build_path(3).unwrap();
        let jg = binomial_edge_ideal(&r, &path3, EdgeBinomialKind::Standard).unwrap();
        let f13 = edge_binomial(&r, 1, 3, EdgeBinomialKind::Standard).unwrap();
        assert!(jg.colon_power_stability(&f13, 3).unwrap());
    }
}
