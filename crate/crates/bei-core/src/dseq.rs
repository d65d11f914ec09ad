//! d-sequence checking for (parity) edge binomials.
//!
//! A sequence `a_1..a_m` is a d-sequence when it minimally generates its
//! ideal and `(<a_0..a_i> : a_{i+1} a_j) = (<a_0..a_i> : a_j)` for all
//! `0 <= i <= m-1`, `j >= i+1`, with `a_0 = 0`. Conditions are decided by
//! reduced-basis computations; `(I : a b)` is computed as `((I : b) : a)`.
//!
//! The exhaustive ordering search memoizes every condition triple
//! `(prefix set, next element, later element)` so failed prefixes kill whole
//! ordering families, and for connected unicyclic graphs it only places
//! cycle edges last (a d-sequence ordering must close the cycle with its
//! final edge; the sweep tests confirm this empirically).

use crate::binomial::{binomial_edge_ideal, edge_binomial, EdgeBinomialKind};
use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::graph::{enumerate_unicyclic, FamilyTag, Graph, UnicyclicKind};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

/// A permutation of the edge set, the order in which binomials are taken.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceOrdering {
    pub edges: Vec<(usize, usize)>,
}

impl SequenceOrdering {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        SequenceOrdering { edges }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum Verdict {
    /// The ordering (witness) satisfies every condition.
    DSequence { ordering: Vec<(usize, usize)> },
    /// The given ordering fails at prefix length `prefix_len` against the
    /// `j`-th element (1-based); both colon ideals are kept for diagnosis.
    NotThisOrdering {
        prefix_len: usize,
        j: usize,
        colon_by_product: Vec<String>,
        colon_by_single: Vec<String>,
    },
    /// Every ordering admitted by the (complete) pruned search failed.
    NoOrderingExists,
    /// The search budget ran out before the ordering space was covered.
    Inconclusive,
}

impl Verdict {
    pub fn is_d_sequence(&self) -> bool {
        matches!(self, Verdict::DSequence { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::DSequence { .. } => "d-sequence",
            Verdict::NotThisOrdering { .. } => "not-this-ordering",
            Verdict::NoOrderingExists => "no-ordering-exists",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SearchStats {
    /// DFS placement attempts during search; 1 for a plain ordering check.
    pub orderings_tried: u64,
    /// Colon computations and basis-backed equality checks issued.
    pub gb_calls: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DSequenceReport {
    pub graph: Graph,
    pub kind: EdgeBinomialKind,
    pub verdict: Verdict,
    pub stats: SearchStats,
}

/// Shared state for condition checks over one graph.
struct ConditionCtx {
    ring: Arc<PolyRing>,
    binomials: Vec<Polynomial>,
    /// `(prefix mask, b)` -> prefix ideal colon `a_b`
    colon_cache: Mutex<HashMap<(u64, u8), Arc<Ideal>>>,
    /// `(prefix mask, a, b)` -> condition verdict
    memo: Mutex<HashMap<(u64, u8, u8), bool>>,
    gb_calls: AtomicU64,
}

impl ConditionCtx {
    fn new(g: &Graph, kind: EdgeBinomialKind, field: CoefficientField) -> Result<Self> {
        let ring = PolyRing::new(g.n(), field);
        let binomials = g
            .edges()
            .map(|(i, j)| edge_binomial(&ring, i, j, kind))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConditionCtx {
            ring,
            binomials,
            colon_cache: Mutex::new(HashMap::new()),
            memo: Mutex::new(HashMap::new()),
            gb_calls: AtomicU64::new(0),
        })
    }

    fn prefix_ideal(&self, mask: u64) -> Result<Ideal> {
        let gens: Vec<Polynomial> = self
            .binomials
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, b)| b.clone())
            .collect();
        Ideal::new(&self.ring, gens)
    }

    fn colon_by(&self, mask: u64, b: u8) -> Result<Arc<Ideal>> {
        if let Some(hit) = self.colon_cache.lock().unwrap().get(&(mask, b)) {
            return Ok(hit.clone());
        }
        let prefix = self.prefix_ideal(mask)?;
        let colon = prefix.colon_element(&self.binomials[b as usize])?;
        self.gb_calls.fetch_add(1, AtomicOrdering::Relaxed);
        let arc = Arc::new(colon);
        self.colon_cache.lock().unwrap().insert((mask, b), arc.clone());
        Ok(arc)
    }

    /// `(J_mask : a_b a_a) == (J_mask : a_b)`, using `(J:b):a` for the left
    /// side. Since `K : a` contains `K`, equality amounts to containment of
    /// the bigger side in `K = J_mask : a_b`.
    fn condition(&self, mask: u64, a: u8, b: u8) -> Result<bool> {
        if let Some(&hit) = self.memo.lock().unwrap().get(&(mask, a, b)) {
            return Ok(hit);
        }
        let kb = self.colon_by(mask, b)?;
        let kba = kb.colon_element(&self.binomials[a as usize])?;
        self.gb_calls.fetch_add(2, AtomicOrdering::Relaxed);
        let ok = kba.generators().iter().all(|g| kb.contains(g));
        self.memo.lock().unwrap().insert((mask, a, b), ok);
        Ok(ok)
    }

    /// Same check, returning both colon ideals for failure reports.
    fn condition_detailed(&self, mask: u64, a: u8, b: u8) -> Result<(bool, Vec<String>, Vec<String>)> {
        let kb = self.colon_by(mask, b)?;
        let kba = kb.colon_element(&self.binomials[a as usize])?;
        self.gb_calls.fetch_add(2, AtomicOrdering::Relaxed);
        let ok = kba.generators().iter().all(|g| kb.contains(g));
        self.memo.lock().unwrap().insert((mask, a, b), ok);
        Ok((
            ok,
            kba.groebner_basis().to_strings(),
            kb.groebner_basis().to_strings(),
        ))
    }
}

fn edge_indices(g: &Graph, ordering: &SequenceOrdering) -> Result<Vec<usize>> {
    let edges = g.edge_vec();
    if ordering.edges.len() != edges.len() {
        return Err(Error::BadOrdering);
    }
    let mut seen = vec![false; edges.len()];
    let mut out = Vec::with_capacity(edges.len());
    for &(i, j) in &ordering.edges {
        let key = if i < j { (i, j) } else { (j, i) };
        let idx = edges.binary_search(&key).map_err(|_| Error::BadOrdering)?;
        if seen[idx] {
            return Err(Error::BadOrdering);
        }
        seen[idx] = true;
        out.push(idx);
    }
    Ok(out)
}

/// Minimal generation half of the definition: the edge binomials minimally
/// generate their ideal.
fn minimal_generation_holds(
    g: &Graph,
    kind: EdgeBinomialKind,
    field: CoefficientField,
) -> Result<bool> {
    let ring = PolyRing::new(g.n().max(1), field);
    let ideal = binomial_edge_ideal(&ring, g, kind)?;
    Ok(ideal.minimal_generators()?.len() == g.num_edges())
}

/// Check one ordering against the full definition.
pub fn check_d_sequence(
    g: &Graph,
    kind: EdgeBinomialKind,
    ordering: &SequenceOrdering,
    field: CoefficientField,
) -> Result<DSequenceReport> {
    let indices = edge_indices(g, ordering)?;
    let m = indices.len();
    let mut stats = SearchStats { orderings_tried: 1, gb_calls: 0 };
    if !minimal_generation_holds(g, kind, field)? {
        return Ok(DSequenceReport {
            graph: g.clone(),
            kind,
            verdict: Verdict::NotThisOrdering {
                prefix_len: 0,
                j: 0,
                colon_by_product: vec!["minimal generation fails".into()],
                colon_by_single: vec![],
            },
            stats,
        });
    }
    let ctx = ConditionCtx::new(g, kind, field)?;
    for i in 0..m {
        let mask: u64 = indices[..i].iter().fold(0, |acc, &k| acc | 1 << k);
        let a = indices[i] as u8;
        for j in (i + 1)..=m {
            let b = indices[j - 1] as u8;
            let (ok, prod, single) = ctx.condition_detailed(mask, a, b)?;
            if !ok {
                stats.gb_calls = ctx.gb_calls.load(AtomicOrdering::Relaxed);
                return Ok(DSequenceReport {
                    graph: g.clone(),
                    kind,
                    verdict: Verdict::NotThisOrdering {
                        prefix_len: i,
                        j,
                        colon_by_product: prod,
                        colon_by_single: single,
                    },
                    stats,
                });
            }
        }
    }
    stats.gb_calls = ctx.gb_calls.load(AtomicOrdering::Relaxed);
    Ok(DSequenceReport {
        graph: g.clone(),
        kind,
        verdict: Verdict::DSequence { ordering: ordering.edges.clone() },
        stats,
    })
}

/// The family ordering: tree edges leg by leg outward from the center, the
/// cycle-closing edge last. Pendant-to-pendant graphs are walked so that the
/// two joined legs become one long leg, matching their pendant-to-center
/// reading (for two legs this is the cycle ordering).
pub fn canonical_ordering(g: &Graph) -> Result<SequenceOrdering> {
    let tag = g.family_tag().ok_or(Error::NoCanonicalOrdering)?;
    let edges = match tag {
        FamilyTag::Tm(spec) => spec.ordered_edges(),
        FamilyTag::Cycle(n) => {
            let mut e: Vec<(usize, usize)> = (1..*n).map(|i| (i, i + 1)).collect();
            e.push((1, *n));
            e
        }
        FamilyTag::Unicyclic { spec, kind, extra_edge } => match kind {
            UnicyclicKind::PendantToCenter { .. } | UnicyclicKind::CenterToInternal { .. } => {
                let mut e = spec.ordered_edges();
                e.push(*extra_edge);
                e
            }
            UnicyclicKind::PendantToPendant { legs: (a, b) } => {
                let mut e: Vec<(usize, usize)> = Vec::new();
                // long leg: center -> leg a -> joined edge -> leg b backward
                let mut walk = vec![spec.center()];
                for j in 1..=spec.legs[a - 1] + 1 {
                    walk.push(spec.leg_vertex(*a, j));
                }
                for j in (1..=spec.legs[b - 1] + 1).rev() {
                    walk.push(spec.leg_vertex(*b, j));
                }
                for w in walk.windows(2) {
                    e.push((w[0], w[1]));
                }
                for leg in 1..=spec.m() {
                    if leg == *a || leg == *b {
                        continue;
                    }
                    e.push((spec.center(), spec.leg_vertex(leg, 1)));
                    for j in 1..=spec.legs[leg - 1] {
                        e.push((spec.leg_vertex(leg, j), spec.leg_vertex(leg, j + 1)));
                    }
                }
                // closing edge back to the center
                e.push((spec.center(), spec.leg_vertex(*b, 1)));
                e
            }
        },
        _ => return Err(Error::NoCanonicalOrdering),
    };
    Ok(SequenceOrdering::new(edges))
}

/// Exhaustive ordering search. `budget` caps DFS placement attempts; when it
/// runs out before the pruned ordering space is covered the verdict is
/// `Inconclusive`.
pub fn search_d_sequence(
    g: &Graph,
    kind: EdgeBinomialKind,
    budget: u64,
    field: CoefficientField,
) -> Result<DSequenceReport> {
    let m = g.num_edges();
    if m > 8 {
        return Err(Error::InfeasibleSize(format!(
            "exhaustive search limited to 8 edges, got {m}"
        )));
    }
    let mut stats = SearchStats::default();
    if !minimal_generation_holds(g, kind, field)? {
        return Ok(DSequenceReport {
            graph: g.clone(),
            kind,
            verdict: Verdict::NoOrderingExists,
            stats,
        });
    }
    if m == 0 {
        return Ok(DSequenceReport {
            graph: g.clone(),
            kind,
            verdict: Verdict::DSequence { ordering: vec![] },
            stats,
        });
    }
    let ctx = ConditionCtx::new(g, kind, field)?;
    let edges = g.edge_vec();
    // for a connected unicyclic graph only a cycle edge may come last
    let cycle_last: Option<Vec<bool>> = if g.is_unicyclic() {
        let cyc: BTreeSet<(usize, usize)> = g.cycle_edges().into_iter().collect();
        Some(edges.iter().map(|e| cyc.contains(e)).collect())
    } else {
        None
    };

    let tried = AtomicU64::new(0);
    let exhausted_budget = AtomicBool::new(false);

    struct Search<'a> {
        ctx: &'a ConditionCtx,
        m: usize,
        cycle_last: &'a Option<Vec<bool>>,
        budget: u64,
        tried: &'a AtomicU64,
        exhausted_budget: &'a AtomicBool,
    }

    impl Search<'_> {
        fn dfs(&self, mask: u64, prefix: &mut Vec<u8>) -> Result<Option<Vec<u8>>> {
            if prefix.len() == self.m {
                return Ok(Some(prefix.clone()));
            }
            let placing_last = prefix.len() + 1 == self.m;
            for a in 0..self.m as u8 {
                if mask >> a & 1 == 1 {
                    continue;
                }
                if placing_last {
                    if let Some(cyc) = self.cycle_last {
                        if !cyc[a as usize] {
                            continue;
                        }
                    }
                }
                if self.tried.fetch_add(1, AtomicOrdering::Relaxed) >= self.budget {
                    self.exhausted_budget.store(true, AtomicOrdering::Relaxed);
                    return Ok(None);
                }
                // conditions (prefix, a, b) for b = a and every later element
                let mut ok = self.ctx.condition(mask, a, a)?;
                if ok {
                    for b in 0..self.m as u8 {
                        if b == a || mask >> b & 1 == 1 {
                            continue;
                        }
                        if !self.ctx.condition(mask, a, b)? {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                prefix.push(a);
                if let Some(found) = self.dfs(mask | 1 << a, prefix)? {
                    return Ok(Some(found));
                }
                prefix.pop();
            }
            Ok(None)
        }
    }

    let search = Search {
        ctx: &ctx,
        m,
        cycle_last: &cycle_last,
        budget,
        tried: &tried,
        exhausted_budget: &exhausted_budget,
    };
    let found = search.dfs(0, &mut Vec::new())?;

    stats.orderings_tried = tried.load(AtomicOrdering::Relaxed);
    stats.gb_calls = ctx.gb_calls.load(AtomicOrdering::Relaxed);
    let verdict = match found {
        Some(seq) => Verdict::DSequence {
            ordering: seq.into_iter().map(|k| edges[k as usize]).collect(),
        },
        None if exhausted_budget.load(AtomicOrdering::Relaxed) => Verdict::Inconclusive,
        None => Verdict::NoOrderingExists,
    };
    Ok(DSequenceReport { graph: g.clone(), kind, verdict, stats })
}

/// For a verified d-sequence `a_1..a_n` generating `I`, check
/// `((a_1..a_{i-1}) + I^s) : a_i = ((a_1..a_{i-1}) : a_i) + I^{s-1}`
/// for all `1 <= i <= n`, `2 <= s <= s_max`.
pub fn verify_pd_identity(
    g: &Graph,
    kind: EdgeBinomialKind,
    ordering: &SequenceOrdering,
    s_max: usize,
    field: CoefficientField,
) -> Result<bool> {
    let indices = edge_indices(g, ordering)?;
    let ring = PolyRing::new(g.n(), field);
    let binomials: Vec<Polynomial> = g
        .edges()
        .map(|(i, j)| edge_binomial(&ring, i, j, kind))
        .collect::<Result<Vec<_>>>()?;
    let full = Ideal::new(&ring, binomials.clone())?;
    let mut powers: Vec<Ideal> = vec![full.clone()];
    for s in 2..=s_max {
        powers.push(full.power(s)?);
    }
    for i in 1..=indices.len() {
        let prefix_gens: Vec<Polynomial> =
            indices[..i - 1].iter().map(|&k| binomials[k].clone()).collect();
        let prefix = Ideal::new(&ring, prefix_gens)?;
        let ai = &binomials[indices[i - 1]];
        let prefix_colon = prefix.colon_element(ai)?;
        for s in 2..=s_max {
            let lhs = prefix.sum(&powers[s - 1])?.colon_element(ai)?;
            let rhs = prefix_colon.sum(&powers[s - 2])?;
            if !lhs.equal(&rhs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// classification of unicyclic graphs
// ---------------------------------------------------------------------------

/// The three unicyclic shapes whose edge binomials form a d-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Form {
    /// Starlike tree plus a pendant-to-center edge.
    PendantCenter,
    /// Starlike tree plus a center-to-internal edge.
    CenterInternal,
    /// A plain cycle.
    Cycle,
}

impl Form {
    pub fn label(&self) -> &'static str {
        match self {
            Form::PendantCenter => "a",
            Form::CenterInternal => "b",
            Form::Cycle => "c",
        }
    }
}

/// All shapes the graph realizes: delete each cycle edge and test whether the
/// remaining spanning tree is starlike with the deleted edge re-attached at
/// the right spots.
pub fn form_membership(g: &Graph) -> BTreeSet<Form> {
    let mut forms = BTreeSet::new();
    if !g.is_unicyclic() {
        return forms;
    }
    if (1..=g.n()).all(|v| g.degree(v) == 2) {
        forms.insert(Form::Cycle);
        return forms;
    }
    for (u, v) in g.cycle_edges() {
        let tree = g.remove_edge(u, v).expect("cycle edge");
        let high: Vec<usize> = (1..=tree.n()).filter(|&w| tree.degree(w) >= 3).collect();
        if high.len() > 1 {
            continue;
        }
        let centers: Vec<usize> = if high.len() == 1 {
            high
        } else {
            (1..=tree.n()).filter(|&w| tree.degree(w) == 2).collect()
        };
        for c in centers {
            let role = |w: usize| -> Option<Form> {
                if w == c {
                    None
                } else if tree.degree(w) == 1 {
                    Some(Form::PendantCenter)
                } else {
                    Some(Form::CenterInternal)
                }
            };
            if u == c {
                if let Some(f) = role(v) {
                    forms.insert(f);
                }
            } else if v == c {
                if let Some(f) = role(u) {
                    forms.insert(f);
                }
            }
        }
    }
    forms
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub graph_id: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub forms: Vec<String>,
    pub standard_verdict: String,
    pub parity_verdict: String,
    pub orderings_tried: u64,
}

/// Exhaustive verdicts versus shape membership for every connected unicyclic
/// isomorphism class with at most `n_max` vertices.
pub fn classify_unicyclic(n_max: usize, field: CoefficientField) -> Result<Vec<ClassificationRow>> {
    if n_max > 7 {
        return Err(Error::BoundExceeded(n_max, 7));
    }
    let mut jobs: Vec<(usize, usize, Graph)> = Vec::new();
    for n in 3..=n_max {
        for (idx, g) in enumerate_unicyclic(n)?.into_iter().enumerate() {
            jobs.push((n, idx, g));
        }
    }
    let run = |(n, idx, g): &(usize, usize, Graph)| -> Result<ClassificationRow> {
        let budget = 5_000_000;
        let std_rep = search_d_sequence(g, EdgeBinomialKind::Standard, budget, field)?;
        let par_rep = search_d_sequence(g, EdgeBinomialKind::Parity, budget, field)?;
        Ok(ClassificationRow {
            graph_id: format!("u{}_{}", n, idx),
            n: *n,
            edges: g.edge_vec(),
            forms: form_membership(g).iter().map(|f| f.label().to_string()).collect(),
            standard_verdict: std_rep.verdict.label().to_string(),
            parity_verdict: par_rep.verdict.label().to_string(),
            orderings_tried: std_rep.stats.orderings_tried + par_rep.stats.orderings_tried,
        })
    };
    #[cfg(feature = "parallel")]
    let rows: Result<Vec<ClassificationRow>> = {
        use rayon::prelude::*;
        jobs.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Result<Vec<ClassificationRow>> = jobs.iter().map(run).collect();
    rows
}

/// CSV export of the classification table.
pub fn classification_csv(rows: &[ClassificationRow]) -> String {
    let mut out = String::from("graph_id,n,form,standard_verdict,parity_verdict,orderings_tried\n");
    for r in rows {
        let form = if r.forms.is_empty() { "-".to_string() } else { r.forms.join("+") };
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.graph_id, r.n, form, r.standard_verdict, r.parity_verdict, r.orderings_tried
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path, build_tm, build_unicyclic, TmSpec};

    const Q: CoefficientField = CoefficientField::Rationals;

    fn path_ordering(n: usize) -> SequenceOrdering {
        SequenceOrdering::new((1..n).map(|i| (i, i + 1)).collect())
    }

    #[test]
    fn path_binomials_form_a_d_sequence() {
        for n in [3, 4, 5] {
            let g = build_path(n).unwrap();
            let rep =
                check_d_sequence(&g, EdgeBinomialKind::Standard, &path_ordering(n), Q).unwrap();
            assert!(rep.verdict.is_d_sequence(), "path on {n} vertices");
        }
    }

    #[test]
    fn triangle_in_cycle_order() {
        let g = build_cycle(3).unwrap();
        let ord = SequenceOrdering::new(vec![(1, 2), (2, 3), (1, 3)]);
        let rep = check_d_sequence(&g, EdgeBinomialKind::Standard, &ord, Q).unwrap();
        assert!(rep.verdict.is_d_sequence());
    }

    #[test]
    fn six_vertex_parity_example() {
        // triangle {1,2,3} with a pendant star 4-{5,6} hanging off vertex 1;
        // the parity binomials in this order form a d-sequence over Q
        let g = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (4, 6), (1, 4)]).unwrap();
        let ord = SequenceOrdering::new(vec![(1, 2), (2, 3), (1, 3), (4, 5), (4, 6), (1, 4)]);
        let rep = check_d_sequence(&g, EdgeBinomialKind::Parity, &ord, Q).unwrap();
        assert!(rep.verdict.is_d_sequence());
        // while the standard binomials admit no ordering at all
        let std_rep =
            search_d_sequence(&g, EdgeBinomialKind::Standard, 5_000_000, Q).unwrap();
        assert!(matches!(std_rep.verdict, Verdict::NoOrderingExists));
        // and no shape matches
        assert!(form_membership(&g).is_empty());
    }

    #[test]
    fn canonical_orderings_verify() {
        // starlike tree
        let tm = build_tm(&TmSpec::new(vec![1, 0]).unwrap()).unwrap();
        let ord = canonical_ordering(&tm).unwrap();
        assert_eq!(ord.edges, vec![(1, 2), (2, 3), (1, 4)]);
        let rep = check_d_sequence(&tm, EdgeBinomialKind::Standard, &ord, Q).unwrap();
        assert!(rep.verdict.is_d_sequence());

        // pendant-to-center: tree ordering then the closing edge
        let spec = TmSpec::new(vec![1, 0]).unwrap();
        let a = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg: 1 }).unwrap();
        let ord = canonical_ordering(&a).unwrap();
        assert_eq!(*ord.edges.last().unwrap(), (1, 3));
        let rep = check_d_sequence(&a, EdgeBinomialKind::Standard, &ord, Q).unwrap();
        assert!(rep.verdict.is_d_sequence());
        let rep = check_d_sequence(&a, EdgeBinomialKind::Parity, &ord, Q).unwrap();
        assert!(rep.verdict.is_d_sequence());

        // cycle: path order then closing edge
        let c4 = build_cycle(4).unwrap();
        let ord = canonical_ordering(&c4).unwrap();
        assert_eq!(ord.edges, vec![(1, 2), (2, 3), (3, 4), (1, 4)]);
        let rep = check_d_sequence(&c4, EdgeBinomialKind::Standard, &ord, Q).unwrap();
        assert!(rep.verdict.is_d_sequence());

        // pendant-to-pendant with m = 2 is a cycle walk
        let spec_b = TmSpec::new(vec![1, 1]).unwrap();
        let b =
            build_unicyclic(&spec_b, UnicyclicKind::PendantToPendant { legs: (1, 2) }).unwrap();
        let ord = canonical_ordering(&b).unwrap();
        let rep = check_d_sequence(&b, EdgeBinomialKind::Standard, &ord, Q).unwrap();
        assert!(rep.verdict.is_d_sequence());
    }

    #[test]
    fn search_finds_witness_for_triangle_plus_pendant() {
        let spec = TmSpec::new(vec![1, 0]).unwrap();
        let g = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg: 1 }).unwrap();
        let rep = search_d_sequence(&g, EdgeBinomialKind::Standard, 5_000_000, Q).unwrap();
        let Verdict::DSequence { ordering } = &rep.verdict else {
            panic!("expected witness, got {:?}", rep.verdict)
        };
        // re-running the witness reproduces the verdict
        let again = check_d_sequence(
            &g,
            EdgeBinomialKind::Standard,
            &SequenceOrdering::new(ordering.clone()),
            Q,
        )
        .unwrap();
        assert!(again.verdict.is_d_sequence());
    }

    #[test]
    fn disjoint_stars_admit_no_ordering() {
        // two disjoint 3-stars: 8 vertices, 6 edges
        let g = Graph::new(8, &[(1, 2), (1, 3), (1, 4), (5, 6), (5, 7), (5, 8)]).unwrap();
        let rep = search_d_sequence(&g, EdgeBinomialKind::Standard, 5_000_000, Q).unwrap();
        assert!(matches!(rep.verdict, Verdict::NoOrderingExists));
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let g = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let rep = search_d_sequence(&g, EdgeBinomialKind::Standard, 2, Q).unwrap();
        assert!(matches!(rep.verdict, Verdict::Inconclusive));
    }

    #[test]
    fn off_cycle_branch_vertex_blocks_every_ordering() {
        // triangle {1,2,3} with a path 3-4 and leaves 5,6 at vertex 4
        let g = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let rep = search_d_sequence(&g, EdgeBinomialKind::Standard, 5_000_000, Q).unwrap();
        assert!(matches!(rep.verdict, Verdict::NoOrderingExists));
        assert!(form_membership(&g).is_empty());
    }

    #[test]
    fn pd_identity_on_small_families() {
        let p3 = build_path(3).unwrap();
        assert!(verify_pd_identity(
            &p3,
            EdgeBinomialKind::Standard,
            &path_ordering(3),
            3,
            Q
        )
        .unwrap());
        let c3 = build_cycle(3).unwrap();
        let ord = canonical_ordering(&c3).unwrap();
        assert!(verify_pd_identity(&c3, EdgeBinomialKind::Standard, &ord, 2, Q).unwrap());
    }

    #[test]
    fn form_membership_examples() {
        // cycles
        for n in [3, 4, 5] {
            let forms = form_membership(&build_cycle(n).unwrap());
            assert_eq!(forms.into_iter().collect::<Vec<_>>(), vec![Form::Cycle]);
        }
        // triangle plus pendant: pendant-to-center shape via some cycle edge
        let g = Graph::new(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert!(form_membership(&g).contains(&Form::PendantCenter));
        // center-to-internal example on 5 vertices
        let spec = TmSpec::new(vec![2, 0]).unwrap();
        let c = build_unicyclic(&spec, UnicyclicKind::CenterToInternal { leg: 1, depth: 1 })
            .unwrap();
        assert!(form_membership(&c).contains(&Form::CenterInternal));
        // trees and disconnected graphs have no unicyclic shape
        assert!(form_membership(&build_path(4).unwrap()).is_empty());
    }

    #[test]
    fn check_rejects_bad_orderings() {
        let g = build_path(3).unwrap();
        let bad = SequenceOrdering::new(vec![(1, 2)]);
        assert!(check_d_sequence(&g, EdgeBinomialKind::Standard, &bad, Q).is_err());
        let dup = SequenceOrdering::new(vec![(1, 2), (1, 2)]);
        assert!(check_d_sequence(&g, EdgeBinomialKind::Standard, &dup, Q).is_err());
    }
}
