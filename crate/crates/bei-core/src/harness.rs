//! Batch verification of the named regularity and d-sequence claims on a
//! pinned desk-scale instance corpus.
//!
//! Each claim id maps to a deterministic instance list; every instance row
//! records the predicted value, the computed value with its certification
//! flag, and agreement. Boolean checks (identity sweeps, classification
//! agreement) are encoded as predicted 1 against computed 0/1.

use crate::binomial::{
    binomial_edge_ideal, colon_identity_bridge, colon_identity_parity_bridge,
    colon_identity_parity_deleted_edge, colon_identity_path, edge_binomial, phi_ideal,
    EdgeBinomialKind,
};
#[cfg(feature = "cache")]
use crate::cache::{operation_key, Cache};
use crate::dseq::{
    canonical_ordering, check_d_sequence, form_membership, search_d_sequence,
    verify_pd_identity, Verdict,
};
use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::graph::{
    build_complete, build_cycle, build_path, build_star, build_tm, build_unicyclic,
    enumerate_graphs, enumerate_unicyclic, Graph, TmSpec, UnicyclicKind,
};
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::resolution::{
    gluing_additivity_check, regularity, PathSpec, ProductConfig,
    RegularityResult,
};
use crate::ring::PolyRing;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Claim ids accepted by [`verify_theorem`].
pub const REGISTRY: &[&str] = &[
    "Thm0.1-classification",
    "Thm0.2(i)-J",
    "Thm0.2(i)-I",
    "Thm0.2(ii)-J",
    "Thm0.2(ii)-I",
    "Cycle-J",
    "Cycle-I",
    "Tm-powers",
    "ParityProduct",
    "Gluing",
    "ColonIdentities",
    "PDIdentity",
    "FlowerFree",
];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremCheckResult {
    pub theorem_id: String,
    pub instance: String,
    pub predicted: i64,
    pub computed: RegularityResult,
    pub agree: bool,
    pub runtime_ms: u128,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub field: CoefficientField,
    pub order: MonomialOrder,
    /// Inclusive power range for `s`-indexed claims.
    pub s_range: (usize, usize),
    /// Inclusive size filter; the meaning is claim-specific (cycle length,
    /// vertex count, or path-edge count).
    pub n_range: Option<(usize, usize)>,
    /// Substring filter on instance labels.
    pub instance_filter: Option<String>,
    #[cfg(feature = "cache")]
    pub cache: Option<Arc<Cache>>,
    /// Added to every prediction; the exit-code mutation hook.
    pub prediction_offset: i64,
}

impl VerifyOptions {
    pub fn new(field: CoefficientField) -> Self {
        VerifyOptions {
            field,
            order: MonomialOrder::DegRevLex,
            s_range: (1, 2),
            n_range: None,
            instance_filter: None,
            #[cfg(feature = "cache")]
            cache: None,
            prediction_offset: 0,
        }
    }

    fn s_values(&self) -> Vec<usize> {
        (self.s_range.0..=self.s_range.1).collect()
    }

    fn n_allows(&self, n: usize) -> bool {
        self.n_range.map_or(true, |(lo, hi)| lo <= n && n <= hi)
    }

    fn ring(&self, n: usize) -> Arc<PolyRing> {
        PolyRing::with_order(n, self.field, self.order)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub toolkit_version: String,
    pub theorem_id: String,
    pub field: String,
    pub order: String,
    pub instances: Vec<String>,
    pub cache_hits: u64,
    pub cache_misses: u64,
    pub rows: usize,
    pub disagreements: usize,
    pub uncertified: usize,
}

pub fn run_manifest(id: &str, opts: &VerifyOptions, rows: &[TheoremCheckResult]) -> RunManifest {
    #[cfg(feature = "cache")]
    let (hits, misses) = opts
        .cache
        .as_ref()
        .map(|c| (c.hits(), c.misses()))
        .unwrap_or((0, 0));
    #[cfg(not(feature = "cache"))]
    let (hits, misses) = (0, 0);
    RunManifest {
        toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
        theorem_id: id.to_string(),
        field: opts.field.to_string(),
        order: opts.order.to_string(),
        instances: rows.iter().map(|r| r.instance.clone()).collect(),
        cache_hits: hits,
        cache_misses: misses,
        rows: rows.len(),
        disagreements: rows.iter().filter(|r| !r.agree).count(),
        uncertified: rows.iter().filter(|r| !r.computed.certified).count(),
    }
}

// ---------------------------------------------------------------------------
// jobs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Job {
    /// reg S/((prefix) + I^s) against a closed formula; prefix 0 is the
    /// plain power.
    Regularity {
        graph: Graph,
        kind: EdgeBinomialKind,
        s: usize,
        prefix: usize,
    },
    /// reg S/(I_H * J_Km) = 2 + n
    Product { cfg: ProductConfig },
    /// additivity of regularity under free-vertex gluing
    Gluing {
        parts: Vec<Graph>,
        joins: Vec<((usize, usize), (usize, usize))>,
    },
    /// every colon identity that applies to this graph holds
    ColonSweep { graph: Graph },
    /// the bipartite swap maps the standard ideal onto the parity ideal
    PhiCheck { graph: Graph },
    /// `I : g == I : g^k` for k <= 3
    ColonPowerStability { graph: Graph, kind: EdgeBinomialKind, gens: Vec<String> },
    /// the d-sequence power-colon identity for s <= s_max
    PdIdentity { graph: Graph, kind: EdgeBinomialKind, s_max: usize },
    /// exhaustive search verdict matches shape membership (standard)
    ClassifyStandard { graph: Graph },
    /// shape members also carry a parity d-sequence
    ClassifyParity { graph: Graph },
    /// the canonical family ordering verifies as a d-sequence
    CanonicalOrdering { graph: Graph, kind: EdgeBinomialKind },
}

struct Instance {
    label: String,
    predicted: i64,
    job: Job,
}

fn bool_result(ok: bool) -> RegularityResult {
    RegularityResult { value: ok as i64, certified: true, cap_used: None }
}

impl Job {
    fn run(&self, opts: &VerifyOptions) -> Result<RegularityResult> {
        match self {
            Job::Regularity { graph, kind, s, prefix } => {
                let ring = opts.ring(graph.n());
                let full = binomial_edge_ideal(&ring, graph, *kind)?;
                let ideal = if *prefix == 0 {
                    full.power(*s)?
                } else {
                    let ordering = canonical_ordering(graph)?;
                    let prefix_gens = ordering.edges[..*prefix]
                        .iter()
                        .map(|&(i, j)| edge_binomial(&ring, i, j, *kind))
                        .collect::<Result<Vec<_>>>()?;
                    Ideal::new(&ring, prefix_gens)?.sum(&full.power(*s)?)?
                };
                self.cached_regularity(opts, &ideal)
            }
            Job::Product { cfg } => {
                let (h, km, total) = cfg.build()?;
                let ring = opts.ring(total);
                let ih = binomial_edge_ideal(&ring, &h, EdgeBinomialKind::Parity)?;
                let jk = binomial_edge_ideal(&ring, &km, EdgeBinomialKind::Standard)?;
                self.cached_regularity(opts, &ih.product(&jk)?)
            }
            Job::Gluing { parts, joins } => {
                Ok(bool_result(gluing_additivity_check(parts, joins, opts.field)?))
            }
            Job::ColonSweep { graph } => Ok(bool_result(colon_sweep_graph(graph, opts)?)),
            Job::PhiCheck { graph } => {
                let ring = opts.ring(graph.n());
                let (v1, v2) = graph
                    .bipartition()
                    .ok_or_else(|| Error::Precondition("graph must be bipartite".into()))?;
                let j = binomial_edge_ideal(&ring, graph, EdgeBinomialKind::Standard)?;
                let i = binomial_edge_ideal(&ring, graph, EdgeBinomialKind::Parity)?;
                Ok(bool_result(phi_ideal(&j, &v1, &v2)?.equal(&i)?))
            }
            Job::ColonPowerStability { graph, kind, gens } => {
                let ring = opts.ring(graph.n());
                let ideal = binomial_edge_ideal(&ring, graph, *kind)?;
                let mut ok = true;
                for text in gens {
                    let g = crate::poly::parse_polynomial(&ring, text)?;
                    ok &= ideal.colon_power_stability(&g, 3)?;
                }
                Ok(bool_result(ok))
            }
            Job::PdIdentity { graph, kind, s_max } => {
                let ordering = canonical_ordering(graph)?;
                let check = check_d_sequence(graph, *kind, &ordering, opts.field)?;
                if !check.verdict.is_d_sequence() {
                    return Ok(bool_result(false));
                }
                Ok(bool_result(verify_pd_identity(
                    graph, *kind, &ordering, *s_max, opts.field,
                )?))
            }
            Job::ClassifyStandard { graph } => {
                let in_form = !form_membership(graph).is_empty();
                let rep =
                    search_d_sequence(graph, EdgeBinomialKind::Standard, 5_000_000, opts.field)?;
                let verdict = match rep.verdict {
                    Verdict::DSequence { .. } => true,
                    Verdict::NoOrderingExists => false,
                    _ => return Ok(RegularityResult { value: -1, certified: false, cap_used: None }),
                };
                Ok(bool_result(verdict == in_form))
            }
            Job::ClassifyParity { graph } => {
                let rep =
                    search_d_sequence(graph, EdgeBinomialKind::Parity, 5_000_000, opts.field)?;
                Ok(bool_result(rep.verdict.is_d_sequence()))
            }
            Job::CanonicalOrdering { graph, kind } => {
                let ordering = canonical_ordering(graph)?;
                let rep = check_d_sequence(graph, *kind, &ordering, opts.field)?;
                Ok(bool_result(rep.verdict.is_d_sequence()))
            }
        }
    }

    #[allow(unused_variables)]
    fn cached_regularity(&self, opts: &VerifyOptions, ideal: &Ideal) -> Result<RegularityResult> {
        #[cfg(feature = "cache")]
        if let Some(cache) = &opts.cache {
            let gens: Vec<String> =
                ideal.generators().iter().map(|g| g.to_string()).collect();
            let key = operation_key("regularity", &ideal.ring().descriptor(), &gens, "");
            return cache.get_or_compute(&key, || regularity(ideal));
        }
        regularity(ideal)
    }
}

/// All applicable colon identities on one graph, over every eligible edge or
/// non-edge.
fn colon_sweep_graph(g: &Graph, opts: &VerifyOptions) -> Result<bool> {
    let ring = opts.ring(g.n());
    let mut all = true;
    for i in 1..=g.n() {
        for j in (i + 1)..=g.n() {
            if g.has_edge(i, j) {
                // deleted-edge parity identity
                if !g.is_bipartite() && g.remove_edge(i, j)?.is_bipartite() {
                    all &= colon_identity_parity_deleted_edge(&ring, g, (i, j))?.equal;
                    if let Some(false) =
                        colon_identity_parity_deleted_edge(&ring, g, (i, j))?.phi_cross_check
                    {
                        all = false;
                    }
                }
            } else {
                all &= colon_identity_path(&ring, g, (i, j))?.equal;
                if g.add_edge(i, j)?.is_bridge(i, j)? {
                    all &= colon_identity_bridge(&ring, g, (i, j))?.equal;
                    if g.is_bipartite() {
                        all &= colon_identity_parity_bridge(&ring, g, (i, j))?.equal;
                    }
                }
            }
            if !all {
                return Ok(false);
            }
        }
    }
    Ok(all)
}

// ---------------------------------------------------------------------------
// instance corpora
// ---------------------------------------------------------------------------

/// Starlike-tree leg profiles (s-values, descending) with at most
/// `max_vertices` vertices.
pub fn tm_specs(max_vertices: usize) -> Vec<TmSpec> {
    let mut out = Vec::new();
    // partitions of the edge count into m >= 2 leg lengths (each >= 1)
    fn partitions(total: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            if acc.len() >= 2 {
                out.push(acc.clone());
            }
            return;
        }
        for part in (1..=max_part.min(total)).rev() {
            acc.push(part);
            partitions(total - part, part, acc, out);
            acc.pop();
        }
    }
    for edges in 2..max_vertices {
        if edges + 1 > max_vertices {
            continue;
        }
        let mut parts = Vec::new();
        partitions(edges, edges, &mut Vec::new(), &mut parts);
        for lengths in parts {
            let legs: Vec<usize> = lengths.iter().map(|l| l - 1).collect();
            out.push(TmSpec::new(legs).expect("m >= 2"));
        }
    }
    out
}

/// Pendant-to-center instances up to isomorphism: `(spec, leg)` for one leg
/// per distinct leg length with `s >= 1`.
pub fn family_a_instances(max_vertices: usize) -> Vec<(TmSpec, usize)> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for spec in tm_specs(max_vertices) {
        let mut values = BTreeSet::new();
        for (idx, &s) in spec.legs.iter().enumerate() {
            if s >= 1 && values.insert(s) {
                let g = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg: idx + 1 })
                    .expect("valid instance");
                if seen.insert(g.canonical_mask()) {
                    out.push((spec.clone(), idx + 1));
                }
            }
        }
    }
    out
}

/// Center-to-internal instances up to isomorphism: `(spec, leg, depth)`.
pub fn family_c_instances(max_vertices: usize) -> Vec<(TmSpec, usize, usize)> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for spec in tm_specs(max_vertices) {
        let mut values = BTreeSet::new();
        for (idx, &s) in spec.legs.iter().enumerate() {
            if s < 2 || !values.insert(s) {
                continue;
            }
            for depth in 1..s {
                let g = build_unicyclic(
                    &spec,
                    UnicyclicKind::CenterToInternal { leg: idx + 1, depth },
                )
                .expect("valid instance");
                if seen.insert(g.canonical_mask()) {
                    out.push((spec.clone(), idx + 1, depth));
                }
            }
        }
    }
    out
}

/// Pendant-to-pendant instances up to isomorphism: `(spec, leg_a, leg_b)`.
pub fn family_b_instances(max_vertices: usize) -> Vec<(TmSpec, usize, usize)> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for spec in tm_specs(max_vertices) {
        let mut pairs = BTreeSet::new();
        for a in 1..=spec.m() {
            for b in (a + 1)..=spec.m() {
                let key = (
                    spec.legs[a - 1].min(spec.legs[b - 1]),
                    spec.legs[a - 1].max(spec.legs[b - 1]),
                );
                if !pairs.insert(key) {
                    continue;
                }
                let g = build_unicyclic(&spec, UnicyclicKind::PendantToPendant {
                    legs: (a, b),
                })
                .expect("valid instance");
                if seen.insert(g.canonical_mask()) {
                    out.push((spec.clone(), a, b));
                }
            }
        }
    }
    out
}

fn spec_label(spec: &TmSpec) -> String {
    let legs: Vec<String> = spec.legs.iter().map(|s| s.to_string()).collect();
    format!("s=({})", legs.join(","))
}

/// Distinct starlike trees (as graphs) with at most `max_vertices` vertices.
fn tm_tree_instances(max_vertices: usize) -> Vec<(TmSpec, Graph)> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for spec in tm_specs(max_vertices) {
        let g = build_tm(&spec).expect("valid spec");
        if seen.insert(g.canonical_mask()) {
            out.push((spec, g));
        }
    }
    out
}

// deterministic xorshift for the pinned random corpus
struct Xorshift(u64);

impl Xorshift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// The pinned 50-instance corpus for colon-power stability: random small
/// graphs with random colon elements, reproducible across runs.
fn colon_power_corpus() -> Vec<(Graph, EdgeBinomialKind, Vec<String>)> {
    let mut rng = Xorshift(0x5eed_cafe_f00d_1234);
    let mut out = Vec::new();
    while out.len() < 50 {
        let n = 3 + rng.below(2) as usize; // 3 or 4 vertices
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.below(100) < 55 {
                    edges.push((i, j));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let g = Graph::new(n, &edges).expect("valid");
        let kind = if rng.below(2) == 0 {
            EdgeBinomialKind::Standard
        } else {
            EdgeBinomialKind::Parity
        };
        // colon elements: an edge binomial of a random pair plus a random
        // small quadratic
        let (a, b) = loop {
            let a = 1 + rng.below(n as u64) as usize;
            let b = 1 + rng.below(n as u64) as usize;
            if a != b {
                break (a.min(b), a.max(b));
            }
        };
        let bin = if rng.below(2) == 0 {
            format!("x{a}*y{b} - x{b}*y{a}")
        } else {
            format!("x{a}*x{b} - y{a}*y{b}")
        };
        let c1 = 1 + rng.below(3);
        let c2 = 1 + rng.below(3);
        let extra = format!("{c1}*x{a}*y{a} + {c2}*y{b}^2");
        out.push((g, kind, vec![bin, extra]));
    }
    out
}

// ---------------------------------------------------------------------------
// claim -> instance lists
// ---------------------------------------------------------------------------

fn regularity_instance(
    label: String,
    g: Graph,
    kind: EdgeBinomialKind,
    s: usize,
    prefix: usize,
    predicted: i64,
) -> Instance {
    Instance {
        label,
        predicted,
        job: Job::Regularity { graph: g, kind, s, prefix },
    }
}

fn instances_for(id: &str, opts: &VerifyOptions) -> Result<Vec<Instance>> {
    let s_values = opts.s_values();
    let mut out: Vec<Instance> = Vec::new();
    match id {
        "Cycle-J" => {
            for n in 3..=5 {
                if !opts.n_allows(n) {
                    continue;
                }
                let g = build_cycle(n)?;
                for &s in &s_values {
                    let predicted = 2 * s as i64 + n as i64 - 4;
                    out.push(regularity_instance(
                        format!("C{n} standard s={s}"),
                        g.clone(),
                        EdgeBinomialKind::Standard,
                        s,
                        0,
                        predicted,
                    ));
                }
            }
        }
        "Cycle-I" => {
            for (n, s) in [(3usize, 1usize), (3, 2), (5, 1)] {
                if !opts.n_allows(n) || s < opts.s_range.0 || s > opts.s_range.1 {
                    continue;
                }
                let g = build_cycle(n)?;
                let predicted = 2 * s as i64 + n as i64 - 2;
                out.push(regularity_instance(
                    format!("C{n} parity s={s}"),
                    g,
                    EdgeBinomialKind::Parity,
                    s,
                    0,
                    predicted,
                ));
            }
        }
        "Tm-powers" => {
            for (spec, g) in tm_tree_instances(6) {
                if !opts.n_allows(g.n()) {
                    continue;
                }
                let i_g = g.internal_vertex_count() as i64;
                for &s in &s_values {
                    let predicted = 2 * s as i64 + i_g - 1;
                    out.push(regularity_instance(
                        format!("tree {} n={} s={s}", spec_label(&spec), g.n()),
                        g.clone(),
                        EdgeBinomialKind::Standard,
                        s,
                        0,
                        predicted,
                    ));
                }
            }
        }
        "Thm0.2(i)-J" | "Thm0.2(i)-I" => {
            let parity = id.ends_with("-I");
            let kind = if parity { EdgeBinomialKind::Parity } else { EdgeBinomialKind::Standard };
            for (spec, leg) in family_a_instances(6) {
                let g = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg })?;
                if !opts.n_allows(g.n()) {
                    continue;
                }
                let girth = g.girth().expect("unicyclic");
                let odd = girth % 2 == 1;
                if parity && !odd {
                    continue;
                }
                let i_g = g.internal_vertex_count() as i64;
                // prefixes: 0 for every instance, plus the full prefix sweep
                // on the pinned smallest instance
                let full_sweep = spec.legs == vec![1, 0];
                let prefixes: Vec<usize> =
                    if full_sweep { (0..g.num_edges()).collect() } else { vec![0] };
                for &s in &s_values {
                    let predicted = if parity {
                        if girth == 3 { 2 * s as i64 + i_g } else { 2 * s as i64 + i_g - 2 }
                    } else if girth == 3 {
                        2 * s as i64 + i_g - 1
                    } else {
                        2 * s as i64 + i_g - 3
                    };
                    for &prefix in &prefixes {
                        out.push(regularity_instance(
                            format!(
                                "pendant-center {} leg={leg} girth={girth} {} s={s} prefix={prefix}",
                                spec_label(&spec),
                                kind.label(),
                            ),
                            g.clone(),
                            kind,
                            s,
                            prefix,
                            predicted,
                        ));
                    }
                }
            }
        }
        "Thm0.2(ii)-J" | "Thm0.2(ii)-I" => {
            let parity = id.ends_with("-I");
            let kind = if parity { EdgeBinomialKind::Parity } else { EdgeBinomialKind::Standard };
            for (spec, leg, depth) in family_c_instances(6) {
                let g =
                    build_unicyclic(&spec, UnicyclicKind::CenterToInternal { leg, depth })?;
                if !opts.n_allows(g.n()) {
                    continue;
                }
                let girth = g.girth().expect("unicyclic");
                let odd = girth % 2 == 1;
                if parity && !odd {
                    continue;
                }
                let i_g = g.internal_vertex_count() as i64;
                let full_sweep = spec.legs == vec![2, 0];
                let prefixes: Vec<usize> =
                    if full_sweep { (0..g.num_edges()).collect() } else { vec![0] };
                for &s in &s_values {
                    let predicted = if parity {
                        // odd girth: 2s + i(G) - 1 for girth 3, 2s + i(G) - 2
                        // for odd girth >= 5, every s >= 1
                        if girth == 3 { 2 * s as i64 + i_g - 1 } else { 2 * s as i64 + i_g - 2 }
                    } else if s >= 2 {
                        if girth == 3 { 2 * s as i64 + i_g - 1 } else { 2 * s as i64 + i_g - 2 }
                    } else {
                        // s = 1: the single-ideal values
                        if girth == 3 { i_g + 1 } else { i_g - 1 }
                    };
                    for &prefix in &prefixes {
                        // the s = 1 prefix rows collapse to J_G itself
                        out.push(regularity_instance(
                            format!(
                                "center-internal {} leg={leg} depth={depth} girth={girth} {} s={s} prefix={prefix}",
                                spec_label(&spec),
                                kind.label(),
                            ),
                            g.clone(),
                            kind,
                            s,
                            prefix,
                            predicted,
                        ));
                    }
                }
            }
        }
        "ParityProduct" => {
            let configs: Vec<(&str, ProductConfig)> = vec![
                ("P2@K2", ProductConfig { m: 2, paths: vec![PathSpec { edges: 1, attach: Some(1) }] }),
                ("P2|K2", ProductConfig { m: 2, paths: vec![PathSpec { edges: 1, attach: None }] }),
                ("P2@K3", ProductConfig { m: 3, paths: vec![PathSpec { edges: 1, attach: Some(1) }] }),
                ("P3@K2", ProductConfig { m: 2, paths: vec![PathSpec { edges: 2, attach: Some(1) }] }),
                (
                    "P2@K2+P2@K2",
                    ProductConfig {
                        m: 2,
                        paths: vec![
                            PathSpec { edges: 1, attach: Some(1) },
                            PathSpec { edges: 1, attach: Some(2) },
                        ],
                    },
                ),
                ("P3@K3", ProductConfig { m: 3, paths: vec![PathSpec { edges: 2, attach: Some(1) }] }),
                ("P4@K2", ProductConfig { m: 2, paths: vec![PathSpec { edges: 3, attach: Some(1) }] }),
                (
                    "P3@K2+P2@K2",
                    ProductConfig {
                        m: 2,
                        paths: vec![
                            PathSpec { edges: 2, attach: Some(1) },
                            PathSpec { edges: 1, attach: Some(2) },
                        ],
                    },
                ),
                (
                    "P2x3@K3",
                    ProductConfig {
                        m: 3,
                        paths: vec![
                            PathSpec { edges: 1, attach: Some(1) },
                            PathSpec { edges: 1, attach: Some(2) },
                            PathSpec { edges: 1, attach: Some(3) },
                        ],
                    },
                ),
                ("P4@K3", ProductConfig { m: 3, paths: vec![PathSpec { edges: 3, attach: Some(1) }] }),
            ];
            for (name, cfg) in configs {
                let n = cfg.total_path_edges();
                if !opts.n_allows(n) {
                    continue;
                }
                let predicted = 2 + n as i64;
                out.push(Instance {
                    label: format!("{name} n={n} m={}", cfg.m),
                    predicted,
                    job: Job::Product { cfg },
                });
            }
        }
        "Gluing" => {
            let p3 = build_path(3)?;
            let p4 = build_path(4)?;
            let p2 = build_path(2)?;
            let k3 = build_complete(3)?;
            let k13 = build_star(3)?;
            let configs: Vec<(&str, Vec<Graph>, Vec<((usize, usize), (usize, usize))>)> = vec![
                ("P3+P3", vec![p3.clone(), p3.clone()], vec![((0, 3), (1, 1))]),
                ("K3+P2", vec![k3.clone(), p2.clone()], vec![((0, 1), (1, 1))]),
                ("K3+K3", vec![k3.clone(), k3.clone()], vec![((0, 1), (1, 1))]),
                ("K13+P3", vec![k13.clone(), p3.clone()], vec![((0, 2), (1, 1))]),
                ("P4+P2", vec![p4.clone(), p2.clone()], vec![((0, 4), (1, 1))]),
                ("single", vec![p4.clone()], vec![]),
            ];
            for (name, parts, joins) in configs {
                if !opts.n_allows(parts.iter().map(|g| g.n()).sum::<usize>()) {
                    continue;
                }
                out.push(Instance {
                    label: format!("glue {name}"),
                    predicted: 1,
                    job: Job::Gluing { parts, joins },
                });
            }
        }
        "ColonIdentities" => {
            let max_n = opts.n_range.map(|(_, hi)| hi).unwrap_or(5);
            for n in 1..=max_n.min(6) {
                if !opts.n_allows(n) {
                    continue;
                }
                for (idx, g) in enumerate_graphs(n)?.into_iter().enumerate() {
                    out.push(Instance {
                        label: format!("colon-sweep g{n}_{idx} |E|={}", g.num_edges()),
                        predicted: 1,
                        job: Job::ColonSweep { graph: g.clone() },
                    });
                    if g.is_bipartite() && g.num_edges() > 0 {
                        out.push(Instance {
                            label: format!("phi g{n}_{idx} |E|={}", g.num_edges()),
                            predicted: 1,
                            job: Job::PhiCheck { graph: g },
                        });
                    }
                }
            }
            for (idx, (g, kind, gens)) in colon_power_corpus().into_iter().enumerate() {
                out.push(Instance {
                    label: format!("colon-power r{idx} {} n={}", kind.label(), g.n()),
                    predicted: 1,
                    job: Job::ColonPowerStability { graph: g, kind, gens },
                });
            }
        }
        "PDIdentity" => {
            let mut entries: Vec<(String, Graph, EdgeBinomialKind, usize)> = Vec::new();
            let spec_a = TmSpec::new(vec![1, 0])?;
            let fam_a = build_unicyclic(&spec_a, UnicyclicKind::PendantToCenter { leg: 1 })?;
            let spec_c = TmSpec::new(vec![2, 0])?;
            let fam_c =
                build_unicyclic(&spec_c, UnicyclicKind::CenterToInternal { leg: 1, depth: 1 })?;
            for (name, g) in [
                ("P3", build_path(3)?),
                ("P4", build_path(4)?),
                ("K13", build_tm(&TmSpec::new(vec![0, 0, 0])?)?),
                ("C3", build_cycle(3)?),
                ("C4", build_cycle(4)?),
                ("pendant-center-4v", fam_a),
                ("center-internal-5v", fam_c),
            ] {
                entries.push((format!("{name} standard"), g.clone(), EdgeBinomialKind::Standard, 3));
                let odd = g.odd_girth();
                if odd.is_none() || odd == Some(3) {
                    entries.push((format!("{name} parity"), g, EdgeBinomialKind::Parity, 3));
                }
            }
            for (label, g, kind, s_max) in entries {
                if !opts.n_allows(g.n()) {
                    continue;
                }
                out.push(Instance {
                    label: format!("pd {label}"),
                    predicted: 1,
                    job: Job::PdIdentity { graph: g, kind, s_max },
                });
            }
        }
        "Thm0.1-classification" => {
            let max_n = opts.n_range.map(|(_, hi)| hi).unwrap_or(6).min(6);
            for n in 3..=max_n {
                if !opts.n_allows(n) {
                    continue;
                }
                for (idx, g) in enumerate_unicyclic(n)?.into_iter().enumerate() {
                    let forms = form_membership(&g);
                    out.push(Instance {
                        label: format!("classify u{n}_{idx} standard"),
                        predicted: 1,
                        job: Job::ClassifyStandard { graph: g.clone() },
                    });
                    if !forms.is_empty() {
                        out.push(Instance {
                            label: format!("classify u{n}_{idx} parity"),
                            predicted: 1,
                            job: Job::ClassifyParity { graph: g },
                        });
                    }
                }
            }
            // canonical orderings on every family instance with <= 8 edges
            let mut family: Vec<(String, Graph)> = Vec::new();
            for (spec, leg) in family_a_instances(8) {
                let g = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg })?;
                family.push((format!("a {} leg={leg}", spec_label(&spec)), g));
            }
            for (spec, a, b) in family_b_instances(8) {
                let g = build_unicyclic(&spec, UnicyclicKind::PendantToPendant { legs: (a, b) })?;
                family.push((format!("b {} legs={a},{b}", spec_label(&spec)), g));
            }
            for (spec, leg, depth) in family_c_instances(8) {
                let g =
                    build_unicyclic(&spec, UnicyclicKind::CenterToInternal { leg, depth })?;
                family.push((format!("c {} leg={leg} depth={depth}", spec_label(&spec)), g));
            }
            for n in 3..=8usize {
                if opts.n_range.is_some() && !opts.n_allows(n) {
                    continue;
                }
                for (label, g) in family.iter().filter(|(_, g)| g.n() == n) {
                    for kind in [EdgeBinomialKind::Standard, EdgeBinomialKind::Parity] {
                        out.push(Instance {
                            label: format!("canonical {label} {}", kind.label()),
                            predicted: 1,
                            job: Job::CanonicalOrdering { graph: g.clone(), kind },
                        });
                    }
                }
            }
        }
        "FlowerFree" => {
            let triangle_pendant = Graph::new(4, &[(1, 2), (2, 3), (1, 3), (3, 4)])?;
            let bowtie = Graph::new(5, &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])?;
            let k4 = build_complete(4)?;
            let k3_tail = Graph::new(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])?;
            for (name, g) in [
                ("triangle+pendant", triangle_pendant),
                ("P5", build_path(5)?),
                ("bowtie", bowtie),
                ("K4", k4),
                ("K13", build_star(3)?),
                ("triangle+P3-tail", k3_tail),
            ] {
                if !opts.n_allows(g.n()) {
                    continue;
                }
                let predicted = g.internal_vertex_count() as i64 + 1;
                out.push(regularity_instance(
                    format!("flower-free {name}"),
                    g,
                    EdgeBinomialKind::Standard,
                    1,
                    0,
                    predicted,
                ));
            }
        }
        other => return Err(Error::UnknownTheorem(other.to_string())),
    }
    if let Some(filter) = &opts.instance_filter {
        out.retain(|inst| inst.label.contains(filter.as_str()));
    }
    Ok(out)
}

/// Run every instance of a claim and report agreement rows.
pub fn verify_theorem(id: &str, opts: &VerifyOptions) -> Result<Vec<TheoremCheckResult>> {
    let instances = instances_for(id, opts)?;
    let run_one = |inst: &Instance| -> Result<TheoremCheckResult> {
        let start = std::time::Instant::now();
        let computed = inst.job.run(opts)?;
        let predicted = inst.predicted + opts.prediction_offset;
        Ok(TheoremCheckResult {
            theorem_id: id.to_string(),
            instance: inst.label.clone(),
            predicted,
            computed,
            agree: computed.certified && predicted == computed.value,
            runtime_ms: start.elapsed().as_millis(),
        })
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        instances.par_iter().map(run_one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        instances.iter().map(run_one).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> VerifyOptions {
        VerifyOptions::new(CoefficientField::prime(32003).unwrap())
    }

    #[test]
    fn registry_ids_all_have_instances() {
        let mut o = opts();
        o.s_range = (1, 1);
        o.n_range = Some((1, 6));
        for id in REGISTRY {
            let instances = instances_for(id, &o).unwrap();
            assert!(!instances.is_empty(), "{id} has no instances at n <= 6");
        }
        assert!(verify_theorem("nope", &o).is_err());
    }

    #[test]
    fn cycle_rows_agree_at_s1() {
        let mut o = opts();
        o.s_range = (1, 1);
        let rows = verify_theorem("Cycle-J", &o).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.agree), "{rows:?}");
    }

    #[test]
    fn prediction_offset_breaks_agreement() {
        let mut o = opts();
        o.s_range = (1, 1);
        o.n_range = Some((3, 3));
        o.prediction_offset = 1;
        let rows = verify_theorem("Cycle-J", &o).unwrap();
        assert!(rows.iter().all(|r| !r.agree));
    }

    #[test]
    fn instance_filter_narrows() {
        let mut o = opts();
        o.s_range = (1, 1);
        o.instance_filter = Some("C3".into());
        let rows = verify_theorem("Cycle-J", &o).unwrap();
        assert_eq!(rows.len(), 1);
    }

    #[test]
    fn flower_free_rows_agree() {
        let rows = verify_theorem("FlowerFree", &opts()).unwrap();
        assert!(rows.iter().all(|r| r.agree), "{rows:?}");
    }

    #[test]
    fn manifest_counts() {
        let mut o = opts();
        o.s_range = (1, 1);
        let rows = verify_theorem("Cycle-J", &o).unwrap();
        let m = run_manifest("Cycle-J", &o, &rows);
        assert_eq!(m.rows, 3);
        assert_eq!(m.disagreements, 0);
        assert_eq!(m.field, "fp:32003");
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = colon_power_corpus();
        let b = colon_power_corpus();
        assert_eq!(a.len(), 50);
        for ((g1, k1, s1), (g2, k2, s2)) in a.iter().zip(b.iter()) {
            assert_eq!(g1.edge_vec(), g2.edge_vec());
            assert_eq!(k1, k2);
            assert_eq!(s1, s2);
        }
    }
}
