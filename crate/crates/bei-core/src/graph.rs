//! Simple undirected graphs, the starlike-tree families behind every
//! construction in the toolkit, and small-graph enumeration with canonical
//! labeling.
//!
//! Vertices are labeled `1..=n`. The `T_m` class is the family of trees with
//! one center of degree `m >= 2` and all other degrees at most 2; legs are
//! paths hanging off the center. The unicyclic families are built from a
//! `T_m` tree by adding one edge (pendant-to-center, pendant-to-pendant, or
//! center-to-internal).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

/// Leg profile of a starlike tree: `legs[i]` is `s(i)`, so leg `i` has
/// `s(i) + 1` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TmSpec {
    pub legs: Vec<usize>,
}

impl TmSpec {
    pub fn new(legs: Vec<usize>) -> Result<Self> {
        if legs.len() < 2 {
            return Err(Error::BadFamilySpec("need m >= 2 legs".into()));
        }
        Ok(TmSpec { legs })
    }

    pub fn m(&self) -> usize {
        self.legs.len()
    }

    pub fn leg_sum(&self) -> usize {
        self.legs.iter().sum()
    }

    /// `1 + sum(s(i) + 1)`.
    pub fn vertex_count(&self) -> usize {
        1 + self.legs.iter().map(|s| s + 1).sum::<usize>()
    }

    pub fn center(&self) -> usize {
        1
    }

    /// Label of the `j`-th vertex on leg `i` (both 1-based, `j <= s(i)+1`).
    pub fn leg_vertex(&self, leg: usize, j: usize) -> usize {
        debug_assert!(1 <= leg && leg <= self.m());
        debug_assert!(1 <= j && j <= self.legs[leg - 1] + 1);
        let before: usize = self.legs[..leg - 1].iter().map(|s| s + 1).sum();
        1 + before + j
    }

    pub fn pendant(&self, leg: usize) -> usize {
        self.leg_vertex(leg, self.legs[leg - 1] + 1)
    }

    /// Tree edges leg by leg, each leg walked outward from the center.
    pub fn ordered_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for leg in 1..=self.m() {
            edges.push((self.center(), self.leg_vertex(leg, 1)));
            for j in 1..=self.legs[leg - 1] {
                edges.push((self.leg_vertex(leg, j), self.leg_vertex(leg, j + 1)));
            }
        }
        edges
    }
}

/// Which single edge closes the unique cycle of a family graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnicyclicKind {
    /// Pendant vertex of leg `leg` joined to the center.
    PendantToCenter { leg: usize },
    /// The two pendant vertices of `legs` joined.
    PendantToPendant { legs: (usize, usize) },
    /// Center joined to the internal leg vertex at `depth` (the cycle gets
    /// length `depth + 2`).
    CenterToInternal { leg: usize, depth: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    Tm(TmSpec),
    Unicyclic { spec: TmSpec, kind: UnicyclicKind, extra_edge: (usize, usize) },
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Flower { triangles: usize, stars: usize },
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family_tag: Option<FamilyTag>,
}

fn norm_edge(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            if i == j {
                return Err(Error::BadGraph(format!("loop at vertex {i}")));
            }
            if i < 1 || j < 1 || i > n || j > n {
                return Err(Error::BadGraph(format!("edge {i}-{j} outside 1..={n}")));
            }
            set.insert(norm_edge(i, j));
        }
        Ok(Graph { n, edges: set, family_tag: None })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new(), family_tag: None }
    }

    pub fn with_tag(mut self, tag: FamilyTag) -> Self {
        self.family_tag = Some(tag);
        self
    }

    pub fn family_tag(&self) -> Option<&FamilyTag> {
        self.family_tag.as_ref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_vec(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&norm_edge(i, j))
    }

    pub fn add_edge(&self, i: usize, j: usize) -> Result<Graph> {
        if i == j || i < 1 || j < 1 || i > self.n || j > self.n {
            return Err(Error::BadGraph(format!("bad edge {i}-{j}")));
        }
        let mut g = self.clone();
        g.edges.insert(norm_edge(i, j));
        g.family_tag = None;
        Ok(g)
    }

    pub fn remove_edge(&self, i: usize, j: usize) -> Result<Graph> {
        let mut g = self.clone();
        if !g.edges.remove(&norm_edge(i, j)) {
            return Err(Error::BadEdge(i, j, "not an edge".into()));
        }
        g.family_tag = None;
        Ok(g)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    // ------------------------------------------------------------------
    // connectivity and cycles
    // ------------------------------------------------------------------

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n + 1];
        let mut count = 0;
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_count() == 1
    }

    /// Connected with exactly one cycle, i.e. `|E| = |V|`.
    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.num_edges() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.num_edges() + 1 == self.n
    }

    fn bfs_dist(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n + 1];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of the shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &(u, v) in &self.edges {
            let without = self.remove_edge(u, v).expect("edge exists");
            if let Some(d) = without.bfs_dist(u)[v] {
                let cycle = d + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
        best
    }

    /// Length of the shortest odd cycle via the bipartite double cover;
    /// `None` when the graph is bipartite.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for start in 1..=self.n {
            // dist over (vertex, parity)
            let mut dist: Vec<[Option<usize>; 2]> = vec![[None; 2]; self.n + 1];
            dist[start][0] = Some(0);
            let mut queue = VecDeque::from([(start, 0usize)]);
            while let Some((v, p)) = queue.pop_front() {
                let d = dist[v][p].unwrap();
                for w in self.neighbors(v) {
                    let q = 1 - p;
                    if dist[w][q].is_none() {
                        dist[w][q] = Some(d + 1);
                        queue.push_back((w, q));
                    }
                }
            }
            if let Some(d) = dist[start][1] {
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_girth().is_none()
    }

    /// Canonical bipartition when one exists: 2-color each component by BFS
    /// with the smallest vertex of the component in class 1.
    pub fn bipartition(&self) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n + 1];
        for start in 1..=self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(true);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[v].unwrap());
                            queue.push_back(w);
                        }
                        Some(c) => {
                            if c == color[v].unwrap() {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        let mut v1 = BTreeSet::new();
        let mut v2 = BTreeSet::new();
        for v in 1..=self.n {
            if color[v] == Some(true) {
                v1.insert(v);
            } else {
                v2.insert(v);
            }
        }
        Some((v1, v2))
    }

    /// True iff removing the edge increases the component count.
    pub fn is_bridge(&self, i: usize, j: usize) -> Result<bool> {
        if !self.has_edge(i, j) {
            return Err(Error::BadEdge(i, j, "not an edge".into()));
        }
        let removed = self.remove_edge(i, j)?;
        Ok(removed.component_count() > self.component_count())
    }

    /// Edges lying on some cycle (the non-bridges).
    pub fn cycle_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(i, j)| !self.is_bridge(i, j).unwrap())
            .collect()
    }

    /// The completion `G_e` for a non-edge `e = {i,j}`: add all pairs inside
    /// `N(i)` and all pairs inside `N(j)`.
    pub fn completion_ge(&self, i: usize, j: usize) -> Result<Graph> {
        if self.has_edge(i, j) {
            return Err(Error::BadEdge(i, j, "must be a non-edge".into()));
        }
        if i == j || i < 1 || j < 1 || i > self.n || j > self.n {
            return Err(Error::BadEdge(i, j, "outside vertex range".into()));
        }
        let mut g = self.clone();
        for v in [i, j] {
            let nb = self.neighbors(v);
            for (a, &p) in nb.iter().enumerate() {
                for &q in &nb[a + 1..] {
                    g.edges.insert(norm_edge(p, q));
                }
            }
        }
        g.family_tag = None;
        Ok(g)
    }

    // ------------------------------------------------------------------
    // cliques, free/internal vertices, flowers
    // ------------------------------------------------------------------

    /// Maximal cliques by Bron-Kerbosch with pivoting. Isolated vertices
    /// count as singleton cliques.
    pub fn maximal_cliques(&self) -> Vec<BTreeSet<usize>> {
        let adj: Vec<BTreeSet<usize>> = (0..=self.n)
            .map(|v| {
                if v == 0 {
                    BTreeSet::new()
                } else {
                    self.neighbors(v).into_iter().collect()
                }
            })
            .collect();
        let mut out: Vec<BTreeSet<usize>> = Vec::new();
        fn bk(
            r: &mut BTreeSet<usize>,
            p: &mut BTreeSet<usize>,
            x: &mut BTreeSet<usize>,
            adj: &[BTreeSet<usize>],
            out: &mut Vec<BTreeSet<usize>>,
        ) {
            if p.is_empty() && x.is_empty() {
                out.push(r.clone());
                return;
            }
            let pivot = p
                .iter()
                .chain(x.iter())
                .copied()
                .max_by_key(|&u| adj[u].intersection(p).count())
                .unwrap();
            let candidates: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
            for v in candidates {
                r.insert(v);
                let mut p2: BTreeSet<usize> = p.intersection(&adj[v]).copied().collect();
                let mut x2: BTreeSet<usize> = x.intersection(&adj[v]).copied().collect();
                bk(r, &mut p2, &mut x2, adj, out);
                r.remove(&v);
                p.remove(&v);
                x.insert(v);
            }
        }
        let mut r = BTreeSet::new();
        let mut p: BTreeSet<usize> = (1..=self.n).collect();
        let mut x = BTreeSet::new();
        bk(&mut r, &mut p, &mut x, &adj, &mut out);
        out.sort();
        out
    }

    /// Number of maximal cliques containing `v`.
    pub fn clique_degree(&self, v: usize) -> usize {
        self.maximal_cliques().iter().filter(|c| c.contains(&v)).count()
    }

    /// Vertices lying in at least two maximal cliques.
    pub fn internal_vertices(&self) -> BTreeSet<usize> {
        let cliques = self.maximal_cliques();
        (1..=self.n)
            .filter(|v| cliques.iter().filter(|c| c.contains(v)).count() >= 2)
            .collect()
    }

    pub fn internal_vertex_count(&self) -> usize {
        self.internal_vertices().len()
    }

    pub fn free_vertices(&self) -> BTreeSet<usize> {
        let internal = self.internal_vertices();
        (1..=self.n).filter(|v| !internal.contains(v)).collect()
    }

    /// True iff no induced subgraph is a flower: `h` triangles and `k`
    /// three-leaf stars glued at one common vertex of clique degree
    /// `h + k >= 3` (the common vertex is a leaf of each star).
    pub fn is_flower_free(&self) -> bool {
        if self.n < 7 || self.n > 16 {
            return true;
        }
        let verts: Vec<usize> = (1..=self.n).collect();
        for mask in 0u32..(1 << self.n) {
            if (mask.count_ones() as usize) < 7 {
                continue;
            }
            let subset: Vec<usize> =
                verts.iter().copied().filter(|v| mask >> (v - 1) & 1 == 1).collect();
            if self.subset_is_flower(&subset) {
                return false;
            }
        }
        true
    }

    fn subset_is_flower(&self, subset: &[usize]) -> bool {
        let inside: BTreeSet<usize> = subset.iter().copied().collect();
        'candidate: for &v in subset {
            let mut h = 0usize;
            let mut k = 0usize;
            // components of the induced subgraph minus v
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            for &start in subset {
                if start == v || seen.contains(&start) {
                    continue;
                }
                let mut comp = vec![start];
                let mut queue = VecDeque::from([start]);
                seen.insert(start);
                while let Some(u) = queue.pop_front() {
                    for w in self.neighbors(u) {
                        if w != v && inside.contains(&w) && !seen.contains(&w) {
                            seen.insert(w);
                            comp.push(w);
                            queue.push_back(w);
                        }
                    }
                }
                comp.sort_unstable();
                match comp.len() {
                    2 => {
                        // triangle petal: both vertices adjacent to v and to
                        // each other
                        let (a, b) = (comp[0], comp[1]);
                        if self.has_edge(a, b) && self.has_edge(v, a) && self.has_edge(v, b) {
                            h += 1;
                        } else {
                            continue 'candidate;
                        }
                    }
                    3 => {
                        // star petal: center c adjacent to v and both leaves;
                        // no other adjacencies inside the petal
                        let centers: Vec<usize> = comp
                            .iter()
                            .copied()
                            .filter(|&c| {
                                self.has_edge(v, c)
                                    && comp.iter().all(|&w| w == c || self.has_edge(c, w))
                            })
                            .collect();
                        if centers.len() != 1 {
                            continue 'candidate;
                        }
                        let c = centers[0];
                        let leaves: Vec<usize> =
                            comp.iter().copied().filter(|&w| w != c).collect();
                        let clean = leaves.iter().all(|&l| {
                            !self.has_edge(v, l)
                                && leaves.iter().all(|&l2| l2 == l || !self.has_edge(l, l2))
                        });
                        if clean {
                            k += 1;
                        } else {
                            continue 'candidate;
                        }
                    }
                    _ => continue 'candidate,
                }
            }
            if h + k >= 3 {
                return true;
            }
        }
        false
    }

    /// All simple paths from `i` to `j`, each as the vertex sequence.
    pub fn simple_paths(&self, i: usize, j: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![i];
        let mut on_path = vec![false; self.n + 1];
        on_path[i] = true;
        self.paths_dfs(i, j, &mut path, &mut on_path, &mut out);
        out.sort();
        out
    }

    fn paths_dfs(
        &self,
        v: usize,
        target: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == target {
            out.push(path.clone());
            return;
        }
        for w in self.neighbors(v) {
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.paths_dfs(w, target, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    // ------------------------------------------------------------------
    // text format
    // ------------------------------------------------------------------

    /// Parse edge-list text, one `i j` pair per line; `n` is the largest
    /// label seen. Blank lines and `#` comments are skipped.
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut n = 0;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let mut next_num = || -> Result<usize> {
                it.next()
                    .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge line {line:?}")))
            };
            let i = next_num()?;
            let j = next_num()?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("bad edge line {line:?}")));
            }
            n = n.max(i).max(j);
            edges.push((i, j));
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    // ------------------------------------------------------------------
    // canonical form and isomorphism
    // ------------------------------------------------------------------

    /// Canonical edge bitmask; equal masks mean isomorphic graphs. Only
    /// usable for `n <= 11`.
    pub fn canonical_mask(&self) -> u64 {
        let n = self.n;
        assert!(n <= 11, "canonical form limited to 11 vertices");
        canonical_mask(n, self.to_mask())
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n && self.canonical_mask() == other.canonical_mask()
    }

    fn to_mask(&self) -> u64 {
        let mut mask = 0u64;
        for &(i, j) in &self.edges {
            mask |= 1 << pair_index(self.n, i - 1, j - 1);
        }
        mask
    }

    fn from_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> pair_index(n, i, j) & 1 == 1 {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        Graph::new(n, &edges).expect("mask edges are valid")
    }

    /// Relabel vertices with `perm[v] = new label` (1-based, index 0 unused).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(i, j)| (perm[i], perm[j])).collect();
        Graph::new(self.n, &edges).expect("permutation preserves validity")
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Canonical form of an edge mask: the minimum relabeled mask over all vertex
/// permutations compatible with iterated degree refinement.
fn canonical_mask(n: usize, mask: u64) -> u64 {
    if n <= 1 {
        return mask;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && mask >> pair_index(n, i.min(j), i.max(j)) & 1 == 1)
                .collect()
        })
        .collect();
    let mut colors: Vec<u64> = (0..n).map(|i| adj[i].len() as u64).collect();
    for _ in 0..n {
        let sigs: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|i| {
                let mut nb: Vec<u64> = adj[i].iter().map(|&j| colors[j]).collect();
                nb.sort_unstable();
                (colors[i], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let new: Vec<u64> =
            sigs.iter().map(|s| uniq.binary_search(s).unwrap() as u64).collect();
        if new == colors {
            break;
        }
        colors = new;
    }
    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    let class_list: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<u64> = None;
    let mut assignment = vec![usize::MAX; n];
    permute_classes(n, mask, &class_list, 0, 0, &mut assignment, &mut best);
    best.expect("at least one permutation")
}

fn permute_classes(
    n: usize,
    mask: u64,
    classes: &[Vec<usize>],
    class_idx: usize,
    next_index: usize,
    assignment: &mut Vec<usize>,
    best: &mut Option<u64>,
) {
    if class_idx == classes.len() {
        let mut relabeled = 0u64;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> pair_index(n, i, j) & 1 == 1 {
                    let (a, b) = (assignment[i], assignment[j]);
                    relabeled |= 1 << pair_index(n, a.min(b), a.max(b));
                }
            }
        }
        if best.map_or(true, |b| relabeled < b) {
            *best = Some(relabeled);
        }
        return;
    }
    let mut order = classes[class_idx].clone();
    permute_within(n, mask, classes, class_idx, next_index, &mut order, 0, assignment, best);
}

#[allow(clippy::too_many_arguments)]
fn permute_within(
    n: usize,
    mask: u64,
    classes: &[Vec<usize>],
    class_idx: usize,
    next_index: usize,
    order: &mut Vec<usize>,
    pos: usize,
    assignment: &mut Vec<usize>,
    best: &mut Option<u64>,
) {
    if pos == order.len() {
        for (offset, &v) in order.iter().enumerate() {
            assignment[v] = next_index + offset;
        }
        permute_classes(n, mask, classes, class_idx + 1, next_index + order.len(), assignment, best);
        for &v in order.iter() {
            assignment[v] = usize::MAX;
        }
        return;
    }
    for i in pos..order.len() {
        order.swap(pos, i);
        permute_within(n, mask, classes, class_idx, next_index, order, pos + 1, assignment, best);
        order.swap(pos, i);
    }
}

// ---------------------------------------------------------------------------
// family constructors
// ---------------------------------------------------------------------------

/// Starlike tree from a leg profile.
pub fn build_tm(spec: &TmSpec) -> Result<Graph> {
    if spec.m() < 2 {
        return Err(Error::BadFamilySpec("need m >= 2 legs".into()));
    }
    let n = spec.vertex_count();
    let g = Graph::new(n, &spec.ordered_edges())?;
    Ok(g.with_tag(FamilyTag::Tm(spec.clone())))
}

/// Connected unicyclic graph built from a starlike tree plus one edge.
pub fn build_unicyclic(spec: &TmSpec, kind: UnicyclicKind) -> Result<Graph> {
    let tree = build_tm(spec)?;
    let extra = match kind {
        UnicyclicKind::PendantToCenter { leg } => {
            if leg < 1 || leg > spec.m() {
                return Err(Error::BadFamilySpec(format!("no leg {leg}")));
            }
            if spec.legs[leg - 1] < 1 {
                return Err(Error::BadFamilySpec(
                    "pendant-to-center needs a leg with s(k) >= 1".into(),
                ));
            }
            (spec.center(), spec.pendant(leg))
        }
        UnicyclicKind::PendantToPendant { legs: (a, b) } => {
            if a == b || a < 1 || b < 1 || a > spec.m() || b > spec.m() {
                return Err(Error::BadFamilySpec(format!("bad leg pair {a},{b}")));
            }
            (spec.pendant(a), spec.pendant(b))
        }
        UnicyclicKind::CenterToInternal { leg, depth } => {
            if leg < 1 || leg > spec.m() {
                return Err(Error::BadFamilySpec(format!("no leg {leg}")));
            }
            // the internal vertex at depth d is the (d+1)-th leg vertex; it
            // must be neither the pendant nor adjacent to the center
            if depth < 1 || depth + 1 > spec.legs[leg - 1] {
                return Err(Error::BadFamilySpec(format!(
                    "leg {leg} has no internal vertex at depth {depth}"
                )));
            }
            (spec.center(), spec.leg_vertex(leg, depth + 1))
        }
    };
    let g = tree.add_edge(extra.0, extra.1)?;
    Ok(g.with_tag(FamilyTag::Unicyclic {
        spec: spec.clone(),
        kind,
        extra_edge: norm_edge(extra.0, extra.1),
    }))
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadFamilySpec("cycle needs n >= 3".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    Ok(Graph::new(n, &edges)?.with_tag(FamilyTag::Cycle(n)))
}

pub fn build_path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::BadFamilySpec("path needs n >= 2".into()));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

pub fn build_complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    Ok(Graph::new(n, &edges)?.with_tag(FamilyTag::Complete(n)))
}

/// Star `K_{1,k}` with center 1.
pub fn build_star(k: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (2..=k + 1).map(|v| (1, v)).collect();
    Ok(Graph::new(k + 1, &edges)?.with_tag(FamilyTag::Star(k)))
}

/// Flower: `h` triangles and `k` three-leaf stars glued at vertex 1 (vertex 1
/// is a leaf of each star).
pub fn build_flower(h: usize, k: usize) -> Result<Graph> {
    if h + k < 3 {
        return Err(Error::BadFamilySpec("flower needs h + k >= 3".into()));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for _ in 0..h {
        let (a, b) = (next, next + 1);
        next += 2;
        edges.extend([(1, a), (1, b), (a, b)]);
    }
    for _ in 0..k {
        let (c, l1, l2) = (next, next + 1, next + 2);
        next += 3;
        edges.extend([(1, c), (c, l1), (c, l2)]);
    }
    Ok(Graph::new(next - 1, &edges)?.with_tag(FamilyTag::Flower { triangles: h, stars: k }))
}

/// Disjoint union, relabeling the second graph above the first.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut edges = a.edge_vec();
    for (i, j) in b.edges() {
        edges.push((i + a.n(), j + a.n()));
    }
    Graph::new(a.n() + b.n(), &edges).expect("valid by construction")
}

/// Glue parts at identified vertex pairs. Each identification pins
/// `(part, vertex)` to `(part, vertex)`; identified vertices must be free in
/// their parts, two parts may share at most one vertex, and no vertex is
/// shared by three parts. Returns the glued graph together with the label
/// maps of the parts.
pub fn glue(
    parts: &[Graph],
    identifications: &[((usize, usize), (usize, usize))],
) -> Result<(Graph, Vec<Vec<usize>>)> {
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, g| {
            let o = *acc;
            *acc += g.n();
            Some(o)
        })
        .collect();
    let total: usize = parts.iter().map(|g| g.n()).sum();
    let mut uf: Vec<usize> = (0..total).collect();
    fn find(uf: &mut Vec<usize>, x: usize) -> usize {
        if uf[x] != x {
            let r = find(uf, uf[x]);
            uf[x] = r;
        }
        uf[x]
    }
    for &((p, v), (q, w)) in identifications {
        if p >= parts.len() || q >= parts.len() || p == q {
            return Err(Error::Precondition(
                "identification must join two distinct parts".into(),
            ));
        }
        for (part, vertex) in [(p, v), (q, w)] {
            if vertex < 1 || vertex > parts[part].n() {
                return Err(Error::Precondition(format!(
                    "vertex {vertex} outside part {part}"
                )));
            }
            if !parts[part].free_vertices().contains(&vertex) {
                return Err(Error::Precondition(format!(
                    "vertex {vertex} of part {part} is not a free vertex"
                )));
            }
        }
        let a = find(&mut uf, offsets[p] + v - 1);
        let b = find(&mut uf, offsets[q] + w - 1);
        uf[a] = b;
    }
    let mut class_parts: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for (p, g) in parts.iter().enumerate() {
        for v in 0..g.n() {
            let root = find(&mut uf, offsets[p] + v);
            class_parts.entry(root).or_default().insert(p);
        }
    }
    for ps in class_parts.values() {
        if ps.len() > 2 {
            return Err(Error::Precondition("three parts share a vertex".into()));
        }
    }
    let mut pair_counts: HashMap<(usize, usize), usize> = HashMap::new();
    for ps in class_parts.values() {
        if ps.len() == 2 {
            let v: Vec<usize> = ps.iter().copied().collect();
            *pair_counts.entry((v[0], v[1])).or_default() += 1;
        }
    }
    if pair_counts.values().any(|&c| c > 1) {
        return Err(Error::Precondition("two parts share more than one vertex".into()));
    }
    let mut label: HashMap<usize, usize> = HashMap::new();
    let mut next = 1;
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for (p, g) in parts.iter().enumerate() {
        let mut map = vec![0; g.n() + 1];
        for v in 1..=g.n() {
            let root = find(&mut uf, offsets[p] + v - 1);
            let l = *label.entry(root).or_insert_with(|| {
                let l = next;
                next += 1;
                l
            });
            map[v] = l;
        }
        maps.push(map);
    }
    let mut edges = Vec::new();
    for (p, g) in parts.iter().enumerate() {
        for (i, j) in g.edges() {
            edges.push((maps[p][i], maps[p][j]));
        }
    }
    Ok((Graph::new(next - 1, &edges)?, maps))
}

// ---------------------------------------------------------------------------
// enumeration up to isomorphism
// ---------------------------------------------------------------------------

const ENUM_VERTEX_LIMIT: usize = 9;

/// All free trees on `n` vertices up to isomorphism, grown by leaf
/// attachment with canonical deduplication.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n > ENUM_VERTEX_LIMIT {
        return Err(Error::BoundExceeded(n, ENUM_VERTEX_LIMIT));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next_level = Vec::new();
        for tree in &level {
            for v in 1..=tree.n() {
                let mut edges = tree.edge_vec();
                edges.push((v, size));
                let grown = Graph::new(size, &edges)?;
                if seen.insert(grown.canonical_mask()) {
                    next_level.push(grown);
                }
            }
        }
        level = next_level;
    }
    Ok(level)
}

/// All connected unicyclic graphs on exactly `n` vertices up to isomorphism,
/// canonically labeled.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    if n > ENUM_VERTEX_LIMIT {
        return Err(Error::BoundExceeded(n, ENUM_VERTEX_LIMIT));
    }
    if n < 3 {
        return Ok(vec![]);
    }
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    for tree in enumerate_trees(n)? {
        for i in 1..=n {
            for j in (i + 1)..=n {
                if tree.has_edge(i, j) {
                    continue;
                }
                let g = tree.add_edge(i, j)?;
                let mask = g.canonical_mask();
                if seen.insert(mask) {
                    out.push(Graph::from_mask(n, mask));
                }
            }
        }
    }
    out.sort_by_key(|g| g.to_mask());
    Ok(out)
}

/// All simple graphs on exactly `n` vertices up to isomorphism (including
/// disconnected ones), canonically labeled. Practical for `n <= 7`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::BoundExceeded(n, 7));
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let pairs = n * (n - 1) / 2;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs) {
        let canon = canonical_mask(n, mask);
        if seen.insert(canon) {
            out.push(Graph::from_mask(n, canon));
        }
    }
    out.sort_by_key(|g| g.to_mask());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tm_construction_and_labels() {
        // m=2, s=(0,0) is the path on 3 vertices
        let p3 = build_tm(&TmSpec::new(vec![0, 0]).unwrap()).unwrap();
        assert!(p3.is_tree());
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.degree(1), 2);

        // m=3, s=(0,0,0) is the star K_{1,3}
        let star = build_tm(&TmSpec::new(vec![0, 0, 0]).unwrap()).unwrap();
        assert!(star.is_isomorphic(&build_star(3).unwrap()));

        // m=2, s=(1,1) is the path on 5 vertices with center degree 2
        let p5 = build_tm(&TmSpec::new(vec![1, 1]).unwrap()).unwrap();
        assert!(p5.is_isomorphic(&build_path(5).unwrap()));
        assert_eq!(p5.degree(1), 2);

        // leg ordering: m=2, s=(1,0)
        let spec = TmSpec::new(vec![1, 0]).unwrap();
        assert_eq!(spec.ordered_edges(), vec![(1, 2), (2, 3), (1, 4)]);
        assert!(TmSpec::new(vec![1]).is_err());
    }

    #[test]
    fn unicyclic_kinds() {
        // pendant-to-center on m=2, s=(1,0): girth 3 on 4 vertices
        let spec = TmSpec::new(vec![1, 0]).unwrap();
        let a = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg: 1 }).unwrap();
        assert!(a.is_unicyclic());
        assert_eq!(a.n(), 4);
        assert_eq!(a.girth(), Some(3));

        // center-to-internal on m=2, s=(2,0), depth 1: girth 3
        let spec_c = TmSpec::new(vec![2, 0]).unwrap();
        let c = build_unicyclic(&spec_c, UnicyclicKind::CenterToInternal { leg: 1, depth: 1 })
            .unwrap();
        assert!(c.is_unicyclic());
        assert_eq!(c.girth(), Some(3));

        // pendant-to-pendant on m=2, s=(1,1) gives the 5-cycle
        let spec_b = TmSpec::new(vec![1, 1]).unwrap();
        let b =
            build_unicyclic(&spec_b, UnicyclicKind::PendantToPendant { legs: (1, 2) }).unwrap();
        assert!(b.is_isomorphic(&build_cycle(5).unwrap()));

        // pendant-to-center needs a long enough leg
        assert!(build_unicyclic(
            &TmSpec::new(vec![0, 0]).unwrap(),
            UnicyclicKind::PendantToCenter { leg: 1 }
        )
        .is_err());
        // depth-1 internal vertex requires s(k) >= 2
        assert!(build_unicyclic(
            &TmSpec::new(vec![1, 0]).unwrap(),
            UnicyclicKind::CenterToInternal { leg: 1, depth: 1 }
        )
        .is_err());
    }

    #[test]
    fn girth_and_odd_girth() {
        assert_eq!(build_cycle(5).unwrap().girth(), Some(5));
        assert_eq!(build_cycle(5).unwrap().odd_girth(), Some(5));
        assert_eq!(build_cycle(6).unwrap().girth(), Some(6));
        assert_eq!(build_cycle(6).unwrap().odd_girth(), None);
        assert_eq!(build_path(4).unwrap().girth(), None);
        assert_eq!(build_path(4).unwrap().odd_girth(), None);
        assert!(build_cycle(6).unwrap().is_bipartite());
        assert!(!build_cycle(5).unwrap().is_bipartite());
    }

    #[test]
    fn bridges() {
        let tree = build_path(4).unwrap();
        assert!(tree.is_bridge(1, 2).unwrap());
        let c3 = build_cycle(3).unwrap();
        assert!(!c3.is_bridge(1, 2).unwrap());
        // the added edge of a pendant-to-center graph lies on the cycle
        let spec = TmSpec::new(vec![1, 0]).unwrap();
        let a = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg: 1 }).unwrap();
        let Some(FamilyTag::Unicyclic { extra_edge: (u, v), .. }) = a.family_tag().cloned()
        else {
            panic!("tag expected")
        };
        assert!(!a.is_bridge(u, v).unwrap());
        assert!(c3.is_bridge(1, 4).is_err());
    }

    #[test]
    fn completion_ge() {
        // G = {12, 13}, e = {1,4}: N(1) = {2,3} gets completed
        let g = Graph::new(4, &[(1, 2), (1, 3)]).unwrap();
        let ge = g.completion_ge(1, 4).unwrap();
        assert!(ge.has_edge(2, 3));
        assert_eq!(ge.num_edges(), 3);

        // two disjoint edges, e = {2,3}: singleton neighborhoods add nothing
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let ge = g.completion_ge(2, 3).unwrap();
        assert_eq!(ge.num_edges(), g.num_edges());

        // star with center 1, e = {2,3}: nothing new
        let star = build_star(3).unwrap();
        let ge = star.completion_ge(2, 3).unwrap();
        assert_eq!(ge.num_edges(), star.num_edges());

        assert!(build_cycle(3).unwrap().completion_ge(1, 2).is_err());
    }

    #[test]
    fn internal_vertices_of_families() {
        // path: all but the endpoints
        assert_eq!(build_path(5).unwrap().internal_vertex_count(), 3);
        // pendant-to-center, girth 3, m=2, s=(1,0): one internal vertex
        let spec = TmSpec::new(vec![1, 0]).unwrap();
        let a = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg: 1 }).unwrap();
        assert_eq!(a.internal_vertex_count(), 1);
        // girth >= 4 keeps the two cycle neighbors internal: m=2, s=(2,0)
        let spec4 = TmSpec::new(vec![2, 0]).unwrap();
        let a4 = build_unicyclic(&spec4, UnicyclicKind::PendantToCenter { leg: 1 }).unwrap();
        assert_eq!(a4.girth(), Some(4));
        assert_eq!(a4.internal_vertex_count(), 2 + 2);
        // internal + free partition the vertex set
        for g in [&a, &a4] {
            assert_eq!(g.internal_vertices().len() + g.free_vertices().len(), g.n());
        }
    }

    #[test]
    fn internal_count_matches_closed_form_for_families() {
        for legs in [vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1], vec![1, 0, 0]] {
            let spec = TmSpec::new(legs.clone()).unwrap();
            for leg in 1..=spec.m() {
                if spec.legs[leg - 1] < 1 {
                    continue;
                }
                let g = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg }).unwrap();
                let s_sum = spec.leg_sum();
                let expect = if g.girth() == Some(3) { s_sum } else { 2 + s_sum };
                assert_eq!(g.internal_vertex_count(), expect, "legs {legs:?} leg {leg}");
            }
            for leg in 1..=spec.m() {
                for depth in 1..spec.legs[leg - 1].max(1) {
                    if depth + 1 > spec.legs[leg - 1] {
                        continue;
                    }
                    let g = build_unicyclic(
                        &spec,
                        UnicyclicKind::CenterToInternal { leg, depth },
                    )
                    .unwrap();
                    let s_sum = spec.leg_sum();
                    let expect = if g.girth() == Some(3) { s_sum } else { 1 + s_sum };
                    assert_eq!(g.internal_vertex_count(), expect);
                }
            }
        }
    }

    #[test]
    fn flower_detection() {
        // a lone star is not a flower (h + k < 3)
        assert!(build_star(3).unwrap().is_flower_free());
        // h=2, k=1 with clique degree 3 is a flower
        let f21 = build_flower(2, 1).unwrap();
        assert!(!f21.is_flower_free());
        // three triangles at a vertex
        let f30 = build_flower(3, 0).unwrap();
        assert!(!f30.is_flower_free());
        // pendant-to-center girth-3 graphs are flower-free
        let spec = TmSpec::new(vec![1, 0, 0]).unwrap();
        let a = build_unicyclic(&spec, UnicyclicKind::PendantToCenter { leg: 1 }).unwrap();
        assert!(a.is_flower_free());
        // bowtie: two triangles at one vertex, clique degree 2 only
        let bowtie = Graph::new(5, &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)]).unwrap();
        assert!(bowtie.is_flower_free());
    }

    #[test]
    fn unicyclic_counts() {
        assert_eq!(enumerate_unicyclic(3).unwrap().len(), 1);
        assert_eq!(enumerate_unicyclic(4).unwrap().len(), 2);
        assert_eq!(enumerate_unicyclic(5).unwrap().len(), 5);
        assert_eq!(enumerate_unicyclic(6).unwrap().len(), 13);
        assert!(enumerate_unicyclic(10).is_err());
        for g in enumerate_unicyclic(6).unwrap() {
            assert!(g.is_unicyclic());
            assert_eq!(g.num_edges(), g.n());
        }
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let g = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert!(g.is_isomorphic(&build_cycle(5).unwrap()));
        let h = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(!g.is_isomorphic(&h));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = build_cycle(4).unwrap();
        let text = g.to_edge_list_text();
        let g2 = Graph::from_edge_list_text(&text).unwrap();
        assert_eq!(g.edge_vec(), g2.edge_vec());
    }

    #[test]
    fn gluing_validation() {
        let p3a = build_path(3).unwrap();
        let p3b = build_path(3).unwrap();
        // endpoints are free vertices; gluing endpoint to endpoint gives P5
        let (glued, _) = glue(&[p3a.clone(), p3b.clone()], &[((0, 3), (1, 1))]).unwrap();
        assert!(glued.is_isomorphic(&build_path(5).unwrap()));
        // the middle of a path is internal, not free
        assert!(glue(&[p3a.clone(), p3b.clone()], &[((0, 2), (1, 1))]).is_err());
        // complete graphs have only free vertices
        let k3 = build_complete(3).unwrap();
        let p2 = build_path(2).unwrap();
        let (glued, _) = glue(&[k3, p2], &[((0, 1), (1, 1))]).unwrap();
        assert_eq!(glued.n(), 4);
        assert_eq!(glued.num_edges(), 4);
    }

    #[test]
    fn simple_paths_enumeration() {
        let c4 = build_cycle(4).unwrap();
        let paths = c4.simple_paths(1, 3);
        assert_eq!(paths, vec![vec![1, 2, 3], vec![1, 4, 3]]);
    }
}
