//! Graded Betti tables of `S/I` via minimal free resolutions, and the
//! Castelnuovo-Mumford regularity read off them.
//!
//! The resolution is built level by level: the minimal generators of the
//! ideal give the first differential, then each level computes a generating
//! set of the syzygy module of the previous minimal generators (module
//! Buchberger in `F_prev (+) F_new` under an order whose `F_prev` block
//! dominates; basis elements supported entirely in the new block are the
//! syzygies) and extracts its minimal generators degree by degree. Taking
//! minimal generators at every level keeps every differential entry in the
//! irrelevant maximal ideal, so the resolution is minimal by construction and
//! Betti numbers are plain generator counts.
//!
//! An optional degree cap truncates module Buchberger pair processing; a
//! truncated run is flagged uncertified and its regularity is only a lower
//! bound. The default cap (number of generators times their top degree) is
//! far above anything the shipped instances reach.

use crate::binomial::{binomial_edge_ideal, EdgeBinomialKind};
use crate::error::{Error, Result};
use crate::field::{CoefficientField, Scalar};
use crate::graph::{build_complete, build_path, Graph};
use crate::ideal::{monomials_of_degree, Ideal};
use crate::linalg::{CoordInterner, RowReducer};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

use crate::ring::PolyRing;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

// ---------------------------------------------------------------------------
// free-module elements
// ---------------------------------------------------------------------------

/// Term of a free-module element: basis position, monomial, coefficient.
type ModTerm = (u32, Monomial, Scalar);

#[derive(Debug, Clone, PartialEq)]
struct ModPoly {
    terms: Vec<ModTerm>,
}

impl ModPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &ModTerm {
        &self.terms[0]
    }

    /// Shift-adjusted total degree (all terms agree: homogeneous).
    fn degree(&self, shifts: &[u16]) -> u16 {
        let (pos, mono, _) = self.lead();
        shifts[*pos as usize] + mono.degree()
    }
}

/// Order and arithmetic context for one free module. Positions below
/// `upper` dominate all others, which is what the syzygy elimination needs;
/// plain module computations set `upper` to the full rank.
struct ModCtx {
    ring: Arc<PolyRing>,
    shifts: Vec<u16>,
    upper: u32,
}

impl ModCtx {
    fn cmp_terms(&self, a: &ModTerm, b: &ModTerm) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let block_a = a.0 < self.upper;
        let block_b = b.0 < self.upper;
        match (block_a, block_b) {
            (true, false) => return Greater,
            (false, true) => return Less,
            _ => {}
        }
        let deg_a = self.shifts[a.0 as usize] + a.1.degree();
        let deg_b = self.shifts[b.0 as usize] + b.1.degree();
        match deg_a.cmp(&deg_b) {
            Equal => {}
            o => return o,
        }
        match self.ring.cmp_monomials(&a.1, &b.1) {
            Equal => {}
            o => return o,
        }
        // smaller position ranks higher
        b.0.cmp(&a.0)
    }

    fn normalize(&self, mut terms: Vec<ModTerm>) -> ModPoly {
        let field = self.ring.field();
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut merged: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for (p, m, c) in terms {
            match merged.last_mut() {
                Some((lp, lm, lc)) if *lp == p && *lm == m => {
                    *lc = field.add(lc, &c);
                }
                _ => merged.push((p, m, c)),
            }
        }
        merged.retain(|(_, _, c)| !field.is_zero(c));
        ModPoly { terms: merged }
    }

    /// `a - (mono, coef) * b`. Scaling by one term preserves the term order,
    /// so this is a sorted merge.
    fn sub_scaled(&self, a: &ModPoly, mono: &Monomial, coef: &Scalar, b: &ModPoly) -> ModPoly {
        let field = self.ring.field();
        let mut out: Vec<ModTerm> = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &ModTerm| -> ModTerm {
            (t.0, t.1.mul(mono), field.neg(&field.mul(&t.2, coef)))
        };
        while i < a.terms.len() && j < b.terms.len() {
            let bt = scaled(&b.terms[j]);
            match self.cmp_terms(&a.terms[i], &bt) {
                std::cmp::Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(bt);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(&a.terms[i].2, &bt.2);
                    if !field.is_zero(&c) {
                        out.push((bt.0, bt.1, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        while j < b.terms.len() {
            out.push(scaled(&b.terms[j]));
            j += 1;
        }
        ModPoly { terms: out }
    }

    /// Clear rational content / normalize leading coefficient.
    fn primitive(&self, p: ModPoly) -> ModPoly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if p.is_zero() {
            return p;
        }
        let field = self.ring.field();
        match &p.terms[0].2 {
            Scalar::Fp(_) => {
                let inv = field.inv(&p.terms[0].2);
                ModPoly {
                    terms: p
                        .terms
                        .iter()
                        .map(|(q, m, c)| (*q, m.clone(), field.mul(c, &inv)))
                        .collect(),
                }
            }
            Scalar::Rat(_) => {
                let mut den_lcm = BigInt::one();
                for (_, _, c) in &p.terms {
                    den_lcm = den_lcm.lcm(c.as_rational().unwrap().denom());
                }
                let mut num_gcd = BigInt::zero();
                for (_, _, c) in &p.terms {
                    let r = c.as_rational().unwrap();
                    num_gcd = num_gcd.gcd(&(r.numer() * &den_lcm / r.denom()));
                }
                if num_gcd.is_zero() {
                    return p;
                }
                let lead = p.terms[0].2.as_rational().unwrap();
                if lead.is_negative() != num_gcd.is_negative() {
                    num_gcd = -num_gcd;
                }
                let factor =
                    Scalar::Rat(num_rational::BigRational::new(den_lcm, num_gcd));
                ModPoly {
                    terms: p
                        .terms
                        .iter()
                        .map(|(q, m, c)| (*q, m.clone(), field.mul(c, &factor)))
                        .collect(),
                }
            }
        }
    }

    /// Full normal form against `basis` (grouped by leading position).
    /// Terms moved to the remainder are strictly greater than everything
    /// still in flight, so a start index avoids shifting.
    fn reduce(&self, p: &ModPoly, basis: &[ModPoly], by_pos: &[Vec<usize>]) -> ModPoly {
        let field = self.ring.field();
        let mut work = p.clone();
        let mut rem: Vec<ModTerm> = Vec::new();
        let mut start = 0usize;
        'outer: while start < work.terms.len() {
            let (pos, mono, coef) = work.terms[start].clone();
            for &k in &by_pos[pos as usize] {
                let (gp, gm, gc) = basis[k].lead();
                debug_assert_eq!(*gp, pos);
                if gm.divides(&mono) {
                    let q = gm.quotient(&mono);
                    let f = field.div(&coef, gc);
                    let tail = ModPoly { terms: work.terms[start..].to_vec() };
                    work = self.sub_scaled(&tail, &q, &f, &basis[k]);
                    start = 0;
                    continue 'outer;
                }
            }
            rem.push((pos, mono, coef));
            start += 1;
        }
        ModPoly { terms: rem }
    }

    /// Module Buchberger collecting syzygies. Pairs are processed by
    /// increasing degree; pairs above `cap` are dropped and reported via the
    /// `truncated` flag.
    ///
    /// Elements whose reduction lands entirely in the lower block (position
    /// `>= upper`) join the division basis only as reducers: no pairs are
    /// formed with them. The basis is only ever appended to, so the inputs
    /// stay members of the final basis verbatim, and the collected
    /// lower-block elements are (normal forms of) S-pair syzygies of the
    /// final upper basis; by Schreyer's theorem they generate the full
    /// syzygy module of the inputs' upper parts.
    ///
    /// When the upper block has rank 1 the upper parts are ring elements,
    /// and a pair with coprime leading monomials contributes its Koszul
    /// syzygy `g_j v_i - g_i v_j` directly instead of an S-pair reduction.
    fn buchberger(
        &self,
        gens: Vec<ModPoly>,
        cap: Option<u16>,
    ) -> (Vec<ModPoly>, Vec<ModPoly>, bool) {
        let mut basis: Vec<ModPoly> = Vec::new();
        let mut lower_idx: Vec<usize> = Vec::new();
        let mut by_pos: Vec<Vec<usize>> = vec![Vec::new(); self.shifts.len()];
        let mut truncated = false;
        let mut push = |basis: &mut Vec<ModPoly>,
                        by_pos: &mut Vec<Vec<usize>>,
                        lower_idx: &mut Vec<usize>,
                        g: ModPoly|
         -> Option<usize> {
            if g.is_zero() {
                return None;
            }
            let idx = basis.len();
            let pos = g.lead().0;
            by_pos[pos as usize].push(idx);
            basis.push(g);
            if pos >= self.upper {
                lower_idx.push(idx);
                None
            } else {
                Some(idx)
            }
        };
        for g in gens {
            let g = self.primitive(g);
            push(&mut basis, &mut by_pos, &mut lower_idx, g);
        }
        let mut pairs: BTreeSet<(u16, usize, usize)> = BTreeSet::new();
        let pair_degree = |basis: &Vec<ModPoly>, i: usize, j: usize| -> Option<u16> {
            let (pi, mi, _) = basis[i].lead();
            let (pj, mj, _) = basis[j].lead();
            if *pi >= self.upper || pi != pj {
                return None;
            }
            Some(self.shifts[*pi as usize] + mi.lcm(mj).degree())
        };
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                if let Some(d) = pair_degree(&basis, i, j) {
                    pairs.insert((d, i, j));
                }
            }
        }
        let field = *self.ring.field();
        while let Some(&entry) = pairs.iter().next() {
            pairs.remove(&entry);
            let (d, i, j) = entry;
            if let Some(c) = cap {
                if d > c {
                    truncated = true;
                    continue;
                }
            }
            let (_, mi, ci) = basis[i].lead().clone();
            let (_, mj, cj) = basis[j].lead().clone();
            let candidate = if self.upper == 1 && mi.coprime(&mj) {
                // Koszul shortcut: the reduced S-pair of a coprime pair is
                // the two-element combination g_j v_i - g_i v_j
                let gi = self.upper_poly(&basis[i]);
                let gj = self.upper_poly(&basis[j]);
                let a = self.mul_poly_vec(&gj, &basis[i]);
                let b = self.mul_poly_vec(&gi, &basis[j]);
                self.sub_scaled(&a, &Monomial::one(self.ring.num_vars()), &field.one(), &b)
            } else {
                let a = self.sub_scaled(
                    &ModPoly { terms: vec![] },
                    &mi.quotient(&mi.lcm(&mj)),
                    &field.neg(&field.inv(&ci)),
                    &basis[i],
                );
                self.sub_scaled(&a, &mj.quotient(&mi.lcm(&mj)), &field.inv(&cj), &basis[j])
            };
            let r = self.primitive(self.reduce(&candidate, &basis, &by_pos));
            if r.is_zero() {
                continue;
            }
            let added = push(&mut basis, &mut by_pos, &mut lower_idx, r);
            if let Some(t) = added {
                for k in 0..t {
                    if let Some(d) = pair_degree(&basis, k, t) {
                        pairs.insert((d, k, t));
                    }
                }
            }
        }
        let lower: Vec<ModPoly> = lower_idx.iter().map(|&k| basis[k].clone()).collect();
        (basis, lower, truncated)
    }

    /// Upper-block part of a vector as a ring polynomial (rank-1 upper).
    fn upper_poly(&self, v: &ModPoly) -> Polynomial {
        let terms: Vec<(Monomial, Scalar)> = v
            .terms
            .iter()
            .filter(|(p, _, _)| *p < self.upper)
            .map(|(_, m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// `f * v` for a ring polynomial and a module vector.
    fn mul_poly_vec(&self, f: &Polynomial, v: &ModPoly) -> ModPoly {
        let field = self.ring.field();
        let mut terms: Vec<ModTerm> = Vec::with_capacity(f.num_terms() * v.terms.len());
        for (fm, fc) in f.terms() {
            for (p, m, c) in &v.terms {
                terms.push((*p, m.mul(fm), field.mul(c, fc)));
            }
        }
        self.normalize(terms)
    }
}

/// Generating set of the syzygy module of `gens` (vectors in a free module
/// with `shifts`), via the dominant-block elimination. Returns the syzygies
/// (vectors in `S^{gens.len()}` with shifts = degrees of `gens`) and the
/// truncation flag.
fn syzygies(
    ring: &Arc<PolyRing>,
    shifts: &[u16],
    gens: &[ModPoly],
    cap: Option<u16>,
) -> (Vec<ModPoly>, bool) {
    let r = shifts.len() as u32;
    let mut ambient_shifts = shifts.to_vec();
    let one = ring.field().one();
    let mut vectors = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let deg = g.degree(shifts);
        ambient_shifts.push(deg);
        let mut terms = g.terms.clone();
        terms.push((r + k as u32, Monomial::one(ring.num_vars()), one.clone()));
        vectors.push(ModPoly { terms });
    }
    let ctx = ModCtx { ring: ring.clone(), shifts: ambient_shifts, upper: r };
    let vectors = vectors.into_iter().map(|v| ctx.normalize(v.terms)).collect();
    let (_, lower, truncated) = ctx.buchberger(vectors, cap);
    let syz = lower
        .into_iter()
        .map(|b| ModPoly {
            terms: b.terms.iter().map(|(p, m, c)| (p - r, m.clone(), c.clone())).collect(),
        })
        .collect();
    (syz, truncated)
}

/// Minimal generators of the submodule generated by homogeneous `gens`
/// inside a free module with `shifts`, degree by degree.
fn minimalize_module(
    ring: &Arc<PolyRing>,
    shifts: &[u16],
    gens: &[ModPoly],
) -> Vec<ModPoly> {
    let field = *ring.field();
    let mut candidates: Vec<&ModPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    candidates.sort_by(|a, b| {
        a.degree(shifts)
            .cmp(&b.degree(shifts))
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
            .then_with(|| format!("{:?}", a.terms).cmp(&format!("{:?}", b.terms)))
    });
    let mut degrees: Vec<u16> = candidates.iter().map(|g| g.degree(shifts)).collect();
    degrees.dedup();
    let mut interner = CoordInterner::new();
    let row_of = |interner: &mut CoordInterner, p: &ModPoly| -> Vec<(u32, Scalar)> {
        let mut row: Vec<(u32, Scalar)> = p
            .terms
            .iter()
            .map(|(pos, m, c)| (interner.intern(*pos, m), c.clone()))
            .collect();
        row.sort_by_key(|(id, _)| *id);
        row
    };
    let mut chosen: Vec<ModPoly> = Vec::new();
    for d in degrees {
        let mut reducer = RowReducer::new(field);
        for g in &chosen {
            let gd = g.degree(shifts);
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(ring, (d - gd) as usize) {
                let shifted = ModPoly {
                    terms: g
                        .terms
                        .iter()
                        .map(|(p, mm, c)| (*p, mm.mul(&m), c.clone()))
                        .collect(),
                };
                reducer.insert(row_of(&mut interner, &shifted));
            }
        }
        for g in candidates.iter().filter(|g| g.degree(shifts) == d) {
            if reducer.insert(row_of(&mut interner, g)) {
                chosen.push((*g).clone());
            }
        }
    }
    chosen
}

// ---------------------------------------------------------------------------
// Betti tables and regularity
// ---------------------------------------------------------------------------

/// Graded Betti numbers of `S/I`: `(homological index, internal degree) ->
/// rank`, with the projective dimension and a certification flag (false when
/// a degree cap truncated the computation).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), usize>,
    pub pd: usize,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap_used: Option<usize>,
    pub module_tag: String,
}

impl BettiTable {
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(0)
    }

    pub fn betti(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|(_, r)| r)
            .sum()
    }

    /// `[[i, j, rank], ...]` plus metadata.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<[usize; 3]> =
            self.entries.iter().map(|(&(i, j), &r)| [i, j, r]).collect();
        serde_json::json!({
            "entries": entries,
            "pd": self.pd,
            "certified": self.certified,
            "cap_used": self.cap_used,
            "module_tag": self.module_tag,
        })
    }

    /// Staircase layout: rows are `j - i`, columns are `i`.
    pub fn pretty(&self) -> String {
        let reg = self.regularity().max(0) as usize;
        let width = |v: usize| v.to_string().len().max(2);
        let mut col_w: Vec<usize> = Vec::new();
        for i in 0..=self.pd {
            col_w.push(width(self.total(i)).max(i.to_string().len()));
        }
        let mut out = String::new();
        let label_w = "total:".len();
        out.push_str(&format!("{:>label_w$}", ""));
        for (i, w) in col_w.iter().enumerate() {
            out.push_str(&format!(" {i:>w$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:>label_w$}", "total:"));
        for (i, w) in col_w.iter().enumerate() {
            out.push_str(&format!(" {:>w$}", self.total(i)));
        }
        out.push('\n');
        for row in 0..=reg {
            out.push_str(&format!("{:>label_w$}", format!("{row}:")));
            for (i, w) in col_w.iter().enumerate() {
                let r = self.betti(i, i + row);
                if r == 0 {
                    out.push_str(&format!(" {:>w$}", "."));
                } else {
                    out.push_str(&format!(" {r:>w$}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityResult {
    pub value: i64,
    /// Exact when true; a lower bound when a degree cap interfered.
    pub certified: bool,
    pub cap_used: Option<usize>,
}

/// Minimal free resolution of `S/I` for a proper homogeneous ideal `I`.
pub fn minimal_free_resolution(ideal: &Ideal, degree_cap: Option<usize>) -> Result<BettiTable> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = ideal.ring().clone();
    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    entries.insert((0, 0), 1);
    if ideal.is_zero_ideal() {
        return Ok(BettiTable {
            entries,
            pd: 0,
            certified: true,
            cap_used: None,
            module_tag: ideal.provenance().to_string(),
        });
    }
    let mingens = ideal.minimal_generators()?;
    if mingens.iter().any(|g| g.degree() == Some(0)) {
        return Err(Error::Precondition("ideal must be proper".into()));
    }
    // generous default: generator budget plus one degree step per variable,
    // which stays above pd + reg for everything desk-scale
    let default_cap = mingens.len()
        * mingens.iter().filter_map(|g| g.degree()).max().unwrap_or(1) as usize
        + ring.num_vars();
    let cap = degree_cap.unwrap_or(default_cap);
    let cap16 = u16::try_from(cap).unwrap_or(u16::MAX);

    // level 1
    let mut shifts: Vec<u16> = vec![0];
    let mut gens: Vec<ModPoly> = mingens
        .iter()
        .map(|g| ModPoly {
            terms: g
                .terms()
                .iter()
                .map(|(m, c)| (0u32, m.clone(), c.clone()))
                .collect(),
        })
        .collect();
    for g in &mingens {
        *entries.entry((1, g.degree().unwrap() as usize)).or_default() += 1;
    }
    let trace = std::env::var("BEI_TRACE_RES").is_ok();
    let mut truncated_any = false;
    let mut level = 1usize;
    let max_levels = ring.num_vars() + 2;
    loop {
        let t0 = std::time::Instant::now();
        let (syz, truncated) = syzygies(&ring, &shifts, &gens, Some(cap16));
        truncated_any |= truncated;
        if trace {
            eprintln!(
                "level {level}: {} gens ({} positions) -> {} syzygies in {:?}",
                gens.len(),
                shifts.len(),
                syz.len(),
                t0.elapsed()
            );
        }
        if syz.is_empty() {
            break;
        }
        let t1 = std::time::Instant::now();
        let next_shifts: Vec<u16> = gens.iter().map(|g| g.degree(&shifts)).collect();
        let minimal = minimalize_module(&ring, &next_shifts, &syz);
        if trace {
            eprintln!(
                "level {level}: minimalized to {} in {:?}",
                minimal.len(),
                t1.elapsed()
            );
        }
        if minimal.is_empty() {
            break;
        }
        level += 1;
        for g in &minimal {
            *entries.entry((level, g.degree(&next_shifts) as usize)).or_default() += 1;
        }
        shifts = next_shifts;
        gens = minimal;
        if level > max_levels {
            // cannot happen for exact runs; guard against a runaway cap
            truncated_any = true;
            break;
        }
    }
    Ok(BettiTable {
        entries,
        pd: level,
        certified: !truncated_any,
        cap_used: truncated_any.then_some(cap),
        module_tag: ideal.provenance().to_string(),
    })
}

/// Castelnuovo-Mumford regularity of `S/I`.
pub fn regularity(ideal: &Ideal) -> Result<RegularityResult> {
    let table = minimal_free_resolution(ideal, None)?;
    Ok(RegularityResult {
        value: table.regularity(),
        certified: table.certified,
        cap_used: table.cap_used,
    })
}

const MAX_RING_VARS: usize = 24;
const MAX_POWER_GENS: usize = 256;

fn feasibility_guard(ring_vars: usize, gens: usize) -> Result<()> {
    if ring_vars > MAX_RING_VARS {
        return Err(Error::InfeasibleSize(format!("{ring_vars} ring variables")));
    }
    if gens > MAX_POWER_GENS {
        return Err(Error::InfeasibleSize(format!("{gens} generators")));
    }
    Ok(())
}

/// `reg S/(J_G^s)` (standard) or `reg S/(I_G^s)` (parity).
pub fn regularity_of_power(
    g: &Graph,
    kind: EdgeBinomialKind,
    s: usize,
    field: CoefficientField,
) -> Result<RegularityResult> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    feasibility_guard(2 * g.n(), binom(g.num_edges() + s - 1, s))?;
    let ring = PolyRing::new(g.n(), field);
    let ideal = binomial_edge_ideal(&ring, g, kind)?.power(s)?;
    regularity(&ideal)
}

fn binom(n: usize, k: usize) -> usize {
    let mut out = 1usize;
    for i in 0..k.min(n - k) {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// `reg S/((a_1..a_i) + I^s)` for a prefix of the given ordering.
pub fn regularity_of_partial_sequence(
    g: &Graph,
    kind: EdgeBinomialKind,
    ordering: &crate::dseq::SequenceOrdering,
    prefix_len: usize,
    s: usize,
    field: CoefficientField,
) -> Result<RegularityResult> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    if prefix_len >= ordering.edges.len().max(1) {
        return Err(Error::Precondition(format!(
            "prefix length {prefix_len} must stay below the edge count"
        )));
    }
    feasibility_guard(2 * g.n(), binom(g.num_edges() + s - 1, s) + prefix_len)?;
    let ring = PolyRing::new(g.n(), field);
    let full = binomial_edge_ideal(&ring, g, kind)?;
    let prefix_gens = ordering.edges[..prefix_len]
        .iter()
        .map(|&(i, j)| crate::binomial::edge_binomial(&ring, i, j, kind))
        .collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::new(&ring, prefix_gens)?.sum(&full.power(s)?)?;
    regularity(&ideal)
}

// ---------------------------------------------------------------------------
// products of parity path ideals with complete-graph ideals
// ---------------------------------------------------------------------------

/// One path of the union: `edges >= 1` edges, optionally sharing its first
/// vertex with the given complete-graph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSpec {
    pub edges: usize,
    pub attach: Option<usize>,
}

/// Disjoint paths against `K_m`: every attached path hangs at a distinct
/// complete-graph vertex by a path endpoint (a free vertex of the path).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductConfig {
    pub m: usize,
    pub paths: Vec<PathSpec>,
}

impl ProductConfig {
    pub fn total_path_edges(&self) -> usize {
        self.paths.iter().map(|p| p.edges).sum()
    }

    /// Build the ambient vertex set: the complete graph on `1..=m`, then the
    /// paths. Returns `(H as a graph, K_m as a graph, total vertex count)`.
    pub fn build(&self) -> Result<(Graph, Graph, usize)> {
        if self.m < 2 {
            return Err(Error::Precondition("complete graph needs m >= 2".into()));
        }
        if self.paths.is_empty() || self.paths.iter().any(|p| p.edges == 0) {
            return Err(Error::Precondition("every path needs at least one edge".into()));
        }
        let mut used = BTreeSet::new();
        for p in &self.paths {
            if let Some(v) = p.attach {
                if v < 1 || v > self.m {
                    return Err(Error::Precondition(format!(
                        "attach vertex {v} outside the complete graph"
                    )));
                }
                if !used.insert(v) {
                    return Err(Error::Precondition(
                        "paths must attach at distinct complete-graph vertices".into(),
                    ));
                }
            }
        }
        let mut next = self.m + 1;
        let mut h_edges: Vec<(usize, usize)> = Vec::new();
        for p in &self.paths {
            let mut prev = match p.attach {
                Some(v) => v,
                None => {
                    let v = next;
                    next += 1;
                    v
                }
            };
            for _ in 0..p.edges {
                let v = next;
                next += 1;
                h_edges.push((prev, v));
                prev = v;
            }
        }
        let total = next - 1;
        let h = Graph::new(total, &h_edges)?;
        let mut k_edges = Vec::new();
        for i in 1..=self.m {
            for j in (i + 1)..=self.m {
                k_edges.push((i, j));
            }
        }
        let km = Graph::new(total, &k_edges)?;
        Ok((h, km, total))
    }
}

/// `reg S/(I_H * J_Km)` together with the number of path edges.
pub fn regularity_of_product(
    cfg: &ProductConfig,
    field: CoefficientField,
) -> Result<(RegularityResult, usize)> {
    let (h, km, total) = cfg.build()?;
    feasibility_guard(2 * total, h.num_edges() * km.num_edges())?;
    let ring = PolyRing::new(total, field);
    let ih = binomial_edge_ideal(&ring, &h, EdgeBinomialKind::Parity)?;
    let jk = binomial_edge_ideal(&ring, &km, EdgeBinomialKind::Standard)?;
    let prod = ih.product(&jk)?;
    Ok((regularity(&prod)?, cfg.total_path_edges()))
}

/// Check `reg S/J_G = sum_i reg S/J_{L_i}` for graphs glued at free vertices.
pub fn gluing_additivity_check(
    parts: &[Graph],
    identifications: &[((usize, usize), (usize, usize))],
    field: CoefficientField,
) -> Result<bool> {
    let (glued, _) = crate::graph::glue(parts, identifications)?;
    let mut sum = 0i64;
    for part in parts {
        let ring = PolyRing::new(part.n(), field);
        let ideal = binomial_edge_ideal(&ring, part, EdgeBinomialKind::Standard)?;
        let r = regularity(&ideal)?;
        if !r.certified {
            return Err(Error::InfeasibleSize("uncertified part regularity".into()));
        }
        sum += r.value;
    }
    let ring = PolyRing::new(glued.n(), field);
    let ideal = binomial_edge_ideal(&ring, &glued, EdgeBinomialKind::Standard)?;
    let whole = regularity(&ideal)?;
    if !whole.certified {
        return Err(Error::InfeasibleSize("uncertified glued regularity".into()));
    }
    Ok(whole.value == sum)
}

// convenient helpers reused by the harness and tests

pub fn path_graph(n: usize) -> Graph {
    build_path(n).expect("n >= 2")
}

pub fn complete_graph(n: usize) -> Graph {
    build_complete(n).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cycle;
    use crate::poly::parse_polynomial;

    const Q: CoefficientField = CoefficientField::Rationals;

    fn ring(n: usize) -> Arc<PolyRing> {
        PolyRing::new(n, Q)
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn principal_quadric_is_koszul() {
        let r = ring(2);
        let i = ideal(&r, &["x1*y2 - x2*y1"]);
        let t = minimal_free_resolution(&i, None).unwrap();
        assert_eq!(t.betti(0, 0), 1);
        assert_eq!(t.betti(1, 2), 1);
        assert_eq!(t.pd, 1);
        assert!(t.certified);
        assert_eq!(t.regularity(), 1);
    }

    #[test]
    fn triangle_has_the_determinantal_resolution() {
        // 0 -> S(-3)^2 -> S(-2)^3 -> S -> S/J -> 0
        let r = ring(3);
        let c3 = build_cycle(3).unwrap();
        let i = binomial_edge_ideal(&r, &c3, EdgeBinomialKind::Standard).unwrap();
        let t = minimal_free_resolution(&i, None).unwrap();
        assert_eq!(t.betti(0, 0), 1);
        assert_eq!(t.betti(1, 2), 3);
        assert_eq!(t.betti(2, 3), 2);
        assert_eq!(t.pd, 2);
        assert_eq!(t.regularity(), 1);
    }

    #[test]
    fn path_ideals_resolve_as_koszul_complexes() {
        // n-1 quadrics forming a regular sequence: beta_{k,2k} = C(n-1, k)
        for n in [3usize, 4, 5] {
            let r = ring(n);
            let p = path_graph(n);
            let i = binomial_edge_ideal(&r, &p, EdgeBinomialKind::Standard).unwrap();
            let t = minimal_free_resolution(&i, None).unwrap();
            let c = n - 1;
            assert_eq!(t.pd, c);
            for k in 0..=c {
                assert_eq!(t.betti(k, 2 * k), binom(c, k), "n={n} k={k}");
            }
            assert_eq!(t.regularity(), (n - 1) as i64);
        }
    }

    #[test]
    fn zero_and_improper_ideals() {
        let r = ring(2);
        let z = Ideal::zero(&r);
        let t = minimal_free_resolution(&z, None).unwrap();
        assert_eq!(t.pd, 0);
        assert_eq!(t.regularity(), 0);
        let unit = Ideal::unit(&r);
        assert!(minimal_free_resolution(&unit, None).is_err());
        let mixed = ideal(&r, &["x1 + x1*y1"]);
        assert!(minimal_free_resolution(&mixed, None).is_err());
    }

    #[test]
    fn betti_tables_are_order_independent() {
        let c4 = build_cycle(4).unwrap();
        let drl = ring(4);
        let lex = PolyRing::with_order(4, Q, crate::monomial::MonomialOrder::Lex);
        let t1 = minimal_free_resolution(
            &binomial_edge_ideal(&drl, &c4, EdgeBinomialKind::Standard).unwrap(),
            None,
        )
        .unwrap();
        let t2 = minimal_free_resolution(
            &binomial_edge_ideal(&lex, &c4, EdgeBinomialKind::Standard).unwrap(),
            None,
        )
        .unwrap();
        assert_eq!(t1.entries, t2.entries);
        assert_eq!(t1.pd, t2.pd);
    }

    #[test]
    fn cycle_regularity_values() {
        // reg S/J = 2s + n - 4 at s = 1 for small cycles
        for (n, expect) in [(3usize, 1i64), (4, 2), (5, 3)] {
            let reg = regularity_of_power(&build_cycle(n).unwrap(), EdgeBinomialKind::Standard, 1, Q)
                .unwrap();
            assert!(reg.certified);
            assert_eq!(reg.value, expect, "cycle n={n}");
        }
        // parity triangle: 2s + n - 2 at s = 1
        let reg =
            regularity_of_power(&build_cycle(3).unwrap(), EdgeBinomialKind::Parity, 1, Q).unwrap();
        assert_eq!(reg.value, 3);
    }

    #[test]
    fn triangle_square_regularity() {
        let reg = regularity_of_power(&build_cycle(3).unwrap(), EdgeBinomialKind::Standard, 2, Q)
            .unwrap();
        assert!(reg.certified);
        assert_eq!(reg.value, 3); // 2s + n - 4 at s = 2, n = 3
    }

    #[test]
    fn field_choice_does_not_change_small_tables() {
        let fp = CoefficientField::prime(32003).unwrap();
        let c4 = build_cycle(4).unwrap();
        let t_q = minimal_free_resolution(
            &binomial_edge_ideal(&ring(4), &c4, EdgeBinomialKind::Standard).unwrap(),
            None,
        )
        .unwrap();
        let t_p = minimal_free_resolution(
            &binomial_edge_ideal(&PolyRing::new(4, fp), &c4, EdgeBinomialKind::Standard)
                .unwrap(),
            None,
        )
        .unwrap();
        assert_eq!(t_q.entries, t_p.entries);
    }

    #[test]
    fn parity_product_small() {
        // one path edge against K_2: reg = 2 + 1
        let cfg = ProductConfig { m: 2, paths: vec![PathSpec { edges: 1, attach: Some(1) }] };
        let (reg, n) = regularity_of_product(&cfg, Q).unwrap();
        assert_eq!(n, 1);
        assert_eq!(reg.value, 3);
    }

    #[test]
    fn product_config_validation() {
        let bad = ProductConfig {
            m: 2,
            paths: vec![
                PathSpec { edges: 1, attach: Some(1) },
                PathSpec { edges: 1, attach: Some(1) },
            ],
        };
        assert!(regularity_of_product(&bad, Q).is_err());
        let empty = ProductConfig { m: 2, paths: vec![] };
        assert!(regularity_of_product(&empty, Q).is_err());
    }

    #[test]
    fn gluing_additivity_small() {
        // P3 glued to P3 at endpoints is P5: 2 + 2 = 4
        let p3 = path_graph(3);
        assert!(gluing_additivity_check(
            &[p3.clone(), p3.clone()],
            &[((0, 3), (1, 1))],
            Q
        )
        .unwrap());
        // K3 glued to an edge: 1 + 1 = 2
        let k3 = complete_graph(3);
        let p2 = path_graph(2);
        assert!(gluing_additivity_check(&[k3, p2], &[((0, 1), (1, 1))], Q).unwrap());
        // single part: trivially equal
        assert!(gluing_additivity_check(&[path_graph(4)], &[], Q).unwrap());
    }

    #[test]
    fn degree_cap_flags_uncertified() {
        let r = ring(3);
        let c3 = build_cycle(3).unwrap();
        let i = binomial_edge_ideal(&r, &c3, EdgeBinomialKind::Standard).unwrap();
        let t = minimal_free_resolution(&i, Some(2)).unwrap();
        assert!(!t.certified);
        assert_eq!(t.cap_used, Some(2));
        // the capped regularity is a lower bound of the true value 1
        assert!(t.regularity() <= 1);
    }

    #[test]
    fn staircase_rendering() {
        let r = ring(3);
        let c3 = build_cycle(3).unwrap();
        let i = binomial_edge_ideal(&r, &c3, EdgeBinomialKind::Standard).unwrap();
        let t = minimal_free_resolution(&i, None).unwrap();
        let s = t.pretty();
        assert!(s.contains("total:"));
        assert!(s.lines().count() >= 3);
    }
}
