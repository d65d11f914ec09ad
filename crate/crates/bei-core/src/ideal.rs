//! Ideal-level algebra: sums, products, powers, colon ideals, intersections
//! and minimal generators.
//!
//! Colon ideals are computed through the intersection with a principal ideal
//! followed by exact division; intersections eliminate an auxiliary variable
//! `t` from `t*I + (1-t)*J` under a block order with `t` greatest. Minimal
//! generators are extracted degree by degree with exact linear algebra, which
//! is enough because every ideal in play is homogeneous.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, in_ideal, normal_form, GroebnerBasis};
use crate::linalg::{CoordInterner, RowReducer};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::sync::{Arc, OnceLock};

/// An ideal: generator list plus a write-once cache of its reduced Groebner
/// basis and a free-text provenance tag.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    provenance: String,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            provenance: self.provenance.clone(),
            gb,
        }
    }
}

impl PartialEq for Ideal {
    /// Mathematical equality of ideals (canonical-form comparison).
    fn eq(&self, other: &Self) -> bool {
        self.equal(other).unwrap_or(false)
    }
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !g.same_ring(&Polynomial::zero(ring)) {
                return Err(Error::RingMismatch);
            }
        }
        let mut gens: Vec<Polynomial> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by(|a, b| a.cmp_canonical(b));
        gens.dedup();
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            provenance: String::new(),
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            provenance: String::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn with_provenance(mut self, tag: impl Into<String>) -> Self {
        self.provenance = tag.into();
        self
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// All generators homogeneous (vacuously true for the zero ideal).
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Groebner basis, computed once per value.
    pub fn groebner_basis(&self) -> Arc<GroebnerBasis> {
        self.gb
            .get_or_init(|| {
                Arc::new(
                    buchberger(&self.ring, &self.generators)
                        .expect("generators live in the ideal's ring"),
                )
            })
            .clone()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        in_ideal(p, &self.groebner_basis())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let gb = self.groebner_basis();
        other.generators.iter().all(|g| in_ideal(g, &gb))
    }

    /// Equality via reduced Groebner bases (the canonical form).
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        if *self.ring != *other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis().gens() == other.groebner_basis().gens())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.groebner_basis())
    }

    // ------------------------------------------------------------------
    // arithmetic
    // ------------------------------------------------------------------

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `s`-th power via degree-`s` monomials in the generators.
    pub fn power(&self, s: usize) -> Result<Ideal> {
        if s == 0 {
            return Err(Error::ZeroPower);
        }
        if s == 1 {
            return Ok(self.clone());
        }
        // multisets of size s from the generator list
        fn rec(
            gens_in: &[Polynomial],
            start: usize,
            left: usize,
            acc: &Polynomial,
            out: &mut Vec<Polynomial>,
        ) -> Result<()> {
            if left == 0 {
                out.push(acc.clone());
                return Ok(());
            }
            for (k, g) in gens_in.iter().enumerate().skip(start) {
                let next = acc.mul(g)?;
                rec(gens_in, k, left - 1, &next, out)?;
            }
            Ok(())
        }
        let mut gens = Vec::new();
        rec(&self.generators, 0, s, &Polynomial::one(&self.ring), &mut gens)?;
        Ideal::new(&self.ring, gens)
    }

    /// Colon by a single element: `{g : g*f in I}`, computed as
    /// `(I ∩ <f>) / f`.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !f.same_ring(&Polynomial::zero(&self.ring)) {
            return Err(Error::RingMismatch);
        }
        // constants colon to the ideal itself
        if f.degree() == Some(0) {
            return Ok(self.clone());
        }
        if self.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for g in &meet.generators {
            gens.push(g.divide_exact(f)?);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Colon by a product computed as an iterated element colon.
    pub fn colon_product(&self, factors: &[&Polynomial]) -> Result<Ideal> {
        let mut acc = self.clone();
        for f in factors {
            acc = acc.colon_element(f)?;
        }
        Ok(acc)
    }

    /// Intersection by elimination of `t` from `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.elimination_extension();
        let t = Polynomial::variable(&ext, ext.t());
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(g.lift_to(&ext).mul(&t)?);
        }
        for g in &other.generators {
            gens.push(g.lift_to(&ext).mul(&one_minus_t)?);
        }
        let gb = buchberger(&ext, &gens)?;
        let kept: Vec<Polynomial> = gb
            .gens()
            .iter()
            .filter(|g| {
                g.terms().iter().all(|(m, _)| m.block_degree(ext.n_aux()) == 0)
            })
            .map(|g| g.project_to(&self.ring))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Minimal generating subset/combination for a homogeneous ideal,
    /// extracted degree by degree with exact linear algebra.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let field = *self.ring.field();
        let mut candidates: Vec<Polynomial> = self.generators.clone();
        candidates.sort_by(|a, b| {
            a.degree().cmp(&b.degree()).then_with(|| a.cmp_canonical(b))
        });
        let degrees: Vec<u16> = {
            let mut d: Vec<u16> = candidates.iter().filter_map(|g| g.degree()).collect();
            d.sort_unstable();
            d.dedup();
            d
        };
        let mut chosen: Vec<Polynomial> = Vec::new();
        let mut interner = CoordInterner::new();
        for d in degrees {
            // span of { m * g : g chosen, deg(m g) = d }
            let mut reducer = RowReducer::new(field);
            for g in &chosen {
                let gd = g.degree().unwrap();
                if gd > d {
                    continue;
                }
                for m in monomials_of_degree(&self.ring, (d - gd) as usize) {
                    let prod = g.mul_term(&m, &field.one());
                    let row = poly_row(&mut interner, &prod);
                    reducer.insert(row);
                }
            }
            for g in candidates.iter().filter(|g| g.degree() == Some(d)) {
                let row = poly_row(&mut interner, g);
                if reducer.insert(row) {
                    chosen.push(g.clone());
                }
            }
        }
        Ok(chosen)
    }

    /// True iff `I : g == I : g^n` for all `2 <= n <= n_max`.
    pub fn colon_power_stability(&self, g: &Polynomial, n_max: usize) -> Result<bool> {
        let base = self.colon_element(g)?;
        let mut power = g.clone();
        for _ in 2..=n_max {
            power = power.mul(g)?;
            let cn = self.colon_element(&power)?;
            if !base.equal(&cn)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// JSON payload: ring descriptor, generator strings, provenance.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": {
                "n_vertices": self.ring.n_vertices(),
                "field": self.ring.field().to_string(),
                "order": self.ring.order().to_string(),
            },
            "generators": self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "provenance": self.provenance,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Ideal> {
        let ring_v = value
            .get("ring")
            .ok_or_else(|| Error::Parse("missing ring".into()))?;
        let n = ring_v
            .get("n_vertices")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse("missing n_vertices".into()))? as usize;
        let field = match ring_v.get("field").and_then(|v| v.as_str()) {
            Some("q") | None => crate::field::CoefficientField::Rationals,
            Some(s) if s.starts_with("fp:") => {
                let p: u64 = s[3..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad field {s:?}")))?;
                crate::field::CoefficientField::prime(p)?
            }
            Some(s) => return Err(Error::Parse(format!("bad field {s:?}"))),
        };
        let order = match ring_v.get("order").and_then(|v| v.as_str()) {
            Some("lex") => crate::monomial::MonomialOrder::Lex,
            _ => crate::monomial::MonomialOrder::DegRevLex,
        };
        let ring = PolyRing::with_order(n, field, order);
        let gens = value
            .get("generators")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("missing generators".into()))?
            .iter()
            .map(|s| {
                s.as_str()
                    .ok_or_else(|| Error::Parse("generator must be a string".into()))
                    .and_then(|s| crate::poly::parse_polynomial(&ring, s))
            })
            .collect::<Result<Vec<_>>>()?;
        let prov = value
            .get("provenance")
            .and_then(|v| v.as_str())
            .unwrap_or("")
            .to_string();
        Ok(Ideal::new(&ring, gens)?.with_provenance(prov))
    }
}

fn poly_row(interner: &mut CoordInterner, p: &Polynomial) -> Vec<(u32, crate::field::Scalar)> {
    let mut row: Vec<(u32, crate::field::Scalar)> = p
        .terms()
        .iter()
        .map(|(m, c)| (interner.intern(0, m), c.clone()))
        .collect();
    row.sort_by_key(|(id, _)| *id);
    row
}

/// All monomials of the given total degree, in a deterministic order.
pub fn monomials_of_degree(ring: &Arc<PolyRing>, degree: usize) -> Vec<Monomial> {
    let nv = ring.num_vars();
    let mut out = Vec::new();
    let mut exps = vec![0u8; nv];
    fn rec(exps: &mut Vec<u8>, var: usize, left: usize, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left as u8;
            out.push(Monomial::from_exps(exps));
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e as u8;
            rec(exps, var + 1, left - e, out);
        }
        exps[var] = 0;
    }
    if nv == 0 {
        return out;
    }
    rec(&mut exps, 0, degree, &mut out);
    out
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

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| p(r, s)).collect()).unwrap()
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let r = ring(3);
        let a = ideal(&r, &["x1*y2 - x2*y1"]);
        let z = Ideal::zero(&r);
        assert!(a.sum(&z).unwrap().equal(&a).unwrap());
    }

    #[test]
    fn sum_of_edges_gives_path_ideal() {
        let r = ring(3);
        let a = ideal(&r, &["x1*y2 - x2*y1"]);
        let b = ideal(&r, &["x2*y3 - x3*y2"]);
        let path = ideal(&r, &["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
        assert!(a.sum(&b).unwrap().equal(&path).unwrap());
        assert!(!a.equal(&path).unwrap());
    }

    #[test]
    fn unit_scaling_is_equal() {
        let r = ring(2);
        let a = ideal(&r, &["x1*y2 - x2*y1"]);
        let b = ideal(&r, &["3*x1*y2 - 3*x2*y1"]);
        assert!(a.equal(&b).unwrap());
    }

    #[test]
    fn product_with_unit_ideal() {
        let r = ring(2);
        let a = ideal(&r, &["x1*y2 - x2*y1"]);
        let one = Ideal::unit(&r);
        assert!(a.product(&one).unwrap().equal(&a).unwrap());
    }

    #[test]
    fn principal_square() {
        let r = ring(2);
        let f = "x1*y2 - x2*y1";
        let a = ideal(&r, &[f]);
        let sq = a.power(2).unwrap();
        let expect = Ideal::new(&r, vec![p(&r, f).pow(2).unwrap()]).unwrap();
        assert!(sq.equal(&expect).unwrap());
        assert!(a.power(1).unwrap().equal(&a).unwrap());
        assert!(matches!(a.power(0), Err(Error::ZeroPower)));
    }

    #[test]
    fn product_on_disjoint_supports_has_one_generator() {
        let r = ring(4);
        let parity_edge = ideal(&r, &["x1*x2 - y1*y2"]);
        let k2 = ideal(&r, &["x3*y4 - x4*y3"]);
        let prod = parity_edge.product(&k2).unwrap();
        assert_eq!(prod.num_generators(), 1);
        assert_eq!(prod.generators()[0].degree(), Some(4));
    }

    #[test]
    fn colon_by_constant_is_identity() {
        let r = ring(2);
        let a = ideal(&r, &["x1*y2 - x2*y1"]);
        let c = a.colon_element(&Polynomial::one(&r)).unwrap();
        assert!(c.equal(&a).unwrap());
    }

    #[test]
    fn intersect_self_and_coprime_principals() {
        let r = ring(2);
        let a = ideal(&r, &["x1"]);
        let b = ideal(&r, &["y1"]);
        let meet = a.intersect(&b).unwrap();
        assert!(meet.equal(&ideal(&r, &["x1*y1"])).unwrap());
        assert!(a.intersect(&a).unwrap().equal(&a).unwrap());
    }

    #[test]
    fn path_colon_identity_small() {
        // J(path 1-2-3) : f13 = J + <x2, y2>
        let r = ring(3);
        let path = ideal(&r, &["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
        let f13 = p(&r, "x1*y3 - x3*y1");
        let colon = path.colon_element(&f13).unwrap();
        let expect = ideal(&r, &["x1*y2 - x2*y1", "x2*y3 - x3*y2", "x2", "y2"]);
        assert!(colon.equal(&expect).unwrap());
        // soundness: f * (I : f) lies in I
        for g in colon.generators() {
            assert!(path.contains(&g.mul(&f13).unwrap()));
        }
        // I is contained in I : f
        assert!(colon.contains_ideal(&path));
    }

    #[test]
    fn minimal_generators_counts() {
        let r = ring(3);
        // duplicated generator collapses
        let a = ideal(&r, &["x1*y2 - x2*y1", "2*x1*y2 - 2*x2*y1"]);
        assert_eq!(a.minimal_generators().unwrap().len(), 1);
        // triangle: three independent quadrics
        let tri = ideal(&r, &["x1*y2 - x2*y1", "x2*y3 - x3*y2", "x1*y3 - x3*y1"]);
        assert_eq!(tri.minimal_generators().unwrap().len(), 3);
        // triangle squared: all six products minimal
        let sq = tri.power(2).unwrap();
        assert_eq!(sq.num_generators(), 6);
        assert_eq!(sq.minimal_generators().unwrap().len(), 6);
    }

    #[test]
    fn colon_power_stability_principal() {
        let r = ring(2);
        let f = p(&r, "x1*y2 - x2*y1");
        let a = Ideal::new(&r, vec![f.clone()]).unwrap();
        assert!(a.colon_power_stability(&f, 3).unwrap());
    }

    #[test]
    fn power_sum_rule() {
        // I^(s+t) = I^s * I^t as ideals
        let r = ring(3);
        let a = ideal(&r, &["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
        let lhs = a.power(3).unwrap();
        let rhs = a.power(2).unwrap().product(&a).unwrap();
        assert!(lhs.equal(&rhs).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let r = ring(3);
        let a = ideal(&r, &["x1*y2 - x2*y1", "1/2*x2*y3 - 1/2*x3*y2"]).with_provenance("demo");
        let v = a.to_json();
        let b = Ideal::from_json(&v).unwrap();
        assert!(a.equal(&b).unwrap());
        assert_eq!(b.provenance(), "demo");
    }
}
