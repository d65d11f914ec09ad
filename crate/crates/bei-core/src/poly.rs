//! Immutable multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept strictly sorted, descending in the ring's monomial order,
//! with no zero coefficients; the leading term is the first entry. All
//! arithmetic returns fresh values.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
    homogeneous: bool,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new(), homogeneous: true }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.num_vars()), c)],
            homogeneous: true,
        }
    }

    pub fn variable(ring: &Arc<PolyRing>, var: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var_pow(ring.num_vars(), var, 1), ring.field().one())],
            homogeneous: true,
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, mono: Monomial, c: Scalar) -> Self {
        Self::from_terms(ring, vec![(mono, c)])
    }

    /// Build from an arbitrary term list: sorts, merges and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let field = ring.field();
        let mut merged: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = field.add(lc, &c);
                }
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !field.is_zero(c));
        let homogeneous = match merged.first() {
            None => true,
            Some((m0, _)) => merged.iter().all(|(m, _)| m.degree() == m0.degree()),
        };
        Polynomial { ring: ring.clone(), terms: merged, homogeneous }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.ring.cmp_monomials(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(ca, cb);
                    if !field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        let homogeneous = match out.first() {
            None => true,
            Some((m0, _)) => out.iter().all(|(m, _)| m.degree() == m0.degree()),
        };
        Ok(Polynomial { ring: self.ring.clone(), terms: out, homogeneous })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
            homogeneous: self.homogeneous,
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, mono: &Monomial, coef: &Scalar) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(coef) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), field.mul(c, coef)))
                .collect(),
            homogeneous: self.homogeneous,
        }
    }

    pub fn scale(&self, coef: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.num_vars()), coef)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        // schoolbook product; desk-scale inputs keep this cheap
        let mut acc: Vec<(Monomial, Scalar)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        let field = self.ring.field();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }

    pub fn pow(&self, k: usize) -> Result<Polynomial> {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Exact division: returns `q` with `q * f = self`, or `NotDivisible`.
    pub fn divide_exact(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let field = self.ring.field();
        let (flm, flc) = f.leading_term().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Scalar)> = Vec::new();
        while let Some((rlm, rlc)) = rem.leading_term() {
            if !flm.divides(rlm) {
                return Err(Error::NotDivisible);
            }
            let m = flm.quotient(rlm);
            let c = field.div(rlc, flc);
            quot.push((m.clone(), c.clone()));
            rem = rem.sub(&f.mul_term(&m, &c))?;
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                if self.ring.field().is_one(c) {
                    self.clone()
                } else {
                    let inv = self.ring.field().inv(c);
                    self.scale(&inv)
                }
            }
        }
    }

    /// Over the rationals: clear denominators and divide by the integer
    /// content, keeping the leading coefficient positive. Identity over prime
    /// fields (up to monic scaling these agree as ideal generators).
    pub fn primitive(&self) -> Polynomial {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return self.clone();
        }
        match &self.terms[0].1 {
            Scalar::Fp(_) => self.monic(),
            Scalar::Rat(_) => {
                let mut den_lcm = BigInt::one();
                for (_, c) in &self.terms {
                    let r = c.as_rational().unwrap();
                    den_lcm = den_lcm.lcm(r.denom());
                }
                let mut num_gcd = BigInt::zero();
                for (_, c) in &self.terms {
                    let r = c.as_rational().unwrap();
                    let n = r.numer() * &den_lcm / r.denom();
                    num_gcd = num_gcd.gcd(&n);
                }
                if num_gcd.is_zero() {
                    return self.clone();
                }
                let lead = self.terms[0].1.as_rational().unwrap();
                if (lead.numer().sign() == num_bigint::Sign::Minus) != num_gcd.is_negative() {
                    num_gcd = -num_gcd;
                }
                let factor = Scalar::Rat(num_rational::BigRational::new(den_lcm, num_gcd));
                self.scale(&factor)
            }
        }
    }

    /// Apply a variable permutation (e.g. the x/y swap of the bipartite
    /// isomorphism).
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        debug_assert_eq!(perm.len(), self.ring.num_vars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u8; perm.len()];
                for (v, &e) in m.exps().iter().enumerate() {
                    exps[perm[v]] = e;
                }
                (Monomial::from_exps(&exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Lift into an extension ring obtained by prepending auxiliary variables.
    pub fn lift_to(&self, ext: &Arc<PolyRing>) -> Polynomial {
        let k = ext.n_aux() - self.ring.n_aux();
        debug_assert!(ext.n_vertices() == self.ring.n_vertices());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.pad_front(k), c.clone()))
            .collect();
        Polynomial::from_terms(ext, terms)
    }

    /// Project an auxiliary-variable-free polynomial back into the base ring.
    pub fn project_to(&self, base: &Arc<PolyRing>) -> Polynomial {
        let k = self.ring.n_aux() - base.n_aux();
        debug_assert!(self
            .terms
            .iter()
            .all(|(m, _)| m.block_degree(k) == 0));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.strip_front(k), c.clone()))
            .collect();
        Polynomial::from_terms(base, terms)
    }

    /// Move to a ring with the same variables but another order or field.
    /// Rational coefficients reduce mod p when the target is a prime field;
    /// returns `None` if a denominator vanishes.
    pub fn transfer_to(&self, target: &Arc<PolyRing>) -> Option<Polynomial> {
        debug_assert_eq!(target.num_vars(), self.ring.num_vars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let c2 = match (c, target.field()) {
                (Scalar::Rat(r), f) => f.reduce_rational(r)?,
                (Scalar::Fp(_), crate::field::CoefficientField::PrimeField(_)) => c.clone(),
                (Scalar::Fp(_), crate::field::CoefficientField::Rationals) => return None,
            };
            terms.push((m.clone(), c2));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Deterministic total order used to sort generator lists and bases.
    pub fn cmp_canonical(&self, other: &Polynomial) -> Ordering {
        let by_len_deg = self
            .degree()
            .cmp(&other.degree())
            .then(self.terms.len().cmp(&other.terms.len()));
        if by_len_deg != Ordering::Equal {
            return by_len_deg;
        }
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            match self.ring.cmp_monomials(ma, mb) {
                Ordering::Equal => {}
                o => return o,
            }
            match format!("{:?}", ca).cmp(&format!("{:?}", cb)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

// ---------------------------------------------------------------------------
// text syntax: `x1*y2 - x2*y1`, `^` for powers, `a/b` rational coefficients
// ---------------------------------------------------------------------------

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.display_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { field.neg(c) } else { c.clone() };
            let coef_str = field.format(&abs);
            let mut factors: Vec<String> = Vec::new();
            if coef_str != "1" || m.is_one() {
                factors.push(coef_str);
            }
            for v in 0..m.num_vars() {
                let e = m.exponent(v);
                if e == 1 {
                    factors.push(self.ring.var_name(v));
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(v), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parse the canonical text syntax in the given ring.
pub fn parse_polynomial(ring: &Arc<PolyRing>, input: &str) -> Result<Polynomial> {
    let mut p = Parser { ring: ring.clone(), chars: input.chars().collect(), pos: 0 };
    let poly = p.parse_sum()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!("trailing input at byte {}", p.pos)));
    }
    Ok(poly)
}

struct Parser {
    ring: Arc<PolyRing>,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_sum(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term()?;
            acc = if sign { acc.sub(&term)? } else { acc.add(&term)? };
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = false;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        loop {
            let factor = self.parse_factor()?;
            acc = acc.mul(&factor)?;
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.parse_integer()?;
                    if den == 0 {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    Ok(Polynomial::constant(&self.ring, self.ring.field().from_ratio(num, den)))
                } else {
                    Ok(Polynomial::constant(&self.ring, self.ring.field().from_i64(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self
                    .chars
                    .get(self.pos)
                    .map(|c| c.is_ascii_digit())
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let var = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                let exp = if self.peek() == Some('^') {
                    self.pos += 1;
                    let e = self.parse_integer()?;
                    if !(0..=255).contains(&e) {
                        return Err(Error::Parse(format!("exponent {e} out of range")));
                    }
                    e as u8
                } else {
                    1
                };
                Ok(Polynomial::monomial(
                    &self.ring,
                    Monomial::var_pow(self.ring.num_vars(), var, exp),
                    self.ring.field().one(),
                ))
            }
            Some('(') => Err(Error::Parse("parentheses are not part of the syntax".into())),
            other => Err(Error::Parse(format!("unexpected {other:?}"))),
        }
    }

    fn parse_integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(3, CoefficientField::Rationals)
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let r = ring();
        let a = p(&r, "x1*y2");
        assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn disjoint_supports_add_to_four_terms() {
        let r = ring();
        let f12 = p(&r, "x1*y2 - x2*y1");
        let f23 = p(&r, "x2*y3 - x3*y2");
        assert_eq!(f12.add(&f23).unwrap().num_terms(), 4);
    }

    #[test]
    fn cancellation_leaves_single_term() {
        let r = ring();
        let a = p(&r, "x1*x2 - y1*y2");
        let b = p(&r, "y1*y2");
        assert_eq!(a.add(&b).unwrap(), p(&r, "x1*x2"));
    }

    #[test]
    fn product_identity_and_square() {
        let r = ring();
        let f12 = p(&r, "x1*y2 - x2*y1");
        assert_eq!(f12.mul(&Polynomial::one(&r)).unwrap(), f12);
        // expand (x1*y2 - x2*y1)^2 by distributivity
        let sq = f12.mul(&f12).unwrap();
        assert_eq!(sq, p(&r, "x1^2*y2^2 - 2*x1*x2*y1*y2 + x2^2*y1^2"));
        assert!(sq.is_homogeneous());
        assert_eq!(sq.degree(), Some(4));
    }

    #[test]
    fn characteristic_three_kills_triple() {
        let r = PolyRing::new(3, CoefficientField::prime(3).unwrap());
        let x1 = p(&r, "x1");
        let three = Polynomial::constant(&r, r.field().from_i64(3));
        assert!(three.mul(&x1).unwrap().is_zero());
    }

    #[test]
    fn exact_division_of_constructed_product() {
        let r = ring();
        let f12 = p(&r, "x1*y2 - x2*y1");
        let x3 = p(&r, "x3");
        let a = f12.mul(&x3).unwrap();
        assert_eq!(a.divide_exact(&f12).unwrap(), x3);
    }

    #[test]
    fn division_failure_is_reported() {
        let r = ring();
        let f12 = p(&r, "x1*y2 - x2*y1");
        let x1 = p(&r, "x1");
        assert!(matches!(f12.divide_exact(&x1), Err(Error::NotDivisible)));
    }

    #[test]
    fn zero_dividend_divides() {
        let r = ring();
        let f12 = p(&r, "x1*y2 - x2*y1");
        let z = Polynomial::zero(&r);
        assert!(z.divide_exact(&f12).unwrap().is_zero());
        assert!(matches!(f12.divide_exact(&z), Err(Error::ZeroDivisor)));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r3 = ring();
        let r4 = PolyRing::new(4, CoefficientField::Rationals);
        let a = p(&r3, "x1");
        let b = p(&r4, "x1");
        assert!(matches!(a.add(&b), Err(Error::RingMismatch)));
    }

    #[test]
    fn print_parse_roundtrip_is_bit_exact() {
        let r = ring();
        // canonical strings: terms descending in the ring order
        for s in [
            "-x2*y1 + x1*y2",
            "x2^2*y1^2 - 2*x1*x2*y1*y2 + x1^2*y2^2",
            "-x1 + 1/2*y3",
            "3/2",
            "0",
            "x1*x2*x3",
            "-2*x1^3 + x2 - 1",
        ] {
            let poly = p(&r, s);
            assert_eq!(poly.to_string(), s);
            assert_eq!(parse_polynomial(&r, &poly.to_string()).unwrap(), poly);
        }
        // parsing is order-insensitive
        assert_eq!(p(&r, "x1*y2 - x2*y1"), p(&r, "-x2*y1 + x1*y2"));
    }

    #[test]
    fn primitive_part_clears_content() {
        let r = ring();
        let f = p(&r, "2/3*x1 - 4/3*x2");
        let g = f.primitive();
        assert_eq!(g, p(&r, "x1 - 2*x2"));
        // content clearing also normalizes the leading coefficient positive
        let h = p(&r, "-1/2*x1 + 3*y1").primitive();
        assert_eq!(h.to_string(), "x1 - 6*y1");
        assert!(!h.leading_term().unwrap().1.display_negative());
    }

    #[test]
    fn transfer_to_prime_field() {
        let r = ring();
        let fp = r.with_field(CoefficientField::prime(7).unwrap());
        let f = p(&r, "1/2*x1 - 3*y1");
        let g = f.transfer_to(&fp).unwrap();
        // 1/2 = 4 mod 7, -3 = 4 mod 7
        assert_eq!(g.to_string(), "4*x1 + 4*y1");
        let bad = p(&r, "1/7*x1");
        assert!(bad.transfer_to(&fp).is_none());
    }
}
