//! Exact coefficient fields: arbitrary-precision rationals and odd prime fields.
//!
//! Every scalar operation is exact. Rationals are kept in lowest terms with a
//! positive denominator (num-rational maintains that invariant); prime field
//! elements are reduced representatives in `0..p`. The characteristic-2 case is
//! rejected at construction because the parity statements need `char(k) != 2`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientField {
    /// Arbitrary-precision rationals.
    Rationals,
    /// `Z/p` for an odd prime `p`.
    PrimeField(u64),
}

/// Standard large odd prime used as the fast default for prime-field runs.
pub const DEFAULT_PRIME: u64 = 32003;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. The variant must match the field that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

impl CoefficientField {
    pub fn rationals() -> Self {
        CoefficientField::Rationals
    }

    /// Prime field constructor; rejects 2 and composites.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(CoefficientField::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoefficientField::Rationals => Scalar::Rat(BigRational::zero()),
            CoefficientField::PrimeField(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            CoefficientField::Rationals => Scalar::Rat(BigRational::one()),
            CoefficientField::PrimeField(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            CoefficientField::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            CoefficientField::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
        }
    }

    /// Rational `num/den`; in prime fields this is `num * den^-1 mod p`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self {
            CoefficientField::Rationals => {
                Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            CoefficientField::PrimeField(_) => {
                let d = self.from_i64(den);
                assert!(!self.is_zero(&d), "denominator divisible by {}", self.characteristic());
                self.div(&self.from_i64(num), &d)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoefficientField::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (CoefficientField::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x + y) % p)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoefficientField::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (CoefficientField::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x + p - y) % p)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (CoefficientField::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (CoefficientField::PrimeField(p), Scalar::Fp(x)) => {
                Scalar::Fp(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoefficientField::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (CoefficientField::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (CoefficientField::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            (CoefficientField::PrimeField(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                // extended Euclid on (x, p)
                let (mut t, mut new_t) = (0i128, 1i128);
                let (mut r, mut new_r) = (*p as i128, *x as i128);
                while new_r != 0 {
                    let q = r / new_r;
                    (t, new_t) = (new_t, t - q * new_t);
                    (r, new_r) = (new_r, r - q * new_r);
                }
                debug_assert_eq!(r, 1);
                Scalar::Fp(t.rem_euclid(*p as i128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Reduce a rational scalar into this prime field. Fails if the
    /// denominator vanishes mod p.
    pub fn reduce_rational(&self, r: &BigRational) -> Option<Scalar> {
        match self {
            CoefficientField::Rationals => Some(Scalar::Rat(r.clone())),
            CoefficientField::PrimeField(p) => {
                let p_big = BigInt::from(*p);
                let num = r.numer().mod_floor_u64(&p_big);
                let den = r.denom().mod_floor_u64(&p_big);
                if den == 0 {
                    return None;
                }
                Some(self.div(&Scalar::Fp(num), &Scalar::Fp(den)))
            }
        }
    }

    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => v.to_string(),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: &BigInt) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: &BigInt) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(p);
        let (_, digits) = m.to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("residue exceeds u64"),
        }
    }
}

impl Scalar {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Fp(_) => None,
        }
    }

    /// Sign of the scalar for display purposes; prime-field elements count as
    /// positive.
    pub fn display_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Fp(_) => false,
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "q"),
            CoefficientField::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_two_and_composites() {
        assert!(CoefficientField::prime(2).is_err());
        assert!(CoefficientField::prime(9).is_err());
        assert!(CoefficientField::prime(1).is_err());
        assert!(CoefficientField::prime(32003).is_ok());
        assert!(CoefficientField::prime(3).is_ok());
    }

    #[test]
    fn fp_inverse_round_trips() {
        let f = CoefficientField::prime(32003).unwrap();
        for v in [1u64, 2, 5, 17, 32002] {
            let a = Scalar::Fp(v);
            assert!(f.is_one(&f.mul(&a, &f.inv(&a))));
        }
    }

    #[test]
    fn rational_ops_are_exact() {
        let f = CoefficientField::rationals();
        let a = f.from_ratio(1, 3);
        let b = f.from_ratio(1, 6);
        let s = f.add(&a, &b);
        assert_eq!(f.format(&s), "1/2");
        assert!(f.is_zero(&f.sub(&s, &f.from_ratio(1, 2))));
    }

    #[test]
    fn rational_reduction_mod_p_matches() {
        let q = CoefficientField::rationals();
        let fp = CoefficientField::prime(7).unwrap();
        let a = q.from_ratio(3, 5); // 3 * 5^-1 = 3*3 = 9 = 2 mod 7
        let r = match a {
            Scalar::Rat(ref r) => r.clone(),
            _ => unreachable!(),
        };
        assert_eq!(fp.reduce_rational(&r), Some(Scalar::Fp(2)));
        let bad = q.from_ratio(1, 7);
        let r = match bad {
            Scalar::Rat(ref r) => r.clone(),
            _ => unreachable!(),
        };
        assert_eq!(fp.reduce_rational(&r), None);
    }
}
