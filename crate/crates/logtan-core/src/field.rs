//! Scalar arithmetic: exact rationals of arbitrary precision and prime
//! fields `Z/p`.  Every scalar carries enough information to know which
//! field it lives in, so mixed-field arithmetic is caught immediately.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

use crate::error::CoreError;

/// Default prime modulus: the Mersenne prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Runtime choice of coefficient field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldSpec {
    /// The rational numbers with arbitrary-precision arithmetic.
    Rationals,
    /// The prime field `Z/p` for an odd prime `p`.
    Prime(u64),
}

impl FieldSpec {
    /// Validates the spec: `Prime(p)` requires `p` to be an odd prime.
    pub fn validate(&self) -> Result<(), CoreError> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(p) => {
                if *p > 2 && is_prime_u64(*p) {
                    Ok(())
                } else {
                    Err(CoreError::InvalidField(format!(
                        "modulus {} is not an odd prime",
                        p
                    )))
                }
            }
        }
    }

    /// The characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> K {
        match self {
            FieldSpec::Rationals => K::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => K::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> K {
        match self {
            FieldSpec::Rationals => K::Rat(BigRational::one()),
            FieldSpec::Prime(p) => K::Fp { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> K {
        match self {
            FieldSpec::Rationals => K::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                K::Fp { v: m, p: *p }
            }
        }
    }

    /// Builds `a/b` in this field; fails if `b` maps to zero.
    pub fn from_fraction(&self, a: i64, b: i64) -> Result<K, CoreError> {
        let num = self.from_i64(a);
        let den = self.from_i64(b);
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        num.div(&den)
    }

    /// A uniformly random scalar (for prime fields) or a small random
    /// integer (for the rationals), from the caller's RNG.
    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> K {
        match self {
            FieldSpec::Rationals => self.from_i64(rng.gen_range(-50..=50)),
            FieldSpec::Prime(p) => K::Fp {
                v: rng.gen_range(0..*p),
                p: *p,
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({})", p),
        }
    }
}

/// A field element.  Arithmetic between elements of different fields
/// panics: that is always a programming error, never a data error.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum K {
    Rat(BigRational),
    Fp { v: u64, p: u64 },
}

impl K {
    pub fn field(&self) -> FieldSpec {
        match self {
            K::Rat(_) => FieldSpec::Rationals,
            K::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            K::Rat(r) => r.is_zero(),
            K::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            K::Rat(r) => r.is_one(),
            K::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &K) -> K {
        match (self, other) {
            (K::Rat(a), K::Rat(b)) => K::Rat(a + b),
            (K::Fp { v: a, p }, K::Fp { v: b, p: q }) if p == q => K::Fp {
                v: addmod(*a, *b, *p),
                p: *p,
            },
            _ => panic!("field mismatch: {:?} + {:?}", self.field(), other.field()),
        }
    }

    pub fn sub(&self, other: &K) -> K {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> K {
        match self {
            K::Rat(a) => K::Rat(-a),
            K::Fp { v, p } => K::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &K) -> K {
        match (self, other) {
            (K::Rat(a), K::Rat(b)) => K::Rat(a * b),
            (K::Fp { v: a, p }, K::Fp { v: b, p: q }) if p == q => K::Fp {
                v: mulmod(*a, *b, *p),
                p: *p,
            },
            _ => panic!("field mismatch: {:?} * {:?}", self.field(), other.field()),
        }
    }

    pub fn inv(&self) -> Result<K, CoreError> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(match self {
            K::Rat(a) => K::Rat(a.recip()),
            K::Fp { v, p } => K::Fp {
                v: invmod(*v, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &K) -> Result<K, CoreError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> K {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Canonical text form: `a/b` over the rationals (plain integers when
    /// the denominator is 1), a representative in `0..p` over a prime field.
    pub fn to_text(&self) -> String {
        match self {
            K::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            K::Fp { v, .. } => v.to_string(),
        }
    }

    /// True when the scalar prints without a leading minus sign.
    pub fn is_nonneg_text(&self) -> bool {
        match self {
            K::Rat(r) => !r.is_negative(),
            K::Fp { .. } => true,
        }
    }

    /// The scalar with any printed sign stripped (used by the printer,
    /// which emits `a - b` rather than `a + -b` over the rationals).
    pub fn abs_text(&self) -> String {
        match self {
            K::Rat(r) => {
                let a = r.abs();
                if a.denom().is_one() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                }
            }
            K::Fp { v, .. } => v.to_string(),
        }
    }
}

impl fmt::Display for K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a nonzero mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FieldSpec::Prime(DEFAULT_PRIME);
        f.validate().unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, f.from_i64(DEFAULT_PRIME as i64 - 1));
        let b = f.from_i64(123456789);
        assert!(b.mul(&b.inv().unwrap()).is_one());
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn rational_basics() {
        let f = FieldSpec::Rationals;
        let half = f.from_fraction(1, 2).unwrap();
        assert_eq!(half.add(&half), f.one());
        assert_eq!(half.to_text(), "1/2");
        assert!(f.from_fraction(1, 0).is_err());
    }

    #[test]
    fn bad_modulus_rejected() {
        assert!(FieldSpec::Prime(91).validate().is_err());
        assert!(FieldSpec::Prime(2).validate().is_err());
        assert!(FieldSpec::Prime(2147483647).validate().is_ok());
    }
}
