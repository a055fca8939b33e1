//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every computation in this crate is exact; there is no floating point and
//! no tolerance parameter anywhere. A [`Scalar`] knows which field it lives
//! in, and mixing fields is a programming error (the structure-file parser
//! enforces a single field per file).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Which exact field scalars are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rationals, backed by arbitrary-precision integers.
    Rationals,
    /// Integers mod an odd prime.
    Mod(u64),
}

impl FieldSpec {
    /// Parses the header form `Q` or `Fp:<p>`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::parse(format!("bad modulus in field spec `{s}`")))?;
            return FieldSpec::mod_p(p);
        }
        Err(Error::parse(format!("unknown field spec `{s}` (expected `Q` or `Fp:<p>`)")))
    }

    /// A prime field, rejecting non-primes and the characteristic-2 case
    /// (the catalog's cocycle idempotents need 2 invertible).
    pub fn mod_p(p: u64) -> Result<Self, Error> {
        if p < 3 || !is_prime(p) {
            return Err(Error::parse(format!("field modulus {p} is not an odd prime")));
        }
        Ok(FieldSpec::Mod(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Mod(p) => Scalar::Mod { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Mod(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod { val: m, p: *p }
            }
        }
    }

    /// Parses a scalar literal: `-3/2`, `5`, or `3 mod 7`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let r = BigRational::from_str(s)
                    .or_else(|_| BigInt::from_str(s).map(BigRational::from_integer))
                    .map_err(|_| Error::parse(format!("bad rational literal `{s}`")))?;
                Ok(Scalar::Rat(r))
            }
            FieldSpec::Mod(p) => {
                let body = match s.split_once(" mod ") {
                    Some((v, m)) => {
                        let m: u64 = m
                            .trim()
                            .parse()
                            .map_err(|_| Error::parse(format!("bad modulus in `{s}`")))?;
                        if m != *p {
                            return Err(Error::parse(format!(
                                "scalar `{s}` has modulus {m} but the file field is Fp:{p}"
                            )));
                        }
                        v.trim()
                    }
                    None => s,
                };
                let v: i64 = body
                    .parse()
                    .map_err(|_| Error::parse(format!("bad mod-p literal `{s}`")))?;
                Ok(self.from_i64(v))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Mod(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// One exact field element.
#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Mod { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::Mod(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { val: a, p }, Scalar::Mod { val: b, p: q }) => {
                check_same_prime(*p, *q);
                Scalar::Mod { val: (a + b) % p, p: *p }
            }
            _ => mixed_fields(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Mod { val, p } => Scalar::Mod { val: (p - val) % p, p: *p },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { val: a, p }, Scalar::Mod { val: b, p: q }) => {
                check_same_prime(*p, *q);
                Scalar::Mod { val: mulmod(*a, *b, *p), p: *p }
            }
            _ => mixed_fields(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Mod { val, p } => {
                if *val == 0 {
                    None
                } else {
                    Some(Scalar::Mod { val: invmod(*val, *p), p: *p })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().abs(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { val, p } => write!(f, "{val} mod {p}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_same_prime(p: u64, q: u64) {
    assert_eq!(p, q, "mixed prime fields Fp:{p} and Fp:{q}");
}

fn mixed_fields() -> ! {
    panic!("arithmetic between scalars of different fields")
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller–Rabin, valid for all u64.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip() {
        let q = FieldSpec::Rationals;
        for s in ["0", "1", "-1", "-3/2", "22/7", "5"] {
            let v = q.parse_scalar(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn rational_field_ops() {
        let q = FieldSpec::Rationals;
        let a = q.parse_scalar("-3/2").unwrap();
        let b = q.parse_scalar("2/5").unwrap();
        assert_eq!(a.mul(&b).to_string(), "-3/5");
        assert_eq!(a.add(&b).to_string(), "-11/10");
        assert_eq!(a.mul(&a.inv().unwrap()), q.one());
        assert!(q.zero().inv().is_none());
    }

    #[test]
    fn mod_p_field_ops() {
        let f = FieldSpec::mod_p(7).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a.to_string(), "4 mod 7");
        assert_eq!(a.mul(&a.inv().unwrap()), f.one());
        assert_eq!(f.parse_scalar("3 mod 7").unwrap(), f.from_i64(3));
        assert!(f.parse_scalar("3 mod 5").is_err());
    }

    #[test]
    fn rejects_even_or_composite_modulus() {
        assert!(FieldSpec::mod_p(2).is_err());
        assert!(FieldSpec::mod_p(9).is_err());
        assert!(FieldSpec::parse("Fp:11").is_ok());
        assert!(FieldSpec::parse("R").is_err());
    }
}
