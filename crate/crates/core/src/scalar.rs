//! Exact ground-field arithmetic.
//!
//! Two kinds of field are supported: the rationals (arbitrary precision,
//! always stored in lowest terms) and prime fields `F_p` with `p < 2^31`.
//! A [`Scalar`] carries its field so that mixing fields is caught at the
//! operation that does it.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields; keeps residue products in `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, checking primality by trial division.
    ///
    /// Moduli 2 and 3 are accepted but logged: randomized invertibility
    /// searches over such small fields fall back to exhaustive enumeration
    /// far more often.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= MAX_PRIME {
            return Err(Error::InvalidField(format!(
                "prime {p} exceeds the supported bound 2^31"
            )));
        }
        if p <= 3 {
            log::warn!("F_{p}: randomized invertibility search is weak over fields with <= 3 elements");
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Maps a rational number into this field. Fails in `F_p` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        match *self {
            Field::Rationals => Ok(Scalar::Rational(r.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = r.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = r.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::Parse(format!(
                        "{r} has a denominator divisible by {p}"
                    )));
                }
                Ok(Scalar::Residue {
                    value: mul_mod(num, inv_mod(den, p), p),
                    p,
                })
            }
        }
    }

    /// Parses `"a"`, `"-a"` or `"a/b"` into this field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let r = parse_rational(s)?;
        self.from_rational(&r)
    }

    /// A uniformly random element (F_p) or a random integer in
    /// `[-bound, bound]` (Q).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        match *self {
            Field::Rationals => self.from_i64(rng.gen_range(-bound..=bound)),
            Field::Prime(p) => Scalar::Residue {
                value: rng.gen_range(0..p),
                p,
            },
        }
    }

    /// The first `count` elements of a canonical enumeration
    /// (`0, 1, ..., count-1` as integers mapped into the field).
    pub fn grid_points(&self, count: usize) -> Vec<Scalar> {
        (0..count as i64).map(|i| self.from_i64(i)).collect()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q` or `Fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("fp:")) {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus in {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!(
            "expected Q or Fp:<prime>, got {s:?}"
        )))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type")]
enum FieldRepr {
    Q,
    Fp { p: u64 },
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Field::Rationals => FieldRepr::Q,
            Field::Prime(p) => FieldRepr::Fp { p },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match FieldRepr::deserialize(d)? {
            FieldRepr::Q => Ok(Field::Rationals),
            FieldRepr::Fp { p } => Field::prime(p).map_err(serde::de::Error::custom),
        }
    }
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, p } => Scalar::Residue {
                value: inv_mod(*value, *p),
                p: *p,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn same_prime(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

macro_rules! binop {
    ($tr:ident, $method:ident, $rat:expr, $res:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) => {
                        let p = same_prime(*p, *q);
                        Scalar::Residue {
                            value: $res(*a, *b, p),
                            p,
                        }
                    }
                    _ => panic!("scalars from different fields"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| mul_mod(a, b, p)
);
binop!(
    Div,
    div,
    |a: &BigRational, b: &BigRational| {
        assert!(!b.is_zero(), "division by zero");
        a / b
    },
    |a: u64, b: u64, p: u64| {
        assert!(b != 0, "division by zero");
        mul_mod(a, inv_mod(b, p), p)
    }
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, p } => Scalar::Residue {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime: a^(p-2)
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses an integer or fraction such as `-3`, `7/2`, `+1/3`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    if d.is_negative() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
