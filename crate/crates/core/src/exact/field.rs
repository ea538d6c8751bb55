use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted: residues must fit a single word with room for `u128` products.
pub const MAX_MODULUS: u64 = 1 << 62;

/// Moduli below this bound are checked for primality on construction.
pub const CHECKED_PRIME_BOUND: u64 = 1 << 31;

/// A prime modulus. Only obtainable through [`Field::prime`] or [`Field::prime_trusted`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn get(self) -> u64 {
        self.0
    }
}

/// The ground field: either the rationals or a prime field `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(Modulus),
}

impl Field {
    /// `GF(p)`. Primality is verified for `p < 2^31`; larger moduli are
    /// rejected here and must go through [`Field::prime_trusted`].
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= CHECKED_PRIME_BOUND {
            return Err(Error::InvalidField(format!(
                "{p} is above the checked bound 2^31; use prime_trusted"
            )));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(Modulus(p)))
    }

    /// `GF(p)` without a primality check. The caller vouches for `p`.
    /// Still rejects `p < 2` and `p >= 2^62`.
    pub fn prime_trusted(p: u64) -> Result<Field> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(Error::InvalidField(format!(
                "modulus {p} outside [2, 2^62)"
            )));
        }
        Ok(Field::Prime(Modulus(p)))
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(m) => Some(m.0),
        }
    }

    pub fn characteristic(self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero(self)
    }

    pub fn one(self) -> Scalar {
        Scalar::one(self)
    }

    pub fn int(self, v: i64) -> Scalar {
        Scalar::from_i64(self, v)
    }

    pub fn check_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(m) => write!(f, "GF({})", m.0),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `GF(p)` or a bare prime `p`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(Field::Rational);
        }
        let digits = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("cannot parse field '{s}'")))?;
        if p < CHECKED_PRIME_BOUND {
            Field::prime(p)
        } else {
            Field::prime_trusted(p)
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn reduce_i64(v: i64, p: u64) -> u64 {
    let r = (v as i128).rem_euclid(p as i128);
    r as u64
}

pub fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut r = v % &pb;
    if r.is_negative() {
        r += pb;
    }
    r.to_u64().expect("residue fits u64")
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator (guaranteed by `BigRational`); residues live in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: Modulus },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(m) => Scalar::Mod {
                value: 0,
                modulus: m,
            },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::one()),
            Field::Prime(m) => Scalar::Mod {
                value: 1 % m.0,
                modulus: m,
            },
        }
    }

    pub fn from_i64(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(m) => Scalar::Mod {
                value: reduce_i64(v, m.0),
                modulus: m,
            },
        }
    }

    pub fn from_bigint(field: Field, v: &BigInt) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(m) => Scalar::Mod {
                value: reduce_bigint(v, m.0),
                modulus: m,
            },
        }
    }

    /// `num / den` in the given field. Fails when `den` vanishes in the field.
    pub fn from_ratio(field: Field, num: i64, den: i64) -> Result<Scalar> {
        Scalar::from_i64(field, num).checked_div(&Scalar::from_i64(field, den))
    }

    pub fn residue(field: Field, v: u64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(m) => Scalar::Mod {
                value: v % m.0,
                modulus: m,
            },
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// The residue, for prime-field elements.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Mod { .. } => None,
        }
    }

    fn binary(
        &self,
        rhs: &Scalar,
        q: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        m: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(q(a, b))),
            (
                Scalar::Mod {
                    value: a,
                    modulus: ma,
                },
                Scalar::Mod {
                    value: b,
                    modulus: mb,
                },
            ) if ma == mb => Ok(Scalar::Mod {
                value: m(*a, *b, ma.0),
                modulus: *ma,
            }),
            _ => Err(Error::FieldMismatch {
                left: self.field(),
                right: rhs.field(),
            }),
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a + b, add_mod)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a - b, sub_mod)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a * b, mul_mod)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.field().check_same(rhs.field())?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.checked_mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: inv_mod(*value, modulus.0),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), exp as usize)),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, exp as u64, modulus.0),
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator sugar for values already known to share a field. Mixed fields
// panic here; use the `checked_*` methods at API boundaries.
macro_rules! scalar_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_op!(Add, add, checked_add);
scalar_op!(Sub, sub, checked_sub);
scalar_op!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: sub_mod(0, *value, modulus.0),
                modulus: *modulus,
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
