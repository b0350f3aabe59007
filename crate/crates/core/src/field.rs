//! Exact scalars: arbitrary-precision rationals and residues modulo a word-sized prime.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible modulus for [`FieldSpec::PrimeField`] (exclusive).
pub const PRIME_BOUND: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

/// An element of the field named by a [`FieldSpec`].
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed by
/// `BigRational`); residues are always reduced modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u32),
}

fn is_prime(p: u64) -> bool {
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

impl FieldSpec {
    /// `GF(p)`, rejecting composite moduli and anything at or above 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= PRIME_BOUND || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Scalar::Residue(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::PrimeField(p) => Scalar::Residue(reduce_bigint(v, *p)),
        }
    }

    /// Maps a rational into this field; fails over `GF(p)` when `p` divides the denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(v.clone())),
            FieldSpec::PrimeField(p) => {
                let num = reduce_bigint(v.numer(), *p);
                let den = reduce_bigint(v.denom(), *p);
                if den == 0 {
                    return Err(Error::InvalidScalar(v.to_string()));
                }
                Ok(Scalar::Residue(mul_mod(num, inv_mod(den, *p), *p)))
            }
        }
    }

    /// Parses `"a"` or `"a/b"` with decimal integers.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(s.to_string());
        let t = s.trim();
        let value = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        self.from_rational(&value)
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Residue(r)) => r < p,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (FieldSpec::PrimeField(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (_, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::PrimeField(p), Scalar::Residue(x)) => {
                Scalar::Residue(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (FieldSpec::PrimeField(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mul_mod(*x, *y, *p))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(match (self, a) {
            (_, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (FieldSpec::PrimeField(p), Scalar::Residue(x)) => Scalar::Residue(inv_mod(*x, *p)),
            _ => panic!("scalar does not belong to {self}"),
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Residue(r) => *r == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(x) => Some(x),
            Scalar::Residue(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Residue(r) => write!(f, "{r}"),
        }
    }
}

/// Renders a rational as `"a"` or `"a/b"`.
pub fn rational_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub(crate) fn reduce_bigint(v: &BigInt, p: u32) -> u32 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u32().expect("residue fits in u32")
}

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat; p is prime.
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Element-level arithmetic used by the elimination kernels.
///
/// The public matrix API stores [`Scalar`]s; kernels convert to a typed
/// representation once and work on plain `u32` residues or `BigRational`s.
pub(crate) trait Arith {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn lift(&self, a: &Scalar) -> Self::E;
    fn lower(&self, a: Self::E) -> Scalar;

    /// `a - f * b`, the elimination step.
    fn axpy(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(&self.mul(f, b)))
    }
}

pub(crate) struct RationalArith;

impl Arith for RationalArith {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn lift(&self, a: &Scalar) -> BigRational {
        match a {
            Scalar::Rational(x) => x.clone(),
            Scalar::Residue(_) => panic!("residue in a rational matrix"),
        }
    }
    fn lower(&self, a: BigRational) -> Scalar {
        Scalar::Rational(a)
    }
    fn axpy(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational {
        if f.is_one() {
            a - b
        } else if (-f).is_one() {
            a + b
        } else {
            a - f * b
        }
    }
}

pub(crate) struct ModArith {
    pub p: u32,
}

impl Arith for ModArith {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        inv_mod(*a, self.p)
    }
    fn lift(&self, a: &Scalar) -> u32 {
        match a {
            Scalar::Residue(r) => *r,
            Scalar::Rational(_) => panic!("rational in a modular matrix"),
        }
    }
    fn lower(&self, a: u32) -> Scalar {
        Scalar::Residue(a)
    }
}

/// Runs `$body` with `$ar` bound to the typed arithmetic for `$field`.
macro_rules! with_arith {
    ($field:expr, $ar:ident => $body:expr) => {
        match $field {
            $crate::field::FieldSpec::Rationals => {
                let $ar = &$crate::field::RationalArith;
                $body
            }
            $crate::field::FieldSpec::PrimeField(p) => {
                let $ar = &$crate::field::ModArith { p };
                $body
            }
        }
    };
}
pub(crate) use with_arith;

/// Sign-aware absolute test used by the series code: is `v` equal to +1 or -1?
pub(crate) fn is_unit(v: &BigInt) -> bool {
    v.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert_eq!(FieldSpec::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::prime(1 << 31), Err(Error::NotPrime(1 << 31)));
    }

    #[test]
    fn parse_reduces() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("6/-4").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse(" 7 ").unwrap().to_string(), "7");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        let gf5 = FieldSpec::prime(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(gf5.parse("1/2").unwrap(), Scalar::Residue(3));
        assert_eq!(gf5.parse("-1").unwrap(), Scalar::Residue(4));
        assert!(gf5.parse("1/5").is_err());
    }

    #[test]
    fn modular_inverse() {
        let gf7 = FieldSpec::prime(7).unwrap();
        for a in 1..7 {
            let x = gf7.from_i64(a);
            let y = gf7.inv(&x).unwrap();
            assert!(gf7.mul(&x, &y).is_one());
        }
        assert_eq!(gf7.inv(&gf7.zero()), Err(Error::SingularMatrix));
    }
}
