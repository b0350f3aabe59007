//! Integer polynomials and truncated power series.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::is_unit;

/// Polynomial with integer coefficients, lowest degree first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `p(tau) -> p(-tau)`.
    pub fn substitute_neg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division by a divisor whose leading coefficient is +1 or -1.
    ///
    /// Returns `(quotient, remainder)` with `self = den * quotient + remainder`
    /// and `deg remainder < deg den`.
    pub fn divide(&self, den: &Self) -> Result<(Self, Self)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lead = &den.coeffs[dd];
        if !is_unit(lead) {
            return Err(Error::NonUnitLeadingCoefficient);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * lead; // lead is its own inverse
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// The first `degree + 1` coefficients as a truncated series.
    pub fn embed(&self, degree: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..=degree).map(|k| self.coeff(k)).collect())
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, true)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], skip_zero: bool) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if skip_zero && c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "t")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Power series known through degree `D`; always stores exactly `D + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list; a series always knows its constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::TruncationMismatch {
                left: self.truncation_degree(),
                right: other.truncation_degree(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse modulo `tau^(D+1)`; the constant term must be a unit of Z.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !is_unit(c0) {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.coeffs.len();
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-(acc * c0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn substitute_neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Keeps coefficients through `degree` (which may not exceed the current truncation).
    pub fn truncate(&self, degree: usize) -> Self {
        assert!(degree <= self.truncation_degree());
        TruncatedSeries { coeffs: self.coeffs[..=degree].to_vec() }
    }

    /// Decimal renderings, degree 0 first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| alloc::format!("{c}")).collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, true)?;
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

/// Binomial expansion of `(a + b tau)^n`.
pub fn binomial_power(a: i64, b: i64, n: u32) -> IntPolynomial {
    IntPolynomial::from_i64(&[a, b]).pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64(c)
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn series_mul_examples() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
        let a = s(&[3, -2, 7, 1]);
        assert_eq!(a.mul(&TruncatedSeries::one(3)).unwrap(), a);
        assert_eq!(s(&[1, 1, 1]).mul(&s(&[1, 1, 1])).unwrap(), s(&[1, 2, 3]));
        assert_eq!(
            s(&[1, 1]).mul(&s(&[1, 1, 1])),
            Err(Error::TruncationMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn series_inverse_examples() {
        assert_eq!(TruncatedSeries::one(4).inverse().unwrap(), TruncatedSeries::one(4));
        assert_eq!(s(&[1, -1, 0, 0]).inverse().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(s(&[1, -4, 4, -1]).inverse().unwrap(), s(&[1, 4, 12, 33]));
        assert_eq!(s(&[-1, 1]).inverse().unwrap(), s(&[-1, -1]));
        assert_eq!(s(&[2, 1]).inverse(), Err(Error::NonUnitConstantTerm));
        assert_eq!(s(&[0, 1]).inverse(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn poly_divide_examples() {
        let (q, r) = p(&[1, -4, 4, -1]).divide(&p(&[1, -1])).unwrap();
        assert_eq!((q, r), (p(&[1, -3, 1]), IntPolynomial::zero()));
        let x = p(&[4, 0, -2, 9]);
        assert_eq!(x.divide(&IntPolynomial::one()).unwrap(), (x.clone(), IntPolynomial::zero()));
        let (q, r) = p(&[1, -8, 12, -6, 1]).divide(&p(&[1, -1])).unwrap();
        assert_eq!((q, r), (p(&[1, -7, 5, -1]), IntPolynomial::zero()));
        let (q, r) = p(&[2, 0, 1]).divide(&p(&[1, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), p(&[3])));
        assert_eq!(x.divide(&IntPolynomial::zero()), Err(Error::DivisionByZero));
        assert_eq!(x.divide(&p(&[1, 2])), Err(Error::NonUnitLeadingCoefficient));
    }

    #[test]
    fn substitute_neg_examples() {
        assert_eq!(p(&[1, 1]).substitute_neg(), p(&[1, -1]));
        assert_eq!(p(&[5]).substitute_neg(), p(&[5]));
        assert_eq!(p(&[1, 3, 8]).substitute_neg(), p(&[1, -3, 8]));
        assert_eq!(s(&[1, 3, 8]).substitute_neg(), s(&[1, -3, 8]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "1 - 3t + t^2");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(s(&[1, 1]).to_string(), "1 + t + O(t^2)");
    }

    #[test]
    fn trimming_and_binomials() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(binomial_power(2, -1, 2), p(&[4, -4, 1]));
        assert_eq!(binomial_power(2, -1, 3).eval_i64(1), BigInt::from(1));
    }
}
