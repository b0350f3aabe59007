//! Reachability order, Möbius function, graded Möbius polynomial and the
//! Hilbert series of the splitting algebra of a layered graph.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::LayeredGraph;
use crate::series::{binomial_power, IntPolynomial, TruncatedSeries};

/// Reflexive-transitive closure of the edge relation: `w <= v` iff `w` is reachable from `v`.
#[derive(Debug, Clone)]
pub struct PosetClosure {
    n: usize,
    words: usize,
    below: Vec<u64>,
    by_level: Vec<usize>,
}

impl PosetClosure {
    /// Requires every edge to drop at least one level, which rules out cycles.
    pub fn new(g: &LayeredGraph) -> Result<Self> {
        let n = g.vertex_count();
        for &(t, h) in g.edges() {
            if g.level(t) <= g.level(h) {
                return Err(Error::InvalidGraph(format!(
                    "edge {} -> {} does not descend",
                    g.id(t),
                    g.id(h)
                )));
            }
        }
        let words = n.div_ceil(64).max(1);
        let mut below = vec![0u64; n * words];
        let mut by_level: Vec<usize> = (0..n).collect();
        by_level.sort_by_key(|&v| (g.level(v), v));
        for &v in &by_level {
            for &c in g.children(v) {
                below[v * words + c / 64] |= 1 << (c % 64);
                for k in 0..words {
                    let bits = below[c * words + k];
                    below[v * words + k] |= bits;
                }
            }
        }
        Ok(PosetClosure { n, words, below, by_level })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `w < v`.
    pub fn lt(&self, w: usize, v: usize) -> bool {
        self.below[v * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    /// `w <= v`.
    pub fn leq(&self, w: usize, v: usize) -> bool {
        w == v || self.lt(w, v)
    }

    /// Vertices sorted by level (ties by index): a linear extension.
    pub fn linear_extension(&self) -> &[usize] {
        &self.by_level
    }

    /// The closed interval `[w, v]` in linear-extension order.
    pub fn interval(&self, w: usize, v: usize) -> Vec<usize> {
        self.by_level.iter().copied().filter(|&u| self.leq(w, u) && self.leq(u, v)).collect()
    }
}

/// `μ(v, w)` by the recursion with fixed lower end:
/// `μ(w, w) = 1`, `μ(u, w) = -Σ_{w <= u' < u} μ(u', w)`.
pub fn mobius_recursive(p: &PosetClosure, v: usize, w: usize) -> i64 {
    if !p.leq(w, v) {
        return 0;
    }
    let interval = p.interval(w, v);
    let mut mu = vec![0i64; interval.len()];
    for (i, &u) in interval.iter().enumerate() {
        mu[i] = if u == w {
            1
        } else {
            -(0..i).filter(|&j| p.lt(interval[j], u)).map(|j| mu[j]).sum::<i64>()
        };
    }
    mu[interval.len() - 1]
}

/// `μ(v, w)` as the signed chain count `Σ_{w = c_0 < ... < c_l = v} (-1)^l`,
/// accumulated from the top of the interval downward.
pub fn mobius_chain_sum(p: &PosetClosure, v: usize, w: usize) -> i64 {
    if !p.leq(w, v) {
        return 0;
    }
    let interval = p.interval(w, v);
    let m = interval.len();
    // chains[i] = signed count of chains from interval[i] up to v
    let mut chains = vec![0i64; m];
    for i in (0..m).rev() {
        let u = interval[i];
        chains[i] = if u == v {
            1
        } else {
            -(i + 1..m).filter(|&j| p.lt(u, interval[j])).map(|j| chains[j]).sum::<i64>()
        };
    }
    chains[0]
}

/// Möbius values for every comparable pair of a graph.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    n: usize,
    values: Vec<i64>,
}

impl MobiusTable {
    pub fn new(g: &LayeredGraph) -> Result<Self> {
        let p = PosetClosure::new(g)?;
        Ok(Self::from_closure(&p))
    }

    pub fn from_closure(p: &PosetClosure) -> Self {
        let n = p.len();
        let mut values = vec![0i64; n * n];
        let order = p.linear_extension();
        for &w in order {
            values[w * n + w] = 1;
            for (i, &u) in order.iter().enumerate() {
                if !p.lt(w, u) {
                    continue;
                }
                let s: i64 = order[..i]
                    .iter()
                    .filter(|&&x| p.leq(w, x) && p.lt(x, u))
                    .map(|&x| values[x * n + w])
                    .sum();
                values[u * n + w] = -s;
            }
        }
        MobiusTable { n, values }
    }

    /// `μ(v, w)`: the Möbius function from `w` up to `v`, zero unless `w <= v`.
    pub fn get(&self, v: usize, w: usize) -> i64 {
        self.values[v * self.n + w]
    }
}

/// `μ(v, w)` for a single pair of a valid graph.
pub fn mobius_value(g: &LayeredGraph, v: usize, w: usize) -> Result<i64> {
    g.require_valid()?;
    let p = PosetClosure::new(g)?;
    Ok(mobius_recursive(&p, v, w))
}

/// Whether the graded Möbius sum includes the diagonal pairs `w = v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MobiusConvention {
    /// Sum over `w <= v`; constant term `|V|`. Matches the closed form for Boolean graphs.
    #[default]
    Inclusive,
    /// Sum over `w < v` only.
    Strict,
}

/// `Σ μ(v, w) τ^{|v|-|w|}` over comparable pairs.
pub fn graded_mobius(g: &LayeredGraph, convention: MobiusConvention) -> Result<IntPolynomial> {
    g.require_valid()?;
    let p = PosetClosure::new(g)?;
    let table = MobiusTable::from_closure(&p);
    let mut coeffs = vec![BigInt::zero(); g.height() + 1];
    for v in 0..g.vertex_count() {
        for w in 0..g.vertex_count() {
            if !p.leq(w, v) || (convention == MobiusConvention::Strict && v == w) {
                continue;
            }
            coeffs[g.level(v) - g.level(w)] += table.get(v, w);
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `1 - τ M(τ)`.
fn hilbert_denominator(g: &LayeredGraph, convention: MobiusConvention) -> Result<IntPolynomial> {
    let m = graded_mobius(g, convention)?;
    Ok(IntPolynomial::one().sub(&IntPolynomial::from_i64(&[0, 1]).mul(&m)))
}

/// `H(A(Γ), τ) = (1 - τ) / (1 - τ M(Γ, τ))` through degree `degree`.
///
/// Every coefficient is a graded dimension, so a negative one is reported as an error.
pub fn hilbert_a(
    g: &LayeredGraph,
    degree: usize,
    convention: MobiusConvention,
) -> Result<TruncatedSeries> {
    let den = hilbert_denominator(g, convention)?.embed(degree);
    let num = IntPolynomial::from_i64(&[1, -1]).embed(degree);
    let h = num.mul(&den.inverse()?)?;
    if let Some((k, c)) = h.coeffs().iter().enumerate().find(|(_, c)| c.is_negative()) {
        return Err(Error::NegativeDimension { degree: k, value: format!("{c}") });
    }
    Ok(h)
}

/// Closed-form `H(Q_n, τ) = (1 - τ) / (1 - τ (2 - τ)^n)`; independent of any graph.
pub fn qn_hilbert(n: u32, degree: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::InvalidGraph("Q_n needs n >= 1".into()));
    }
    let den = IntPolynomial::one().sub(&IntPolynomial::from_i64(&[0, 1]).mul(&binomial_power(2, -1, n)));
    IntPolynomial::from_i64(&[1, -1]).embed(degree).mul(&den.embed(degree).inverse()?)
}

/// The exact polynomial `H(A(Γ), τ)^{-1} = (1 - τ M) / (1 - τ)`.
///
/// Fails with `NonzeroRemainder` if the division is inexact; no degree check.
pub fn hilbert_a_inverse_poly(
    g: &LayeredGraph,
    convention: MobiusConvention,
) -> Result<IntPolynomial> {
    let (q, r) = hilbert_denominator(g, convention)?.divide(&IntPolynomial::from_i64(&[-1, 1]))?;
    // dividing by (τ - 1) = -(1 - τ)
    let q = IntPolynomial::zero().sub(&q);
    if !r.is_zero() {
        return Err(Error::NonzeroRemainder { remainder: format!("{r}") });
    }
    Ok(q)
}

/// [`hilbert_a_inverse_poly`] together with the assertion that its degree equals the height.
pub fn hilbert_a_inverse(g: &LayeredGraph) -> Result<IntPolynomial> {
    let q = hilbert_a_inverse_poly(g, MobiusConvention::Inclusive)?;
    let degree = q.degree().unwrap_or(0);
    if degree != g.height() {
        return Err(Error::DegreeMismatch { degree, height: g.height() });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn b(n: u32) -> LayeredGraph {
        LayeredGraph::boolean(n).unwrap()
    }

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64(c)
    }

    #[test]
    fn mobius_examples() {
        let g = b(2);
        let top = g.index_of("{1,2}").unwrap();
        let one = g.index_of("{1}").unwrap();
        let bot = g.index_of("∅").unwrap();
        assert_eq!(mobius_value(&g, top, top).unwrap(), 1);
        assert_eq!(mobius_value(&g, top, one).unwrap(), -1);
        assert_eq!(mobius_value(&g, top, bot).unwrap(), 1);
        assert_eq!(mobius_value(&g, one, top).unwrap(), 0);
        let p = PosetClosure::new(&g).unwrap();
        assert_eq!(mobius_chain_sum(&p, top, bot), 1);
    }

    #[test]
    fn graded_mobius_boolean() {
        assert_eq!(graded_mobius(&b(1), MobiusConvention::Inclusive).unwrap(), IntPolynomial::from_i64(&[2, -1]));
        assert_eq!(
            graded_mobius(&b(2), MobiusConvention::Inclusive).unwrap(),
            IntPolynomial::from_i64(&[4, -4, 1])
        );
        for n in 1..=5 {
            assert_eq!(graded_mobius(&b(n), MobiusConvention::Inclusive).unwrap(), binomial_power(2, -1, n));
        }
        assert_eq!(
            graded_mobius(&b(2), MobiusConvention::Strict).unwrap(),
            IntPolynomial::from_i64(&[0, -4, 1])
        );
    }

    #[test]
    fn hilbert_examples() {
        let inc = MobiusConvention::Inclusive;
        assert_eq!(hilbert_a(&b(2), 3, inc).unwrap(), s(&[1, 3, 8, 21]));
        assert_eq!(hilbert_a(&b(1), 3, inc).unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(hilbert_a(&LayeredGraph::chain(1), 4, inc).unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(qn_hilbert(1, 4).unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(qn_hilbert(2, 3).unwrap(), s(&[1, 3, 8, 21]));
        for n in 1..=5u32 {
            assert_eq!(qn_hilbert(n, 1).unwrap().coeff(1), &BigInt::from((1 << n) - 1));
        }
    }

    #[test]
    fn strict_convention_breaks_the_closed_form() {
        let strict = MobiusConvention::Strict;
        assert!(matches!(hilbert_a_inverse_poly(&b(2), strict), Err(Error::NonzeroRemainder { .. })));
        assert!(hilbert_a(&b(2), 4, strict) != Ok(qn_hilbert(2, 4).unwrap()));
    }

    #[test]
    fn inverse_polynomials() {
        assert_eq!(hilbert_a_inverse(&b(1)).unwrap(), IntPolynomial::from_i64(&[1, -1]));
        assert_eq!(hilbert_a_inverse(&b(2)).unwrap(), IntPolynomial::from_i64(&[1, -3, 1]));
        assert_eq!(hilbert_a_inverse(&b(3)).unwrap(), IntPolynomial::from_i64(&[1, -7, 5, -1]));
    }

    #[test]
    fn inverse_degree_can_drop_below_height() {
        // A bare path gives a free algebra on `height` generators: H^{-1} = 1 - height·τ.
        let chain = LayeredGraph::chain(3);
        let poly = hilbert_a_inverse_poly(&chain, MobiusConvention::Inclusive).unwrap();
        assert_eq!(poly, IntPolynomial::from_i64(&[1, -3]));
        assert_eq!(hilbert_a_inverse(&chain), Err(Error::DegreeMismatch { degree: 1, height: 3 }));
        // hat over a single top vertex: μ(M, ∅) = 0
        let hat = LayeredGraph::from_complex(&SimplicialComplex::simplex(2)).unwrap().hat();
        let poly = hilbert_a_inverse_poly(&hat, MobiusConvention::Inclusive).unwrap();
        assert_eq!(poly, IntPolynomial::from_i64(&[1, -8, 5, -1]));
    }
}
