//! Quadratic algebras: the algebra `B(Γ)` attached to a layered graph, graded
//! dimensions, quadratic duals and the numerical Koszulity comparison.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graph::LayeredGraph;
use crate::linalg::{annihilator_basis, row_reduce, sparse_rank};
use crate::mobius::{hilbert_a_inverse_poly, MobiusConvention};
use crate::series::IntPolynomial;

/// Default bound on stored vector entries during a rank computation.
pub const DEFAULT_SIZE_CAP: usize = 10_000_000;

/// Generators `W` and a relation space `R ⊂ W ⊗ W`.
///
/// The pair `(a, b)` of `W ⊗ W` sits at coordinate `a·m + b` with `m = |W|`.
/// Relations are kept as the canonical reduced row-echelon basis of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPresentation {
    field: FieldSpec,
    generators: Vec<String>,
    relations: Vec<Vec<Scalar>>,
}

impl QuadraticPresentation {
    pub fn new(field: FieldSpec, generators: Vec<String>, relations: &[Vec<Scalar>]) -> Result<Self> {
        let m = generators.len();
        if generators.iter().collect::<BTreeSet<_>>().len() != m {
            return Err(Error::InvalidGraph("generator labels must be distinct".into()));
        }
        if let Some(bad) = relations.iter().flatten().find(|x| !field.contains(x)) {
            return Err(Error::InvalidScalar(format!("{bad} is not an element of {field}")));
        }
        let relations = row_reduce(field, m * m, relations)?;
        Ok(QuadraticPresentation { field, generators, relations })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Vec<Scalar>] {
        &self.relations
    }

    /// The free algebra: no relations.
    pub fn free(field: FieldSpec, generators: Vec<String>) -> Result<Self> {
        Self::new(field, generators, &[])
    }

    /// Every quadratic monomial is a relation.
    pub fn complete(field: FieldSpec, generators: Vec<String>) -> Result<Self> {
        let d = generators.len() * generators.len();
        let rows: Vec<Vec<Scalar>> = (0..d)
            .map(|c| (0..d).map(|k| if k == c { field.one() } else { field.zero() }).collect())
            .collect();
        Self::new(field, generators, &rows)
    }
}

/// `dims[k]` is the dimension of the degree-`k` component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.dims.iter().map(|&d| BigInt::from(d)).collect())
    }
}

/// `W^{⊗k}` modulo the ideal generated by `R`, by exact rank in the full tensor space.
pub fn graded_dims(p: &QuadraticPresentation, maxdeg: usize, cap: usize) -> Result<GradedDims> {
    let m = p.generators.len();
    let rel: Vec<Vec<(usize, Scalar)>> = p
        .relations
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect())
        .collect();
    let mut dims = vec![1usize];
    for k in 1..=maxdeg {
        let dim = m.checked_pow(k as u32).filter(|&d| d <= cap).ok_or(Error::SizeLimit {
            what: "tensor power",
            size: m.saturating_pow(k as u32),
            cap,
        })?;
        if k == 1 || dim == 0 {
            dims.push(dim);
            continue;
        }
        let outer = m.pow(k as u32 - 2);
        let rows_total = (k - 1) * outer * rel.len();
        if dim.saturating_mul(rows_total.min(dim)) > cap {
            return Err(Error::SizeLimit { what: "tensor ideal", size: dim.saturating_mul(rows_total.min(dim)), cap });
        }
        let mut rows = Vec::with_capacity(rows_total);
        for i in 0..k - 1 {
            // word = left (i letters) · relation (2 letters) · right (k-2-i letters)
            let right_len = m.pow((k - 2 - i) as u32);
            for left in 0..m.pow(i as u32) {
                for right in 0..right_len {
                    for r in &rel {
                        rows.push(
                            r.iter()
                                .map(|(c, x)| ((left * m * m + c) * right_len + right, x.clone()))
                                .collect(),
                        );
                    }
                }
            }
        }
        dims.push(dim - sparse_rank(p.field, dim, &rows));
    }
    Ok(GradedDims { dims })
}

/// `V₊` in vertex order, i.e. every vertex above level 0.
fn generators_of(g: &LayeredGraph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&v| g.level(v) > 0).collect()
}

/// The presentation of `B(Γ)`: generators `V₊`; `u ⊗ v` for every pair with no edge
/// `u → v`; and `v ⊗ Σ w` over the children `w` of `v` lying in `V₊`, when there are any.
pub fn b_gamma_presentation(g: &LayeredGraph, field: FieldSpec) -> Result<QuadraticPresentation> {
    g.require_valid()?;
    let gens = generators_of(g);
    let m = gens.len();
    let pos: BTreeMap<usize, usize> = gens.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    let unit = |cols: &[usize]| {
        let mut r = vec![field.zero(); m * m];
        for &c in cols {
            r[c] = field.one();
        }
        r
    };
    let mut rows = Vec::new();
    for (a, &u) in gens.iter().enumerate() {
        for (b, &v) in gens.iter().enumerate() {
            if !edges.contains(&(u, v)) {
                rows.push(unit(&[a * m + b]));
            }
        }
        let sum: Vec<usize> = g.children(u).iter().filter_map(|w| pos.get(w)).map(|&b| a * m + b).collect();
        if !sum.is_empty() {
            rows.push(unit(&sum));
        }
    }
    let labels = gens.iter().map(|&v| g.id(v).into()).collect();
    QuadraticPresentation::new(field, labels, &rows)
}

/// Words `v_1 ... v_k` in `V₊` with an edge `v_t → v_{t+1}` for each `t`.
fn paths(g: &LayeredGraph, k: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut cur: Vec<Vec<usize>> = generators_of(g).into_iter().map(|v| vec![v]).collect();
    if k == 0 {
        return Ok(vec![Vec::new()]);
    }
    for _ in 1..k {
        let mut next = Vec::new();
        for p in &cur {
            for &c in g.children(*p.last().unwrap()) {
                if g.level(c) > 0 {
                    let mut q = p.clone();
                    q.push(c);
                    next.push(q);
                }
            }
        }
        if next.len() > cap {
            return Err(Error::SizeLimit { what: "path basis", size: next.len(), cap });
        }
        cur = next;
    }
    Ok(cur)
}

/// `dim B(Γ)_k`, computed on the path basis.
///
/// Non-path words vanish by the monomial relations, so `B_k` is the path space
/// modulo the path-projections of `a ⊗ (v ⊗ Σ w) ⊗ b`.
pub fn b_gamma_dim(g: &LayeredGraph, field: FieldSpec, k: usize, cap: usize) -> Result<usize> {
    let basis = paths(g, k, cap)?;
    if k < 2 || basis.is_empty() {
        return Ok(basis.len());
    }
    let index: BTreeMap<&[usize], usize> = basis.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for p in &basis {
        for i in 0..k - 1 {
            // relation at positions i, i+1 with v = p[i]
            if !seen.insert((i, &p[..=i], &p[i + 2..])) {
                continue;
            }
            let row: Vec<(usize, Scalar)> = g
                .children(p[i])
                .iter()
                .filter_map(|&w| {
                    let mut word = p.clone();
                    word[i + 1] = w;
                    index.get(word.as_slice()).map(|&c| (c, field.one()))
                })
                .collect();
            rows.push(row);
        }
    }
    let n = basis.len();
    if n.saturating_mul(rows.len().min(n)) > cap {
        return Err(Error::SizeLimit { what: "path relations", size: n * rows.len().min(n), cap });
    }
    Ok(n - sparse_rank(field, n, &rows))
}

/// `dim B(Γ)_k` for `k = 0..=height`; all higher components vanish because paths in `V₊`
/// have at most `height` vertices.
pub fn b_gamma_dims(g: &LayeredGraph, field: FieldSpec, cap: usize) -> Result<GradedDims> {
    g.require_valid()?;
    let dims = (0..=g.height()).map(|k| b_gamma_dim(g, field, k, cap)).collect::<Result<_>>()?;
    Ok(GradedDims { dims })
}

/// `H(B(Γ), τ)`.
pub fn hilbert_b(g: &LayeredGraph, field: FieldSpec) -> Result<IntPolynomial> {
    Ok(b_gamma_dims(g, field, DEFAULT_SIZE_CAP)?.to_polynomial())
}

/// Generators `W*` (labels suffixed with `*`) and relations `R^⊥` under
/// `⟨a ⊗ b, f ⊗ g⟩ = f(a) g(b)`.
pub fn quadratic_dual(p: &QuadraticPresentation) -> Result<QuadraticPresentation> {
    let m = p.generators.len();
    let perp = annihilator_basis(p.field, m * m, &p.relations)?;
    let labels = p.generators.iter().map(|s| format!("{s}*")).collect();
    QuadraticPresentation::new(p.field, labels, &perp)
}

/// Outcome of comparing `H(A(Γ), -τ)^{-1}` with `H(B(Γ), τ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulVerdict {
    pub pass: bool,
    pub first_divergence_degree: Option<usize>,
    /// Coefficients of `H(A(Γ), -τ)^{-1}`.
    pub lhs: Vec<BigInt>,
    /// Coefficients of `H(B(Γ), τ)`.
    pub rhs: Vec<BigInt>,
}

fn padded(p: &IntPolynomial, len: usize) -> Vec<BigInt> {
    (0..len).map(|k| p.coeff(k)).collect()
}

pub fn koszul_verdict(lhs: &IntPolynomial, rhs: &IntPolynomial) -> KoszulVerdict {
    let len = lhs.coeffs().len().max(rhs.coeffs().len()).max(1);
    let (l, r) = (padded(lhs, len), padded(rhs, len));
    let first = (0..len).find(|&k| l[k] != r[k]);
    KoszulVerdict { pass: first.is_none(), first_divergence_degree: first, lhs: l, rhs: r }
}

/// Exact, untruncated: both sides are polynomials.
pub fn numerical_koszul_check(g: &LayeredGraph, field: FieldSpec) -> Result<KoszulVerdict> {
    let lhs = hilbert_a_inverse_poly(g, MobiusConvention::Inclusive)?.substitute_neg();
    let rhs = hilbert_b(g, field)?;
    Ok(koszul_verdict(&lhs, &rhs))
}

/// Signed coefficients of `H(A(Γ), -τ)^{-1} - H(B(Γ), τ)` for `k = 0..=height`.
pub fn discrepancy_coefficients(g: &LayeredGraph, field: FieldSpec) -> Result<Vec<i64>> {
    let v = numerical_koszul_check(g, field)?;
    (0..=g.height())
        .map(|k| {
            let d = v.lhs.get(k).cloned().unwrap_or_default() - v.rhs.get(k).cloned().unwrap_or_default();
            d.to_i64().ok_or(Error::SizeLimit { what: "discrepancy", size: usize::MAX, cap: i64::MAX as usize })
        })
        .collect()
}

/// The coefficient of `τ^k` in `H(A(Γ), -τ)^{-1} - H(B(Γ), τ)`; a negative value is an error.
pub fn discrepancy_lhs(g: &LayeredGraph, field: FieldSpec, k: usize) -> Result<u64> {
    if k > g.height() {
        return Err(Error::InvalidGraph(format!("degree {k} exceeds height {}", g.height())));
    }
    let value = discrepancy_coefficients(g, field)?[k];
    if value < 0 {
        return Err(Error::NegativeDiscrepancy { degree: k, value });
    }
    Ok(value as u64)
}
