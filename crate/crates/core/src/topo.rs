//! Simplicial homology over a field, order complexes of layered graphs, local
//! homology through links, and the topological side of the discrepancy formula.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::complex::SimplicialComplex;
use crate::dual::discrepancy_coefficients;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::LayeredGraph;
use crate::linalg::DenseMatrix;
use crate::mobius::PosetClosure;

/// Boundary maps of the simplicial chain complex of a complex.
///
/// `bases[i]` lists the `i`-faces in sorted order; `boundaries[i]` is
/// `∂_i : C_i → C_{i-1}`. With augmentation, `∂_0` maps onto `C_{-1} = F`.
#[derive(Debug, Clone)]
pub struct ChainComplexMatrices {
    field: FieldSpec,
    augmented: bool,
    bases: Vec<Vec<Vec<u32>>>,
    boundaries: Vec<DenseMatrix>,
}

impl ChainComplexMatrices {
    /// Panics if some `∂_i ∘ ∂_{i+1}` is nonzero, which would be a bug in assembly.
    pub fn new(x: &SimplicialComplex, field: FieldSpec, augmented: bool) -> Self {
        let bases = x.faces_by_dim();
        let mut boundaries = Vec::with_capacity(bases.len());
        for (i, faces) in bases.iter().enumerate() {
            let rows = if i == 0 { usize::from(augmented) } else { bases[i - 1].len() };
            let mut m = DenseMatrix::zeros(field, rows, faces.len());
            if i == 0 {
                if augmented {
                    for c in 0..faces.len() {
                        m.set(0, c, field.one());
                    }
                }
            } else {
                let index: BTreeMap<&[u32], usize> =
                    bases[i - 1].iter().enumerate().map(|(r, f)| (f.as_slice(), r)).collect();
                for (c, face) in faces.iter().enumerate() {
                    for pos in 0..face.len() {
                        let mut sub = face.clone();
                        sub.remove(pos);
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        m.set(index[sub.as_slice()], c, field.from_i64(sign));
                    }
                }
            }
            boundaries.push(m);
        }
        for i in 1..boundaries.len() {
            let (lower, upper) = (&boundaries[i - 1], &boundaries[i]);
            if lower.rows() > 0 {
                assert!(lower.mul(upper).expect("composable").is_zero(), "boundary of boundary at {i}");
            }
        }
        ChainComplexMatrices { field, augmented, bases, boundaries }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn bases(&self) -> &[Vec<Vec<u32>>] {
        &self.bases
    }

    /// `∂_i`, or `None` above the top dimension.
    pub fn boundary(&self, i: usize) -> Option<&DenseMatrix> {
        self.boundaries.get(i)
    }

    pub fn betti(&self) -> BettiVector {
        let ranks: Vec<usize> = self.boundaries.iter().map(DenseMatrix::rank).collect();
        let top = self.bases.len();
        let b = (0..top)
            .map(|i| self.bases[i].len() - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0))
            .collect();
        let b_minus_one = if self.augmented { 1 - ranks.first().copied().unwrap_or(0) } else { 0 };
        BettiVector { b, b_minus_one, reduced: self.augmented, field: self.field }
    }
}

/// Betti numbers `b_0, ..., b_dim`; reduced vectors also carry `b̃_{-1}`,
/// which is 1 exactly for the complex `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    pub b: Vec<usize>,
    pub b_minus_one: usize,
    pub reduced: bool,
    pub field: FieldSpec,
}

impl BettiVector {
    /// `b_i` for any `i >= -1`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        match i {
            -1 => self.b_minus_one,
            i if i >= 0 => self.b.get(i as usize).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.b_minus_one == 0 && self.b.iter().all(|&x| x == 0)
    }

    /// `Σ (-1)^i b_i`, including `i = -1` when reduced.
    pub fn euler_characteristic(&self) -> i64 {
        let body: i64 = self.b.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        body - self.b_minus_one as i64
    }
}

pub fn betti(x: &SimplicialComplex, field: FieldSpec, reduced: bool) -> BettiVector {
    ChainComplexMatrices::new(x, field, reduced).betti()
}

/// The order complex of the induced subposet on `subset`; vertex labels are graph indices.
pub fn order_complex_of(g: &LayeredGraph, subset: &[usize]) -> Result<SimplicialComplex> {
    let p = PosetClosure::new(g)?;
    let mut members: Vec<usize> = subset.to_vec();
    members.sort_unstable();
    members.dedup();
    // covers inside the subset
    let covers = |v: usize| -> Vec<usize> {
        let below: Vec<usize> = members.iter().copied().filter(|&w| p.lt(w, v)).collect();
        below.iter().copied().filter(|&w| !below.iter().any(|&u| p.lt(w, u))).collect()
    };
    let cover_lists: BTreeMap<usize, Vec<usize>> = members.iter().map(|&v| (v, covers(v))).collect();
    let maximal: Vec<usize> =
        members.iter().copied().filter(|&v| !members.iter().any(|&u| p.lt(v, u))).collect();
    let mut chains = Vec::new();
    let mut stack: Vec<Vec<usize>> = maximal.into_iter().map(|v| vec![v]).collect();
    while let Some(chain) = stack.pop() {
        let below = &cover_lists[chain.last().unwrap()];
        if below.is_empty() {
            chains.push(chain.iter().map(|&v| v as u32).collect());
        } else {
            for &w in below {
                let mut next = chain.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    Ok(SimplicialComplex::from_simplices(chains))
}

/// The order complex of the whole graph.
pub fn order_complex(g: &LayeredGraph) -> Result<SimplicialComplex> {
    order_complex_of(g, &(0..g.vertex_count()).collect::<Vec<_>>())
}

/// The order complex with the minimum removed.
pub fn proper_order_complex(g: &LayeredGraph) -> Result<SimplicialComplex> {
    let min = g.minimum();
    order_complex_of(g, &(0..g.vertex_count()).filter(|&v| Some(v) != min).collect::<Vec<_>>())
}

pub fn link(x: &SimplicialComplex, sigma: &[u32]) -> Result<SimplicialComplex> {
    x.link(sigma)
}

/// The first face `σ` (of dimension `k`) whose link has `H̃_{i-k-1} ≠ 0` for some `i < n`.
pub fn local_homology_obstruction(x: &SimplicialComplex, field: FieldSpec, n: usize) -> Option<Vec<u32>> {
    for (k, faces) in x.faces_by_dim().iter().enumerate() {
        let top = n as isize - k as isize - 2;
        if top < -1 {
            break;
        }
        for sigma in faces {
            let lk = x.link(sigma).expect("face of x");
            let b = betti(&lk, field, true);
            if (-1..=top).any(|j| b.get(j) != 0) {
                return Some(sigma.clone());
            }
        }
    }
    None
}

/// `H̃_i(X, X - p; F) = 0` for every point `p` and every `i < n`, checked one face at a time
/// through `H̃_{i-k-1}(link σ)` for `σ` of dimension `k`.
pub fn local_homology_vanishes(x: &SimplicialComplex, field: FieldSpec, n: usize) -> bool {
    local_homology_obstruction(x, field, n).is_none()
}

/// The homological prediction for a pure, codimension-one connected complex of dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm43Verdict {
    pub pass: bool,
    pub dimension: usize,
    pub betti: BettiVector,
    /// Some `i < n` with `H̃_i(X) ≠ 0`.
    pub global_obstruction: Option<usize>,
    /// A face with nonvanishing local homology below degree `n`.
    pub local_obstruction: Option<Vec<u32>>,
}

pub fn thm43_predict(x: &SimplicialComplex, field: FieldSpec) -> Result<Thm43Verdict> {
    let d = x.dim();
    if d < 0 {
        return Err(Error::HypothesisViolation("the complex is empty".into()));
    }
    let n = d as usize;
    if !x.is_pure(n) {
        return Err(Error::HypothesisViolation(format!("the complex is not pure of dimension {n}")));
    }
    if !x.is_codim1_connected() {
        return Err(Error::HypothesisViolation("the complex is not connected through codimension-one faces".into()));
    }
    let b = betti(x, field, true);
    let global_obstruction = (-1..n as isize).find(|&i| b.get(i) != 0).map(|i| i as usize);
    let local_obstruction = local_homology_obstruction(x, field, n);
    Ok(Thm43Verdict {
        pass: global_obstruction.is_none() && local_obstruction.is_none(),
        dimension: n,
        betti: b,
        global_obstruction,
        local_obstruction,
    })
}

/// How the per-vertex topological term of the discrepancy is read.
///
/// The first three take the plain sum `b_0 + ... + b_{ℓ-1}` for a vertex of level `ℓ`.
/// `SignedProper` takes `Σ_{i=-1}^{k-3} (-1)^{k+i} b̃_i` of the proper part.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convention {
    /// Reduced Betti numbers of `Δ(Γ_{v,k})` with `*` included.
    ReducedMin,
    /// Reduced Betti numbers of `Δ(Γ_{v,k} - *)`.
    ReducedProper,
    /// Unreduced Betti numbers of `Δ(Γ_{v,k})` with `*` included.
    UnreducedMin,
    /// Alternating sum of reduced Betti numbers of `Δ(Γ_{v,k} - *)` below degree `k - 2`.
    #[default]
    SignedProper,
}

impl Convention {
    pub const ALL: [Convention; 4] =
        [Convention::ReducedMin, Convention::ReducedProper, Convention::UnreducedMin, Convention::SignedProper];

    pub fn name(self) -> &'static str {
        match self {
            Convention::ReducedMin => "reduced-min",
            Convention::ReducedProper => "reduced-proper",
            Convention::UnreducedMin => "unreduced-min",
            Convention::SignedProper => "signed-proper",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Convention::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidScalar(format!("unknown convention {s:?}")))
    }
}

/// The contribution of one vertex `v` (level `ℓ >= k >= 1`).
pub fn vertex_term(g: &LayeredGraph, v: usize, k: usize, field: FieldSpec, convention: Convention) -> Result<i64> {
    let ell = g.level(v);
    let d = g.down_graph(v, k)?;
    let (complex, reduced) = match convention {
        Convention::ReducedMin => (order_complex(&d)?, true),
        Convention::UnreducedMin => (order_complex(&d)?, false),
        Convention::ReducedProper | Convention::SignedProper => (proper_order_complex(&d)?, true),
    };
    let b = betti(&complex, field, reduced);
    Ok(match convention {
        Convention::SignedProper => (-1..=k as isize - 3)
            .map(|i| {
                let x = b.get(i) as i64;
                if (k as isize + i) % 2 == 0 { x } else { -x }
            })
            .sum(),
        _ => (0..ell as isize).map(|i| b.get(i) as i64).sum(),
    })
}

/// `Σ_{v : |v| >= k}` of the per-vertex term; zero for `k = 0`.
pub fn discrepancy_rhs(g: &LayeredGraph, field: FieldSpec, k: usize, convention: Convention) -> Result<i64> {
    if k > g.height() {
        return Err(Error::InvalidGraph(format!("degree {k} exceeds height {}", g.height())));
    }
    g.require_valid()?;
    if k == 0 {
        return Ok(0);
    }
    (0..g.vertex_count())
        .filter(|&v| g.level(v) >= k)
        .map(|v| vertex_term(g, v, k, field, convention))
        .sum()
}

/// One graph and field on which a convention is tested.
#[derive(Debug, Clone)]
pub struct CalibrationCase {
    pub name: String,
    pub graph: LayeredGraph,
    pub field: FieldSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalibrationRow {
    pub case: String,
    pub field: FieldSpec,
    pub convention: Convention,
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalibrationReport {
    pub rows: Vec<CalibrationRow>,
    /// Conventions that match on every case.
    pub matching: Vec<Convention>,
    /// The convention when exactly one matches.
    pub selected: Option<Convention>,
}

/// Compares both sides degree by degree for every case and every convention.
pub fn calibrate(cases: &[CalibrationCase]) -> Result<CalibrationReport> {
    let mut rows = Vec::new();
    for case in cases {
        let lhs = discrepancy_coefficients(&case.graph, case.field)?;
        for convention in Convention::ALL {
            let rhs = (0..=case.graph.height())
                .map(|k| discrepancy_rhs(&case.graph, case.field, k, convention))
                .collect::<Result<Vec<_>>>()?;
            rows.push(CalibrationRow {
                case: case.name.clone(),
                field: case.field,
                convention,
                matches: lhs == rhs,
                lhs: lhs.clone(),
                rhs,
            });
        }
    }
    let matching: Vec<Convention> = Convention::ALL
        .into_iter()
        .filter(|&c| rows.iter().filter(|r| r.convention == c).all(|r| r.matches))
        .collect();
    let selected = (matching.len() == 1).then(|| matching[0]);
    Ok(CalibrationReport { rows, matching, selected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn betti_examples() {
        assert!(betti(&corpus::triangle(), Q, true).is_zero());
        assert_eq!(betti(&corpus::sphere(), Q, true).b, vec![0, 0, 1]);
        let rp2 = corpus::projective_plane();
        assert_eq!(betti(&rp2, gf2(), true).b, vec![0, 1, 1]);
        assert_eq!(betti(&rp2, Q, true).b, vec![0, 0, 0]);
        let void = SimplicialComplex::new(vec![]).unwrap();
        let b = betti(&void, Q, true);
        assert_eq!((b.b_minus_one, b.b.len()), (1, 0));
        assert_eq!(betti(&void, Q, false).b_minus_one, 0);
        assert_eq!(betti(&corpus::wedge(), Q, false).b, vec![1, 0, 0]);
    }

    #[test]
    fn euler_characteristic_matches_f_vector() {
        for (_, x) in corpus::complexes() {
            let chi: i64 = x.f_vector().iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
            for f in [Q, gf2()] {
                assert_eq!(betti(&x, f, false).euler_characteristic(), chi);
                assert_eq!(betti(&x, f, true).euler_characteristic(), chi - 1);
            }
        }
    }

    #[test]
    fn order_complexes() {
        let chain = LayeredGraph::chain(1);
        assert_eq!(order_complex(&chain).unwrap().facets(), &[vec![0, 1]]);
        let anti = LayeredGraph::new(vec![("a".into(), 0), ("b".into(), 0), ("c".into(), 0)], vec![]).unwrap();
        assert_eq!(order_complex(&anti).unwrap().facets().len(), 3);
        let b2 = LayeredGraph::boolean(2).unwrap();
        let oc = order_complex(&b2).unwrap();
        assert_eq!(oc.facets().len(), 2);
        assert!(betti(&oc, Q, true).is_zero());
        assert!(betti(&proper_order_complex(&b2).unwrap(), Q, true).is_zero());
        let atoms = [b2.index_of("{1}").unwrap(), b2.index_of("{2}").unwrap()];
        assert_eq!(betti(&order_complex_of(&b2, &atoms).unwrap(), Q, true).b, vec![1]);
    }

    #[test]
    fn links_and_local_homology() {
        let s = corpus::sphere();
        assert_eq!(betti(&link(&s, &[0]).unwrap(), Q, true).b, vec![0, 1]);
        assert!(local_homology_vanishes(&s, Q, 2));
        assert!(!local_homology_vanishes(&corpus::wedge(), Q, 2));
        assert_eq!(local_homology_obstruction(&corpus::wedge(), Q, 2), Some(vec![2]));
        for f in [Q, gf2()] {
            assert!(local_homology_vanishes(&corpus::projective_plane(), f, 2));
            assert!(local_homology_vanishes(&corpus::triangle(), f, 2));
        }
    }

    #[test]
    fn thm43_examples() {
        for f in [Q, gf2()] {
            assert!(thm43_predict(&corpus::sphere(), f).unwrap().pass);
            assert!(thm43_predict(&corpus::triangle(), f).unwrap().pass);
        }
        let rp2 = corpus::projective_plane();
        assert!(thm43_predict(&rp2, Q).unwrap().pass);
        let v = thm43_predict(&rp2, gf2()).unwrap();
        assert!(!v.pass);
        assert_eq!(v.global_obstruction, Some(1));
        assert!(matches!(thm43_predict(&corpus::wedge(), Q), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn conventions_on_boolean_graphs() {
        let b3 = LayeredGraph::boolean(3).unwrap();
        for k in 0..=3 {
            assert_eq!(discrepancy_rhs(&b3, Q, k, Convention::ReducedMin).unwrap(), 0);
            assert_eq!(discrepancy_rhs(&b3, Q, k, Convention::SignedProper).unwrap(), 0);
        }
        // one per vertex of level >= k
        assert_eq!(discrepancy_rhs(&b3, Q, 2, Convention::UnreducedMin).unwrap(), 4);
        assert_eq!("signed-proper".parse::<Convention>().unwrap(), Convention::SignedProper);
        assert!("nope".parse::<Convention>().is_err());
    }

    #[test]
    fn projective_plane_hat_calibration() {
        let g = LayeredGraph::from_complex(&corpus::projective_plane()).unwrap().hat();
        let lhs = discrepancy_coefficients(&g, gf2()).unwrap();
        let rhs: Vec<i64> =
            (0..=4).map(|k| discrepancy_rhs(&g, gf2(), k, Convention::SignedProper).unwrap()).collect();
        assert_eq!(lhs, rhs);
        assert!(lhs.iter().any(|&x| x != 0));
    }
}
