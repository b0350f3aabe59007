//! Pseudo-roots of a monic polynomial over the ring of rational `d×d` matrices
//! and its `n!` factorizations into linear factors.
//!
//! Root indices are 1-based throughout the public API.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, GenericityKind, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::DenseMatrix;

/// A square matrix over `Q`, viewed as an element of the matrix ring.
pub type MatrixRingElement = DenseMatrix;

const Q: FieldSpec = FieldSpec::Rationals;

/// Subsets of `[1, n]` are bitmasks over 0-based positions.
type Mask = u32;

/// The largest number of roots accepted; the pseudo-root table has `n·2^(n-1)` entries.
pub const MAX_ROOTS: usize = 12;

fn mask_to_indices(mask: Mask) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b as usize + 1).collect()
}

fn genericity(kind: GenericityKind, subset: Vec<usize>, index: Option<usize>) -> Error {
    Error::GenericityFailure { kind, subset, index }
}

/// `n` roots of a common size `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    d: usize,
    roots: Vec<MatrixRingElement>,
}

impl RootSystem {
    pub fn new(roots: Vec<MatrixRingElement>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidRoots("at least one root is required".into()));
        }
        if roots.len() > MAX_ROOTS {
            return Err(Error::SizeLimit { what: "roots", size: roots.len(), cap: MAX_ROOTS });
        }
        let d = roots[0].rows();
        if d == 0 {
            return Err(Error::InvalidRoots("roots must be at least 1x1".into()));
        }
        for (k, r) in roots.iter().enumerate() {
            if r.field() != Q {
                return Err(Error::FieldMismatch);
            }
            if r.rows() != d || r.cols() != d {
                return Err(Error::InvalidRoots(format!(
                    "root {} is {}x{}, expected {d}x{d}",
                    k + 1,
                    r.rows(),
                    r.cols()
                )));
            }
        }
        Ok(RootSystem { d, roots })
    }

    /// Scalar (`1×1`) roots, convenient for the commutative case.
    pub fn scalars(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| DenseMatrix::from_i64_rows(Q, &[&[v]])).collect())
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The root `x_i`, 1-based.
    pub fn root(&self, i: usize) -> &MatrixRingElement {
        &self.roots[i - 1]
    }

    pub fn roots(&self) -> &[MatrixRingElement] {
        &self.roots
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::InvalidRoots(format!("index {i} outside [1, {}]", self.n())));
        }
        Ok(())
    }

    fn mask_of(&self, set: &[usize]) -> Result<Mask> {
        let mut mask = 0;
        for &i in set {
            self.check_index(i)?;
            if mask >> (i - 1) & 1 == 1 {
                return Err(Error::InvalidRoots(format!("index {i} repeated")));
            }
            mask |= 1 << (i - 1);
        }
        Ok(mask)
    }

    fn identity(&self) -> MatrixRingElement {
        DenseMatrix::identity(Q, self.d)
    }

    /// `x_i^0, ..., x_i^top`.
    fn powers(&self, i: usize, top: usize) -> Vec<MatrixRingElement> {
        let mut out = vec![self.identity()];
        for _ in 0..top {
            let next = out.last().unwrap().mul(self.root(i)).expect("square roots");
            out.push(next);
        }
        out
    }
}

/// The block matrix whose block `(r, c)` is `x_{i_c}^{k-r}` for `r = 0..=k`:
/// powers `k` down to `0` going down the rows.
pub fn block_vandermonde(rs: &RootSystem, indices: &[usize]) -> Result<DenseMatrix> {
    rs.mask_of(indices)?;
    if indices.is_empty() {
        return Err(Error::InvalidRoots("empty index list".into()));
    }
    let k = indices.len() - 1;
    let powers: Vec<Vec<MatrixRingElement>> = indices.iter().map(|&i| rs.powers(i, k)).collect();
    let blocks: Vec<Vec<DenseMatrix>> =
        (0..=k).map(|r| powers.iter().map(|p| p[k - r].clone()).collect()).collect();
    DenseMatrix::from_blocks(&blocks)
}

/// The quasideterminant `w_{A,i} = x_i^k - r · W(A)^{-1} · c` with `k = |A|`,
/// where `r` holds `x_a^k` for `a ∈ A` and `c` holds `x_i^{k-1}, ..., x_i^0`.
///
/// `A = ∅` gives the identity. `A` is read in increasing order; the result
/// does not depend on that order.
pub fn quasidet_w(rs: &RootSystem, a: &[usize], i: usize) -> Result<MatrixRingElement> {
    let mask = rs.mask_of(a)?;
    rs.check_index(i)?;
    if mask >> (i - 1) & 1 == 1 {
        return Err(Error::InvalidRoots(format!("index {i} lies in A")));
    }
    quasidet_mask(rs, mask, i)
}

fn quasidet_mask(rs: &RootSystem, mask: Mask, i: usize) -> Result<MatrixRingElement> {
    let a = mask_to_indices(mask);
    let k = a.len();
    let xi = rs.powers(i, k);
    if k == 0 {
        return Ok(xi[0].clone());
    }
    let inner = block_vandermonde(rs, &a)?;
    let inv = inner
        .inverse()
        .map_err(|_| genericity(GenericityKind::Vandermonde, a.clone(), None))?;
    let r: Vec<DenseMatrix> = a.iter().map(|&j| rs.powers(j, k)[k].clone()).collect();
    let r = DenseMatrix::from_blocks(&[r])?;
    let c: Vec<Vec<DenseMatrix>> = (0..k).map(|row| vec![xi[k - 1 - row].clone()]).collect();
    let c = DenseMatrix::from_blocks(&c)?;
    xi[k].sub(&r.mul(&inv)?.mul(&c)?)
}

/// The pseudo-root `x_{A,i} = w_{A,i} · x_i · w_{A,i}^{-1}`.
pub fn pseudo_root(rs: &RootSystem, a: &[usize], i: usize) -> Result<MatrixRingElement> {
    let w = quasidet_w(rs, a, i)?;
    conjugate(rs, &w, a, i)
}

fn conjugate(rs: &RootSystem, w: &MatrixRingElement, a: &[usize], i: usize) -> Result<MatrixRingElement> {
    let winv = w
        .inverse()
        .map_err(|_| genericity(GenericityKind::Quasideterminant, a.to_vec(), Some(i)))?;
    w.mul(rs.root(i))?.mul(&winv)
}

/// One obstruction to generic position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericityIssue {
    pub kind: GenericityKind,
    /// 1-based, increasing.
    pub subset: Vec<usize>,
    /// The index `i` of a singular `w_{subset, i}`.
    pub index: Option<usize>,
}

impl GenericityIssue {
    pub fn to_error(&self) -> Error {
        genericity(self.kind, self.subset.clone(), self.index)
    }
}

impl fmt::Display for GenericityIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.index) {
            (GenericityKind::Vandermonde, _) => write!(f, "W{:?} is singular", self.subset),
            (GenericityKind::Quasideterminant, Some(i)) => {
                write!(f, "w for A = {:?}, i = {i} is singular", self.subset)
            }
            (GenericityKind::Quasideterminant, None) => write!(f, "w for A = {:?} is singular", self.subset),
        }
    }
}

/// Every singular block Vandermonde `W(S)`, `|S| >= 2`, and every singular `w_{A,i}`
/// whose `W(A)` is invertible. An empty list means generic position.
pub fn genericity_check(rs: &RootSystem) -> Vec<GenericityIssue> {
    let n = rs.n();
    let mut singular = vec![false; 1 << n];
    let mut issues = Vec::new();
    let mut masks: Vec<Mask> = (1..(1 << n) as Mask).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        if mask.count_ones() >= 2 {
            let s = mask_to_indices(mask);
            let w = block_vandermonde(rs, &s).expect("valid indices");
            if w.rank() < w.rows() {
                singular[mask as usize] = true;
                issues.push(GenericityIssue { kind: GenericityKind::Vandermonde, subset: s, index: None });
            }
        }
    }
    for mask in 1..(1 << n) as Mask {
        if singular[mask as usize] {
            continue;
        }
        for i in 1..=n {
            if mask >> (i - 1) & 1 == 1 {
                continue;
            }
            let w = quasidet_mask(rs, mask, i).expect("W(A) invertible");
            if w.rank() < w.rows() {
                issues.push(GenericityIssue {
                    kind: GenericityKind::Quasideterminant,
                    subset: mask_to_indices(mask),
                    index: Some(i),
                });
            }
        }
    }
    issues
}

/// All pairs `(w_{A,i}, x_{A,i})` for `i ∉ A`, computed once.
#[derive(Debug, Clone)]
pub struct PseudoRootTable {
    n: usize,
    entries: BTreeMap<(Mask, usize), (MatrixRingElement, MatrixRingElement)>,
}

impl PseudoRootTable {
    /// Builds the full table; fails on the first genericity obstruction, by increasing `|A|`.
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let n = rs.n();
        let mut masks: Vec<Mask> = (0..(1 << n) as Mask).filter(|&m| (m.count_ones() as usize) < n).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let mut entries = BTreeMap::new();
        for mask in masks {
            for i in 1..=n {
                if mask >> (i - 1) & 1 == 1 {
                    continue;
                }
                let w = quasidet_mask(rs, mask, i)?;
                let x = conjugate(rs, &w, &mask_to_indices(mask), i)?;
                entries.insert((mask, i), (w, x));
            }
        }
        Ok(PseudoRootTable { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn lookup(&self, a: &[usize], i: usize) -> Option<&(MatrixRingElement, MatrixRingElement)> {
        let mask = a.iter().try_fold(0 as Mask, |m, &j| (1..=self.n).contains(&j).then(|| m | 1 << (j - 1)))?;
        self.entries.get(&(mask, i))
    }

    /// `w_{A,i}`.
    pub fn w(&self, a: &[usize], i: usize) -> Option<&MatrixRingElement> {
        self.lookup(a, i).map(|e| &e.0)
    }

    /// `x_{A,i}`.
    pub fn x(&self, a: &[usize], i: usize) -> Option<&MatrixRingElement> {
        self.lookup(a, i).map(|e| &e.1)
    }

    /// `(A, i, w, x)` for every entry, `A` as 1-based indices.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, usize, &MatrixRingElement, &MatrixRingElement)> + '_ {
        self.entries.iter().map(|(&(m, i), (w, x))| (mask_to_indices(m), i, w, x))
    }

    /// `y_k = x_{A_{k-1}, i_k}` along an ordering, with `A_{k-1} = {i_1, ..., i_{k-1}}`.
    pub fn pseudo_roots_along(&self, ordering: &[usize]) -> Result<Vec<MatrixRingElement>> {
        check_ordering(self.n, ordering)?;
        let mut mask: Mask = 0;
        let mut out = Vec::with_capacity(ordering.len());
        for &i in ordering {
            out.push(self.entries[&(mask, i)].1.clone());
            mask |= 1 << (i - 1);
        }
        Ok(out)
    }
}

fn check_ordering(n: usize, ordering: &[usize]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if ordering.len() != n {
        return Err(Error::InvalidRoots(format!("ordering has {} entries, expected {n}", ordering.len())));
    }
    for &i in ordering {
        if i == 0 || i > n || seen[i] {
            return Err(Error::InvalidRoots(format!("{ordering:?} is not a permutation of [1, {n}]")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// A monic `t^n + a_1 t^{n-1} + ... + a_n` with matrix coefficients and central `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPolynomial {
    coeffs: Vec<MatrixRingElement>,
}

impl MatrixPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_k`, `1 <= k <= n`.
    pub fn coeff(&self, k: usize) -> &MatrixRingElement {
        &self.coeffs[k - 1]
    }

    /// `a_1, ..., a_n`.
    pub fn coefficients(&self) -> &[MatrixRingElement] {
        &self.coeffs
    }
}

impl fmt::Display for MatrixPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        write!(f, "t^{n}")?;
        for (k, a) in self.coeffs.iter().enumerate() {
            match n - k - 1 {
                0 => write!(f, " + {a}")?,
                1 => write!(f, " + {a} t")?,
                e => write!(f, " + {a} t^{e}")?,
            }
        }
        Ok(())
    }
}

/// `a_m = (-1)^m Σ_{k_1 > ... > k_m} y_{k_1} ⋯ y_{k_m}`, summed subset by subset.
pub fn viete_coefficients(rs: &RootSystem, ordering: &[usize]) -> Result<MatrixPolynomial> {
    let table = PseudoRootTable::build(rs)?;
    viete_from_table(&table, ordering)
}

pub fn viete_from_table(table: &PseudoRootTable, ordering: &[usize]) -> Result<MatrixPolynomial> {
    let y = table.pseudo_roots_along(ordering)?;
    let n = y.len();
    let d = y[0].rows();
    let mut coeffs = vec![DenseMatrix::zeros(Q, d, d); n];
    for mask in 1..(1u32 << n) {
        let mut prod = DenseMatrix::identity(Q, d);
        for k in (0..n).rev().filter(|k| mask >> k & 1 == 1) {
            prod = prod.mul(&y[k])?;
        }
        let m = mask.count_ones() as usize;
        let signed = if m % 2 == 1 { prod.neg() } else { prod };
        coeffs[m - 1] = coeffs[m - 1].add(&signed)?;
    }
    Ok(MatrixPolynomial { coeffs })
}

/// Multiplies out `(t - y_n)(t - y_{n-1}) ⋯ (t - y_1)`.
pub fn expand_factorization(rs: &RootSystem, ordering: &[usize]) -> Result<MatrixPolynomial> {
    let table = PseudoRootTable::build(rs)?;
    expand_from_table(&table, ordering)
}

pub fn expand_from_table(table: &PseudoRootTable, ordering: &[usize]) -> Result<MatrixPolynomial> {
    let y = table.pseudo_roots_along(ordering)?;
    let d = y[0].rows();
    // ascending powers of t
    let mut poly = vec![DenseMatrix::identity(Q, d)];
    for yk in &y {
        let mut next = vec![DenseMatrix::zeros(Q, d, d); poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j + 1] = next[j + 1].add(c)?;
            next[j] = next[j].sub(&yk.mul(c)?)?;
        }
        poly = next;
    }
    poly.pop();
    poly.reverse();
    Ok(MatrixPolynomial { coeffs: poly })
}

/// Every permutation of `[1, n]` in lexicographic order.
pub fn orderings(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Outcome of comparing all `n!` factorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingReport {
    pub per_ordering: Vec<(Vec<usize>, MatrixPolynomial)>,
    /// Orderings whose expanded product differs from the coefficient sums.
    pub expansion_mismatches: Vec<Vec<usize>>,
    pub pass: bool,
    /// The polynomial shared by all orderings when `pass`.
    pub common: Option<MatrixPolynomial>,
}

impl OrderingReport {
    pub fn from_results(table: &PseudoRootTable, per_ordering: Vec<(Vec<usize>, MatrixPolynomial)>) -> Result<Self> {
        let mut expansion_mismatches = Vec::new();
        for (ord, p) in &per_ordering {
            if &expand_from_table(table, ord)? != p {
                expansion_mismatches.push(ord.clone());
            }
        }
        let first = &per_ordering[0].1;
        let pass = expansion_mismatches.is_empty() && per_ordering.iter().all(|(_, p)| p == first);
        let common = pass.then(|| first.clone());
        Ok(OrderingReport { per_ordering, expansion_mismatches, pass, common })
    }
}

pub fn check_all_orderings(rs: &RootSystem) -> Result<OrderingReport> {
    let table = PseudoRootTable::build(rs)?;
    let per_ordering = orderings(rs.n())
        .into_iter()
        .map(|o| viete_from_table(&table, &o).map(|p| (o, p)))
        .collect::<Result<Vec<_>>>()?;
    OrderingReport::from_results(&table, per_ordering)
}

/// Both relations behind `(t - x_{A∪i,j})(t - x_{A,i}) = (t - x_{A∪j,i})(t - x_{A,j})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiamondCheck {
    /// `x_{A∪i,j} + x_{A,i} = x_{A∪j,i} + x_{A,j}`.
    pub linear: bool,
    /// `x_{A∪i,j} · x_{A,i} = x_{A∪j,i} · x_{A,j}`.
    pub quadratic: bool,
}

impl DiamondCheck {
    pub fn holds(&self) -> bool {
        self.linear && self.quadratic
    }
}

pub fn check_diamond(rs: &RootSystem, a: &[usize], i: usize, j: usize) -> Result<DiamondCheck> {
    if i == j {
        return Err(Error::InvalidRoots(format!("i and j must differ, both are {i}")));
    }
    let with = |extra: usize| {
        let mut s = a.to_vec();
        s.push(extra);
        s
    };
    let x_ai = pseudo_root(rs, a, i)?;
    let x_aj = pseudo_root(rs, a, j)?;
    let x_aij = pseudo_root(rs, &with(i), j)?;
    let x_aji = pseudo_root(rs, &with(j), i)?;
    Ok(DiamondCheck {
        linear: x_aij.add(&x_ai)? == x_aji.add(&x_aj)?,
        quadratic: x_aij.mul(&x_ai)? == x_aji.mul(&x_aj)?,
    })
}

/// Coefficients `c_0, ..., c_d` of `det(t I - m)` over `Q` (Faddeev–LeVerrier).
pub fn charpoly(m: &MatrixRingElement) -> Result<Vec<BigRational>> {
    if m.field() != Q {
        return Err(Error::FieldMismatch);
    }
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: (m.rows(), m.rows()), found: (m.rows(), m.cols()) });
    }
    let d = m.rows();
    let mut c = vec![BigRational::zero(); d + 1];
    c[d] = BigRational::one();
    let id = DenseMatrix::identity(Q, d);
    let mut mk = DenseMatrix::zeros(Q, d, d);
    for k in 1..=d {
        mk = m.mul(&mk)?.add(&id.scale(&Scalar::Rational(c[d - k + 1].clone())))?;
        let tr = m.mul(&mk)?.trace();
        let tr = tr.as_rational().expect("rational").clone();
        c[d - k] = -tr / BigRational::from_integer((k as i64).into());
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_i64_rows(Q, rows)
    }

    fn scalar(v: i64) -> DenseMatrix {
        m(&[&[v]])
    }

    fn sample() -> RootSystem {
        RootSystem::new(vec![
            m(&[&[1, 2], &[0, 3]]),
            m(&[&[0, 1], &[-1, 5]]),
            m(&[&[2, 0], &[1, -1]]),
        ])
        .unwrap()
    }

    #[test]
    fn vandermonde_examples() {
        let rs = RootSystem::scalars(&[1, 2, 3]).unwrap();
        assert_eq!(block_vandermonde(&rs, &[2]).unwrap(), scalar(1));
        assert_eq!(block_vandermonde(&rs, &[1, 2]).unwrap(), m(&[&[1, 2], &[1, 1]]));
        assert_eq!(block_vandermonde(&rs, &[1, 2, 3]).unwrap(), m(&[&[1, 4, 9], &[1, 2, 3], &[1, 1, 1]]));
    }

    #[test]
    fn quasideterminant_examples() {
        let rs = RootSystem::scalars(&[5, 3]).unwrap();
        assert_eq!(quasidet_w(&rs, &[1], 2).unwrap(), scalar(-2));
        assert_eq!(quasidet_w(&rs, &[], 1).unwrap(), scalar(1));
        let rs = RootSystem::scalars(&[1, 2, 4]).unwrap();
        assert_eq!(quasidet_w(&rs, &[1, 2], 3).unwrap(), scalar(6));
        assert_eq!(quasidet_w(&rs, &[2, 1], 3).unwrap(), scalar(6));
        assert!(quasidet_w(&rs, &[3], 3).is_err());
    }

    #[test]
    fn quasideterminant_matches_schur_complement() {
        // for scalars w_{A,i} = Π_{a ∈ A} (x_i - x_a)
        let rs = RootSystem::scalars(&[2, -1, 5, 3]).unwrap();
        let w = quasidet_w(&rs, &[1, 2, 3], 4).unwrap();
        assert_eq!(w, scalar(-8));
    }

    #[test]
    fn pseudo_root_examples() {
        let rs = RootSystem::new(vec![m(&[&[0, 1], &[1, 0]]), m(&[&[1, 0], &[0, -1]])]).unwrap();
        assert_eq!(pseudo_root(&rs, &[], 2).unwrap(), *rs.root(2));
        let x = pseudo_root(&rs, &[1], 2).unwrap();
        assert!(x.trace().is_zero());
        let c = charpoly(&x).unwrap();
        assert_eq!(c, charpoly(rs.root(2)).unwrap());
        // hand computation: w = [[1,-1],[-1,-1]], w^{-1} = w/2, x = w x_2 w^{-1} = [[0,-1],[-1,0]]
        assert_eq!(x, m(&[&[0, -1], &[-1, 0]]));
        let rs = RootSystem::scalars(&[3, 7, 11]).unwrap();
        assert_eq!(pseudo_root(&rs, &[1, 3], 2).unwrap(), scalar(7));
    }

    #[test]
    fn genericity() {
        let rs = RootSystem::scalars(&[4, 4]).unwrap();
        let issues = genericity_check(&rs);
        assert_eq!(issues[0].kind, GenericityKind::Vandermonde);
        assert_eq!(issues[0].subset, vec![1, 2]);
        assert!(genericity_check(&RootSystem::scalars(&[1, 2, 3]).unwrap()).is_empty());
        assert!(matches!(
            PseudoRootTable::build(&rs),
            Err(Error::GenericityFailure { kind: GenericityKind::Quasideterminant, .. })
        ));
    }

    #[test]
    fn commutative_viete() {
        let rs = RootSystem::scalars(&[1, 2]).unwrap();
        for ord in [[1, 2], [2, 1]] {
            let p = viete_coefficients(&rs, &ord).unwrap();
            assert_eq!(p.coefficients(), &[scalar(-3), scalar(2)]);
            assert_eq!(expand_factorization(&rs, &ord).unwrap(), p);
        }
        let rs = RootSystem::scalars(&[5]).unwrap();
        assert_eq!(viete_coefficients(&rs, &[1]).unwrap().coefficients(), &[scalar(-5)]);
        let rs = RootSystem::scalars(&[1, 2, 3]).unwrap();
        let report = check_all_orderings(&rs).unwrap();
        assert!(report.pass);
        assert_eq!(report.per_ordering.len(), 6);
        assert_eq!(report.common.unwrap().coefficients(), &[scalar(-6), scalar(11), scalar(-6)]);
    }

    #[test]
    fn matrix_orderings_agree() {
        let rs = sample();
        assert!(genericity_check(&rs).is_empty());
        let report = check_all_orderings(&rs).unwrap();
        assert!(report.pass, "{:?}", report.expansion_mismatches);
        let p = report.common.unwrap();
        // a_1 = -(x_1 + x_2 + x_3) only for commuting roots; here check trace of the sum instead
        let sum = rs.roots().iter().skip(1).try_fold(rs.root(1).clone(), |acc, x| acc.add(x)).unwrap();
        assert_eq!(p.coeff(1).trace(), sum.neg().trace());
    }

    #[test]
    fn two_root_identity() {
        // P(t) = t^2 - (x_{1,2} + x_1) t + x_{1,2} x_1, in that order
        let rs = RootSystem::new(vec![m(&[&[1, 1], &[0, 2]]), m(&[&[0, 1], &[3, 1]])]).unwrap();
        let x12 = pseudo_root(&rs, &[1], 2).unwrap();
        let p = viete_coefficients(&rs, &[1, 2]).unwrap();
        assert_eq!(*p.coeff(2), x12.mul(rs.root(1)).unwrap());
        assert_eq!(*p.coeff(1), x12.add(rs.root(1)).unwrap().neg());
        assert!(check_diamond(&rs, &[], 1, 2).unwrap().holds());
    }

    #[test]
    fn diamonds() {
        let rs = sample();
        assert!(check_diamond(&rs, &[3], 1, 2).unwrap().holds());
        assert!(check_diamond(&rs, &[], 2, 3).unwrap().holds());
        let scalars = RootSystem::scalars(&[1, 2, 5]).unwrap();
        assert!(check_diamond(&scalars, &[2], 1, 3).unwrap().holds());
        assert!(check_diamond(&rs, &[], 1, 1).is_err());
    }

    #[test]
    fn table_entries_are_similar_to_roots() {
        let rs = sample();
        let table = PseudoRootTable::build(&rs).unwrap();
        assert_eq!(table.len(), 3 * 4);
        for (a, i, _, x) in table.iter() {
            assert_eq!(charpoly(x).unwrap(), charpoly(rs.root(i)).unwrap(), "A = {a:?}, i = {i}");
        }
    }

    #[test]
    fn charpoly_example() {
        let c = charpoly(&m(&[&[1, 2], &[3, 4]])).unwrap();
        let ints: Vec<i64> = c.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
        assert_eq!(ints, vec![-2, -5, 1]);
    }

    #[test]
    fn ordering_enumeration() {
        assert_eq!(orderings(3).len(), 6);
        assert_eq!(orderings(1), vec![vec![1]]);
        assert_eq!(orderings(3)[1], vec![1, 3, 2]);
    }
}
