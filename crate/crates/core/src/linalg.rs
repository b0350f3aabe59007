//! Dense exact matrices and Gaussian elimination over a [`FieldSpec`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{with_arith, Arith, FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: (rows, cols),
                found: (entries.len(), 1),
            });
        }
        if !entries.iter().all(|e| field.contains(e)) {
            return Err(Error::FieldMismatch);
        }
        Ok(DenseMatrix { rows, cols, field, entries })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries = rows.iter().flat_map(|r| r.iter().map(|&v| field.from_i64(v))).collect();
        DenseMatrix { rows: rows.len(), cols, field, entries }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: (n, cols), found: (n, bad.len()) });
        }
        Self::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Assembles a block matrix; every block row must share heights and every block column widths.
    pub fn from_blocks(blocks: &[Vec<DenseMatrix>]) -> Result<Self> {
        let first = blocks.first().and_then(|r| r.first()).ok_or(Error::DimensionMismatch {
            expected: (1, 1),
            found: (0, 0),
        })?;
        let field = first.field;
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut r0 = 0;
        for (bi, brow) in blocks.iter().enumerate() {
            let mut c0 = 0;
            if brow.len() != widths.len() {
                return Err(Error::DimensionMismatch {
                    expected: (heights[bi], widths.len()),
                    found: (heights[bi], brow.len()),
                });
            }
            for (bj, b) in brow.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::DimensionMismatch {
                        expected: (heights[bi], widths[bj]),
                        found: (b.rows, b.cols),
                    });
                }
                if b.field != field {
                    return Err(Error::FieldMismatch);
                }
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.entries[(r0 + i) * cols + c0 + j] = b.get(i, j).clone();
                    }
                }
                c0 += b.cols;
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(self.field.contains(&v), "scalar outside the matrix field");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            entries.extend_from_slice(&self.entries[(r0 + i) * self.cols + c0..][..cols]);
        }
        DenseMatrix { rows, cols, field: self.field, entries }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        DenseMatrix { rows: self.cols, cols: self.rows, field: self.field, entries }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let f = self.field;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f.add(a, b)).collect();
        Ok(self.with_entries(entries))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let f = self.field;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f.sub(a, b)).collect();
        Ok(self.with_entries(entries))
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        self.with_entries(self.entries.iter().map(|a| f.neg(a)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let f = self.field;
        self.with_entries(self.entries.iter().map(|a| f.mul(a, s)).collect())
    }

    fn with_entries(&self, entries: Vec<Scalar>) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, other.cols),
                found: (other.rows, other.cols),
            });
        }
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let entries = with_arith!(self.field, ar => {
            let a: Vec<_> = self.entries.iter().map(|e| ar.lift(e)).collect();
            let b: Vec<_> = other.entries.iter().map(|e| ar.lift(e)).collect();
            let mut out = Vec::with_capacity(n * m);
            for i in 0..n {
                for j in 0..m {
                    let mut acc = ar.zero();
                    for l in 0..k {
                        let x = &a[i * k + l];
                        if ar.is_zero(x) {
                            continue;
                        }
                        acc = ar.add(&acc, &ar.mul(x, &b[l * m + j]));
                    }
                    out.push(ar.lower(acc));
                }
            }
            out
        });
        Ok(DenseMatrix { rows: n, cols: m, field: self.field, entries })
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Field rank by exact elimination.
    pub fn rank(&self) -> usize {
        with_arith!(self.field, ar => {
            let mut ech = Echelon::new(ar, self.cols);
            for r in 0..self.rows {
                ech.insert(self.row(r).iter().map(|e| ar.lift(e)).collect());
            }
            ech.rank()
        })
    }

    pub fn nullspace_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Two-sided inverse; `SingularMatrix` when the rank is deficient.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, self.rows),
                found: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let entries = with_arith!(self.field, ar => {
            let mut a: Vec<Vec<_>> = (0..n)
                .map(|r| {
                    let mut row: Vec<_> = self.row(r).iter().map(|e| ar.lift(e)).collect();
                    row.extend((0..n).map(|c| if c == r { ar.one() } else { ar.zero() }));
                    row
                })
                .collect();
            for c in 0..n {
                let p = (c..n).find(|&r| !ar.is_zero(&a[r][c])).ok_or(Error::SingularMatrix)?;
                a.swap(c, p);
                let inv = ar.inv(&a[c][c]);
                for x in a[c].iter_mut() {
                    *x = ar.mul(x, &inv);
                }
                let pivot = a[c].clone();
                for (r, row) in a.iter_mut().enumerate() {
                    if r == c || ar.is_zero(&row[c]) {
                        continue;
                    }
                    #[allow(clippy::clone_on_copy)]
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                        *x = ar.axpy(x, &f, y);
                    }
                }
            }
            a.into_iter().flat_map(|row| row.into_iter().skip(n)).map(|e| ar.lower(e)).collect()
        });
        Ok(DenseMatrix { rows: n, cols: n, field: self.field, entries })
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Incremental row-echelon basis. Each stored row is normalised to a leading one.
pub(crate) struct Echelon<'a, A: Arith> {
    ar: &'a A,
    dim: usize,
    pivots: BTreeMap<usize, Vec<A::E>>,
}

impl<'a, A: Arith> Echelon<'a, A> {
    pub fn new(ar: &'a A, dim: usize) -> Self {
        Echelon { ar, dim, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `v` to the span; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, mut v: Vec<A::E>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let ar = self.ar;
        for (&pc, row) in &self.pivots {
            if ar.is_zero(&v[pc]) {
                continue;
            }
            let f = v[pc].clone();
            for (x, y) in v[pc..].iter_mut().zip(&row[pc..]) {
                if !ar.is_zero(y) {
                    *x = ar.axpy(x, &f, y);
                }
            }
        }
        match v.iter().position(|x| !ar.is_zero(x)) {
            None => false,
            Some(pc) => {
                let inv = ar.inv(&v[pc]);
                for x in v[pc..].iter_mut() {
                    if !ar.is_zero(x) {
                        *x = ar.mul(x, &inv);
                    }
                }
                self.pivots.insert(pc, v);
                true
            }
        }
    }

    /// Reduced row-echelon rows, sorted by pivot column.
    pub fn into_rref(self) -> Vec<(usize, Vec<A::E>)> {
        let ar = self.ar;
        let mut rows: Vec<(usize, Vec<A::E>)> = self.pivots.into_iter().collect();
        for i in (0..rows.len()).rev() {
            let (pc, pivot) = (rows[i].0, rows[i].1.clone());
            for row in rows[..i].iter_mut() {
                if ar.is_zero(&row.1[pc]) {
                    continue;
                }
                let f = row.1[pc].clone();
                for (x, y) in row.1[pc..].iter_mut().zip(&pivot[pc..]) {
                    if !ar.is_zero(y) {
                        *x = ar.axpy(x, &f, y);
                    }
                }
            }
        }
        rows
    }
}

/// Basis of the kernel of the matrix whose rows are `rref` (reduced, sorted by pivot).
pub(crate) fn kernel_from_rref<A: Arith>(
    ar: &A,
    dim: usize,
    rref: &[(usize, Vec<A::E>)],
) -> Vec<Vec<A::E>> {
    let pivot_cols: Vec<usize> = rref.iter().map(|(c, _)| *c).collect();
    let mut out = Vec::new();
    for free in (0..dim).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![ar.zero(); dim];
        v[free] = ar.one();
        for (pc, row) in rref {
            if !ar.is_zero(&row[free]) {
                v[*pc] = ar.neg(&row[free]);
            }
        }
        out.push(v);
    }
    out
}

/// Canonical reduced row-echelon form of the span of `rows` (zero rows dropped).
pub fn row_reduce(field: FieldSpec, dim: usize, rows: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::DimensionMismatch { expected: (1, dim), found: (1, bad.len()) });
    }
    Ok(with_arith!(field, ar => {
        let mut ech = Echelon::new(ar, dim);
        for r in rows {
            ech.insert(r.iter().map(|e| ar.lift(e)).collect());
        }
        ech.into_rref()
            .into_iter()
            .map(|(_, row)| row.into_iter().map(|e| ar.lower(e)).collect())
            .collect()
    }))
}

/// Basis of `{f : f . r = 0 for every r in rows}` inside the `dim`-dimensional space.
pub fn annihilator_basis(
    field: FieldSpec,
    dim: usize,
    rows: &[Vec<Scalar>],
) -> Result<Vec<Vec<Scalar>>> {
    if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::DimensionMismatch { expected: (1, dim), found: (1, bad.len()) });
    }
    Ok(with_arith!(field, ar => {
        let mut ech = Echelon::new(ar, dim);
        for r in rows {
            ech.insert(r.iter().map(|e| ar.lift(e)).collect());
        }
        let rref = ech.into_rref();
        kernel_from_rref(ar, dim, &rref)
            .into_iter()
            .map(|v| v.into_iter().map(|e| ar.lower(e)).collect())
            .collect()
    }))
}

/// Rank of a family of vectors given sparsely as `(column, value)` pairs.
pub fn sparse_rank(field: FieldSpec, dim: usize, rows: &[Vec<(usize, Scalar)>]) -> usize {
    with_arith!(field, ar => {
        let mut ech = Echelon::new(ar, dim);
        for r in rows {
            let mut v = vec![ar.zero(); dim];
            for (c, x) in r {
                v[*c] = ar.add(&v[*c], &ar.lift(x));
            }
            ech.insert(v);
        }
        ech.rank()
    })
}

/// Standard pairing of two vectors.
pub fn dot(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const GF2: FieldSpec = FieldSpec::PrimeField(2);

    #[test]
    fn rank_examples() {
        assert_eq!(DenseMatrix::identity(Q, 3).rank(), 3);
        assert_eq!(DenseMatrix::from_i64_rows(GF2, &[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(DenseMatrix::from_i64_rows(Q, &[&[1, 2], &[2, 4], &[0, 1]]).rank(), 2);
    }

    #[test]
    fn inverse_examples() {
        let id = DenseMatrix::identity(Q, 4);
        assert_eq!(id.inverse().unwrap(), id);
        let swap = DenseMatrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), swap);
        let shear = DenseMatrix::from_i64_rows(Q, &[&[1, 1], &[0, 1]]);
        assert_eq!(
            shear.inverse().unwrap(),
            DenseMatrix::from_i64_rows(Q, &[&[1, -1], &[0, 1]])
        );
        let singular = DenseMatrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(singular.inverse(), Err(Error::SingularMatrix));
        assert!(DenseMatrix::zeros(Q, 2, 3).inverse().is_err());
    }

    #[test]
    fn inverse_mod_p() {
        let gf3 = FieldSpec::PrimeField(3);
        let m = DenseMatrix::from_i64_rows(gf3, &[&[1, 2], &[0, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), DenseMatrix::identity(gf3, 2));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(DenseMatrix::zeros(Q, 2, 3).nullspace_dim(), 3);
        assert_eq!(DenseMatrix::identity(Q, 3).nullspace_dim(), 0);
        assert_eq!(DenseMatrix::from_i64_rows(GF2, &[&[1, 1], &[1, 1]]).nullspace_dim(), 1);
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(annihilator_basis(Q, 2, &[]).unwrap().len(), 2);
        let full = vec![vec![Q.one(), Q.zero()], vec![Q.zero(), Q.one()]];
        assert!(annihilator_basis(Q, 2, &full).unwrap().is_empty());
        let ann = annihilator_basis(Q, 2, &[vec![Q.one(), Q.one()]]).unwrap();
        assert_eq!(ann.len(), 1);
        // proportional to (1, -1)
        assert_eq!(ann[0][0], Q.neg(&ann[0][1]));
        assert!(!ann[0][0].is_zero());
        assert!(annihilator_basis(Q, 3, &[vec![Q.one()]]).is_err());
    }

    #[test]
    fn block_assembly() {
        let a = DenseMatrix::identity(Q, 2);
        let b = DenseMatrix::zeros(Q, 2, 1);
        let c = DenseMatrix::from_i64_rows(Q, &[&[5, 6]]);
        let d = DenseMatrix::from_i64_rows(Q, &[&[7]]);
        let m = DenseMatrix::from_blocks(&[vec![a, b], vec![c, d]]).unwrap();
        assert_eq!(m, DenseMatrix::from_i64_rows(Q, &[&[1, 0, 0], &[0, 1, 0], &[5, 6, 7]]));
        assert_eq!(m.submatrix(2, 0, 1, 2), DenseMatrix::from_i64_rows(Q, &[&[5, 6]]));
    }

    #[test]
    fn row_reduce_is_canonical() {
        let a = vec![vec![Q.from_i64(2), Q.from_i64(4)], vec![Q.from_i64(1), Q.from_i64(3)]];
        let b = vec![vec![Q.from_i64(0), Q.from_i64(1)], vec![Q.from_i64(5), Q.from_i64(0)]];
        assert_eq!(row_reduce(Q, 2, &a).unwrap(), row_reduce(Q, 2, &b).unwrap());
    }
}
