//! Finite abstract simplicial complexes given by their facets.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A complex stored by its facets.
///
/// An empty facet list is the complex `{∅}` that holds only the empty face;
/// it arises as the link of a facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Vec<u32>>,
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    // both sorted
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

impl SimplicialComplex {
    /// Validating constructor: facets must be nonempty, free of repeated
    /// vertices, and no facet may contain another.
    pub fn new(facets: Vec<Vec<u32>>) -> Result<Self> {
        let mut norm = Vec::with_capacity(facets.len());
        for f in facets {
            if f.is_empty() {
                return Err(Error::InvalidComplex("empty facet".into()));
            }
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != f.len() {
                return Err(Error::InvalidComplex(format!("facet {f:?} repeats a vertex")));
            }
            norm.push(s);
        }
        norm.sort();
        for (i, a) in norm.iter().enumerate() {
            for (j, b) in norm.iter().enumerate() {
                if i != j && is_subset(a, b) {
                    return Err(Error::InvalidComplex(format!("facet {a:?} lies inside {b:?}")));
                }
            }
        }
        Ok(SimplicialComplex { facets: norm })
    }

    /// The complex generated by arbitrary simplices; keeps only the maximal ones.
    pub fn from_simplices<I: IntoIterator<Item = Vec<u32>>>(simplices: I) -> Self {
        let mut all: Vec<Vec<u32>> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .filter(|s| !s.is_empty())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        // longest first so a simplex is kept only if no kept simplex contains it
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for s in all {
            if !kept.iter().any(|k| is_subset(&s, k)) {
                kept.push(s);
            }
        }
        kept.sort();
        SimplicialComplex { facets: kept }
    }

    /// The full simplex on `0..=n`.
    pub fn simplex(n: u32) -> Self {
        SimplicialComplex { facets: vec![(0..=n).collect()] }
    }

    /// The boundary of the simplex on `0..=n`.
    pub fn simplex_boundary(n: u32) -> Self {
        let full: Vec<u32> = (0..=n).collect();
        Self::from_simplices((0..=n).map(|skip| full.iter().copied().filter(|&v| v != skip).collect()))
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.facets.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// Dimension, with `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        let mut s = face.to_vec();
        s.sort_unstable();
        s.is_empty() || self.facets.iter().any(|f| is_subset(&s, f))
    }

    /// All nonempty faces grouped by dimension, each group sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<Vec<u32>>> {
        let top = self.dim();
        if top < 0 {
            return Vec::new();
        }
        let mut groups: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); top as usize + 1];
        for f in &self.facets {
            let n = f.len();
            for mask in 1u64..(1u64 << n) {
                let s: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                groups[s.len() - 1].insert(s);
            }
        }
        groups.into_iter().map(|g| g.into_iter().collect()).collect()
    }

    /// Face counts `f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`.
    pub fn link(&self, sigma: &[u32]) -> Result<Self> {
        let mut s = sigma.to_vec();
        s.sort_unstable();
        s.dedup();
        if !self.contains_face(&s) {
            return Err(Error::FaceNotInComplex(s));
        }
        Ok(Self::from_simplices(
            self.facets
                .iter()
                .filter(|f| is_subset(&s, f))
                .map(|f| f.iter().copied().filter(|v| s.binary_search(v).is_err()).collect()),
        ))
    }

    /// Every facet has dimension `n`.
    pub fn is_pure(&self, n: usize) -> bool {
        !self.facets.is_empty() && self.facets.iter().all(|f| f.len() == n + 1)
    }

    /// The facets of top dimension form a connected graph under "share a codimension-one face".
    pub fn is_codim1_connected(&self) -> bool {
        let top = self.dim();
        if top < 0 {
            return true;
        }
        let tops: Vec<&Vec<u32>> =
            self.facets.iter().filter(|f| f.len() as isize - 1 == top).collect();
        let adjacent = |a: &[u32], b: &[u32]| {
            let shared = a.iter().filter(|x| b.binary_search(x).is_ok()).count();
            shared + 1 == a.len()
        };
        let mut seen = vec![false; tops.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for j in 0..tops.len() {
                if !seen[j] && adjacent(tops[i], tops[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Applies a vertex relabelling.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Self {
        Self::from_simplices(self.facets.iter().map(|f| f.iter().map(|&v| map(v)).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wedge() -> SimplicialComplex {
        SimplicialComplex::new(vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SimplicialComplex::new(vec![vec![]]).is_err());
        assert!(SimplicialComplex::new(vec![vec![1, 1]]).is_err());
        assert!(SimplicialComplex::new(vec![vec![0, 1, 2], vec![1, 2]]).is_err());
        assert_eq!(SimplicialComplex::new(vec![]).unwrap().dim(), -1);
    }

    #[test]
    fn boundary_of_tetrahedron() {
        let s = SimplicialComplex::simplex_boundary(3);
        assert_eq!(s.facets().len(), 4);
        assert_eq!(s.f_vector(), vec![4, 6, 4]);
        assert!(s.is_pure(2));
        assert!(s.is_codim1_connected());
    }

    #[test]
    fn links() {
        let s = SimplicialComplex::simplex_boundary(3);
        let lv = s.link(&[0]).unwrap();
        assert_eq!(lv.facets(), &[vec![1, 2], vec![1, 3], vec![2, 3]]);
        let le = s.link(&[0, 1]).unwrap();
        assert_eq!(le.facets(), &[vec![2], vec![3]]);
        let lf = s.link(&[0, 1, 2]).unwrap();
        assert_eq!(lf.dim(), -1);
        assert_eq!(s.link(&[0, 1, 2, 3]), Err(Error::FaceNotInComplex(vec![0, 1, 2, 3])));
    }

    #[test]
    fn purity_and_connectivity() {
        let w = wedge();
        assert!(w.is_pure(2));
        assert!(!w.is_codim1_connected());
        let dangling = SimplicialComplex::new(vec![vec![0, 1, 2], vec![2, 3]]).unwrap();
        assert!(!dangling.is_pure(2));
        assert!(SimplicialComplex::simplex(2).is_codim1_connected());
    }

    #[test]
    fn from_simplices_keeps_maximal() {
        let c = SimplicialComplex::from_simplices(vec![vec![1, 0], vec![0], vec![2, 1, 0], vec![3]]);
        assert_eq!(c.facets(), &[vec![0, 1, 2], vec![3]]);
    }
}
