//! Layered graphs: ranked directed graphs whose edges drop exactly one level.
//!
//! Edges point downward, from a tail at level `i` to a head at level `i - 1`.
//! The partial order is reachability: `v > w` iff there is a directed path
//! from `v` to `w`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::mobius::PosetClosure;

/// Id of the level-0 vertex of Boolean, complex and subspace graphs.
pub const EMPTY_ID: &str = "∅";
/// Id of the minimum added by [`LayeredGraph::down_graph`].
pub const STAR_ID: &str = "*";
/// Id of the maximum added by [`LayeredGraph::hat`].
pub const HAT_ID: &str = "M";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    index: BTreeMap<String, usize>,
    children: Vec<Vec<usize>>,
    parents: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    EdgeLevelGap { tail: String, head: String, tail_level: usize, head_level: usize },
    NoMinimum,
    NonUniqueMinimum(Vec<String>),
    /// A vertex above level 0 with no outgoing edge, hence no path to the minimum.
    DeadEnd(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "graph has no vertices"),
            Violation::EdgeLevelGap { tail, head, tail_level, head_level } => write!(
                f,
                "edge level gap: {tail} (level {tail_level}) -> {head} (level {head_level})"
            ),
            Violation::NoMinimum => write!(f, "no vertex at level 0"),
            Violation::NonUniqueMinimum(ids) => write!(f, "non-unique minimum: {}", ids.join(", ")),
            Violation::DeadEnd(id) => write!(f, "vertex {id} has no outgoing edge"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn subset_id(elems: impl IntoIterator<Item = u32>) -> String {
    let parts: Vec<String> = elems.into_iter().map(|e| e.to_string()).collect();
    if parts.is_empty() {
        EMPTY_ID.to_string()
    } else {
        format!("{{{}}}", parts.join(","))
    }
}

fn fresh_id(index: &BTreeMap<String, usize>, base: &str) -> String {
    let mut id = base.to_string();
    while index.contains_key(&id) {
        id.push('\'');
    }
    id
}

impl LayeredGraph {
    /// Builds a graph from ids, levels and `(tail, head)` id pairs.
    ///
    /// Only referential integrity is enforced here (unique ids, known
    /// endpoints, no repeated edges); layering is checked by [`validate`](Self::validate).
    pub fn new(vertices: Vec<(String, usize)>, edges: Vec<(String, String)>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, (id, _)) in vertices.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {id:?}")));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (t, h) in &edges {
            let ti = *index.get(t).ok_or_else(|| Error::UnknownVertex(t.clone()))?;
            let hi = *index.get(h).ok_or_else(|| Error::UnknownVertex(h.clone()))?;
            idx_edges.push((ti, hi));
        }
        let vertices = vertices.into_iter().map(|(id, level)| Vertex { id, level }).collect();
        Self::from_parts(vertices, idx_edges)
    }

    pub(crate) fn from_parts(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let mut seen = BTreeSet::new();
        let mut children = vec![Vec::new(); n];
        let mut parents = vec![Vec::new(); n];
        for &(t, h) in &edges {
            if !seen.insert((t, h)) {
                return Err(Error::InvalidGraph(format!(
                    "repeated edge {} -> {}",
                    vertices[t].id, vertices[h].id
                )));
            }
            children[t].push(h);
            parents[h].push(t);
        }
        for c in children.iter_mut().chain(parents.iter_mut()) {
            c.sort_unstable();
        }
        Ok(LayeredGraph { vertices, edges, index, children, parents })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn level(&self, v: usize) -> usize {
        self.vertices[v].level
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// Heads of the edges leaving `v` (its lower covers in a valid graph).
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parents(&self, v: usize) -> &[usize] {
        &self.parents[v]
    }

    pub fn height(&self) -> usize {
        self.vertices.iter().map(|v| v.level).max().unwrap_or(0)
    }

    pub fn level_set(&self, level: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].level == level).collect()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.height() + 1];
        for v in &self.vertices {
            sizes[v.level] += 1;
        }
        sizes
    }

    /// The unique level-0 vertex, if there is exactly one.
    pub fn minimum(&self) -> Option<usize> {
        match self.level_set(0).as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.vertices.is_empty() {
            violations.push(Violation::Empty);
            return ValidationReport { violations };
        }
        for &(t, h) in &self.edges {
            let (tl, hl) = (self.level(t), self.level(h));
            if tl != hl + 1 {
                violations.push(Violation::EdgeLevelGap {
                    tail: self.id(t).to_string(),
                    head: self.id(h).to_string(),
                    tail_level: tl,
                    head_level: hl,
                });
            }
        }
        match self.level_set(0).as_slice() {
            [] => violations.push(Violation::NoMinimum),
            [_] => {}
            many => violations.push(Violation::NonUniqueMinimum(
                many.iter().map(|&v| self.id(v).to_string()).collect(),
            )),
        }
        for v in 0..self.vertices.len() {
            if self.level(v) > 0 && self.children[v].is_empty() {
                violations.push(Violation::DeadEnd(self.id(v).to_string()));
            }
        }
        ValidationReport { violations }
    }

    /// Errors with the first violation unless the graph passes [`validate`](Self::validate).
    pub fn require_valid(&self) -> Result<()> {
        match self.validate().violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidGraph(v.to_string())),
        }
    }

    /// Subsets of `{1..n}` ordered by inclusion, levelled by cardinality.
    pub fn boolean(n: u32) -> Result<Self> {
        if n == 0 || n > 20 {
            return Err(Error::InvalidGraph(format!("boolean graph needs 1 <= n <= 20, got {n}")));
        }
        let mut masks: Vec<u32> = (0..1u32 << n).collect();
        masks.sort_by_key(|m| (m.count_ones(), (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>()));
        let pos: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let vertices = masks
            .iter()
            .map(|&m| Vertex {
                id: subset_id((0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1)),
                level: m.count_ones() as usize,
            })
            .collect();
        let mut edges = Vec::new();
        for &m in &masks {
            for i in (0..n).filter(|i| m >> i & 1 == 1) {
                edges.push((pos[&m], pos[&(m & !(1 << i))]));
            }
        }
        Self::from_parts(vertices, edges)
    }

    /// A single descending path `height -> ... -> 0`.
    pub fn chain(height: usize) -> Self {
        let vertices = (0..=height)
            .map(|l| Vertex { id: if l == 0 { EMPTY_ID.to_string() } else { format!("c{l}") }, level: l })
            .collect();
        let edges = (1..=height).map(|l| (l, l - 1)).collect();
        Self::from_parts(vertices, edges).expect("chain ids are distinct")
    }

    /// Face poset of `X` with the empty face as minimum; `|σ| = dim σ + 1`.
    pub fn from_complex(x: &SimplicialComplex) -> Result<Self> {
        if x.facets().is_empty() {
            return Err(Error::InvalidComplex("complex has no vertices".into()));
        }
        let mut faces: Vec<Vec<u32>> = vec![Vec::new()];
        faces.extend(x.faces_by_dim().into_iter().flatten());
        let pos: BTreeMap<&[u32], usize> =
            faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let vertices = faces
            .iter()
            .map(|f| Vertex { id: subset_id(f.iter().copied()), level: f.len() })
            .collect();
        let mut edges = Vec::new();
        for (i, f) in faces.iter().enumerate().skip(1) {
            for skip in 0..f.len() {
                let sub: Vec<u32> =
                    f.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, &v)| v).collect();
                edges.push((i, pos[sub.as_slice()]));
            }
        }
        Self::from_parts(vertices, edges)
    }

    /// Lattice of subspaces of `GF(q)^n` levelled by dimension; `q` must be prime.
    pub fn subspaces(n: u32, q: u32, vertex_cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("subspace graph needs n >= 1".into()));
        }
        crate::field::FieldSpec::prime(q as u64)?;
        let total = (q as u64).checked_pow(n).filter(|&t| t <= 1 << 20).ok_or(Error::SizeLimit {
            what: "ambient vector count",
            size: usize::MAX,
            cap: 1 << 20,
        })? as usize;
        let vectors: Vec<Vec<u32>> = (0..total)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let d = (code % q as usize) as u32;
                        code /= q as usize;
                        d
                    })
                    .collect::<Vec<_>>()
                    .into_iter()
                    .rev()
                    .collect()
            })
            .collect();
        let mut levels: Vec<BTreeMap<Vec<Vec<u32>>, usize>> = vec![BTreeMap::new()];
        let mut vertices = vec![Vertex { id: "0".to_string(), level: 0 }];
        levels[0].insert(Vec::new(), 0);
        let mut edges = Vec::new();
        for dim in 0..n as usize {
            let mut next: BTreeMap<Vec<Vec<u32>>, usize> = BTreeMap::new();
            let current: Vec<(Vec<Vec<u32>>, usize)> =
                levels[dim].iter().map(|(b, &i)| (b.clone(), i)).collect();
            for (basis, lower) in current {
                for v in vectors.iter().skip(1) {
                    let mut rows = basis.clone();
                    rows.push(v.clone());
                    let rref = rref_mod(rows, q);
                    if rref.len() != dim + 1 {
                        continue;
                    }
                    let upper = match next.get(&rref) {
                        Some(&u) => u,
                        None => {
                            let u = vertices.len();
                            if u >= vertex_cap {
                                return Err(Error::SizeLimit {
                                    what: "subspace graph vertices",
                                    size: u + 1,
                                    cap: vertex_cap,
                                });
                            }
                            vertices.push(Vertex { id: span_id(&rref), level: dim + 1 });
                            next.insert(rref, u);
                            u
                        }
                    };
                    edges.push((upper, lower));
                }
            }
            levels.push(next);
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_parts(vertices, edges)
    }

    /// Adds one vertex above the top level, joined to every top-level vertex.
    pub fn hat(&self) -> Self {
        let top = self.height();
        let id = fresh_id(&self.index, HAT_ID);
        let m = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.push(Vertex { id, level: top + 1 });
        let mut edges = self.edges.clone();
        edges.extend(self.level_set(top).into_iter().map(|v| (m, v)));
        Self::from_parts(vertices, edges).expect("fresh id")
    }

    /// Tails whose children are not all linked by down-up sequences.
    ///
    /// Two children of a tail are linked when they share a lower cover; the
    /// equivalence is the transitive closure of that relation, taken over the
    /// children of the tail.
    pub fn non_uniform_tails(&self) -> Vec<usize> {
        let mut bad = Vec::new();
        for t in 0..self.vertices.len() {
            let kids = &self.children[t];
            if kids.len() < 2 {
                continue;
            }
            let mut parent: Vec<usize> = (0..kids.len()).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for a in 0..kids.len() {
                for b in a + 1..kids.len() {
                    let share = self.children[kids[a]]
                        .iter()
                        .any(|w| self.children[kids[b]].binary_search(w).is_ok());
                    if share {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        parent[ra] = rb;
                    }
                }
            }
            let root = find(&mut parent, 0);
            if (1..kids.len()).any(|i| find(&mut parent, i) != root) {
                bad.push(t);
            }
        }
        bad
    }

    pub fn is_uniform(&self) -> bool {
        self.non_uniform_tails().is_empty()
    }

    /// `Γ_{v,k}`: vertices strictly below `v` with level at least `|v| - k + 1`,
    /// re-levelled to start at 1, plus a fresh minimum `*` at level 0.
    pub fn down_graph(&self, v: usize, k: usize) -> Result<Self> {
        let top = self.level(v);
        if k == 0 || k > top {
            return Err(Error::InvalidGraph(format!(
                "down graph of {} needs 1 <= k <= {top}, got {k}",
                self.id(v)
            )));
        }
        self.require_valid()?;
        let poset = PosetClosure::new(self)?;
        let floor = top - k + 1;
        let members: Vec<usize> = (0..self.vertices.len())
            .filter(|&w| w != v && poset.leq(w, v) && self.level(w) >= floor)
            .collect();
        let pos: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let star_id = fresh_id(
            &members.iter().map(|&w| (self.id(w).to_string(), 0)).collect(),
            STAR_ID,
        );
        let mut vertices: Vec<Vertex> = members
            .iter()
            .map(|&w| Vertex { id: self.id(w).to_string(), level: self.level(w) - floor + 1 })
            .collect();
        let star = vertices.len();
        vertices.push(Vertex { id: star_id, level: 0 });
        let mut edges = Vec::new();
        for &w in &members {
            if self.level(w) == floor {
                edges.push((pos[&w], star));
            } else {
                for c in &self.children[w] {
                    if let Some(&ci) = pos.get(c) {
                        edges.push((pos[&w], ci));
                    }
                }
            }
        }
        Self::from_parts(vertices, edges)
    }

    /// Level sizes plus the sorted level pairs of all edges; an isomorphism invariant.
    pub fn structure_signature(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(t, h)| (self.level(t), self.level(h))).collect();
        edges.sort_unstable();
        (self.level_sizes(), edges)
    }
}

fn span_id(rows: &[Vec<u32>]) -> String {
    let parts: Vec<String> = rows
        .iter()
        .map(|r| {
            let cs: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            format!("({})", cs.join(","))
        })
        .collect();
    format!("span{{{}}}", parts.join(","))
}

/// Reduced row-echelon basis of the span of `rows` over `GF(q)`.
fn rref_mod(mut rows: Vec<Vec<u32>>, q: u32) -> Vec<Vec<u32>> {
    use crate::field::{inv_mod, mul_mod};
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, q);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + q - mul_mod(f, *y, q)) % q;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nonuniform() -> LayeredGraph {
        let v = |s: &str, l| (s.to_string(), l);
        let e = |a: &str, b: &str| (a.to_string(), b.to_string());
        LayeredGraph::new(
            vec![v("T", 3), v("a", 2), v("b", 2), v("x", 1), v("y", 1), v("*", 0)],
            vec![e("T", "a"), e("T", "b"), e("a", "x"), e("b", "y"), e("x", "*"), e("y", "*")],
        )
        .unwrap()
    }

    #[test]
    fn boolean_counts() {
        for n in 1..=5u32 {
            let g = LayeredGraph::boolean(n).unwrap();
            assert_eq!(g.vertex_count(), 1 << n);
            assert_eq!(g.edge_count(), (n as usize) << (n - 1));
            assert!(g.validate().is_valid());
            assert!(g.is_uniform());
            let binom: Vec<usize> = (0..=n as usize)
                .map(|i| (0..i).fold(1usize, |acc, j| acc * (n as usize - j) / (j + 1)))
                .collect();
            assert_eq!(g.level_sizes(), binom);
        }
        let g2 = LayeredGraph::boolean(2).unwrap();
        assert_eq!(g2.id(0), "∅");
        assert_eq!(g2.id(3), "{1,2}");
    }

    #[test]
    fn validation_reports() {
        let gap = LayeredGraph::new(
            vec![("a".into(), 2), ("z".into(), 0)],
            vec![("a".into(), "z".into())],
        )
        .unwrap();
        let report = gap.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::EdgeLevelGap { .. })));
        assert!(report.violations[0].to_string().starts_with("edge level gap"));

        let two_min = LayeredGraph::new(
            vec![("a".into(), 1), ("z".into(), 0), ("y".into(), 0)],
            vec![("a".into(), "z".into())],
        )
        .unwrap();
        let report = two_min.validate();
        assert!(report.violations[0].to_string().starts_with("non-unique minimum"));

        let dead = LayeredGraph::new(vec![("a".into(), 1), ("z".into(), 0)], vec![]).unwrap();
        assert_eq!(dead.validate().violations, vec![Violation::DeadEnd("a".into())]);

        assert!(LayeredGraph::new(vec![("a".into(), 0), ("a".into(), 1)], vec![]).is_err());
        assert_eq!(
            LayeredGraph::new(vec![("a".into(), 0)], vec![("a".into(), "q".into())]),
            Err(Error::UnknownVertex("q".into()))
        );
    }

    #[test]
    fn subspace_counts() {
        let g = LayeredGraph::subspaces(1, 5, 100).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let g = LayeredGraph::subspaces(2, 2, 100).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        let g = LayeredGraph::subspaces(3, 2, 100).unwrap();
        assert_eq!(g.level_sizes(), vec![1, 7, 7, 1]);
        // each line lies in 3 planes, each plane holds 3 lines
        assert_eq!(g.edge_count(), 7 + 21 + 7);
        assert!(g.validate().is_valid());
        assert!(matches!(LayeredGraph::subspaces(3, 2, 10), Err(Error::SizeLimit { .. })));
        assert!(LayeredGraph::subspaces(2, 4, 100).is_err());
    }

    #[test]
    fn complex_graphs() {
        let point = SimplicialComplex::simplex(0);
        let g = LayeredGraph::from_complex(&point).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let tri = LayeredGraph::from_complex(&SimplicialComplex::simplex(2)).unwrap();
        let b3 = LayeredGraph::boolean(3).unwrap();
        assert_eq!(tri.structure_signature(), b3.structure_signature());
        let sph = LayeredGraph::from_complex(&SimplicialComplex::simplex_boundary(3)).unwrap();
        assert_eq!(sph.level_sizes(), vec![1, 4, 6, 4]);
        assert!(sph.validate().is_valid());
    }

    #[test]
    fn hat_construction() {
        // Boolean(2) without its top, then hatted, is the diamond again.
        let open = LayeredGraph::new(
            vec![("∅".into(), 0), ("{1}".into(), 1), ("{2}".into(), 1)],
            vec![("{1}".into(), "∅".into()), ("{2}".into(), "∅".into())],
        )
        .unwrap();
        let h = open.hat();
        assert_eq!(h.structure_signature(), LayeredGraph::boolean(2).unwrap().structure_signature());
        let sph = LayeredGraph::from_complex(&SimplicialComplex::simplex_boundary(3)).unwrap();
        let hs = sph.hat();
        assert_eq!(hs.height(), 4);
        assert_eq!(hs.level_set(4).len(), 1);
        assert_eq!(hs.children(hs.index_of("M").unwrap()).len(), 4);
    }

    #[test]
    fn uniformity() {
        assert!(LayeredGraph::chain(4).is_uniform());
        let g = nonuniform();
        assert!(g.validate().is_valid());
        assert!(!g.is_uniform());
        assert_eq!(g.non_uniform_tails(), vec![g.index_of("T").unwrap()]);
    }

    #[test]
    fn down_graphs() {
        let b3 = LayeredGraph::boolean(3).unwrap();
        let top = b3.index_of("{1,2,3}").unwrap();
        let d1 = b3.down_graph(top, 1).unwrap();
        assert_eq!(d1.level_sizes(), vec![1]);
        let d2 = b3.down_graph(top, 2).unwrap();
        assert_eq!(d2.level_sizes(), vec![1, 3]);
        assert!(d2.validate().is_valid());
        // k = |v|: the open interval below v, with * standing in for the old minimum
        let d3 = b3.down_graph(top, 3).unwrap();
        assert_eq!(d3.level_sizes(), vec![1, 3, 3]);
        assert!(d3.index_of("∅").is_err() && d3.index_of("*").is_ok());
        assert!(b3.down_graph(top, 4).is_err());
        assert!(b3.down_graph(top, 0).is_err());
    }
}
