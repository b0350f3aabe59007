//! Named complexes and graphs used as reference inputs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::graph::LayeredGraph;

/// The full triangle.
pub fn triangle() -> SimplicialComplex {
    SimplicialComplex::simplex(2)
}

/// The boundary of the tetrahedron, a 2-sphere.
pub fn sphere() -> SimplicialComplex {
    SimplicialComplex::simplex_boundary(3)
}

/// The 6-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    SimplicialComplex::new(vec![
        vec![1, 2, 3],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![1, 5, 6],
        vec![1, 2, 6],
        vec![2, 3, 5],
        vec![2, 4, 5],
        vec![2, 4, 6],
        vec![3, 4, 6],
        vec![3, 5, 6],
    ])
    .expect("valid facets")
}

/// Two triangles sharing one vertex.
pub fn wedge() -> SimplicialComplex {
    SimplicialComplex::new(vec![vec![0, 1, 2], vec![2, 3, 4]]).expect("valid facets")
}

/// `T` has children `a`, `b` whose lower covers `x`, `y` are disjoint, so no
/// down-up sequence joins them.
pub fn nonuniform() -> LayeredGraph {
    let v = |s: &str, l: usize| (String::from(s), l);
    let e = |a: &str, b: &str| (String::from(a), String::from(b));
    LayeredGraph::new(
        vec![v("T", 3), v("a", 2), v("b", 2), v("x", 1), v("y", 1), v("*", 0)],
        vec![e("T", "a"), e("T", "b"), e("a", "x"), e("b", "y"), e("x", "*"), e("y", "*")],
    )
    .expect("valid graph")
}

/// The named complexes `delta2`, `sphere`, `rp2`.
pub fn complexes() -> Vec<(&'static str, SimplicialComplex)> {
    vec![("delta2", triangle()), ("sphere", sphere()), ("rp2", projective_plane())]
}

/// Boolean graphs `n = 1..=4`, the graphs of `delta2`, `sphere`, `rp2`, and their hats.
pub fn graphs() -> Result<Vec<(String, LayeredGraph)>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("boolean{n}"), LayeredGraph::boolean(n)?));
    }
    for (name, x) in complexes() {
        let g = LayeredGraph::from_complex(&x)?;
        out.push((format!("hat-{name}"), g.hat()));
        out.push((String::from(name), g));
    }
    Ok(out)
}
