//! JSON encodings of graphs, complexes, root systems and series.

use serde::{Deserialize, Serialize};
use splitkit_core::graph::LayeredGraph;
use splitkit_core::ncfactor::{MatrixPolynomial, RootSystem};
use splitkit_core::{DenseMatrix, FieldSpec, IntPolynomial, SimplicialComplex, TruncatedSeries};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub id: String,
    pub level: usize,
}

/// `{"vertices":[{"id","level"}],"edges":[["tail","head"]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<(String, String)>,
}

/// `{"facets":[[ints]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub facets: Vec<Vec<u32>>,
}

/// `{"d":2,"roots":[[["1","1/2"],["0","3"]], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsJson {
    pub d: usize,
    pub roots: Vec<Vec<Vec<String>>>,
}

impl GraphJson {
    pub fn from_graph(g: &LayeredGraph) -> Self {
        GraphJson {
            vertices: g.vertices().iter().map(|v| VertexJson { id: v.id.clone(), level: v.level }).collect(),
            edges: g.edges().iter().map(|&(t, h)| (g.id(t).to_string(), g.id(h).to_string())).collect(),
        }
    }

    /// Referential integrity only; call `validate` on the result for layering.
    pub fn to_graph(&self, context: &str) -> Result<LayeredGraph> {
        LayeredGraph::new(
            self.vertices.iter().map(|v| (v.id.clone(), v.level)).collect(),
            self.edges.clone(),
        )
        .map_err(|e| CliError::invalid(context, e.to_string()))
    }
}

impl ComplexJson {
    pub fn from_complex(x: &SimplicialComplex) -> Self {
        ComplexJson { facets: x.facets().to_vec() }
    }

    pub fn to_complex(&self, context: &str) -> Result<SimplicialComplex> {
        for (k, f) in self.facets.iter().enumerate() {
            let mut s = f.clone();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(CliError::invalid(format!("{context}: facets[{k}]"), "repeated vertex"));
            }
        }
        SimplicialComplex::new(self.facets.clone()).map_err(|e| CliError::invalid(context, e.to_string()))
    }
}

impl RootsJson {
    pub fn from_roots(rs: &RootSystem) -> Self {
        RootsJson { d: rs.d(), roots: rs.roots().iter().map(matrix_strings).collect() }
    }

    pub fn to_roots(&self, context: &str) -> Result<RootSystem> {
        let q = FieldSpec::Rationals;
        let mut roots = Vec::with_capacity(self.roots.len());
        for (k, m) in self.roots.iter().enumerate() {
            if m.len() != self.d {
                return Err(CliError::invalid(
                    format!("{context}: roots[{k}]"),
                    format!("{} rows, expected {}", m.len(), self.d),
                ));
            }
            let mut rows = Vec::with_capacity(self.d);
            for (r, row) in m.iter().enumerate() {
                if row.len() != self.d {
                    return Err(CliError::invalid(
                        format!("{context}: roots[{k}][{r}]"),
                        format!("{} entries, expected {}", row.len(), self.d),
                    ));
                }
                let parsed = row
                    .iter()
                    .enumerate()
                    .map(|(c, s)| {
                        q.parse(s).map_err(|e| CliError::invalid(format!("{context}: roots[{k}][{r}][{c}]"), e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(parsed);
            }
            roots.push(DenseMatrix::from_rows(q, rows)?);
        }
        RootSystem::new(roots).map_err(|e| CliError::invalid(context, e.to_string()))
    }
}

pub fn matrix_strings(m: &DenseMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect()
}

pub fn matrix_polynomial_strings(p: &MatrixPolynomial) -> Vec<Vec<Vec<String>>> {
    p.coefficients().iter().map(matrix_strings).collect()
}

/// Coefficients as decimal strings, degree 0 first.
pub fn series_strings(s: &TruncatedSeries) -> Vec<String> {
    s.to_decimal_strings()
}

pub fn polynomial_strings(p: &IntPolynomial) -> Vec<String> {
    let c = p.coeffs();
    if c.is_empty() {
        return vec!["0".into()];
    }
    c.iter().map(ToString::to_string).collect()
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, context: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| CliError::parse(context, &e))
}

pub fn read_graph(path: &std::path::Path) -> Result<(GraphJson, LayeredGraph)> {
    let ctx = path.display().to_string();
    let j: GraphJson = parse_json(&read(path)?, &ctx)?;
    let g = j.to_graph(&ctx)?;
    Ok((j, g))
}

pub fn read_complex(path: &std::path::Path) -> Result<SimplicialComplex> {
    let ctx = path.display().to_string();
    parse_json::<ComplexJson>(&read(path)?, &ctx)?.to_complex(&ctx)
}

pub fn read_roots(path: &std::path::Path) -> Result<RootSystem> {
    let ctx = path.display().to_string();
    parse_json::<RootsJson>(&read(path)?, &ctx)?.to_roots(&ctx)
}

pub fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
