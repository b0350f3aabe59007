//! The shipped inputs under `fixtures/`, embedded so every check runs offline.

use splitkit_core::graph::LayeredGraph;
use splitkit_core::ncfactor::RootSystem;
use splitkit_core::topo::CalibrationCase;
use splitkit_core::{corpus, DenseMatrix, FieldSpec, SimplicialComplex};

use crate::error::{CliError, Result};
use crate::formats::{parse_json, ComplexJson, GraphJson, RootsJson};

pub const GRAPHS: &[(&str, &str)] = &[
    ("boolean1", include_str!("../fixtures/boolean1.json")),
    ("boolean2", include_str!("../fixtures/boolean2.json")),
    ("boolean3", include_str!("../fixtures/boolean3.json")),
    ("boolean4", include_str!("../fixtures/boolean4.json")),
    ("nonuniform", include_str!("../fixtures/nonuniform.json")),
];

pub const COMPLEXES: &[(&str, &str)] = &[
    ("delta2", include_str!("../fixtures/delta2.json")),
    ("sphere", include_str!("../fixtures/sphere.json")),
    ("rp2", include_str!("../fixtures/rp2.json")),
    ("wedge", include_str!("../fixtures/wedge.json")),
];

pub const ROOTS3: &str = include_str!("../fixtures/roots3.json");
pub const CALIBRATION: &str = include_str!("../fixtures/calibration.json");
pub const HAT_RP2_GF2: &str = include_str!("../fixtures/hat_rp2_gf2.json");

pub fn names() -> Vec<&'static str> {
    GRAPHS.iter().chain(COMPLEXES).map(|(n, _)| *n).chain(["roots3"]).collect()
}

fn lookup(table: &[(&'static str, &'static str)], name: &str) -> Option<&'static str> {
    table.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn complex(name: &str) -> Result<SimplicialComplex> {
    let text = lookup(COMPLEXES, name).ok_or_else(|| unknown(name, "complex"))?;
    parse_json::<ComplexJson>(text, name)?.to_complex(name)
}

/// A graph fixture, or the face-poset graph of a complex fixture.
pub fn graph(name: &str) -> Result<LayeredGraph> {
    match lookup(GRAPHS, name) {
        Some(text) => parse_json::<GraphJson>(text, name)?.to_graph(name),
        None => Ok(LayeredGraph::from_complex(&complex(name).map_err(|_| unknown(name, "graph"))?)?),
    }
}

pub fn roots(name: &str) -> Result<RootSystem> {
    if name != "roots3" {
        return Err(unknown(name, "root system"));
    }
    parse_json::<RootsJson>(ROOTS3, name)?.to_roots(name)
}

fn unknown(name: &str, kind: &str) -> CliError {
    CliError::Usage(format!("no {kind} fixture named {name:?}; available: {}", names().join(", ")))
}

/// The fixture contents as generated from the core constructions.
pub fn generate() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let g = LayeredGraph::boolean(n).expect("small n");
        out.push((format!("boolean{n}"), crate::formats::to_pretty(&GraphJson::from_graph(&g))));
    }
    out.push(("nonuniform".into(), crate::formats::to_pretty(&GraphJson::from_graph(&corpus::nonuniform()))));
    for (name, x) in corpus::complexes().into_iter().chain([("wedge", corpus::wedge())]) {
        out.push((name.into(), crate::formats::to_pretty(&ComplexJson::from_complex(&x))));
    }
    out.push(("roots3".into(), crate::formats::to_pretty(&RootsJson::from_roots(&sample_roots()))));
    out
}

/// Three generic `2×2` rational roots.
pub fn sample_roots() -> RootSystem {
    let q = FieldSpec::Rationals;
    let m = |rows: [[&str; 2]; 2]| {
        DenseMatrix::from_rows(q, rows.iter().map(|r| r.iter().map(|s| q.parse(s).unwrap()).collect()).collect())
            .unwrap()
    };
    RootSystem::new(vec![m([["1", "2"], ["0", "3"]]), m([["0", "1"], ["-1", "5"]]), m([["2", "0"], ["1/2", "-1"]])])
        .unwrap()
}

/// Every corpus graph over `Q` and `GF(2)`.
pub fn calibration_cases() -> Result<Vec<CalibrationCase>> {
    let gf2 = FieldSpec::prime(2)?;
    let mut cases = Vec::new();
    for (name, graph) in corpus::graphs()? {
        for field in [FieldSpec::Rationals, gf2] {
            cases.push(CalibrationCase { name: name.clone(), graph: graph.clone(), field });
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_match_generated() {
        let bless = std::env::var_os("SPLITKIT_BLESS").is_some();
        for (name, text) in generate() {
            if bless {
                let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"));
                std::fs::write(path, &text).unwrap();
                continue;
            }
            let shipped = lookup(GRAPHS, &name).or(lookup(COMPLEXES, &name)).unwrap_or(ROOTS3);
            assert_eq!(shipped, text, "fixture {name} is stale");
        }
    }

    #[test]
    fn every_name_resolves() {
        for n in names() {
            if n == "roots3" {
                assert_eq!(roots(n).unwrap().n(), 3);
            } else {
                graph(n).unwrap();
            }
        }
        assert!(graph("nope").is_err());
    }
}
