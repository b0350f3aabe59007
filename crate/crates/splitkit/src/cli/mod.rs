use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};
use splitkit_core::dual::{b_gamma_dim, b_gamma_presentation, koszul_verdict, GradedDims, KoszulVerdict, DEFAULT_SIZE_CAP};
use splitkit_core::graph::LayeredGraph;
use splitkit_core::mobius::{self, MobiusConvention, PosetClosure, MobiusTable};
use splitkit_core::ncfactor::{self, genericity_check, OrderingReport, PseudoRootTable, RootSystem};
use splitkit_core::topo::{self, CalibrationRow, Convention};
use splitkit_core::{Error as CoreError, FieldSpec, SimplicialComplex};

use crate::error::{CliError, Result};
use crate::fixtures;
use crate::formats::{self, ComplexJson, GraphJson, RootsJson};
use crate::report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "splitkit", version, about = "Splitting algebras of layered graphs, their Koszul duals, and pseudo-roots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Compact JSON on stdout (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Indented JSON on stdout.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Spread per-degree, per-vertex and per-ordering work over threads.
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Add wall-clock timings to the report.
    #[arg(long, global = true)]
    pub timings: bool,
}

/// Exactly one of `--graph`, `--boolean`, `--complex`, `--fixture`.
#[derive(Debug, Clone, Default, Args)]
pub struct GraphSource {
    /// Layered-graph JSON file.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// The Boolean graph of subsets of an n-set.
    #[arg(long, value_name = "N")]
    pub boolean: Option<u32>,
    /// Simplicial-complex JSON file, read as its face-poset graph.
    #[arg(long, value_name = "FILE")]
    pub complex: Option<PathBuf>,
    /// A shipped fixture by name.
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
    /// Adjoin a vertex above the top level.
    #[arg(long)]
    pub hat: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a layered graph and report its shape.
    Graph {
        #[command(flatten)]
        source: GraphSource,
        /// Write the resulting graph JSON to this file.
        #[arg(long, short, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Graded Möbius polynomial.
    Mobius {
        #[command(flatten)]
        source: GraphSource,
        /// Leave the diagonal pairs out of the graded sum.
        #[arg(long)]
        mobius_strict: bool,
    },
    /// Hilbert series of the splitting algebra.
    Hilbert {
        #[command(flatten)]
        source: GraphSource,
        /// Truncation degree; twice the height by default.
        #[arg(short = 'D', long = "degree")]
        degree: Option<usize>,
        #[arg(long)]
        mobius_strict: bool,
    },
    /// Graded dimensions of the dual algebra on the vertices.
    Dual {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Numerical Koszulity: compare both Hilbert polynomials exactly.
    KoszulCheck {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Algebraic against topological discrepancy, degree by degree.
    Discrepancy {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_parser = parse_field)]
        field: Option<FieldSpec>,
        #[arg(long, default_value = "signed-proper", value_parser = parse_convention)]
        convention: Convention,
        /// Test every convention on the shipped corpus instead.
        #[arg(long)]
        calibrate: bool,
    },
    /// Betti numbers and the homological Koszulity criterion for a complex.
    Topology {
        /// Simplicial-complex JSON file.
        #[arg(long, value_name = "FILE")]
        complex: Option<PathBuf>,
        #[arg(long, value_name = "NAME")]
        fixture: Option<String>,
        #[arg(long, value_parser = parse_field)]
        field: FieldSpec,
        /// Also tabulate the discrepancy of the hatted face-poset graph.
        #[arg(long)]
        hat: bool,
        #[arg(long, default_value = "signed-proper", value_parser = parse_convention)]
        convention: Convention,
    },
    /// All factorizations of the polynomial with the given roots.
    Factor {
        /// Root-system JSON file.
        roots: Option<PathBuf>,
        #[arg(long, value_name = "NAME")]
        fixture: Option<String>,
    },
}

pub fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    let t = s.to_ascii_lowercase();
    if t == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = t
        .strip_prefix("gf")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("expected q, gf2, gf3 or gf<p>, got {s:?}"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

fn parse_convention(s: &str) -> std::result::Result<Convention, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Convention::ALL.iter().map(|c| c.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

pub fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => "q".into(),
        FieldSpec::PrimeField(p) => format!("gf{p}"),
    }
}

/// The value of `SPLITKIT_SIZE_CAP`, or the library default when unset.
pub fn size_cap(value: Option<String>) -> Result<usize> {
    match value {
        Some(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("SPLITKIT_SIZE_CAP={v:?} is not a count"))),
        None => Ok(DEFAULT_SIZE_CAP),
    }
}

fn pmap<T: Sync, R: Send>(parallel: bool, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

struct GraphInput {
    graph: LayeredGraph,
    complex: Option<SimplicialComplex>,
    boolean: Option<u32>,
    context: String,
}

impl GraphInput {
    fn canonical(&self, params: Value) -> Value {
        json!({ "graph": GraphJson::from_graph(&self.graph), "params": params })
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.graph.validate();
        if report.is_valid() {
            return Ok(());
        }
        let msgs: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        Err(CliError::invalid(&self.context, msgs.join("; ")))
    }
}

fn resolve_graph(src: &GraphSource) -> Result<GraphInput> {
    let given = [src.graph.is_some(), src.boolean.is_some(), src.complex.is_some(), src.fixture.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::Usage("give exactly one of --graph, --boolean, --complex, --fixture".into()));
    }
    let (graph, complex, context) = if let Some(p) = &src.graph {
        (formats::read_graph(p)?.1, None, p.display().to_string())
    } else if let Some(n) = src.boolean {
        let g = LayeredGraph::boolean(n).map_err(|e| CliError::invalid("--boolean", e.to_string()))?;
        (g, None, format!("boolean({n})"))
    } else if let Some(p) = &src.complex {
        let x = formats::read_complex(p)?;
        let ctx = p.display().to_string();
        let g = LayeredGraph::from_complex(&x).map_err(|e| CliError::invalid(&ctx, e.to_string()))?;
        (g, Some(x), ctx)
    } else {
        let name = src.fixture.as_deref().unwrap_or_default();
        let x = fixtures::complex(name).ok();
        (fixtures::graph(name)?, x, name.to_string())
    };
    let graph = if src.hat { graph.hat() } else { graph };
    Ok(GraphInput { graph, complex, boolean: src.boolean.filter(|_| !src.hat), context })
}

fn resolve_complex(path: &Option<PathBuf>, fixture: &Option<String>) -> Result<(SimplicialComplex, String)> {
    match (path, fixture) {
        (Some(p), None) => Ok((formats::read_complex(p)?, p.display().to_string())),
        (None, Some(n)) => Ok((fixtures::complex(n)?, n.clone())),
        _ => Err(CliError::Usage("give exactly one of --complex, --fixture".into())),
    }
}

pub struct Options {
    pub parallel: bool,
    pub cap: usize,
}

pub fn run(cli: &Cli, cap: usize) -> Result<RunReport> {
    let opts = Options { parallel: cli.parallel, cap };
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Graph { source, output } => cmd_graph(source, output.as_ref())?,
        Command::Mobius { source, mobius_strict } => cmd_mobius(source, *mobius_strict)?,
        Command::Hilbert { source, degree, mobius_strict } => cmd_hilbert(source, *degree, *mobius_strict)?,
        Command::Dual { source, field } => cmd_dual(source, *field, &opts)?,
        Command::KoszulCheck { source, field } => cmd_koszul(source, *field, &opts)?,
        Command::Discrepancy { calibrate: true, .. } => cmd_calibrate(&opts)?,
        Command::Discrepancy { source, field, convention, .. } => {
            let field = field.ok_or_else(|| CliError::Usage("discrepancy needs --field unless --calibrate".into()))?;
            cmd_discrepancy(source, field, *convention, &opts)?
        }
        Command::Topology { complex, fixture, field, hat, convention } => {
            cmd_topology(complex, fixture, *field, *hat, *convention, &opts)?
        }
        Command::Factor { roots, fixture } => cmd_factor(roots, fixture, &opts)?,
    };
    if cli.timings {
        report.timings = Some([("total_ms".to_string(), start.elapsed().as_secs_f64() * 1e3)].into());
    }
    Ok(report)
}

/// What a process would see: exit code and both output streams.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments and runs, reading `SPLITKIT_SIZE_CAP` from the environment.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    execute_with_cap(args, std::env::var("SPLITKIT_SIZE_CAP").ok())
}

pub fn execute_with_cap<I, T>(args: I, cap: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match size_cap(cap).and_then(|cap| run(&cli, cap)) {
        Ok(report) => Outcome { code: report.exit_code(), stdout: report.render(cli.pretty), stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let out = execute(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

fn cmd_graph(src: &GraphSource, output: Option<&PathBuf>) -> Result<RunReport> {
    let input = resolve_graph(src)?;
    input.require_valid()?;
    let g = &input.graph;
    let mut r = RunReport::new("graph", &input.canonical(json!({})), None);
    r.verdict("valid", true);
    let tails: Vec<&str> = g.non_uniform_tails().into_iter().map(|v| g.id(v)).collect();
    let mut data = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "height": g.height(),
        "level_sizes": g.level_sizes(),
        "uniform": tails.is_empty(),
        "non_uniform_tails": tails,
    });
    if let Some(x) = &input.complex {
        let dim = x.dim().max(0) as usize;
        data["complex"] = json!({
            "dimension": x.dim(),
            "f_vector": x.f_vector(),
            "pure": x.is_pure(dim),
            "codim1_connected": x.is_codim1_connected(),
        });
    }
    let graph_json = GraphJson::from_graph(g);
    match output {
        Some(path) => std::fs::write(path, formats::to_pretty(&graph_json))
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
        None if src.hat => data["graph"] = serde_json::to_value(&graph_json).expect("serializable"),
        None => {}
    }
    r.data = data;
    Ok(r)
}

fn mobius_convention(strict: bool) -> MobiusConvention {
    if strict {
        MobiusConvention::Strict
    } else {
        MobiusConvention::Inclusive
    }
}

fn convention_name(c: MobiusConvention) -> &'static str {
    match c {
        MobiusConvention::Inclusive => "inclusive",
        MobiusConvention::Strict => "strict",
    }
}

/// Records the exact quotient `(1 - τM)/(1 - τ)` and whether its degree is the height.
fn inverse_polynomial(r: &mut RunReport, data: &mut Value, g: &LayeredGraph, conv: MobiusConvention) -> Result<()> {
    match mobius::hilbert_a_inverse_poly(g, conv) {
        Ok(q) => {
            r.verdict("inverse_exact", true);
            let degree = q.degree().unwrap_or(0);
            r.verdict("inverse_degree_equals_height", degree == g.height());
            data["inverse"] = json!({ "polynomial": formats::polynomial_strings(&q), "degree": degree, "height": g.height() });
        }
        Err(e @ CoreError::NonzeroRemainder { .. }) => {
            r.verdict("inverse_exact", false);
            data["inverse"] = json!({ "error": e.to_string() });
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn cmd_mobius(src: &GraphSource, strict: bool) -> Result<RunReport> {
    let input = resolve_graph(src)?;
    input.require_valid()?;
    let g = &input.graph;
    let conv = mobius_convention(strict);
    let mut r = RunReport::new("mobius", &input.canonical(json!({ "convention": convention_name(conv) })), None);
    let m = mobius::graded_mobius(g, conv)?;
    let table = MobiusTable::from_closure(&PosetClosure::new(g)?);
    let bottom = g.minimum().expect("valid graph");
    let top: Vec<Value> = g
        .level_set(g.height())
        .into_iter()
        .map(|v| json!({ "id": g.id(v), "mu_to_minimum": table.get(v, bottom) }))
        .collect();
    let mut data = json!({
        "convention": convention_name(conv),
        "polynomial": formats::polynomial_strings(&m),
        "top": top,
    });
    inverse_polynomial(&mut r, &mut data, g, conv)?;
    r.data = data;
    Ok(r)
}

fn cmd_hilbert(src: &GraphSource, degree: Option<usize>, strict: bool) -> Result<RunReport> {
    let input = resolve_graph(src)?;
    input.require_valid()?;
    let g = &input.graph;
    let conv = mobius_convention(strict);
    let d = degree.unwrap_or(2 * g.height()).max(1);
    let params = json!({ "convention": convention_name(conv), "degree": d });
    let mut r = RunReport::new("hilbert", &input.canonical(params), None);
    let mut data = json!({ "convention": convention_name(conv), "degree": d });
    match mobius::hilbert_a(g, d, conv) {
        Ok(h) => {
            r.verdict("nonnegative", true);
            data["series"] = json!(formats::series_strings(&h));
            if let Some(n) = input.boolean {
                r.verdict("closed_form", mobius::qn_hilbert(n, d)? == h);
            }
        }
        Err(e @ CoreError::NegativeDimension { .. }) => {
            r.verdict("nonnegative", false);
            data["series_error"] = json!(e.to_string());
        }
        Err(e) => return Err(e.into()),
    }
    inverse_polynomial(&mut r, &mut data, g, conv)?;
    r.data = data;
    Ok(r)
}

fn b_dims(g: &LayeredGraph, field: FieldSpec, opts: &Options) -> Result<GradedDims> {
    let degrees: Vec<usize> = (0..=g.height()).collect();
    let dims = pmap(opts.parallel, &degrees, |&k| b_gamma_dim(g, field, k, opts.cap));
    Ok(GradedDims { dims: dims.into_iter().collect::<std::result::Result<_, _>>()? })
}

fn cmd_dual(src: &GraphSource, field: FieldSpec, opts: &Options) -> Result<RunReport> {
    let input = resolve_graph(src)?;
    input.require_valid()?;
    let g = &input.graph;
    let mut r = RunReport::new("dual", &input.canonical(json!({ "field": field_name(field) })), Some(field_name(field)));
    let p = b_gamma_presentation(g, field)?;
    let dims = b_dims(g, field, opts)?;
    r.data = json!({
        "generators": p.generators(),
        "relations": p.relations().len(),
        "dims": dims.dims,
        "hilbert": formats::polynomial_strings(&dims.to_polynomial()),
    });
    Ok(r)
}

fn koszul(g: &LayeredGraph, field: FieldSpec, opts: &Options) -> Result<KoszulVerdict> {
    let lhs = mobius::hilbert_a_inverse_poly(g, MobiusConvention::Inclusive)?.substitute_neg();
    let rhs = b_dims(g, field, opts)?.to_polynomial();
    Ok(koszul_verdict(&lhs, &rhs))
}

fn signed_discrepancy(v: &KoszulVerdict, height: usize) -> Vec<i64> {
    (0..=height)
        .map(|k| {
            let d = v.lhs.get(k).cloned().unwrap_or_default() - v.rhs.get(k).cloned().unwrap_or_default();
            i64::try_from(d).expect("discrepancy fits in i64")
        })
        .collect()
}

fn verdict_json(v: &KoszulVerdict) -> Value {
    let s = |c: &[num_bigint::BigInt]| c.iter().map(ToString::to_string).collect::<Vec<_>>();
    json!({
        "pass": v.pass,
        "first_divergence_degree": v.first_divergence_degree,
        "lhs": s(&v.lhs),
        "rhs": s(&v.rhs),
    })
}

fn cmd_koszul(src: &GraphSource, field: FieldSpec, opts: &Options) -> Result<RunReport> {
    let input = resolve_graph(src)?;
    input.require_valid()?;
    let g = &input.graph;
    let mut r =
        RunReport::new("koszul-check", &input.canonical(json!({ "field": field_name(field) })), Some(field_name(field)));
    let v = koszul(g, field, opts)?;
    r.verdict("numerically_koszul", v.pass);
    let mut data = verdict_json(&v);
    data["discrepancy"] = json!(signed_discrepancy(&v, g.height()));
    r.data = data;
    Ok(r)
}

/// Both sides of the discrepancy identity for `k = 0..=height`.
fn discrepancy_table(
    r: &mut RunReport,
    g: &LayeredGraph,
    field: FieldSpec,
    convention: Convention,
    opts: &Options,
) -> Result<Value> {
    let lhs = signed_discrepancy(&koszul(g, field, opts)?, g.height());
    let degrees: Vec<usize> = (0..=g.height()).collect();
    let rhs = pmap(opts.parallel, &degrees, |&k| topo::discrepancy_rhs(g, field, k, convention))
        .into_iter()
        .collect::<std::result::Result<Vec<_>, _>>()?;
    r.verdict("identity", lhs == rhs);
    r.verdict("lhs_nonnegative", lhs.iter().all(|&x| x >= 0));
    let rows: Vec<Value> =
        degrees.iter().map(|&k| json!({ "k": k, "lhs": lhs[k], "rhs": rhs[k], "equal": lhs[k] == rhs[k] })).collect();
    Ok(json!({ "convention": convention.name(), "degrees": rows }))
}

fn cmd_discrepancy(src: &GraphSource, field: FieldSpec, convention: Convention, opts: &Options) -> Result<RunReport> {
    let input = resolve_graph(src)?;
    input.require_valid()?;
    let params = json!({ "field": field_name(field), "convention": convention.name() });
    let mut r = RunReport::new("discrepancy", &input.canonical(params), Some(field_name(field)));
    r.data = discrepancy_table(&mut r, &input.graph, field, convention, opts)?;
    Ok(r)
}

/// The calibration outcome in the layout of the frozen fixture.
pub fn calibration_json(rows: &[CalibrationRow]) -> Value {
    let matching: Vec<&str> = Convention::ALL
        .into_iter()
        .filter(|&c| rows.iter().filter(|r| r.convention == c).all(|r| r.matches))
        .map(Convention::name)
        .collect();
    let selected = (matching.len() == 1).then(|| matching[0]);
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "case": r.case,
                "field": field_name(r.field),
                "convention": r.convention.name(),
                "lhs": r.lhs,
                "rhs": r.rhs,
                "matches": r.matches,
            })
        })
        .collect();
    json!({ "matching": matching, "selected": selected, "rows": rows })
}

pub fn calibration_rows(parallel: bool) -> Result<Vec<CalibrationRow>> {
    let cases = fixtures::calibration_cases()?;
    let parts = pmap(parallel, &cases, |c| topo::calibrate(std::slice::from_ref(c)).map(|rep| rep.rows));
    let mut rows = Vec::new();
    for p in parts {
        rows.extend(p?);
    }
    Ok(rows)
}

fn cmd_calibrate(opts: &Options) -> Result<RunReport> {
    let cases: Vec<Value> = fixtures::calibration_cases()?
        .iter()
        .map(|c| json!({ "case": c.name, "field": field_name(c.field), "graph": GraphJson::from_graph(&c.graph) }))
        .collect();
    let mut r = RunReport::new("discrepancy", &json!({ "calibrate": cases }), None);
    let data = calibration_json(&calibration_rows(opts.parallel)?);
    let frozen: Value = formats::parse_json(fixtures::CALIBRATION, "calibration.json")?;
    r.verdict("unique_convention", !data["selected"].is_null());
    r.verdict("matches_frozen", data == frozen);
    r.data = data;
    Ok(r)
}

fn cmd_topology(
    path: &Option<PathBuf>,
    fixture: &Option<String>,
    field: FieldSpec,
    hat: bool,
    convention: Convention,
    opts: &Options,
) -> Result<RunReport> {
    let (x, _) = resolve_complex(path, fixture)?;
    let params = json!({ "field": field_name(field), "hat": hat, "convention": convention.name() });
    let canonical = json!({ "complex": ComplexJson::from_complex(&x), "params": params });
    let mut r = RunReport::new("topology", &canonical, Some(field_name(field)));
    let reduced = topo::betti(&x, field, true);
    let mut data = json!({
        "dimension": x.dim(),
        "f_vector": x.f_vector(),
        "betti": topo::betti(&x, field, false).b,
        "reduced_betti": { "minus_one": reduced.b_minus_one, "b": reduced.b },
    });
    match topo::thm43_predict(&x, field) {
        Ok(v) => {
            r.verdict("koszul_criterion", v.pass);
            data["criterion"] = json!({
                "pass": v.pass,
                "dimension": v.dimension,
                "global_obstruction": v.global_obstruction,
                "local_obstruction": v.local_obstruction,
            });
        }
        Err(e @ CoreError::HypothesisViolation(_)) => {
            r.verdict("koszul_criterion", false);
            data["criterion"] = json!({ "pass": false, "hypothesis_violation": e.to_string() });
        }
        Err(e) => return Err(e.into()),
    }
    if hat {
        let g = LayeredGraph::from_complex(&x)?.hat();
        data["discrepancy"] = discrepancy_table(&mut r, &g, field, convention, opts)?;
    }
    r.data = data;
    Ok(r)
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).map(|m| (1..=n).filter(|&i| m >> (i - 1) & 1 == 1).collect()).collect()
}

/// Every diamond `(A, i, j)` with `i < j` outside `A`.
pub fn all_diamonds_hold(rs: &RootSystem) -> Result<(usize, bool)> {
    let mut count = 0;
    let mut ok = true;
    for a in subsets(rs.n()) {
        for i in 1..=rs.n() {
            for j in i + 1..=rs.n() {
                if a.contains(&i) || a.contains(&j) {
                    continue;
                }
                count += 1;
                ok &= ncfactor::check_diamond(rs, &a, i, j)?.holds();
            }
        }
    }
    Ok((count, ok))
}

/// Whether every `x_{A,i}` has the characteristic polynomial of `x_i`.
pub fn charpolys_preserved(rs: &RootSystem, table: &PseudoRootTable) -> Result<(usize, bool)> {
    let mut ok = true;
    for (_, i, _, x) in table.iter() {
        ok &= ncfactor::charpoly(x)? == ncfactor::charpoly(rs.root(i))?;
    }
    Ok((table.len(), ok))
}

fn cmd_factor(path: &Option<PathBuf>, fixture: &Option<String>, opts: &Options) -> Result<RunReport> {
    let rs = match (path, fixture) {
        (Some(p), None) => formats::read_roots(p)?,
        (None, Some(n)) => fixtures::roots(n)?,
        _ => return Err(CliError::Usage("give a roots file or --fixture".into())),
    };
    let mut r = RunReport::new("factor", &json!({ "roots": RootsJson::from_roots(&rs) }), Some("q".into()));
    let issues = genericity_check(&rs);
    r.verdict("generic", issues.is_empty());
    if !issues.is_empty() {
        let failures: Vec<Value> = issues
            .iter()
            .map(|i| json!({ "subset": i.subset, "index": i.index, "message": i.to_string() }))
            .collect();
        r.data = json!({ "n": rs.n(), "d": rs.d(), "genericity_failures": failures });
        return Ok(r);
    }
    let table = PseudoRootTable::build(&rs)?;
    let orderings = ncfactor::orderings(rs.n());
    let per_ordering = pmap(opts.parallel, &orderings, |o| ncfactor::viete_from_table(&table, o).map(|p| (o.clone(), p)))
        .into_iter()
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let report = OrderingReport::from_results(&table, per_ordering)?;
    let (diamonds, diamonds_ok) = all_diamonds_hold(&rs)?;
    let (pseudo_roots, charpolys_ok) = charpolys_preserved(&rs, &table)?;
    r.verdict("orderings_agree", report.pass);
    r.verdict("diamonds", diamonds_ok);
    r.verdict("charpolys", charpolys_ok);
    let per: Vec<Value> = report
        .per_ordering
        .iter()
        .map(|(o, p)| json!({ "ordering": o, "coefficients": formats::matrix_polynomial_strings(p) }))
        .collect();
    r.data = json!({
        "n": rs.n(),
        "d": rs.d(),
        "orderings": per.len(),
        "per_ordering": per,
        "common": report.common.as_ref().map(formats::matrix_polynomial_strings),
        "expansion_mismatches": report.expansion_mismatches,
        "diamonds_checked": diamonds,
        "pseudo_roots_checked": pseudo_roots,
    });
    Ok(r)
}
