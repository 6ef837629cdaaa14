//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns everything the process should print together with its exit code.

mod analyze;
mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphs::{parse_edge_list, Graph};
use crate::interior::{
    hstar_bg_fast, hstar_bg_subgraph_formula, hypergraph_from_bipartite, hypertrees,
    interior_hat_via_matchings, interior_polynomial_oracle,
};
use crate::limits::Limits;
use crate::poly::{gamma_extract, gamma_substitute, interlaces, real_root_certificate, IntPolynomial};
use crate::polytope::{build_bg, ehrhart_hstar};
use crate::posets::{
    complement_comparability_graph, eulerian_polynomial, kpq_eulerian, kpq_hstar, parse_poset,
};

pub use analyze::{analyze, AnalysisReport, AnalyzeOptions};
pub use verify::{verify, Check, VerifyLevel, VerifyReport};

/// Dimension up to which `analyze` runs the lattice-point computations
/// unless `--ehrhart` or `--no-ehrhart` is given.
pub const AUTO_EHRHART_DIM: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "bgpoly", version, about = "Exact h*-, interior and gamma-polynomials of graph polytopes")]
struct Cli {
    /// Emit JSON instead of text. Big integers are decimal strings.
    #[arg(long, global = true)]
    json: bool,
    /// Lattice-point budget (overrides BGPOLY_POINT_BUDGET).
    #[arg(long, global = true, value_name = "N")]
    budget_points: Option<u64>,
    /// Spanning-tree budget (overrides BGPOLY_TREE_BUDGET).
    #[arg(long, global = true, value_name = "N")]
    budget_trees: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Predicates, polynomials and certificates for an edge-list file.
    Analyze {
        path: PathBuf,
        /// Largest dilation for the IDP check.
        #[arg(long, default_value_t = 3)]
        kmax: u64,
        /// Skip hull, lattice-point and IDP computations.
        #[arg(long)]
        no_ehrhart: bool,
        /// Run them even above the automatic dimension bound.
        #[arg(long, conflicts_with = "no_ehrhart")]
        ehrhart: bool,
        /// Include wall-clock timings (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Cross-check fast formulas against brute force for an edge-list file.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = VerifyLevel::Fast)]
        level: VerifyLevel,
        #[arg(long, default_value_t = 3)]
        kmax: u64,
    },
    /// Polynomial utilities. Coefficients are constant term first.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Closed forms for the complete bipartite graph K_{p,q}.
    Kpq { p: usize, q: usize },
    /// P-Eulerian polynomial of a naturally labeled poset file.
    Eulerian { path: PathBuf },
    /// Interior polynomial of a connected bipartite graph read as a hypergraph.
    Interior {
        path: PathBuf,
        /// Side whose vertices become hyperedges; both when omitted.
        #[arg(long, value_enum)]
        side: Option<Side>,
    },
    /// h*-polynomial of B_G.
    Hstar {
        path: PathBuf,
        /// Defaults to `fast` for bipartite graphs and `ehrhart` otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
}

#[derive(Debug, Subcommand)]
enum PolyCommand {
    /// Gamma-vector of a palindromic polynomial.
    Gamma {
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
        /// Palindromic centre degree; defaults to the degree of the input.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// `Σ g_k 4^k x^k (x+1)^(d-2k)`.
    Substitute {
        #[arg(long)]
        degree: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Exact real-root count with isolating intervals.
    Realrooted {
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Whether the roots of F interlace those of G.
    Interlaces {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Palindromicity, unimodality and log-concavity.
    Shape {
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Fast,
    Subgraph,
    Ehrhart,
}

/// What a finished invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Rendered {
    text: String,
    json: Value,
    code: i32,
}

impl Rendered {
    fn ok(text: String, json: Value) -> Self {
        Rendered { text, json, code: 0 }
    }
}

/// Runs one invocation. The first item of `args` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let json = cli.json;
    match execute(cli) {
        Ok(r) => {
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&r.json).expect("reports serialize");
                s.push('\n');
                s
            } else {
                r.text
            };
            Outcome { code: r.code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cli: Cli) -> Result<Rendered> {
    let mut limits = Limits::from_env()?;
    if let Some(n) = cli.budget_points {
        limits.point_budget = n;
    }
    if let Some(n) = cli.budget_trees {
        limits.tree_budget = n;
    }
    match cli.command {
        Command::Analyze { path, kmax, no_ehrhart, ehrhart, timings } => {
            let g = read_graph(&path)?;
            let opts = AnalyzeOptions {
                kmax,
                ehrhart: if no_ehrhart {
                    Some(false)
                } else if ehrhart {
                    Some(true)
                } else {
                    None
                },
                timings,
            };
            let report = analyze(&g, &opts, &limits)?;
            Ok(Rendered::ok(report.to_text(), to_json(&report)))
        }
        Command::Verify { path, level, kmax } => {
            let g = read_graph(&path)?;
            let report = verify(&g, level, kmax, &limits)?;
            let code = if report.passed() { 0 } else { 3 };
            Ok(Rendered { text: report.to_text(), json: to_json(&report), code })
        }
        Command::Poly(cmd) => poly(cmd),
        Command::Kpq { p, q } => kpq(p, q),
        Command::Eulerian { path } => eulerian(&path, &limits),
        Command::Interior { path, side } => interior(&path, side, &limits),
        Command::Hstar { path, method } => hstar(&path, method, &limits),
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read_text(path)?)
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Decimal strings, constant term first.
pub fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn list(p: &IntPolynomial) -> String {
    format!("[{}]", coeff_strings(p).join(", "))
}

fn parse_coeffs(parts: &[String]) -> Result<IntPolynomial> {
    parts.join(",").parse()
}

fn poly(cmd: PolyCommand) -> Result<Rendered> {
    match cmd {
        PolyCommand::Gamma { coeffs, degree } => {
            let f = parse_coeffs(&coeffs)?;
            let d = degree.or(f.degree()).unwrap_or(0);
            let g = gamma_extract(&f, d)?;
            let gp = g.as_polynomial();
            let text = format!(
                "gamma: {}\ndegree: {d}\ngamma-positive: {}\n",
                list(&gp),
                yes_no(g.is_positive())
            );
            Ok(Rendered::ok(text, json!({ "gamma": coeff_strings(&gp), "degree": d, "gamma_positive": g.is_positive() })))
        }
        PolyCommand::Substitute { degree, coeffs } => {
            let f = parse_coeffs(&coeffs)?;
            let h = gamma_substitute(&f, degree)?;
            Ok(Rendered::ok(format!("{}\n", list(&h)), json!({ "degree": degree, "result": coeff_strings(&h) })))
        }
        PolyCommand::Realrooted { coeffs } => {
            let f = parse_coeffs(&coeffs)?;
            let cert = real_root_certificate(&f)?;
            let mut text = format!(
                "real-rooted: {}\ndegree: {}\ndistinct real roots: {}\n",
                cert.is_real_rooted, cert.total_degree, cert.distinct_real_roots
            );
            for iv in &cert.isolating_intervals {
                let _ = writeln!(text, "  root in ({}, {})", iv.lo, iv.hi);
            }
            Ok(Rendered::ok(text, to_json(&cert)))
        }
        PolyCommand::Interlaces { f, g } => {
            let (f, g): (IntPolynomial, IntPolynomial) = (f.parse()?, g.parse()?);
            let holds = interlaces(&f, &g)?;
            Ok(Rendered::ok(format!("interlaces: {holds}\n"), json!({ "interlaces": holds })))
        }
        PolyCommand::Shape { coeffs, degree } => {
            let f = parse_coeffs(&coeffs)?;
            let d = degree.or(f.degree()).unwrap_or(0);
            let palindromic = f.is_palindromic(d)?;
            let (unimodal, log_concave, nonneg) =
                (f.is_unimodal(), f.is_log_concave(), f.has_nonnegative_coeffs());
            let text = format!(
                "palindromic (degree {d}): {}\nunimodal: {}\nlog-concave: {}\nnonnegative: {}\n",
                yes_no(palindromic),
                yes_no(unimodal),
                yes_no(log_concave),
                yes_no(nonneg)
            );
            let json = json!({
                "degree": d,
                "palindromic": palindromic,
                "unimodal": unimodal,
                "log_concave": log_concave,
                "nonnegative": nonneg,
            });
            Ok(Rendered::ok(text, json))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn kpq(p: usize, q: usize) -> Result<Rendered> {
    let h = kpq_hstar(p, q)?;
    let w = kpq_eulerian(p, q);
    let gamma = gamma_extract(&h, p + q)?.as_polynomial();
    let rr = real_root_certificate(&h)?.is_real_rooted;
    let text = format!(
        "K_{{{p},{q}}}\nW: {}\nh*: {}\ngamma: {}\nh* real-rooted: {rr}\n",
        list(&w),
        list(&h),
        list(&gamma)
    );
    let json = json!({
        "p": p,
        "q": q,
        "eulerian": coeff_strings(&w),
        "hstar": coeff_strings(&h),
        "gamma": coeff_strings(&gamma),
        "hstar_real_rooted": rr,
    });
    Ok(Rendered::ok(text, json))
}

fn eulerian(path: &Path, limits: &Limits) -> Result<Rendered> {
    let poset = parse_poset(&read_text(path)?)?;
    let w = eulerian_polynomial(&poset, limits)?;
    let g = complement_comparability_graph(&poset);
    let mut text = format!("elements: {}\nW: {}\n", poset.d(), list(&w));
    let mut out = json!({ "elements": poset.d(), "eulerian": coeff_strings(&w) });
    out["incomparability_bipartite"] = json!(g.is_bipartite());
    let _ = writeln!(text, "incomparability graph bipartite: {}", yes_no(g.is_bipartite()));
    if g.is_bipartite() {
        let via_matchings = interior_hat_via_matchings(&g, limits)?;
        if via_matchings != w {
            return Err(Error::Integrity(format!(
                "W(P) = {} but the matching count gives {}",
                list(&w),
                list(&via_matchings)
            )));
        }
        let h = gamma_substitute(&w, poset.d())?;
        let _ = writeln!(text, "h*(B_G): {}", list(&h));
        out["hstar"] = json!(coeff_strings(&h));
    }
    Ok(Rendered::ok(text, out))
}

fn interior(path: &Path, side: Option<Side>, limits: &Limits) -> Result<Rendered> {
    let g = read_graph(path)?;
    let b = g.bipartition().ok_or_else(|| Error::precondition("graph is not bipartite"))?;
    let sides: Vec<(&str, &[usize])> = match side {
        Some(Side::Left) => vec![("left", &b.left)],
        Some(Side::Right) => vec![("right", &b.right)],
        None => vec![("left", &b.left), ("right", &b.right)],
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (name, vertices) in sides {
        let h = hypergraph_from_bipartite(&g, vertices)?;
        let trees = hypertrees(&h, limits)?.len();
        let i = interior_polynomial_oracle(&h, limits)?;
        let _ = writeln!(
            text,
            "hyperedges = {name} side ({} hyperedges, {} vertices): hypertrees {trees}, I = {}",
            h.hyperedges().len(),
            h.vertex_count(),
            list(&i)
        );
        rows.push(json!({
            "hyperedge_side": name,
            "hyperedges": h.hyperedges().len(),
            "vertices": h.vertex_count(),
            "hypertrees": trees,
            "interior": coeff_strings(&i),
        }));
    }
    Ok(Rendered::ok(text, json!({ "interior": rows })))
}

fn hstar(path: &Path, method: Option<Method>, limits: &Limits) -> Result<Rendered> {
    let g = read_graph(path)?;
    let method = method.unwrap_or(if g.is_bipartite() { Method::Fast } else { Method::Ehrhart });
    let (name, h) = match method {
        Method::Fast => ("fast", hstar_bg_fast(&g, limits)?),
        Method::Subgraph => ("subgraph", hstar_bg_subgraph_formula(&g, limits)?),
        Method::Ehrhart => ("ehrhart", ehrhart_hstar(&build_bg(&g), limits)?.hstar),
    };
    let mut text = format!("h*: {}\nmethod: {name}\n", list(&h));
    let mut out = json!({ "method": name, "hstar": coeff_strings(&h) });
    if let Ok(gamma) = gamma_extract(&h, g.d()) {
        let gp = gamma.as_polynomial();
        let _ = writeln!(text, "gamma: {}", list(&gp));
        out["gamma"] = json!(coeff_strings(&gp));
    }
    Ok(Rendered::ok(text, out))
}
