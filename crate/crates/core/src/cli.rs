//! Command-line front end. Every command prints one JSON report (or a graph
//! file for `gen`/`product` without `--out`).
//!
//! Exit codes: 0 on success, including reports whose hypotheses do not hold;
//! 1 on I/O or validation errors; 2 when a verification fails.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{charpoly, Poly};
use crate::applications::{equienergetic_family, integral_star_search, line_graph_demo_inputs};
use crate::coronal::{mu_coronal, signed_coronal, CoronalTriple};
use crate::error::{Error, Result};
use crate::graph::generators::{Family, Signature};
use crate::graph::{MarkedSignedGraph, Marking, MatrixKind};
use crate::io::{parse_graph, serialize_graph};
use crate::product::product;
use crate::spectra::{cospectral, energy, is_integral, spectrum};
use crate::theorems::{cospectral_family_check, DegreeMode, Side};
use crate::verify::{run_campaign, CampaignConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VERIFICATION_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sigspec", version, about = "Spectra of marked signed graph products")]
pub struct Cli {
    /// RNG seed for randomized commands.
    #[arg(long, global = true, env = "SIGSPEC_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Numeric tolerance (Jacobi off-diagonal threshold, or energy comparison).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings (makes reports non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    A,
    L,
    Q,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> Self {
        match m {
            MatrixArg::A => MatrixKind::Adjacency,
            MatrixArg::L => MatrixKind::Laplacian,
            MatrixArg::Q => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum YesNo {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DegreeModeArg {
    Constructed,
    Paper,
}

impl From<DegreeModeArg> for DegreeMode {
    fn from(m: DegreeModeArg) -> Self {
        match m {
            DegreeModeArg::Constructed => DegreeMode::Constructed,
            DegreeModeArg::Paper => DegreeMode::Paper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoronalOf {
    /// `A(Σμ)` with the file's marking.
    MuGraph,
    /// `A(Σ)` with the file's marking.
    Graph,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build Σ₁ ⊛ Σ₂ and write it in the graph text format.
    Product { first: PathBuf, second: PathBuf },
    /// Exact characteristic polynomial.
    Charpoly {
        graph: PathBuf,
        #[arg(long, value_enum, ignore_case = true, default_value = "a")]
        matrix: MatrixArg,
    },
    /// Reduced coronal P/F and cofactor R.
    Coronal {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "mu-graph")]
        of: CoronalOf,
    },
    /// Eigenvalues, energy, integrality and the exact polynomial.
    Spectrum {
        graph: PathBuf,
        #[arg(long, value_enum, ignore_case = true, default_value = "a")]
        matrix: MatrixArg,
    },
    /// Adjacency energy.
    Energy { graph: PathBuf },
    /// Randomized comparison of factored and direct polynomials.
    VerifyTheorem {
        #[arg(long, value_enum, ignore_case = true, default_value = "a")]
        which: MatrixArg,
        #[arg(long, value_enum, default_value = "yes")]
        signed: YesNo,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_n1: usize,
        #[arg(long, default_value_t = 4)]
        max_n2: usize,
        #[arg(long, value_enum, default_value = "constructed")]
        degree_mode: DegreeModeArg,
    },
    /// Cospectrality of Σ_A ⊛ Σ vs Σ_B ⊛ Σ (left) or Σ ⊛ Σ_A vs Σ ⊛ Σ_B (right).
    CospectralFamily {
        first: PathBuf,
        second: PathBuf,
        common: PathBuf,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Equienergetic certificate for L²(K₃,₃) and L²(C₃×K₂) against K₂.
    EquienergeticDemo,
    /// Integral products Σ₁ ⊛ K_{1,n} over small first factors.
    IntegralSearch {
        #[arg(long, default_value = "star")]
        family: String,
        #[arg(long, default_value_t = 3)]
        max_n1: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Generate a family member.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Edge signs in lexicographic edge order; all positive when omitted.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
        /// Explicit marking; canonical when omitted.
        #[arg(long, allow_hyphen_values = true)]
        marking: Option<String>,
    },
}

pub struct Outcome {
    pub output: String,
    pub exit: i32,
}

struct Input {
    name: String,
    sha256: String,
    graph: MarkedSignedGraph,
}

fn read_graph(path: &Path) -> Result<Input> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::InvalidParameter(format!("{} is not UTF-8", path.display())))?;
    let graph = parse_graph(&text).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    })?;
    Ok(Input {
        name: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
        graph,
    })
}

fn inputs_json(inputs: &[&Input]) -> Value {
    inputs
        .iter()
        .map(|i| json!({ "path": i.name, "sha256": i.sha256 }))
        .collect()
}

fn poly_json(p: &Poly) -> Value {
    json!({ "text": p.to_string(), "coefficients": p.coeff_strings() })
}

fn coronal_json(t: &CoronalTriple) -> Value {
    json!({
        "coronal": t.ratio().to_string(),
        "p": poly_json(&t.p),
        "f": poly_json(&t.f),
        "r": poly_json(&t.r),
        "d": t.d(),
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn report(command: &str, inputs: Value, result: Value) -> Value {
    json!({ "command": command, "inputs": inputs, "result": result })
}

fn parse_signature(s: Option<&str>) -> Result<Signature> {
    s.map_or(Ok(Signature::AllPositive), Signature::parse)
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let started = Instant::now();
    let tol = cli.tol;
    let mut exit = EXIT_OK;
    let mut text_output = None;

    let mut value = match &cli.command {
        Command::Product { first, second } => {
            let (a, b) = (read_graph(first)?, read_graph(second)?);
            let pg = product(&a.graph, &b.graph)?;
            let (n1, n2) = pg.factor_orders();
            let mut text = format!(
                "# product of {} ({n1} vertices) and {} ({n2} vertices)\n\
                 # a(i,k) = i*{n2} + k for i < {n1}, k < {n2}\n\
                 # b(i,q) = {} + i*{n2} + q\n",
                a.name,
                b.name,
                n1 * n2
            );
            text.push_str(&serialize_graph(pg.result()));
            let g = pg.result().graph();
            let summary = report(
                "product",
                inputs_json(&[&a, &b]),
                json!({
                    "vertices": g.n(),
                    "edges": g.edge_count(),
                    "sha256": hex::encode(Sha256::digest(text.as_bytes())),
                }),
            );
            text_output = Some(text);
            summary
        }
        Command::Charpoly { graph, matrix } => {
            let g = read_graph(graph)?;
            let kind = MatrixKind::from(*matrix);
            let p = charpoly(&g.graph.graph().matrix(kind))?;
            report(
                "charpoly",
                inputs_json(&[&g]),
                json!({ "matrix": kind.letter(), "charpoly": poly_json(&p) }),
            )
        }
        Command::Coronal { graph, of } => {
            let g = read_graph(graph)?;
            let (label, t) = match of {
                CoronalOf::MuGraph => ("mu-graph", mu_coronal(&g.graph)?),
                CoronalOf::Graph => (
                    "graph",
                    signed_coronal(&g.graph.graph().adjacency_matrix(), g.graph.marking())?,
                ),
            };
            let mut v = coronal_json(&t);
            v["of"] = json!(label);
            report("coronal", inputs_json(&[&g]), v)
        }
        Command::Spectrum { graph, matrix } => {
            let g = read_graph(graph)?;
            let kind = MatrixKind::from(*matrix);
            let s = spectrum(&g.graph, kind, tol.unwrap_or(crate::spectra::DEFAULT_JACOBI_TOL))?;
            let p = charpoly(&g.graph.graph().matrix(kind))?;
            let integral = is_integral(&g.graph)?;
            report(
                "spectrum",
                inputs_json(&[&g]),
                json!({
                    "matrix": kind.letter(),
                    "eigenvalues": s.eigenvalues,
                    "energy": energy(&g.graph)?.value,
                    "integral": integral.integral,
                    "integer_eigenvalues": integral.roots_i64(),
                    "charpoly": poly_json(&p),
                }),
            )
        }
        Command::Energy { graph } => {
            let g = read_graph(graph)?;
            let e = energy(&g.graph)?;
            let integral = is_integral(&g.graph)?;
            let p = charpoly(&g.graph.graph().adjacency_matrix())?;
            report(
                "energy",
                inputs_json(&[&g]),
                json!({
                    "energy": e.value,
                    "tolerance": e.tolerance,
                    "integral": integral.integral,
                    "charpoly": poly_json(&p),
                }),
            )
        }
        Command::VerifyTheorem {
            which,
            signed,
            trials,
            max_n1,
            max_n2,
            degree_mode,
        } => {
            if *max_n1 == 0 || *max_n2 == 0 {
                return Err(Error::InvalidParameter("--max-n1 and --max-n2 must be positive".into()));
            }
            let which = MatrixKind::from(*which);
            let r = run_campaign(&CampaignConfig {
                which,
                signed: *signed == YesNo::Yes,
                trials: *trials,
                max_n1: *max_n1,
                max_n2: *max_n2,
                degree_mode: (*degree_mode).into(),
                seed: cli.seed,
            })?;
            if !r.all_passed() {
                exit = EXIT_VERIFICATION_FAILED;
            }
            report("verify-theorem", json!([]), to_value(&r))
        }
        Command::CospectralFamily {
            first,
            second,
            common,
            side,
        } => {
            let (a, b, s) = (read_graph(first)?, read_graph(second)?, read_graph(common)?);
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let r = cospectral_family_check(&a.graph, &b.graph, &s.graph, side)?;
            if !r.pass {
                exit = EXIT_VERIFICATION_FAILED;
            }
            report("cospectral-family", inputs_json(&[&a, &b, &s]), to_value(&r))
        }
        Command::EquienergeticDemo => {
            let (mg1, mg2, mg) = line_graph_demo_inputs();
            let cert = equienergetic_family(&mg1, &mg2, &mg, tol.unwrap_or(1e-7))?;
            let hypotheses_hold = cert.products.is_some();
            if hypotheses_hold && !cert.valid {
                exit = EXIT_VERIFICATION_FAILED;
            }
            let a_cospectral = cospectral(&mg1, &mg2, MatrixKind::Adjacency)?;
            let mut v = to_value(&cert);
            v["inputs_a_cospectral"] = json!(a_cospectral);
            report(
                "equienergetic-demo",
                json!(["line_graph(line_graph(K3,3))", "line_graph(line_graph(prism(3)))", "K2"]),
                v,
            )
        }
        Command::IntegralSearch { family, max_n1, max_n } => {
            if family != "star" {
                return Err(Error::InvalidParameter(format!(
                    "integral-search supports --family star only, got {family:?}"
                )));
            }
            let entries = integral_star_search(*max_n1, *max_n)?;
            let disagreements = entries.iter().filter(|e| !e.report.agrees_with_product_check).count();
            if disagreements > 0 {
                exit = EXIT_VERIFICATION_FAILED;
            }
            let hits: Vec<Value> = entries
                .iter()
                .filter(|e| e.report.integral)
                .map(|e| json!({ "first": e.first, "n": e.report.n, "center_mark": e.report.center_mark }))
                .collect();
            report(
                "integral-search",
                json!([]),
                json!({
                    "family": family,
                    "max_n1": max_n1,
                    "max_n": max_n,
                    "instances": entries.len(),
                    "disagreements": disagreements,
                    "integral_hits": hits,
                    "entries": to_value(&entries),
                }),
            )
        }
        Command::Gen {
            family,
            n,
            signs,
            marking,
        } => {
            let g = family.build(*n, &parse_signature(signs.as_deref())?)?;
            let mg = match marking {
                None => MarkedSignedGraph::canonical(g),
                Some(m) => {
                    let Signature::Explicit(s) = Signature::parse(m)? else {
                        unreachable!("parse yields explicit signs")
                    };
                    MarkedSignedGraph::new(g, Marking::new(s))?
                }
            };
            let text = serialize_graph(&mg);
            let summary = report(
                "gen",
                json!([]),
                json!({
                    "family": family,
                    "n": n,
                    "vertices": mg.n(),
                    "edges": mg.graph().edge_count(),
                    "sha256": hex::encode(Sha256::digest(text.as_bytes())),
                }),
            );
            text_output = Some(text);
            summary
        }
    };

    if cli.timings {
        value["timings_ms"] = json!(started.elapsed().as_secs_f64() * 1e3);
    }
    value["seed"] = json!(cli.seed);

    let json_text = serde_json::to_string_pretty(&value).expect("json values serialize") + "\n";
    let output = match (&cli.out, text_output) {
        (Some(path), Some(text)) => {
            write_file(path, &text)?;
            json_text
        }
        (Some(path), None) => {
            write_file(path, &json_text)?;
            String::new()
        }
        (None, Some(text)) => text,
        (None, None) => json_text,
    };
    Ok(Outcome { output, exit })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

/// Parses `args`, runs the command, prints its output, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.output.as_bytes());
            out.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}
