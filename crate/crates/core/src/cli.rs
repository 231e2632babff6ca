//! Command-line front end. `run` parses arguments, executes one subcommand
//! and returns the process exit code: 0 on success, 1 when a computation
//! fails (or a verified identity does not hold), 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::ehrhart::{self, LatticeCounter};
use crate::error::Error;
use crate::family::{build_family, build_root_polytope, FamilySpec};
use crate::flow::{build_graph, components_and_k0, dahl_dimension};
use crate::format::{parse_vertex_list, write_vertex_list};
use crate::hull;
use crate::polytope::LatticePolytope;
use crate::verify::{self, Report, SuiteConfig};

#[derive(Parser, Debug)]
#[command(
    name = "ivpoly",
    version,
    about = "Exact computations on interval-vector polytopes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomly sampled checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// All interval lengths 1..n.
    Complete,
    /// Intervals of the single length `--i`.
    Fixed,
    /// Intervals of length 1 or n - i.
    Pyramidal,
    /// Convex hull of the origin and all e_j - e_k with j < k.
    Root,
    /// Intervals with lengths from `--lengths`.
    Intervals,
}

/// Where the polytope comes from: a named family or a vertex-list file.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Built-in family to generate.
    #[arg(
        long,
        value_enum,
        required_unless_present = "file",
        conflicts_with = "file"
    )]
    pub family: Option<FamilyKind>,
    /// Vertex-list file (`n m` header, then rows; `alpha i j` accepted).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Ambient dimension.
    #[arg(long)]
    pub n: Option<usize>,
    /// Interval length for `fixed`; `pyramidal` uses lengths 1 and `n - i`.
    #[arg(long)]
    pub i: Option<usize>,
    /// Comma-separated interval lengths for `--family intervals`.
    #[arg(long, value_delimiter = ',')]
    pub lengths: Vec<usize>,
    /// Add the origin to complete or custom interval families.
    #[arg(long)]
    pub include_origin: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the vertex list.
    Build(Source),
    /// Affine dimension, by rank and by the flow-dimension graph.
    Dim(Source),
    /// Flow-dimension graph as an edge list.
    Graph(Source),
    /// Face numbers f_{-1}, f_0, ..., f_d.
    Fvector(Source),
    /// Facet inequalities and affine-hull equations.
    Facets(Source),
    /// Ehrhart polynomial, optionally with direct counts up to `--t-max`.
    Ehrhart {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t_max: Option<u64>,
    },
    /// Normalized volume.
    Volume(Source),
    /// Lattice points in the t-th dilate.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t: u64,
    },
    /// Run the verification suite.
    Verify {
        /// Restrict to these claim identifiers.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        claims: Vec<String>,
        /// Largest n swept per claim.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Also compare direct counts up to this dilation where applicable.
        #[arg(long)]
        t_max: Option<u64>,
    },
    /// Probe the volume formula 2^i (n - i - 1) for the pyramidal family.
    Conjecture {
        /// Long intervals have length `n - i`.
        #[arg(long)]
        i: usize,
        /// Inclusive range such as `5..8`, `5-8` or `7`.
        #[arg(long)]
        n_range: String,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_)
            | Error::InvalidInterval { .. }
            | Error::InvalidDimension { .. }
            | Error::UnknownClaim(_)
            | Error::OutOfBounds { .. }
            | Error::Parse { .. }
            | Error::EmptyInput(_)
            | Error::DimensionMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl Source {
    fn need(&self, v: Option<usize>, flag: &str) -> std::result::Result<usize, Failure> {
        v.ok_or_else(|| usage(format!("--{flag} is required for this family")))
    }

    fn spec(&self) -> std::result::Result<Option<FamilySpec>, Failure> {
        let Some(kind) = self.family else {
            return Ok(None);
        };
        let n = self.need(self.n, "n")?;
        let spec = match kind {
            FamilyKind::Complete => FamilySpec::complete(n, self.include_origin)?,
            FamilyKind::Fixed => FamilySpec::fixed(n, self.need(self.i, "i")?)?,
            FamilyKind::Pyramidal => FamilySpec::pyramidal(n, self.need(self.i, "i")?)?,
            FamilyKind::Intervals => {
                if self.lengths.is_empty() {
                    return Err(usage("--lengths is required for --family intervals"));
                }
                FamilySpec::new(n, self.lengths.iter().copied(), self.include_origin)?
            }
            FamilyKind::Root => return Ok(None),
        };
        Ok(Some(spec))
    }

    fn polytope(&self) -> std::result::Result<LatticePolytope, Failure> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let (n, rows) = parse_vertex_list(&text)?;
            return Ok(LatticePolytope::from_generators(n, rows)?);
        }
        if self.family == Some(FamilyKind::Root) {
            return Ok(build_root_polytope(self.need(self.n, "n")?)?);
        }
        let spec = self.spec()?.expect("family selected");
        Ok(build_family(&spec)?)
    }
}

fn parse_range(s: &str) -> std::result::Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || {
        usage(format!(
            "bad --n-range '{s}': expected `a..b`, `a-b` or `a`"
        ))
    };
    let parts: Vec<&str> = if s.contains("..") {
        s.splitn(2, "..").collect()
    } else {
        s.splitn(2, '-').collect()
    };
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.trim().trim_start_matches('=').parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad())?;
    match nums[..] {
        [a] => Ok(a..=a),
        [a, b] if a <= b => Ok(a..=b),
        _ => Err(bad()),
    }
}

struct Output {
    body: String,
    code: i32,
}

fn ok(body: String) -> std::result::Result<Output, Failure> {
    Ok(Output { body, code: 0 })
}

fn report_body(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Text => report.to_text(),
    }
}

fn execute(cli: &Cli) -> std::result::Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Build(src) => {
            let p = src.polytope()?;
            match fmt {
                OutputFormat::Text => ok(write_vertex_list(p.n(), p.vertices())),
                OutputFormat::Csv => {
                    let mut s = String::new();
                    for v in p.vertices() {
                        let cells: Vec<String> =
                            v.coords().iter().map(ToString::to_string).collect();
                        s.push_str(&cells.join(","));
                        s.push('\n');
                    }
                    ok(s)
                }
                OutputFormat::Json => {
                    let rows: Vec<Vec<String>> = p
                        .vertices()
                        .iter()
                        .map(|v| v.coords().iter().map(ToString::to_string).collect())
                        .collect();
                    ok(json!({ "n": p.n(), "vertices": rows }).to_string() + "\n")
                }
            }
        }
        Command::Dim(src) => {
            let p = src.polytope()?;
            let dahl = match src.spec()? {
                Some(spec) => Some(dahl_dimension(&spec)?),
                None => None,
            };
            match fmt {
                OutputFormat::Json => {
                    ok(json!({ "dim": p.dim(), "dahl": dahl }).to_string() + "\n")
                }
                _ => {
                    let dahl = dahl.map_or_else(|| "n/a".to_string(), |d| d.to_string());
                    ok(format!("dim {}\ndahl {dahl}\n", p.dim()))
                }
            }
        }
        Command::Graph(src) => {
            let spec = src.spec()?.ok_or_else(|| {
                usage("graph needs an interval family (complete, fixed, pyramidal or intervals)")
            })?;
            let g = build_graph(&spec)?;
            match fmt {
                OutputFormat::Json => {
                    let s = components_and_k0(&g);
                    ok(json!({
                        "n": g.n,
                        "edges": g.edges,
                        "v1": g.v1,
                        "components": s.components,
                        "k0": s.k0,
                    })
                    .to_string()
                        + "\n")
                }
                _ => ok(g.to_string()),
            }
        }
        Command::Fvector(src) => {
            let f = hull::f_vector(&src.polytope()?)?;
            match fmt {
                OutputFormat::Json => ok(json!({ "d": f.d, "f": f.counts }).to_string() + "\n"),
                OutputFormat::Csv => {
                    let cells: Vec<String> = f.counts.iter().map(ToString::to_string).collect();
                    ok(cells.join(",") + "\n")
                }
                OutputFormat::Text => ok(format!("{f}\n")),
            }
        }
        Command::Facets(src) => {
            let p = src.polytope()?;
            let h = p.hrep()?;
            match fmt {
                OutputFormat::Json => {
                    let rows = |cs: &[crate::lattice::Constraint]| -> Vec<serde_json::Value> {
                        cs.iter()
                            .map(|c| {
                                let a: Vec<String> =
                                    c.normal.coords().iter().map(ToString::to_string).collect();
                                json!({ "normal": a, "rhs": c.rhs.to_string() })
                            })
                            .collect()
                    };
                    ok(
                        json!({ "facets": rows(&h.facets), "equations": rows(&h.equations) })
                            .to_string()
                            + "\n",
                    )
                }
                _ => ok(h.to_string()),
            }
        }
        Command::Ehrhart { source, t_max } => {
            let p = source.polytope()?;
            let l = ehrhart::ehrhart_polynomial(&p)?;
            let counts: Vec<(u64, String)> = match t_max {
                Some(t_max) => {
                    let c = LatticeCounter::new(&p)?;
                    (0..=*t_max)
                        .map(|t| {
                            (
                                t,
                                c.count(t, ehrhart::CountStrategy::FiberPruned).to_string(),
                            )
                        })
                        .collect()
                }
                None => Vec::new(),
            };
            match fmt {
                OutputFormat::Json => {
                    let mut v = json!({ "d": l.d, "coeffs": l.coeff_strings() });
                    if t_max.is_some() {
                        v["counts"] = json!(counts.iter().map(|(_, c)| c).collect::<Vec<_>>());
                    }
                    ok(v.to_string() + "\n")
                }
                OutputFormat::Csv => {
                    let mut s = l.coeff_strings().join(",") + "\n";
                    for (t, c) in &counts {
                        s.push_str(&format!("{t},{c}\n"));
                    }
                    ok(s)
                }
                OutputFormat::Text => {
                    let mut s = format!("{l}\n");
                    for (t, c) in &counts {
                        s.push_str(&format!("L({t}) = {c}\n"));
                    }
                    ok(s)
                }
            }
        }
        Command::Volume(src) => {
            let v = ehrhart::normalized_volume(&src.polytope()?)?;
            match fmt {
                OutputFormat::Json => {
                    ok(json!({ "normalized_volume": v.to_string() }).to_string() + "\n")
                }
                _ => ok(format!("{v}\n")),
            }
        }
        Command::Count { source, t } => {
            let c = ehrhart::count_lattice_points(&source.polytope()?, *t)?;
            match fmt {
                OutputFormat::Json => {
                    ok(json!({ "t": t, "count": c.to_string() }).to_string() + "\n")
                }
                _ => ok(format!("{c}\n")),
            }
        }
        Command::Verify {
            claims,
            n_max,
            t_max,
        } => {
            let mut config = SuiteConfig::default_suite(*n_max);
            if !claims.is_empty() {
                config = config.restrict(claims)?;
            }
            for (_, p) in &mut config.checks {
                p.t_max = *t_max;
                p.seed = cli.seed;
            }
            let report = verify::verify_suite(&config);
            Ok(Output {
                body: report_body(&report, fmt),
                code: i32::from(report.has_failures()),
            })
        }
        Command::Conjecture { i, n_range } => {
            let range = parse_range(n_range)?;
            let report = Report::new(verify::probe_conjecture(*i, range)?);
            let mut body = report_body(&report, fmt);
            if fmt == OutputFormat::Text {
                for r in &report.results {
                    body.push_str(&format!("n={} i={}: {}\n", r.params.n, i, r.detail));
                }
            }
            ok(body)
        }
    }
}

/// Honors `IVP_THREADS` by sizing the global worker pool once.
fn configure_threads() {
    if let Some(k) = std::env::var("IVP_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a second call finds the pool already built, which is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// results to `out` (or `--output`) and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    configure_threads();
    let result = execute(&cli);
    match result {
        Ok(Output { body, code }) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &body),
                None => out.write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 1;
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Convenience wrapper returning captured output, for tests and bindings.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
