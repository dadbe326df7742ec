//! The `shyp` command line. [`run`] parses arguments, writes the result to
//! the given stream and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::format;
use crate::hypersimplex::{CardinalitySet, SHypersimplex};
use crate::permutahedra;
use crate::triangulation::{self, HalfcubeFaces, PullOrder};
use crate::verify::{self, CheckReport};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BAD_ARGS: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Default `--max-d` for closed-form computations.
pub const FORMULA_MAX_D: usize = 12;
/// Default `--max-d` for anything that runs the oracle.
pub const ORACLE_MAX_D: usize = 5;
/// Default bound on the number of items any command will enumerate.
pub const MAX_ITEMS: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    Random,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Against {
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Edges,
    Facets,
    Slices,
    Minkowski,
    Fiber,
    Tdcount,
    Volumes,
}

/// `S` as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetArg {
    List(Vec<usize>),
    Even,
    All,
}

fn parse_set(raw: &str) -> Result<SetArg, String> {
    match raw {
        "even" => Ok(SetArg::Even),
        "all" => Ok(SetArg::All),
        _ => raw
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| format!("not a cardinality: {x:?}")))
            .collect::<Result<Vec<_>, _>>()
            .map(SetArg::List),
    }
}

/// Settings shared by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct CliConfig {
    /// Ambient dimension.
    #[arg(short = 'd', global = true)]
    pub d: Option<usize>,
    /// Cardinality set: comma list, `even` (halfcube) or `all` (cube).
    #[arg(short = 'S', global = true, value_parser = parse_set)]
    pub s: Option<SetArg>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Largest accepted d [default: 12 for formulas, 5 for oracle checks].
    #[arg(long = "max-d", global = true, env = "SHYP_MAX_D")]
    pub max_d: Option<usize>,
    /// Largest number of vertices, edges, facets or paths to enumerate.
    #[arg(long = "max-items", global = true, default_value_t = MAX_ITEMS)]
    pub max_items: u128,
    /// Seed for random pull orders.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Parser, Debug)]
#[command(name = "shyp", version, about = "Exact combinatorics of S-hypersimplices")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Vertices of Δ(d, S).
    Vertices,
    /// Edges of Δ(d, S).
    Edges,
    /// Facets of a proper Δ(d, S).
    Facets,
    /// Cayley pieces Δ(d, s_i, s_{i+1}).
    Decompose,
    /// Vertices of the layer Δ(d, s) for some s in S.
    Slice {
        #[arg(long)]
        layer: usize,
    },
    /// Pulling triangulation.
    Triangulate {
        #[arg(long, value_enum, default_value_t = OrderKind::Lex)]
        order: OrderKind,
        /// Largest number of vertices to pull.
        #[arg(long = "max-vertices", default_value_t = triangulation::MAX_PULL_VERTICES)]
        max_vertices: usize,
    },
    /// Exact volume from a pulling triangulation.
    Volume,
    /// Monotone paths with respect to the coordinate sum.
    Paths,
    /// Monotone path polytope, a permutahedron.
    Mpp,
    /// Number of simplices in a pulling triangulation of the halfcube.
    Tdcount,
    /// Extension complexity bound 2d(|S|-1) next to the facet count.
    Extbound,
    /// Compare the closed forms with the brute-force oracle.
    Verify {
        #[arg(long, value_enum, default_value_t = Against::Oracle)]
        against: Against,
        /// Checks to run (comma list); all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        check: Vec<CheckName>,
        /// Random pull orders per halfcube for the t(d) check.
        #[arg(long, default_value_t = 20)]
        orders: u64,
    },
}

enum Failure {
    Args(String),
    Cap(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(_) | Error::Overflow => Failure::Cap(e.to_string()),
            _ => Failure::Args(e.to_string()),
        }
    }
}

impl CliConfig {
    fn formula_cap(&self) -> usize {
        self.max_d.unwrap_or(FORMULA_MAX_D)
    }

    fn oracle_cap(&self) -> usize {
        self.max_d.unwrap_or(ORACLE_MAX_D)
    }

    fn dim(&self, cap: usize) -> Result<usize, Failure> {
        let d = self.d.ok_or_else(|| Failure::Args("missing -d".into()))?;
        if d > cap {
            return Err(Failure::Cap(format!("d = {d} exceeds --max-d {cap}")));
        }
        Ok(d)
    }

    fn polytope(&self, cap: usize) -> Result<SHypersimplex, Failure> {
        let d = self.dim(cap)?;
        let cs = match self.s.as_ref().ok_or_else(|| Failure::Args("missing -S".into()))? {
            SetArg::List(m) => CardinalitySet::new(d, m)?,
            SetArg::Even => CardinalitySet::even(d)?,
            SetArg::All => CardinalitySet::all(d)?,
        };
        Ok(SHypersimplex::new(cs))
    }

    fn items(&self, what: &str, n: u128) -> Result<(), Failure> {
        if n > self.max_items {
            return Err(Failure::Cap(format!("{n} {what} exceed --max-items {}", self.max_items)));
        }
        Ok(())
    }
}

fn proper(p: &SHypersimplex) -> Result<(), Failure> {
    if p.is_proper() {
        Ok(())
    } else {
        Err(Error::Improper(p.card_set().to_string()).into())
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_ARGS } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = String::new();
    let outcome = execute(&cli.command, &cli.config, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Args(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_BAD_ARGS
        }
        Err(Failure::Cap(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_CAP
        }
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn execute(cmd: &Command, cfg: &CliConfig, out: &mut String) -> Result<(), Failure> {
    let json = cfg.format == OutputFormat::Json;
    match cmd {
        Command::Vertices => {
            let p = cfg.polytope(cfg.formula_cap())?;
            cfg.items("vertices", p.vertex_count())?;
            let v = p.vertices();
            out.push_str(&if json { format::vertex_list_json(&p, &v) } else { format::vertex_list_text(&p, &v) });
        }
        Command::Edges => {
            let p = cfg.polytope(cfg.formula_cap())?;
            cfg.items("edges", p.edge_count())?;
            let e = p.edges();
            out.push_str(&if json { format::edges_json(&e) } else { format::edges_text(&e) });
        }
        Command::Facets => {
            let p = cfg.polytope(cfg.formula_cap())?;
            proper(&p)?;
            cfg.items("facets", p.facet_count()?)?;
            let f = p.facets()?;
            out.push_str(&if json { format::facets_json(&f) } else { format::facets_text(&f) });
        }
        Command::Decompose => {
            let p = cfg.polytope(cfg.formula_cap())?;
            let pieces = p.cayley_decomposition()?;
            out.push_str(&if json { format::decomposition_json(&pieces) } else { format::decomposition_text(&pieces) });
        }
        Command::Slice { layer } => {
            let p = cfg.polytope(cfg.formula_cap())?;
            let layer_set = SHypersimplex::from_parts(p.d(), &[*layer])?;
            cfg.items("vertices", layer_set.vertex_count())?;
            let v = p.slice(*layer)?;
            out.push_str(&if json {
                format::vertex_list_json(&layer_set, &v)
            } else {
                format::vertex_list_text(&layer_set, &v)
            });
        }
        Command::Triangulate { order, max_vertices } => {
            let p = cfg.polytope(cfg.formula_cap())?;
            proper(&p)?;
            let n = p.vertex_count();
            if n > *max_vertices as u128 {
                return Err(Failure::Cap(format!("{n} vertices exceed --max-vertices {max_vertices}")));
            }
            let n = n as usize;
            let order = match order {
                OrderKind::Lex => PullOrder::lex(n),
                OrderKind::Random => PullOrder::random(n, cfg.seed),
            };
            let t = pull(&p, &order, *max_vertices)?;
            let vol = triangulation::triangulation_volume(&t)?;
            out.push_str(&if json { format::triangulation_json(&t, &vol) } else { format::triangulation_text(&t, &vol) });
        }
        Command::Volume => {
            let p = cfg.polytope(cfg.formula_cap())?;
            proper(&p)?;
            let n = p.vertex_count();
            if n > triangulation::MAX_PULL_VERTICES as u128 {
                return Err(Failure::Cap(format!("{n} vertices exceed {}", triangulation::MAX_PULL_VERTICES)));
            }
            let t = pull(&p, &PullOrder::lex(n as usize), triangulation::MAX_PULL_VERTICES)?;
            let vol = triangulation::triangulation_volume(&t)?;
            let fact: BigInt = (1..=p.d()).map(BigInt::from).product();
            let normalized = &vol * BigRational::from_integer(fact);
            if json {
                out.push_str(&format::volume_json(&vol, &normalized, t.len()));
            } else {
                out.push_str(&format!(
                    "volume {}\nd!*volume {}\n{} simplices\n",
                    format::fraction(&vol),
                    format::fraction(&normalized),
                    t.len()
                ));
            }
        }
        Command::Paths => {
            let p = cfg.polytope(cfg.formula_cap())?;
            cfg.items("paths", permutahedra::monotone_path_count(&p))?;
            let paths = permutahedra::monotone_paths(&p);
            out.push_str(&if json { format::paths_json(&paths) } else { format::paths_text(&paths) });
        }
        Command::Mpp => {
            let p = cfg.polytope(cfg.formula_cap())?;
            let pi = permutahedra::monotone_path_polytope(&p);
            out.push_str(&if json { format::permutahedron_json(&pi) } else { format::permutahedron_text(&pi) });
        }
        Command::Tdcount => {
            let d = cfg.dim(cfg.formula_cap())?;
            out.push_str(&format!("{}\n", triangulation::halfcube_pull_count(d)?));
        }
        Command::Extbound => {
            let p = cfg.polytope(cfg.formula_cap())?;
            proper(&p)?;
            let bound = p.extension_upper_bound()?;
            let facets = p.facet_count()?;
            if json {
                out.push_str(&format::extension_bound_json(bound, facets));
            } else {
                let rel = if bound < facets { "<" } else { ">=" };
                out.push_str(&format!("bound {bound} {rel} {facets} facets\n"));
            }
        }
        Command::Verify { against: Against::Oracle, check, orders } => {
            let reports = run_checks(cfg, check, *orders)?;
            let ok = reports.iter().all(CheckReport::passed);
            if json {
                #[derive(Serialize)]
                struct Doc<'a> {
                    name: &'a str,
                    passed: bool,
                    cases: usize,
                    failures: &'a [String],
                    notes: &'a [String],
                }
                let docs: Vec<Doc> = reports
                    .iter()
                    .map(|r| Doc {
                        name: &r.name,
                        passed: r.passed(),
                        cases: r.cases,
                        failures: &r.failures,
                        notes: &r.notes,
                    })
                    .collect();
                out.push_str(&json_line(&docs));
            } else {
                for r in &reports {
                    out.push_str(&format!("{r}\n"));
                }
            }
            if !ok {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

/// Pulls with the structural face lattice for halfcubes and the oracle
/// otherwise.
fn pull(p: &SHypersimplex, order: &PullOrder, max_vertices: usize) -> Result<triangulation::Triangulation, Failure> {
    let d = p.d();
    let halfcube = d >= 4 && p.members() == CardinalitySet::even(d)?.members();
    if halfcube {
        let mut faces = HalfcubeFaces::new(d)?;
        return Ok(triangulation::triangulate_with(p, &mut faces, order)?);
    }
    let mut faces = triangulation::OracleFaces::with_limits(
        &triangulation::hypersimplex_points(p),
        max_vertices,
        crate::oracle::OracleCaps::default(),
    )?;
    Ok(triangulation::triangulate_with(p, &mut faces, order)?)
}

/// With `-S`, checks that instance; without it, every proper `S` at `-d`.
/// Minkowski, t(d) and volume checks depend on `d` only.
fn run_checks(cfg: &CliConfig, selected: &[CheckName], orders: u64) -> Result<Vec<CheckReport>, Failure> {
    let want = |c: CheckName| selected.is_empty() || selected.contains(&c);
    let cap = cfg.oracle_cap();
    let d = cfg.dim(cap)?;
    let instances = match cfg.s {
        Some(_) => vec![cfg.polytope(cap)?],
        None => verify::proper_sets(d)?,
    };
    let mut reports = Vec::new();
    let per_instance = [
        (CheckName::Edges, "edges"),
        (CheckName::Facets, "facets"),
        (CheckName::Slices, "slices"),
        (CheckName::Fiber, "fiber"),
    ];
    for (name, label) in per_instance {
        if !want(name) {
            continue;
        }
        let mut total = CheckReport::new(format!("{label} d={d} ({} sets)", instances.len()));
        for p in &instances {
            let needs_proper = name != CheckName::Fiber;
            if needs_proper && !(p.is_proper() && d >= 2) {
                continue;
            }
            total.merge(match name {
                CheckName::Edges => verify::verify_edges(p)?,
                CheckName::Facets => verify::verify_facets(p)?,
                CheckName::Slices => verify::verify_slices(p)?,
                _ => verify::verify_fiber(p, cap)?,
            });
        }
        reports.push(total);
    }
    if want(CheckName::Minkowski) {
        reports.push(verify::verify_minkowski(d.min(4), 3)?);
    }
    if want(CheckName::Tdcount) && d >= 3 {
        reports.push(verify::verify_tdcount(d, orders)?);
    }
    if want(CheckName::Volumes) {
        if d > triangulation::VOLUME_MAX_D {
            return Err(Failure::Cap(format!("volume checks at d = {d} (limit {})", triangulation::VOLUME_MAX_D)));
        }
        reports.push(verify::verify_volumes(d)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("shyp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_invocations() {
        assert_eq!(call(&["tdcount", "-d", "5"]).1, "51\n");
        assert_eq!(call(&["mpp", "-d", "4", "-S", "0,2,4"]).1, "{\"p\":[2,2,1,1],\"num_vertices\":6}\n");
        let (code, out, _) = call(&["facets", "-d", "5", "-S", "0,2,4", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 26);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["facets", "-d", "3", "-S", "1"]).0, EXIT_BAD_ARGS);
        assert_eq!(call(&["frobnicate"]).0, EXIT_BAD_ARGS);
        assert_eq!(call(&["vertices", "-d", "3", "-S", "x"]).0, EXIT_BAD_ARGS);
        assert_eq!(call(&["vertices", "-d", "13", "-S", "all"]).0, EXIT_CAP);
        assert_eq!(call(&["verify", "-d", "6", "-S", "even"]).0, EXIT_CAP);
        assert_eq!(call(&["paths", "-d", "10", "-S", "all"]).0, EXIT_CAP);
    }

    #[test]
    fn shorthands_and_text() {
        let (code, out, _) = call(&["vertices", "-d", "3", "-S", "even", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "d=3 S=0,2\n0 0 0\n1 1 0\n1 0 1\n0 1 1\n");
        let (_, out, _) = call(&["extbound", "-d", "5", "-S", "even", "--format", "text"]);
        assert_eq!(out, "bound 20 < 26 facets\n");
    }

    #[test]
    fn triangulate_is_deterministic() {
        let a = call(&["triangulate", "-d", "4", "-S", "even", "--order", "random", "--seed", "3"]);
        let b = call(&["triangulate", "-d", "4", "-S", "even", "--order", "random", "--seed", "3"]);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a.1).unwrap();
        assert_eq!(v["count"], 8);
        assert_eq!(v["volume"], "2/3");
    }

    #[test]
    fn verify_small_instance() {
        let (code, out, _) = call(&["verify", "-d", "3", "-S", "0,2,3", "--format", "text"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    }
}
