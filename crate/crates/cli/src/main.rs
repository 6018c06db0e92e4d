//! Batch front-end: verifiers, balls of the curve complex, map checks, catalogue sweeps and
//! exports. Exit codes: 0 pass, 1 mathematical falsification, 2 usage, 3 resource limit.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use braidlab::braid::BraidWord;
use braidlab::complex::{
    build_ball_partial, check_lemma, check_superinjective, induced_map, search_swap_control, standard_generators, Ball, BallRecord, LemmaMode, LemmaOutcome, MapRecord, VertexMap, DEFAULT_VERTEX_CAP,
};
use braidlab::curve::Curve;
use braidlab::framed::{verify_generalized_lantern, verify_iota_identities};
use braidlab::hom::endo::engine_z_exponent;
use braidlab::hom::*;
use braidlab::report::{Certificate, SCHEMA_VERSION};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

const VERTEX_CAP_ENV: &str = "BRAIDLAB_VERTEX_CAP";

#[derive(Parser)]
#[command(name = "braidlab", version, about = "Exact verification workbench for braid groups and curve complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verifier and write its certificate.
    Verify(VerifyArgs),
    /// Build a ball of the curve complex of the punctured disk.
    Ball(BallArgs),
    /// Check a candidate vertex map on a ball.
    CheckMap(CheckMapArgs),
    /// Sweep transvection parameters of the injection catalogue.
    Catalogue(CatalogueArgs),
    /// Export graphs and map files.
    Export(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lantern,
    Iota,
    Xi1,
    XiTop,
    DualOracle,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    /// Size parameter (holes minus one, or punctures minus one).
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Braid word (strands 2..=n+1 only) realizing the mapping class for `xi1`.
    #[arg(long, default_value = "s2 s3^-1 s2")]
    braid: String,
    /// Orientation sign of the mapping class for `xi1`.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    epsilon: i64,
    /// Use the extensional class swapping puncture 1 with the outer boundary for `xi1`.
    #[arg(long)]
    swap_outer: bool,
    /// Fault injection for `xi1`: the cap sends T_d1 to z instead of deleting it.
    #[arg(long)]
    corrupt: bool,
    /// Number of word pairs for `dual-oracle`.
    #[arg(long, default_value_t = 10_000)]
    pairs: usize,
    /// Maximal word length for `dual-oracle`.
    #[arg(long, default_value_t = 40)]
    max_len: usize,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Certificate path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct BallArgs {
    /// Number of punctures of the disk.
    #[arg(long)]
    punctures: usize,
    #[arg(long)]
    radius: usize,
    /// Seed curve `i-j` or `i-j@<braid word>`; repeatable. Defaults to `1-2`.
    #[arg(long = "seed-curve")]
    seeds: Vec<String>,
    /// Overrides the vertex cap (also read from BRAIDLAB_VERTEX_CAP).
    #[arg(long)]
    vertex_cap: Option<usize>,
    /// Ball file path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the disjointness graph in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Superinjective,
    Sides,
    Ktype,
    Adjacency,
}

#[derive(clap::Args)]
struct CheckMapArgs {
    #[arg(long)]
    ball: PathBuf,
    #[arg(long)]
    map: PathBuf,
    /// Checks to run; all of them when absent.
    #[arg(long = "mode", value_enum)]
    modes: Vec<Mode>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    B,
    Pure,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::Pure => Family::Pure,
        }
    }
}

#[derive(clap::Args)]
struct CatalogueArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Inclusive range `lo..hi` for `t` (type A, and every `t_ij` of the pure grid).
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    t: String,
    /// Inclusive range for `u` (type B).
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    u: String,
    /// Inclusive range for `v` (type B).
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    v: String,
    /// Explicit pure parameter vector `t12,t13,...`; repeatable. Replaces the grid.
    #[arg(long = "tvec", allow_hyphen_values = true)]
    tvecs: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ExportArgs {
    #[command(subcommand)]
    what: ExportWhat,
}

#[derive(Subcommand)]
enum ExportWhat {
    /// DOT graph of a ball file.
    BallDot {
        #[arg(long)]
        ball: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The map induced by a braid on a ball file.
    InducedMap {
        #[arg(long)]
        ball: PathBuf,
        #[arg(long)]
        braid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The identity map with two images exchanged so that superinjectivity fails.
    SwapControl {
        #[arg(long)]
        ball: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The injection graph with its index table, optionally answering a reachability query.
    InjectionGraph {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        /// Skip the coset enumeration of indices.
        #[arg(long)]
        no_enumerate: bool,
        /// `FROM,TO` node names.
        #[arg(long)]
        query: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

/// Outcome of a command, mapped onto the exit code.
enum Failure {
    Falsified(String),
    Usage(String),
    Resource(String),
}

impl From<braidlab::Error> for Failure {
    fn from(e: braidlab::Error) -> Self {
        match e {
            braidlab::Error::VertexCapExceeded { .. } => Failure::Resource(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

type Outcome = Result<(), Failure>;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    tool: Tool,
    invocation: &'a [String],
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct Tool {
    name: &'static str,
    version: &'static str,
    core_version: &'static str,
}

fn envelope<'a, T: Serialize>(invocation: &'a [String], body: T) -> Envelope<'a, T> {
    Envelope {
        schema_version: SCHEMA_VERSION,
        tool: Tool { name: "braidlab", version: env!("CARGO_PKG_VERSION"), core_version: braidlab::VERSION },
        invocation,
        body,
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, &text)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

#[derive(Serialize)]
struct CertificateBody<'a> {
    certificate: &'a Certificate,
}

fn verify(args: &VerifyArgs, inv: &[String]) -> Outcome {
    let cert = match args.target {
        Target::Lantern => verify_generalized_lantern(args.n)?,
        Target::Iota => verify_iota_identities(args.n)?,
        Target::Xi1 => {
            let s = args.n + 1;
            let f = if args.swap_outer {
                let a = Curve::standard(s, 2, s)?;
                let b = Curve::standard(s, 2, 3)?;
                let delta = (1..=s + 1).map(|l| if l == 1 { s + 1 } else if l == s + 1 { 1 } else { l }).collect();
                MappingClassSpec::table(s, vec![(a.clone(), a), (b.clone(), b)], args.epsilon, delta)?
            } else {
                MappingClassSpec::geometric(BraidWord::parse(s, &args.braid)?, args.epsilon)?
            };
            let mode = if args.corrupt { CapMode::Corrupted } else { CapMode::Exact };
            xi1_formula_check(args.n, &f, mode)?
        }
        Target::XiTop => xi_top_counterexample(args.n)?,
        Target::DualOracle => {
            let rep = braidlab::braid::oracle::dual_oracle(args.pairs, args.max_len, args.seed)?;
            let mut c = Certificate::new("Garside normal form against the Artin action");
            c.push(
                "agreement",
                format!("both deciders agree on {} random pairs of length <= {}", rep.pairs, rep.max_len),
                format!("{} disagreements", rep.disagreements),
                "0 disagreements",
                rep.disagreements == 0,
            );
            c.note(format!("seed {}, {} equal pairs", rep.seed, rep.equal_pairs));
            if let Some((a, b)) = &rep.witness {
                c.note(format!("first disagreement: {a} vs {b}"));
            }
            c
        }
    };
    emit_json(args.out.as_deref(), &envelope(inv, CertificateBody { certificate: &cert }))?;
    let failed: Vec<String> = cert.failures().map(|f| format!("{}: {} vs {}", f.name, f.lhs, f.rhs)).collect();
    eprintln!("{}: {} items, {} failing", cert.title, cert.items.len(), failed.len());
    for line in &cert.notes {
        eprintln!("  {line}");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Falsified(failed.join("\n")))
    }
}

fn parse_seed(s: usize, text: &str) -> anyhow::Result<Curve> {
    let (range, conj) = match text.split_once('@') {
        Some((r, w)) => (r, BraidWord::parse(s, w)?),
        None => (text, BraidWord::identity(s)?),
    };
    let (i, j) = range.split_once('-').with_context(|| format!("seed `{text}` must look like i-j or i-j@word"))?;
    let (i, j) = (i.trim().parse()?, j.trim().parse()?);
    Ok(Curve::from_parts(s, (i, j), conj)?)
}

fn vertex_cap(flag: Option<usize>) -> anyhow::Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(VERTEX_CAP_ENV) {
        Ok(v) => v.trim().parse().with_context(|| format!("{VERTEX_CAP_ENV}={v} is not a number")),
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

fn ball(args: &BallArgs) -> Outcome {
    let s = args.punctures;
    let seeds = if args.seeds.is_empty() {
        vec![Curve::standard(s, 1, 2)?]
    } else {
        args.seeds.iter().map(|t| parse_seed(s, t)).collect::<anyhow::Result<Vec<_>>>()?
    };
    let cap = vertex_cap(args.vertex_cap)?;
    let ball = build_ball_partial(s, &seeds, &standard_generators(s)?, args.radius, cap)?;
    emit_json(args.out.as_deref(), &ball.to_record())?;
    if let Some(dot) = &args.dot {
        emit(Some(dot), &ball.to_dot())?;
    }
    let meta = ball.meta();
    eprintln!("{} vertices, {} edges, layers {:?}", ball.len(), ball.edges().len(), meta.layer_sizes);
    if meta.truncated {
        return Err(Failure::Resource(format!("vertex cap {cap} reached; the ball file is marked truncated")));
    }
    Ok(())
}

fn load_ball(path: &Path) -> Result<Ball, Failure> {
    let rec: BallRecord = read_json(path)?;
    Ok(Ball::from_record(&rec)?)
}

#[derive(Serialize)]
struct CheckReport {
    pass: bool,
    superinjectivity: braidlab::complex::SuperinjectivityReport,
    lemmas: Vec<LemmaOutcome>,
}

fn check_map(args: &CheckMapArgs, inv: &[String]) -> Outcome {
    let ball = load_ball(&args.ball)?;
    let rec: MapRecord = read_json(&args.map)?;
    let map = VertexMap::from_record(&ball, &rec)?;
    let modes = if args.modes.is_empty() {
        vec![Mode::Superinjective, Mode::Sides, Mode::Ktype, Mode::Adjacency]
    } else {
        args.modes.clone()
    };
    let si = check_superinjective(&ball, &map)?;
    let mut pass = !modes.contains(&Mode::Superinjective) || si.pass;
    let mut lemmas = vec![];
    for m in modes {
        let lm = match m {
            Mode::Superinjective => continue,
            Mode::Sides => LemmaMode::Sides,
            Mode::Ktype => LemmaMode::Ktype,
            Mode::Adjacency => LemmaMode::Adjacency,
        };
        let out = check_lemma(&ball, &map, lm)?;
        pass &= out.is_pass();
        lemmas.push(out);
    }
    let witness = si.witness.clone();
    emit_json(args.out.as_deref(), &envelope(inv, CheckReport { pass, superinjectivity: si, lemmas }))?;
    if pass {
        eprintln!("map passes every requested check on {} vertices", ball.len());
        Ok(())
    } else {
        let detail = match witness {
            Some(w) => format!(
                "witness pair ({}, {}): disjoint before {}, after {}",
                w.u, w.v, w.disjoint_before, w.disjoint_after
            ),
            None => "a lemma checker reported a witness".into(),
        };
        Err(Failure::Falsified(detail))
    }
}

fn parse_range(text: &str) -> anyhow::Result<Vec<i64>> {
    let (lo, hi) = text.split_once("..").with_context(|| format!("range `{text}` must look like lo..hi"))?;
    let hi = hi.trim_start_matches('=');
    let (lo, hi): (i64, i64) = (lo.trim().parse()?, hi.trim().parse()?);
    anyhow::ensure!(lo <= hi, "empty range `{text}`");
    Ok((lo..=hi).collect())
}

const MAX_ROWS: usize = 20_000;
const ENGINE_MAX_N: usize = 5;

fn catalogue(args: &CatalogueArgs) -> Outcome {
    let family: Family = args.family.into();
    let n = args.n;
    let params: Vec<TransvectionParams> = match family {
        Family::A => parse_range(&args.t)?.into_iter().map(|t| TransvectionParams::A { t }).collect(),
        Family::B => {
            let (us, vs) = (parse_range(&args.u)?, parse_range(&args.v)?);
            us.iter().flat_map(|&u| vs.iter().map(move |&v| TransvectionParams::B { u, v })).collect()
        }
        Family::Pure => {
            if args.tvecs.is_empty() {
                let ts = parse_range(&args.t)?;
                let count = (n + 1) * n / 2;
                let rows = ts.len().checked_pow(count as u32).unwrap_or(usize::MAX);
                if rows > MAX_ROWS {
                    return Err(Failure::Usage(format!("pure grid has {rows} rows (limit {MAX_ROWS}); use --tvec")));
                }
                let mut grid: Vec<Vec<i64>> = vec![vec![]];
                for _ in 0..count {
                    grid = grid.into_iter().flat_map(|p| ts.iter().map(move |&t| [p.clone(), vec![t]].concat())).collect();
                }
                grid.into_iter().map(|t| TransvectionParams::Pure { t }).collect()
            } else {
                args.tvecs
                    .iter()
                    .map(|s| {
                        let t = s.split(',').map(|x| x.trim().parse::<i64>()).collect::<Result<Vec<_>, _>>()?;
                        Ok(TransvectionParams::Pure { t })
                    })
                    .collect::<anyhow::Result<Vec<_>>>()?
            }
        }
    };
    let f = MappingClassSpec::identity(n + 1)?;
    let mut out = String::from("family\tn\tparams\texponent\tclass\tengine\n");
    let mut bad = vec![];
    for p in &params {
        let c = transvection_classify(family, n, p)?;
        let engine = if n <= ENGINE_MAX_N {
            let spec = catalogue_injection(family, n, &f, p)?;
            let ok = check_homomorphism(&spec)?.is_none() && engine_z_exponent(&spec)? == Some(c.exponent);
            if !ok {
                bad.push(p.to_string());
            }
            if ok { "verified" } else { "MISMATCH" }
        } else {
            "skipped"
        };
        out.push_str(&format!("{}\t{n}\t{}\t{}\t{}\t{engine}\n", family, c.params, c.exponent, c.class));
    }
    if family == Family::B {
        let l = b_lattice(n);
        out.push_str(&format!(
            "# automorphism lattice nu+n(n-1)v=0 generated by (u,v)=({},{}); z -> z^-1 {}\n",
            l.generator.0,
            l.generator.1,
            if l.inverse_z_solvable { "solvable" } else { "unsolvable: n does not divide -2" }
        ));
    }
    emit(args.out.as_deref(), &out)?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Falsified(format!("engine disagrees with the formula for {bad:?}")))
    }
}

fn export(args: &ExportArgs, inv: &[String]) -> Outcome {
    match &args.what {
        ExportWhat::BallDot { ball, out } => {
            let b = load_ball(ball)?;
            emit(out.as_deref(), &b.to_dot())?;
        }
        ExportWhat::InducedMap { ball, braid, out } => {
            let b = load_ball(ball)?;
            let g = BraidWord::parse(b.strands(), braid)?;
            emit_json(out.as_deref(), &induced_map(&g, &b)?.to_record())?;
        }
        ExportWhat::SwapControl { ball, out } => {
            let b = load_ball(ball)?;
            let (map, [u, v, w]) = search_swap_control(&b)
                .ok_or_else(|| Failure::Usage("ball has no disjoint/meeting triple to swap".into()))?;
            eprintln!("images of vertices {v} and {w} exchanged ({u} is disjoint from {v} but meets {w})");
            emit_json(out.as_deref(), &map.to_record())?;
        }
        ExportWhat::InjectionGraph { m, format, no_enumerate, query, out } => {
            let g = injection_graph(*m, !no_enumerate)?;
            if let Some(q) = query {
                let (a, b) = q.split_once(',').ok_or_else(|| Failure::Usage("query must be FROM,TO".into()))?;
                let exists = g.injection_exists(a.trim(), b.trim())?;
                eprintln!("injection {} -> {}: {}", a.trim(), b.trim(), if exists { "yes" } else { "no" });
            }
            for node in &g.nodes {
                if let (Some(f), Some(e)) = (node.index, node.enumerated_index) {
                    if f != e {
                        return Err(Failure::Falsified(format!("{}: formula {f}, enumeration {e}", node.name)));
                    }
                }
            }
            match format {
                GraphFormat::Dot => emit(out.as_deref(), &g.to_dot())?,
                GraphFormat::Json => {
                    #[derive(Serialize)]
                    struct Body<'a> {
                        graph: &'a InjectionGraph,
                    }
                    emit_json(out.as_deref(), &envelope(inv, Body { graph: &g }))?
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let invocation: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(a) => verify(a, &invocation),
        Command::Ball(a) => ball(a),
        Command::CheckMap(a) => check_map(a, &invocation),
        Command::Catalogue(a) => catalogue(a),
        Command::Export(a) => export(a, &invocation),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Falsified(msg)) => {
            eprintln!("falsified: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(3)
        }
    }
}
