//! Command-line front end: enumeration, invariants, pair verdicts, surveys,
//! cospectral-pair search, and certified coalescence.
//!
//! Data output goes to stdout and is byte-identical across identical
//! invocations; diagnostics go to stderr.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use treespectra::{
    canonical_code, conjecture_verdict, coalesce, cospectrally_rooted, decode_graph6,
    degree_power, distance, emit_table, encode_graph6, enumerate_free_trees,
    enumerate_rooted_trees, find_cospectrally_rooted_pairs, load_cache, rational_from_decimal_str,
    rooted_code, store_cache, survey, with_thread_pool, BigRational, ConjectureId, GapEnclosure,
    MatrixKind, MeasureConfig, RecordStore, RootedTree, TableFormat, TreeGraph,
};

#[derive(Parser)]
#[command(
    name = "treespectra",
    version,
    about = "Exact spectral invariants of trees: enumeration, distance-measure surveys, and cospectral constructions"
)]
struct Cli {
    /// Sigma in the distance transform 1 - exp(-((a-b)/sigma)^2).
    /// Affects reported distances, never verdicts.
    #[arg(long, global = true, default_value_t = 1.0)]
    sigma: f64,

    /// Enclosure width for certified spectral radii (e.g. 1e-12).
    #[arg(long, global = true, default_value = "1e-12")]
    precision: String,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream all trees on n vertices, one per isomorphism class per line.
    Gen(GenArgs),
    /// Print exact invariants for generated or given trees.
    Invariants(InvariantArgs),
    /// Compare one conjectured distance inequality on a pair of trees.
    Verify(VerifyArgs),
    /// Sweep all tree pairs per vertex count and tabulate counterexamples.
    Survey(SurveyArgs),
    /// List cospectrally rooted pairs of rooted trees on n vertices.
    CospectralSearch(CospectralSearchArgs),
    /// Coalesce a cospectrally rooted seed pair with an attachment and
    /// certify the resulting pair cospectral.
    Coalesce(CoalesceArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// Enumerate rooted trees instead of free trees.
    #[arg(long)]
    rooted: bool,
    /// Output format per line.
    #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
    format: GenFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Graph6,
    Levels,
}

#[derive(Args)]
struct InvariantArgs {
    /// Print invariants for every tree on n vertices.
    #[arg(long, conflicts_with = "graph6")]
    n: Option<usize>,
    /// Print invariants for a single graph6-encoded tree.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// The two trees, graph6-encoded (give the flag twice).
    #[arg(long = "graph6", num_args = 1, action = clap::ArgAction::Append)]
    graph6: Vec<String>,
    /// Which inequality to test.
    #[arg(long)]
    conjecture: String,
}

#[derive(Args)]
struct SurveyArgs {
    /// Smallest vertex count (>= 4).
    #[arg(long)]
    from: usize,
    /// Largest vertex count.
    #[arg(long)]
    to: usize,
    /// Comma-separated conjecture list.
    #[arg(long, value_delimiter = ',', default_value = "cj1,cj2,cj3")]
    conjectures: Vec<String>,
    /// Table output format: markdown | csv | json.
    #[arg(long, default_value = "markdown")]
    format: String,
    /// Invariant cache file (JSON lines), read if present and rewritten.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct CospectralSearchArgs {
    /// Vertex count of the rooted trees.
    #[arg(long)]
    n: usize,
    /// Matrix kind: adjacency | laplacian | signless-laplacian.
    #[arg(long, default_value = "laplacian")]
    kind: String,
}

#[derive(Args)]
struct CoalesceArgs {
    /// First seed as <graph6>:<root index>.
    #[arg(long)]
    seed_a: String,
    /// Second seed as <graph6>:<root index>.
    #[arg(long)]
    seed_b: String,
    /// Attachment as <graph6>:<root index>.
    #[arg(long)]
    attach: String,
    /// Matrix kind the seeds are cospectrally rooted for.
    #[arg(long, default_value = "laplacian")]
    kind: String,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    let width: BigRational = rational_from_decimal_str(&cli.precision)
        .with_context(|| format!("--precision '{}' is not a decimal literal", cli.precision))?;
    if width <= BigRational::new(0.into(), 1.into()) {
        bail!("--precision must be positive");
    }
    let cfg = MeasureConfig::new(cli.sigma, width)?;
    let threads = cli.threads;
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Invariants(args) => invariants(args, &cfg),
        Command::Verify(args) => verify(args, &cfg),
        Command::Survey(args) => with_thread_pool(threads, || surveys(args, &cfg)),
        Command::CospectralSearch(args) => cospectral_search(args, &cfg),
        Command::Coalesce(args) => coalesce_cmd(args),
    }
}

fn levels_string(levels: &[u32]) -> String {
    levels.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn gen(args: GenArgs) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    if args.rooted {
        for rt in enumerate_rooted_trees(args.n) {
            match args.format {
                GenFormat::Graph6 => {
                    writeln!(out, "{}:{}", encode_graph6(rt.tree()), rt.root())?
                }
                GenFormat::Levels => writeln!(out, "{}", levels_string(&rooted_code(&rt)))?,
            }
        }
    } else {
        for t in enumerate_free_trees(args.n) {
            match args.format {
                GenFormat::Graph6 => writeln!(out, "{}", encode_graph6(&t))?,
                GenFormat::Levels => {
                    writeln!(out, "{}", levels_string(canonical_code(&t).levels()))?
                }
            }
        }
    }
    Ok(())
}

fn coeff_list(p: &treespectra::CharPoly) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn print_invariants(out: &mut impl Write, t: &TreeGraph, cfg: &MeasureConfig) -> Result<()> {
    let r = treespectra::compute_invariants(t, cfg);
    writeln!(
        out,
        "g6={} code={} f2={} lambda1={:.10} q1={:.10} charpoly_a={} charpoly_l={}",
        encode_graph6(t),
        r.code.levels().iter().map(u32::to_string).collect::<Vec<_>>().join(","),
        r.f2,
        r.lambda1.midpoint_f64(),
        r.q1.midpoint_f64(),
        coeff_list(&r.charpoly_a),
        coeff_list(&r.charpoly_l),
    )?;
    Ok(())
}

fn invariants(args: InvariantArgs, cfg: &MeasureConfig) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match (args.n, args.graph6) {
        (Some(n), None) => {
            for t in enumerate_free_trees(n) {
                print_invariants(&mut out, &t, cfg)?;
            }
        }
        (None, Some(code)) => print_invariants(&mut out, &decode_graph6(&code)?, cfg)?,
        _ => bail!("give exactly one of --n or --graph6"),
    }
    Ok(())
}

fn gap_string(g: &GapEnclosure) -> String {
    if g.is_exact() {
        format!("{} (exact)", g.lo)
    } else {
        format!("[{:.12e}, {:.12e}]", g.lo_f64(), g.hi_f64())
    }
}

fn verify(args: VerifyArgs, cfg: &MeasureConfig) -> Result<()> {
    let [a, b] = args.graph6.as_slice() else {
        bail!("verify needs exactly two --graph6 arguments");
    };
    let c: ConjectureId = args.conjecture.parse()?;
    let t1 = decode_graph6(a)?;
    let t2 = decode_graph6(b)?;
    let v = conjecture_verdict(&t1, &t2, c, cfg)?;
    let (lhs_name, rhs_name) = match c {
        ConjectureId::Cj1 => ("q1", "lambda1"),
        ConjectureId::Cj2 => ("F2", "q1"),
        ConjectureId::Cj3 => ("F2", "lambda1"),
    };
    println!("conjecture: {c} (d_{lhs_name} >= d_{rhs_name})");
    println!("{}_gap: {}", lhs_name, gap_string(&v.lhs_gap));
    println!("{}_gap: {}", rhs_name, gap_string(&v.rhs_gap));
    let d = |g: &GapEnclosure| distance(g.midpoint_f64(), 0.0, cfg.sigma);
    println!("d_{}: {:.10}", lhs_name, d(&v.lhs_gap)?);
    println!("d_{}: {:.10}", rhs_name, d(&v.rhs_gap)?);
    println!("verdict: {}", if v.holds { "holds" } else { "counterexample" });
    Ok(())
}

fn surveys(args: SurveyArgs, cfg: &MeasureConfig) -> Result<()> {
    if args.from < 4 || args.from > args.to {
        bail!("survey range must satisfy 4 <= from <= to");
    }
    let format: TableFormat = args.format.parse()?;
    let conjectures: Vec<ConjectureId> = args
        .conjectures
        .iter()
        .map(|s| s.parse())
        .collect::<treespectra::Result<_>>()?;
    let mut store = match &args.cache {
        Some(path) if path.exists() => {
            Some(load_cache(path).with_context(|| format!("loading cache {}", path.display()))?)
        }
        Some(_) => Some(RecordStore::new()),
        None => None,
    };
    let rows = survey(args.from, args.to, &conjectures, cfg, store.as_mut());
    if let (Some(path), Some(store)) = (&args.cache, &store) {
        store_cache(path, store).with_context(|| format!("writing cache {}", path.display()))?;
    }
    print!("{}", emit_table(&rows, format));
    let undecidable: u64 = rows.iter().map(|r| r.undecidable).sum();
    if undecidable > 0 {
        bail!("{undecidable} pair comparisons were undecidable at the precision floor");
    }
    Ok(())
}

fn cospectral_search(args: CospectralSearchArgs, cfg: &MeasureConfig) -> Result<()> {
    let kind: MatrixKind = args.kind.parse()?;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for (a, b) in find_cospectrally_rooted_pairs(args.n, kind) {
        let l1 = treespectra::lambda1(a.tree(), &cfg.root_width);
        let l2 = treespectra::lambda1(b.tree(), &cfg.root_width);
        writeln!(
            out,
            "{}:{} {}:{} lambda1={:.4},{:.4} isomorphic={} adjacency_cospectral={}",
            encode_graph6(a.tree()),
            a.root(),
            encode_graph6(b.tree()),
            b.root(),
            l1.midpoint_f64(),
            l2.midpoint_f64(),
            canonical_code(a.tree()) == canonical_code(b.tree()),
            treespectra::cospectral(a.tree(), b.tree(), MatrixKind::Adjacency)?,
        )?;
    }
    Ok(())
}

fn parse_rooted(s: &str) -> Result<RootedTree> {
    let (g6, root) = s
        .rsplit_once(':')
        .with_context(|| format!("'{s}' is not of the form <graph6>:<root>"))?;
    let root: usize = root.parse().context("root index must be an integer")?;
    Ok(RootedTree::new(decode_graph6(g6)?, root)?)
}

fn coalesce_cmd(args: CoalesceArgs) -> Result<()> {
    let kind: MatrixKind = args.kind.parse()?;
    let a = parse_rooted(&args.seed_a)?;
    let b = parse_rooted(&args.seed_b)?;
    let k = parse_rooted(&args.attach)?;
    if !cospectrally_rooted(&a, &b, kind)? {
        bail!(treespectra::Error::NotCospectrallyRooted);
    }
    let left = coalesce(&a, &k);
    let right = coalesce(&b, &k);
    if !treespectra::cospectral(&left, &right, kind)? {
        bail!(treespectra::Error::CertificationFailure(format!(
            "coalesced pair fails {kind} cospectrality"
        )));
    }
    // f2 printed as a cheap fingerprint of the pair
    println!("{} f2={}", encode_graph6(&left), degree_power(&left, 2));
    println!("{} f2={}", encode_graph6(&right), degree_power(&right, 2));
    Ok(())
}
