use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use simplext::biclique::extension_report;
use simplext::closure::{closure, cover_lower_bound, sample_random_01, CoverMode, SampleConfig};
use simplext::construct::{
    build_gon_extension, disjunctive_extension, disjunctive_simplicity, reflection_simplicity, Halfspace,
};
use simplext::io::{
    from_json, matching_from_json, to_json, DagJson, ExtensionJson, FamilyDescriptor, GraphJson, NeighborTraceJson,
    PolytopeJson, WitnessJson,
};
use simplext::matching::three_common_neighbor;
use simplext::polytope::{enumerate_vertices, is_simple, skeleton, VPolytope};
use simplext::rational::parse_rat;
use simplext::{Budget, Error, Result, SkeletonGraph};

/// Simple-extension constructions, certificates and lower bounds.
///
/// Budgets come from the SIMPLEXT_BUDGET environment variable: a plain
/// integer, or `key=value` pairs such as `pairs=100000,exact_nodes=40`.
#[derive(Parser)]
#[command(name = "simplext", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an extension and write it as JSON.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Build a family or polytope skeleton.
    #[command(subcommand)]
    Skeleton(SkeletonCmd),
    /// Lower bound on the facets of any simple extension.
    Lowerbound(LowerboundArgs),
    /// Closure of a seed set in a graph.
    Closure(ClosureArgs),
    /// Check the biclique conditions of an extension witness.
    VerifyExtension(VerifyArgs),
    /// A perfect matching adjacent to three given ones.
    CommonNeighbor(CommonNeighborArgs),
    /// Skeleton completeness of random 0/1 polytopes.
    #[command(name = "sample-01")]
    Sample01(SampleArgs),
}

#[derive(Args)]
struct OutArg {
    /// Write the JSON certificate here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Reflection of an H-polytope in the hyperplane of `a·x <= beta`.
    Reflect {
        polytope: PathBuf,
        /// Comma-separated normal, rationals allowed.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Also enumerate the extension and compare with the prediction.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Iterated reflections giving the regular 2^k-gon.
    Gon {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Disjunctive extension of the hull of two V-polytopes.
    Disjunction {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand)]
enum SkeletonCmd {
    Hypersimplex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    SpanningTree {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    PerfectMatching {
        #[arg(long)]
        nodes: usize,
        #[command(flatten)]
        out: OutArg,
    },
    Flow {
        #[arg(long)]
        dag: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Skeleton of a polytope given in V or H form.
    Polytope {
        polytope: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Hypersimplex,
    SpanningTree,
    PerfectMatching,
    Flow,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Singleton shortcut, then isolated-sets degree bound, then exact.
    Auto,
    Exact,
    Singleton,
    Isolated,
}

#[derive(Args)]
struct LowerboundArgs {
    #[arg(long, conflicts_with_all = ["graph", "descriptor"])]
    family: Option<FamilyKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long)]
    dag: Option<PathBuf>,
    /// Graph JSON with `adjacency` or `edges`.
    #[arg(long, conflicts_with = "descriptor")]
    graph: Option<PathBuf>,
    /// Family descriptor JSON.
    #[arg(long)]
    descriptor: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct ClosureArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Comma-separated 0-based node ids.
    #[arg(long)]
    seed: String,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct VerifyArgs {
    witness: PathBuf,
    /// Leave this facet of Q out of the covering.
    #[arg(long)]
    drop_facet: Option<usize>,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct CommonNeighborArgs {
    m1: PathBuf,
    m2: PathBuf,
    m3: PathBuf,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    vertices: usize,
    #[arg(long, default_value_t = 0.3)]
    sigma: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutArg,
}

/// Failures of the command line itself, on top of library errors.
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 2,
            Failure::Lib(e) => match e {
                Error::TooLarge(_) => 3,
                Error::ModeInapplicable(_) => 4,
                Error::ToleranceFailure(_) | Error::InternalInvariantViolation(_) => 1,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn read_json<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> std::result::Result<T, Failure> {
    from_json(&read_file(path)?).map_err(|e| Failure::Lib(Error::InvalidInput(format!("{}: {e}", path.display()))))
}

fn write_out<T: Serialize>(out: &OutArg, value: &T) -> CliResult {
    if let Some(path) = &out.out {
        let mut text = to_json(value);
        text.push('\n');
        fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
        println!("certificate written to {}", path.display());
    }
    Ok(())
}

fn parse_rat_list(s: &str) -> Result<Vec<simplext::rational::Rat>> {
    s.split(',').map(|x| parse_rat(x.trim())).collect()
}

fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad node id {x:?}"))))
        .collect()
}

fn load_vpolytope(path: &Path, budget: &Budget) -> std::result::Result<VPolytope, Failure> {
    match read_json::<PolytopeJson>(path)? {
        PolytopeJson::V(v) => Ok(v.to_polytope()?),
        PolytopeJson::H(h) => Ok(enumerate_vertices(&h.to_polytope()?, budget)?.0),
    }
}

#[derive(Serialize)]
struct ConstructOutput<T: Serialize> {
    #[serde(flatten)]
    extension: ExtensionJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<T>,
}

fn cmd_construct(cmd: ConstructCmd, budget: &Budget) -> CliResult {
    match cmd {
        ConstructCmd::Reflect { polytope, a, beta, verify, out } => {
            let p = match read_json::<PolytopeJson>(&polytope)? {
                PolytopeJson::H(h) => h.to_polytope()?,
                PolytopeJson::V(_) => return Err(Error::InvalidInput("reflect needs an H-polytope".into()).into()),
            };
            let h = Halfspace::new(parse_rat_list(&a)?, parse_rat(&beta)?)?;
            let report = reflection_simplicity(&p, &h, verify, budget)?;
            let ext = simplext::construct::reflection_extension(&p, &h)?;
            println!(
                "reflection extension: {} inequalities in dimension {}",
                ext.q.inequalities.len(),
                ext.q.ambient_dim
            );
            println!("face case: {:?}, P1 simple: {}", report.face, report.p1_simple);
            println!("predicted simple={}", report.simple);
            if let Some(e) = report.enumerated {
                println!("enumerated simple={e} ({})", if e == report.simple { "agrees" } else { "DISAGREES" });
                if e != report.simple {
                    return Err(Error::InternalInvariantViolation("prediction and enumeration differ".into()).into());
                }
            }
            write_out(&out, &ConstructOutput { extension: (&ext).into(), verification: verify.then_some(report) })
        }
        ConstructCmd::Gon { k, verify, out } => {
            let g = build_gon_extension(k)?;
            let r = &g.report;
            println!("regular {}-gon extension: {} inequalities in dimension {}", 1u64 << k, r.inequality_count, k + 2);
            if verify {
                println!("{} facets, {} vertices, simple={}", r.facet_count, r.vertex_count, r.simple);
                println!("projected vertices match the polygon: {} (max error {:e})", r.vertices_match, r.max_vertex_error);
            }
            write_out(&out, &ConstructOutput { extension: (&g.extension).into(), verification: verify.then_some(r) })
        }
        ConstructCmd::Disjunction { first, second, verify, out } => {
            let p1 = load_vpolytope(&first, budget)?;
            let p2 = load_vpolytope(&second, budget)?;
            let ext = disjunctive_extension(&p1, &p2, budget)?;
            let predicted = disjunctive_simplicity(&p1, &p2)?;
            println!(
                "disjunctive extension: {} inequalities, {} equations in dimension {}",
                ext.q.inequalities.len(),
                ext.q.equations.len(),
                ext.q.ambient_dim
            );
            println!("predicted simple={predicted}");
            let mut verification = None;
            if verify {
                let (_, inc) = enumerate_vertices(&ext.q, budget)?;
                let enumerated = is_simple(&inc);
                println!("enumerated simple={enumerated}");
                if enumerated != predicted {
                    return Err(Error::InternalInvariantViolation("prediction and enumeration differ".into()).into());
                }
                verification = Some(enumerated);
            }
            write_out(&out, &ConstructOutput { extension: (&ext).into(), verification })
        }
    }
}

fn describe_graph(g: &SkeletonGraph) {
    println!("{} nodes, {} edges, max degree {}", g.node_count(), g.edge_count(), g.max_degree());
    println!("complete: {}", g.is_complete());
    println!("fingerprint {}", g.fingerprint());
}

fn cmd_skeleton(cmd: SkeletonCmd, budget: &Budget) -> CliResult {
    let (desc, out) = match cmd {
        SkeletonCmd::Hypersimplex { n, k, out } => (FamilyDescriptor::Hypersimplex { n, k }, out),
        SkeletonCmd::SpanningTree { n, out } => (FamilyDescriptor::SpanningTree { n }, out),
        SkeletonCmd::PerfectMatching { nodes, out } => (FamilyDescriptor::PerfectMatching { nodes }, out),
        SkeletonCmd::Flow { dag, out } => (FamilyDescriptor::Flow { dag: read_json::<DagJson>(&dag)? }, out),
        SkeletonCmd::Polytope { polytope, out } => {
            let v = load_vpolytope(&polytope, budget)?;
            let g = skeleton(&v, budget)?;
            describe_graph(&g);
            return write_out(&out, &GraphJson::from(&g));
        }
    };
    let sk = desc.skeleton(budget)?;
    describe_graph(&sk.graph);
    write_out(&out, &GraphJson::from(&sk.graph))
}

fn lowerbound_graph(args: &LowerboundArgs, budget: &Budget) -> std::result::Result<SkeletonGraph, Failure> {
    if let Some(path) = &args.graph {
        return Ok(read_json::<GraphJson>(path)?.to_graph()?);
    }
    let missing = |flag: &str| Failure::Lib(Error::InvalidInput(format!("--{flag} is required for this family")));
    let desc = match (args.family, &args.descriptor) {
        (_, Some(path)) => read_json::<FamilyDescriptor>(path)?,
        (Some(FamilyKind::Hypersimplex), _) => FamilyDescriptor::Hypersimplex {
            n: args.n.ok_or_else(|| missing("n"))?,
            k: args.k.ok_or_else(|| missing("k"))?,
        },
        (Some(FamilyKind::SpanningTree), _) => FamilyDescriptor::SpanningTree { n: args.n.ok_or_else(|| missing("n"))? },
        (Some(FamilyKind::PerfectMatching), _) => {
            FamilyDescriptor::PerfectMatching { nodes: args.nodes.ok_or_else(|| missing("nodes"))? }
        }
        (Some(FamilyKind::Flow), _) => {
            FamilyDescriptor::Flow { dag: read_json(args.dag.as_deref().ok_or_else(|| missing("dag"))?)? }
        }
        (None, None) => {
            return Err(Error::InvalidInput("one of --family, --graph or --descriptor is required".into()).into())
        }
    };
    Ok(desc.skeleton(budget)?.graph)
}

fn cmd_lowerbound(args: LowerboundArgs, budget: &Budget) -> CliResult {
    let g = lowerbound_graph(&args, budget)?;
    let lb = match args.mode {
        ModeArg::Exact => cover_lower_bound(&g, CoverMode::Exact, budget)?,
        ModeArg::Singleton => cover_lower_bound(&g, CoverMode::SingletonShortcut, budget)?,
        ModeArg::Isolated => cover_lower_bound(&g, CoverMode::DegreeBound, budget)?,
        ModeArg::Auto => match cover_lower_bound(&g, CoverMode::SingletonShortcut, budget) {
            Err(Error::ModeInapplicable(_)) => match cover_lower_bound(&g, CoverMode::DegreeBound, budget) {
                Err(Error::ModeInapplicable(_)) => cover_lower_bound(&g, CoverMode::Exact, budget)?,
                other => other?,
            },
            other => other?,
        },
    };
    println!("graph: {} nodes, {} edges, fingerprint {}", g.node_count(), g.edge_count(), g.fingerprint());
    match lb.mode {
        CoverMode::SingletonShortcut => println!("every pair of nodes closes to the full node set"),
        CoverMode::DegreeBound => {
            println!("all proper closed sets isolated");
            if let Some(u) = lb.max_degree_node {
                println!("node {u} has maximum degree {}", g.degree(u));
            }
        }
        CoverMode::Exact => {
            if let Some(cover) = &lb.cover {
                println!("optimal cover by {} maximal proper closed sets:", cover.len());
                for set in cover {
                    println!("  {set:?}");
                }
            }
        }
    }
    if let Some(sweep) = &lb.sweep {
        println!("{}", sweep.conclusion());
    }
    println!("lower bound ({}): {}", mode_name(lb.mode), lb.bound);
    write_out(&args.out, &lb)
}

fn mode_name(mode: CoverMode) -> &'static str {
    match mode {
        CoverMode::Exact => "exact cover",
        CoverMode::SingletonShortcut => "singleton shortcut",
        CoverMode::DegreeBound => "degree bound",
    }
}

fn cmd_closure(args: ClosureArgs) -> CliResult {
    let g = read_json::<GraphJson>(&args.graph)?.to_graph()?;
    let cert = closure(&g, &parse_index_list(&args.seed)?)?;
    println!("closure after {} steps: {:?}", cert.trace_len, cert.final_set);
    println!("proper: {}, isolated: {}", cert.proper, cert.isolated);
    write_out(&args.out, &cert)
}

fn cmd_verify(args: VerifyArgs, budget: &Budget) -> CliResult {
    let w = read_json::<WitnessJson>(&args.witness)?.to_witness(budget)?;
    let report = extension_report(&w, args.drop_facet, budget)?;
    println!(
        "P: {} vertices, {} faces; Q: {} facets, {} vertices",
        w.lattice.vertex_count(),
        w.lattice.len(),
        w.facet_count(),
        w.q_vertices.len()
    );
    let covering = &report.covering;
    if covering.is_valid() {
        println!("biclique covering valid");
    } else {
        println!(
            "biclique covering violated: {} biclique violations, {} uncovered face-vertex pairs",
            covering.biclique_violations.len(),
            covering.uncovered.len()
        );
        for (face, v) in covering.uncovered.iter().take(10) {
            println!("  uncovered: face {face}, vertex {v}");
        }
    }
    for v in report.facets.iter().filter(|v| !v.passes()) {
        println!("facet {}: {}", v.facet, v.failure().unwrap_or_default());
    }
    println!("{}", report.verdict.as_str());
    println!("Q simple: {}", report.q_simple);
    write_out(&args.out, &report)
}

fn cmd_common_neighbor(args: CommonNeighborArgs) -> CliResult {
    let load = |p: &Path| -> std::result::Result<_, Failure> { Ok(matching_from_json(&read_json::<Vec<[usize; 2]>>(p)?)?) };
    let (m1, m2, m3) = (load(&args.m1)?, load(&args.m2)?, load(&args.m3)?);
    let trace = NeighborTraceJson::from(&three_common_neighbor(&m1, &m2, &m3)?);
    match &trace.matching {
        None => println!("PairwiseAdjacent"),
        Some(pairs) => {
            println!("common neighbor: {pairs:?}");
            println!("{} exchange steps", trace.steps.len());
            if trace.l2_special_case {
                println!("l=2 special case");
            }
        }
    }
    write_out(&args.out, &trace)
}

fn cmd_sample(args: SampleArgs) -> CliResult {
    let mut config = SampleConfig::new(args.dim, args.count, args.vertices);
    config.sigma = args.sigma;
    config.seed = args.seed;
    let report = sample_random_01(config)?;
    println!(
        "{} of {} samples have a complete skeleton ({:.3})",
        report.complete, args.count, report.fraction_complete
    );
    if !report.within_heuristic {
        println!("note: {} vertices exceeds the size heuristic {:.2}", args.vertices, report.heuristic_cap);
    }
    write_out(&args.out, &report)
}

fn run(cli: Cli) -> CliResult {
    let budget = Budget::from_env();
    match cli.command {
        Command::Construct(c) => cmd_construct(c, &budget),
        Command::Skeleton(c) => cmd_skeleton(c, &budget),
        Command::Lowerbound(a) => cmd_lowerbound(a, &budget),
        Command::Closure(a) => cmd_closure(a),
        Command::VerifyExtension(a) => cmd_verify(a, &budget),
        Command::CommonNeighbor(a) => cmd_common_neighbor(a),
        Command::Sample01(a) => cmd_sample(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
