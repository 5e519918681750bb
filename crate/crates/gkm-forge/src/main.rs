use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use exact_linalg::Rational;
use gkm::polytope::{graph_from_polytope, Polytope};
use gkm::{
    abbv_integrate, betti_numbers, find_generic, first_chern_map, is_generic, is_positive, isomorphic,
    kirwan_class_test, parse_monomial, twenty_four_rule, validate, AbstractGkmGraph, KirwanOutcome,
};
use gkm_forge::{
    classify_full, describe_kirwan, prepare, render_gkm_dot, render_graph_dot, stage1, verify_fixtures, Bucket, Exec,
    PipelineConfig, XiPolicy,
};
use graph_core::database::{generate_database, read_size, write_database, SIZES};
use graph_core::graph6::{encode_graph6, parse_graph6, parse_graph6_file};
use graph_core::{automorphisms, generate_cubic, DartGraph, GraphJson};
use serde_json::json;
use skeleton::{
    check_k1, check_k2, construct_weights, defect_and_fundamental_system, projection_test, structure_matrix,
    GkmSkeleton, ProjectionVerdict,
};

/// Exit code for a negative verdict (failed fixture, invalid graph, failed test).
const VERDICT_FAILURE: u8 = 1;
/// Exit code for input that cannot be read or parsed.
const MALFORMED: u8 = 3;

/// Marks an error as caused by the input rather than by the program.
#[derive(Debug)]
struct Malformed(String);

impl std::fmt::Display for Malformed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Malformed {}

fn malformed(context: impl std::fmt::Display) -> impl FnOnce(String) -> anyhow::Error {
    move |msg| Malformed(format!("{context}: {msg}")).into()
}

#[derive(Parser)]
#[command(name = "gkm-forge", version, about = "Search and verification tools for positive six-dimensional GKM graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cubic graphs: generation, parsing and the database.
    #[command(subcommand)]
    Graphs(GraphsCmd),
    /// GKM skeletons: labels on the edges of a regular graph.
    #[command(subcommand)]
    Skeleton(SkeletonCmd),
    /// Abstract GKM graphs given as JSON.
    #[command(subcommand)]
    Gkm(GkmCmd),
    /// The classification pipeline.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Lattice polytopes given as vertex lists.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// Prints a GKM graph, graph JSON or graph6 file as DOT.
    Render { file: PathBuf },
    /// Self-checks against the worked examples.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum GraphsCmd {
    /// Prints every connected cubic graph on N vertices in graph6.
    Gen {
        #[arg(long)]
        vertices: usize,
    },
    /// Summarizes every graph in a graph6 file.
    Parse { file: PathBuf },
    #[command(subcommand)]
    Db(DbCmd),
}

#[derive(Subcommand)]
enum DbCmd {
    /// Generates the database files cub04.g6 … cub16.g6.
    Build {
        #[arg(long, env = "GKM_FORGE_DB", default_value = "data/cubic")]
        out: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
    },
}

#[derive(Subcommand)]
enum SkeletonCmd {
    /// Defect, fundamental system, kernel conditions and projection test for one label vector.
    Analyze {
        /// graph6 (first line) or graph JSON.
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated labels in lexicographic edge order.
        #[arg(long)]
        d: String,
    },
}

#[derive(Subcommand)]
enum GkmCmd {
    /// Validates the axioms and reports C1, positivity and Betti numbers.
    Check { file: PathBuf },
    /// Localization integral of a Chern monomial.
    Integrate {
        file: PathBuf,
        #[arg(long, default_value = "c1^3")]
        monomial: String,
    },
    /// The degree-two Kirwan class test.
    KirwanTest {
        file: PathBuf,
        /// Comma-separated generic vector; defaults to the first generic vector found.
        #[arg(long)]
        xi: Option<String>,
    },
}

#[derive(Args)]
struct DbArg {
    #[arg(long, env = "GKM_FORGE_DB", default_value = "data/cubic")]
    db: PathBuf,
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Graphs with labels of defect ≥ 2 satisfying K1.
    Stage1 {
        #[arg(long)]
        x: usize,
        #[command(flatten)]
        db: DbArg,
    },
    /// Both stages over the database, with a resumable cache in the output directory.
    Full {
        #[command(flatten)]
        db: DbArg,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
        /// Comma-separated vertex counts; all sizes by default.
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long, default_value_t = XiPolicy::default().samples)]
        xi_samples: usize,
        /// Disables the data-parallel path.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum PolytopeCmd {
    /// Smoothness, reflexivity and the GKM graph of a lattice polytope.
    Check {
        file: PathBuf,
        /// A GKM graph JSON to compare against the polytope graph.
        #[arg(long)]
        against: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Runs every worked-example fixture.
    Fixtures,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.chain().any(|c| c.is::<Malformed>()) {
                ExitCode::from(MALFORMED)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Malformed(format!("{}: {e}", path.display())).into())
}

fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.split(',').map(|t| t.trim().parse::<i64>().map_err(|e| Malformed(format!("{t:?}: {e}")).into())).collect()
}

fn read_graph(path: &Path) -> Result<DartGraph> {
    let text = read(path)?;
    let shown = path.display();
    if text.trim_start().starts_with('{') {
        GraphJson::parse(&text).map_err(|e| malformed(&shown)(e.to_string()))
    } else {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or_default();
        parse_graph6(line).map_err(|e| malformed(&shown)(e.to_string()))
    }
}

fn read_gkm(path: &Path) -> Result<AbstractGkmGraph> {
    AbstractGkmGraph::parse_json(&read(path)?).map_err(|e| malformed(path.display())(e.to_string()))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON value serializes"));
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Graphs(GraphsCmd::Gen { vertices }) => {
            for g in generate_cubic(vertices).map_err(|e| Malformed(e.to_string()))? {
                println!("{}", encode_graph6(&g));
            }
            Ok(0)
        }
        Command::Graphs(GraphsCmd::Parse { file }) => {
            let graphs = parse_graph6_file(&read(&file)?).map_err(|e| malformed(file.display())(e.to_string()))?;
            for (i, g) in graphs.iter().enumerate() {
                println!(
                    "{}: vertices={} edges={} cubic-connected={} automorphisms={}",
                    i + 1,
                    g.n_vertices(),
                    g.n_edges(),
                    g.is_cubic_connected(),
                    automorphisms(g).len()
                );
            }
            Ok(0)
        }
        Command::Graphs(GraphsCmd::Db(DbCmd::Build { out, max_vertices })) => {
            let db = generate_database(max_vertices);
            write_database(&out, &db)?;
            for (n, graphs) in &db {
                println!("{}: {} graphs", out.join(graph_core::database::file_name(*n)).display(), graphs.len());
            }
            Ok(0)
        }
        Command::Skeleton(SkeletonCmd::Analyze { graph, d }) => analyze_skeleton(&graph, &d),
        Command::Gkm(GkmCmd::Check { file }) => check_gkm(&file),
        Command::Gkm(GkmCmd::Integrate { file, monomial }) => {
            let g = read_gkm(&file)?;
            let m = parse_monomial(&monomial).map_err(|e| Malformed(e.to_string()))?;
            println!("{}", abbv_integrate(&g, &m)?);
            Ok(0)
        }
        Command::Gkm(GkmCmd::KirwanTest { file, xi }) => {
            let g = read_gkm(&file)?;
            let xi = match xi {
                Some(text) => parse_ints(&text)?,
                None => find_generic(&g),
            };
            if !is_generic(&g, &xi) {
                bail!(Malformed(format!("ξ = {xi:?} is not generic for this graph")));
            }
            match kirwan_class_test(&g, &xi)? {
                KirwanOutcome::Pass(classes) => {
                    println!("PASS xi={xi:?}: {} classes", classes.len());
                    for c in classes {
                        println!("  seed {}: {:?}", c.seed, c.values);
                    }
                    Ok(0)
                }
                KirwanOutcome::Fail(f) => {
                    println!("FAIL xi={xi:?}: {}", describe_kirwan(&f));
                    Ok(VERDICT_FAILURE)
                }
            }
        }
        Command::Classify(ClassifyCmd::Stage1 { x, db }) => {
            if !SIZES.contains(&x) {
                bail!(Malformed(format!("X = {x} is not one of {SIZES:?}")));
            }
            let graphs = prepare(x, &read_size(&db.db, x)?)?;
            let found = stage1(&graphs, Exec::default());
            for g in &found {
                println!("{} {} d={:?}", g.source, g.graph, g.witness);
            }
            println!("X={x}: {} of {} graphs", found.len(), graphs.len());
            Ok(0)
        }
        Command::Classify(ClassifyCmd::Full { db, out, workers, sizes, xi_samples, sequential }) => {
            let mut cfg = PipelineConfig::new(db.db);
            if let Some(s) = sizes {
                cfg.sizes = parse_ints(&s)?.into_iter().map(|x| x as usize).collect();
            }
            cfg.out = Some(out.clone());
            cfg.workers = workers;
            cfg.xi.samples = xi_samples;
            if sequential {
                cfg.exec = Exec::Sequential;
            }
            let result = classify_full(&cfg).map_err(|e| match e {
                gkm_forge::ForgeError::Config(msg) => Malformed(msg).into(),
                other => anyhow::Error::from(other),
            })?;
            let r = &result.report;
            println!("stage 1: {:?} (total {})", r.stage1_counts(), r.stage1_counts().iter().sum::<usize>());
            for b in Bucket::ALL {
                println!("{b}: {}", r.bucket(b));
            }
            println!("delta2-pass classes: {}", r.delta2_classes.len());
            for c in &r.delta2_classes {
                println!(
                    "  b2={} c1^3={} |V|={} ({} d={:?})",
                    c.b2, c.c1_cubed, c.vertices, c.representative.source, c.representative.labels
                );
            }
            for f in &r.flags {
                println!("FLAG: {f}");
            }
            println!("report: {}", out.join("report.json").display());
            Ok(if r.flags.is_empty() { 0 } else { VERDICT_FAILURE })
        }
        Command::Polytope(PolytopeCmd::Check { file, against }) => check_polytope(&file, against.as_deref()),
        Command::Render { file } => {
            let text = read(&file)?;
            if let Ok(g) = AbstractGkmGraph::parse_json(&text) {
                print!("{}", render_gkm_dot(&g));
            } else {
                print!("{}", render_graph_dot(&read_graph(&file)?));
            }
            Ok(0)
        }
        Command::Verify(VerifyCmd::Fixtures) => {
            let mut failed = 0;
            for r in verify_fixtures() {
                match r.outcome {
                    Ok(()) => println!("PASS {}", r.name),
                    Err(why) => {
                        failed += 1;
                        println!("FAIL {}: {why}", r.name);
                    }
                }
            }
            Ok(if failed == 0 { 0 } else { VERDICT_FAILURE })
        }
    }
}

fn analyze_skeleton(graph: &Path, d: &str) -> Result<u8> {
    let g = read_graph(graph)?;
    let labels = parse_ints(d)?;
    let s = GkmSkeleton::lexicographic(g, labels).map_err(|e| Malformed(e.to_string()))?;
    let a = structure_matrix(&s);
    let (delta, fs) = defect_and_fundamental_system(&s, &a);
    let mut out = json!({
        "edges": s.ordering().edges(),
        "labels": s.labels(),
        "structure_matrix": a.rows(),
        "defect": delta,
    });
    if let Some(fs) = fs {
        let k1 = check_k1(&fs, &a);
        let (k2, report) = check_k2(&s, &a, &fs);
        out["fundamental_system"] = json!(fs.rows().iter().map(|r| strings(r)).collect::<Vec<_>>());
        out["k1"] = json!(k1);
        out["k2"] = json!(k2);
        out["k2_failing_edges"] = json!(report.failing_edges());
        if k1 && k2 {
            out["constructed"] = match construct_weights(&s, &a, &fs) {
                Ok(g) => json!(g.to_json()),
                Err(e) => json!(e.to_string()),
            };
        } else if k1 && delta == 3 && s.valency() == 3 {
            out["projection"] = match projection_test(&s, &a, &fs, &report)? {
                ProjectionVerdict::RuledOut(why) => json!(format!("ruled out: {why:?}")),
                ProjectionVerdict::NoStatement => json!("no statement"),
            };
        }
    }
    print_json(&out);
    Ok(0)
}

fn check_gkm(file: &Path) -> Result<u8> {
    let g = read_gkm(file)?;
    let violations: Vec<String> = validate(&g).iter().map(ToString::to_string).collect();
    let mut out = json!({
        "vertices": g.n_vertices(),
        "valency": g.valency(),
        "d": g.d(),
        "valid": violations.is_empty(),
        "violations": violations,
    });
    if let Ok(c1) = first_chern_map(&g) {
        let per_edge: Vec<_> = g
            .graph()
            .edges()
            .iter()
            .map(|&(u, v)| json!([u, v, c1[g.graph().dart_index(u, v).expect("edge")]]))
            .collect();
        out["c1"] = json!(per_edge);
        out["positive"] = json!(is_positive(&g)?);
        out["twenty_four_rule"] = json!(twenty_four_rule(&g).ok());
    }
    if g.d() > 0 {
        let xi = find_generic(&g);
        out["xi"] = json!(xi);
        out["betti"] = json!(betti_numbers(&g, &xi).ok());
    }
    print_json(&out);
    Ok(if violations.is_empty() { 0 } else { VERDICT_FAILURE })
}

fn check_polytope(file: &Path, against: Option<&Path>) -> Result<u8> {
    let (p, edges) = Polytope::parse_json(&read(file)?).map_err(|e| malformed(file.display())(e.to_string()))?;
    let mut out = json!({
        "dim": p.dim(),
        "vertices": p.vertices().len(),
        "facets": p.facets().len(),
        "edges": p.edges(),
        "smooth": p.is_smooth(),
        "reflexive": p.is_reflexive(),
    });
    let mut code = 0;
    match graph_from_polytope(&p, edges.as_deref()) {
        Ok(g) => {
            out["graph_valid"] = json!(validate(&g).is_empty());
            out["gkm_graph"] = json!(g.to_json());
            if p.dim() == 3 {
                out["c1_cubed"] = json!(abbv_integrate(&g, &[1, 1, 1]).ok().map(|q| q.to_string()));
            }
            if let Some(path) = against {
                let h = read_gkm(path).with_context(|| format!("comparison graph {}", path.display()))?;
                let iso = isomorphic(&g, &h).is_some();
                out["isomorphic_to_given"] = json!(iso);
                if !iso {
                    code = VERDICT_FAILURE;
                }
            }
        }
        Err(e) => out["graph_error"] = json!(e.to_string()),
    }
    print_json(&out);
    Ok(code)
}
