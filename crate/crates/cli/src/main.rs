//! Command-line front end: compute, check, construct, table, lemma.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pathramsey::constructions::{
    matching_lower, schelp_blocks, three_color_lower, two_color_lower,
};
use pathramsey::extremal::{
    extremal_graph, fs_bound, verify_ex_corollary, ExtremalParams, ExtremalVariant,
};
use pathramsey::oracles::{
    coloring_is_good, longest_path_bruteforce, longest_path_order, max_matching_size, Embedding,
};
use pathramsey::search::{
    predicted_value_with, ramsey_number, verify_lemma_k34, verify_table, PredictionMode,
    SearchConfig, SymmetryLevel, TableStatus,
};
use pathramsey::witness::{parse_witness, to_witness_string};
use pathramsey::{EdgeColoring, Error, Pattern, TargetSpec};

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Hosts up to this size are also checked by trying every vertex order.
const BRUTEFORCE_MAX_VERTICES: usize = 8;

#[derive(Parser)]
#[command(
    name = "pathramsey",
    version,
    about = "Small multicolor path Ramsey numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Ramsey number by exhaustive search.
    Compute {
        /// Forbidden pattern per color, in color order: P<k> or <q>K2.
        #[arg(required = true, num_args = 2..=3)]
        targets: Vec<String>,
        /// Write the lower-bound witness here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append JSON-lines stats records here.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Also compare against the conjectured R(Pn,Pn,Pn) values.
        #[arg(long)]
        conjectured: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Re-verify a witness file against targets.
    Check {
        file: PathBuf,
        #[arg(required = true)]
        targets: Vec<String>,
    },
    /// Emit one of the explicit constructions.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Recompute every resolved Ramsey number up to a vertex bound.
    Table {
        #[arg(long = "max")]
        max_vertices: usize,
        /// Emit one JSON object per row.
        #[arg(long)]
        json: bool,
        /// Do not fail the exit code on timed-out rows.
        #[arg(long)]
        allow_timeout: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Run one of the exhaustive lemma checks.
    Lemma { name: LemmaName },
}

#[derive(Args, Clone)]
struct SearchArgs {
    /// Seconds per search probe; 0 disables the limit.
    #[arg(long, default_value_t = 300.0)]
    budget: f64,
    #[arg(long, value_enum, default_value_t = SymmetryArg::VertexOrbits)]
    symmetry: SymmetryArg,
    /// Worker threads sharing the top of the search tree.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig::default()
            .with_time_limit(self.budget)
            .with_symmetry(self.symmetry.into())
            .with_workers(self.workers.max(1))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    None,
    FirstEdge,
    VertexOrbits,
}

impl From<SymmetryArg> for SymmetryLevel {
    fn from(s: SymmetryArg) -> Self {
        match s {
            SymmetryArg::None => SymmetryLevel::None,
            SymmetryArg::FirstEdge => SymmetryLevel::FirstEdge,
            SymmetryArg::VertexOrbits => SymmetryLevel::VertexOrbits,
        }
    }
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Two-color lower bound for R(Pn, Pm).
    TwoColor { n: usize, m: usize },
    /// Three-color lower bound for R(P3, Pn, Pm).
    ThreeColor { n: usize, m: usize },
    /// Four-block example with block size m.
    Schelp { m: usize },
    /// Lower bound for R(P3, nK2, mK2).
    Matching { n: usize, m: usize },
    /// Equality graph of the path-free edge bound.
    Extremal {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Use the odd-join shape with this many leading cliques.
        #[arg(long)]
        odd_join: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaName {
    K34,
    ExCorollary,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute {
            targets,
            out,
            stats,
            conjectured,
            search,
        } => compute(
            &targets,
            out.as_deref(),
            stats.as_deref(),
            conjectured,
            &search,
        ),
        Command::Check { file, targets } => check(&file, &targets),
        Command::Construct { kind, out } => construct(kind, out.as_deref()),
        Command::Table {
            max_vertices,
            json,
            allow_timeout,
            search,
        } => table(max_vertices, json, allow_timeout, &search),
        Command::Lemma { name } => lemma(name),
    };
    ExitCode::from(code)
}

fn parse_targets(targets: &[String]) -> Result<TargetSpec, u8> {
    TargetSpec::parse(&targets.join(" ")).map_err(|e| {
        eprintln!("error: {e}");
        eprintln!("usage: targets are P<k> (path on k vertices) or <q>K2 (q disjoint edges), one per color");
        EXIT_INPUT
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), u8> {
    fs::write(path, contents).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_INPUT
    })
}

fn compute(
    targets: &[String],
    out: Option<&Path>,
    stats: Option<&Path>,
    conjectured: bool,
    search: &SearchArgs,
) -> u8 {
    let spec = match parse_targets(targets) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let mode = if conjectured {
        PredictionMode::Conjectured
    } else {
        PredictionMode::Proven
    };
    let predicted = predicted_value_with(&spec, mode);
    println!("targets: {spec}");
    match predicted {
        Some(v) => println!("predicted: {v}"),
        None => println!("predicted: none"),
    }
    let result = match ramsey_number(&spec, &search.config()) {
        Ok(r) => r,
        Err(Error::Resource(msg)) => {
            println!("status: TIMEOUT");
            eprintln!("{msg}");
            return EXIT_RESOURCE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    println!("value: {}", result.value);
    for (n, verdict) in &result.probes {
        println!("probe: K{n} {verdict}");
    }
    println!(
        "exhaustion at K{}: {} nodes, {} oracle prunes, {} symmetry prunes, {:.3}s",
        result.value,
        result.upper_stats.nodes,
        result.upper_stats.oracle_prunes,
        result.upper_stats.symmetry_prunes,
        result.upper_stats.seconds
    );
    if let Some(w) = &result.lower_witness {
        println!("witness: good coloring of K{}", w.n());
        if let Some(path) = out {
            if let Err(code) = write_file(path, &to_witness_string(w)) {
                return code;
            }
            println!("witness written to {}", path.display());
        }
    }
    if let Some(path) = stats {
        let mut records = String::new();
        if let (Some(w), Some(s)) = (&result.lower_witness, &result.lower_stats) {
            records.push_str(&stats_line(&spec, w.n(), "found", s));
        }
        records.push_str(&stats_line(
            &spec,
            result.value,
            "exhausted",
            &result.upper_stats,
        ));
        if let Err(code) = append_file(path, &records) {
            return code;
        }
    }
    match predicted {
        Some(v) if v != result.value => {
            println!(
                "status: MISMATCH (predicted {v}, computed {})",
                result.value
            );
            EXIT_MISMATCH
        }
        Some(_) => {
            println!("status: MATCH");
            EXIT_OK
        }
        None => {
            println!("status: COMPUTED");
            EXIT_OK
        }
    }
}

fn stats_line(
    spec: &TargetSpec,
    n: usize,
    verdict: &str,
    s: &pathramsey::search::SearchStats,
) -> String {
    let mut line = serde_json::json!({
        "spec": spec.to_string(),
        "n": n,
        "verdict": verdict,
        "nodes": s.nodes,
        "oracle_prunes": s.oracle_prunes,
        "symmetry_prunes": s.symmetry_prunes,
        "seconds": s.seconds,
    })
    .to_string();
    line.push('\n');
    line
}

fn append_file(path: &Path, contents: &str) -> Result<(), u8> {
    use std::io::Write;
    fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .and_then(|mut f| f.write_all(contents.as_bytes()))
        .map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_INPUT
        })
}

fn describe_embedding(e: &Embedding) -> String {
    match e {
        Embedding::Path(p) => {
            let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
            format!("path {}", parts.join("-"))
        }
        Embedding::Matching(m) => {
            let parts: Vec<String> = m.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            format!("matching {}", parts.join(" "))
        }
    }
}

fn check(file: &Path, targets: &[String]) -> u8 {
    let spec = match parse_targets(targets) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return EXIT_INPUT;
        }
    };
    let coloring = match parse_witness(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            return EXIT_INPUT;
        }
    };
    let report = match coloring_is_good(&coloring, &spec) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    println!(
        "coloring: {} vertices, {} colors, targets {spec}",
        coloring.n(),
        coloring.k()
    );
    for verdict in &report.colors {
        match &verdict.violation {
            None => println!(
                "color {}: {} edges, no {}",
                verdict.color, verdict.edges, verdict.pattern
            ),
            Some(e) => println!(
                "color {}: {} edges, contains {}: {}",
                verdict.color,
                verdict.edges,
                verdict.pattern,
                describe_embedding(e)
            ),
        }
    }
    if coloring.n() <= BRUTEFORCE_MAX_VERTICES {
        let agrees = (0..spec.k()).all(|color| {
            let class = coloring.color_class(color as u8).expect("color in range");
            let free = match spec.pattern(color) {
                Pattern::Path(p) => longest_path_bruteforce(&class).expect("small host") < p,
                Pattern::Matching(q) => max_matching_size(&class) < q,
            };
            free == report.colors[color].violation.is_none()
        });
        if !agrees {
            println!("oracle disagreement: brute-force path check differs from the search oracle");
            return EXIT_MISMATCH;
        }
        println!("brute-force path check agrees");
    }
    if report.is_good() {
        println!("GOOD");
        EXIT_OK
    } else {
        println!("NOT-GOOD");
        EXIT_MISMATCH
    }
}

fn print_class_properties(c: &EdgeColoring) {
    for color in 0..c.k() as u8 {
        let class = c.color_class(color).expect("color in range");
        println!(
            "color {color}: {} edges, longest path {}, matching number {}",
            class.edge_count(),
            longest_path_order(&class),
            max_matching_size(&class)
        );
    }
}

fn construct(kind: ConstructKind, out: Option<&Path>) -> u8 {
    let built = match kind {
        ConstructKind::TwoColor { n, m } => two_color_lower(n, m).inspect(|c| {
            println!("two-color lower bound for R(P{n},P{m}) on K{}", c.n());
        }),
        ConstructKind::ThreeColor { n, m } => three_color_lower(n, m).inspect(|c| {
            println!("three-color lower bound for R(P3,P{n},P{m}) on K{}", c.n());
        }),
        ConstructKind::Matching { n, m } => matching_lower(n, m).inspect(|c| {
            println!("lower bound for R(P3,{n}K2,{m}K2) on K{}", c.n());
        }),
        ConstructKind::Schelp { m } => schelp_blocks(m).map(|(host, c)| {
            println!(
                "four-block host on {} vertices, {} edges",
                host.n(),
                host.edge_count()
            );
            println!("min degree: {}", host.min_degree());
            let longest = (0..2u8)
                .map(|col| longest_path_order(&c.color_class(col).expect("two colors")))
                .max()
                .unwrap_or(1);
            println!("longest monochromatic path: {longest}");
            c
        }),
        ConstructKind::Extremal { t, n, r, odd_join } => {
            let variant = match odd_join {
                Some(l) => ExtremalVariant::OddJoin { l },
                None => ExtremalVariant::Cliques,
            };
            extremal_graph(t, n, r, variant).and_then(|g| {
                let bound = fs_bound(ExtremalParams::new(g.n(), n + 1)?);
                println!(
                    "graph on {} vertices, {} edges (bound {bound})",
                    g.n(),
                    g.edge_count()
                );
                println!("longest path: {}", longest_path_order(&g));
                EdgeColoring::monochromatic(g, 1, 0)
            })
        }
    };
    let coloring = match built {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    println!("class sizes: {:?}", coloring.class_sizes());
    print_class_properties(&coloring);
    let text = to_witness_string(&coloring);
    match out {
        Some(path) => {
            if let Err(code) = write_file(path, &text) {
                return code;
            }
            println!("written to {}", path.display());
        }
        None => print!("{text}"),
    }
    EXIT_OK
}

fn table(max_vertices: usize, json: bool, allow_timeout: bool, search: &SearchArgs) -> u8 {
    let rows = match verify_table(max_vertices, &search.config()) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    if !json {
        println!(
            "{:<16} {:>9} {:>9} {:>12} {:>10}  status",
            "spec", "predicted", "computed", "nodes", "seconds"
        );
    }
    for row in &rows {
        if json {
            println!("{}", serde_json::to_string(row).expect("rows serialize"));
        } else {
            let computed = row.computed.map_or("-".to_string(), |v| v.to_string());
            let status = match row.status {
                TableStatus::Match => "MATCH",
                TableStatus::Mismatch => "MISMATCH",
                TableStatus::Timeout => "TIMEOUT",
            };
            println!(
                "{:<16} {:>9} {:>9} {:>12} {:>10.3}  {status}",
                row.spec, row.predicted, computed, row.nodes, row.seconds
            );
            if let Some(d) = &row.diagnostic {
                if row.status == TableStatus::Mismatch {
                    println!("{d}");
                }
            }
        }
    }
    if rows.iter().any(|r| r.status == TableStatus::Mismatch) {
        EXIT_MISMATCH
    } else if !allow_timeout && rows.iter().any(|r| r.status == TableStatus::Timeout) {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    }
}

fn lemma(name: LemmaName) -> u8 {
    match name {
        LemmaName::K34 => {
            let report = verify_lemma_k34();
            println!("colorings checked: {}", report.colorings);
            println!("with a red P3: {}", report.red_p3);
            println!("with a blue P7: {}", report.blue_p7);
            println!("counterexamples: {}", report.counterexamples);
            if report.holds() {
                println!("pass");
                EXIT_OK
            } else {
                println!("FAIL");
                EXIT_MISMATCH
            }
        }
        LemmaName::ExCorollary => {
            let rows = match verify_ex_corollary() {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INPUT;
                }
            };
            let mut nodes = 0;
            for row in &rows {
                nodes += row.graphs;
                println!(
                    "ex({}, P{}): formula {}, enumeration {} {}",
                    row.nv,
                    row.p,
                    row.formula,
                    row.bruteforce,
                    if row.passes() { "ok" } else { "MISMATCH" }
                );
            }
            println!("graphs enumerated: {nodes}");
            if rows.iter().all(|r| r.passes()) {
                println!("pass");
                EXIT_OK
            } else {
                println!("FAIL");
                EXIT_MISMATCH
            }
        }
    }
}
