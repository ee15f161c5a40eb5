use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hyperfect::classify::{classify_with, ClassificationReport};
use hyperfect::cocycle::{co, generate_pre_odd_hole, switching_counterexample};
use hyperfect::coloring::{Budget, Checker, DEFAULT_NODE_BUDGET};
use hyperfect::enumerate::enumerate;
use hyperfect::extremal::{
    clique_hypergraph, complete_tripartite, cone, intersecting_example, turan_construction, IntersectingKind,
};
use hyperfect::khg::{parse_khg, to_khg};
use hyperfect::ramsey::RamseyTable;
use hyperfect::verify::{verify, CheckId, VerifyReport};
use hyperfect::{families, Error, Graph, KHypergraph, VertexSet};

const EXIT_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hyperfect",
    version,
    about = "Perfectness classes of small uniform hypergraphs"
)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Node budget for each exact search.
    #[arg(long, global = true, env = "HYPERFECT_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Exit with code 3 when any verdict is indeterminate.
    #[arg(long, global = true)]
    strict: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the hypergraph in a .khg file against every class.
    Classify {
        path: PathBuf,
        /// Indices r for the HD_r property.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        r: Vec<usize>,
    },
    /// Run a registered corpus check, or `all`.
    Verify {
        check: String,
        /// Vertex bound of the corpus (default depends on the check).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Write a generated hypergraph as .khg to standard output.
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        /// Sector sizes for pre-odd-hole.
        #[arg(long, value_delimiter = ',')]
        sectors: Vec<usize>,
        /// Input .khg file for cone, clique-hypergraph, cocycle and complement.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Clique size for clique-hypergraph.
        #[arg(long)]
        r: Option<usize>,
        /// Switching set for switching (comma separated vertices).
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
    },
    /// Stream every k-uniform hypergraph on n vertices.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// One instance per isomorphism class.
        #[arg(long)]
        iso: bool,
    },
    /// Show known hypergraph Ramsey numbers R_s(k).
    Ramsey {
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Include literature values not derived here.
        #[arg(long)]
        external: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Turan,
    Tripartite,
    IntersectingA,
    IntersectingB,
    IntersectingC,
    LinkTriangle,
    LinkStar,
    PreOddHole,
    Cone,
    CliqueHypergraph,
    Cocycle,
    Complement,
    Cycle,
    MycielskiGrotzsch,
    Switching,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILED);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let parse = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::Parse { .. })));
            ExitCode::from(if parse { EXIT_PARSE } else { EXIT_FAILED })
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let budget = Budget::nodes(cli.budget);
    match &cli.command {
        Command::Classify { path, r } => {
            let g = read_khg(path)?;
            let report = classify_with(&Checker::new(budget), &g, r)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => print_report(&report),
            }
            Ok(if cli.strict && report.has_indeterminate() {
                EXIT_INDETERMINATE
            } else {
                0
            })
        }
        Command::Verify { check, n } => {
            let checks: Vec<CheckId> = if check == "all" {
                CheckId::ALL.to_vec()
            } else {
                vec![check.parse()?]
            };
            let mut code = 0;
            let mut reports = Vec::new();
            for c in checks {
                let r = verify(c, n.unwrap_or(c.default_bound()), budget)?;
                if !r.counterexamples.is_empty() {
                    code = EXIT_FAILED;
                } else if r.indeterminate > 0 && code == 0 {
                    code = EXIT_INDETERMINATE;
                }
                if cli.format == Format::Text {
                    print_verify(&r);
                }
                reports.push(r);
            }
            if cli.format == Format::Json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            }
            Ok(code)
        }
        Command::Generate {
            kind,
            n,
            sectors,
            input,
            r,
            a,
        } => {
            let g = generate(*kind, *n, sectors, input.as_deref(), *r, a)?;
            print!("{}", to_khg(&g));
            Ok(0)
        }
        Command::Enumerate { k, n, iso } => {
            let all = enumerate(*k, *n, *iso)?;
            match cli.format {
                Format::Text => {
                    for (i, g) in all.enumerate() {
                        println!("# instance {i}");
                        print!("{}", to_khg(&g));
                    }
                }
                Format::Json => {
                    let list: Vec<KHypergraph> = all.collect();
                    println!("{}", serde_json::to_string(&list)?);
                }
            }
            Ok(0)
        }
        Command::Ramsey { s, k, external } => {
            let table = RamseyTable::new().with_external(*external);
            let entries = match (s, k) {
                (Some(s), Some(k)) => vec![table.entry(*s, *k)],
                _ => table.known(6),
            };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&entries)?),
                Format::Text => {
                    for e in entries {
                        let v = e.value.map_or("unknown".to_string(), |v| v.to_string());
                        println!("R_{}({}) = {v}  [{:?}]", e.s, e.k, e.provenance);
                    }
                }
            }
            Ok(0)
        }
    }
}

fn read_khg(path: &Path) -> anyhow::Result<KHypergraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_khg(&text).with_context(|| format!("parsing {}", path.display()))
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> anyhow::Result<T> {
    match v {
        Some(v) => Ok(v),
        None => bail!("{kind} needs --{flag}"),
    }
}

fn read_graph(input: Option<&Path>, kind: &str) -> anyhow::Result<Graph> {
    let g = read_khg(need(input, "input", kind)?)?;
    Graph::from_hypergraph(g).context("expected a graph (k = 2)")
}

fn generate(
    kind: Kind,
    n: Option<usize>,
    sectors: &[usize],
    input: Option<&Path>,
    r: Option<usize>,
    a: &[usize],
) -> anyhow::Result<KHypergraph> {
    let name = kind
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let n = || need(n, "n", &name);
    let intersecting = |k: IntersectingKind| -> anyhow::Result<KHypergraph> { Ok(intersecting_example(k, n()?)?) };
    Ok(match kind {
        Kind::Turan => turan_construction(n()?)?,
        Kind::Tripartite => complete_tripartite(n()?)?,
        Kind::IntersectingA => intersecting(IntersectingKind::A)?,
        Kind::IntersectingB => intersecting(IntersectingKind::B)?,
        Kind::IntersectingC => intersecting(IntersectingKind::C)?,
        Kind::LinkTriangle => intersecting(IntersectingKind::LinkTriangle)?,
        Kind::LinkStar => intersecting(IntersectingKind::LinkStar)?,
        Kind::PreOddHole => generate_pre_odd_hole(sectors)?.0.into_hypergraph(),
        Kind::Cone => cone(&read_khg(need(input, "input", &name)?)?)?,
        Kind::CliqueHypergraph => clique_hypergraph(&read_khg(need(input, "input", &name)?)?, need(r, "r", &name)?)?,
        Kind::Cocycle => co(&read_graph(input, &name)?),
        Kind::Complement => read_khg(need(input, "input", &name)?)?.complement(),
        Kind::Cycle => families::cycle(n()?)?.into_hypergraph(),
        Kind::MycielskiGrotzsch => families::mycielski_grotzsch()?.into_hypergraph(),
        Kind::Switching => {
            let h = match input {
                Some(p) => read_graph(Some(p), &name)?,
                None => families::mycielski_grotzsch()?,
            };
            switching_counterexample(&h, VertexSet::from_slice(a))?.into_hypergraph()
        }
    })
}

fn print_report(r: &ClassificationReport) {
    println!("id     {}", r.id);
    println!("n {}  k {}  omega {}  alpha {}", r.n, r.k, r.omega, r.alpha);
    for (name, c) in &r.classes {
        let verdict = match c.verdict.as_bool() {
            Some(true) => "yes",
            Some(false) => "no",
            None => "indeterminate",
        };
        let witness = serde_json::to_string(&c.witness).unwrap_or_default();
        println!("{name:<16} {verdict:<14} {witness}");
    }
    for note in &r.notes {
        println!("note: {note}");
    }
}

fn print_verify(r: &VerifyReport) {
    let status = if r.passed() {
        "PASS"
    } else if r.counterexamples.is_empty() {
        "INCOMPLETE"
    } else {
        "FAIL"
    };
    println!(
        "{status} {} (n <= {}): {} checked, {} indeterminate, {} counterexamples",
        r.check,
        r.bound,
        r.checked,
        r.indeterminate,
        r.counterexamples.len()
    );
    for f in &r.findings {
        println!("  {f}");
    }
    for c in r.counterexamples.iter().take(5) {
        println!("  counterexample {}: {}", c.id, c.reason);
        for line in c.khg.lines() {
            println!("    {line}");
        }
    }
}
