//! `eclab`: compute, verify and explore edge coalitions from the command line.
//!
//! Exit status: 0 success, 1 negative verdict (`verify` rejects, a
//! `theorems` check fails), 2 usage or input error, 3 budget exceeded.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eclab::{
    coalition_graph, ec_bounds, ec_lower_bound, edge_coalition_number_with, edge_domination_number,
    enumerate_corpus, generate, is_ec_partition, k24_preset, theorems, CorpusSpec, EcCertificate,
    EdgePartition, Error, FamilySpec, Graph, GraphClass, Justification, SolverConfig,
};

#[derive(Parser)]
#[command(
    name = "eclab",
    version,
    about = "Exact edge coalition computations on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge coalition number with a certificate.
    Ec {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Worker threads for the exact search.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report the best certificate found within the time budget instead
        /// of an exact value.
        #[arg(long)]
        lower_bound: bool,
        /// Time budget for --lower-bound, in seconds.
        #[arg(long, default_value_t = 10.0)]
        budget_secs: f64,
    },
    /// Edge domination number with a minimum witness.
    Gamma {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check whether a partition is an ec-partition.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        partition: PartitionArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coalition graph of an ec-partition (the singleton partition by default).
    Ecg {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        partition: PartitionArg,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Known bounds on EC with their applicability.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a family member as an edge list.
    Generate {
        /// Family, e.g. path:6, cycle:7, star:5, dstar:3,2, complete:4, kbip:2,4.
        #[arg(long)]
        family: String,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Export every graph of the chosen classes as edge-list files.
    Corpus {
        #[arg(long)]
        max_vertices: usize,
        /// Comma-separated subset of all, connected, trees, unicyclic.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        classes: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        /// Abort past this many graphs per class.
        #[arg(long, default_value_t = 50_000)]
        max_graphs: usize,
    },
    /// Run the reproduction checks and print a pass/fail table.
    Theorems {
        /// Run a single check by number.
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file: a "n m" header, then one "u v" line per edge.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family spec such as path:6 or kbip:2,4.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
#[group(multiple = false)]
struct PartitionArg {
    /// JSON array of blocks of 0-based edge indices, e.g. [[0,4],[1],[2],[3]].
    #[arg(long)]
    partition: Option<String>,
    /// Built-in partition of K_{2,4}: pi1 .. pi6.
    #[arg(long)]
    partition_id: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

/// A failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. }
            | Error::TimeBudgetExhausted
            | Error::TooManyEdges { .. }
            | Error::CorpusBudgetExceeded(_)
            | Error::SizeLimitExceeded { .. } => 3,
            Error::NotAnEcPartition(_) => 1,
            _ => 2,
        };
        let mut message = e.to_string();
        if matches!(e, Error::BudgetExceeded { .. }) {
            message.push_str(" (raise ECLAB_MAX_EDGES or use --lower-bound)");
        }
        Failure { code, message }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Ec {
            input,
            format,
            jobs,
            lower_bound,
            budget_secs,
        } => {
            let g = load(&input)?;
            let budget = lower_bound.then_some(budget_secs);
            cmd_ec(&g, format, jobs, budget)
        }
        Command::Gamma { input, format } => cmd_gamma(&load(&input)?, format),
        Command::Verify {
            input,
            partition,
            format,
        } => {
            let g = load(&input)?;
            let p = partition_for(&g, &partition)?
                .ok_or_else(|| Failure::usage("verify needs --partition or --partition-id"))?;
            cmd_verify(&g, &p, format)
        }
        Command::Ecg {
            input,
            partition,
            format,
        } => {
            let g = load(&input)?;
            let p = match partition_for(&g, &partition)? {
                Some(p) => p,
                None => EdgePartition::singleton(&g)?,
            };
            cmd_ecg(&g, &p, format)
        }
        Command::Bounds { input, format } => cmd_bounds(&load(&input)?, format),
        Command::Generate { family, output } => {
            let spec: FamilySpec = family.parse()?;
            let text = generate(&spec)?.to_edge_list();
            match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok((String::new(), 0))
                }
                None => Ok((text, 0)),
            }
        }
        Command::Corpus {
            max_vertices,
            classes,
            out,
            max_graphs,
        } => cmd_corpus(max_vertices, &classes, &out, max_graphs),
        Command::Theorems { only } => cmd_theorems(only),
    }
}

fn load(input: &Input) -> Result<Graph, Failure> {
    match (&input.graph, &input.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(Graph::parse_edge_list(&text)?)
        }
        (None, Some(spec)) => Ok(generate(&spec.parse()?)?),
        _ => Err(Failure::usage("give exactly one of --graph or --family")),
    }
}

fn partition_for(g: &Graph, arg: &PartitionArg) -> Result<Option<EdgePartition>, Failure> {
    if let Some(json) = &arg.partition {
        let blocks: Vec<Vec<usize>> = serde_json::from_str(json).map_err(|e| {
            Failure::usage(format!(
                "partition must be a JSON array of index arrays: {e}"
            ))
        })?;
        return Ok(Some(EdgePartition::from_indices(g, &blocks)?));
    }
    if let Some(name) = &arg.partition_id {
        let p = k24_preset(name)
            .ok_or_else(|| Failure::usage(format!("unknown partition id {name:?}")))?;
        if p.universe() != g.m() {
            return Err(Failure::usage(format!(
                "{name} is a partition of K_{{2,4}} (8 edges)"
            )));
        }
        return Ok(Some(p));
    }
    Ok(None)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    ec: usize,
    blocks: Vec<Vec<usize>>,
    justification: &'a [Justification],
    mode: &'static str,
}

fn certificate_json<'a>(cert: &'a EcCertificate, mode: &'static str) -> CertificateJson<'a> {
    CertificateJson {
        ec: cert.order(),
        blocks: cert.partition.to_index_lists(),
        justification: &cert.justification,
        mode,
    }
}

fn describe_blocks(cert: &EcCertificate) -> String {
    let mut out = String::new();
    for (i, (b, j)) in cert
        .partition
        .blocks()
        .iter()
        .zip(&cert.justification)
        .enumerate()
    {
        let why = match j {
            Justification::FullEdge => "full edge".to_string(),
            Justification::Partner { with } => format!("partner {with}"),
        };
        writeln!(out, "  B{i} {:?}  {why}", b.to_vec()).unwrap();
    }
    out
}

fn cmd_ec(g: &Graph, format: Format, jobs: usize, lower_bound: Option<f64>) -> Outcome {
    if format == Format::Dot {
        return Err(Failure::usage("ec supports --format json or text"));
    }
    let (cert, mode, note) = match lower_bound {
        None => {
            let cfg = SolverConfig::from_env().with_jobs(jobs);
            let r = edge_coalition_number_with(g, &cfg)?;
            (r.certificate, "exact", "exact")
        }
        Some(secs) => {
            let budget = Duration::try_from_secs_f64(secs)
                .map_err(|_| Failure::usage("--budget-secs must be a nonnegative number"))?;
            let r = ec_lower_bound(g, budget)?;
            if r.optimal {
                (r.certificate, "exact", "exact")
            } else {
                (
                    r.certificate,
                    "lower_bound",
                    "lower bound, not proven optimal",
                )
            }
        }
    };
    let out = match format {
        Format::Json => to_json(&certificate_json(&cert, mode)),
        _ => format!("EC = {} ({note})\n{}", cert.order(), describe_blocks(&cert)),
    };
    Ok((out, 0))
}

fn cmd_gamma(g: &Graph, format: Format) -> Outcome {
    #[derive(Serialize)]
    struct GammaJson {
        gamma_prime: usize,
        witness: Vec<usize>,
    }
    let r = edge_domination_number(g);
    let out = match format {
        Format::Json => to_json(&GammaJson {
            gamma_prime: r.gamma_prime,
            witness: r.witness.to_vec(),
        }),
        Format::Text => format!(
            "gamma' = {}\nwitness {:?}\n",
            r.gamma_prime,
            r.witness.to_vec()
        ),
        Format::Dot => return Err(Failure::usage("gamma supports --format json or text")),
    };
    Ok((out, 0))
}

fn cmd_verify(g: &Graph, p: &EdgePartition, format: Format) -> Outcome {
    #[derive(Serialize)]
    struct VerifyJson<'a> {
        valid: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        justification: Option<&'a [Justification]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        reason: Option<String>,
    }
    let verdict = match is_ec_partition(g, p) {
        Ok(cert) => Ok(cert),
        Err(Error::NotAnEcPartition(rejection)) => Err(rejection.to_string()),
        Err(e) => return Err(e.into()),
    };
    let code = if verdict.is_ok() { 0 } else { 1 };
    let out = match (format, &verdict) {
        (Format::Json, Ok(cert)) => to_json(&VerifyJson {
            valid: true,
            justification: Some(&cert.justification),
            reason: None,
        }),
        (Format::Json, Err(reason)) => to_json(&VerifyJson {
            valid: false,
            justification: None,
            reason: Some(reason.clone()),
        }),
        (Format::Text, Ok(cert)) => {
            format!(
                "valid ec-partition of order {}\n{}",
                cert.order(),
                describe_blocks(cert)
            )
        }
        (Format::Text, Err(reason)) => format!("not an ec-partition: {reason}\n"),
        (Format::Dot, _) => return Err(Failure::usage("verify supports --format json or text")),
    };
    Ok((out, code))
}

fn cmd_ecg(g: &Graph, p: &EdgePartition, format: Format) -> Outcome {
    let ecg = coalition_graph(g, p)?;
    let out = match format {
        Format::Dot => {
            let mut s = String::from("graph ecg {\n");
            for v in 0..ecg.n() {
                writeln!(s, "  B{v};").unwrap();
            }
            for &(u, v) in ecg.edges() {
                writeln!(s, "  B{u} -- B{v};").unwrap();
            }
            s.push_str("}\n");
            s
        }
        Format::Text => ecg.to_edge_list(),
        Format::Json => {
            #[derive(Serialize)]
            struct EcgJson {
                blocks: Vec<Vec<usize>>,
                edges: Vec<(usize, usize)>,
            }
            to_json(&EcgJson {
                blocks: p.to_index_lists(),
                edges: ecg.edges().to_vec(),
            })
        }
    };
    Ok((out, 0))
}

fn cmd_bounds(g: &Graph, format: Format) -> Outcome {
    let report = ec_bounds(g)?;
    let out = match format {
        Format::Text => report.to_string(),
        Format::Json => to_json(&report),
        Format::Dot => return Err(Failure::usage("bounds supports --format text or json")),
    };
    Ok((out, 0))
}

fn cmd_corpus(max_vertices: usize, classes: &[String], out: &Path, max_graphs: usize) -> Outcome {
    let classes = classes
        .iter()
        .map(|c| c.parse::<GraphClass>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut spec = CorpusSpec::new(max_vertices, &classes);
    spec.max_graphs = max_graphs;
    let corpus = enumerate_corpus(&spec)?;
    std::fs::create_dir_all(out)
        .map_err(|e| Failure::usage(format!("cannot create {}: {e}", out.display())))?;
    for c in &corpus {
        write_file(&out.join(c.file_name()), &c.graph.to_edge_list())?;
    }
    Ok((
        format!("wrote {} graphs to {}\n", corpus.len(), out.display()),
        0,
    ))
}

fn cmd_theorems(only: Option<usize>) -> Outcome {
    let outcomes =
        match only {
            Some(id) => vec![theorems::run(id)
                .ok_or_else(|| Failure::usage(format!("no check numbered {id}")))?],
            None => theorems::run_all(),
        };
    let mut out = String::new();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        writeln!(out, "[{status}] {:>2} {:<20} {}", o.id, o.tag, o.detail).unwrap();
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed).unwrap();
    Ok((out, if failed > 0 { 1 } else { 0 }))
}
