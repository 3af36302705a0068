//! Command-line front end.
//!
//! Exit codes: 0 success, 1 data error (unreadable or invalid input, oracle
//! violations), 2 usage error, 3 a single local degree maximum without
//! `--subset all`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cuts::{normalization_factor, CutKind, CutResult};
use crate::error::Error;
use crate::graph::{VertexSet, WeightedGraph};
use crate::ingest::{
    classification_rate, emit_points_csv, image_grid_graph, knn_eps_graph, largest_component,
    parse_csv_image, parse_edge_list, parse_pgm, parse_points_csv, sample_gaussian_mixture,
    GrayImage, KnnEpsParams,
};
use crate::multixist::{cut_with, MultiXist, Terminals};
use crate::oracle::{property_suite, SuiteConfig};
use crate::sweep::{xvst_basic, Xist};

#[derive(Debug, Parser)]
#[command(
    name = "xist",
    version,
    about = "Balanced graph cuts via st-MinCuts on local maxima"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Two-way balanced cut.
    Cut(InputArgs),
    /// k-way clustering by repeated cuts.
    Multicut {
        #[command(flatten)]
        input: InputArgs,
        /// Number of clusters.
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive property suite on random graphs.
    Oracle(OracleArgs),
    /// Synthetic data.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Wall-time measurements.
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Edgelist,
    Pgm,
    CsvImage,
    CsvPoints,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Subset {
    /// Local maxima of the weighted degree.
    Degree,
    /// Local maxima of the image intensity (image formats only).
    Intensity,
    /// Every vertex (all-pairs sweep).
    All,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    #[arg(long, default_value = "ncut")]
    cut: CutKind,
    #[arg(long, value_enum, default_value = "degree")]
    subset: Subset,
    /// Cut only the largest connected component.
    #[arg(long)]
    largest_component: bool,
    /// Grid side for image inputs (default: the smaller image dimension).
    #[arg(long)]
    grid: Option<usize>,
    /// Nearest neighbors for point inputs.
    #[arg(long, default_value_t = 5)]
    knn: usize,
    /// Ball radius for point inputs.
    #[arg(long, default_value_t = 0.2)]
    eps: f64,
    /// Distance scale of the point edge weights.
    #[arg(long, default_value_t = 0.2)]
    scale: f64,
    /// Label file, one integer per vertex.
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Metrics JSON (stdout when omitted).
    #[arg(long)]
    metrics: Option<PathBuf>,
    /// Write `null` for the wall time so repeated runs are byte-identical.
    #[arg(long)]
    omit_timing: bool,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    edge_probability: f64,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Two-component planar Gaussian mixture with true labels.
    Gaussian {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 4.0)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum BenchCommand {
    /// Xist wall time on r×r image grids.
    Grid {
        /// PGM or CSV image; a synthetic scene when omitted.
        #[arg(long)]
        image: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "8,12,16,24,32")]
        sizes: Vec<usize>,
        #[arg(long, default_value = "ncut")]
        cut: CutKind,
        #[arg(long, value_enum, default_value = "degree")]
        subset: Subset,
        /// Timings per size; the minimum is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// CSV output (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Flat metrics record written by `cut` and `multicut`.
#[derive(Debug, Serialize)]
struct Metrics {
    command: &'static str,
    format: Format,
    cut: CutKind,
    n: usize,
    m: usize,
    k: usize,
    value: f64,
    normalized_value: f64,
    cut_weight: f64,
    size_s: usize,
    vol_s: f64,
    cluster_sizes: Vec<usize>,
    cluster_volumes: Vec<f64>,
    terminals: usize,
    flow_calls: usize,
    disconnected: bool,
    classification_rate: Option<f64>,
    wall_time_seconds: Option<f64>,
}

enum Failure {
    Usage(String),
    Data(String),
    Degenerate(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Data(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Degenerate(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Degenerate(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e.to_string())
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let outcome = match cli.command {
        Command::Cut(input) => cut(&input, None),
        Command::Multicut { input, k } => cut(&input, Some(k)),
        Command::Oracle(args) => oracle(&args),
        Command::Gen(GenCommand::Gaussian {
            n,
            delta,
            seed,
            out,
        }) => gen_gaussian(n, delta, seed, &out),
        Command::Bench(BenchCommand::Grid {
            image,
            sizes,
            cut,
            subset,
            repeats,
            out,
        }) => bench_grid(
            image.as_deref(),
            &sizes,
            cut,
            subset,
            repeats,
            out.as_deref(),
        ),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

/// Writes through a temporary file in the target directory and renames it.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let fail = |e: std::io::Error| Failure::Data(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(contents.as_bytes()).map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

fn emit(path: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

struct Loaded {
    graph: WeightedGraph,
    intensity_maxima: Option<VertexSet>,
    truth: Option<Vec<usize>>,
}

fn load(args: &InputArgs) -> Result<Loaded, Failure> {
    let text = read(&args.input)?;
    let image = |img: GrayImage| -> Result<Loaded, Failure> {
        let r = args.grid.unwrap_or(img.width().min(img.height()));
        let ig = image_grid_graph(&img, r)?;
        Ok(Loaded {
            graph: ig.graph,
            intensity_maxima: Some(ig.intensity_maxima),
            truth: None,
        })
    };
    let mut loaded = match args.format {
        Format::Edgelist => Loaded {
            graph: parse_edge_list(&text)?.graph,
            intensity_maxima: None,
            truth: None,
        },
        Format::Pgm => image(parse_pgm(&text)?)?,
        Format::CsvImage => image(parse_csv_image(&text)?)?,
        Format::CsvPoints => {
            let (points, truth) = parse_points_csv(&text)?;
            let params = KnnEpsParams {
                k: args.knn,
                eps: args.eps,
                scale: args.scale,
            };
            Loaded {
                graph: knn_eps_graph(&points, params)?,
                intensity_maxima: None,
                truth,
            }
        }
    };
    if args.subset == Subset::Intensity && loaded.intensity_maxima.is_none() {
        return Err(Failure::Usage(
            "--subset intensity needs an image input".into(),
        ));
    }
    if loaded.graph.n() < 2 {
        return Err(Failure::Data(format!(
            "graph has {} vertices, need at least 2",
            loaded.graph.n()
        )));
    }
    if args.largest_component && !loaded.graph.is_connected() {
        let sub = largest_component(&loaded.graph);
        loaded.intensity_maxima = loaded.intensity_maxima.map(|m| sub.project(&m));
        loaded.truth = loaded
            .truth
            .map(|t| sub.to_parent.iter().map(|&v| t[v]).collect());
        loaded.graph = sub.graph;
    }
    Ok(loaded)
}

const DEGENERATE_HINT: &str =
    "the terminal set has a single local maximum, so no cut between maxima exists; rerun with --subset all";

struct Outcome {
    labels: Vec<usize>,
    clusters: Vec<VertexSet>,
    value: f64,
    cut: Option<CutResult>,
    terminals: usize,
    flow_calls: usize,
    disconnected: bool,
}

fn two_way(args: &InputArgs, loaded: &Loaded) -> Result<Outcome, Failure> {
    let g = &loaded.graph;
    let degenerate = |e: Error| match e {
        Error::DegenerateVloc => Failure::Degenerate(DEGENERATE_HINT.into()),
        e => e.into(),
    };
    let (result, terminals, flow_calls, disconnected) = match args.subset {
        Subset::All => {
            let run = xvst_basic(g, args.cut, None)?;
            (
                run.result,
                run.terminals.len(),
                run.flow_calls,
                run.disconnected,
            )
        }
        Subset::Degree => {
            let run = Xist::new(args.cut).run(g).map_err(degenerate)?;
            (
                run.result,
                run.terminals.len(),
                run.flow_calls,
                run.disconnected,
            )
        }
        Subset::Intensity => {
            let maxima = loaded.intensity_maxima.as_ref().expect("checked in load");
            if maxima.len() < 2 {
                return Err(degenerate(Error::DegenerateVloc));
            }
            let run = Xist::new(args.cut).run_on_subset(g, maxima)?;
            (
                run.result,
                run.terminals.len(),
                run.flow_calls,
                run.disconnected,
            )
        }
    };
    let s = &result.partition;
    Ok(Outcome {
        labels: (0..g.n()).map(|v| usize::from(!s.contains(v))).collect(),
        clusters: vec![s.clone(), s.complement()],
        value: result.value,
        cut: Some(result),
        terminals,
        flow_calls,
        disconnected,
    })
}

fn k_way(args: &InputArgs, loaded: &Loaded, k: usize) -> Result<Outcome, Failure> {
    let terminals = match args.subset {
        Subset::Degree => Terminals::LocalMaxima,
        Subset::All => Terminals::All,
        Subset::Intensity => {
            Terminals::Fixed(loaded.intensity_maxima.clone().expect("checked in load"))
        }
    };
    let run = MultiXist::new(args.cut)
        .terminals(terminals)
        .run(&loaded.graph, k)
        .map_err(|e| match e {
            Error::PreconditionViolated(m) => Failure::Usage(m),
            e => e.into(),
        })?;
    Ok(Outcome {
        labels: run.labels,
        clusters: run.clusters,
        value: run.value,
        cut: None,
        terminals: 0,
        flow_calls: run.flow_calls,
        disconnected: !loaded.graph.is_connected(),
    })
}

fn cut(args: &InputArgs, k: Option<usize>) -> Result<(), Failure> {
    let loaded = load(args)?;
    let g = &loaded.graph;
    let start = Instant::now();
    let outcome = match k {
        None => two_way(args, &loaded)?,
        Some(k) => k_way(args, &loaded, k)?,
    };
    let elapsed = start.elapsed().as_secs_f64();

    let classification = match (&loaded.truth, outcome.clusters.len()) {
        (Some(truth), 2) => Some(classification_rate(truth, &outcome.labels)?),
        _ => None,
    };
    let factor = normalization_factor(g, args.cut);
    let (normalized_value, cut_weight) = match &outcome.cut {
        Some(c) => (c.normalized_value, c.cut_weight),
        None => (
            if outcome.value == 0.0 {
                0.0
            } else {
                outcome.value * factor
            },
            g.edges()
                .iter()
                .filter(|e| outcome.labels[e.u] != outcome.labels[e.v])
                .map(|e| e.weight)
                .sum(),
        ),
    };
    let metrics = Metrics {
        command: if k.is_some() { "multicut" } else { "cut" },
        format: args.format,
        cut: args.cut,
        n: g.n(),
        m: g.m(),
        k: outcome.clusters.len(),
        value: outcome.value,
        normalized_value,
        cut_weight,
        size_s: outcome.clusters[0].len(),
        vol_s: g.vol(&outcome.clusters[0]),
        cluster_sizes: outcome.clusters.iter().map(VertexSet::len).collect(),
        cluster_volumes: outcome.clusters.iter().map(|c| g.vol(c)).collect(),
        terminals: outcome.terminals,
        flow_calls: outcome.flow_calls,
        disconnected: outcome.disconnected,
        classification_rate: classification,
        wall_time_seconds: (!args.omit_timing).then_some(elapsed),
    };
    if let Some(path) = &args.labels {
        let mut text = String::with_capacity(2 * outcome.labels.len());
        for l in &outcome.labels {
            let _ = writeln!(text, "{l}");
        }
        write_atomic(path, &text)?;
    }
    let mut json = serde_json::to_string_pretty(&metrics).expect("metrics serialize");
    json.push('\n');
    emit(args.metrics.as_deref(), &json)
}

fn oracle(args: &OracleArgs) -> Result<(), Failure> {
    if args.min_n < 4 || args.min_n > args.max_n {
        return Err(Failure::Usage(format!(
            "need 4 <= --min-n <= --max-n, got {} and {}",
            args.min_n, args.max_n
        )));
    }
    if !(args.edge_probability > 0.0 && args.edge_probability <= 1.0) {
        return Err(Failure::Usage(
            "--edge-probability must lie in (0, 1]".into(),
        ));
    }
    let config = SuiteConfig {
        trials: args.trials,
        min_n: args.min_n,
        max_n: args.max_n,
        edge_probability: args.edge_probability,
        seed: args.seed,
    };
    let report = property_suite(&config)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    match report.violations() {
        0 => Ok(()),
        v => Err(Failure::Data(format!("{v} property violations"))),
    }
}

fn gen_gaussian(n: usize, delta: f64, seed: u64, out: &Path) -> Result<(), Failure> {
    if !delta.is_finite() {
        return Err(Failure::Usage(format!(
            "--delta must be finite, got {delta}"
        )));
    }
    let data = sample_gaussian_mixture(n, delta, seed);
    write_atomic(out, &emit_points_csv(&data.points, Some(&data.labels)))
}

fn bench_grid(
    image: Option<&Path>,
    sizes: &[usize],
    kind: CutKind,
    subset: Subset,
    repeats: usize,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if sizes.is_empty() || repeats == 0 {
        return Err(Failure::Usage(
            "--sizes and --repeats must be nonempty".into(),
        ));
    }
    let img = match image {
        Some(p) => {
            let text = read(p)?;
            if text.trim_start().starts_with("P2") {
                parse_pgm(&text)?
            } else {
                parse_csv_image(&text)?
            }
        }
        None => GrayImage::synthetic(sizes.iter().copied().max().unwrap_or(0).max(64))?,
    };
    let mut csv = String::from("r,n,m,terminals,flow_calls,value,seconds\n");
    for &r in sizes {
        let ig = image_grid_graph(&img, r)?;
        let terminals = match subset {
            Subset::Degree => Terminals::LocalMaxima,
            Subset::All => Terminals::All,
            Subset::Intensity => Terminals::Fixed(ig.intensity_maxima.clone()),
        };
        let mut best = f64::INFINITY;
        let mut last = None;
        for _ in 0..repeats {
            let start = Instant::now();
            let sweep = cut_with(&ig.graph, kind, &terminals)?;
            best = best.min(start.elapsed().as_secs_f64());
            last = Some(sweep);
        }
        let sweep = last.expect("repeats > 0");
        let _ = writeln!(
            csv,
            "{r},{},{},{},{},{},{best:.6e}",
            ig.graph.n(),
            ig.graph.m(),
            sweep.terminals,
            sweep.flow_calls,
            sweep.result.value
        );
    }
    emit(out, &csv)
}
