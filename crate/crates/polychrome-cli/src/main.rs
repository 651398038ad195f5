//! Command-line frontend: verification, bounds, search, and table/figure
//! emission for polychromatic hypercube colorings.
//!
//! Exit codes: 0 when the requested check passes (polychromatic, SAT, or a
//! bound was computed), 1 when it is verified false or UNSAT, 2 on usage
//! errors, 3 when a search budget ran out. Identical configurations
//! (including seed) produce byte-identical stdout across runs and worker
//! counts; timings go to stderr.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand};

use polychrome::bounds::{
    binomial_upper, max_product_lower, partition_intervals, pig_bound, qd_closed_form, BoundKind,
    BoundReport, PartitionOutcome,
};
use polychrome::coloring::{catalog, catalog_names, Coloring};
use polychrome::grid::{apply_puncture, shape_sequence};
use polychrome::pattern::{GapVector, PunctureSpec, StarPattern};
use polychrome::search::{
    search_concrete, search_simple, Budget, SearchMode, SearchStatus, SimpleSearchProblem,
};
use polychrome::verify::{
    sequence_color_table, verify_concrete, verify_residues, ColorSource, PunctureKind, TargetSpec,
};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "polychrome", version, about = "Polychromatic hypercube coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a periodic coloring against all hypercubes via its residues.
    VerifyResidue(VerifyResidueArgs),
    /// Brute-force check over every embedding in a concrete Q_n.
    VerifyConcrete(VerifyConcreteArgs),
    /// Compute a bound (closed form, level profile, binomial, max product).
    Bound(BoundArgs),
    /// Search for simple colorings on a truncated cell window.
    SearchSimple(SearchSimpleArgs),
    /// Search for raw colorings of the Q_i's of a concrete Q_n.
    SearchConcrete(SearchConcreteArgs),
    /// Emit the per-residue shape color table as CSV.
    Table(TableArgs),
    /// Render a shape sequence as structured text or SVG.
    Shapes(ShapesArgs),
    /// List the built-in colorings.
    Catalog,
    /// Run the interval-partition procedure for one color.
    Partition(PartitionArgs),
}

#[derive(Args)]
struct ColoringArgs {
    /// Built-in coloring name (see `catalog`).
    #[arg(long)]
    catalog: Option<String>,
    /// Catalog parameters, comma-separated key=value.
    #[arg(long, default_value = "")]
    params: String,
    /// Coloring spec file (alternative to --catalog).
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Pad the declared palette of a formula coloring.
    #[arg(long)]
    palette: Option<u32>,
}

impl ColoringArgs {
    fn load(&self) -> anyhow::Result<Coloring> {
        let mut coloring = match (&self.catalog, &self.spec) {
            (Some(name), None) => catalog(name, &parse_params(&self.params)?)?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)?;
                Coloring::parse_spec(&text)?
            }
            _ => anyhow::bail!("specify exactly one coloring source: --catalog or --spec"),
        };
        if let Some(p) = self.palette {
            coloring = match coloring {
                Coloring::Formula(f) => Coloring::Formula(f.with_palette(p)?),
                other => {
                    let _ = other;
                    anyhow::bail!("--palette applies to formula colorings only")
                }
            };
        }
        Ok(coloring)
    }

    fn echo(&self) -> String {
        let mut s = match (&self.catalog, &self.spec) {
            (Some(name), _) if self.params.is_empty() => format!("catalog:{name}"),
            (Some(name), _) => format!("catalog:{name}({})", self.params),
            (_, Some(path)) => format!("spec:{}", path.display()),
            _ => "none".into(),
        };
        if let Some(p) = self.palette {
            s.push_str(&format!(" palette={p}"));
        }
        s
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for the verifiers (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct VerifyResidueArgs {
    /// Target as d=..,i=..,puncture=none|vertex|edge.
    #[arg(long)]
    target: String,
    #[command(flatten)]
    coloring: ColoringArgs,
    /// Enumerate the outer gaps too instead of pinning them to zero.
    #[arg(long)]
    no_wlog: bool,
    /// Output format: text | report.
    #[arg(long, default_value = "text")]
    format: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyConcreteArgs {
    /// Host hypercube dimension.
    #[arg(long)]
    n: u32,
    /// Target as d=..,i=..,puncture=none|vertex|edge.
    #[arg(long)]
    target: String,
    #[command(flatten)]
    coloring: ColoringArgs,
    /// Output format: text | report.
    #[arg(long, default_value = "text")]
    format: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["closed", "pig", "binom", "maxprod"])))]
struct BoundArgs {
    /// Closed form for p(Q_d).
    #[arg(long)]
    closed: bool,
    /// Level-profile bound of a shape sequence.
    #[arg(long)]
    pig: bool,
    /// Binomial upper bound C(d+1, i+1) for subcube colorings.
    #[arg(long)]
    binom: bool,
    /// Max-product lower bound for subcube colorings.
    #[arg(long)]
    maxprod: bool,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    i: Option<u32>,
    /// Gap vector for --pig (comma-separated, default all zeros).
    #[arg(long)]
    gaps: Option<String>,
    /// Puncture for --pig, e.g. vertex:1111 or edge:11*00.
    #[arg(long)]
    puncture: Option<String>,
    /// Output format: text | csv.
    #[arg(long, default_value = "text")]
    format: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SearchSimpleArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    i: u32,
    /// Palette size.
    #[arg(long)]
    r: u32,
    /// Window level: variables are the cells with level <= window.
    #[arg(long)]
    window: u64,
    /// Search mode: first | all | refute.
    #[arg(long, default_value = "refute")]
    mode: String,
    /// Fixed assignments, e.g. "0,0,0=0;1,0,0=1".
    #[arg(long)]
    pin: Option<String>,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<u64>,
    /// Perturbs the variable order within levels.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SearchConcreteArgs {
    #[arg(long)]
    n: u32,
    /// Target as d=..,i=..,puncture=none|vertex|edge.
    #[arg(long)]
    target: String,
    /// Palette size.
    #[arg(long)]
    r: u32,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<u64>,
    /// Perturbs the variable order outside the first embedding.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TableArgs {
    /// Target as d=..,i=.. (unpunctured).
    #[arg(long)]
    target: String,
    #[command(flatten)]
    coloring: ColoringArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ShapesArgs {
    /// Gap vector, comma-separated.
    #[arg(long)]
    gaps: String,
    #[arg(long)]
    i: u32,
    /// Puncture, e.g. vertex:1111 or edge:11*00.
    #[arg(long)]
    puncture: Option<String>,
    /// Output format: text | svg.
    #[arg(long, default_value = "text")]
    format: String,
    /// Coloring whose colors annotate the SVG cells.
    #[arg(long)]
    catalog: Option<String>,
    /// Catalog parameters, comma-separated key=value.
    #[arg(long, default_value = "")]
    params: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct PartitionArgs {
    #[command(flatten)]
    coloring: ColoringArgs,
    /// Gap vector of the sequence, comma-separated.
    #[arg(long)]
    gaps: String,
    /// Region width in columns.
    #[arg(long)]
    columns: u64,
    /// Color to partition for; omit to run every palette color.
    #[arg(long)]
    color: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_params(s: &str) -> anyhow::Result<BTreeMap<String, u64>> {
    let mut out = BTreeMap::new();
    if s.is_empty() {
        return Ok(out);
    }
    for piece in s.split(',') {
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| anyhow::anyhow!("bad parameter `{piece}`, expected key=value"))?;
        out.insert(k.trim().to_string(), v.trim().parse()?);
    }
    Ok(out)
}

fn parse_target(s: &str) -> anyhow::Result<TargetSpec> {
    let mut d = None;
    let mut i = None;
    let mut puncture = PunctureKind::None;
    for piece in s.split(',') {
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| anyhow::anyhow!("bad target component `{piece}`"))?;
        match k.trim() {
            "d" => d = Some(v.trim().parse()?),
            "i" => i = Some(v.trim().parse()?),
            "puncture" => {
                puncture = match v.trim() {
                    "none" => PunctureKind::None,
                    "vertex" => PunctureKind::Vertex,
                    "edge" => PunctureKind::Edge,
                    other => anyhow::bail!("unknown puncture kind `{other}`"),
                }
            }
            other => anyhow::bail!("unknown target key `{other}`"),
        }
    }
    let d = d.ok_or_else(|| anyhow::anyhow!("target needs d=..."))?;
    let i = i.ok_or_else(|| anyhow::anyhow!("target needs i=..."))?;
    Ok(TargetSpec::new(d, i, puncture)?)
}

fn parse_gaps(s: &str) -> anyhow::Result<GapVector> {
    let entries: Result<Vec<u64>, _> = s.split(',').map(|p| p.trim().parse()).collect();
    Ok(GapVector::new(entries?))
}

/// `vertex:1111` or `edge:11*00`.
fn parse_puncture(s: &str) -> anyhow::Result<PunctureSpec> {
    let (kind, word) = s
        .split_once(':')
        .ok_or_else(|| anyhow::anyhow!("expected kind:word, e.g. vertex:1111"))?;
    let pattern = StarPattern::from_str(word)?;
    match kind {
        "vertex" => Ok(PunctureSpec::DeleteVertex(pattern)),
        "edge" => Ok(PunctureSpec::DeleteEdge(pattern)),
        other => anyhow::bail!("unknown puncture kind `{other}`"),
    }
}

fn parse_pins(s: &str) -> anyhow::Result<Vec<(Vec<u64>, u32)>> {
    let mut out = Vec::new();
    for piece in s.split(';') {
        let (cell_s, color_s) = piece
            .split_once('=')
            .ok_or_else(|| anyhow::anyhow!("bad pin `{piece}`, expected c1,c2,..=color"))?;
        let cell: Result<Vec<u64>, _> = cell_s.split(',').map(|p| p.trim().parse()).collect();
        out.push((cell?, color_s.trim().parse()?));
    }
    Ok(out)
}

fn emit(output: &OutputArgs, text: &str) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn budget_of(nodes: Option<u64>, secs: Option<u64>) -> Budget {
    Budget {
        max_nodes: nodes,
        max_time: secs.map(Duration::from_secs),
    }
}

fn report_header(config: &str) -> String {
    format!("polychrome {VERSION}\nconfig: {config}\n")
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::VerifyResidue(args) => {
            let target = parse_target(&args.target)?;
            let coloring = args.coloring.load()?;
            let wlog = !args.no_wlog;
            let verdict = with_workers(args.output.workers, || {
                verify_residues(&target, &coloring, wlog)
            })?;
            let body = verdict.report();
            let text = match args.format.as_str() {
                "text" => body,
                "report" => format!(
                    "{}{}",
                    report_header(&format!(
                        "verify-residue target={} coloring={} wlog={wlog}",
                        args.target,
                        args.coloring.echo()
                    )),
                    body
                ),
                other => anyhow::bail!("unknown format `{other}`"),
            };
            emit(&args.output, &text)?;
            Ok(if verdict.polychromatic { 0 } else { 1 })
        }
        Command::VerifyConcrete(args) => {
            let target = parse_target(&args.target)?;
            let coloring = args.coloring.load()?;
            let verdict = with_workers(args.output.workers, || {
                verify_concrete(args.n, &target, ColorSource::Simple(&coloring))
            })?;
            let body = verdict.report();
            let text = match args.format.as_str() {
                "text" => body,
                "report" => format!(
                    "{}{}",
                    report_header(&format!(
                        "verify-concrete n={} target={} coloring={}",
                        args.n,
                        args.target,
                        args.coloring.echo()
                    )),
                    body
                ),
                other => anyhow::bail!("unknown format `{other}`"),
            };
            emit(&args.output, &text)?;
            Ok(if verdict.polychromatic { 0 } else { 1 })
        }
        Command::Bound(args) => {
            let report: BoundReport = if args.closed {
                BoundReport {
                    kind: BoundKind::ClosedForm,
                    value: qd_closed_form(args.d)?,
                    inputs: (args.d as u64, 1, "closed".into()),
                    detail: None,
                }
            } else if args.binom {
                let i = args.i.ok_or_else(|| anyhow::anyhow!("--binom needs --i"))?;
                BoundReport {
                    kind: BoundKind::BinomialUpper,
                    value: binomial_upper(args.d, i)?,
                    inputs: (args.d as u64, i, "binom".into()),
                    detail: None,
                }
            } else if args.maxprod {
                let i = args.i.ok_or_else(|| anyhow::anyhow!("--maxprod needs --i"))?;
                BoundReport {
                    kind: BoundKind::MaxProductLower,
                    value: max_product_lower(args.d, i)?,
                    inputs: (args.d as u64, i, "maxprod".into()),
                    detail: None,
                }
            } else {
                let i = args.i.unwrap_or(1);
                let gaps = match &args.gaps {
                    Some(g) => parse_gaps(g)?,
                    None => GapVector::new(vec![0; args.d as usize + 1]),
                };
                if gaps.dim() != args.d as usize {
                    anyhow::bail!("gap vector must have d+1 entries");
                }
                let mut seq = shape_sequence(&gaps, i)?;
                if let Some(p) = &args.puncture {
                    seq = apply_puncture(&seq, &parse_puncture(p)?)?;
                }
                pig_bound(&seq)?
            };
            let text = match args.format.as_str() {
                "text" => format!("{}\n", report.value),
                "csv" => format!("d,i,puncture,kind,value\n{}\n", report.csv_row()),
                other => anyhow::bail!("unknown format `{other}`"),
            };
            emit(&args.output, &text)?;
            Ok(0)
        }
        Command::SearchSimple(args) => {
            let mode = match args.mode.as_str() {
                "first" => SearchMode::First,
                "all" => SearchMode::All,
                "refute" => SearchMode::Refute,
                other => anyhow::bail!("unknown mode `{other}`"),
            };
            let fixed = match &args.pin {
                Some(p) => parse_pins(p)?,
                None => Vec::new(),
            };
            let problem = SimpleSearchProblem::new(args.d, args.i, args.r, args.window, fixed)?;
            let outcome = search_simple(
                &problem,
                mode,
                &budget_of(args.budget_nodes, args.budget_secs),
                args.seed,
            )?;
            let mut text = format!(
                "status {}\nsolutions {}\n",
                status_name(outcome.status),
                outcome.solutions.len()
            );
            for table in &outcome.solutions {
                text.push_str("solution\n");
                text.push_str(&Coloring::Table(table.clone()).to_spec_text()?);
            }
            eprintln!(
                "nodes {} elapsed {:?}",
                outcome.stats.nodes, outcome.stats.elapsed
            );
            emit(&args.output, &text)?;
            Ok(status_code(outcome.status))
        }
        Command::SearchConcrete(args) => {
            let target = parse_target(&args.target)?;
            let outcome = search_concrete(
                args.n,
                &target,
                args.r,
                &budget_of(args.budget_nodes, args.budget_secs),
                args.seed,
            )?;
            let mut text = format!("status {}\n", status_name(outcome.status));
            if let Some(raw) = &outcome.raw_solution {
                text.push_str(&format!(
                    "assignment n={} i={} palette={}\n",
                    raw.n(),
                    raw.i(),
                    raw.palette()
                ));
                for sub in polychrome::pattern::enumerate_subcubes(args.n, target.i) {
                    text.push_str(&format!("{} = {}\n", sub, raw.color_of(&sub)));
                }
            }
            eprintln!(
                "nodes {} elapsed {:?}",
                outcome.stats.nodes, outcome.stats.elapsed
            );
            emit(&args.output, &text)?;
            Ok(status_code(outcome.status))
        }
        Command::Table(args) => {
            let target = parse_target(&args.target)?;
            let coloring = args.coloring.load()?;
            let table = sequence_color_table(&target, &coloring)?;
            emit(&args.output, &table.to_csv())?;
            Ok(0)
        }
        Command::Shapes(args) => {
            let gaps = parse_gaps(&args.gaps)?;
            let mut seq = shape_sequence(&gaps, args.i)?;
            if let Some(p) = &args.puncture {
                seq = apply_puncture(&seq, &parse_puncture(p)?)?;
            }
            let text = match args.format.as_str() {
                "text" => seq.to_text(),
                "svg" => {
                    let coloring = match &args.catalog {
                        Some(name) => Some(catalog(name, &parse_params(&args.params)?)?),
                        None => None,
                    };
                    seq.to_svg(coloring.as_ref())?
                }
                other => anyhow::bail!("unknown format `{other}`"),
            };
            emit(&args.output, &text)?;
            Ok(0)
        }
        Command::Catalog => {
            let mut text = String::new();
            for (name, desc) in catalog_names() {
                text.push_str(&format!("{name}: {desc}\n"));
            }
            print!("{text}");
            Ok(0)
        }
        Command::Partition(args) => {
            let coloring = args.coloring.load()?;
            let gaps = parse_gaps(&args.gaps)?;
            let seq = shape_sequence(&gaps, 1)?;
            let colors: Vec<u32> = match args.color {
                Some(c) => vec![c],
                None => (0..coloring.palette()).collect(),
            };
            let mut text = String::new();
            let mut all_partitioned = true;
            for color in colors {
                match partition_intervals(&coloring, &seq, args.columns, color)? {
                    PartitionOutcome::Partition(intervals) => {
                        let pretty: Vec<String> = intervals
                            .iter()
                            .map(|(a, b)| format!("[{a},{b})"))
                            .collect();
                        text.push_str(&format!("color {color}: {}\n", pretty.join(" ")));
                    }
                    PartitionOutcome::Violation {
                        shape_columns,
                        color,
                    } => {
                        all_partitioned = false;
                        text.push_str(&format!(
                            "color {color}: violation at columns {shape_columns:?}\n"
                        ));
                    }
                }
            }
            emit(&args.output, &text)?;
            Ok(if all_partitioned { 0 } else { 1 })
        }
    }
}

fn status_name(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Sat => "SAT",
        SearchStatus::Unsat => "UNSAT",
        SearchStatus::Exhausted => "EXHAUSTED-ENUMERATION",
    }
}

fn status_code(s: SearchStatus) -> i32 {
    match s {
        SearchStatus::Sat => 0,
        SearchStatus::Unsat => 1,
        SearchStatus::Exhausted => 3,
    }
}

/// Runs `f` inside a rayon pool of the requested size; the default pool
/// otherwise.
fn with_workers<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> polychrome::Result<T> + Send,
) -> polychrome::Result<T> {
    match workers {
        Some(w) if w > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
