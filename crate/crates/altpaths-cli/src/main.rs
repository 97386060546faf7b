//! Command-line front end for the alternating-path library: construction,
//! counting, packing, extremal search, bound verification, and seeded Monte
//! Carlo experiments with CSV/JSON output.
//!
//! Exit codes: 0 success, 2 parse error (arguments or input files), 3
//! precondition violation, 4 budget exceeded.

mod experiments;
mod report;

use altpaths::coloring::{Color, Side};
use altpaths::constructions::{
    balanced_split_coloring, block_coloring, odd_path_coloring, random_coloring,
    random_complete_coloring,
};
use altpaths::counting::{pair_count_table, CountError, WorkBudget};
use altpaths::io::{
    parse_coloring, path_records_to_json_lines, write_coloring, write_complete_coloring,
    HostColoring,
};
use altpaths::paths::{BiVertex, Flavor};
use altpaths::search::{
    exact_alpha, exact_kappa, exact_lambda, max_disjoint_paths, verify_bounds, BoundFamily,
    SearchBudget, SearchError, SymmetryMode,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{emit, json_report, CsvReport};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Parse(format!("io: {e}"))
    }
}

impl From<altpaths::io::ParseError> for CliError {
    fn from(e: altpaths::io::ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::InstanceCapExceeded { .. } | SearchError::StepBudgetExceeded { .. } => {
                CliError::Budget(e.to_string())
            }
            SearchError::Count(CountError::BudgetExceeded { .. }) => {
                CliError::Budget(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "altpaths",
    about = "Alternating paths in edge-colored complete (bipartite) graphs: \
             exact counters, constructions, packing, extremal search, and \
             Monte Carlo experiments",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a coloring file plus a JSON sidecar with the parameters.
    Gen(GenArgs),
    /// Count alternating walks or paths for every relevant pair.
    Count(CountArgs),
    /// Maximum internally disjoint alternating path packings per pair.
    Pack(PackArgs),
    /// Exhaustive extremal search (kappa, lambda, alpha).
    Search(SearchArgs),
    /// Check a closed-form bound against every coloring of a small instance.
    Verify(VerifyArgs),
    /// Seeded Monte Carlo experiments with CSV output.
    Mc(McArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Construction {
    Random,
    Block,
    BalancedSplit,
    Oddpath,
    CompleteRandom,
}

#[derive(Args)]
struct GenArgs {
    /// Which construction to build.
    #[arg(value_enum)]
    construction: Construction,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: Color,
    /// Chain half-length for balanced-split (paths of length 2k).
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; the sidecar lands at <out>.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FlavorArg {
    Walk,
    Path,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Walk => Flavor::Walk,
            FlavorArg::Path => Flavor::Path,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Coloring file (bipartite or complete header).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    length: usize,
    #[arg(long, value_enum, default_value_t = FlavorArg::Walk)]
    flavor: FlavorArg,
    /// Extension-step budget for distinct-vertex enumeration.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PackArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    length: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Also write every optimal family as JSON lines to this file.
    #[arg(long)]
    paths_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum SearchKind {
    Kappa,
    Lambda,
    Alpha,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(value_enum)]
    kind: SearchKind,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    r: Color,
    /// Path length for kappa/lambda; minimum Hamming distance for alpha.
    #[arg(long)]
    length: usize,
    #[arg(long, value_enum, default_value_t = FlavorArg::Walk)]
    flavor: FlavorArg,
    /// Enumerate raw assignments instead of sorted-column representatives.
    #[arg(long)]
    raw: bool,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Cap on the number of enumerated instances.
    #[arg(long, default_value_t = 1 << 26)]
    max_instances: u128,
    /// Also write the witness in the coloring/code file format.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyArg {
    TwoPathMin,
    ThreePathTotal,
    FourWalkTotal,
    CodegreeSum,
}

impl From<FamilyArg> for BoundFamily {
    fn from(f: FamilyArg) -> BoundFamily {
        match f {
            FamilyArg::TwoPathMin => BoundFamily::TwoPathMin,
            FamilyArg::ThreePathTotal => BoundFamily::ThreePathTotal,
            FamilyArg::FourWalkTotal => BoundFamily::FourWalkTotal,
            FamilyArg::CodegreeSum => BoundFamily::CodegreeSum,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: Color,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 1 << 26)]
    max_instances: u128,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Experiment {
    #[value(name = "concentration-2path")]
    Concentration2path,
    MatchingDeficiency,
    #[value(name = "complete-2path")]
    Complete2path,
    ChainYield,
}

#[derive(Args)]
struct McArgs {
    #[arg(value_enum)]
    experiment: Experiment,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: Color,
    /// Chain half-length (chain-yield) or subset samples per trial
    /// (matching-deficiency).
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Subset fraction for matching-deficiency.
    #[arg(long, default_value_t = 0.3)]
    alpha: f64,
    #[arg(long, default_value_t = 20)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Threshold multiplier; defaults to 0.9 for the 2-path experiments,
    /// 5.0 (times ln m) for matching-deficiency, 0.8 for chain-yield.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct GenConfig {
    construction: Construction,
    m: Option<usize>,
    n: usize,
    r: Color,
    k: usize,
    seed: u64,
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let n = args.n;
    let (text, m) = match args.construction {
        Construction::Random => {
            let m = args
                .m
                .ok_or_else(|| CliError::Precondition("random needs --m".into()))?;
            if m == 0 || n == 0 || args.r < 2 {
                return Err(CliError::Precondition("need m >= 1, n >= 1, r >= 2".into()));
            }
            (
                write_coloring(&random_coloring(m, n, args.r, args.seed)),
                Some(m),
            )
        }
        Construction::Block => {
            let m = args
                .m
                .ok_or_else(|| CliError::Precondition("block needs --m".into()))?;
            if m == 0 || n == 0 {
                return Err(CliError::Precondition("need m >= 1 and n >= 1".into()));
            }
            (write_coloring(&block_coloring(m, n)), Some(m))
        }
        Construction::BalancedSplit => {
            let m = args
                .m
                .ok_or_else(|| CliError::Precondition("balanced-split needs --m".into()))?;
            let split = balanced_split_coloring(m, n, args.k, args.seed)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            (write_coloring(&split.coloring), Some(m))
        }
        Construction::Oddpath => {
            let m = args
                .m
                .ok_or_else(|| CliError::Precondition("oddpath needs --m".into()))?;
            let c = odd_path_coloring(m, n).map_err(|e| CliError::Precondition(e.to_string()))?;
            (write_coloring(&c), Some(m))
        }
        Construction::CompleteRandom => {
            if n < 2 {
                return Err(CliError::Precondition(
                    "complete-random needs n >= 2".into(),
                ));
            }
            (
                write_complete_coloring(&random_complete_coloring(n, args.r, args.seed)),
                None,
            )
        }
    };
    std::fs::write(&args.out, &text)?;
    let sidecar = GenConfig {
        construction: args.construction,
        m,
        n,
        r: args.r,
        k: args.k,
        seed: args.seed,
    };
    let mut sidecar_path = args.out.clone().into_os_string();
    sidecar_path.push(".json");
    std::fs::write(PathBuf::from(sidecar_path), json_report(&sidecar))?;
    eprintln!("wrote {}", args.out.display());
    Ok(())
}

#[derive(Serialize)]
struct PairEntry {
    a_side: Side,
    a: usize,
    b_side: Side,
    b: usize,
    count: String,
}

#[derive(Serialize)]
struct CountReport<C: Serialize> {
    command: &'static str,
    config: C,
    min: String,
    max: String,
    pairs: Vec<PairEntry>,
}

#[derive(Serialize)]
struct CountConfig {
    input: String,
    length: usize,
    flavor: FlavorArg,
    budget: u64,
}

fn load_coloring(path: &PathBuf) -> Result<HostColoring, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_coloring(&text)?)
}

fn cmd_count(args: CountArgs) -> Result<(), CliError> {
    let config = CountConfig {
        input: args.input.display().to_string(),
        length: args.length,
        flavor: args.flavor,
        budget: args.budget,
    };
    let pairs = match load_coloring(&args.input)? {
        HostColoring::Bipartite(c) => {
            let table =
                pair_count_table(&c, args.length, args.flavor.into(), WorkBudget(args.budget))?;
            table
                .entries
                .iter()
                .map(|e| PairEntry {
                    a_side: e.a.side,
                    a: e.a.id,
                    b_side: e.b.side,
                    b: e.b.id,
                    count: e.count.to_string(),
                })
                .collect::<Vec<_>>()
        }
        HostColoring::Complete(cc) => {
            use altpaths::counting::{count_alt_paths_exact_complete, count_alt_walks_complete};
            let mut entries = Vec::new();
            for u in 0..cc.n() {
                for v in (u + 1)..cc.n() {
                    let count = match Flavor::from(args.flavor) {
                        Flavor::Walk => count_alt_walks_complete(&cc, u, v, args.length)?,
                        Flavor::Path => count_alt_paths_exact_complete(
                            &cc,
                            u,
                            v,
                            args.length,
                            WorkBudget(args.budget),
                        )?,
                    };
                    entries.push(PairEntry {
                        a_side: Side::Right,
                        a: u,
                        b_side: Side::Right,
                        b: v,
                        count: count.to_string(),
                    });
                }
            }
            entries
        }
    };
    let min = pairs
        .iter()
        .map(|e| e.count.parse::<u128>().unwrap())
        .min()
        .unwrap_or(0);
    let max = pairs
        .iter()
        .map(|e| e.count.parse::<u128>().unwrap())
        .max()
        .unwrap_or(0);
    let text = match args.format {
        FormatArg::Json => {
            let report = CountReport {
                command: "count",
                config,
                min: min.to_string(),
                max: max.to_string(),
                pairs,
            };
            json_report(&report)
        }
        FormatArg::Csv => {
            let mut csv = CsvReport::new(
                "count-pairs",
                &config,
                &["a_side", "a", "b_side", "b", "count"],
            );
            for e in &pairs {
                csv.row(vec![
                    e.a_side.to_string(),
                    e.a.to_string(),
                    e.b_side.to_string(),
                    e.b.to_string(),
                    e.count.clone(),
                ]);
            }
            csv.note(format!("min {min} max {max}"));
            csv.render()
        }
    };
    emit(&args.out, &text)?;
    Ok(())
}

#[derive(Serialize)]
struct PackEntry {
    a_side: Side,
    a: usize,
    b_side: Side,
    b: usize,
    size: usize,
}

#[derive(Serialize)]
struct PackReport<C: Serialize> {
    command: &'static str,
    config: C,
    min: usize,
    max: usize,
    pairs: Vec<PackEntry>,
}

#[derive(Serialize)]
struct PackConfig {
    input: String,
    length: usize,
    budget: u64,
}

fn cmd_pack(args: PackArgs) -> Result<(), CliError> {
    let config = PackConfig {
        input: args.input.display().to_string(),
        length: args.length,
        budget: args.budget,
    };
    let c = match load_coloring(&args.input)? {
        HostColoring::Bipartite(c) => c,
        HostColoring::Complete(_) => {
            return Err(CliError::Precondition(
                "pack operates on bipartite colorings; complete-host packing is not offered".into(),
            ))
        }
    };
    if args.length < 2 {
        return Err(CliError::Precondition("pack needs --length >= 2".into()));
    }
    let budget = SearchBudget {
        max_instances: 1 << 26,
        max_steps: args.budget,
    };
    let mut entries = Vec::new();
    let mut families = Vec::new();
    let pairs: Vec<(BiVertex, BiVertex)> = if args.length % 2 == 0 {
        let mut v = Vec::new();
        for a in 0..c.n() {
            for b in (a + 1)..c.n() {
                v.push((BiVertex::right(a), BiVertex::right(b)));
            }
        }
        v
    } else {
        let mut v = Vec::new();
        for a in 0..c.m() {
            for b in 0..c.n() {
                v.push((BiVertex::left(a), BiVertex::right(b)));
            }
        }
        v
    };
    for (a, b) in pairs {
        let packing = max_disjoint_paths(&c, a, b, args.length, &budget)?;
        entries.push(PackEntry {
            a_side: a.side,
            a: a.id,
            b_side: b.side,
            b: b.id,
            size: packing.size,
        });
        families.extend(packing.paths);
    }
    let min = entries.iter().map(|e| e.size).min().unwrap_or(0);
    let max = entries.iter().map(|e| e.size).max().unwrap_or(0);
    if let Some(paths_out) = &args.paths_out {
        std::fs::write(paths_out, path_records_to_json_lines(&families))?;
    }
    let text = match args.format {
        FormatArg::Json => json_report(&PackReport {
            command: "pack",
            config,
            min,
            max,
            pairs: entries,
        }),
        FormatArg::Csv => {
            let mut csv = CsvReport::new(
                "pack-pairs",
                &config,
                &["a_side", "a", "b_side", "b", "size"],
            );
            for e in &entries {
                csv.row(vec![
                    e.a_side.to_string(),
                    e.a.to_string(),
                    e.b_side.to_string(),
                    e.b.to_string(),
                    e.size.to_string(),
                ]);
            }
            csv.note(format!("min {min} max {max}"));
            csv.render()
        }
    };
    emit(&args.out, &text)?;
    Ok(())
}

#[derive(Serialize)]
struct SearchConfig {
    kind: SearchKind,
    m: usize,
    n: Option<usize>,
    r: Color,
    length: usize,
    flavor: FlavorArg,
    raw: bool,
    budget: u64,
    max_instances: u128,
}

#[derive(Serialize)]
struct SearchReport {
    command: &'static str,
    config: SearchConfig,
    value: String,
    instances_scanned: u64,
    witness: String,
}

fn cmd_search(args: SearchArgs) -> Result<(), CliError> {
    let config = SearchConfig {
        kind: args.kind,
        m: args.m,
        n: args.n,
        r: args.r,
        length: args.length,
        flavor: args.flavor,
        raw: args.raw,
        budget: args.budget,
        max_instances: args.max_instances,
    };
    let budget = SearchBudget {
        max_instances: args.max_instances,
        max_steps: args.budget,
    };
    let mode = if args.raw {
        SymmetryMode::Raw
    } else {
        SymmetryMode::ColumnCanonical
    };
    let (value, instances, witness) = match args.kind {
        SearchKind::Kappa => {
            let n = args
                .n
                .ok_or_else(|| CliError::Precondition("kappa needs --n".into()))?;
            let res = exact_kappa(args.m, n, args.r, args.length, mode, &budget)?;
            (
                res.value,
                res.instances_scanned,
                write_coloring(&res.witness),
            )
        }
        SearchKind::Lambda => {
            let n = args
                .n
                .ok_or_else(|| CliError::Precondition("lambda needs --n".into()))?;
            if args.r != 2 {
                return Err(CliError::Precondition(
                    "lambda is defined for 2 colorings".into(),
                ));
            }
            let res = exact_lambda(args.m, n, args.length, args.flavor.into(), mode, &budget)?;
            (
                res.value,
                res.instances_scanned,
                write_coloring(&res.witness),
            )
        }
        SearchKind::Alpha => {
            let res = exact_alpha(args.m, args.length, args.r, &budget)?;
            (
                res.value,
                res.instances_scanned,
                altpaths::io::write_code(&res.witness),
            )
        }
    };
    if let Some(path) = &args.witness_out {
        std::fs::write(path, &witness)?;
    }
    let report = SearchReport {
        command: "search",
        config,
        value: value.to_string(),
        instances_scanned: instances,
        witness,
    };
    emit(&args.out, &json_report(&report))?;
    Ok(())
}

#[derive(Serialize)]
struct VerifyConfig {
    family: FamilyArg,
    m: usize,
    n: usize,
    r: Color,
    budget: u64,
    max_instances: u128,
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    config: VerifyConfig,
    instances: u64,
    violations: u64,
    holds: bool,
    max_value: String,
    bound: String,
    witness: String,
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let config = VerifyConfig {
        family: args.family,
        m: args.m,
        n: args.n,
        r: args.r,
        budget: args.budget,
        max_instances: args.max_instances,
    };
    let budget = SearchBudget {
        max_instances: args.max_instances,
        max_steps: args.budget,
    };
    let report = verify_bounds(args.family.into(), args.m, args.n, args.r, &budget)?;
    eprintln!(
        "{}: holds on {}/{} colorings, max {} against bound {}",
        report.family.name(),
        report.instances - report.violations,
        report.instances,
        report.max_value,
        report.bound,
    );
    let out = VerifyReport {
        command: "verify",
        config,
        instances: report.instances,
        violations: report.violations,
        holds: report.violations == 0,
        max_value: report.max_value.to_string(),
        bound: report.bound.to_string(),
        witness: write_coloring(&report.witness),
    };
    emit(&args.out, &json_report(&out))?;
    Ok(())
}

fn cmd_mc(args: McArgs) -> Result<(), CliError> {
    let default_tolerance = match args.experiment {
        Experiment::Concentration2path | Experiment::Complete2path => 0.9,
        Experiment::MatchingDeficiency => 5.0,
        Experiment::ChainYield => 0.8,
    };
    let config = experiments::McConfig {
        experiment: match args.experiment {
            Experiment::Concentration2path => "concentration-2path".into(),
            Experiment::MatchingDeficiency => "matching-deficiency".into(),
            Experiment::Complete2path => "complete-2path".into(),
            Experiment::ChainYield => "chain-yield".into(),
        },
        m: args.m,
        n: args.n,
        r: args.r,
        k: args.k,
        alpha: args.alpha,
        trials: args.trials,
        seed: args.seed,
        tolerance: args.tolerance.unwrap_or(default_tolerance),
    };
    if args.r < 2 {
        return Err(CliError::Precondition("need r >= 2".into()));
    }
    let report: CsvReport = match args.experiment {
        Experiment::Concentration2path => experiments::concentration_2path(&config)?,
        Experiment::MatchingDeficiency => experiments::matching_deficiency(&config)?,
        Experiment::Complete2path => experiments::complete_2path(&config)?,
        Experiment::ChainYield => experiments::chain_yield(&config)?,
    };
    emit(&args.out, &report.render())?;
    Ok(())
}

fn run() -> Result<(), CliError> {
    let started = std::time::Instant::now();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Count(args) => cmd_count(args),
        Command::Pack(args) => cmd_pack(args),
        Command::Search(args) => cmd_search(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Mc(args) => cmd_mc(args),
    };
    eprintln!("runtime: {} ms", started.elapsed().as_millis());
    result
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
