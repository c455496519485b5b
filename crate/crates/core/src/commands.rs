//! Subcommands of the `qcap` binary.
//!
//! Each `cmd_*` function takes a validated catalog and its arguments and
//! returns the rendered output. [`run`] wires parsing, catalog loading and
//! `--out` handling together and maps failures to exit codes.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, Catalog, CatalogError};
use crate::codes::CodeError;
use crate::estimators::{self, EstimatorError, NeutrinoParams};
use crate::gates::{t_equivalent_with, GateInventory};
use crate::mitigation::{Mechanism, MitigationError};
use crate::model::{Application, SystemSpec};
use crate::normalize::{self, Frontier, NormalizeError, NormalizedMilestone};
use crate::report::{self, fmt_num};
use crate::workload::{self, WorkloadError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

pub const DEFAULT_HORIZONS: [i32; 3] = [2025, 2030, 2035];

/// A failure, rendered as one line `Class: message`.
#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    Catalog(CatalogError),
    Validation { class: &'static str, message: String },
    Infeasible(String),
    Io(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Usage(_) => EXIT_USAGE,
            CommandError::Catalog(_) | CommandError::Validation { .. } | CommandError::Io(_) => EXIT_VALIDATION,
            CommandError::Infeasible(_) => EXIT_INFEASIBLE,
        }
    }

    fn validation(class: &'static str, e: impl fmt::Display) -> Self {
        CommandError::Validation {
            class,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = match self {
            CommandError::Usage(m) => format!("UsageError: {m}"),
            CommandError::Catalog(e) => e.to_string(),
            CommandError::Validation { class, message } => format!("{class}: {message}"),
            CommandError::Infeasible(m) => format!("InfeasibleError: {m}"),
            CommandError::Io(m) => format!("IoError: {m}"),
        };
        f.write_str(&line.replace(['\n', '\r'], " "))
    }
}

impl std::error::Error for CommandError {}

impl From<CatalogError> for CommandError {
    fn from(e: CatalogError) -> Self {
        CommandError::Catalog(e)
    }
}

impl From<NormalizeError> for CommandError {
    fn from(e: NormalizeError) -> Self {
        CommandError::validation("NormalizeError", e)
    }
}

impl From<MitigationError> for CommandError {
    fn from(e: MitigationError) -> Self {
        CommandError::validation("MitigationError", e)
    }
}

impl From<CodeError> for CommandError {
    fn from(e: CodeError) -> Self {
        CommandError::validation("CodeError", e)
    }
}

impl From<EstimatorError> for CommandError {
    fn from(e: EstimatorError) -> Self {
        CommandError::validation("EstimatorError", e)
    }
}

impl From<WorkloadError> for CommandError {
    fn from(e: WorkloadError) -> Self {
        match e {
            WorkloadError::EmptySuite(_) => CommandError::Infeasible(e.to_string()),
            other => CommandError::validation("WorkloadError", other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
    Toml,
}

impl OutputFormat {
    fn name(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Svg => "svg",
            OutputFormat::Toml => "toml",
        }
    }
}

fn unsupported(cmd: &str, f: OutputFormat) -> CommandError {
    CommandError::Usage(format!("{cmd} does not support --format {}", f.name()))
}

#[derive(Debug, Parser)]
#[command(name = "qcap", version, about = "Quantum capability planning: P-vectors, frontiers, execution time and SQSP")]
pub struct Cli {
    /// Catalog file (TOML or JSON); defaults to $QCAP_CONFIG when set.
    #[arg(long, global = true, value_name = "PATH")]
    pub catalog: Option<PathBuf>,
    /// Do not merge the bundled datasets.
    #[arg(long, global = true)]
    pub no_bundled: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize roadmap milestones into P-vectors.
    Normalize(NormalizeArgs),
    /// Pareto frontier of normalized milestones per horizon year.
    Frontier(FrontierArgs),
    /// Extended regions reachable with error mitigation.
    Extend(ExtendArgs),
    /// Which applications fit on which milestones or systems.
    Feasibility(FeasibilityArgs),
    /// Execution time and time band for every application x system.
    ExecTime(ExecTimeArgs),
    /// Sustained quantum system performance.
    Sqsp(SqspArgs),
    /// Collective neutrino oscillation resource estimate.
    EstimateNeutrino(NeutrinoArgs),
    /// T-equivalent gate count using the catalog's conversion ratios.
    TEquivalent(TEquivalentArgs),
    /// SVG charts.
    Plot(PlotArgs),
    /// Print the merged catalog.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
pub struct NormalizeArgs {
    /// Milestone ids: comma list, `first..last` range or `all`.
    #[arg(long, default_value = "all")]
    pub milestones: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct FrontierArgs {
    /// Horizon years; repeatable or comma separated.
    #[arg(long = "horizon", value_delimiter = ',')]
    pub horizons: Vec<i32>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    #[arg(long, default_value = "all")]
    pub milestones: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct FeasibilityArgs {
    #[arg(long, default_value = "all")]
    pub apps: String,
    /// Milestone ids to test against (default: all normalizable).
    #[arg(long, conflicts_with = "systems")]
    pub milestones: Option<String>,
    /// System ids to test against instead of milestones.
    #[arg(long)]
    pub systems: Option<String>,
    /// Exit with code 3 when no pair is feasible.
    #[arg(long)]
    pub require_feasible: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExecTimeArgs {
    #[arg(long, default_value = "all")]
    pub apps: String,
    #[arg(long, default_value = "all")]
    pub systems: String,
    #[arg(long)]
    pub require_feasible: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SqspArgs {
    #[arg(long = "system", default_value = "all")]
    pub systems: String,
    /// Explicit suite; by default each system runs the applications that fit.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long)]
    pub require_feasible: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct NeutrinoArgs {
    /// Mode counts; repeatable or comma separated.
    #[arg(long = "modes", value_delimiter = ',', required = true)]
    pub modes: Vec<u64>,
    #[arg(long, default_value_t = 0.01)]
    pub error_budget: f64,
    #[arg(long, default_value_t = 1.0)]
    pub coupling: f64,
    /// Simulation time; defaults to 1/coupling.
    #[arg(long)]
    pub sim_time: Option<f64>,
    /// Frequency spread; defaults to 100 * coupling.
    #[arg(long)]
    pub freq_spread: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub constant: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TEquivalentArgs {
    #[arg(long, default_value_t = 0)]
    pub t: u64,
    #[arg(long, default_value_t = 0)]
    pub toffoli: u64,
    #[arg(long, default_value_t = 0)]
    pub rotation: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    Frontier,
    Regions,
    Grid,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long, value_enum, default_value = "frontier")]
    pub kind: PlotKind,
    #[arg(long = "horizon", value_delimiter = ',')]
    pub horizons: Vec<i32>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, value_enum, default_value = "toml")]
    pub format: OutputFormat,
}

/// Resolves an id selection against `ids` in catalog order. Accepts
/// `all`, comma lists and inclusive `first..last` ranges, mixed freely.
pub fn select_ids<'a>(spec: &str, ids: &[&'a str], what: &str) -> Result<Vec<&'a str>, CommandError> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("all") {
        return Ok(ids.to_vec());
    }
    let pos = |id: &str| {
        ids.iter()
            .position(|x| *x == id)
            .ok_or_else(|| CommandError::Usage(format!("unknown {what} id '{id}'")))
    };
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (i, j) = (pos(a.trim())?, pos(b.trim())?);
                if i > j {
                    return Err(CommandError::Usage(format!("empty {what} range '{part}'")));
                }
                out.extend_from_slice(&ids[i..=j]);
            }
            None => out.push(ids[pos(part)?]),
        }
    }
    if out.is_empty() {
        return Err(CommandError::Usage(format!("no {what} ids selected")));
    }
    Ok(out)
}

fn pick_apps(c: &Catalog, spec: &str) -> Result<Vec<Application>, CommandError> {
    let ids: Vec<&str> = c.applications.iter().map(|a| a.id.as_str()).collect();
    Ok(select_ids(spec, &ids, "application")?
        .into_iter()
        .filter_map(|id| c.application(id).cloned())
        .collect())
}

fn pick_systems(c: &Catalog, spec: &str) -> Result<Vec<SystemSpec>, CommandError> {
    let ids: Vec<&str> = c.systems.iter().map(|s| s.id.as_str()).collect();
    Ok(select_ids(spec, &ids, "system")?
        .into_iter()
        .filter_map(|id| c.system(id).cloned())
        .collect())
}

fn pick_normalized(c: &Catalog, spec: &str) -> Result<Vec<NormalizedMilestone>, CommandError> {
    let ids: Vec<&str> = c.milestones.iter().map(|m| m.id.as_str()).collect();
    let chosen: Vec<_> = select_ids(spec, &ids, "milestone")?
        .into_iter()
        .filter_map(|id| c.milestone(id).cloned())
        .collect();
    Ok(normalize::normalize_all(&chosen, c.config.normalize_options())?)
}

pub fn cmd_normalize(c: &Catalog, a: &NormalizeArgs) -> Result<String, CommandError> {
    let ms = pick_normalized(c, &a.milestones)?;
    match a.format {
        OutputFormat::Csv => Ok(report::normalized_csv(&ms)),
        OutputFormat::Json => Ok(report::json(&ms)),
        f => Err(unsupported("normalize", f)),
    }
}

fn frontiers(c: &Catalog, horizons: &[i32]) -> Result<(Vec<Frontier>, Vec<NormalizedMilestone>), CommandError> {
    let ms = normalize::normalize_all(&c.milestones, c.config.normalize_options())?;
    let horizons = if horizons.is_empty() { &DEFAULT_HORIZONS[..] } else { horizons };
    let fs = horizons
        .iter()
        .map(|&y| normalize::frontier(&ms, y))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((fs, ms))
}

pub fn cmd_frontier(c: &Catalog, a: &FrontierArgs) -> Result<String, CommandError> {
    let (fs, ms) = frontiers(c, &a.horizons)?;
    match a.format {
        OutputFormat::Csv => Ok(report::frontier_csv(&fs)),
        OutputFormat::Json => Ok(report::json(&fs)),
        OutputFormat::Svg => Ok(report::frontier_svg(&fs, &ms)),
        f => Err(unsupported("frontier", f)),
    }
}

#[derive(Debug, Serialize)]
struct ExtendRow {
    id: String,
    mechanism: Mechanism,
    base_qubits: u64,
    base_gates: f64,
    extended_qubits: u64,
    extended_gates: f64,
    sampling_overhead: f64,
}

pub fn cmd_extend(c: &Catalog, a: &ExtendArgs) -> Result<String, CommandError> {
    let mut rows = Vec::new();
    for nm in pick_normalized(c, &a.milestones)? {
        let code = normalize::assumed_code(&nm.source);
        for r in normalize::extended_regions(&nm, code, c.config.overhead)? {
            rows.push(ExtendRow {
                id: nm.source.id.clone(),
                mechanism: r.mechanism,
                base_qubits: r.base.n_qubits(),
                base_gates: r.base.n_gates(),
                extended_qubits: r.extended.n_qubits(),
                extended_gates: r.extended.n_gates(),
                sampling_overhead: r.sampling_overhead,
            });
        }
    }
    match a.format {
        OutputFormat::Csv => Ok(report::csv_table(
            &[
                "id",
                "mechanism",
                "base_qubits",
                "base_gates",
                "extended_qubits",
                "extended_gates",
                "sampling_overhead",
            ],
            rows.iter().map(|r| {
                [
                    r.id.clone(),
                    r.mechanism.as_str().to_string(),
                    r.base_qubits.to_string(),
                    fmt_num(r.base_gates),
                    r.extended_qubits.to_string(),
                    fmt_num(r.extended_gates),
                    fmt_num(r.sampling_overhead),
                ]
            }),
        )),
        OutputFormat::Json => Ok(report::json(&rows)),
        f => Err(unsupported("extend", f)),
    }
}

#[derive(Debug, Serialize)]
struct FeasibilityRow {
    app_id: String,
    target_id: String,
    target_qubits: Option<u64>,
    target_gates: f64,
    feasible: bool,
}

pub fn cmd_feasibility(c: &Catalog, a: &FeasibilityArgs) -> Result<String, CommandError> {
    let apps = pick_apps(c, &a.apps)?;
    let targets: Vec<SystemSpec> = match &a.systems {
        Some(spec) => pick_systems(c, spec)?,
        None => pick_normalized(c, a.milestones.as_deref().unwrap_or("all"))?
            .into_iter()
            .map(|m| SystemSpec {
                id: m.source.id.clone(),
                max_gates: m.pvec.n_gates(),
                clock_hz: m.source.clock_hz.unwrap_or(1.0),
                max_qubits: Some(m.pvec.n_qubits()),
            })
            .collect(),
    };
    let rows: Vec<FeasibilityRow> = apps
        .iter()
        .flat_map(|app| {
            targets.iter().map(move |t| FeasibilityRow {
                app_id: app.id.clone(),
                target_id: t.id.clone(),
                target_qubits: t.max_qubits,
                target_gates: t.max_gates,
                feasible: workload::feasible(app, t),
            })
        })
        .collect();
    if a.require_feasible && !rows.iter().any(|r| r.feasible) {
        return Err(CommandError::Infeasible("no application fits any selected target".into()));
    }
    match a.format {
        OutputFormat::Csv => Ok(report::csv_table(
            &["app_id", "target_id", "target_qubits", "target_gates", "feasible"],
            rows.iter().map(|r| {
                [
                    r.app_id.clone(),
                    r.target_id.clone(),
                    r.target_qubits.map(|q| q.to_string()).unwrap_or_default(),
                    fmt_num(r.target_gates),
                    r.feasible.to_string(),
                ]
            }),
        )),
        OutputFormat::Json => Ok(report::json(&rows)),
        f => Err(unsupported("feasibility", f)),
    }
}

pub fn cmd_exec_time(c: &Catalog, a: &ExecTimeArgs) -> Result<String, CommandError> {
    let apps = pick_apps(c, &a.apps)?;
    let systems = pick_systems(c, &a.systems)?;
    let grid = workload::run_grid_with(&apps, &systems, &c.config.band_thresholds());
    if a.require_feasible && grid.infeasible_count() == grid.cells.len() {
        return Err(CommandError::Infeasible("every application x system cell is infeasible".into()));
    }
    match a.format {
        OutputFormat::Csv => Ok(report::exec_time_csv(&grid)),
        OutputFormat::Json => Ok(report::json(&grid.cells)),
        OutputFormat::Svg => Ok(report::grid_svg(&grid)),
        f => Err(unsupported("exec-time", f)),
    }
}

pub fn cmd_sqsp(c: &Catalog, a: &SqspArgs) -> Result<String, CommandError> {
    let systems = pick_systems(c, &a.systems)?;
    let fixed = a.suite.as_deref().map(|s| pick_apps(c, s)).transpose()?;
    let mut reports = Vec::with_capacity(systems.len());
    for s in &systems {
        let suite = match &fixed {
            Some(apps) => apps.clone(),
            None => workload::suite_for(s, &c.applications),
        };
        reports.push(workload::sqsp(s, &suite, c.config.year_seconds)?);
    }
    if a.require_feasible && reports.iter().all(|r| r.value == 0.0) {
        return Err(CommandError::Infeasible("suite is infeasible on every selected system".into()));
    }
    match a.format {
        OutputFormat::Csv => Ok(report::csv_table(
            &["system_id", "suite", "sqsp"],
            reports
                .iter()
                .map(|r| [r.system_id.clone(), r.suite.join(";"), fmt_num(r.value)]),
        )),
        OutputFormat::Json => Ok(report::json(&reports)),
        f => Err(unsupported("sqsp", f)),
    }
}

#[derive(Debug, Serialize)]
struct NeutrinoRow {
    n_modes: u64,
    trotter_steps: u64,
    gates_per_step: u64,
    n_qubits: u64,
    n_gates: f64,
    note: &'static str,
}

pub fn cmd_estimate_neutrino(a: &NeutrinoArgs) -> Result<String, CommandError> {
    let mut rows = Vec::with_capacity(a.modes.len());
    for &n in &a.modes {
        let p = NeutrinoParams {
            n_modes: n,
            error_budget: a.error_budget,
            coupling: a.coupling,
            sim_time: a.sim_time.unwrap_or(1.0 / a.coupling),
            freq_spread: a.freq_spread.unwrap_or(100.0 * a.coupling),
            constant: a.constant,
        };
        let pv = estimators::neutrino_pvector(&p)?;
        rows.push(NeutrinoRow {
            n_modes: n,
            trotter_steps: estimators::trotter_steps(&p)?,
            gates_per_step: estimators::gates_per_step(n),
            n_qubits: pv.n_qubits(),
            n_gates: pv.n_gates(),
            note: "conservative bound",
        });
    }
    match a.format {
        OutputFormat::Csv => Ok(report::csv_table(
            &["n_modes", "trotter_steps", "gates_per_step", "n_qubits", "n_gates", "note"],
            rows.iter().map(|r| {
                [
                    r.n_modes.to_string(),
                    r.trotter_steps.to_string(),
                    r.gates_per_step.to_string(),
                    r.n_qubits.to_string(),
                    fmt_num(r.n_gates),
                    r.note.to_string(),
                ]
            }),
        )),
        OutputFormat::Json => Ok(report::json(&rows)),
        f => Err(unsupported("estimate-neutrino", f)),
    }
}

pub fn cmd_t_equivalent(c: &Catalog, a: &TEquivalentArgs) -> Result<String, CommandError> {
    let inv = GateInventory::new(a.t, a.toffoli, a.rotation);
    Ok(format!("{}\n", fmt_num(t_equivalent_with(inv, c.config.gate_ratios))))
}

pub fn cmd_plot(c: &Catalog, a: &PlotArgs) -> Result<String, CommandError> {
    match a.kind {
        PlotKind::Frontier => {
            let (fs, ms) = frontiers(c, &a.horizons)?;
            Ok(report::frontier_svg(&fs, &ms))
        }
        PlotKind::Regions => Ok(report::regions_svg()),
        PlotKind::Grid => {
            let grid = workload::run_grid_with(&c.applications, &c.systems, &c.config.band_thresholds());
            Ok(report::grid_svg(&grid))
        }
    }
}

pub fn cmd_catalog(c: &Catalog, a: &CatalogArgs) -> Result<String, CommandError> {
    match a.format {
        OutputFormat::Toml => Ok(catalog::write_catalog(c, catalog::Format::Toml)),
        OutputFormat::Json => Ok(catalog::write_catalog(c, catalog::Format::Json)),
        f => Err(unsupported("catalog", f)),
    }
}

/// Runs a parsed command line and returns the text for stdout (empty when
/// `--out` was given).
pub fn run(cli: &Cli) -> Result<String, CommandError> {
    let c = catalog::resolve_catalog(cli.catalog.as_deref(), cli.no_bundled)?;
    let body = match &cli.command {
        Command::Normalize(a) => cmd_normalize(&c, a)?,
        Command::Frontier(a) => cmd_frontier(&c, a)?,
        Command::Extend(a) => cmd_extend(&c, a)?,
        Command::Feasibility(a) => cmd_feasibility(&c, a)?,
        Command::ExecTime(a) => cmd_exec_time(&c, a)?,
        Command::Sqsp(a) => cmd_sqsp(&c, a)?,
        Command::EstimateNeutrino(a) => cmd_estimate_neutrino(a)?,
        Command::TEquivalent(a) => cmd_t_equivalent(&c, a)?,
        Command::Plot(a) => cmd_plot(&c, a)?,
        Command::Catalog(a) => cmd_catalog(&c, a)?,
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| CommandError::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(body),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qcap").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn id_selection() {
        let ids = ["A", "B", "C", "D", "E", "F"];
        assert_eq!(select_ids("A..F", &ids, "app").unwrap(), ids);
        assert_eq!(select_ids("B,D..E", &ids, "app").unwrap(), ["B", "D", "E"]);
        assert_eq!(select_ids("all", &ids, "app").unwrap(), ids);
        assert_eq!(select_ids("Z", &ids, "app").unwrap_err().exit_code(), EXIT_USAGE);
        assert!(select_ids("D..B", &ids, "app").is_err());
    }

    #[test]
    fn exec_time_table() {
        let out = run(&cli(&["exec-time", "--apps", "A..F", "--systems", "1..9", "--format", "csv"])).unwrap();
        assert_eq!(out.lines().count(), 55);
        assert!(out.contains("F,9,"));
    }

    #[test]
    fn sqsp_single_system() {
        let out = run(&cli(&["sqsp", "--system", "1"])).unwrap();
        let row = out.lines().nth(1).unwrap();
        let v: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
        assert!((v - 315.36).abs() < 1e-9);
        assert!(row.starts_with("1,A;B,"));
    }

    #[test]
    fn infeasible_required() {
        let err = run(&cli(&["sqsp", "--system", "1", "--suite", "C", "--require-feasible"])).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INFEASIBLE);
        assert!(err.to_string().starts_with("InfeasibleError: "));
        let ok = run(&cli(&["sqsp", "--system", "1", "--suite", "C"])).unwrap();
        assert!(ok.contains("1,C,0"));
    }

    #[test]
    fn unsupported_format_is_usage() {
        let err = run(&cli(&["sqsp", "--format", "svg"])).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn neutrino_rows() {
        let out = run(&cli(&["estimate-neutrino", "--modes", "10,100"])).unwrap();
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[1], "10,101000,2750,10,277750000,conservative bound");
        assert!(lines[2].starts_with("100,1010000,252500,100,"));
    }

    #[test]
    fn t_equivalent_uses_ratios() {
        assert_eq!(run(&cli(&["t-equivalent", "--t", "10", "--toffoli", "3", "--rotation", "2"])).unwrap(), "222\n");
    }

    #[test]
    fn extend_rows() {
        let out = run(&cli(&["extend", "--milestones", "ibm-starling-2029"])).unwrap();
        assert!(out.contains("ftqc-qem-qubits"));
        assert!(out.contains("ftqc-qem-gates"));
    }
}
