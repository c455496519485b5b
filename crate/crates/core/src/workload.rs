//! Execution time, time bands, feasibility, throughput and SQSP over
//! application x system grids.
//!
//! Execution time is `shots * n_gates / clock_hz` and does not depend on
//! qubit count. SQSP is the geometric mean of per-application yearly
//! throughputs, zero when any suite member cannot run.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Application, SystemSpec};

/// 365 days.
pub const YEAR_SECONDS: f64 = 31_536_000.0;
/// 30 days.
pub const MONTH_SECONDS: f64 = 2_592_000.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WorkloadError {
    #[error("{name} must be finite and positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("benchmark suite for system '{0}' is empty")]
    EmptySuite(String),
}

fn positive(name: &'static str, value: f64) -> Result<f64, WorkloadError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(WorkloadError::NonPositive { name, value })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TimeBand {
    #[serde(rename = "lt-1s")]
    Lt1s,
    #[serde(rename = "lt-1min")]
    Lt1min,
    #[serde(rename = "lt-1h")]
    Lt1h,
    #[serde(rename = "lt-1day")]
    Lt1day,
    #[serde(rename = "lt-1wk")]
    Lt1wk,
    #[serde(rename = "lt-1mo")]
    Lt1mo,
    #[serde(rename = "lt-1yr")]
    Lt1yr,
    #[serde(rename = "gt-1yr")]
    Gt1yr,
}

impl TimeBand {
    pub const ALL: [TimeBand; 8] = [
        TimeBand::Lt1s,
        TimeBand::Lt1min,
        TimeBand::Lt1h,
        TimeBand::Lt1day,
        TimeBand::Lt1wk,
        TimeBand::Lt1mo,
        TimeBand::Lt1yr,
        TimeBand::Gt1yr,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TimeBand::Lt1s => "lt-1s",
            TimeBand::Lt1min => "lt-1min",
            TimeBand::Lt1h => "lt-1h",
            TimeBand::Lt1day => "lt-1day",
            TimeBand::Lt1wk => "lt-1wk",
            TimeBand::Lt1mo => "lt-1mo",
            TimeBand::Lt1yr => "lt-1yr",
            TimeBand::Gt1yr => "gt-1yr",
        }
    }
}

impl fmt::Display for TimeBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Upper edges, in seconds, of the first seven bands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandThresholds {
    pub edges: [f64; 7],
}

impl Default for BandThresholds {
    fn default() -> Self {
        Self::with_calendar(MONTH_SECONDS, YEAR_SECONDS)
    }
}

impl BandThresholds {
    pub fn with_calendar(month_seconds: f64, year_seconds: f64) -> Self {
        BandThresholds {
            edges: [1.0, 60.0, 3_600.0, 86_400.0, 604_800.0, month_seconds, year_seconds],
        }
    }

    /// First band whose upper edge is strictly greater than `seconds`, so
    /// exactly one second falls in `lt-1min`.
    pub fn band(&self, seconds: f64) -> TimeBand {
        self.edges
            .iter()
            .position(|&edge| seconds < edge)
            .map_or(TimeBand::Gt1yr, |i| TimeBand::ALL[i])
    }
}

pub fn band(seconds: f64) -> TimeBand {
    BandThresholds::default().band(seconds)
}

/// `shots * n_gates`.
pub fn total_cost(app: &Application) -> f64 {
    app.shots as f64 * app.pvec.n_gates()
}

pub fn exec_time(cost: f64, clock_hz: f64) -> Result<f64, WorkloadError> {
    Ok(positive("total cost", cost)? / positive("clock_hz", clock_hz)?)
}

/// Gate budget is inclusive; qubits are only checked when the system
/// declares a capacity.
pub fn feasible(app: &Application, sys: &SystemSpec) -> bool {
    app.pvec.n_gates() <= sys.max_gates && sys.max_qubits.is_none_or(|cap| app.pvec.n_qubits() <= cap)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunEstimate {
    pub app_id: String,
    pub system_id: String,
    pub total_cost: f64,
    /// `None` marks an infeasible combination.
    pub exec_seconds: Option<f64>,
    pub band: Option<TimeBand>,
}

impl RunEstimate {
    pub fn is_feasible(&self) -> bool {
        self.exec_seconds.is_some()
    }
}

pub fn estimate(app: &Application, sys: &SystemSpec, thresholds: &BandThresholds) -> RunEstimate {
    let cost = total_cost(app);
    let exec_seconds = feasible(app, sys).then(|| cost / sys.clock_hz);
    RunEstimate {
        app_id: app.id.clone(),
        system_id: sys.id.clone(),
        total_cost: cost,
        exec_seconds,
        band: exec_seconds.map(|s| thresholds.band(s)),
    }
}

/// Full application x system cross product, application-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunGrid {
    pub n_apps: usize,
    pub n_systems: usize,
    pub cells: Vec<RunEstimate>,
}

impl RunGrid {
    pub fn cell(&self, app: usize, system: usize) -> &RunEstimate {
        &self.cells[app * self.n_systems + system]
    }

    pub fn find(&self, app_id: &str, system_id: &str) -> Option<&RunEstimate> {
        self.cells.iter().find(|c| c.app_id == app_id && c.system_id == system_id)
    }

    pub fn infeasible_count(&self) -> usize {
        self.cells.iter().filter(|c| !c.is_feasible()).count()
    }
}

pub fn run_grid(apps: &[Application], systems: &[SystemSpec]) -> RunGrid {
    run_grid_with(apps, systems, &BandThresholds::default())
}

pub fn run_grid_with(apps: &[Application], systems: &[SystemSpec], thresholds: &BandThresholds) -> RunGrid {
    let cells = apps
        .iter()
        .flat_map(|a| systems.iter().map(move |s| estimate(a, s, thresholds)))
        .collect();
    RunGrid {
        n_apps: apps.len(),
        n_systems: systems.len(),
        cells,
    }
}

/// Jobs completed in `year_seconds` of dedicated serial use.
pub fn throughput(exec_seconds: f64, year_seconds: f64) -> Result<f64, WorkloadError> {
    Ok(positive("year_seconds", year_seconds)? / positive("exec_seconds", exec_seconds)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SqspReport {
    pub system_id: String,
    pub suite: Vec<String>,
    /// Jobs per year.
    pub value: f64,
}

/// Applications from `apps` that fit on `system`.
pub fn suite_for(system: &SystemSpec, apps: &[Application]) -> Vec<Application> {
    apps.iter().filter(|a| feasible(a, system)).cloned().collect()
}

/// Geometric-mean throughput of `suite` on `system`, computed in log
/// space. Zero if any member is infeasible.
pub fn sqsp(system: &SystemSpec, suite: &[Application], year_seconds: f64) -> Result<SqspReport, WorkloadError> {
    positive("year_seconds", year_seconds)?;
    positive("clock_hz", system.clock_hz)?;
    if suite.is_empty() {
        return Err(WorkloadError::EmptySuite(system.id.clone()));
    }
    let ids = suite.iter().map(|a| a.id.clone()).collect();
    let value = if suite.iter().all(|a| feasible(a, system)) {
        let mean_log_throughput = suite
            .iter()
            .map(|a| year_seconds.ln() - (total_cost(a) / system.clock_hz).ln())
            .sum::<f64>()
            / suite.len() as f64;
        mean_log_throughput.exp()
    } else {
        0.0
    };
    Ok(SqspReport {
        system_id: system.id.clone(),
        suite: ids,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{bundled_systems, bundled_workload, DomainTag, PVector};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn app(id: &str, q: u64, g: f64, shots: u64) -> Application {
        Application {
            id: id.into(),
            label: id.into(),
            pvec: PVector::new(q, g).unwrap(),
            shots,
            domain_tag: DomainTag::Other,
        }
    }

    fn sys(id: &str, max_gates: f64, clock: f64) -> SystemSpec {
        SystemSpec {
            id: id.into(),
            max_gates,
            clock_hz: clock,
            max_qubits: None,
        }
    }

    #[test]
    fn cost_and_time() {
        let apps = bundled_workload();
        assert_eq!(total_cost(&apps[0]), 1e7);
        assert_eq!(total_cost(&apps[3]), 1e14);
        assert_eq!(total_cost(&app("x", 3, 42.0, 1)), 42.0);
        assert_eq!(exec_time(1e7, 1e3).unwrap(), 1e4);
        assert_eq!(exec_time(1.0, 1.0).unwrap(), 1.0);
        assert_eq!(exec_time(1e14, 1e6).unwrap(), 1e8);
        assert!(exec_time(1.0, 0.0).is_err());
    }

    #[test]
    fn band_examples() {
        assert_eq!(band(1e4), TimeBand::Lt1day);
        assert_eq!(band(1e8), TimeBand::Gt1yr);
        assert_eq!(band(0.5), TimeBand::Lt1s);
        // upper edges are exclusive
        assert_eq!(band(1.0), TimeBand::Lt1min);
        assert_eq!(band(YEAR_SECONDS), TimeBand::Gt1yr);
        assert_eq!(band(YEAR_SECONDS - 1.0), TimeBand::Lt1yr);
        assert_eq!(band(MONTH_SECONDS - 1.0), TimeBand::Lt1mo);
    }

    #[test]
    fn feasibility() {
        let apps = bundled_workload();
        let systems = bundled_systems();
        assert!(!feasible(&apps[2], &systems[0]));
        assert!(feasible(&apps[0], &systems[0]));
        assert!(feasible(&app("x", 1, 1e6, 1), &sys("s", 1e6, 1.0)));
        let mut capped = sys("c", 1e12, 1.0);
        capped.max_qubits = Some(100);
        assert!(!feasible(&apps[0], &capped));
        capped.max_qubits = Some(200);
        assert!(feasible(&apps[0], &capped));
    }

    #[test]
    fn grid_spot_cells() {
        let grid = run_grid(&bundled_workload(), &bundled_systems());
        assert_eq!(grid.cells.len(), 54);
        assert_eq!(grid.infeasible_count(), 18);
        assert_eq!(grid.find("F", "9").unwrap().band, Some(TimeBand::Lt1day));
        assert_eq!(grid.find("B", "6").unwrap().band, Some(TimeBand::Lt1min));
        assert_eq!(grid.cell(0, 0).band, Some(TimeBand::Lt1day));
        assert!(!grid.find("C", "1").unwrap().is_feasible());
    }

    #[test]
    fn throughput_examples() {
        assert_relative_eq!(throughput(1e4, YEAR_SECONDS).unwrap(), 3153.6, max_relative = 1e-12);
        assert_eq!(throughput(YEAR_SECONDS, YEAR_SECONDS).unwrap(), 1.0);
        assert!(throughput(0.0, YEAR_SECONDS).is_err());
    }

    #[test]
    fn sqsp_examples() {
        let apps = bundled_workload();
        let systems = bundled_systems();
        let r = sqsp(&systems[0], &apps[..2], YEAR_SECONDS).unwrap();
        assert_relative_eq!(r.value, 315.36, max_relative = 1e-12);
        assert_eq!(r.suite, vec!["A", "B"]);
        let r = sqsp(&systems[6], &apps, YEAR_SECONDS).unwrap();
        assert_relative_eq!(r.value, YEAR_SECONDS / 10f64.powf(47.0 / 6.0), max_relative = 1e-12);
        assert_eq!(sqsp(&systems[0], &apps, YEAR_SECONDS).unwrap().value, 0.0);
        assert!(matches!(
            sqsp(&systems[0], &[], YEAR_SECONDS),
            Err(WorkloadError::EmptySuite(_))
        ));
    }

    #[test]
    fn suites_by_scale() {
        let apps = bundled_workload();
        let ids = |s: &SystemSpec| suite_for(s, &apps).into_iter().map(|a| a.id).collect::<Vec<_>>();
        for s in &bundled_systems()[0..3] {
            assert_eq!(ids(s), ["A", "B"]);
        }
        for s in &bundled_systems()[3..6] {
            assert_eq!(ids(s), ["A", "B", "C", "D"]);
        }
        for s in &bundled_systems()[6..9] {
            assert_eq!(ids(s), ["A", "B", "C", "D", "E", "F"]);
        }
    }

    fn arb_suite() -> impl Strategy<Value = Vec<Application>> {
        prop::collection::vec((0.0f64..12.0, 1u64..100_000), 1..12).prop_map(|v| {
            v.into_iter()
                .enumerate()
                .map(|(i, (lg, s))| app(&format!("a{i}"), 10, 10f64.powf(lg), s))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn band_monotone(a in 1e-6f64..1e12, b in 1e-6f64..1e12) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(band(lo) <= band(hi));
        }

        #[test]
        fn sqsp_closed_form(suite in arb_suite(), lf in 0.0f64..10.0) {
            let s = sys("s", 1e12, 10f64.powf(lf));
            let v = sqsp(&s, &suite, YEAR_SECONDS).unwrap().value;
            let log_mean = suite.iter().map(|a| (total_cost(a) / s.clock_hz).ln()).sum::<f64>() / suite.len() as f64;
            let closed = YEAR_SECONDS / log_mean.exp();
            prop_assert!((v - closed).abs() <= 1e-12 * closed);
        }

        #[test]
        fn sqsp_monotone_in_clock(suite in arb_suite(), lf in 0.0f64..9.0, bump in 1.0f64..100.0) {
            let slow = sys("s", 1e12, 10f64.powf(lf));
            let fast = sys("f", 1e12, 10f64.powf(lf) * bump);
            let a = sqsp(&slow, &suite, YEAR_SECONDS).unwrap().value;
            let b = sqsp(&fast, &suite, YEAR_SECONDS).unwrap().value;
            prop_assert!(b >= a * (1.0 - 1e-12));
        }

        #[test]
        fn sqsp_homogeneous(suite in arb_suite(), k in 0.01f64..100.0) {
            // scaling every exec time by k == dividing the clock by k
            let base = sys("s", 1e12, 1e6);
            let scaled = sys("k", 1e12, 1e6 / k);
            let a = sqsp(&base, &suite, YEAR_SECONDS).unwrap().value;
            let b = sqsp(&scaled, &suite, YEAR_SECONDS).unwrap().value;
            prop_assert!((b - a / k).abs() <= 1e-10 * a / k);
        }

        #[test]
        fn sqsp_rises_with_fast_app(suite in arb_suite()) {
            let s = sys("s", 1e12, 1e6);
            let before = sqsp(&s, &suite, YEAR_SECONDS).unwrap().value;
            let mut more = suite.clone();
            // a single-gate, single-shot app beats any existing member
            more.push(app("fast", 1, 1.0, 1));
            let after = sqsp(&s, &more, YEAR_SECONDS).unwrap().value;
            let fast_t = YEAR_SECONDS * s.clock_hz;
            prop_assume!(fast_t > before);
            prop_assert!(after > before);
        }
    }
}
