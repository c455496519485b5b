//! CSV, JSON and SVG rendering of analysis results.
//!
//! Output is a pure function of the input: no timestamps, fixed element
//! order, shortest round-trip number formatting.

use std::fmt::Write as _;

use serde::Serialize;

use crate::normalize::{
    region_annotations, Frontier, NormalizedMilestone, RegionKind, ADVANTAGE_MIN_GATES, ADVANTAGE_MIN_QUBITS,
    IMPRACTICAL_MIN_GATES,
};
use crate::workload::{RunGrid, TimeBand};

/// Comment embedded in every SVG document.
pub const SVG_GENERATOR: &str = "<!-- generated by qcap -->";

/// Band column value for infeasible cells.
pub const INFEASIBLE: &str = "infeasible";

/// Shortest decimal that parses back to `x`; scientific notation outside
/// `[1e-4, 1e16)`.
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-4..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Serializes rows with a header line, quoting as RFC 4180 requires.
pub fn csv_table<R, I>(header: &[&str], rows: I) -> String
where
    R: IntoIterator<Item = String>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv of utf-8 fields")
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn exec_time_csv(grid: &RunGrid) -> String {
    csv_table(
        &["app_id", "system_id", "total_cost", "exec_seconds", "band"],
        grid.cells.iter().map(|c| {
            [
                c.app_id.clone(),
                c.system_id.clone(),
                fmt_num(c.total_cost),
                c.exec_seconds.map(fmt_num).unwrap_or_default(),
                c.band.map_or(INFEASIBLE, TimeBand::as_str).to_string(),
            ]
        }),
    )
}

pub fn normalized_csv(ms: &[NormalizedMilestone]) -> String {
    csv_table(
        &["id", "vendor", "year", "type", "n_qubits", "n_gates", "gates_rule", "region"],
        ms.iter().map(|m| {
            [
                m.source.id.clone(),
                m.source.vendor.clone(),
                m.source.year.to_string(),
                m.effective_type.as_str().to_string(),
                m.pvec.n_qubits().to_string(),
                fmt_num(m.pvec.n_gates()),
                m.gates_rule.as_str().to_string(),
                crate::normalize::classify_region(&m.pvec).as_str().to_string(),
            ]
        }),
    )
}

pub fn frontier_csv(frontiers: &[Frontier]) -> String {
    csv_table(
        &["horizon_year", "n_qubits", "n_gates"],
        frontiers.iter().flat_map(|f| {
            f.corners
                .iter()
                .map(move |c| [f.horizon_year.to_string(), c.n_qubits().to_string(), fmt_num(c.n_gates())])
        }),
    )
}

/// Log-scaled plot geometry. Axis ranges are whole decades.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogAxes {
    pub qubit_decades: (i32, i32),
    pub gate_decades: (i32, i32),
}

impl Default for LogAxes {
    fn default() -> Self {
        LogAxes {
            qubit_decades: (0, 7),
            gate_decades: (0, 18),
        }
    }
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 160.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

const SIMULABLE_FILL: &str = "#d9ead3";
const ADVANTAGE_FILL: &str = "#cfe2f3";
const IMPRACTICAL_FILL: &str = "#f4cccc";
const FRONTIER_STROKES: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

impl LogAxes {
    /// Smallest default-anchored range covering the given points.
    pub fn covering<I: IntoIterator<Item = (f64, f64)>>(points: I) -> Self {
        let mut axes = LogAxes::default();
        for (q, g) in points {
            axes.qubit_decades.1 = axes.qubit_decades.1.max(q.log10().ceil() as i32);
            axes.gate_decades.1 = axes.gate_decades.1.max(g.log10().ceil() as i32);
        }
        axes
    }

    fn plot_w(&self) -> f64 {
        WIDTH - LEFT - RIGHT
    }

    fn plot_h(&self) -> f64 {
        HEIGHT - TOP - BOTTOM
    }

    pub fn x(&self, qubits: f64) -> f64 {
        let (lo, hi) = self.qubit_decades;
        let t = (qubits.max(1e-300).log10() - lo as f64) / (hi - lo) as f64;
        LEFT + t.clamp(0.0, 1.0) * self.plot_w()
    }

    pub fn y(&self, gates: f64) -> f64 {
        let (lo, hi) = self.gate_decades;
        let t = (gates.max(1e-300).log10() - lo as f64) / (hi - lo) as f64;
        TOP + (1.0 - t.clamp(0.0, 1.0)) * self.plot_h()
    }

    fn q_max(&self) -> f64 {
        10f64.powi(self.qubit_decades.1)
    }

    fn g_max(&self) -> f64 {
        10f64.powi(self.gate_decades.1)
    }

    fn q_min(&self) -> f64 {
        10f64.powi(self.qubit_decades.0)
    }

    fn g_min(&self) -> f64 {
        10f64.powi(self.gate_decades.0)
    }
}

fn px(v: f64) -> String {
    format!("{v:.2}")
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn svg_open(out: &mut String, kind: &str) {
    let _ = write!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" data-chart=\"{kind}\" font-family=\"sans-serif\" font-size=\"12\">\n\
         {SVG_GENERATOR}\n"
    );
}

/// `(min qubits, max qubits, min gates, max gates)`.
type Bounds = (f64, f64, f64, f64);

fn rect(out: &mut String, axes: &LogAxes, class: &str, (q0, q1, g0, g1): Bounds, fill: &str, data: &str) {
    let (x0, x1) = (axes.x(q0), axes.x(q1));
    let (y0, y1) = (axes.y(g1), axes.y(g0));
    let _ = writeln!(
        out,
        "  <rect class=\"region {class}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{fill}\"{data}/>",
        px(x0),
        px(y0),
        px(x1 - x0),
        px(y1 - y0)
    );
}

fn write_regions(out: &mut String, axes: &LogAxes) {
    out.push_str("<g class=\"regions\">\n");
    let ceiling = IMPRACTICAL_MIN_GATES.min(axes.g_max());
    for r in region_annotations() {
        match r.kind {
            RegionKind::ClassicallySimulable => rect(
                out,
                axes,
                "simulable",
                (axes.q_min(), axes.q_max(), axes.g_min(), ceiling),
                SIMULABLE_FILL,
                &format!(" data-region=\"{}\"", r.kind.as_str()),
            ),
            RegionKind::Advantage => rect(
                out,
                axes,
                "advantage",
                (ADVANTAGE_MIN_QUBITS as f64, axes.q_max(), ADVANTAGE_MIN_GATES, ceiling),
                ADVANTAGE_FILL,
                &format!(
                    " data-region=\"{}\" data-qubits-min=\"{}\" data-gates-min=\"{}\" data-gates-max=\"{}\"",
                    r.kind.as_str(),
                    r.min_qubits,
                    fmt_num(r.min_gates),
                    fmt_num(IMPRACTICAL_MIN_GATES)
                ),
            ),
            RegionKind::Impractical => rect(
                out,
                axes,
                "impractical",
                (axes.q_min(), axes.q_max(), ceiling, axes.g_max()),
                IMPRACTICAL_FILL,
                &format!(
                    " data-region=\"{}\" data-gates-min=\"{}\"",
                    r.kind.as_str(),
                    fmt_num(r.min_gates)
                ),
            ),
        }
    }
    let y = axes.y(IMPRACTICAL_MIN_GATES);
    let _ = writeln!(
        out,
        "  <line class=\"ceiling\" data-gates=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#990000\" stroke-dasharray=\"6 3\"/>",
        fmt_num(IMPRACTICAL_MIN_GATES),
        px(LEFT),
        px(y),
        px(LEFT + axes.plot_w()),
        px(y)
    );
    let labels = [
        (region_annotations()[0].label, axes.x(axes.q_min()) + 6.0, axes.y(axes.g_min()) - 6.0),
        (region_annotations()[1].label, axes.x(ADVANTAGE_MIN_QUBITS as f64) + 6.0, axes.y(ceiling) + 16.0),
        (region_annotations()[2].label, LEFT + 6.0, axes.y(axes.g_max()) + 16.0),
    ];
    for (label, x, y) in labels {
        let _ = writeln!(out, "  <text class=\"region-label\" x=\"{}\" y=\"{}\">{}</text>", px(x), px(y), escape(label));
    }
    out.push_str("</g>\n");
}

fn write_axes(out: &mut String, axes: &LogAxes) {
    let x0 = LEFT;
    let x1 = LEFT + axes.plot_w();
    let y0 = TOP + axes.plot_h();
    let _ = writeln!(out, "<g class=\"axes\" data-scale=\"log-log\" stroke=\"#000\">");
    let _ = writeln!(
        out,
        "  <line class=\"axis x\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        px(x0),
        px(y0),
        px(x1),
        px(y0)
    );
    let _ = writeln!(
        out,
        "  <line class=\"axis y\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        px(x0),
        px(TOP),
        px(x0),
        px(y0)
    );
    for k in axes.qubit_decades.0..=axes.qubit_decades.1 {
        let x = axes.x(10f64.powi(k));
        let _ = writeln!(
            out,
            "  <line class=\"tick x\" data-value=\"1e{k}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            px(x),
            px(y0),
            px(x),
            px(y0 + 5.0)
        );
        let _ = writeln!(
            out,
            "  <text class=\"tick-label x\" x=\"{}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\">10<tspan baseline-shift=\"super\" font-size=\"9\">{k}</tspan></text>",
            px(x),
            px(y0 + 20.0)
        );
    }
    for k in axes.gate_decades.0..=axes.gate_decades.1 {
        let y = axes.y(10f64.powi(k));
        let _ = writeln!(
            out,
            "  <line class=\"tick y\" data-value=\"1e{k}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            px(x0 - 5.0),
            px(y),
            px(x0),
            px(y)
        );
        let _ = writeln!(
            out,
            "  <text class=\"tick-label y\" x=\"{}\" y=\"{}\" text-anchor=\"end\" stroke=\"none\">10<tspan baseline-shift=\"super\" font-size=\"9\">{k}</tspan></text>",
            px(x0 - 8.0),
            px(y + 4.0)
        );
    }
    let _ = writeln!(
        out,
        "  <text class=\"axis-label x\" x=\"{}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\">qubits</text>",
        px((x0 + x1) / 2.0),
        px(y0 + 45.0)
    );
    let _ = writeln!(
        out,
        "  <text class=\"axis-label y\" x=\"20\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\" transform=\"rotate(-90 20 {})\">T-equivalent gates</text>",
        px(TOP + axes.plot_h() / 2.0),
        px(TOP + axes.plot_h() / 2.0)
    );
    out.push_str("</g>\n");
}

/// Staircase outline of the region a frontier covers.
fn staircase(axes: &LogAxes, f: &Frontier) -> String {
    let mut d = String::new();
    for (i, c) in f.corners.iter().enumerate() {
        let (x, y) = (axes.x(c.n_qubits() as f64), axes.y(c.n_gates()));
        if i == 0 {
            let _ = write!(d, "M {} {}", px(axes.x(axes.q_min())), px(y));
        } else {
            let _ = write!(d, " V {}", px(y));
        }
        let _ = write!(d, " H {}", px(x));
    }
    let _ = write!(d, " V {}", px(axes.y(axes.g_min())));
    d
}

fn write_frontiers(out: &mut String, axes: &LogAxes, frontiers: &[Frontier]) {
    out.push_str("<g class=\"frontiers\" fill=\"none\" stroke-width=\"2\">\n");
    for (i, f) in frontiers.iter().enumerate() {
        let stroke = FRONTIER_STROKES[i % FRONTIER_STROKES.len()];
        let _ = writeln!(
            out,
            "  <path class=\"frontier\" data-horizon=\"{}\" data-corners=\"{}\" stroke=\"{stroke}\" d=\"{}\"/>",
            f.horizon_year,
            f.corners.len(),
            staircase(axes, f)
        );
    }
    out.push_str("</g>\n");
}

fn write_milestones(out: &mut String, axes: &LogAxes, ms: &[NormalizedMilestone]) {
    out.push_str("<g class=\"milestones\" stroke=\"#333\">\n");
    for m in ms {
        let fill = match m.effective_type {
            crate::model::SystemType::N => "#ffffff",
            crate::model::SystemType::EF => "#999999",
            crate::model::SystemType::F => "#000000",
        };
        let _ = writeln!(
            out,
            "  <circle class=\"milestone\" data-id=\"{}\" data-year=\"{}\" data-type=\"{}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{fill}\"/>",
            escape(&m.source.id),
            m.source.year,
            m.effective_type.as_str(),
            px(axes.x(m.pvec.n_qubits() as f64)),
            px(axes.y(m.pvec.n_gates()))
        );
    }
    out.push_str("</g>\n");
}

fn write_legend(out: &mut String, frontiers: &[Frontier]) {
    let x = WIDTH - RIGHT + 15.0;
    out.push_str("<g class=\"legend\">\n");
    for (i, f) in frontiers.iter().enumerate() {
        let y = TOP + 10.0 + 20.0 * i as f64;
        let stroke = FRONTIER_STROKES[i % FRONTIER_STROKES.len()];
        let _ = writeln!(
            out,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"2\"/>",
            px(x),
            px(y),
            px(x + 20.0),
            px(y)
        );
        let _ = writeln!(out, "  <text x=\"{}\" y=\"{}\">by {}</text>", px(x + 26.0), px(y + 4.0), f.horizon_year);
    }
    out.push_str("</g>\n");
}

/// Region chart with one staircase path per frontier and, optionally, the
/// normalized milestones as points.
pub fn frontier_svg(frontiers: &[Frontier], milestones: &[NormalizedMilestone]) -> String {
    let axes = LogAxes::covering(
        milestones
            .iter()
            .map(|m| m.pvec)
            .chain(frontiers.iter().flat_map(|f| f.corners.iter().copied()))
            .map(|p| (p.n_qubits() as f64, p.n_gates())),
    );
    let mut out = String::new();
    svg_open(&mut out, "frontier");
    write_regions(&mut out, &axes);
    write_axes(&mut out, &axes);
    write_frontiers(&mut out, &axes, frontiers);
    write_milestones(&mut out, &axes, milestones);
    write_legend(&mut out, frontiers);
    out.push_str("</svg>\n");
    out
}

/// The bare region chart.
pub fn regions_svg() -> String {
    let axes = LogAxes::default();
    let mut out = String::new();
    svg_open(&mut out, "regions");
    write_regions(&mut out, &axes);
    write_axes(&mut out, &axes);
    out.push_str("</svg>\n");
    out
}

fn band_fill(b: Option<TimeBand>) -> &'static str {
    match b {
        None => "#ffffff",
        Some(TimeBand::Lt1s) => "#1a9850",
        Some(TimeBand::Lt1min) => "#66bd63",
        Some(TimeBand::Lt1h) => "#a6d96a",
        Some(TimeBand::Lt1day) => "#d9ef8b",
        Some(TimeBand::Lt1wk) => "#fee08b",
        Some(TimeBand::Lt1mo) => "#fdae61",
        Some(TimeBand::Lt1yr) => "#f46d43",
        Some(TimeBand::Gt1yr) => "#d73027",
    }
}

/// Application x system heat map of time bands.
pub fn grid_svg(grid: &RunGrid) -> String {
    let cell_w = 70.0;
    let cell_h = 36.0;
    let (x0, y0) = (60.0, 50.0);
    let w = x0 + cell_w * grid.n_systems as f64 + 20.0;
    let h = y0 + cell_h * grid.n_apps as f64 + 20.0;
    let mut out = String::new();
    let _ = write!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" \
         data-chart=\"grid\" font-family=\"sans-serif\" font-size=\"11\">\n{SVG_GENERATOR}\n",
        px(w),
        px(h),
        px(w),
        px(h)
    );
    out.push_str("<g class=\"grid\">\n");
    for s in 0..grid.n_systems {
        let id = &grid.cell(0, s).system_id;
        let _ = writeln!(
            out,
            "  <text class=\"col-label\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            px(x0 + cell_w * (s as f64 + 0.5)),
            px(y0 - 10.0),
            escape(id)
        );
    }
    for a in 0..grid.n_apps {
        let y = y0 + cell_h * a as f64;
        let _ = writeln!(
            out,
            "  <text class=\"row-label\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>",
            px(x0 - 10.0),
            px(y + cell_h / 2.0 + 4.0),
            escape(&grid.cell(a, 0).app_id)
        );
        for s in 0..grid.n_systems {
            let c = grid.cell(a, s);
            let x = x0 + cell_w * s as f64;
            let label = c.band.map_or(INFEASIBLE, TimeBand::as_str);
            let _ = writeln!(
                out,
                "  <rect class=\"cell\" data-app=\"{}\" data-system=\"{}\" data-band=\"{label}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"#fff\"/>",
                escape(&c.app_id),
                escape(&c.system_id),
                px(x),
                px(y),
                px(cell_w),
                px(cell_h),
                band_fill(c.band)
            );
            let text = if c.band.is_some() { label } else { "x" };
            let _ = writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{text}</text>",
                px(x + cell_w / 2.0),
                px(y + cell_h / 2.0 + 4.0)
            );
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{bundled_milestones, bundled_systems, bundled_workload, PVector};
    use crate::normalize::{frontier, normalize_all, NormalizeOptions};
    use crate::workload::run_grid;

    #[test]
    fn number_format_round_trips() {
        for x in [315.36, 1e-4, 1e16, 2.7775e8, 3.1536e7, 0.0, 1.5e-9, 123456789012345.0, 4.62885e5] {
            let s = fmt_num(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(fmt_num(1e7), "10000000");
        assert_eq!(fmt_num(1e20), "1e20");
        assert_eq!(fmt_num(315.36), "315.36");
    }

    #[test]
    fn csv_quotes_fields() {
        let s = csv_table(&["a", "b"], [vec!["x,y".to_string(), "q\"z".to_string()]]);
        assert_eq!(s, "a,b\r\n\"x,y\",\"q\"\"z\"\r\n");
    }

    #[test]
    fn exec_time_rows() {
        let grid = run_grid(&bundled_workload(), &bundled_systems());
        let s = exec_time_csv(&grid);
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(lines.len(), 55);
        assert_eq!(lines[0], "app_id,system_id,total_cost,exec_seconds,band");
        assert_eq!(lines[1], "A,1,10000000,10000,lt-1day");
        assert!(lines.iter().any(|l| l.starts_with("C,1,") && l.ends_with(",,infeasible")));
    }

    fn front() -> (Vec<Frontier>, Vec<NormalizedMilestone>) {
        let ms = normalize_all(&bundled_milestones(), NormalizeOptions::default()).unwrap();
        let fs = [2025, 2030, 2035].iter().map(|&y| frontier(&ms, y).unwrap()).collect();
        (fs, ms)
    }

    #[test]
    fn frontier_svg_structure() {
        let (fs, ms) = front();
        let svg = frontier_svg(&fs, &ms);
        assert!(svg.contains(SVG_GENERATOR));
        assert_eq!(svg.matches("<path class=\"frontier\"").count(), 3);
        assert!(svg.contains("data-qubits-min=\"50\" data-gates-min=\"1000000\""));
        assert!(svg.contains("<line class=\"ceiling\" data-gates=\"100000000000000\""));
        assert!(svg.contains("data-scale=\"log-log\""));
        assert!(svg.contains("class=\"tick x\" data-value=\"1e3\""));
        assert_eq!(svg, frontier_svg(&fs, &ms));
    }

    #[test]
    fn staircase_shape() {
        let f = Frontier {
            horizon_year: 2030,
            corners: vec![PVector::new(10, 1e8).unwrap(), PVector::new(1000, 1e4).unwrap()],
        };
        let axes = LogAxes::default();
        let d = staircase(&axes, &f);
        assert!(d.starts_with("M 80.00 "));
        assert_eq!(d.matches(" H ").count(), 2);
        assert!(d.ends_with(&format!(" V {}", px(axes.y(1.0)))));
    }

    #[test]
    fn grid_svg_cells() {
        let grid = run_grid(&bundled_workload(), &bundled_systems());
        let svg = grid_svg(&grid);
        assert_eq!(svg.matches("<rect class=\"cell\"").count(), 54);
        assert_eq!(svg.matches("data-band=\"infeasible\"").count(), 18);
    }

    #[test]
    fn escapes_text() {
        assert_eq!(escape("a<b & \"c\""), "a&lt;b &amp; &quot;c&quot;");
    }
}
