//! Loads a catalog that overrides a bundled application and adds a system
//! with a qubit cap, then reruns the execution-time grid.

use qcap::catalog::{load_catalog_str, write_catalog, EntityKind, Format};
use qcap::report::exec_time_csv;
use qcap::workload::run_grid_with;

const CATALOG: &str = r#"
[config]
year_seconds = 31557600.0

[[application]]
id = "A"
label = "Fermi-Hubbard, fewer shots"
shots = 1
domain_tag = "condensed-matter"
pvec = { n_qubits = 200, n_gates = 1e6 }

[[system]]
id = "capped"
max_gates = 1e12
clock_hz = 1e7
max_qubits = 500
"#;

fn main() {
    let c = load_catalog_str(CATALOG, Format::Toml, false).expect("valid catalog");
    println!("A is {:?}, 1 is {:?}", c.origin(EntityKind::Application, "A"), c.origin(EntityKind::System, "1"));

    let capped: Vec<_> = c.systems.iter().filter(|s| s.id == "capped").cloned().collect();
    let grid = run_grid_with(&c.applications, &capped, &c.config.band_thresholds());
    print!("{}", exec_time_csv(&grid));

    let toml = write_catalog(&c, Format::Toml);
    println!("\nserialized catalog: {} lines", toml.lines().count());
}
