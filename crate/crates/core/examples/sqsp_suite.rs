//! SQSP of every reference system, each evaluated on the subset of the
//! workload it can run.

use qcap::model::{bundled_systems, bundled_workload};
use qcap::workload::{sqsp, suite_for, YEAR_SECONDS};

fn main() {
    let apps = bundled_workload();
    for sys in bundled_systems() {
        let suite = suite_for(&sys, &apps);
        let r = sqsp(&sys, &suite, YEAR_SECONDS).expect("every reference system runs A and B");
        println!(
            "system {} ({:e} gates @ {:e} Hz): {:>12.4e} jobs/yr  suite {}",
            r.system_id,
            sys.max_gates,
            sys.clock_hz,
            r.value,
            r.suite.join(",")
        );
    }

    // Forcing the full suite onto a megaquop machine gives zero.
    let megaquop = &bundled_systems()[0];
    let forced = sqsp(megaquop, &apps, YEAR_SECONDS).unwrap();
    println!("system 1 on A-F: {}", forced.value);
}
