//! Execution-time bands for the six benchmark applications on the nine
//! reference systems, printed as a system x application grid.

use qcap::model::{bundled_systems, bundled_workload};
use qcap::workload::run_grid;

fn main() {
    let apps = bundled_workload();
    let systems = bundled_systems();
    let grid = run_grid(&apps, &systems);

    print!("{:>8}", "system");
    for a in &apps {
        print!("{:>9}", a.id);
    }
    println!();
    for (s, sys) in systems.iter().enumerate() {
        print!("{:>8}", sys.id);
        for a in 0..apps.len() {
            let band = grid.cell(a, s).band.map_or("x", |b| b.as_str());
            print!("{band:>9}");
        }
        println!();
    }
    println!("{} of {} combinations infeasible", grid.infeasible_count(), grid.cells.len());
}
