//! Trotter resource estimate for collective neutrino oscillations across
//! system sizes.

use qcap::estimators::{gates_per_step, neutrino_pvector, trotter_steps, NeutrinoParams};
use qcap::normalize::classify_region;

fn main() {
    println!("{:>6}{:>14}{:>12}{:>14}  region", "N", "steps", "gates/step", "n_gates");
    for n in [10, 20, 50, 100, 200, 500, 1000] {
        let p = NeutrinoParams::new(n);
        let pv = neutrino_pvector(&p).unwrap();
        println!(
            "{n:>6}{:>14}{:>12}{:>14.4e}  {}",
            trotter_steps(&p).unwrap(),
            gates_per_step(n),
            pv.n_gates(),
            classify_region(&pv).as_str()
        );
    }

    let tight = NeutrinoParams {
        error_budget: 1e-3,
        ..NeutrinoParams::new(100)
    };
    println!("\nN=100 at eps=1e-3: {}", neutrino_pvector(&tight).unwrap());
}
