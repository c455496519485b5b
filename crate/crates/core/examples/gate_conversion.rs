//! T-equivalent counts from mixed gate inventories and the resulting
//! circuit fault rate.

use qcap::gates::{circuit_fault_rate, t_equivalent, t_equivalent_with, GateInventory, GateRatios};

fn main() {
    let inv = GateInventory::from_named_counts([("t", 1_000), ("ccx", 250), ("rz", 40)]).unwrap();
    let t = t_equivalent(inv);
    println!("{inv:?} -> {t} T");

    let cheap_rotations = GateRatios {
        rotation: 50.0,
        ..GateRatios::default()
    };
    println!("with 50 T per rotation: {}", t_equivalent_with(inv, cheap_rotations));

    for eps in [1e-3, 1e-4, 1e-6] {
        println!("fault rate at eps {eps:e}: {}", circuit_fault_rate(t, eps).unwrap());
    }

    if let Err(e) = GateInventory::from_named_counts([("c3x", 1)]) {
        println!("{e}");
    }
}
