//! PEC sampling overhead against circuit size, and the gate budget a
//! sampling cap allows at several physical error rates.

use qcap::gates::circuit_fault_rate;
use qcap::mitigation::{default_pec_cap, pec_gate_budget, pec_overhead};

fn main() {
    for lambda in [0.5, 1.0, 2.0, 3.0] {
        println!("fault rate {lambda}: overhead {:.1}", pec_overhead(lambda).unwrap());
    }
    let cap = default_pec_cap();
    println!("\ncap e^8 = {cap:.1}");
    for eps in [1e-2, 1e-3, 1e-4] {
        let budget = pec_gate_budget(cap, eps).unwrap();
        let lambda = circuit_fault_rate(budget, eps).unwrap();
        println!("eps {eps:e}: {budget:.0} gates (fault rate {lambda})");
    }
}
