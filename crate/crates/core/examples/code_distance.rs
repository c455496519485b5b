//! Code distance and qubit overhead needed to hit a range of logical error
//! targets with the surface, cat-repetition and scaled qLDPC models.

use qcap::codes::{infer_physical_count, min_distance, physical_per_logical, CodeModel};

fn main() {
    let codes = [
        ("surface 1e-3", CodeModel::surface(1e-3).unwrap()),
        ("surface 5e-4", CodeModel::surface(5e-4).unwrap()),
        ("qldpc 1e-3", CodeModel::qldpc(1e-3).unwrap()),
        ("cat default", CodeModel::cat_default()),
    ];
    println!("{:<14}{:>8}{:>6}{:>12}{:>14}", "code", "target", "d", "phys/log", "100 logical");
    for (name, code) in codes {
        for target in [1e-6, 1e-8, 1e-10] {
            match min_distance(code, target) {
                Ok(d) => {
                    let ppl = physical_per_logical(code, d).unwrap();
                    let phys = infer_physical_count(100, code, target, 1.0).unwrap();
                    println!("{name:<14}{target:>8.0e}{d:>6}{ppl:>12}{phys:>14}");
                }
                Err(e) => println!("{name:<14}{target:>8.0e}  {e}"),
            }
        }
    }
}
