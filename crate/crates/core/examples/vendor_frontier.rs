//! Normalizes the bundled vendor roadmaps and prints the capability
//! frontier reached by 2025, 2030 and 2035.

use qcap::model::bundled_milestones;
use qcap::normalize::{classify_region, frontier, normalize_all, NormalizeOptions};

fn main() {
    let ms = normalize_all(&bundled_milestones(), NormalizeOptions::default()).expect("bundled data normalizes");
    println!("{} normalized milestones", ms.len());

    for year in [2025, 2030, 2035] {
        let f = frontier(&ms, year).unwrap();
        println!("\nfrontier by {year}:");
        for c in &f.corners {
            let who: Vec<_> = ms
                .iter()
                .filter(|m| m.source.year <= year && m.pvec == *c)
                .map(|m| m.source.id.as_str())
                .collect();
            println!("  {c:<22} {:<22} {}", classify_region(c).as_str(), who.join(", "));
        }
    }
}
