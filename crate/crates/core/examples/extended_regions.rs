//! Regions reachable by adding error mitigation to each vendor's final
//! roadmap milestone.

use std::collections::BTreeMap;

use qcap::model::bundled_milestones;
use qcap::normalize::{assumed_code, extended_regions, normalize_all, NormalizeOptions};

fn main() {
    let ms = normalize_all(&bundled_milestones(), NormalizeOptions::default()).unwrap();
    let mut last = BTreeMap::new();
    for m in &ms {
        last.insert(m.source.vendor.clone(), m);
    }
    for (vendor, m) in last {
        let code = assumed_code(&m.source);
        match extended_regions(m, code, 1.0) {
            Ok(regions) => {
                for r in regions {
                    println!("{vendor:<24} {:<28} {:<16} -> {}", m.source.id, r.mechanism.as_str(), r.extended);
                }
            }
            Err(e) => println!("{vendor:<24} {:<28} {e}", m.source.id),
        }
    }
}
