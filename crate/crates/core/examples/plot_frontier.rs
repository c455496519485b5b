//! Writes the frontier, region and grid charts as SVG files into a
//! directory (default `target/plots`).

use std::path::PathBuf;

use qcap::model::{bundled_milestones, bundled_systems, bundled_workload};
use qcap::normalize::{frontier, normalize_all, NormalizeOptions};
use qcap::report::{frontier_svg, grid_svg, regions_svg};
use qcap::workload::run_grid;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).map_or_else(|| PathBuf::from("target/plots"), PathBuf::from);
    std::fs::create_dir_all(&dir)?;

    let ms = normalize_all(&bundled_milestones(), NormalizeOptions::default()).unwrap();
    let fs: Vec<_> = [2025, 2030, 2035].iter().map(|&y| frontier(&ms, y).unwrap()).collect();
    let grid = run_grid(&bundled_workload(), &bundled_systems());

    for (name, svg) in [
        ("frontier.svg", frontier_svg(&fs, &ms)),
        ("regions.svg", regions_svg()),
        ("grid.svg", grid_svg(&grid)),
    ] {
        let path = dir.join(name);
        std::fs::write(&path, svg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
