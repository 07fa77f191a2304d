//! Render the partitioned circle and a chamber polytope as SVG files.
//!
//! ```text
//! cargo run --example svg_figures
//! ```

use valfan::catalog;
use valfan::degen::polytope;
use valfan::render::{partition_svg, polytope_svg};
use valfan::special::partition;

fn main() {
    let dir = std::env::temp_dir().join("valfan-figures");
    std::fs::create_dir_all(&dir).expect("create output directory");

    let config = catalog::by_name("dp8-nodal").unwrap();
    let p = partition(&config, 40).unwrap();
    let circle = dir.join("dp8-partition.svg");
    std::fs::write(&circle, partition_svg(&config, &p)).unwrap();
    println!("wrote {}", circle.display());

    let quad = catalog::by_name("quadric-rulings").unwrap();
    let p = partition(&quad, 10).unwrap();
    let circle = dir.join("quadric-partition.svg");
    std::fs::write(&circle, partition_svg(&quad, &p)).unwrap();
    println!("wrote {}", circle.display());

    for k in 0..=2 {
        let path = dir.join(format!("polytope-k{k}.svg"));
        std::fs::write(&path, polytope_svg(&polytope(k))).unwrap();
        println!("wrote {}", path.display());
    }
}
