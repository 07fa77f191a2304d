//! The chamber partition of the special locus for the degree-8 surface
//! with an irreducible nodal anticanonical curve.
//!
//! ```text
//! cargo run --example chamber_partition
//! ```

use valfan::catalog;
use valfan::degen::chamber_endpoints;
use valfan::special::{partition, BoundaryKind, Region};

fn main() {
    let config = catalog::by_name("dp8-nodal").unwrap();
    let height = 150;
    let p = partition(&config, height).unwrap();

    match &p.region {
        Region::OpenArc { lo, hi } => println!("special locus: the open arc from {lo} to {hi}"),
        other => println!("special locus: {other:?}"),
    }
    println!("witness height bound: {height}");
    println!(
        "truncated ends: {:?} (boundaries accumulate at the region endpoints)\n",
        p.truncated_ends
    );

    println!("{} boundaries:", p.boundaries.len());
    for b in &p.boundaries {
        match &b.kind {
            BoundaryKind::Witness(e) => println!(
                "  {}  witness class {} with (p, q) = ({}, {}), defect m = {}",
                b.point, e.class, e.p, e.q, e.m
            ),
            BoundaryKind::Vertex => println!("  {}  component vertex", b.point),
        }
    }

    println!("\n{} chambers (each verified at an interior point):", p.chambers.len());
    for c in &p.chambers {
        println!("  ({}, {})  sample {}", c.start, c.end, c.sample);
    }

    // The right-hand boundaries follow the recurrence ratios exactly.
    println!("\nrecurrence chamber endpoints for comparison:");
    for k in 0..5 {
        let (lo, hi) = chamber_endpoints(k);
        println!("  chamber {k}: ({lo}, {hi})");
    }
}
