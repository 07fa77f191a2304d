//! Enumerate unicuspidal witness classes: integral classes L with
//! -K.L = p + q and L^2 = pq - 1 (plus branch constraints on reducible
//! cycles), found by exhaustive lattice search.
//!
//! ```text
//! cargo run --example witness_search
//! ```

use valfan::catalog;
use valfan::lattice::WitnessSearch;
use valfan::special::witness_set;

fn main() {
    // Irreducible degree-8 cycle: the witnesses are the chamber boundaries.
    let config = catalog::by_name("dp8-nodal").unwrap();
    let ws = witness_set(&config, 0, 64).unwrap();
    println!("degree 8, irreducible cycle, height {}:", ws.height_bound);
    for e in &ws.entries {
        println!(
            "  t = {:>6}  (p, q) = ({:>2}, {:>2})  L = {}  m = {}",
            e.t().to_string(),
            e.p,
            e.q,
            e.class,
            e.m
        );
    }

    // Individual searches, including a pair with no witness and one where
    // the side condition fails.
    println!("\nspot checks on the same surface:");
    let node = config.node(0);
    for (p, q) in [(1u64, 2u64), (2, 3), (1, 3), (1, 8)] {
        let result = config.witness_default_bound(&node, p, q).unwrap();
        let text = match result {
            WitnessSearch::Found(l) => format!("witness {l}"),
            WitnessSearch::NotFound => "no class in range".to_string(),
            WitnessSearch::NotInRange => "side condition fails (pq d <= (p+q)^2)".to_string(),
        };
        println!("  ({p}, {q}): {text}");
    }

    // A two-component cycle with a zero-square component: witnesses crowd
    // toward the excluded vertex.
    let config = catalog::by_name("dp8-ruling-conic").unwrap();
    println!("\ndegree 8, ruling + conic, node 0, height 40:");
    let ws = witness_set(&config, 0, 40).unwrap();
    for e in &ws.entries {
        println!(
            "  t = {:>5}  (p, q) = ({}, {:>2})  L = {}",
            e.t().to_string(),
            e.p,
            e.q,
            e.class
        );
    }
}
