//! Weighted blow-up intersection numerics: exceptional self-intersections,
//! pairwise products of two exceptional divisors over the same node,
//! strict-transform matrices as exact functions of t, and valuation-ideal
//! colengths.
//!
//! ```text
//! cargo run --example blowup_matrices
//! ```

use valfan::blowup::{colength, et_self, pair_intersections, transform_matrix};
use valfan::catalog;
use valfan::exact::ExtPos;

fn main() {
    println!("exceptional self-intersections -1/(pq):");
    for (p, q) in [(1u64, 1u64), (1, 2), (2, 3), (5, 7)] {
        println!("  ({p}, {q}): E^2 = {}, colength = {}", et_self(p, q).unwrap(), colength(p, q).unwrap());
    }

    println!("\ntwo exceptional divisors over one node:");
    for (w1, w2) in [((1u64, 1u64), (1u64, 2u64)), ((1, 1), (2, 3)), ((2, 3), (3, 4))] {
        let pi = pair_intersections(w1.0, w1.1, w2.0, w2.1).unwrap();
        println!(
            "  {:?} and {:?}: E1^2 = {}, E2^2 = {}, E1.E2 = {}",
            pi.first, pi.second, pi.e1_sq, pi.e2_sq, pi.e1_e2
        );
    }

    // Strict-transform matrices across the edge, including at a quadratic
    // irrational point and at the interval endpoint where the form
    // degenerates.
    let config = catalog::by_name("dp8-nodal").unwrap();
    let node = config.node(0);
    println!("\nstrict transform of the irreducible degree-8 cycle (single entry):");
    for t in ["1/6", "1", "2", "1 + sqrt(2)", "3 + 2*sqrt(2)", "6"] {
        let t: ExtPos = t.parse().unwrap();
        let m = transform_matrix(&config, &node, &t).unwrap();
        println!("  t = {:<14} C_t^2 = {}", t.to_string(), m.entry(0, 0));
    }

    let config = catalog::by_name("dp5-zero-square-pair").unwrap();
    let node = config.node(0);
    println!("\ntwo-component cycle of degree 5 at t = 1:");
    let m = transform_matrix(&config, &node, &"1".parse().unwrap()).unwrap();
    for i in 0..m.size() {
        let row: Vec<String> = (0..m.size()).map(|j| m.entry(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
}
