//! The toric polytopes of the degree-8 chamber degenerations: normalized
//! volume, and lattice-point counts of dilations against anticanonical
//! section counts.
//!
//! ```text
//! cargo run --example degree8_polytopes
//! ```

use num_traits::ToPrimitive;

use valfan::degen::{chamber_endpoints, polytope};
use valfan::lattice::h0_anticanonical;

fn main() {
    for k in -2..=3i64 {
        let p = polytope(k);
        let (lo, hi) = chamber_endpoints(k);
        println!("chamber {k}: t in ({lo}, {hi})");
        let verts: Vec<String> = p
            .vertices()
            .iter()
            .map(|(x, y)| format!("({x}, {y})"))
            .collect();
        println!("  vertices: {}", verts.join(", "));
        println!("  area2 = {}", p.area2());
        let lcm = p.denominator_lcm().to_u32().unwrap();
        print!("  lattice counts:");
        let mut m = lcm;
        while m <= 4 * lcm {
            let count = p.ehrhart(m);
            let h0 = h0_anticanonical(8, m);
            assert_eq!(count, h0);
            print!("  #({m}P) = {count} = h0(-{m}K)");
            m += lcm;
        }
        println!("\n");
    }
}
