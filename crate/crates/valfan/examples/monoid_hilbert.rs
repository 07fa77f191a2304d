//! Graded dimensions of monoid algebras on generators (i, j, m), graded by
//! the third coordinate, and the comparison with lattice-point counts for
//! polygon semigroups.
//!
//! ```text
//! cargo run --example monoid_hilbert
//! ```

use valfan::degen::{ehrhart_semigroup, MonoidPresentation, RationalPolytope};

fn main() {
    let cases: Vec<(&str, Vec<(u64, u64, u64)>)> = vec![
        ("unit simplex", vec![(0, 0, 1), (1, 0, 1), (0, 1, 1)]),
        ("single ray", vec![(1, 0, 1)]),
        ("two sparse rays", vec![(2, 0, 1), (0, 3, 1)]),
        ("mixed levels", vec![(1, 0, 1), (0, 2, 2), (1, 1, 3)]),
    ];
    for (name, gens) in cases {
        let monoid = MonoidPresentation::new(gens).unwrap();
        let dims: Vec<u64> = (0..=8).map(|m| monoid.hilbert(m)).collect();
        println!("{name:<16} dims 0..=8: {dims:?}");
    }

    // The level-one semigroup of a lattice polygon reproduces its
    // lattice-point counts.
    let square = RationalPolytope::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    let sg = ehrhart_semigroup(&square).unwrap();
    println!("\nunit square semigroup generators: {:?}", sg.generators());
    for m in 0..=6u64 {
        println!(
            "  level {m}: monoid dim = {}, lattice points of {m}P = {}",
            sg.hilbert(m),
            square.ehrhart(m as u32)
        );
    }
}
