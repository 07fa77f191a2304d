//! Contract the non-nef components of a cycle and transport circle points
//! through the induced bijection; classification is invariant.
//!
//! ```text
//! cargo run --example contract_and_compare
//! ```

use valfan::catalog;
use valfan::cycle::DualComplexPoint;
use valfan::exact::rat;
use valfan::special::classify;

fn main() {
    // (3H - 2E, E) on the one-point blow-up: E is a (-1)-curve, and
    // contracting it gives the plane with its nodal cubic.
    let config = catalog::by_name("dp8-contractible").unwrap();
    let (nef, map) = config.contract_non_nef().unwrap();
    println!(
        "before: degree {} with {} components; after: degree {} with {} component(s)",
        config.degree(),
        config.component_count(),
        nef.degree(),
        nef.component_count()
    );
    println!(
        "contracted classes: {}\n",
        nef.view()
            .contracted()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    let points = vec![
        DualComplexPoint::edge_from_rat(0, rat(1, 8)).unwrap(),
        DualComplexPoint::edge_from_rat(0, rat(3, 1)).unwrap(),
        DualComplexPoint::edge_from_rat(1, rat(2, 1)).unwrap(),
        DualComplexPoint::edge_from_rat(1, rat(6, 1)).unwrap(),
        DualComplexPoint::Vertex(0),
        DualComplexPoint::Vertex(1),
    ];
    println!("{:<24} {:<26} {:^8} {:^8}", "point", "image", "before", "after");
    for pt in points {
        let image = map.apply(&pt);
        let before = classify(&config, &pt).unwrap().special;
        let after = classify(&nef, &image).unwrap().special;
        assert_eq!(before, after);
        println!("{:<24} {:<26} {:^8} {:^8}", pt.to_string(), image.to_string(), before, after);
        // The bijection inverts exactly.
        assert_eq!(map.invert(&image), pt);
    }
}
