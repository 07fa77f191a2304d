//! Classify points of the dual complex across several configurations.
//!
//! ```text
//! cargo run --example classify_points
//! ```

use valfan::catalog;
use valfan::cycle::DualComplexPoint;
use valfan::exact::rat;
use valfan::special::classify;

fn main() {
    for name in [
        "dp8-nodal",
        "dp8-ruling-conic",
        "dp4-pair",
        "quadric-rulings",
        "dp7-triangle",
    ] {
        let config = catalog::by_name(name).expect("catalog entry");
        println!(
            "{name}: degree {}, {} components",
            config.degree(),
            config.component_count()
        );
        let mut points = vec![
            DualComplexPoint::edge_from_rat(0, rat(1, 6)).unwrap(),
            DualComplexPoint::edge_from_rat(0, rat(1, 1)).unwrap(),
            DualComplexPoint::edge_from_rat(0, rat(5, 1)).unwrap(),
            DualComplexPoint::Vertex(0),
        ];
        if config.component_count() > 1 {
            points.push(DualComplexPoint::Vertex(1));
        }
        // Quadratic irrational points are classified exactly as well.
        points.push(DualComplexPoint::Edge {
            node: 0,
            t: "1 + sqrt(2)".parse().unwrap(),
        });
        for pt in points {
            let verdict = classify(&config, &pt).expect("valid configuration");
            println!(
                "  {pt:<28} -> {} [{}]{}",
                if verdict.special { "special    " } else { "not special" },
                verdict.case_tag.as_str(),
                match &verdict.certificate {
                    Some(a) => format!(
                        "  coefficients ({})",
                        a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                    ),
                    None => String::new(),
                }
            );
        }
        println!();
    }
}
