//! The weighted-projective complete-intersection records attached to the
//! degree-8 chamber boundaries, with their homogeneity reports.
//!
//! The records are transcribed data: the validator computes the weighted
//! degree of every monomial and the naive anticanonical degree of the
//! intersection, and reports what it finds without asserting correctness.
//!
//! ```text
//! cargo run --example wps_records
//! ```

use valfan::degen::{validate_homogeneity, wps_ci_record};

fn main() {
    for k in 0..=2i64 {
        let rec = wps_ci_record(k);
        let report = validate_homogeneity(&rec);
        let weights: Vec<String> = rec.weights.iter().map(|w| w.to_string()).collect();
        println!("k = {k}: P({})", weights.join(", "));
        for (i, eq) in rec.equations.iter().enumerate() {
            let terms: Vec<String> = eq
                .iter()
                .map(|(c, exps)| {
                    let mono: Vec<String> = exps
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| !num_traits::Zero::is_zero(*e))
                        .map(|(v, e)| {
                            if *e == 1.into() {
                                format!("x{v}")
                            } else {
                                format!("x{v}^{e}")
                            }
                        })
                        .collect();
                    format!("{c:+} {}", mono.join(" "))
                })
                .collect();
            let degs: Vec<String> =
                report.term_degrees[i].iter().map(|d| d.to_string()).collect();
            println!("  equation {}: {}", i + 1, terms.join(" "));
            println!(
                "    term degrees [{}] -> {}",
                degs.join(", "),
                if report.homogeneous[i] {
                    format!("homogeneous of degree {}", report.degrees[i].as_ref().unwrap())
                } else {
                    "NOT homogeneous under the natural index reading".to_string()
                }
            );
        }
        match &report.naive_anticanonical_square {
            Some(v) => println!("  naive complete-intersection (-K)^2 = {v}\n"),
            None => println!("  naive (-K)^2 not defined (an equation is inhomogeneous)\n"),
        }
    }
}
