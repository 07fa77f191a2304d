//! The configuration file format: write, read back, validate, and report
//! violations for a broken file.
//!
//! ```text
//! cargo run --example config_files
//! ```

use valfan::catalog;
use valfan::jsonio::{config_from_json, config_to_json, render};

fn main() {
    let config = catalog::by_name("dp8-ruling-conic").unwrap();
    let text = render(&config_to_json(&config));
    println!("config document:\n{text}");

    let parsed = config_from_json(&text).unwrap();
    assert_eq!(parsed, config);
    println!("violations of the parsed config: {:?}", parsed.validate().unwrap());

    // A cycle whose components do not sum to the anticanonical class.
    let broken = r#"{
  "branch_flip": false,
  "components": [[1, 0], [1, 0]],
  "surface": "blowup:1"
}"#;
    let broken = config_from_json(broken).unwrap();
    println!("\nviolations of a broken config:");
    for v in broken.validate().unwrap() {
        println!("  {v}");
    }
}
