//! Runs the identity suite programmatically and prints the report.
//!
//! ```text
//! cargo run --release --example verify_identities
//! ```

use ultraspherical::cli::format_report;
use ultraspherical::verify::{run, VerifyConfig, CHECKS};

fn main() {
    for (name, what) in CHECKS {
        println!("{name:<20} {what}");
    }
    println!();
    let report = run(&VerifyConfig::new(3, 5, 4, 1e-10).unwrap()).unwrap();
    print!("{}", format_report(&report));
}
