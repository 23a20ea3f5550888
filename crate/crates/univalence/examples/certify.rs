//! Certificates in action: the comparison-function sweep and the
//! self-majorance check on candidates inside and outside their regions,
//! including the classical non-self-majorant example 3(1+z²)^-2.
//!
//! ```bash
//! cargo run --example certify
//! ```

use univalence::checker::{check_nehari, check_self_majorant, DEFAULT_EPS, DEFAULT_GRID};
use univalence::families::Candidate;

fn main() {
    let cases = vec![
        ("inside thm1 region B", Candidate::thm1(0.8, 0.05)),
        ("outside thm1 region", Candidate::thm1(0.8, 0.25)),
        ("hille, constant phi", Candidate::hille(1.0)),
        ("inside thm4 region", Candidate::thm4(0.3)),
        ("outside thm4 region", Candidate::thm4(0.6)),
        ("inside thm5 region", Candidate::thm5(0.2)),
        ("the non-self-majorant 3(1+z^2)^-2", Candidate::NehariMu2 { mu: 1.0 }),
    ];

    for (label, c) in cases {
        println!("== {} ({})", label, c.name());
        let nehari = check_nehari(&c, DEFAULT_GRID, DEFAULT_EPS).unwrap();
        println!("   {}", nehari.to_json());
        let sm = check_self_majorant(&c, 40, 64).unwrap();
        println!("   {}", sm.to_json());
        println!();
    }
}
