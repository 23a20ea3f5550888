//! The family catalogue: every built-in coefficient function with its
//! parameters, generator, and a sample of p, φ = p(1-x²)² and the endpoint
//! limit τ.
//!
//! ```bash
//! cargo run --example catalogue
//! ```

use univalence::families::{catalogue_json, Candidate};

fn main() {
    println!("catalogue (JSON):");
    println!("{}\n", catalogue_json());

    let samples = vec![
        Candidate::thm1(0.8, 0.05),
        Candidate::thm2(0.45, 0.3),
        Candidate::thm3(0.75, 0.1),
        Candidate::thm4(0.3),
        Candidate::thm5(0.2),
        Candidate::hille(1.0),
        Candidate::const_pi(0.0),
        Candidate::TwoOver,
        Candidate::NehariMu1 { mu: 0.5 },
        Candidate::NehariMu2 { mu: 0.4 },
        Candidate::Beesack { lambda: 0.3 },
        Candidate::ChuaquiSigma { lambda: 0.25 },
    ];

    println!(
        "{:<28} {:>12} {:>12} {:>12} {:>10}",
        "candidate", "p(0.25)", "p(0.75)", "phi(0.9)", "tau"
    );
    for c in samples {
        println!(
            "{:<28} {:>12.6} {:>12.6} {:>12.6} {:>10.4}",
            c.name(),
            c.p(0.25).unwrap(),
            c.p(0.75).unwrap(),
            c.phi(0.9).unwrap(),
            c.tau_analytic().unwrap(),
        );
    }

    println!("\ngenerators (u'' + p u = 0):");
    for c in [Candidate::thm1(0.8, 0.05), Candidate::thm5(0.2), Candidate::hille(1.0)] {
        println!("  {:<24} u = {}", c.name(), c.generator_description().unwrap());
    }
}
