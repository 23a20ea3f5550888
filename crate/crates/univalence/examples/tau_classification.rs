//! The endpoint quantity τ = lim p(x)(1-x²)², its Richardson extrapolation
//! against the closed forms, the valence trichotomy it controls, and the
//! endpoint divergence probe behind the sharpness tests.
//!
//! ```bash
//! cargo run --example tau_classification
//! ```

use univalence::checker::{classify_valence, tau_extrapolated};
use univalence::families::Candidate;
use univalence::ode::endpoint_divergence;

fn main() {
    println!("τ by Richardson extrapolation vs closed form");
    println!("--------------------------------------------");
    let samples = vec![
        Candidate::thm1(0.83, 0.04),
        Candidate::thm2(0.45, 0.3),
        Candidate::thm3(0.75, 0.1),
        Candidate::thm4(0.25),
        Candidate::thm5(0.2),
        Candidate::hille(0.5),
        Candidate::Beesack { lambda: 0.3 },
    ];
    for c in &samples {
        let ext = tau_extrapolated(c).unwrap();
        let closed = c.tau_analytic().unwrap();
        println!(
            "  {:<26} extrapolated {:>12.9}  closed {:>12.9}  |diff| {:.2e}",
            c.name(),
            ext,
            closed,
            (ext - closed).abs()
        );
    }

    println!("\nvalence classification of C·p by C·τ against 1");
    println!("-----------------------------------------------");
    let cases = vec![
        (Candidate::hille(0.5), 1.0),
        (Candidate::thm5(0.2), 10.0),
        (Candidate::thm1(0.5, 0.0), 1.0),
        (Candidate::ChuaquiSigma { lambda: 4.0 }, 1.0),
        (Candidate::ChuaquiSigma { lambda: 0.25 }, 1.0),
    ];
    for (c, scale) in cases {
        println!("  {:<28} C = {:<4} -> {:?}", c.name(), scale, classify_valence(&c, scale).unwrap());
    }

    println!("\nendpoint divergence probe: ∫^1 dx/u² and the vanishing order of u");
    println!("------------------------------------------------------------------");
    for c in [
        Candidate::thm1(0.75, 0.1),
        Candidate::thm2(0.3, 0.3),
        Candidate::thm5(0.2),
        Candidate::const_pi(-0.5),
    ] {
        let rep = endpoint_divergence(&c).unwrap();
        println!(
            "  {:<26} m = {:.4} (analytic {:?}), r² = {:.6} -> {:?}",
            c.name(),
            rep.m,
            rep.analytic_m,
            rep.r_squared,
            rep.verdict
        );
    }
}
