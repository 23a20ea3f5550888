//! Sturm oscillation in practice: zero counts of the even solution of
//! u'' + pu = 0 against the closed-form oracle for the oscillatory family,
//! the quotient map f = ∫ dt/u², and the sigma-family probe at the τ = 1
//! boundary.
//!
//! ```bash
//! cargo run --example oscillation
//! ```

use std::f64::consts::PI;
use univalence::families::Candidate;
use univalence::ode::{solve_even, solve_from};

fn oracle(gamma: f64, eps: f64) -> usize {
    (gamma / (2.0 * PI) * ((2.0 - eps) / eps).ln() + 0.5).floor() as usize
}

fn main() {
    println!("zero counts for p = (1+γ²)(1-x²)^-2 on [0, 1-ε]");
    println!("------------------------------------------------");
    println!("{:>6} {:>8} {:>9} {:>8} {:>12}", "gamma", "eps", "computed", "oracle", "W drift");
    for &gamma in &[0.5, 1.0, 2.0] {
        for &eps in &[1e-3, 1e-4, 1e-5, 1e-6] {
            let sol = solve_even(&Candidate::hille(gamma), eps, 1e-11).unwrap();
            println!(
                "{:>6} {:>8.0e} {:>9} {:>8} {:>12.3e}",
                gamma,
                eps,
                sol.zero_count(),
                oracle(gamma, eps),
                sol.wronskian_drift
            );
        }
    }

    let sol = solve_even(&Candidate::const_pi(0.0), 1e-6, 1e-11).unwrap();
    println!("\np = π²/4: {} zeros (first zero of cos(πx/2) sits exactly at x = 1)", sol.zero_count());

    println!("\nquotient map f(x) = ∫ dt/u²");
    println!("---------------------------");
    let sol = solve_even(&Candidate::thm1(0.5, 0.0), 1e-6, 1e-12).unwrap();
    for &x in &[0.25, 0.5, 0.75] {
        println!(
            "  u = (1-x²)^½:  f({}) = {:.12}   atanh = {:.12}",
            x,
            sol.quotient_f(x).unwrap(),
            x.atanh()
        );
    }

    println!("\nsigma-family probe at the τ = 1 boundary (launched from x = 0.9)");
    println!("-----------------------------------------------------------------");
    for &lambda in &[4.0, 0.25] {
        let sol = solve_from(&Candidate::ChuaquiSigma { lambda }, 0.9, 1.0, 0.0, 1e-8, 1e-11)
            .unwrap();
        match sol.zeros().last() {
            Some(z) => println!("  λ = {:<5} {} zero(s), last at x = {:.9}", lambda, sol.zero_count(), z),
            None => println!("  λ = {:<5} no zeros up to 1 - 1e-8", lambda),
        }
    }
}
