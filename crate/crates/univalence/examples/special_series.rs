//! The special series behind the coefficient families: Dirichlet lambda
//! values, the tan(πx/2) and sec x expansions, and the exact Euler numbers
//! with their Dirichlet-beta cross-check.
//!
//! ```bash
//! cargo run --example special_series
//! ```

use std::f64::consts::PI;
use univalence::series::{
    dirichlet_beta_odd, dirichlet_lambda, euler_numbers, sec_series, tan_half_series,
};

fn main() {
    println!("Dirichlet lambda  λ(p) = Σ 1/(2n+1)^p");
    println!("--------------------------------------");
    println!("λ(2) = {:.15}   (π²/8  = {:.15})", dirichlet_lambda(2).unwrap(), PI * PI / 8.0);
    println!("λ(4) = {:.15}   (π⁴/96 = {:.15})", dirichlet_lambda(4).unwrap(), PI.powi(4) / 96.0);
    println!("λ(8) = {:.15}", dirichlet_lambda(8).unwrap());

    println!("\ntan(πx/2) series (odd, coefficients (4/π)λ(2k+2))");
    println!("--------------------------------------------------");
    let t = tan_half_series(41).unwrap();
    for k in 0..4 {
        println!("  x^{:<2} -> {:.15}", 2 * k + 1, t.coeff(2 * k + 1));
    }
    println!("  eval at 0.5: {:.12}  (tan(π/4) = 1)", t.eval(0.5));

    println!("\nsec x series (even, coefficients |E_2m|/(2m)!)");
    println!("-----------------------------------------------");
    let s = sec_series(60);
    for m in 0..4 {
        println!("  x^{:<2} -> {:.15}", 2 * m, s.coeff(2 * m));
    }
    println!("  eval at 1.0: {:.12}  (sec 1 = {:.12})", s.eval(1.0), 1.0 / 1.0f64.cos());

    println!("\nEuler numbers and the beta identity");
    println!("-----------------------------------");
    println!("E_2m = (-1)^m · 2 (2/π)^(2m+1) (2m)! β(2m+1):");
    let e = euler_numbers(8).unwrap();
    let mut fact = 1.0f64;
    for (m, &val) in e.iter().enumerate() {
        if m > 0 {
            fact *= (2 * m - 1) as f64 * (2 * m) as f64;
        }
        let sign = if m % 2 == 1 { -1.0 } else { 1.0 };
        let ident =
            sign * 2.0 * (2.0 / PI).powi(2 * m as i32 + 1) * fact * dirichlet_beta_odd(2 * m as u32 + 1);
        println!("  E_{:<2} = {:>12}   identity gives {:>18.6}", 2 * m, val, ident);
    }
    println!("\nexact integers overflow i128 at order 40:");
    println!("  euler_numbers(20) -> {:?}", euler_numbers(20).unwrap_err());
}
