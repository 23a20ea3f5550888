//! Schwarzian derivative algebra on truncated series: Möbius maps are
//! annihilated, the chain rule holds through composition, the Koebe function
//! reproduces its classical Schwarzian, and quotients of solutions of
//! u'' + pu = 0 recover 2p.
//!
//! ```bash
//! cargo run --example schwarzian_algebra
//! ```

use univalence::families::Candidate;
use univalence::ode::series_solutions;
use univalence::series::{mobius_series, schwarzian, Parity, TaylorSeries};

fn main() {
    let order = 24;

    println!("Schwarzian of a Möbius map (should vanish identically)");
    println!("------------------------------------------------------");
    let t = mobius_series(1.3, -0.4, 0.35, 1.0, order).unwrap();
    let st = schwarzian(&t).unwrap();
    println!("T(z) = (1.3z - 0.4)/(0.35z + 1):  max |S T| coefficient = {:.3e}\n", st.max_abs_coeff());

    println!("Composition rule S(g∘T) = (S g ∘ T) · (T')²  for T(0) = 0");
    println!("----------------------------------------------------------");
    let g = TaylorSeries::new(
        (0..=order)
            .map(|k| match k {
                0 => 0.0,
                1 => 1.0,
                k => 0.3 / (k as f64 * k as f64),
            })
            .collect(),
        Parity::None,
    )
    .unwrap();
    let t0 = mobius_series(0.9, 0.0, 0.4, 1.0, order).unwrap();
    let lhs = schwarzian(&g.compose(&t0).unwrap()).unwrap();
    let tp = t0.differentiate();
    let rhs = schwarzian(&g).unwrap().compose(&t0).unwrap().mul(&tp.mul(&tp));
    let residual = lhs.sub(&rhs.truncated(lhs.order()));
    println!("max residual coefficient through order {}: {:.3e}\n", lhs.order(), residual.max_abs_coeff());

    println!("Koebe function z/(1-z)²");
    println!("-----------------------");
    let koebe = TaylorSeries::new((0..=order).map(|k| k as f64).collect(), Parity::None).unwrap();
    let s = schwarzian(&koebe).unwrap();
    println!("S(z/(1-z)²) coefficients (expect -6(k+1) at even orders):");
    for k in 0..=4 {
        println!("  x^{:<2} -> {:+.12}   reference {:+.1}", 2 * k, s.coeff(2 * k), -6.0 * (k as f64 + 1.0));
    }

    println!("\nQuotient of recurrence solutions: S(v/u) = 2p");
    println!("---------------------------------------------");
    for c in [Candidate::thm1(0.8, 0.05), Candidate::hille(1.0), Candidate::thm4(0.3)] {
        let p = c.p_series(order).unwrap();
        let (u, v) = series_solutions(&p, order);
        let f = v.div(&u).unwrap();
        let s = schwarzian(&f).unwrap();
        let worst = (0..=20)
            .map(|k| (s.coeff(k) - 2.0 * p.coeff(k)).abs())
            .fold(0.0f64, f64::max);
        println!("  {:<24} max |S(v/u) - 2p| coefficient = {:.3e}", c.name(), worst);
    }
}
