//! Radius of univalence of the error function errf(z) = ∫₀^z e^(-t²) dt:
//! certify the reported radius r = 1.365 against the theorem-5 family at
//! λ = 0.2, scan λ for the best certifiable radius, and dump the margin
//! profile behind the tangency picture.
//!
//! ```bash
//! cargo run --example errf_radius
//! ```

use univalence::families::Candidate;
use univalence::radius::{
    certify, errf_schwarzian_bound, lambda_scan, margin_profile, maximize_radius, RadiusTarget,
    FINAL_GRID,
};

fn main() {
    println!("|S(errf(rz))| <= 2r²(1 + r²x²) on |z| = x; e.g. bound(1, 0) = {}", errf_schwarzian_bound(1.0, 0.0));

    println!("\ncertify the reported radius against thm5(λ = 0.2):");
    let outcome = certify(1.365, &Candidate::thm5(0.2), FINAL_GRID).unwrap();
    println!("  certify(r = 1.365) -> {:?}", outcome);
    let outcome = certify(1.58, &Candidate::thm5(0.2), FINAL_GRID).unwrap();
    println!("  certify(r = 1.580) -> {:?}  (beyond the true radius 1.5748)", outcome);

    println!("\nscan λ in [0.05, 0.26] and bisect the best certifiable radius:");
    let est = maximize_radius(RadiusTarget::Errf, &lambda_scan(5, 0.05, 0.26, 0.01), 4096).unwrap();
    println!("  best: r_lower = {:.4} with {}", est.r_lower, est.family.name());
    println!("  margin {:.6} attained at x = {:.4} (interior tangency)", est.margin, est.margin_argmin);
    println!("  bisection probes: {}", est.search_trace.len());

    println!("\nmargin profile (x, 2p(x), bound(r,x)) at r = 1.365, λ = 0.2:");
    let rows = margin_profile(RadiusTarget::Errf, 1.365, &Candidate::thm5(0.2), 9).unwrap();
    for (x, two_p, bound) in rows {
        println!("  x = {:.3}   2p = {:>9.4}   bound = {:>9.4}   margin = {:>8.4}", x, two_p, bound, two_p - bound);
    }

    println!("\nfull JSON estimate:");
    println!("{}", est.to_json());
}
