//! Parameter-region membership, the critical constants where the region
//! boundaries meet, and the CSV emitters reproducing the boundary figures.
//!
//! ```bash
//! cargo run --example regions
//! ```

use univalence::families::{
    region_contains, thm3_region_b_three_bound, CriticalConstants, RegionQuery, RegionVerdict,
    Variant,
};
use univalence::figures::figure_csv;

fn main() {
    println!("critical constants:");
    for (name, v) in CriticalConstants::compute().table() {
        println!("  {:<16} {:.12}", name, v);
    }

    println!("\nmembership queries:");
    let queries = vec![
        ("thm1 A (0.5, 0)", RegionQuery { theorem: 1, variant: Variant::A, params: vec![0.5, 0.0] }),
        ("thm1 B (0.8, 0.05)", RegionQuery { theorem: 1, variant: Variant::B, params: vec![0.8, 0.05] }),
        ("thm1 A (0.8, 0.25)", RegionQuery { theorem: 1, variant: Variant::A, params: vec![0.8, 0.25] }),
        ("thm2   (0.45, 0.3)", RegionQuery { theorem: 2, variant: Variant::A, params: vec![0.45, 0.3] }),
        ("thm3 A (0.75, 0.25)", RegionQuery { theorem: 3, variant: Variant::A, params: vec![0.75, 0.25] }),
        ("thm4   (0.41)", RegionQuery { theorem: 4, variant: Variant::A, params: vec![0.41] }),
        ("thm5   (0.2)", RegionQuery { theorem: 5, variant: Variant::A, params: vec![0.2] }),
    ];
    for (label, q) in queries {
        match region_contains(&q).unwrap() {
            RegionVerdict::Inside => println!("  {:<22} inside", label),
            RegionVerdict::Outside { violated, residual } => {
                println!("  {:<22} outside: {} (residual {:.3e})", label, violated, residual)
            }
        }
    }

    println!("\nthm3 two-bound vs three-bound self-majorant region:");
    for (a, b) in [(0.6, 0.09), (0.75, 0.2), (0.9, 0.05)] {
        let two = region_contains(&RegionQuery {
            theorem: 3,
            variant: Variant::B,
            params: vec![a, b],
        })
        .unwrap();
        let three = thm3_region_b_three_bound(a, b);
        println!(
            "  (a={}, b={}):  two-bound {:<8} three-bound {:?}",
            a,
            b,
            format!("{:?}", matches!(two, RegionVerdict::Inside)),
            matches!(three, RegionVerdict::Inside)
        );
    }

    println!("\nboundary CSV (figure 1, first rows):");
    for line in figure_csv(1).unwrap().lines().take(6) {
        println!("  {}", line);
    }
}
