//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them). Tolerances and
//! runtime budgets are pinned in the assertions.
//!
//! ```bash
//! cargo test --test acceptance -- --nocapture
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Instant;
use univalence::checker::{
    self, check_nehari, check_self_majorant, tau_extrapolated, CheckStatus, DEFAULT_EPS,
    DEFAULT_GRID,
};
use univalence::families::{
    self, region_contains, Candidate, CriticalConstants, RegionQuery, Variant,
};
use univalence::ode::{self, endpoint_divergence, multiplicity_fit, solve_even, DivergenceVerdict};
use univalence::radius::{self, RadiusTarget};
use univalence::series::{self, schwarzian, TaylorSeries};

struct Criterion {
    label: &'static str,
    failures: Vec<String>,
    started: Instant,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Criterion { label, failures: Vec::new(), started: Instant::now() }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(mut self, budget_secs: Option<f64>) {
        let elapsed = self.started.elapsed().as_secs_f64();
        if let Some(budget) = budget_secs {
            if elapsed >= budget {
                self.failures
                    .push(format!("runtime {:.2}s exceeded budget {:.0}s", elapsed, budget));
            }
        }
        if self.failures.is_empty() {
            println!("{}: PASS ({:.2}s)", self.label, elapsed);
        } else {
            println!("{}: FAIL ({:.2}s): {}", self.label, elapsed, self.failures.join("; "));
            panic!("{} failed: {}", self.label, self.failures.join("; "));
        }
    }
}

#[test]
fn criterion_1_critical_constants() {
    let mut c = Criterion::new("criterion 1 (critical constants)");
    let k = CriticalConstants::compute();
    // the published reference decimals for the two lambda constants disagree
    // with their own defining closed forms by ~1.5e-4 (misprints), so those
    // two comparisons fail honestly; the closed forms evaluate to 0.4025292
    // and 0.2662570
    let table = [
        ("lambda0_thm4", k.lambda0_thm4, 0.40235),
        ("lambda0_thm5", k.lambda0_thm5, 0.2664),
        ("a0", k.a0, 0.6830),
        ("a1", k.a1, 0.9114),
        ("crossover", k.thm1_crossover, 0.9714),
    ];
    for (name, computed, reference) in table {
        c.require((computed - reference).abs() <= 1e-4, || {
            format!(
                "{} computed {:.7} vs reference {} (|diff| = {:.2e} > 1e-4)",
                name,
                computed,
                reference,
                (computed - reference).abs()
            )
        });
    }
    c.finish(Some(1.0));
}

#[test]
fn criterion_2_errf_radius() {
    let mut c = Criterion::new("criterion 2 (errf radius)");
    let scan = radius::lambda_scan(5, 0.05, 0.26, 0.01);
    match radius::maximize_radius(RadiusTarget::Errf, &scan, 4096) {
        Ok(est) => {
            c.require(est.r_lower >= 1.365, || {
                format!("maximize_radius returned {} < 1.365", est.r_lower)
            });
            c.require(est.r_lower < 1.5748, || {
                format!("maximize_radius returned {} >= true radius 1.5748", est.r_lower)
            });
        }
        Err(e) => c.require(false, || format!("maximize_radius failed: {}", e)),
    }
    match radius::certify(1.365, &Candidate::thm5(0.2), 8192) {
        Ok(out) => c.require(out.is_certified(), || format!("certify(1.365) -> {:?}", out)),
        Err(e) => c.require(false, || format!("certify(1.365) errored: {}", e)),
    }
    c.finish(Some(10.0));
}

/// Uniform interior sample of one theorem region (interval positions kept
/// 1% away from the parameter bounds).
fn sample_region(rng: &mut ChaCha8Rng, theorem: u8, variant: Variant) -> Candidate {
    let frac = |rng: &mut ChaCha8Rng| rng.gen_range(0.01..0.99);
    match theorem {
        1 => {
            let a = rng.gen_range(0.5..1.0);
            let lo = match variant {
                Variant::A => families::thm1_lower(a),
                Variant::B => families::thm1_lower(a).max(families::thm1_lower_sm(a)),
            };
            let hi = families::thm1_upper(a);
            Candidate::thm1(a, lo + frac(rng) * (hi - lo))
        }
        2 => {
            let mu = rng.gen_range(0.0..1.0);
            let lo = (1.0 - mu) / 2.0;
            let hi = 1.0 - mu;
            Candidate::thm2(lo + frac(rng) * (hi - lo), mu)
        }
        3 => {
            let a = rng.gen_range(0.5..1.0);
            let (lo, hi) = match variant {
                Variant::A => (families::thm3_lower(a), a - 0.5),
                Variant::B => (
                    families::thm3_lower(a).max(a - 1.0),
                    (a - 0.5).min(families::thm3_s(a)),
                ),
            };
            Candidate::thm3(a, lo + frac(rng) * (hi - lo))
        }
        4 => Candidate::thm4(frac(rng) * CriticalConstants::compute().lambda0_thm4),
        5 => Candidate::thm5(frac(rng) * CriticalConstants::compute().lambda0_thm5),
        t => panic!("no region for theorem {}", t),
    }
}

fn query_for(c: &Candidate, variant: Variant) -> RegionQuery {
    match *c {
        Candidate::Thm1 { a, lambda } => {
            RegionQuery { theorem: 1, variant, params: vec![a, lambda] }
        }
        Candidate::Thm2 { lambda, mu } => {
            RegionQuery { theorem: 2, variant, params: vec![lambda, mu] }
        }
        Candidate::Thm3 { a, b } => RegionQuery { theorem: 3, variant, params: vec![a, b] },
        Candidate::Thm4 { lambda } => RegionQuery { theorem: 4, variant, params: vec![lambda] },
        Candidate::Thm5 { lambda } => RegionQuery { theorem: 5, variant, params: vec![lambda] },
        _ => unreachable!("sampled candidates are theorem families"),
    }
}

#[test]
fn criterion_3_region_implies_comparison_function() {
    let mut c = Criterion::new("criterion 3 (region => comparison function)");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let suites: [(u8, Variant); 7] = [
        (1, Variant::A),
        (1, Variant::B),
        (2, Variant::A),
        (3, Variant::A),
        (3, Variant::B),
        (4, Variant::A),
        (5, Variant::A),
    ];
    for (theorem, variant) in suites {
        let mut bad = 0usize;
        for _ in 0..1000 {
            let cand = sample_region(&mut rng, theorem, variant);
            let q = query_for(&cand, variant);
            assert!(
                region_contains(&q).unwrap().is_inside(),
                "sampler left the region: {}",
                cand.name()
            );
            if !check_nehari(&cand, DEFAULT_GRID, DEFAULT_EPS).unwrap().is_verified() {
                bad += 1;
            }
        }
        c.require(bad == 0, || {
            format!("thm{} variant {:?}: {}/1000 interior points not verified", theorem, variant, bad)
        });
    }
    // necessity: stepping 1e-3 outside the binding bound flips the verdict
    // for at least 95% of sampled boundary points (theorems 1, 4, 5)
    let mut flipped = 0usize;
    let mut total = 0usize;
    for _ in 0..100 {
        let a = rng.gen_range(0.5..1.0);
        for cand in [
            Candidate::thm1(a, families::thm1_upper(a) + 1e-3),
            Candidate::thm1(a, families::thm1_lower(a) - 1e-3),
        ] {
            total += 1;
            if !check_nehari(&cand, DEFAULT_GRID, DEFAULT_EPS).unwrap().is_verified() {
                flipped += 1;
            }
        }
    }
    let k = CriticalConstants::compute();
    for cand in [Candidate::thm4(k.lambda0_thm4 + 1e-3), Candidate::thm5(k.lambda0_thm5 + 1e-3)] {
        total += 1;
        if !check_nehari(&cand, DEFAULT_GRID, DEFAULT_EPS).unwrap().is_verified() {
            flipped += 1;
        }
    }
    c.require(flipped as f64 >= 0.95 * total as f64, || {
        format!("only {}/{} boundary steps refuted", flipped, total)
    });
    c.finish(Some(120.0));
}

#[test]
fn criterion_4_self_majorance_suite() {
    let mut c = Criterion::new("criterion 4 (self-majorance)");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    // theorems 1 and 3: all series coefficients >= -1e-12 up to order 40 on
    // 200 variant-B samples each
    for theorem in [1u8, 3] {
        let mut worst = f64::INFINITY;
        for _ in 0..200 {
            let cand = sample_region(&mut rng, theorem, Variant::B);
            let s = cand.p_series(40).unwrap();
            for k in 0..=40 {
                worst = worst.min(s.coeff(k));
            }
        }
        c.require(worst >= -1e-12, || {
            format!("thm{}: min series coefficient {} below -1e-12", theorem, worst)
        });
    }
    // thm2: L(x) coefficient positivity 2λ(2k+2) - 2λ/(1-μ) >= 0 inside the
    // region, plus nonnegative p series
    let mut worst_l = f64::INFINITY;
    let mut worst_p = f64::INFINITY;
    for _ in 0..200 {
        let cand = sample_region(&mut rng, 2, Variant::A);
        let (lambda, mu) = match cand {
            Candidate::Thm2 { lambda, mu } => (lambda, mu),
            _ => unreachable!(),
        };
        for k in 0..=19u32 {
            let coeff = 2.0 * series::dirichlet_lambda(2 * k + 2).unwrap()
                - 2.0 * lambda / (1.0 - mu);
            worst_l = worst_l.min(coeff);
        }
        let s = cand.p_series(40).unwrap();
        for k in 0..=40 {
            worst_p = worst_p.min(s.coeff(k));
        }
    }
    c.require(worst_l >= -1e-12, || format!("thm2 L coefficient {} negative", worst_l));
    c.require(worst_p >= -1e-12, || format!("thm2 p coefficient {} negative", worst_p));
    // thm4, thm5: coefficient positivity across the lambda interval
    for theorem in [4u8, 5] {
        let mut worst = f64::INFINITY;
        for _ in 0..200 {
            let cand = sample_region(&mut rng, theorem, Variant::A);
            let s = cand.p_series(40).unwrap();
            for k in 0..=40 {
                worst = worst.min(s.coeff(k));
            }
        }
        c.require(worst >= -1e-12, || {
            format!("thm{}: min series coefficient {} below -1e-12", theorem, worst)
        });
    }
    // the classical counterexample is refuted by circle sampling
    let cert = check_self_majorant(&Candidate::NehariMu2 { mu: 1.0 }, 40, 64).unwrap();
    c.require(cert.status == CheckStatus::Refuted, || {
        format!("3(1+z^2)^-2 self-majorance check returned {:?}", cert.status)
    });
    c.finish(None);
}

#[test]
fn criterion_5_schwarzian_algebra() {
    let mut c = Criterion::new("criterion 5 (schwarzian algebra)");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let order = 24;
    // Möbius annihilation
    let mut worst_mobius: f64 = 0.0;
    for _ in 0..100 {
        let (a, b, d): (f64, f64, f64) = (
            rng.gen_range(0.5..1.5) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
            rng.gen_range(-0.5..0.5),
            1.0,
        );
        let cc = rng.gen_range(-0.6..0.6);
        if (a * d - b * cc).abs() < 0.05 {
            continue;
        }
        let t = series::mobius_series(a, b, cc, d, order).unwrap();
        worst_mobius = worst_mobius.max(schwarzian(&t).unwrap().max_abs_coeff());
    }
    c.require(worst_mobius <= 1e-12, || {
        format!("S(mobius) coefficient {} exceeds 1e-12", worst_mobius)
    });
    // composition rule residual at order 20 over 100 random (g, T) pairs
    // coefficients kept tame so f' stays bounded away from zero inside the
    // composition radius; otherwise the f''/f' division amplifies rounding
    let mut worst_comp: f64 = 0.0;
    for _ in 0..100 {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[1] = rng.gen_range(0.8..1.25) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let mut scale = 0.5;
        for ck in coeffs.iter_mut().skip(2) {
            scale *= 0.35;
            *ck = rng.gen_range(-1.0..1.0) * scale;
        }
        let g = TaylorSeries::new(coeffs, series::Parity::None).unwrap();
        let a = rng.gen_range(0.6..1.2);
        let cc = rng.gen_range(-0.4..0.4);
        let t = series::mobius_series(a, 0.0, cc, 1.0, order).unwrap();
        let lhs = schwarzian(&g.compose(&t).unwrap()).unwrap();
        let tp = t.differentiate();
        let rhs = schwarzian(&g).unwrap().compose(&t).unwrap().mul(&tp.mul(&tp));
        for k in 0..=20 {
            worst_comp = worst_comp.max((lhs.coeff(k) - rhs.coeff(k)).abs());
        }
    }
    c.require(worst_comp <= 1e-9, || {
        format!("composition residual {} exceeds 1e-9 at order 20", worst_comp)
    });
    // Koebe
    let koebe =
        TaylorSeries::new((0..=order).map(|k| k as f64).collect(), series::Parity::None).unwrap();
    let s = schwarzian(&koebe).unwrap();
    let mut worst_koebe: f64 = 0.0;
    for k in 0..=s.order() {
        let reference = if k % 2 == 0 { -6.0 * (k as f64 / 2.0 + 1.0) } else { 0.0 };
        worst_koebe = worst_koebe.max((s.coeff(k) - reference).abs());
    }
    c.require(worst_koebe <= 1e-10, || {
        format!("Koebe schwarzian deviates from -6/(1-z^2)^2 by {}", worst_koebe)
    });
    c.finish(None);
}

#[test]
fn criterion_6_oscillation_oracle() {
    let mut c = Criterion::new("criterion 6 (oscillation oracle)");
    let oracle = |gamma: f64, eps: f64| -> usize {
        (gamma / (2.0 * PI) * ((2.0 - eps) / eps).ln() + 0.5).floor() as usize
    };
    let mut max_drift: f64 = 0.0;
    for &gamma in &[0.5, 1.0, 2.0] {
        for &eps in &[1e-3, 1e-4, 1e-5, 1e-6] {
            let sol = solve_even(&Candidate::hille(gamma), eps, 1e-11).unwrap();
            max_drift = max_drift.max(sol.wronskian_drift);
            let expect = oracle(gamma, eps);
            c.require(sol.zero_count() == expect, || {
                format!(
                    "hille({}) eps={:e}: counted {} zeros, oracle {}",
                    gamma,
                    eps,
                    sol.zero_count(),
                    expect
                )
            });
        }
    }
    let sol = solve_even(&Candidate::const_pi(0.0), 1e-6, 1e-11).unwrap();
    max_drift = max_drift.max(sol.wronskian_drift);
    c.require(sol.zero_count() == 0, || {
        format!("const_pi(0) gave {} zeros", sol.zero_count())
    });
    c.require(max_drift <= 1e-8, || format!("wronskian drift {} exceeds 1e-8", max_drift));
    c.finish(Some(30.0));
}

#[test]
fn criterion_7_tau_suite() {
    let mut c = Criterion::new("criterion 7 (tau extrapolation)");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    let mut cases: Vec<(Candidate, f64)> = Vec::new();
    for _ in 0..20 {
        let cand = sample_region(&mut rng, 1, Variant::A);
        let a = match cand {
            Candidate::Thm1 { a, .. } => a,
            _ => unreachable!(),
        };
        cases.push((cand, 4.0 * a * (1.0 - a)));
        let cand = sample_region(&mut rng, 3, Variant::A);
        let a = match cand {
            Candidate::Thm3 { a, .. } => a,
            _ => unreachable!(),
        };
        cases.push((cand, 4.0 * a * (1.0 - a)));
        let cand = sample_region(&mut rng, 2, Variant::A);
        let (l, m) = match cand {
            Candidate::Thm2 { lambda, mu } => (lambda, mu),
            _ => unreachable!(),
        };
        cases.push((cand, 4.0 * (l + m) * (1.0 - l - m)));
        cases.push((sample_region(&mut rng, 4, Variant::A), 0.0));
        cases.push((sample_region(&mut rng, 5, Variant::A), 0.0));
        let gamma = rng.gen_range(0.1..3.0);
        cases.push((Candidate::hille(gamma), 1.0 + gamma * gamma));
    }
    assert!(cases.len() >= 100);
    for (cand, closed) in cases {
        let ext = tau_extrapolated(&cand).unwrap();
        worst = worst.max((ext - closed).abs());
        c.require((ext - closed).abs() <= 1e-6, || {
            format!("{}: extrapolated {} vs closed {}", cand.name(), ext, closed)
        });
    }
    println!("  (worst tau extrapolation error: {:.2e})", worst);
    c.finish(None);
}

#[test]
fn criterion_8_g_inequalities() {
    let mut c = Criterion::new("criterion 8 (G-function inequalities)");
    let n = 10_000;
    let slack = 1e-10;
    let mut prev_r = f64::INFINITY;
    for i in 1..=n {
        let x = i as f64 / (n + 1) as f64;
        // (i) concavity: G'' <= 0
        c.require(families::g_second(x) <= slack, || {
            format!("G''({}) = {} > 0", x, families::g_second(x))
        });
        // (ii) R nonincreasing with maximum 1 at 0
        let r = families::r_eval(x);
        c.require(r <= prev_r + slack, || format!("R increased at x = {}", x));
        c.require(r <= 1.0 + slack, || format!("R({}) = {} exceeds 1", x, r));
        prev_r = r;
        // (iii) G(x) <= (2/pi)(1+x)
        c.require(families::g_eval(x) <= 2.0 / PI * (1.0 + x) + slack, || {
            format!("G({}) above tangent line", x)
        });
        // (iv) (pi/2) G'(x) <= 1 + (pi^2/4)(1-x^2)
        c.require(
            FRAC_PI_2 * families::g_prime(x) <= 1.0 + PI * PI / 4.0 * (1.0 - x * x) + slack,
            || format!("G' bound violated at x = {}", x),
        );
    }
    c.finish(None);
}

#[test]
fn criterion_9_divergence_criterion() {
    let mut c = Criterion::new("criterion 9 (divergence criterion)");
    // multiplicity fits on the solved families
    let rep = endpoint_divergence(&Candidate::thm1(0.75, 0.1)).unwrap();
    c.require((rep.m - 0.75).abs() <= 2e-2, || {
        format!("thm1(0.75, 0.1): fitted m = {} vs 0.75", rep.m)
    });
    c.require(rep.verdict == DivergenceVerdict::Diverges, || {
        format!("thm1(0.75, 0.1) verdict {:?}", rep.verdict)
    });
    let rep = endpoint_divergence(&Candidate::thm2(0.3, 0.3)).unwrap();
    c.require((rep.m - 0.6).abs() <= 2e-2, || {
        format!("thm2(0.3, 0.3): fitted m = {} vs 0.6", rep.m)
    });
    // verdict flips across m = 1/2 on synthetic (1-x)^m data
    let hs: Vec<f64> = (8..=20).map(|k| (2.0f64).powi(-k)).collect();
    for (m, expect) in [
        (0.40, DivergenceVerdict::Converges),
        (0.48, DivergenceVerdict::Converges),
        (0.52, DivergenceVerdict::Diverges),
        (0.60, DivergenceVerdict::Diverges),
    ] {
        let us: Vec<f64> = hs.iter().map(|h| h.powf(m)).collect();
        let (fit, _) = multiplicity_fit(&hs, &us);
        c.require(ode::verdict_for(fit) == expect, || {
            format!("synthetic m = {}: verdict {:?}", m, ode::verdict_for(fit))
        });
    }
    // and on integrated solutions across the threshold
    let below = endpoint_divergence(&Candidate::thm1(0.45, 0.0)).unwrap();
    c.require(below.verdict == DivergenceVerdict::Converges, || {
        format!("thm1(0.45, 0): verdict {:?} (m = {})", below.verdict, below.m)
    });
    let above = endpoint_divergence(&Candidate::thm1(0.55, 0.0)).unwrap();
    c.require(above.verdict == DivergenceVerdict::Diverges, || {
        format!("thm1(0.55, 0): verdict {:?} (m = {})", above.verdict, above.m)
    });
    c.finish(None);
}

#[test]
fn checker_dual_route_consistency() {
    // the polynomial route and the grid sweep agree on verdicts for
    // 1000 random parameter points (theorems 1 and 3)
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let a = rng.gen_range(0.4..1.1);
        let lambda = rng.gen_range(-0.3..0.3);
        let sweep = check_nehari(&Candidate::thm1(a, lambda), 2048, DEFAULT_EPS)
            .unwrap()
            .is_verified();
        assert_eq!(
            sweep,
            checker::thm1_poly_verdict(a, lambda),
            "thm1 a={} lambda={}",
            a,
            lambda
        );
    }
    for _ in 0..500 {
        let a = rng.gen_range(0.4..1.1);
        let b = rng.gen_range(-0.5..0.5);
        let sweep = check_nehari(&Candidate::thm3(a, b), 2048, DEFAULT_EPS)
            .unwrap()
            .is_verified();
        assert_eq!(sweep, checker::thm3_poly_verdict(a, b), "thm3 a={} b={}", a, b);
    }
    println!("dual-route consistency: PASS");
}
