//! Numerical toolkit for Schwarzian-derivative univalence criteria.
//!
//! An analytic function `f` on the unit disc is univalent (injective) whenever
//! its Schwarzian derivative `Sf = (f''/f')' - (f''/f')^2/2` is dominated by
//! `2p(|z|)` for a suitable comparison function `p`: a positive even function
//! on `(-1,1)` whose associated `φ(x) = p(x)(1-x^2)^2` is nonincreasing and
//! whose differential equation `u'' + p u = 0` admits a nonvanishing solution.
//! This crate provides:
//!
//! - [`series`]: truncated power-series arithmetic, the special series
//!   `tan(πx/2)`, `sec x`, Dirichlet lambda values, exact Euler numbers, and
//!   the Schwarzian derivative as a series operator;
//! - [`families`]: a catalogue of parametric comparison functions (five
//!   theorem families plus the classical ones), closed-form evaluators,
//!   parameter-region predicates and the associated critical constants;
//! - [`checker`]: numerical certificates: positivity/monotonicity of `φ`,
//!   self-majorance (`|p(z)| <= p(|z|)`), the endpoint limit `τ` and the
//!   finite/infinite valence classification, and sampled verification of
//!   `|Sf(z)| <= 2p(|z|)` bounds;
//! - [`ode`]: an adaptive Runge–Kutta solver for `u'' + p(x)u = 0` on
//!   `[0, 1-ε]` with zero counting, the quotient map `f = ∫ dt/u²`, and the
//!   endpoint divergence probe behind sharpness tests;
//! - [`radius`]: certified lower bounds for the radius of univalence of the
//!   error function (`r >= 1.365`);
//! - [`figures`]: CSV emitters reproducing the region/bound plots;
//! - [`cli`]: the command-line surface wired to all of the above.
//!
//! Everything is deterministic, pure `f64` computation with no shared mutable
//! state, so all of it is safe to drive from multiple threads.
//!
//! The runnable programs under `examples/` walk through each capability:
//!
//! ```bash
//! cargo run --example schwarzian_algebra
//! cargo run --example special_series
//! cargo run --example catalogue
//! cargo run --example certify
//! cargo run --example regions
//! cargo run --example oscillation
//! cargo run --example tau_classification
//! cargo run --example errf_radius
//! ```
//!
//! The same operations are reachable through the thin `univalence` binary;
//! see the README for the verb list.

pub mod checker;
pub mod cli;
pub mod families;
pub mod figures;
pub mod ode;
pub mod radius;
pub mod series;

pub use checker::{Certificate, CheckError, CheckStatus, SchwarzianSource, SigmaClass, Valence, Witness};
pub use families::{Candidate, CriticalConstants, FamilyError, RegionQuery, RegionVerdict, Variant};
pub use ode::{DivergenceReport, DivergenceVerdict, OdeError, OdeSolution};
pub use radius::{CertifyOutcome, RadiusError, RadiusEstimate, RadiusTarget};
pub use series::{Parity, SeriesError, TaylorSeries};
