//! Command-line surface. One thin binary dispatches to the library:
//! `check`, `region`, `radius`, `zeros`, `tau`, `series`, `constants` and
//! `figures`.
//!
//! Exit codes: 0 verified/success, 1 refuted/failure, 2 indeterminate,
//! 64 usage error. Output for a fixed invocation is byte-identical across
//! runs. `SCHWARZ_GRID` overrides the default sweep resolution.

use crate::checker::{self, CheckStatus};
use crate::families::{self, Candidate, RegionQuery, RegionVerdict, Variant};
use crate::ode;
use crate::radius::{self, RadiusTarget};
use crate::series;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "univalence",
    about = "Verification toolkit for Schwarzian-derivative univalence criteria",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run the comparison-function and self-majorance certificates
    Check(CheckArgs),
    /// Test parameter-region membership for a theorem
    Region(RegionArgs),
    /// Certify or maximize a radius of univalence
    Radius(RadiusArgs),
    /// Count zeros of the even solution of u'' + pu = 0
    Zeros(ZerosArgs),
    /// Endpoint limit tau and valence classification
    Tau(TauArgs),
    /// Emit special series or a family's coefficient series as JSON
    Series(SeriesArgs),
    /// Print the critical constants
    Constants(ConstantsArgs),
    /// Write figure CSV data
    Figures(FiguresArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// Family id: thm1..thm5, hille, const_pi, two_over, nehari_mu1,
    /// nehari_mu2, beesack, chuaqui_sigma
    #[arg(long)]
    family: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
}

impl FamilyArgs {
    fn build(&self) -> Result<Candidate, String> {
        let need = |v: Option<f64>, flag: &str| {
            v.ok_or_else(|| format!("family {} requires --{}", self.family, flag))
        };
        Ok(match self.family.as_str() {
            "thm1" => Candidate::thm1(need(self.a, "a")?, need(self.lambda, "lambda")?),
            "thm2" => Candidate::thm2(need(self.lambda, "lambda")?, need(self.mu, "mu")?),
            "thm3" => Candidate::thm3(need(self.a, "a")?, need(self.b, "b")?),
            "thm4" => Candidate::thm4(need(self.lambda, "lambda")?),
            "thm5" => Candidate::thm5(need(self.lambda, "lambda")?),
            "hille" => Candidate::hille(need(self.gamma, "gamma")?),
            "const_pi" => Candidate::const_pi(self.delta.unwrap_or(0.0)),
            "two_over" => Candidate::TwoOver,
            "nehari_mu1" => Candidate::NehariMu1 { mu: need(self.mu, "mu")? },
            "nehari_mu2" => Candidate::NehariMu2 { mu: need(self.mu, "mu")? },
            "beesack" => Candidate::Beesack { lambda: need(self.lambda, "lambda")? },
            "chuaqui_sigma" => Candidate::ChuaquiSigma { lambda: need(self.lambda, "lambda")? },
            other => return Err(format!("unknown --family {}", other)),
        })
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Region variant to report alongside the certificates
    #[arg(long, default_value = "A")]
    variant: String,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long, default_value_t = checker::DEFAULT_EPS)]
    eps: f64,
    /// Series order for the self-majorance check
    #[arg(long, default_value_t = checker::DEFAULT_SM_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct RegionArgs {
    #[arg(long)]
    theorem: u8,
    #[arg(long, default_value = "A")]
    variant: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Debug)]
struct RadiusArgs {
    /// Target map (only errf is registered)
    #[arg(long, default_value = "errf")]
    target: String,
    #[command(flatten)]
    family: FamilyArgs,
    /// Certify this single radius instead of maximizing
    #[arg(long)]
    r: Option<f64>,
    /// Scan a lambda range `start:stop:step` (theorems 4 and 5)
    #[arg(long)]
    scan_lambda: Option<String>,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1e-6)]
    eps: f64,
    #[arg(long, default_value_t = 1e-11)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct TauArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Positive scale C in the classification of C*p
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// What to expand: tan-half, sec, or p (with family flags)
    #[arg(long)]
    what: String,
    #[arg(long, default_value_t = 64)]
    order: usize,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
}

#[derive(Args, Debug)]
struct ConstantsArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Debug)]
struct FiguresArgs {
    /// Figure number 1..=5
    #[arg(long)]
    which: u8,
    /// Output directory
    #[arg(long, default_value = ".")]
    out: String,
}

fn default_grid(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("SCHWARZ_GRID").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(checker::DEFAULT_GRID)
}

fn parse_variant(v: &str) -> Result<Variant, String> {
    match v {
        "A" | "a" => Ok(Variant::A),
        "B" | "b" => Ok(Variant::B),
        other => Err(format!("unknown --variant {} (expected A or B)", other)),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (code, out) = execute(args);
    if !out.is_empty() {
        println!("{}", out.trim_end());
    }
    code
}

/// Runs a command and returns `(exit code, stdout payload)`. Separated from
/// [`run`] so tests can assert on byte-identical output.
pub fn execute<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own help/usage; anything else is usage error 64
            let rendered = e.to_string();
            if e.use_stderr() {
                return (EXIT_USAGE, rendered);
            }
            return (EXIT_VERIFIED, rendered);
        }
    };
    match dispatch(cli) {
        Ok(pair) => pair,
        Err(msg) => (EXIT_USAGE, format!("usage error: {}", msg)),
    }
}

fn dispatch(cli: Cli) -> Result<(i32, String), String> {
    match cli.cmd {
        Cmd::Check(args) => cmd_check(args),
        Cmd::Region(args) => cmd_region(args),
        Cmd::Radius(args) => cmd_radius(args),
        Cmd::Zeros(args) => cmd_zeros(args),
        Cmd::Tau(args) => cmd_tau(args),
        Cmd::Series(args) => cmd_series(args),
        Cmd::Constants(args) => Ok(cmd_constants(args)),
        Cmd::Figures(args) => cmd_figures(args),
    }
}

fn worst_status(certs: &[&checker::Certificate]) -> i32 {
    if certs.iter().any(|c| c.status == CheckStatus::Refuted) {
        EXIT_REFUTED
    } else if certs.iter().any(|c| c.status == CheckStatus::Indeterminate) {
        EXIT_INDETERMINATE
    } else {
        EXIT_VERIFIED
    }
}

fn region_query_for(c: &Candidate, variant: Variant) -> Option<RegionQuery> {
    let (theorem, params) = match *c {
        Candidate::Thm1 { a, lambda } => (1, vec![a, lambda]),
        Candidate::Thm2 { lambda, mu } => (2, vec![lambda, mu]),
        Candidate::Thm3 { a, b } => (3, vec![a, b]),
        Candidate::Thm4 { lambda } => (4, vec![lambda]),
        Candidate::Thm5 { lambda } => (5, vec![lambda]),
        _ => return None,
    };
    Some(RegionQuery { theorem, variant, params })
}

fn cmd_check(args: CheckArgs) -> Result<(i32, String), String> {
    let candidate = args.family.build()?;
    let variant = parse_variant(&args.variant)?;
    let grid = default_grid(args.grid);
    let nehari =
        checker::check_nehari(&candidate, grid, args.eps).map_err(|e| e.to_string())?;
    let sm = checker::check_self_majorant(&candidate, args.order, 64)
        .map_err(|e| e.to_string())?;
    let region = region_query_for(&candidate, variant)
        .map(|q| families::region_contains(&q).map_err(|e| e.to_string()))
        .transpose()?;
    let code = worst_status(&[&nehari, &sm]);
    let out = match args.format {
        Format::Json => {
            let region_json = match &region {
                Some(v) => serde_json::to_string(v).expect("serializable"),
                None => "null".into(),
            };
            format!(
                "{{\"candidate\":\"{}\",\"region\":{},\"certificates\":[{},{}]}}",
                candidate.name(),
                region_json,
                nehari.to_json(),
                sm.to_json()
            )
        }
        Format::Human => {
            let mut s = format!("candidate: {}\n", candidate.name());
            if let Some(v) = &region {
                match v {
                    RegionVerdict::Inside => s.push_str("region: inside\n"),
                    RegionVerdict::Outside { violated, residual } => s.push_str(&format!(
                        "region: outside (violates {}, residual {:.3e})\n",
                        violated, residual
                    )),
                }
            }
            s.push_str(&format!(
                "comparison-function check: {:?}\nself-majorance check: {:?}",
                nehari.status, sm.status
            ));
            s
        }
        Format::Csv => {
            let mut s = String::from("check_id,status\n");
            for c in [&nehari, &sm] {
                s.push_str(&format!("{},{:?}\n", c.check_id, c.status));
            }
            s
        }
    };
    Ok((code, out))
}

fn cmd_region(args: RegionArgs) -> Result<(i32, String), String> {
    let variant = parse_variant(&args.variant)?;
    let params = match args.theorem {
        1 => vec![
            args.a.ok_or("theorem 1 requires --a")?,
            args.lambda.ok_or("theorem 1 requires --lambda")?,
        ],
        2 => vec![
            args.lambda.ok_or("theorem 2 requires --lambda")?,
            args.mu.ok_or("theorem 2 requires --mu")?,
        ],
        3 => vec![
            args.a.ok_or("theorem 3 requires --a")?,
            args.b.ok_or("theorem 3 requires --b")?,
        ],
        4 => vec![args.lambda.ok_or("theorem 4 requires --lambda")?],
        5 => vec![args.lambda.ok_or("theorem 5 requires --lambda")?],
        t => return Err(format!("unknown --theorem {}", t)),
    };
    let q = RegionQuery { theorem: args.theorem, variant, params };
    let verdict = families::region_contains(&q).map_err(|e| e.to_string())?;
    let code = if verdict.is_inside() { EXIT_VERIFIED } else { EXIT_REFUTED };
    let out = match args.format {
        Format::Json => serde_json::to_string(&verdict).expect("serializable"),
        Format::Human | Format::Csv => match &verdict {
            RegionVerdict::Inside => "inside".to_string(),
            RegionVerdict::Outside { violated, residual } => {
                format!("outside: violates {} (residual {:.6e})", violated, residual)
            }
        },
    };
    Ok((code, out))
}

fn parse_scan(text: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("--scan-lambda expects start:stop:step, got {}", text));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse().map_err(|_| format!("bad number in --scan-lambda: {}", p)))
        .collect::<Result<_, _>>()?;
    Ok((nums[0], nums[1], nums[2]))
}

fn cmd_radius(args: RadiusArgs) -> Result<(i32, String), String> {
    if args.target != "errf" {
        return Err(format!("unknown --target {} (only errf is registered)", args.target));
    }
    let grid = default_grid(args.grid).max(4096);
    if let Some(r) = args.r {
        let candidate = args.family.build()?;
        return match radius::certify(r, &candidate, grid) {
            Ok(outcome) => {
                let code = if outcome.is_certified() { EXIT_VERIFIED } else { EXIT_REFUTED };
                let out = match args.format {
                    Format::Json => serde_json::to_string(&outcome).expect("serializable"),
                    Format::Csv => margin_csv(r, &candidate)?,
                    Format::Human => format!("{:?}", outcome),
                };
                Ok((code, out))
            }
            Err(e) => Ok((EXIT_REFUTED, format!("not certified: {}", e))),
        };
    }
    let candidates = match (&args.scan_lambda, args.family.family.as_str()) {
        (Some(text), "thm4") => {
            let (start, stop, step) = parse_scan(text)?;
            radius::lambda_scan(4, start, stop, step)
        }
        (Some(text), "thm5") => {
            let (start, stop, step) = parse_scan(text)?;
            radius::lambda_scan(5, start, stop, step)
        }
        (Some(_), other) => {
            return Err(format!("--scan-lambda applies to thm4/thm5, not {}", other))
        }
        (None, _) => vec![args.family.build()?],
    };
    match radius::maximize_radius(RadiusTarget::Errf, &candidates, grid) {
        Ok(est) => {
            let out = match args.format {
                Format::Json => est.to_json(),
                Format::Csv => margin_csv(est.r_lower, &est.family)?,
                Format::Human => format!(
                    "r_lower = {:.4} with {} (margin {:.6} at x = {:.4})",
                    est.r_lower,
                    est.family.name(),
                    est.margin,
                    est.margin_argmin
                ),
            };
            Ok((EXIT_VERIFIED, out))
        }
        Err(e) => Ok((EXIT_REFUTED, format!("radius search failed: {}", e))),
    }
}

fn margin_csv(r: f64, candidate: &Candidate) -> Result<String, String> {
    let rows = radius::margin_profile(RadiusTarget::Errf, r, candidate, 513)
        .map_err(|e| e.to_string())?;
    let mut s = String::from("x,two_p,bound
");
    for (x, two_p, bound) in rows {
        s.push_str(&format!("{:.12},{:.12},{:.12}\n", x, two_p, bound));
    }
    Ok(s)
}

fn cmd_zeros(args: ZerosArgs) -> Result<(i32, String), String> {
    let candidate = args.family.build()?;
    match ode::solve_even(&candidate, args.eps, args.tol) {
        Ok(sol) => {
            let zeros = sol.zeros();
            let out = match args.format {
                Format::Json => format!(
                    "{{\"candidate\":\"{}\",\"eps\":{:e},\"count\":{},\"zeros\":{},\"wronskian_drift\":{:e}}}",
                    candidate.name(),
                    args.eps,
                    zeros.len(),
                    serde_json::to_string(zeros).expect("serializable"),
                    sol.wronskian_drift
                ),
                Format::Csv => {
                    let mut s = String::from("index,zero\n");
                    for (i, z) in zeros.iter().enumerate() {
                        s.push_str(&format!("{},{:.12}\n", i, z));
                    }
                    s
                }
                Format::Human => format!(
                    "{}: {} zero(s) on [0, 1-{:e}]{}",
                    candidate.name(),
                    zeros.len(),
                    args.eps,
                    if zeros.is_empty() {
                        String::new()
                    } else {
                        format!(" at {:?}", zeros)
                    }
                ),
            };
            Ok((EXIT_VERIFIED, out))
        }
        Err(e) => Ok((EXIT_REFUTED, format!("solve failed: {}", e))),
    }
}

fn cmd_tau(args: TauArgs) -> Result<(i32, String), String> {
    let candidate = args.family.build()?;
    let analytic = candidate.tau_analytic();
    let extrapolated = checker::tau_extrapolated(&candidate).ok();
    let tau = match checker::tau(&candidate) {
        Ok(t) => t,
        Err(e) => return Ok((EXIT_REFUTED, format!("tau failed: {}", e))),
    };
    let valence = checker::classify_valence(&candidate, args.scale)
        .map_err(|e| e.to_string())?;
    let out = match args.format {
        Format::Json => format!(
            "{{\"candidate\":\"{}\",\"tau\":{:.17e},\"analytic\":{},\"extrapolated\":{},\"scale\":{},\"valence\":{}}}",
            candidate.name(),
            tau,
            analytic.map_or("null".into(), |v| format!("{:.17e}", v)),
            extrapolated.map_or("null".into(), |v| format!("{:.17e}", v)),
            args.scale,
            serde_json::to_string(&valence).expect("serializable"),
        ),
        _ => format!(
            "{}: tau = {:.12}  (scale {} -> {:?})",
            candidate.name(),
            tau,
            args.scale,
            valence
        ),
    };
    Ok((EXIT_VERIFIED, out))
}

fn cmd_series(args: SeriesArgs) -> Result<(i32, String), String> {
    let s = match args.what.as_str() {
        "tan-half" => series::tan_half_series(args.order).map_err(|e| e.to_string())?,
        "sec" => series::sec_series(args.order),
        "p" => {
            let fam = FamilyArgs {
                family: args.family.clone().ok_or("series --what p requires --family")?,
                a: args.a,
                b: args.b,
                lambda: args.lambda,
                mu: args.mu,
                gamma: args.gamma,
                delta: args.delta,
            };
            fam.build()?.p_series(args.order).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown --what {} (tan-half, sec, p)", other)),
    };
    Ok((EXIT_VERIFIED, s.to_json()))
}

fn cmd_constants(args: ConstantsArgs) -> (i32, String) {
    let c = families::CriticalConstants::compute();
    let out = match args.format {
        Format::Json => serde_json::to_string(&c).expect("serializable"),
        Format::Csv => {
            let mut s = String::from("name,value\n");
            for (name, v) in c.table() {
                s.push_str(&format!("{},{:.12}\n", name, v));
            }
            s
        }
        Format::Human => {
            let mut s = String::new();
            for (name, v) in c.table() {
                s.push_str(&format!("{:<16} {:.12}\n", name, v));
            }
            s.trim_end().to_string()
        }
    };
    (EXIT_VERIFIED, out)
}

fn cmd_figures(args: FiguresArgs) -> Result<(i32, String), String> {
    match crate::figures::emit_figure(args.which, std::path::Path::new(&args.out)) {
        Ok(path) => Ok((EXIT_VERIFIED, format!("wrote {}", path.display()))),
        Err(e) => Ok((EXIT_REFUTED, format!("figure emission failed: {}", e))),
    }
}
