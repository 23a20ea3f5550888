//! CSV emitters for the parameter-region boundary plots (figures 1–4) and
//! the radius-of-univalence tangency plot (figure 5).
//!
//! Plain comma-delimited text with a header row and `.` decimal separator;
//! enough columns to re-plot each figure.

use crate::families::{self, Candidate};
use crate::radius::RadiusTarget;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub enum FigureError {
    UnknownFigure(u8),
    Io(std::io::Error),
}

impl fmt::Display for FigureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FigureError::UnknownFigure(n) => write!(f, "unknown figure {}", n),
            FigureError::Io(e) => write!(f, "io failure: {}", e),
        }
    }
}

impl std::error::Error for FigureError {}

impl From<std::io::Error> for FigureError {
    fn from(e: std::io::Error) -> Self {
        FigureError::Io(e)
    }
}

const SAMPLES: usize = 257;

fn region_rows(curves: &[(&str, &dyn Fn(f64) -> f64)]) -> String {
    let mut out = String::from("param1,param2,bound_id,value\n");
    for i in 0..SAMPLES {
        let a = 0.5 + 0.5 * i as f64 / (SAMPLES - 1) as f64;
        for (id, f) in curves {
            let v = f(a);
            out.push_str(&format!("{:.12},{:.12},{},{:.12}\n", a, v, id, v));
        }
    }
    out
}

/// CSV content for one figure.
pub fn figure_csv(which: u8) -> Result<String, FigureError> {
    match which {
        1 => Ok(region_rows(&[
            ("lambda_lower:(1-2a)/4", &families::thm1_lower),
            ("lambda_upper:((1+2a)-sqrt(1+6a))/2", &families::thm1_upper),
        ])),
        2 => Ok(region_rows(&[
            ("lambda_lower:(1-2a)/4", &families::thm1_lower),
            ("lambda_lower_sm:a-sqrt(6a)/2", &families::thm1_lower_sm),
            ("lambda_upper:((1+2a)-sqrt(1+6a))/2", &families::thm1_upper),
        ])),
        3 => Ok(region_rows(&[
            ("b_lower:(-(5+4a)+sqrt(25+48a))/4", &families::thm3_lower),
            ("b_upper:a-1/2", &|a: f64| a - 0.5),
        ])),
        4 => Ok(region_rows(&[
            ("b_lower:(-(5+4a)+sqrt(25+48a))/4", &families::thm3_lower),
            ("b_lower:a-1", &|a: f64| a - 1.0),
            ("b_upper:a-1/2", &|a: f64| a - 0.5),
            ("b_upper:S(a)", &families::thm3_s),
            ("b_upper:T(a)", &families::thm3_t),
        ])),
        5 => {
            let r = 1.365;
            let c = Candidate::thm5(0.2);
            let mut out = String::from("x,schwarzian_majorant_half,p\n");
            let n = 512;
            for i in 0..n {
                let x = 0.999 * i as f64 / (n - 1) as f64;
                let half_bound = RadiusTarget::Errf.bound(r, x) / 2.0; // r² + r⁴x²
                let p = c.p(x).expect("thm5 finite below 1");
                out.push_str(&format!("{:.12},{:.12},{:.12}\n", x, half_bound, p));
            }
            Ok(out)
        }
        n => Err(FigureError::UnknownFigure(n)),
    }
}

/// Writes `figure<n>.csv` into `out_dir`, returning the path.
pub fn emit_figure(which: u8, out_dir: &Path) -> Result<PathBuf, FigureError> {
    let content = figure_csv(which)?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join(format!("figure{}.csv", which));
    let mut f = std::fs::File::create(&path)?;
    f.write_all(content.as_bytes())?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_figures_emit() {
        for which in 1..=5u8 {
            let csv = figure_csv(which).unwrap();
            let mut lines = csv.lines();
            let header = lines.next().unwrap();
            assert!(header.contains(','));
            assert!(lines.count() > 100);
        }
        assert!(matches!(figure_csv(6), Err(FigureError::UnknownFigure(6))));
    }

    #[test]
    fn figure2_crossover_at_the_critical_abscissa() {
        // the two lower bounds swap winners at a = 1/2 + sqrt(2)/3
        let cross = families::CriticalConstants::compute().thm1_crossover;
        let below = families::thm1_lower(cross - 0.01) - families::thm1_lower_sm(cross - 0.01);
        let above = families::thm1_lower(cross + 0.01) - families::thm1_lower_sm(cross + 0.01);
        assert!(below > 0.0 && above < 0.0);
    }

    #[test]
    fn figure5_curves_keep_the_certified_gap() {
        let csv = figure_csv(5).unwrap();
        for line in csv.lines().skip(1) {
            let cols: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
            assert!(cols[2] >= cols[1], "p(x) dips below the majorant at x = {}", cols[0]);
        }
    }
}
