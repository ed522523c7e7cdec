use serde::{Deserialize, Serialize};

use crate::error::{DynamicsError, Result};
use crate::trajectory::Trajectory;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GrowthTag {
    Bounded,
    Exponential,
    QuadraticExponential,
    DoublyExponential,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthConfig {
    /// Fraction of the series, counted from the end, used for the fits.
    pub window_fraction: f64,
    /// Relative standard deviation below which a statistic counts as stable.
    pub sd_threshold: f64,
    /// Log-space tolerance for a state revisit.
    pub revisit_tol: f64,
    pub min_len: usize,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig { window_fraction: 0.5, sd_threshold: 0.02, revisit_tol: 1e-6, min_len: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// First and last time of the fit window.
    pub window: (i64, i64),
    /// Relative sd of `L/t`, `L/t²` and `log L/t` over the window, `L = log f`.
    pub rel_sd: [f64; 3],
    /// RMS residual of the regression behind `rate`.
    pub residual: f64,
    /// `(earlier, later)` times of a detected state revisit.
    pub revisit: Option<(i64, i64)>,
    pub config: GrowthConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthVerdict {
    pub tag: GrowthTag,
    /// Per-step constant: slope of `L`, leading coefficient of `L` in `t²`, or slope of `log L`.
    pub rate: f64,
    pub diagnostics: Diagnostics,
}

fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / n;
    (m, var.sqrt())
}

fn rel_sd(xs: &[f64]) -> f64 {
    let (m, sd) = mean_sd(xs);
    if xs.iter().any(|x| !x.is_finite()) || m == 0.0 {
        f64::INFINITY
    } else {
        sd / m.abs()
    }
}

/// Least squares polynomial fit of the given degree; returns coefficients (constant first) and RMS residual.
fn polyfit(ts: &[f64], ys: &[f64], degree: usize) -> (Vec<f64>, f64) {
    let k = degree + 1;
    let scale = ts.iter().fold(1.0f64, |a, t| a.max(t.abs()));
    let mut ata = vec![vec![0.0; k]; k];
    let mut aty = vec![0.0; k];
    for (&t, &y) in ts.iter().zip(ys) {
        let s = t / scale;
        let pw: Vec<f64> = (0..k).map(|i| s.powi(i as i32)).collect();
        for i in 0..k {
            aty[i] += pw[i] * y;
            for j in 0..k {
                ata[i][j] += pw[i] * pw[j];
            }
        }
    }
    for c in 0..k {
        let p = (c..k).max_by(|&a, &b| ata[a][c].abs().total_cmp(&ata[b][c].abs())).expect("nonempty");
        ata.swap(c, p);
        aty.swap(c, p);
        for r in 0..k {
            if r != c {
                let f = ata[r][c] / ata[c][c];
                for j in c..k {
                    ata[r][j] -= f * ata[c][j];
                }
                aty[r] -= f * aty[c];
            }
        }
    }
    let coef: Vec<f64> = (0..k).map(|i| aty[i] / ata[i][i] / scale.powi(i as i32)).collect();
    let rss: f64 = ts
        .iter()
        .zip(ys)
        .map(|(&t, &y)| (y - coef.iter().enumerate().map(|(i, c)| c * t.powi(i as i32)).sum::<f64>()).powi(2))
        .sum();
    (coef, (rss / ts.len() as f64).sqrt())
}

/// First `(s, t)`, `s < t` of equal parity, whose states agree to `tol` in every entry.
pub fn find_revisit(series: &Trajectory<f64>, tol: f64) -> Option<(i64, i64)> {
    let states: Vec<Vec<f64>> = (1..=series.last()).filter_map(|t| series.state(t).ok().map(|s| s.values)).collect();
    for (j, b) in states.iter().enumerate() {
        for (i, a) in states[..j].iter().enumerate() {
            if (j - i) % 2 == 0 && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * x.abs().max(1.0)) {
                return Some((i as i64 + 1, j as i64 + 1));
            }
        }
    }
    None
}

/// Classifies a series of log-values `log T_v(t)`, using `L(t) = max_v log T_v` over each state.
pub fn growth_classify(series: &Trajectory<f64>) -> Result<GrowthVerdict> {
    growth_classify_with(series, &GrowthConfig::default())
}

pub fn growth_classify_with(series: &Trajectory<f64>, cfg: &GrowthConfig) -> Result<GrowthVerdict> {
    if series.len() < cfg.min_len {
        return Err(DynamicsError::ShortSeries(series.len(), cfg.min_len));
    }
    let last = series.last();
    let start = ((last as f64) * (1.0 - cfg.window_fraction)).floor().max(1.0) as i64;
    let window = (start, last);
    if let Some(revisit) = find_revisit(series, cfg.revisit_tol) {
        let diagnostics = Diagnostics { window, rel_sd: [f64::NAN; 3], residual: 0.0, revisit: Some(revisit), config: *cfg };
        return Ok(GrowthVerdict { tag: GrowthTag::Bounded, rate: 0.0, diagnostics });
    }
    let mut ts = Vec::new();
    let mut ls = Vec::new();
    for t in start..=last {
        let s = series.state(t)?;
        ts.push(t as f64);
        ls.push(s.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
    }
    let s1: Vec<f64> = ts.iter().zip(&ls).map(|(t, l)| l / t).collect();
    let s2: Vec<f64> = ts.iter().zip(&ls).map(|(t, l)| l / (t * t)).collect();
    let s3: Vec<f64> = ts.iter().zip(&ls).map(|(t, l)| if *l > 0.0 { l.ln() / t } else { f64::NAN }).collect();
    let sds = [rel_sd(&s1), rel_sd(&s2), rel_sd(&s3)];
    let stable: Vec<usize> = (0..3).filter(|&i| sds[i] < cfg.sd_threshold).collect();
    if stable.len() != 1 {
        return Err(DynamicsError::Inconclusive(sds));
    }
    let (tag, rate, residual) = match stable[0] {
        0 => {
            let (c, r) = polyfit(&ts, &ls, 1);
            (GrowthTag::Exponential, c[1], r)
        }
        1 => {
            let (c, r) = polyfit(&ts, &ls, 2);
            (GrowthTag::QuadraticExponential, c[2], r)
        }
        _ => {
            let lls: Vec<f64> = ls.iter().map(|l| l.ln()).collect();
            let (c, r) = polyfit(&ts, &lls, 1);
            (GrowthTag::DoublyExponential, c[1], r)
        }
    };
    if rate <= 0.0 {
        return Err(DynamicsError::Inconclusive(sds));
    }
    Ok(GrowthVerdict { tag, rate, diagnostics: Diagnostics { window, rel_sd: sds, residual, revisit: None, config: *cfg } })
}

/// Turns a positive-valued series (for instance a tropical one) into log-values.
pub fn log_series(series: &Trajectory<f64>) -> Trajectory<f64> {
    series.map(|x| x.ln())
}
