//! Shared flag parsing: dimension lists, seed ranges, tolerance overrides,
//! and the worker cap.

use std::ops::Range;

/// Tolerances recognized by `--tol name=value`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Grace on inequality slack (violation below `-slack`).
    pub slack: f64,
    /// Relative bound for identity-residual rows.
    pub identity: f64,
    /// Saturation flag tolerance passed to the relation evaluators.
    pub saturation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            slack: 1e-9,
            identity: 1e-9,
            saturation: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn apply_overrides(&mut self, overrides: &[String]) -> Result<(), String> {
        for entry in overrides {
            let (name, value) = entry
                .split_once('=')
                .ok_or_else(|| format!("--tol expects name=value, got `{entry}`"))?;
            let value: f64 = value
                .parse()
                .map_err(|_| format!("--tol {name}: `{value}` is not a number"))?;
            if !(value.is_finite() && value > 0.0) {
                return Err(format!("--tol {name}: value must be positive and finite"));
            }
            match name {
                "slack" => self.slack = value,
                "identity" => self.identity = value,
                "saturation" => self.saturation = value,
                other => {
                    return Err(format!(
                        "unknown tolerance `{other}` (known: slack, identity, saturation)"
                    ))
                }
            }
        }
        Ok(())
    }
}

/// Comma-separated dimensions, each at least 2.
pub fn parse_dims(text: &str) -> Result<Vec<usize>, String> {
    let mut dims = Vec::new();
    for part in text.split(',') {
        let dim: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("invalid dimension `{part}`"))?;
        if dim < 2 {
            return Err(format!("dimension {dim} below the minimum of 2"));
        }
        dims.push(dim);
    }
    if dims.is_empty() {
        return Err("empty dimension list".into());
    }
    Ok(dims)
}

/// Half-open seed range `a..b`.
pub fn parse_seed_range(text: &str) -> Result<Range<u64>, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("seed range must look like a..b, got `{text}`"))?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("invalid seed `{lo}`"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("invalid seed `{hi}`"))?;
    if lo >= hi {
        return Err(format!("seed range {lo}..{hi} is empty"));
    }
    Ok(lo..hi)
}

/// Inclusive environment-dimension range `a..b` (also accepts a single value).
pub fn parse_sweep_range(text: &str) -> Result<(usize, usize), String> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| format!("invalid bound `{lo}`"))?;
        let hi: usize = hi.trim().parse().map_err(|_| format!("invalid bound `{hi}`"))?;
        if lo > hi {
            return Err(format!("range {lo}..{hi} is empty"));
        }
        Ok((lo, hi))
    } else {
        let v: usize = text.trim().parse().map_err(|_| format!("invalid value `{text}`"))?;
        Ok((v, v))
    }
}

/// Worker count: `UNCERTAINTY_KIT_THREADS` caps the available parallelism.
pub fn worker_count(jobs: usize) -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let cap = std::env::var("UNCERTAINTY_KIT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(available);
    cap.min(available).min(jobs.max(1))
}
