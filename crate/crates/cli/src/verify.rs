//! `verify` subcommand: sweep of the 2^k identity and the telescoping volume
//! check over dimension ranges and seeded random orientations.

use serde::Serialize;

use hyperslice::{
    chunk_seed, expected_vertices_exact, sample_orientation, telescoping_check, Body, Error,
    Result, SeededRng,
};

use crate::manifest::RunManifest;

/// Fixed relative tolerance for the telescoping identity.
pub const TELESCOPING_TOL: f64 = 1e-9;

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub max_deviation: f64,
    pub max_telescoping_relative_error: f64,
    pub pass: bool,
    /// Orientation attaining the largest deviation, for replay.
    pub worst_orientation: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub manifest: RunManifest,
    pub tolerance: f64,
    pub telescoping_tolerance: f64,
    pub rows: Vec<VerifyRow>,
    pub overall_pass: bool,
}

pub struct VerifyParams {
    pub n_values: Vec<usize>,
    pub k_policy: KPolicy,
    pub trials: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub body: Option<Body>,
}

#[derive(Debug, Clone)]
pub enum KPolicy {
    All,
    Values(Vec<usize>),
}

impl KPolicy {
    pub fn parse(text: &str) -> Result<Self> {
        if text == "all" {
            return Ok(Self::All);
        }
        Ok(Self::Values(parse_inclusive_range(text)?))
    }

    fn values_for(&self, n: usize) -> Vec<usize> {
        match self {
            Self::All => (1..=n).collect(),
            Self::Values(values) => values.iter().copied().filter(|&k| k >= 1 && k <= n).collect(),
        }
    }
}

/// Parses `a..b` (inclusive on both ends) or a single integer.
pub fn parse_inclusive_range(text: &str) -> Result<Vec<usize>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad range {text:?}")))?;
        let hi: usize = hi
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad range {text:?}")))?;
        if lo == 0 || hi < lo {
            return Err(Error::InvalidInput(format!(
                "range {text:?} must satisfy 1 <= a <= b"
            )));
        }
        return Ok((lo..=hi).collect());
    }
    let single: usize = text
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad range {text:?}")))?;
    if single == 0 {
        return Err(Error::InvalidInput("range values must be >= 1".into()));
    }
    Ok(vec![single])
}

pub fn run(params: &VerifyParams, manifest: RunManifest) -> Result<VerifyReport> {
    if let Some(body) = &params.body {
        if params.n_values.iter().any(|&n| n != body.n()) {
            return Err(Error::InvalidInput(format!(
                "body file is {}-dimensional; restrict --n to {}",
                body.n(),
                body.n()
            )));
        }
    }
    if params.trials == 0 {
        return Err(Error::InvalidInput("trial count must be >= 1".into()));
    }

    let mut rows = Vec::new();
    let mut overall_pass = true;
    for &n in &params.n_values {
        let body = match &params.body {
            Some(body) => body.clone(),
            None => Body::cube(n)?,
        };
        for k in params.k_policy.values_for(n) {
            // One deterministic stream per (n, k) cell.
            let mut rng = SeededRng::from_seed(chunk_seed(params.seed, (n * 64 + k) as u64));
            let theorem_value = (1u64 << k) as f64;
            let mut max_deviation = 0.0_f64;
            let mut max_telescoping = 0.0_f64;
            let mut worst_orientation: Vec<Vec<f64>> = Vec::new();
            for _ in 0..params.trials {
                let orientation = sample_orientation(&mut rng, n, k)?;
                let expectation = expected_vertices_exact(&body, &orientation)?;
                let deviation = (expectation - theorem_value).abs();
                let telescoping = telescoping_check(&body, &orientation)?.relative_error();
                if deviation >= max_deviation {
                    worst_orientation = orientation
                        .spans()
                        .iter()
                        .map(|v| v.coords().to_vec())
                        .collect();
                }
                max_deviation = max_deviation.max(deviation);
                max_telescoping = max_telescoping.max(telescoping);
            }
            let pass =
                max_deviation <= params.tolerance && max_telescoping <= TELESCOPING_TOL;
            overall_pass &= pass;
            eprintln!(
                "n={n:>2} k={k:>2} max_deviation={max_deviation:9.3e} \
                 max_telescoping={max_telescoping:9.3e} {}",
                if pass { "PASS" } else { "FAIL" }
            );
            rows.push(VerifyRow {
                n,
                k,
                trials: params.trials,
                max_deviation,
                max_telescoping_relative_error: max_telescoping,
                pass,
                worst_orientation,
            });
        }
    }
    Ok(VerifyReport {
        manifest,
        tolerance: params.tolerance,
        telescoping_tolerance: TELESCOPING_TOL,
        rows,
        overall_pass,
    })
}
