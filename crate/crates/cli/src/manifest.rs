//! Run metadata emitted with every JSON payload.

use serde::Serialize;

/// Everything needed to reproduce a run: command, resolved configuration,
/// versions, generator, and seed. `duration_seconds` is the only field that
/// varies between identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub rng_algorithm: String,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
    pub duration_seconds: f64,
    pub config: serde_json::Value,
}

impl RunManifest {
    pub fn new(command: &str, seed: Option<u64>, threads: Option<usize>) -> Self {
        Self {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            rng_algorithm: hyperslice::RNG_ALGORITHM.to_string(),
            seed,
            threads,
            duration_seconds: 0.0,
            config: serde_json::Value::Null,
        }
    }
}
