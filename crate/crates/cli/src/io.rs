//! Plain-text orientation and body files.
//!
//! Orientation file: one vector per line, whitespace-separated decimals.
//! Body file: first line n, then n generator rows, then the base row.
//! Blank lines and lines starting with `#` are ignored in both formats.

use std::path::Path;

use hyperslice::{Body, Error, FlatOrientation, Result, SeededRng, Vector, VectorList};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_row(line: &str, what: &str) -> Result<Vector> {
    let coords: std::result::Result<Vec<f64>, _> =
        line.split_whitespace().map(str::parse::<f64>).collect();
    match coords {
        Ok(c) if !c.is_empty() => Vector::new(c),
        _ => Err(Error::InvalidInput(format!(
            "could not parse {what} row: {line:?}"
        ))),
    }
}

pub fn read_orientation_file(path: &Path) -> Result<FlatOrientation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let vectors: Result<Vec<Vector>> = content_lines(&text)
        .map(|l| parse_row(l, "orientation"))
        .collect();
    let vectors = vectors?;
    if vectors.is_empty() {
        return Err(Error::InvalidInput(format!(
            "orientation file {} contains no vectors",
            path.display()
        )));
    }
    FlatOrientation::new(VectorList::from_vectors(vectors)?)
}

pub fn read_body_file(path: &Path) -> Result<Body> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = content_lines(&text);
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("body file is empty".into()))?
        .parse()
        .map_err(|_| Error::InvalidInput("body file must start with the dimension n".into()))?;
    let mut rows: Vec<Vector> = lines.map(|l| parse_row(l, "body")).collect::<Result<_>>()?;
    if rows.len() != n + 1 {
        return Err(Error::InvalidInput(format!(
            "body file needs {} generator rows plus a base row, found {} rows",
            n,
            rows.len()
        )));
    }
    let base = rows.pop().expect("length checked");
    Body::parallelotope(base, VectorList::new(n, rows)?)
}

/// How an orientation was requested on the command line.
#[derive(Debug, Clone)]
pub enum OrientationSource {
    Axis,
    Random { seed: u64 },
    File(std::path::PathBuf),
}

impl OrientationSource {
    pub fn parse(text: &str) -> Result<Self> {
        if text == "axis" {
            return Ok(Self::Axis);
        }
        if let Some(seed_text) = text.strip_prefix("random:") {
            let seed = seed_text.parse().map_err(|_| {
                Error::InvalidInput(format!("bad seed in orientation source {text:?}"))
            })?;
            return Ok(Self::Random { seed });
        }
        Ok(Self::File(std::path::PathBuf::from(text)))
    }

    /// The seed this source carries, if any.
    pub fn seed(&self) -> Option<u64> {
        match self {
            Self::Random { seed } => Some(*seed),
            _ => None,
        }
    }

    pub fn resolve(&self, n: usize, k: usize) -> Result<FlatOrientation> {
        match self {
            Self::Axis => FlatOrientation::axis_aligned(n, k),
            Self::Random { seed } => {
                let mut rng = SeededRng::from_seed(*seed);
                hyperslice::sample_orientation(&mut rng, n, k)
            }
            Self::File(path) => {
                let orientation = read_orientation_file(path)?;
                if orientation.ambient_dim() != n || orientation.k() != k {
                    return Err(Error::InvalidInput(format!(
                        "orientation file {} holds {} vectors in R^{}, expected k={} in R^{}",
                        path.display(),
                        orientation.k(),
                        orientation.ambient_dim(),
                        k,
                        n
                    )));
                }
                Ok(orientation)
            }
        }
    }
}
