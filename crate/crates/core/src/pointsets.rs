//! Point-set generation and ingestion.
//!
//! The sampler produces general-position integer point sets, deterministic
//! per seed, either with a forced triangular hull or unconstrained. Binary
//! order-type database files (user-supplied, never bundled) can be decoded
//! record by record for exhaustive checks.

use crate::geom::{self, Point, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PointSetError {
    #[error("invalid sampler config: {0}")]
    BadConfig(String),
    #[error("extent {extent} too small to host {n} points in general position")]
    ExtentTooSmall { n: usize, extent: i64 },
    #[error("order-type file is empty")]
    EmptyFile,
    #[error("order-type file size {size} is not a multiple of the {record}-byte record")]
    SizeMismatch { size: usize, record: usize },
    #[error("order-type record {index} violates general position")]
    BadRecord { index: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Geom(#[from] geom::GeomError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SamplerMode {
    /// Corners (0,0), (M,0), (0,M) are included; all other points lie
    /// strictly inside that triangle.
    TriangularHull,
    /// Points anywhere in [0, M]^2.
    Unconstrained,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub n: usize,
    pub extent: i64,
    pub seed: u64,
    pub mode: SamplerMode,
}

/// Attempts per point before giving up on the extent.
const MAX_REJECTS: usize = 2000;

/// Stable per-trial seed derivation (splitmix64 over seed and index), so
/// trials are order-independent and shardable.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draw a general-position point set, deterministic per config.
///
/// Points that would create a collinear triple are rejected and resampled;
/// exhausting the attempt budget reports the extent as too small.
pub fn sample(config: &SamplerConfig) -> Result<PointSet, PointSetError> {
    if config.n < 3 {
        return Err(PointSetError::BadConfig(format!(
            "need at least 3 points, got {}",
            config.n
        )));
    }
    if config.extent < 8 || config.extent > geom::COORD_BOUND {
        return Err(PointSetError::BadConfig(format!(
            "extent must be in [8, 2^30], got {}",
            config.extent
        )));
    }
    let m = config.extent;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut points: Vec<Point> = Vec::with_capacity(config.n);
    if config.mode == SamplerMode::TriangularHull {
        points.push(Point::new(0, 0).unwrap());
        points.push(Point::new(m, 0).unwrap());
        points.push(Point::new(0, m).unwrap());
    }
    while points.len() < config.n {
        let mut placed = false;
        for _ in 0..MAX_REJECTS {
            let cand = match config.mode {
                SamplerMode::TriangularHull => {
                    let x = rng.gen_range(1..=m - 2);
                    let y = rng.gen_range(1..=m - 1 - x);
                    Point::new(x, y).unwrap()
                }
                SamplerMode::Unconstrained => {
                    let x = rng.gen_range(0..=m);
                    let y = rng.gen_range(0..=m);
                    Point::new(x, y).unwrap()
                }
            };
            if points.contains(&cand) {
                continue;
            }
            let collinear = points.iter().enumerate().any(|(i, &p)| {
                points[i + 1..]
                    .iter()
                    .any(|&q| geom::orient(p, q, cand).is_zero())
            });
            if collinear {
                continue;
            }
            points.push(cand);
            placed = true;
            break;
        }
        if !placed {
            return Err(PointSetError::ExtentTooSmall {
                n: config.n,
                extent: m,
            });
        }
    }
    Ok(PointSet::new_general_position(points).expect("sampler maintains general position"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordWidth {
    W8,
    W16,
}

impl CoordWidth {
    fn bytes(self) -> usize {
        match self {
            CoordWidth::W8 => 1,
            CoordWidth::W16 => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endianness {
    Little,
    Big,
}

/// A decoded order-type database file: fixed-size records of `n` points,
/// x before y, unsigned coordinates of the configured width.
pub struct OrderTypeFile {
    data: Vec<u8>,
    n: usize,
    width: CoordWidth,
    endian: Endianness,
}

impl OrderTypeFile {
    pub fn record_count(&self) -> usize {
        self.data.len() / self.record_size()
    }

    fn record_size(&self) -> usize {
        self.n * 2 * self.width.bytes()
    }

    /// Records in file order, each validated for general position; a
    /// violating record is reported with its index rather than skipped.
    pub fn iter(&self) -> impl Iterator<Item = Result<PointSet, PointSetError>> + '_ {
        let rec = self.record_size();
        (0..self.record_count()).map(move |idx| {
            let chunk = &self.data[idx * rec..(idx + 1) * rec];
            let mut points = Vec::with_capacity(self.n);
            let step = self.width.bytes();
            for i in 0..self.n {
                let off = i * 2 * step;
                let x = self.decode(&chunk[off..off + step]);
                let y = self.decode(&chunk[off + step..off + 2 * step]);
                points.push(Point::new(x, y).expect("16-bit coords are within bound"));
            }
            PointSet::new_general_position(points)
                .map_err(|_| PointSetError::BadRecord { index: idx })
        })
    }

    fn decode(&self, bytes: &[u8]) -> i64 {
        match (self.width, self.endian) {
            (CoordWidth::W8, _) => bytes[0] as i64,
            (CoordWidth::W16, Endianness::Little) => {
                u16::from_le_bytes([bytes[0], bytes[1]]) as i64
            }
            (CoordWidth::W16, Endianness::Big) => u16::from_be_bytes([bytes[0], bytes[1]]) as i64,
        }
    }
}

/// Open an order-type database file of `n`-point records.
pub fn load_order_types(
    path: &Path,
    n: usize,
    width: CoordWidth,
    endian: Endianness,
) -> Result<OrderTypeFile, PointSetError> {
    let data = std::fs::read(path)?;
    if data.is_empty() {
        return Err(PointSetError::EmptyFile);
    }
    let record = n * 2 * width.bytes();
    if data.len() % record != 0 {
        return Err(PointSetError::SizeMismatch {
            size: data.len(),
            record,
        });
    }
    Ok(OrderTypeFile {
        data,
        n,
        width,
        endian,
    })
}

#[derive(Serialize, Deserialize)]
struct PointsJson {
    points: Vec<(i64, i64)>,
}

/// Serialize a point set as `{"points": [[x,y],...]}`.
pub fn points_to_json(set: &PointSet) -> String {
    let file = PointsJson {
        points: set.points().iter().map(|p| (p.x(), p.y())).collect(),
    };
    serde_json::to_string(&file).expect("serializable")
}

/// Parse `{"points": [[x,y],...]}` and validate general position.
pub fn points_from_json(text: &str) -> Result<PointSet, PointSetError> {
    let file: PointsJson = serde_json::from_str(text)?;
    let mut points = Vec::with_capacity(file.points.len());
    for (x, y) in file.points {
        points.push(Point::new(x, y)?);
    }
    Ok(PointSet::new_general_position(points)?)
}
