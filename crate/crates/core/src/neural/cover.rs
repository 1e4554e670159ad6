use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Domain {
    /// The rectangle `[0, w] × [0, h]`.
    Box { w: f64, h: f64 },
    /// The rectangle with opposite sides identified.
    Torus { w: f64, h: f64 },
}

impl Domain {
    fn size(&self) -> (f64, f64) {
        match *self {
            Domain::Box { w, h } | Domain::Torus { w, h } => (w, h),
        }
    }

    fn is_torus(&self) -> bool {
        matches!(self, Domain::Torus { .. })
    }
}

/// A convex place field. Membership is closed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Region {
    Disk { cx: f64, cy: f64, r: f64 },
    Box { x0: f64, y0: f64, x1: f64, y1: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub nx: usize,
    pub ny: usize,
}

/// Regions sampled at the cell centres of a uniform grid over the domain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledCover {
    pub domain: Domain,
    pub regions: Vec<Region>,
    pub grid: Grid,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Distance along one axis, wrapping on a circle of length `period` if given.
fn axis_gap(a: f64, b: f64, period: Option<f64>) -> f64 {
    let d = (a - b).abs();
    match period {
        Some(p) => {
            let d = d % p;
            d.min(p - d)
        }
        None => d,
    }
}

fn in_interval(x: f64, lo: f64, hi: f64, period: Option<f64>) -> bool {
    match period {
        Some(p) => [x - p, x, x + p].iter().any(|&y| lo <= y && y <= hi),
        None => lo <= x && x <= hi,
    }
}

impl SampledCover {
    pub fn from_json(text: &str) -> Result<Self> {
        let cover: Self = serde_json::from_str(text)?;
        cover.validate()?;
        Ok(cover)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("cover serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let (w, h) = self.domain.size();
        if !(w > 0.0 && h > 0.0) {
            return Err(Error::domain("domain sides must be positive"));
        }
        if self.grid.nx == 0 || self.grid.ny == 0 {
            return Err(Error::domain("the sampling grid must be nonempty"));
        }
        if self.regions.is_empty() {
            return Err(Error::domain("a cover needs at least one region"));
        }
        for (i, r) in self.regions.iter().enumerate() {
            let ok = match *r {
                Region::Disk { r, .. } => r > 0.0,
                Region::Box { x0, y0, x1, y1 } => x0 <= x1 && y0 <= y1,
            };
            if !ok {
                return Err(Error::domain(format!("region {} is degenerate", i + 1)));
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.regions.len()
    }

    /// Sample points in row-major order.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let (w, h) = self.domain.size();
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        let mut out = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                out.push(((i as f64 + 0.5) * w / nx as f64, (j as f64 + 0.5) * h / ny as f64));
            }
        }
        out
    }

    pub fn contains(&self, region: usize, (x, y): (f64, f64)) -> bool {
        let (w, h) = self.domain.size();
        let (px, py) = if self.domain.is_torus() {
            (Some(w), Some(h))
        } else {
            (None, None)
        };
        match self.regions[region] {
            Region::Disk { cx, cy, r } => {
                let dx = axis_gap(x, cx, px);
                let dy = axis_gap(y, cy, py);
                dx * dx + dy * dy <= r * r
            }
            Region::Box { x0, y0, x1, y1 } => in_interval(x, x0, x1, px) && in_interval(y, y0, y1, py),
        }
    }

    /// The regions containing a point, i.e. the word `{x}'`.
    pub fn word_at(&self, point: (f64, f64)) -> BitSet {
        (0..self.m()).filter(|&i| self.contains(i, point)).collect()
    }

    /// One word per sample point, in the order of [`points`](Self::points).
    pub fn membership(&self) -> Vec<BitSet> {
        self.points().into_iter().map(|p| self.word_at(p)).collect()
    }
}
