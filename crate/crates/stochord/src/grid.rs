//! Probability grids used by order checkers and hazard classification.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const DEFAULT_GRID_POINTS: usize = 512;
pub const DEFAULT_U_MIN: f64 = 1e-4;
pub const DEFAULT_U_MAX: f64 = 1.0 - 1e-4;

/// Strictly increasing probabilities in the open interval (0,1).
///
/// Checks map these through quantile functions to obtain working x-grids, so
/// the span covers both tails where ordering violations concentrate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbGrid {
    us: Vec<f64>,
}

impl ProbGrid {
    /// `n` evenly spaced points in [u_min, u_max] ⊂ (0,1).
    pub fn new(n: usize, u_min: f64, u_max: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points, got {n}"
            )));
        }
        if !(0.0 < u_min && u_min < u_max && u_max < 1.0) {
            return Err(Error::InvalidGrid(format!(
                "need 0 < u_min < u_max < 1, got [{u_min}, {u_max}]"
            )));
        }
        let step = (u_max - u_min) / (n - 1) as f64;
        let us = (0..n)
            .map(|i| {
                if i + 1 == n {
                    u_max
                } else {
                    u_min + step * i as f64
                }
            })
            .collect();
        Ok(Self { us })
    }

    /// Grid from explicit points; must be strictly increasing inside (0,1).
    pub fn from_points(us: Vec<f64>) -> Result<Self> {
        if us.len() < 2 {
            return Err(Error::InvalidGrid("need at least 2 points".into()));
        }
        for w in us.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::InvalidGrid(format!(
                    "points must be strictly increasing ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        if us[0] <= 0.0 || *us.last().unwrap() >= 1.0 {
            return Err(Error::InvalidGrid("points must lie inside (0,1)".into()));
        }
        Ok(Self { us })
    }

    pub fn points(&self) -> &[f64] {
        &self.us
    }

    pub fn len(&self) -> usize {
        self.us.len()
    }

    pub fn is_empty(&self) -> bool {
        self.us.is_empty()
    }

    /// Same span with twice the resolution.
    pub fn refined(&self) -> Self {
        let n = self.us.len();
        Self::new(2 * n, self.us[0], self.us[n - 1]).expect("refining a valid grid")
    }
}

impl Default for ProbGrid {
    fn default() -> Self {
        Self::new(DEFAULT_GRID_POINTS, DEFAULT_U_MIN, DEFAULT_U_MAX).expect("default grid is valid")
    }
}
