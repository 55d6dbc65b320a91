//! Majorization preorders on real vectors and seeded generation of comparable
//! pairs for property testing.
//!
//! Conventions follow the increasing arrangement x_(1) <= ... <= x_(n):
//! x is weakly submajorized by y when every suffix sum of x is dominated by
//! y's, weakly supermajorized when every prefix sum of x dominates y's, and
//! majorized when additionally the totals agree.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which relation a generated pair must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// x majorized by y (equal sums, prefix dominance).
    Majorize,
    /// x weakly submajorized by y (suffix sums dominated).
    WeakSub,
    /// x weakly supermajorized by y (prefix sums dominate).
    WeakSuper,
}

fn sorted_increasing(v: &[f64]) -> Vec<f64> {
    let mut s = v.to_vec();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    s
}

fn slack(x: &[f64], y: &[f64]) -> f64 {
    let m = x.iter().chain(y.iter()).fold(1.0f64, |m, v| m.max(v.abs()));
    1e-12 * x.len() as f64 * m
}

fn check_lengths(x: &[f64], y: &[f64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.is_empty() {
        return Err(Error::EmptySample);
    }
    Ok(())
}

/// x majorized by y: equal totals and every prefix sum of the increasing
/// arrangement of x dominates y's.
pub fn is_majorized(x: &[f64], y: &[f64]) -> Result<bool> {
    check_lengths(x, y)?;
    let eps = slack(x, y);
    let (sx, sy): (f64, f64) = (x.iter().sum(), y.iter().sum());
    if (sx - sy).abs() > eps {
        return Ok(false);
    }
    let (xs, ys) = (sorted_increasing(x), sorted_increasing(y));
    let mut px = 0.0;
    let mut py = 0.0;
    for j in 0..xs.len() - 1 {
        px += xs[j];
        py += ys[j];
        if px < py - eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// x weakly submajorized by y: suffix sums of x dominated by y's.
pub fn is_weak_submajorized(x: &[f64], y: &[f64]) -> Result<bool> {
    check_lengths(x, y)?;
    let eps = slack(x, y);
    let (xs, ys) = (sorted_increasing(x), sorted_increasing(y));
    let mut sx = 0.0;
    let mut sy = 0.0;
    for j in (0..xs.len()).rev() {
        sx += xs[j];
        sy += ys[j];
        if sx > sy + eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// x weakly supermajorized by y: prefix sums of x dominate y's.
pub fn is_weak_supermajorized(x: &[f64], y: &[f64]) -> Result<bool> {
    check_lengths(x, y)?;
    let eps = slack(x, y);
    let (xs, ys) = (sorted_increasing(x), sorted_increasing(y));
    let mut px = 0.0;
    let mut py = 0.0;
    for j in 0..xs.len() {
        px += xs[j];
        py += ys[j];
        if px < py - eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deterministically generate a pair (x, y) satisfying the requested relation,
/// with every entry inside the positive interval `domain`.
///
/// Construction: y is uniform on the domain; x starts as y and receives 1-5
/// Robin Hood transfers (rich gives to poor, which majorizes), then a
/// down/up shift for the weak variants. Transfer sizes are capped so vectors
/// never leave the domain.
pub fn random_comparable_pair(
    n: usize,
    relation: Relation,
    seed: u64,
    domain: (f64, f64),
) -> Result<(Vec<f64>, Vec<f64>)> {
    if n < 2 {
        return Err(Error::BelowMin {
            field: "n",
            min: 2.0,
            value: n as f64,
        });
    }
    let (lo, hi) = domain;
    if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi) {
        return Err(Error::InvalidGrid(format!(
            "domain must be a positive interval, got [{lo}, {hi}]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let y: Vec<f64> = (0..n).map(|_| rng.random_range(lo..hi)).collect();
    let mut x = y.clone();
    let transfers = rng.random_range(1..=5usize);
    for _ in 0..transfers {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j {
            continue;
        }
        let (rich, poor) = if x[i] >= x[j] { (i, j) } else { (j, i) };
        let delta = rng.random_range(0.0..=0.5) * (x[rich] - x[poor]);
        x[rich] -= delta;
        x[poor] += delta;
    }
    match relation {
        Relation::Majorize => {}
        Relation::WeakSub => {
            // Lowering entries shrinks every suffix sum.
            for v in &mut x {
                let d = rng.random_range(0.0..=0.5) * (*v - lo);
                *v -= d;
            }
        }
        Relation::WeakSuper => {
            // Raising entries grows every prefix sum.
            for v in &mut x {
                let d = rng.random_range(0.0..=0.5) * (hi - *v);
                *v += d;
            }
        }
    }
    Ok((x, y))
}
