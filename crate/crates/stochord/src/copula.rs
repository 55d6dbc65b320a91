//! Archimedean copula generators: evaluate φ and its pseudo-inverse ψ,
//! validate n-monotonicity numerically, test super-additivity of generator
//! compositions, and evaluate the copula itself.
//!
//! Three strict one-parameter families are provided. Independence is the
//! generator e^{-t}; Gumbel(θ >= 1) is exp(-t^{1/θ}); Clayton(θ > 0) is
//! (1+t)^{-1/θ}. All are completely monotone, so they are n-monotone for
//! every n.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Sign-condition tolerance for the divided-difference monotonicity checks.
pub const N_MONOTONE_TOL: f64 = 1e-8;
/// Margin below which a composition is declared not super-additive.
pub const SUPER_ADDITIVE_TOL: f64 = 1e-10;

/// An Archimedean generator: φ(0) = 1, φ decreasing to 0 at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ArchGenerator {
    Independence,
    Gumbel { theta: f64 },
    Clayton { theta: f64 },
}

impl ArchGenerator {
    pub fn independence() -> Self {
        ArchGenerator::Independence
    }

    pub fn gumbel(theta: f64) -> Result<Self> {
        if !theta.is_finite() || theta < 1.0 {
            return Err(Error::BelowMin {
                field: "theta",
                min: 1.0,
                value: theta,
            });
        }
        Ok(ArchGenerator::Gumbel { theta })
    }

    pub fn clayton(theta: f64) -> Result<Self> {
        if !theta.is_finite() || theta <= 0.0 {
            return Err(Error::NotPositive {
                field: "theta",
                value: theta,
            });
        }
        Ok(ArchGenerator::Clayton { theta })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ArchGenerator::Independence => Ok(()),
            ArchGenerator::Gumbel { theta } => Self::gumbel(theta).map(|_| ()),
            ArchGenerator::Clayton { theta } => Self::clayton(theta).map(|_| ()),
        }
    }

    #[inline]
    pub(crate) fn phi_at(&self, t: f64) -> f64 {
        match *self {
            ArchGenerator::Independence => (-t).exp(),
            ArchGenerator::Gumbel { theta } => (-t.powf(1.0 / theta)).exp(),
            ArchGenerator::Clayton { theta } => (-t.ln_1p() / theta).exp(),
        }
    }

    #[inline]
    pub(crate) fn psi_at(&self, u: f64) -> f64 {
        self.psi_from_ln_u(u.ln())
    }

    /// ln φ(t); never underflows, unlike φ itself for large t.
    #[inline]
    pub(crate) fn ln_phi_at(&self, t: f64) -> f64 {
        match *self {
            ArchGenerator::Independence => -t,
            ArchGenerator::Gumbel { theta } => -t.powf(1.0 / theta),
            ArchGenerator::Clayton { theta } => -t.ln_1p() / theta,
        }
    }

    /// ψ(u) given ln u; the generators depend on u only through its log, so
    /// compositions like ψ_2(φ_1(t)) stay finite for any t.
    #[inline]
    pub(crate) fn psi_from_ln_u(&self, ln_u: f64) -> f64 {
        match *self {
            ArchGenerator::Independence => -ln_u,
            ArchGenerator::Gumbel { theta } => (-ln_u).powf(theta),
            ArchGenerator::Clayton { theta } => (-theta * ln_u).exp_m1(),
        }
    }

    /// φ(t) for t >= 0.
    pub fn phi(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::NegativeT(t));
        }
        Ok(self.phi_at(t))
    }

    /// ψ = φ^{-1} on (0,1].
    pub fn psi(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u <= 1.0) {
            return Err(Error::UnitHalfOpen(u));
        }
        Ok(self.psi_at(u))
    }

    /// C_φ(u_1, ..., u_n) = φ(ψ(u_1) + ... + ψ(u_n)).
    pub fn copula_value(&self, us: &[f64]) -> Result<f64> {
        let mut sum = 0.0;
        for &u in us {
            if !(0.0..=1.0).contains(&u) {
                return Err(Error::UnitClosed(u));
            }
            if u == 0.0 {
                return Ok(0.0);
            }
            sum += self.psi_at(u);
        }
        Ok(self.phi_at(sum))
    }
}

/// Outcome of a numerical n-monotonicity check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NMonotoneReport {
    pub ok: bool,
    /// First failing (derivative order, grid point), if any.
    pub witness: Option<(usize, f64)>,
}

/// Super-additivity scan of ψ_outer ∘ φ_inner over a grid square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompositionReport {
    pub super_additive: bool,
    /// min over the scanned square of f(x+y) - f(x) - f(y).
    pub worst_margin: f64,
    pub witness: (f64, f64),
    /// Range of the scanned grid; the verdict is certified only there.
    pub scanned_range: (f64, f64),
}

/// Log-spaced positive grid, the default scan support for generator checks.
pub fn log_grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let (ln_lo, ln_hi) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (ln_lo + (ln_hi - ln_lo) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

// Divided differences of order k carry roundoff ~eps/h^k, so the default
// grid keeps the spacing comfortably away from zero.
fn default_monotone_grid() -> Vec<f64> {
    (0..64).map(|i| 0.05 + 0.25 * i as f64).collect()
}

fn default_super_additive_grid() -> Vec<f64> {
    log_grid(64, 1e-4, 1e4)
}

/// Divided differences f[t_i, ..., t_{i+k}] for all windows of order k.
fn divided_differences(values: &[f64], ts: &[f64], order: usize) -> Vec<f64> {
    let mut dd = values.to_vec();
    for k in 1..=order {
        for i in 0..dd.len() - 1 {
            dd[i] = (dd[i + 1] - dd[i]) / (ts[i + k] - ts[i]);
        }
        dd.pop();
    }
    dd
}

/// Check n-monotonicity of an arbitrary generator function on a grid:
/// (-1)^k φ^(k) >= 0 for k <= n-2 via divided differences, plus
/// (-1)^{n-2} φ^(n-2) decreasing and convex.
pub fn check_n_monotone_fn<F: Fn(f64) -> f64>(
    phi: F,
    n: usize,
    ts: &[f64],
) -> Result<NMonotoneReport> {
    if n < 2 {
        return Err(Error::BelowMin {
            field: "n",
            min: 2.0,
            value: n as f64,
        });
    }
    if ts.len() < n + 2 {
        return Err(Error::InvalidGrid(format!(
            "n-monotonicity of order {n} needs at least {} grid points",
            n + 2
        )));
    }
    for w in ts.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::InvalidGrid(
                "grid must be strictly increasing".into(),
            ));
        }
    }
    let values: Vec<f64> = ts.iter().map(|&t| phi(t)).collect();
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);

    // Sign conditions on derivative orders 0..=n-2.
    for k in 0..=n - 2 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let dd = divided_differences(&values, ts, k);
        for (i, &d) in dd.iter().enumerate() {
            if sign * d < -N_MONOTONE_TOL * scale {
                return Ok(NMonotoneReport {
                    ok: false,
                    witness: Some((k, ts[i])),
                });
            }
        }
    }

    // m = (-1)^{n-2} φ^(n-2) estimated per window, attached at window centers;
    // require m decreasing and convex along the centers.
    let k = n - 2;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let mut fact = 1.0;
    for j in 1..=k {
        fact *= j as f64;
    }
    let m: Vec<f64> = divided_differences(&values, ts, k)
        .iter()
        .map(|d| sign * fact * d)
        .collect();
    let centers: Vec<f64> = (0..m.len())
        .map(|i| ts[i..=i + k].iter().sum::<f64>() / (k + 1) as f64)
        .collect();
    let m_scale = m.iter().fold(0.0f64, |s, v| s.max(v.abs())).max(1e-300);
    for i in 0..m.len() - 1 {
        if m[i + 1] - m[i] > N_MONOTONE_TOL * m_scale {
            return Ok(NMonotoneReport {
                ok: false,
                witness: Some((k + 1, centers[i])),
            });
        }
    }
    let dd2 = divided_differences(&m, &centers, 2);
    for (i, &d) in dd2.iter().enumerate() {
        if d < -N_MONOTONE_TOL * m_scale {
            return Ok(NMonotoneReport {
                ok: false,
                witness: Some((k + 2, centers[i])),
            });
        }
    }
    Ok(NMonotoneReport {
        ok: true,
        witness: None,
    })
}

/// n-monotonicity of a named generator on the default grid.
pub fn check_n_monotone(g: &ArchGenerator, n: usize) -> Result<NMonotoneReport> {
    check_n_monotone_fn(|t| g.phi_at(t), n, &default_monotone_grid())
}

/// Scan f = ψ_outer ∘ φ_inner for super-additivity over the grid square:
/// reports the minimum of f(x+y) - f(x) - f(y) and where it occurs.
pub fn check_super_additive_on(
    outer: &ArchGenerator,
    inner: &ArchGenerator,
    ts: &[f64],
) -> CompositionReport {
    let f = |t: f64| outer.psi_from_ln_u(inner.ln_phi_at(t));
    let fs: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
    let mut worst = f64::INFINITY;
    let mut witness = (ts[0], ts[0]);
    for (i, &x) in ts.iter().enumerate() {
        // f(x+y) is symmetric in (x,y); scanning j >= i halves the work.
        for (j, &y) in ts.iter().enumerate().skip(i) {
            let margin = f(x + y) - fs[i] - fs[j];
            if margin < worst {
                worst = margin;
                witness = (x, y);
            }
        }
    }
    CompositionReport {
        super_additive: worst >= -SUPER_ADDITIVE_TOL,
        worst_margin: worst,
        witness,
        scanned_range: (ts[0], *ts.last().unwrap()),
    }
}

/// Super-additivity on the default 64-point log grid over [1e-4, 1e4].
pub fn check_super_additive(outer: &ArchGenerator, inner: &ArchGenerator) -> CompositionReport {
    check_super_additive_on(outer, inner, &default_super_additive_grid())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_theta() {
        assert!(ArchGenerator::gumbel(0.5).is_err());
        assert!(ArchGenerator::clayton(0.0).is_err());
        assert!(ArchGenerator::clayton(-1.0).is_err());
        assert!(ArchGenerator::gumbel(1.0).is_ok());
    }

    #[test]
    fn phi_values() {
        let ind = ArchGenerator::independence();
        assert_eq!(ind.phi(0.0).unwrap(), 1.0);
        let g2 = ArchGenerator::gumbel(2.0).unwrap();
        assert!((g2.phi(1.0).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
        let c1 = ArchGenerator::clayton(1.0).unwrap();
        assert!((c1.phi(1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(ind.phi(-0.1).is_err());
    }

    #[test]
    fn phi_decreasing_to_zero() {
        for g in [
            ArchGenerator::independence(),
            ArchGenerator::gumbel(3.0).unwrap(),
            ArchGenerator::clayton(0.7).unwrap(),
        ] {
            let mut prev = 1.0;
            for &t in &log_grid(50, 1e-6, 1e8) {
                let v = g.phi(t).unwrap();
                assert!(v <= prev + 1e-15);
                prev = v;
            }
            assert!(prev < 1e-3);
        }
    }

    #[test]
    fn psi_values() {
        for g in [
            ArchGenerator::independence(),
            ArchGenerator::gumbel(2.0).unwrap(),
            ArchGenerator::clayton(1.5).unwrap(),
        ] {
            assert_eq!(g.psi(1.0).unwrap(), 0.0);
        }
        let ind = ArchGenerator::independence();
        assert!((ind.psi((-2.0f64).exp()).unwrap() - 2.0).abs() < 1e-14);
        let g2 = ArchGenerator::gumbel(2.0).unwrap();
        assert!((g2.psi((-1.0f64).exp()).unwrap() - 1.0).abs() < 1e-14);
        assert!(ind.psi(0.0).is_err());
        assert!(ind.psi(1.1).is_err());
    }

    #[test]
    fn phi_psi_roundtrip() {
        let us = [1e-6, 1e-4, 0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.999, 1.0];
        for g in [
            ArchGenerator::independence(),
            ArchGenerator::gumbel(1.0).unwrap(),
            ArchGenerator::gumbel(4.2).unwrap(),
            ArchGenerator::clayton(0.4).unwrap(),
            ArchGenerator::clayton(3.0).unwrap(),
        ] {
            for &u in &us {
                let back = g.phi(g.psi(u).unwrap()).unwrap();
                assert!(
                    (back - u).abs() < 1e-10,
                    "{g:?} roundtrip at {u}: got {back}"
                );
            }
        }
    }

    #[test]
    fn n_monotone_standard_families() {
        assert!(
            check_n_monotone(&ArchGenerator::independence(), 5)
                .unwrap()
                .ok
        );
        assert!(
            check_n_monotone(&ArchGenerator::gumbel(2.0).unwrap(), 3)
                .unwrap()
                .ok
        );
        assert!(
            check_n_monotone(&ArchGenerator::clayton(1.3).unwrap(), 4)
                .unwrap()
                .ok
        );
    }

    #[test]
    fn n_monotone_rejects_negated_generator() {
        let g = ArchGenerator::independence();
        let rep = check_n_monotone_fn(|t| -g.phi_at(t), 2, &log_grid(64, 1e-3, 1e2)).unwrap();
        assert!(!rep.ok);
        assert!(matches!(rep.witness, Some((0, _))));
    }

    #[test]
    fn n_monotone_rejects_increasing_function() {
        // First derivative has the wrong sign.
        let rep = check_n_monotone_fn(|t| 1.0 - (-t).exp(), 3, &log_grid(64, 1e-3, 1e2)).unwrap();
        assert!(!rep.ok);
    }

    #[test]
    fn super_additive_examples() {
        // ψ_Gumbel(2) ∘ φ_ind (t) = t^2: super-additive on positives.
        let rep = check_super_additive(
            &ArchGenerator::gumbel(2.0).unwrap(),
            &ArchGenerator::independence(),
        );
        assert!(rep.super_additive, "margin {}", rep.worst_margin);

        // ψ_ind ∘ φ_Gumbel(2) (t) = sqrt(t): concave, sub-additive.
        let rep = check_super_additive(
            &ArchGenerator::independence(),
            &ArchGenerator::gumbel(2.0).unwrap(),
        );
        assert!(!rep.super_additive);
        assert!(rep.worst_margin < -1e-3);

        // Gumbel(3) ∘ Gumbel(1.5): f(t) = t^2 again.
        let rep = check_super_additive(
            &ArchGenerator::gumbel(3.0).unwrap(),
            &ArchGenerator::gumbel(1.5).unwrap(),
        );
        assert!(rep.super_additive);
    }

    #[test]
    fn super_additive_self_composition_margin_zero() {
        for g in [
            ArchGenerator::independence(),
            ArchGenerator::gumbel(2.5).unwrap(),
            ArchGenerator::clayton(0.8).unwrap(),
        ] {
            let rep = check_super_additive(&g, &g);
            assert!(rep.super_additive);
            // f is the identity up to roundoff.
            assert!(
                rep.worst_margin.abs() < 1e-9 * 2e4,
                "{g:?}: {}",
                rep.worst_margin
            );
        }
    }

    #[test]
    fn clayton_pairs_follow_theta_order() {
        // ψ_2 ∘ φ_1 = (1+t)^{θ2/θ1} - 1: super-additive iff θ2 >= θ1.
        let up = check_super_additive(
            &ArchGenerator::clayton(3.0).unwrap(),
            &ArchGenerator::clayton(1.0).unwrap(),
        );
        assert!(up.super_additive);
        let down = check_super_additive(
            &ArchGenerator::clayton(1.0).unwrap(),
            &ArchGenerator::clayton(3.0).unwrap(),
        );
        assert!(!down.super_additive);
    }

    #[test]
    fn copula_values() {
        let ind = ArchGenerator::independence();
        assert!((ind.copula_value(&[0.5, 0.5]).unwrap() - 0.25).abs() < 1e-15);

        // ψ(1) = 0, so trailing ones are neutral.
        for g in [
            ArchGenerator::independence(),
            ArchGenerator::gumbel(2.0).unwrap(),
            ArchGenerator::clayton(1.5).unwrap(),
        ] {
            let v = g.copula_value(&[0.37, 1.0, 1.0, 1.0]).unwrap();
            assert!((v - 0.37).abs() < 1e-12, "{g:?}: {v}");
        }

        // Closed form for Gumbel(2) at (1/2, 1/2): exp(-sqrt(2) ln 2),
        // cross-checked through the phi/psi composition.
        let g2 = ArchGenerator::gumbel(2.0).unwrap();
        let v = g2.copula_value(&[0.5, 0.5]).unwrap();
        let ln2 = std::f64::consts::LN_2;
        assert!((v - (-(2.0 * ln2 * ln2).sqrt()).exp()).abs() < 1e-15);
        assert!((v - 0.375_214_227_246_481_8).abs() < 1e-12);
        let via_parts = g2.phi(g2.psi(0.5).unwrap() + g2.psi(0.5).unwrap()).unwrap();
        assert!((v - via_parts).abs() < 1e-15);

        assert!(g2.copula_value(&[0.5, 1.2]).is_err());
        assert_eq!(g2.copula_value(&[0.5, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn copula_monotone_and_frechet_bound() {
        let gens = [
            ArchGenerator::independence(),
            ArchGenerator::gumbel(3.0).unwrap(),
            ArchGenerator::clayton(2.0).unwrap(),
        ];
        for g in gens {
            let mut prev = 0.0;
            for i in 1..40 {
                let u = i as f64 / 40.0;
                let v = g.copula_value(&[u, 0.6, 0.8]).unwrap();
                assert!(v >= prev - 1e-14, "{g:?} not monotone at {u}");
                assert!(
                    v <= u.min(0.6).min(0.8) + 1e-12,
                    "{g:?} above Frechet bound"
                );
                prev = v;
            }
        }
    }
}
