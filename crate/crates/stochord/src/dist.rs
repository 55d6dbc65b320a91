//! Closed-form evaluation of the NH / GE / exponential / ENH lifetime laws and
//! the general exponentiated-scale (ES) family: CDF, survival, density,
//! quantile, hazard, and hazard-shape classification.
//!
//! The ENH law has CDF `[1 - exp(1 - (1 + λx)^α)]^β` on x >= 0. Setting β = 1
//! recovers NH, α = 1 recovers the generalized exponential (GE), and
//! α = β = 1 the exponential with rate λ. Every family here is also an ES
//! instance `[G(λx)]^a` for a baseline G, which is what the extreme-value and
//! copula machinery consumes.
//!
//! All evaluations route through log-domain forms (`ln1p`, `expm1`,
//! `ln(1-e^z)`) so that large powers and near-zero arguments do not cancel
//! catastrophically.

use serde::{Deserialize, Serialize};

use crate::math::{binom_real, log1mexp, upper_gamma};
use crate::{Error, ProbGrid, Result};

/// Common interface for everything the order checkers compare: any object
/// exposing cdf / sf / pdf / quantile over a support bounded below.
///
/// Implementations must keep `sf = 1 - cdf` to ~1e-12 and `quantile` inverting
/// `cdf` to ~1e-9; all built-in families do much better.
pub trait Dist {
    /// F(x); 0 below the support.
    fn cdf(&self, x: f64) -> f64;
    /// Survival 1 - F(x).
    fn sf(&self, x: f64) -> f64;
    /// Density; +inf where the law diverges (ENH at 0 with β < 1).
    fn pdf(&self, x: f64) -> f64;
    /// F^{-1}(u) for u in (0,1).
    fn quantile(&self, u: f64) -> f64;
    /// Lower endpoint of the support (0 for every family here).
    fn support_lb(&self) -> f64 {
        0.0
    }
    /// ∫_x^∞ sf(t) dt where a (semi-)analytic form exists. Used to bound
    /// right tails in integrated-survival computations.
    fn sf_tail_integral(&self, _x: f64) -> Option<f64> {
        None
    }
    /// hazard f / (1-F); +inf when the survival underflows.
    fn hazard(&self, x: f64) -> f64 {
        let s = self.sf(x);
        if s <= 0.0 {
            return f64::INFINITY;
        }
        self.pdf(x) / s
    }
}

fn require_positive(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NotPositive { field, value })
    }
}

fn require_unit_open(u: f64) -> Result<f64> {
    if u > 0.0 && u < 1.0 {
        Ok(u)
    } else {
        Err(Error::UnitOpen(u))
    }
}

fn require_nonneg_x(x: f64) -> Result<f64> {
    if x >= 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NegativeX(x))
    }
}

// ---------------------------------------------------------------------------
// ENH
// ---------------------------------------------------------------------------

/// Parameters of one ENH marginal: shape α, scale λ (1/time), power shape β.
///
/// ```
/// use stochord::dist::EnhParams;
/// let p = EnhParams::new(0.5, 1.0, 2.0)?;
/// let x = p.quantile(0.25)?;
/// assert!((p.cdf(x)? - 0.25).abs() < 1e-12);
/// # Ok::<(), stochord::Error>(())
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnhParams {
    alpha: f64,
    lambda: f64,
    beta: f64,
}

impl EnhParams {
    pub fn new(alpha: f64, lambda: f64, beta: f64) -> Result<Self> {
        Ok(Self {
            alpha: require_positive("alpha", alpha)?,
            lambda: require_positive("lambda", lambda)?,
            beta: require_positive("beta", beta)?,
        })
    }

    /// Exponential with rate λ, i.e. ENH(1, λ, 1).
    pub fn exponential(lambda: f64) -> Result<Self> {
        Self::new(1.0, lambda, 1.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Same law with the power shape replaced (used for maxima of common-shape
    /// samples, whose law is ENH(α, λ, Σβ_i)).
    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(self.alpha, self.lambda, beta)
    }

    /// z = 1 - (1+λx)^α <= 0 for x >= 0.
    #[inline]
    fn z(&self, x: f64) -> f64 {
        -(self.alpha * (self.lambda * x).ln_1p()).exp_m1()
    }

    /// ln F(x); -inf at x = 0.
    #[inline]
    fn ln_cdf_at(&self, x: f64) -> f64 {
        self.beta * log1mexp(self.z(x))
    }

    #[inline]
    fn cdf_at(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        self.ln_cdf_at(x).exp()
    }

    #[inline]
    fn sf_at(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 1.0;
        }
        -self.ln_cdf_at(x).exp_m1()
    }

    #[inline]
    fn ln_sf_at(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        log1mexp(self.ln_cdf_at(x))
    }

    fn ln_pdf_at(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NEG_INFINITY;
        }
        if x == 0.0 {
            // (1 - e^z)^{β-1} -> 0^{β-1}: diverges for β < 1, αλ for β = 1.
            return if self.beta < 1.0 {
                f64::INFINITY
            } else if self.beta == 1.0 {
                (self.alpha * self.lambda).ln()
            } else {
                f64::NEG_INFINITY
            };
        }
        let z = self.z(x);
        let mut ln = (self.alpha * self.beta * self.lambda).ln()
            + (self.alpha - 1.0) * (self.lambda * x).ln_1p()
            + z;
        if self.beta != 1.0 {
            ln += (self.beta - 1.0) * log1mexp(z);
        }
        ln
    }

    fn pdf_at(&self, x: f64) -> f64 {
        self.ln_pdf_at(x).exp()
    }

    fn quantile_at(&self, u: f64) -> f64 {
        // x = ((1 - ln(1 - u^{1/β}))^{1/α} - 1)/λ, kept in log form throughout.
        let eps = -log1mexp(u.ln() / self.beta);
        ((eps.ln_1p() / self.alpha).exp_m1()) / self.lambda
    }

    fn hazard_at(&self, x: f64) -> f64 {
        let lf = self.ln_pdf_at(x);
        let ls = self.ln_sf_at(x);
        if ls == f64::NEG_INFINITY {
            return f64::INFINITY;
        }
        (lf - ls).exp()
    }

    /// F(x) = [1 - exp(1 - (1+λx)^α)]^β.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        Ok(self.cdf_at(require_nonneg_x(x)?))
    }

    /// Survival 1 - F(x).
    pub fn sf(&self, x: f64) -> Result<f64> {
        Ok(self.sf_at(require_nonneg_x(x)?))
    }

    /// Density; +inf at x = 0 when β < 1.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        Ok(self.pdf_at(require_nonneg_x(x)?))
    }

    /// F^{-1}(u) for u in (0,1).
    pub fn quantile(&self, u: f64) -> Result<f64> {
        Ok(self.quantile_at(require_unit_open(u)?))
    }

    /// f / (1-F); +inf when the survival underflows.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        Ok(self.hazard_at(require_nonneg_x(x)?))
    }

    /// Classify the failure-rate shape from the sign pattern of successive
    /// hazard differences on the quantile-mapped grid.
    pub fn hazard_shape(&self, grid: &ProbGrid) -> Result<HazardShape> {
        hazard_shape_of(self, grid)
    }
}

impl Dist for EnhParams {
    fn cdf(&self, x: f64) -> f64 {
        self.cdf_at(x)
    }
    fn sf(&self, x: f64) -> f64 {
        self.sf_at(x)
    }
    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            0.0
        } else {
            self.pdf_at(x)
        }
    }
    fn quantile(&self, u: f64) -> f64 {
        self.quantile_at(u)
    }
    fn sf_tail_integral(&self, x: f64) -> Option<f64> {
        // ENH is ES with an NH(α) baseline and exponent β.
        Some(es_tail_integral(
            self.beta,
            self.lambda,
            &Baseline::Nh { alpha: self.alpha },
            x,
        ))
    }
    fn hazard(&self, x: f64) -> f64 {
        self.hazard_at(x)
    }
}

// ---------------------------------------------------------------------------
// ES family
// ---------------------------------------------------------------------------

/// Baseline distribution G of an exponentiated-scale law [G(λx)]^a.
///
/// NH(α) and the unit exponential suffice to realize ENH, NH, GE and the
/// exponential as ES instances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Baseline {
    Nh { alpha: f64 },
    Exponential,
}

impl Baseline {
    pub fn nh(alpha: f64) -> Result<Self> {
        require_positive("alpha", alpha)?;
        Ok(Baseline::Nh { alpha })
    }

    fn validate(&self) -> Result<()> {
        if let Baseline::Nh { alpha } = self {
            require_positive("alpha", *alpha)?;
        }
        Ok(())
    }

    /// ln of the baseline survival at t >= 0.
    #[inline]
    fn ln_survival(&self, t: f64) -> f64 {
        match self {
            Baseline::Nh { alpha } => -(alpha * t.ln_1p()).exp_m1(),
            Baseline::Exponential => -t,
        }
    }

    /// ln G(t); -inf at t = 0.
    #[inline]
    fn ln_cdf(&self, t: f64) -> f64 {
        log1mexp(self.ln_survival(t))
    }

    pub fn cdf(&self, t: f64) -> f64 {
        if t <= 0.0 {
            0.0
        } else {
            self.ln_cdf(t).exp()
        }
    }

    /// ln g(t), baseline density.
    #[inline]
    fn ln_pdf(&self, t: f64) -> f64 {
        match self {
            Baseline::Nh { alpha } => alpha.ln() + (alpha - 1.0) * t.ln_1p() + self.ln_survival(t),
            Baseline::Exponential => -t,
        }
    }

    /// G^{-1}(v) expressed through eps = -ln(1 - v).
    #[inline]
    fn quantile_from_eps(&self, eps: f64) -> f64 {
        match self {
            Baseline::Nh { alpha } => (eps.ln_1p() / alpha).exp_m1(),
            Baseline::Exponential => eps,
        }
    }

    /// ∫_T^∞ q(λx)^k dx for the baseline survival q.
    fn survival_power_integral(&self, k: u32, lambda: f64, t_cut: f64) -> f64 {
        let k_f = f64::from(k);
        match self {
            Baseline::Exponential => (-k_f * lambda * t_cut).exp() / (k_f * lambda),
            Baseline::Nh { alpha } => {
                // ∫ e^{k(1-(1+λx)^α)} dx = e^k k^{-s} Γ(s, kW)/(αλ) with
                // s = 1/α and W = (1+λT)^α.
                let s = 1.0 / alpha;
                let w = (alpha * (lambda * t_cut).ln_1p()).exp();
                let gamma = upper_gamma(s, k_f * w);
                k_f.powf(-s) * k_f.exp() * gamma / (alpha * lambda)
            }
        }
    }
}

/// Tail ∫_T^∞ [1 - (1 - q)^a] dx via the binomial expansion of the survival,
/// accurate once q(λT) is small (the callers cut at extreme quantiles).
fn es_tail_integral(exponent: f64, lambda: f64, baseline: &Baseline, t_cut: f64) -> f64 {
    let mut total = 0.0;
    for k in 1..=3u32 {
        let c = binom_real(exponent, k);
        if c == 0.0 {
            break;
        }
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        total += sign * c * baseline.survival_power_integral(k, lambda, t_cut);
    }
    total.max(0.0)
}

/// An exponentiated-scale law [G(λx)]^α.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EsSpec {
    alpha: f64,
    lambda: f64,
    baseline: Baseline,
}

impl EsSpec {
    pub fn new(alpha: f64, lambda: f64, baseline: Baseline) -> Result<Self> {
        baseline.validate()?;
        Ok(Self {
            alpha: require_positive("alpha", alpha)?,
            lambda: require_positive("lambda", lambda)?,
            baseline,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn baseline(&self) -> Baseline {
        self.baseline
    }

    /// Same law with the exponent replaced.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::new(alpha, self.lambda, self.baseline)
    }

    /// ln H(x) = α ln G(λx).
    #[inline]
    fn ln_cdf_at(&self, x: f64) -> f64 {
        self.alpha * self.baseline.ln_cdf(self.lambda * x)
    }

    fn cdf_at(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            self.ln_cdf_at(x).exp()
        }
    }

    fn sf_at(&self, x: f64) -> f64 {
        if x <= 0.0 {
            1.0
        } else {
            -self.ln_cdf_at(x).exp_m1()
        }
    }

    fn ln_sf_at(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            log1mexp(self.ln_cdf_at(x))
        }
    }

    fn ln_pdf_at(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NEG_INFINITY;
        }
        if x == 0.0 {
            return if self.alpha < 1.0 {
                f64::INFINITY
            } else if self.alpha == 1.0 {
                (self.lambda).ln() + self.baseline.ln_pdf(0.0)
            } else {
                f64::NEG_INFINITY
            };
        }
        let t = self.lambda * x;
        let mut ln = self.alpha.ln() + self.lambda.ln() + self.baseline.ln_pdf(t);
        if self.alpha != 1.0 {
            ln += (self.alpha - 1.0) * self.baseline.ln_cdf(t);
        }
        ln
    }

    fn quantile_at(&self, u: f64) -> f64 {
        let eps = -log1mexp(u.ln() / self.alpha);
        self.baseline.quantile_from_eps(eps) / self.lambda
    }

    /// H(x) = [G(λx)]^α.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        Ok(self.cdf_at(require_nonneg_x(x)?))
    }

    pub fn sf(&self, x: f64) -> Result<f64> {
        Ok(self.sf_at(require_nonneg_x(x)?))
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        Ok(self.ln_pdf_at(require_nonneg_x(x)?).exp())
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        Ok(self.quantile_at(require_unit_open(u)?))
    }

    pub fn hazard(&self, x: f64) -> Result<f64> {
        require_nonneg_x(x)?;
        Ok(Dist::hazard(self, x))
    }
}

impl Dist for EsSpec {
    fn cdf(&self, x: f64) -> f64 {
        self.cdf_at(x)
    }
    fn sf(&self, x: f64) -> f64 {
        self.sf_at(x)
    }
    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            0.0
        } else {
            self.ln_pdf_at(x).exp()
        }
    }
    fn quantile(&self, u: f64) -> f64 {
        self.quantile_at(u)
    }
    fn sf_tail_integral(&self, x: f64) -> Option<f64> {
        Some(es_tail_integral(self.alpha, self.lambda, &self.baseline, x))
    }
    fn hazard(&self, x: f64) -> f64 {
        let ls = self.ln_sf_at(x);
        if ls == f64::NEG_INFINITY {
            return f64::INFINITY;
        }
        (self.ln_pdf_at(x) - ls).exp()
    }
}

// ---------------------------------------------------------------------------
// Hazard-shape classification
// ---------------------------------------------------------------------------

/// Failure-rate shape labels, decided purely from the sign-change pattern of
/// successive hazard differences on the working grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HazardShape {
    Constant,
    Increasing,
    Decreasing,
    Unimodal,
    Bathtub,
    Indeterminate,
}

impl std::fmt::Display for HazardShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            HazardShape::Constant => "Constant",
            HazardShape::Increasing => "Increasing",
            HazardShape::Decreasing => "Decreasing",
            HazardShape::Unimodal => "Unimodal",
            HazardShape::Bathtub => "Bathtub",
            HazardShape::Indeterminate => "Indeterminate",
        };
        f.write_str(s)
    }
}

/// Shape classification for any distribution handle; needs >= 64 grid points.
pub fn hazard_shape_of(d: &dyn Dist, grid: &ProbGrid) -> Result<HazardShape> {
    if grid.len() < 64 {
        return Err(Error::InvalidGrid(format!(
            "hazard classification needs at least 64 grid points, got {}",
            grid.len()
        )));
    }
    let hs: Vec<f64> = grid
        .points()
        .iter()
        .map(|&u| d.hazard(d.quantile(u)))
        .filter(|h| h.is_finite())
        .collect();
    if hs.len() < 3 {
        return Ok(HazardShape::Indeterminate);
    }
    // Median hazard as the comparison scale: the mean is swamped by the
    // divergent left end when β < 1.
    let mut sorted: Vec<f64> = hs.iter().map(|h| h.abs()).collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let scale = sorted[sorted.len() / 2];
    let tol = 1e-8 * scale.max(f64::MIN_POSITIVE);
    let mut signs = Vec::with_capacity(hs.len() - 1);
    for w in hs.windows(2) {
        let d = w[1] - w[0];
        if d > tol {
            signs.push(1i8);
        } else if d < -tol {
            signs.push(-1i8);
        }
    }
    if signs.is_empty() {
        return Ok(HazardShape::Constant);
    }
    let mut changes = 0usize;
    for w in signs.windows(2) {
        if w[0] != w[1] {
            changes += 1;
        }
    }
    Ok(match (changes, signs[0]) {
        (0, 1) => HazardShape::Increasing,
        (0, -1) => HazardShape::Decreasing,
        (1, 1) => HazardShape::Unimodal,
        (1, -1) => HazardShape::Bathtub,
        _ => HazardShape::Indeterminate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN2: f64 = std::f64::consts::LN_2;

    fn enh(a: f64, l: f64, b: f64) -> EnhParams {
        EnhParams::new(a, l, b).unwrap()
    }

    // Reference forms written straight from the definitions; these are the
    // oracles the ENH reductions are judged against.
    fn nh_cdf_ref(alpha: f64, lambda: f64, x: f64) -> f64 {
        1.0 - (1.0 - (1.0 + lambda * x).powf(alpha)).exp()
    }

    fn ge_cdf_ref(lambda: f64, beta: f64, x: f64) -> f64 {
        (1.0 - (-lambda * x).exp()).powf(beta)
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(matches!(
            EnhParams::new(-1.0, 1.0, 1.0),
            Err(Error::NotPositive { field: "alpha", .. })
        ));
        assert!(matches!(
            EnhParams::new(1.0, 0.0, 1.0),
            Err(Error::NotPositive {
                field: "lambda",
                ..
            })
        ));
        assert!(matches!(
            EnhParams::new(1.0, 1.0, f64::NAN),
            Err(Error::NotPositive { field: "beta", .. })
        ));
    }

    #[test]
    fn rejects_domain_violations() {
        let p = enh(1.0, 1.0, 1.0);
        assert!(matches!(p.cdf(-0.5), Err(Error::NegativeX(_))));
        assert!(matches!(p.pdf(-0.5), Err(Error::NegativeX(_))));
        assert!(matches!(p.quantile(0.0), Err(Error::UnitOpen(_))));
        assert!(matches!(p.quantile(1.0), Err(Error::UnitOpen(_))));
    }

    #[test]
    fn cdf_exponential_median() {
        assert!((enh(1.0, 1.0, 1.0).cdf(LN2).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn cdf_frozen_points() {
        // Direct evaluation of the closed form, cross-checked below by
        // integrating the density.
        let v = enh(2.0, 1.0, 1.0).cdf(1.0).unwrap();
        assert!((v - (1.0 - (-3.0f64).exp())).abs() < 1e-15);
        assert!((v - 0.950_212_931_632_136_1).abs() < 1e-12);

        let v = enh(0.5, 1.0, 2.0).cdf(3.0).unwrap();
        let expected = (1.0 - (-1.0f64).exp()).powi(2);
        assert!((v - expected).abs() < 1e-15);
        assert!((v - 0.399_576_400_893_728_03).abs() < 1e-12);
    }

    #[test]
    fn cdf_cross_checked_by_quadrature_of_pdf() {
        // Independent oracle: composite Simpson on the density.
        let p = enh(2.0, 1.0, 1.0);
        let n = 20_000;
        let h = 1.0 / n as f64;
        let mut acc = p.pdf(0.0).unwrap() + p.pdf(1.0).unwrap();
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * p.pdf(i as f64 * h).unwrap();
        }
        let integral = acc * h / 3.0;
        assert!((integral - p.cdf(1.0).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn pdf_frozen_points() {
        assert!((enh(1.0, 1.0, 1.0).pdf(0.0).unwrap() - 1.0).abs() < 1e-15);
        let v = enh(2.0, 1.0, 1.0).pdf(1.0).unwrap();
        assert!((v - 4.0 * (-3.0f64).exp()).abs() < 1e-15);
        assert!((v - 0.199_148_273_471_455_78).abs() < 1e-12);
    }

    #[test]
    fn pdf_diverges_at_zero_for_small_beta() {
        assert_eq!(enh(1.0, 1.0, 0.5).pdf(0.0).unwrap(), f64::INFINITY);
        assert_eq!(enh(1.0, 1.0, 2.0).pdf(0.0).unwrap(), 0.0);
    }

    #[test]
    fn pdf_matches_cdf_finite_difference() {
        let cases = [
            enh(0.5, 1.0, 2.0),
            enh(2.0, 0.7, 0.4),
            enh(1.3, 2.5, 1.0),
            enh(0.8, 0.3, 3.0),
        ];
        for p in cases {
            for i in 1..100 {
                let u = i as f64 / 100.0;
                let x = p.quantile(u).unwrap();
                // Step proportional to x: near 0 the density can be steep
                // (x^{β-1} for β < 1), so an absolute step would smear it.
                let h = 1e-4 * x;
                let fd = (p.cdf(x + h).unwrap() - p.cdf(x - h).unwrap()) / (2.0 * h);
                let f = p.pdf(x).unwrap();
                assert!(
                    (fd - f).abs() <= 1e-5 * f.abs().max(1e-12),
                    "pdf mismatch at {p:?} x={x}: fd {fd} vs {f}"
                );
            }
        }
    }

    #[test]
    fn quantile_frozen_points() {
        assert!((enh(1.0, 1.0, 1.0).quantile(0.5).unwrap() - LN2).abs() < 1e-15);
        // Inverse of the frozen cdf point above.
        let u = enh(0.5, 1.0, 2.0).cdf(3.0).unwrap();
        assert!((enh(0.5, 1.0, 2.0).quantile(u).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn quantile_roundtrip_is_tight() {
        let cases = [
            enh(0.5, 1.0, 2.0),
            enh(2.0, 0.7, 0.4),
            enh(1.0, 3.0, 1.0),
            enh(3.0, 0.2, 1000.0),
            enh(0.3, 2.0, 0.1),
        ];
        for p in cases {
            for i in 0..200 {
                let u = 1e-4 + (1.0 - 2e-4) * i as f64 / 199.0;
                let x = p.quantile(u).unwrap();
                let back = p.cdf(x).unwrap();
                assert!(
                    (back - u).abs() < 1e-10 * u.max(1e-4),
                    "roundtrip {p:?} u={u}: got {back}"
                );
                // And the other direction, absolute on x.
                let x2 = p.quantile(back).unwrap();
                assert!((x2 - x).abs() <= 1e-9 * x.abs().max(1.0));
            }
        }
    }

    #[test]
    fn cdf_monotone_and_zero_at_origin() {
        let p = enh(0.7, 2.0, 5.0);
        assert_eq!(p.cdf(0.0).unwrap(), 0.0);
        let mut prev = 0.0;
        for i in 1..=300 {
            let x = i as f64 * 0.05;
            let v = p.cdf(x).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn reduction_identities() {
        // ENH(α,λ,1) = NH, ENH(1,λ,β) = GE, ENH(1,λ,1) = Exp, pointwise.
        for i in 1..=64 {
            let x = i as f64 * 0.15;
            let nh = enh(1.7, 0.8, 1.0).cdf(x).unwrap();
            assert!((nh - nh_cdf_ref(1.7, 0.8, x)).abs() < 1e-12);
            let ge = enh(1.0, 1.4, 2.3).cdf(x).unwrap();
            assert!((ge - ge_cdf_ref(1.4, 2.3, x)).abs() < 1e-12);
            let ex = enh(1.0, 2.0, 1.0).cdf(x).unwrap();
            assert!((ex - (1.0 - (-2.0 * x).exp())).abs() < 1e-12);
        }
    }

    #[test]
    fn hazard_values() {
        let p = enh(1.0, 1.0, 1.0);
        for &x in &[0.1, 1.0, 7.0] {
            assert!((p.hazard(x).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((enh(2.0, 1.0, 1.0).hazard(1.0).unwrap() - 4.0).abs() < 1e-12);
        let p = enh(1.0, 2.0, 1.0);
        for &x in &[0.5, 2.0] {
            assert!((p.hazard(x).unwrap() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hazard_identity_with_pdf_and_sf() {
        let p = enh(0.6, 1.3, 2.2);
        for i in 1..60 {
            let x = i as f64 * 0.1;
            let lhs = p.hazard(x).unwrap() * p.sf(x).unwrap();
            let rhs = p.pdf(x).unwrap();
            assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1e-300));
        }
    }

    #[test]
    fn hazard_overflow_sentinel() {
        // Far enough out that the survival underflows to zero.
        let p = enh(2.0, 1.0, 1.0);
        assert_eq!(p.hazard(1e9).unwrap(), f64::INFINITY);
    }

    // Independent shape oracle: hazard derivative via cdf differences only.
    fn brute_shape(p: &EnhParams) -> HazardShape {
        let haz = |x: f64| {
            let h = 1e-5 * x;
            let num = p.cdf(x + h).unwrap() - p.cdf(x - h).unwrap();
            num / (2.0 * h) / p.sf(x).unwrap()
        };
        let grid = ProbGrid::new(256, 1e-4, 1.0 - 1e-4).unwrap();
        let hs: Vec<f64> = grid
            .points()
            .iter()
            .map(|&u| haz(p.quantile(u).unwrap()))
            .collect();
        let mut sorted = hs.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let scale = sorted[sorted.len() / 2];
        let mut signs = vec![];
        for w in hs.windows(2) {
            let d = w[1] - w[0];
            if d.abs() > 1e-7 * scale {
                signs.push(d.signum() as i8);
            }
        }
        if signs.is_empty() {
            return HazardShape::Constant;
        }
        let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
        match (changes, signs[0]) {
            (0, 1) => HazardShape::Increasing,
            (0, -1) => HazardShape::Decreasing,
            (1, 1) => HazardShape::Unimodal,
            (1, -1) => HazardShape::Bathtub,
            _ => HazardShape::Indeterminate,
        }
    }

    #[test]
    fn hazard_shape_classification() {
        let grid = ProbGrid::default();
        let cases = [
            (enh(1.0, 1.0, 1.0), HazardShape::Constant),
            (enh(2.0, 1.0, 1.0), HazardShape::Increasing),
            (enh(0.5, 1.0, 0.5), HazardShape::Decreasing),
            (enh(0.5, 1.0, 4.0), HazardShape::Unimodal),
            (enh(2.0, 1.0, 0.3), HazardShape::Bathtub),
        ];
        for (p, want) in cases {
            assert_eq!(p.hazard_shape(&grid).unwrap(), want, "{p:?}");
            if want != HazardShape::Constant {
                assert_eq!(brute_shape(&p), want, "oracle disagrees for {p:?}");
            }
        }
    }

    #[test]
    fn hazard_shape_needs_enough_points() {
        let small = ProbGrid::new(32, 0.01, 0.99).unwrap();
        assert!(enh(1.0, 1.0, 1.0).hazard_shape(&small).is_err());
    }

    #[test]
    fn es_cdf_examples() {
        let unit_exp = EsSpec::new(1.0, 1.0, Baseline::Exponential).unwrap();
        assert!((unit_exp.cdf(LN2).unwrap() - 0.5).abs() < 1e-15);

        // NH(1) baseline is the unit exponential, so this is (1 - e^{-1})^2.
        let s = EsSpec::new(2.0, 1.0, Baseline::nh(1.0).unwrap()).unwrap();
        let expected = (1.0 - (-1.0f64).exp()).powi(2);
        assert!((s.cdf(1.0).unwrap() - expected).abs() < 1e-15);
        assert!((s.cdf(1.0).unwrap() - 0.399_576_400_893_728_03).abs() < 1e-12);
    }

    #[test]
    fn es_with_nh_baseline_is_enh() {
        let a0 = 1.8;
        let lambda = 0.6;
        let beta = 2.7;
        let es = EsSpec::new(beta, lambda, Baseline::nh(a0).unwrap()).unwrap();
        let p = enh(a0, lambda, beta);
        for i in 0..100 {
            let x = 0.05 + i as f64 * 0.12;
            assert!((es.cdf(x).unwrap() - p.cdf(x).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn es_quantile_and_pdf_consistent() {
        let specs = [
            EsSpec::new(2.5, 0.8, Baseline::Exponential).unwrap(),
            EsSpec::new(0.4, 1.5, Baseline::nh(2.0).unwrap()).unwrap(),
        ];
        for s in specs {
            for i in 1..50 {
                let u = i as f64 / 50.0;
                let x = s.quantile(u).unwrap();
                assert!((s.cdf(x).unwrap() - u).abs() < 1e-11);
                let h = 1e-4 * x;
                let fd = (s.cdf(x + h).unwrap() - s.cdf(x - h).unwrap()) / (2.0 * h);
                assert!((fd - s.pdf(x).unwrap()).abs() <= 1e-5 * s.pdf(x).unwrap().max(1e-12));
            }
        }
    }

    // Independent normalization oracle: composite Simpson over [0, X] with X
    // chosen from the analytic survival bound sf(X) <= max(1,β) e^{1-(1+λX)^α}.
    // For β < 1 the density diverges at 0 like x^{β-1}, so the integral is
    // taken in the t = x^β domain where the integrand is bounded.
    fn integrate_pdf_oracle(p: &EnhParams) -> f64 {
        let (a, l, b) = (p.alpha(), p.lambda(), p.beta());
        let w_cut = 1.0 + 24.0 + b.max(1.0).ln();
        let x_hi = (w_cut.powf(1.0 / a) - 1.0) / l;
        let n = 60_000;
        if b >= 1.0 {
            let h = x_hi / n as f64;
            let mut acc = p.pdf(0.0).unwrap() + p.pdf(x_hi).unwrap();
            for i in 1..n {
                let w = if i % 2 == 1 { 4.0 } else { 2.0 };
                acc += w * p.pdf(i as f64 * h).unwrap();
            }
            acc * h / 3.0
        } else {
            let g = |t: f64| {
                if t == 0.0 {
                    return (a * l).powf(b);
                }
                let x = t.powf(1.0 / b);
                p.pdf(x).unwrap() * t.powf(1.0 / b - 1.0) / b
            };
            let t_hi = x_hi.powf(b);
            let h = t_hi / n as f64;
            let mut acc = g(0.0) + g(t_hi);
            for i in 1..n {
                let w = if i % 2 == 1 { 4.0 } else { 2.0 };
                acc += w * g(i as f64 * h);
            }
            acc * h / 3.0
        }
    }

    #[test]
    fn pdf_integrates_to_one() {
        let cases = [
            enh(1.0, 1.0, 1.0),
            enh(2.0, 0.7, 1.8),
            enh(0.5, 1.3, 0.4),
            enh(0.8, 2.0, 3.0),
            enh(3.0, 0.4, 0.7),
        ];
        for p in cases {
            let mass = integrate_pdf_oracle(&p);
            assert!((mass - 1.0).abs() < 1e-8, "{p:?}: mass {mass}");
        }
    }

    #[test]
    fn tail_integral_matches_quadrature() {
        // ∫_T^∞ sf for Exp(λ) is e^{-λT}/λ; for general ENH compare against
        // brute-force Simpson over a long window.
        let e = enh(1.0, 2.0, 1.0);
        let t = 3.0;
        let tail = Dist::sf_tail_integral(&e, t).unwrap();
        assert!((tail - (-2.0 * t as f64).exp() / 2.0).abs() < 1e-14);

        // For a window [T, T2] the difference of two tails is a finite
        // integral that composite Simpson can certify directly.
        let p = enh(0.5, 1.0, 2.0);
        let t = p.quantile(1.0 - 1e-9).unwrap();
        let t2 = p.quantile(1.0 - 1e-12).unwrap();
        let window =
            Dist::sf_tail_integral(&p, t).unwrap() - Dist::sf_tail_integral(&p, t2).unwrap();
        let n = 200_000;
        let h = (t2 - t) / n as f64;
        let mut acc = Dist::sf(&p, t) + Dist::sf(&p, t2);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * Dist::sf(&p, t + i as f64 * h);
        }
        let brute = acc * h / 3.0;
        assert!(
            (window - brute).abs() <= 1e-9 * window,
            "tail window {window} vs brute {brute}"
        );
    }
}
