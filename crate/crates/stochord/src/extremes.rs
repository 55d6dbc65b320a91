//! Exact distributions of the largest and smallest order statistics for
//! heterogeneous samples, independent or coupled through an Archimedean
//! copula.
//!
//! For independent components the maximum has CDF Π F_i(x) (a parallel
//! system); the minimum's survival under a generator φ is
//! φ(Σ ψ(1 - G^{α_i}(λ_i x))) (a series system), which reduces to the product
//! of survivals for the independence generator.

use serde::{Deserialize, Serialize};

use crate::copula::{check_n_monotone, ArchGenerator};
use crate::dist::{Baseline, Dist, EnhParams, EsSpec};
use crate::math::find_root_increasing;
use crate::{Error, Result};

/// One component's marginal law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Marginal {
    Enh(EnhParams),
    Es(EsSpec),
}

impl Marginal {
    /// View as an ES law (ENH(α,λ,β) is ES with an NH(α) baseline and
    /// exponent β).
    pub fn as_es(&self) -> EsSpec {
        match self {
            Marginal::Es(s) => *s,
            Marginal::Enh(p) => {
                EsSpec::new(p.beta(), p.lambda(), Baseline::Nh { alpha: p.alpha() })
                    .expect("valid ENH params convert to valid ES")
            }
        }
    }

    pub fn dist(&self) -> &dyn Dist {
        match self {
            Marginal::Enh(p) => p,
            Marginal::Es(s) => s,
        }
    }
}

/// Dependence structure of a sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Dependence {
    Independent,
    Archimedean(ArchGenerator),
}

/// n marginal laws plus how they are coupled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    marginals: Vec<Marginal>,
    dependence: Dependence,
}

impl SampleSpec {
    /// Build a sample spec; an Archimedean generator must pass the numeric
    /// n-monotonicity check for the sample size.
    pub fn new(marginals: Vec<Marginal>, dependence: Dependence) -> Result<Self> {
        if marginals.is_empty() {
            return Err(Error::EmptySample);
        }
        if let Dependence::Archimedean(g) = &dependence {
            g.validate()?;
            if marginals.len() >= 2 {
                let rep = check_n_monotone(g, marginals.len())?;
                if !rep.ok {
                    return Err(Error::GeneratorNotNMonotone {
                        n: marginals.len(),
                        witness: rep.witness.map(|(_, t)| t).unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(Self {
            marginals,
            dependence,
        })
    }

    pub fn independent(marginals: Vec<Marginal>) -> Result<Self> {
        Self::new(marginals, Dependence::Independent)
    }

    pub fn marginals(&self) -> &[Marginal] {
        &self.marginals
    }

    pub fn dependence(&self) -> &Dependence {
        &self.dependence
    }

    pub fn len(&self) -> usize {
        self.marginals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marginals.is_empty()
    }

    /// The common scale when all marginals share one; the min-survival
    /// formula is stated for that regime, heterogeneous scales are a strict
    /// generalization and callers may want to report which one applies.
    pub fn common_scale(&self) -> Option<f64> {
        let first = self.marginals[0].as_es().lambda();
        for m in &self.marginals[1..] {
            if (m.as_es().lambda() - first).abs() > 1e-12 * first.abs() {
                return None;
            }
        }
        Some(first)
    }
}

/// CDF of the sample maximum under independence: Π F_i(x).
pub fn max_cdf(s: &SampleSpec, x: f64) -> Result<f64> {
    if !matches!(s.dependence, Dependence::Independent) {
        return Err(Error::WrongDependence);
    }
    if x < 0.0 || !x.is_finite() {
        return Err(Error::NegativeX(x));
    }
    Ok(s.marginals.iter().map(|m| m.dist().cdf(x)).product())
}

/// Density of the maximum when all components share α and λ and differ only
/// in the power shapes: the maximum is then ENH(α, λ, Σβ_i).
pub fn max_pdf_common(alpha: f64, lambda: f64, betas: &[f64], x: f64) -> Result<f64> {
    if x < 0.0 || !x.is_finite() {
        return Err(Error::NegativeX(x));
    }
    common_max_law(alpha, lambda, betas)?.pdf(x)
}

/// Ratio of the maximum densities of two common-(α, λ) samples with power
/// shapes `betas` and `betas_star`:
/// (Σβ/Σβ*)(1 - e^{1-(1+λx)^α})^{Σβ - Σβ*}, increasing in x iff Σβ >= Σβ*.
pub fn max_density_ratio(
    alpha: f64,
    lambda: f64,
    betas: &[f64],
    betas_star: &[f64],
    x: f64,
) -> Result<f64> {
    if x < 0.0 || !x.is_finite() {
        return Err(Error::NegativeX(x));
    }
    let b = positive_sum("betas", betas)?;
    let bs = positive_sum("betas_star", betas_star)?;
    let base = common_max_law(alpha, lambda, &[1.0])?;
    // ln(1 - e^z) from the unit-power law's cdf.
    let ln_base = Dist::cdf(&base, x).ln();
    Ok((b / bs) * ((b - bs) * ln_base).exp())
}

fn positive_sum(field: &'static str, v: &[f64]) -> Result<f64> {
    if v.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut sum = 0.0;
    for &b in v {
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::NotPositive { field, value: b });
        }
        sum += b;
    }
    Ok(sum)
}

/// The law of the maximum of independent ENH(α, λ, β_i): ENH(α, λ, Σβ_i).
pub fn common_max_law(alpha: f64, lambda: f64, betas: &[f64]) -> Result<EnhParams> {
    let total = positive_sum("betas", betas)?;
    EnhParams::new(alpha, lambda, total)
}

/// Survival of the sample minimum under Archimedean dependence:
/// φ(Σ_i ψ(1 - G^{α_i}(λ_i x))). Handles the independence generator as the
/// product of survivals.
pub fn min_sf_archimedean(s: &SampleSpec, x: f64) -> Result<f64> {
    if x < 0.0 || !x.is_finite() {
        return Err(Error::NegativeX(x));
    }
    let g = match &s.dependence {
        Dependence::Archimedean(g) => *g,
        Dependence::Independent => ArchGenerator::Independence,
    };
    Ok(min_sf_with(&g, &s.marginals, x))
}

pub(crate) fn min_sf_with(g: &ArchGenerator, marginals: &[Marginal], x: f64) -> f64 {
    let mut sum = 0.0;
    for m in marginals {
        let sf = m.dist().sf(x);
        if sf <= 0.0 {
            return 0.0;
        }
        sum += g.psi_from_ln_u(sf.ln());
    }
    g.phi_at(sum)
}

/// Survival of the minimum of an independent sample: Π (1 - F_i(x)).
pub fn min_sf_independent(s: &SampleSpec, x: f64) -> Result<f64> {
    if !matches!(s.dependence, Dependence::Independent) {
        return Err(Error::WrongDependence);
    }
    if x < 0.0 || !x.is_finite() {
        return Err(Error::NegativeX(x));
    }
    Ok(s.marginals.iter().map(|m| m.dist().sf(x)).product())
}

/// Distribution handle for the maximum of independent heterogeneous
/// marginals; the quantile is found by bracketed root search.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxDist {
    marginals: Vec<Marginal>,
}

impl MaxDist {
    pub fn new(marginals: Vec<Marginal>) -> Result<Self> {
        if marginals.is_empty() {
            return Err(Error::EmptySample);
        }
        Ok(Self { marginals })
    }

    pub fn from_spec(s: &SampleSpec) -> Result<Self> {
        if !matches!(s.dependence, Dependence::Independent) {
            return Err(Error::WrongDependence);
        }
        Self::new(s.marginals.clone())
    }
}

impl Dist for MaxDist {
    fn cdf(&self, x: f64) -> f64 {
        self.marginals.iter().map(|m| m.dist().cdf(x)).product()
    }

    fn sf(&self, x: f64) -> f64 {
        1.0 - self.cdf(x)
    }

    fn pdf(&self, x: f64) -> f64 {
        // Σ_i f_i Π_{j≠i} F_j, assembled without dividing by possibly-zero
        // cdf factors.
        let n = self.marginals.len();
        let cdfs: Vec<f64> = self.marginals.iter().map(|m| m.dist().cdf(x)).collect();
        let mut total = 0.0;
        for i in 0..n {
            let mut term = self.marginals[i].dist().pdf(x);
            for (j, &c) in cdfs.iter().enumerate() {
                if j != i {
                    term *= c;
                }
            }
            total += term;
        }
        total
    }

    fn quantile(&self, u: f64) -> f64 {
        // Π F_i(x) <= F_i(x) gives the bracket
        // [max_i Q_i(u), max_i Q_i(u^{1/n})].
        let n = self.marginals.len() as f64;
        let lo = self
            .marginals
            .iter()
            .map(|m| m.dist().quantile(u))
            .fold(0.0f64, f64::max);
        let hi = self
            .marginals
            .iter()
            .map(|m| m.dist().quantile(u.powf(1.0 / n)))
            .fold(lo, f64::max);
        if hi <= lo {
            return lo;
        }
        find_root_increasing(|x| self.cdf(x) - u, lo, hi)
    }

    fn sf_tail_integral(&self, x: f64) -> Option<f64> {
        // 1 - Π F_i <= Σ sf_i; beyond an extreme quantile the cross terms are
        // O(sf^2) and the sum of marginal tails is exact enough.
        let mut total = 0.0;
        for m in &self.marginals {
            total += m.dist().sf_tail_integral(x)?;
        }
        Some(total)
    }
}
