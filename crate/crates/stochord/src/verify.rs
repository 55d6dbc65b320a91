//! Theorem harness: every ordering result for series/parallel systems with
//! heterogeneous components becomes a seeded scenario checker, and a
//! counterexample scanner probes parameter space with the hypotheses
//! deliberately relaxed.
//!
//! A scenario trial builds a hypothesis-satisfying instance (or takes an
//! explicit one), evaluates the conclusion components numerically on the
//! working grid, and records any failure with enough information to replay
//! it. Nothing here proves anything: a clean report certifies the scanned
//! instances and grid only.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::copula::{check_n_monotone, check_super_additive, ArchGenerator};
use crate::dist::{Baseline, Dist, EnhParams, EsSpec};
use crate::extremes::{common_max_law, max_density_ratio, min_sf_with, Marginal, MaxDist};
use crate::majorize::{is_weak_supermajorized, random_comparable_pair, Relation};
use crate::math::mix_seed;
use crate::orders::{
    check_convex_transform, check_disp, check_lorenz, check_lr, check_st, OrderName, OrderVerdict,
    MONOTONE_TOL, POINTWISE_TOL,
};
use crate::{Error, ProbGrid, Result};

/// Tolerance for finite-difference surrogates (monotonicity in a parameter,
/// Schur exchange condition); looser than the grid tolerances because the
/// central differences themselves carry O(h^2) truncation.
pub const FD_TOL: f64 = 1e-7;
/// Finite-difference step rule: h = FD_STEP * max(1, |x|).
pub const FD_STEP: f64 = 1e-5;

/// Identifiers for the verified results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum TheoremId {
    /// Parallel systems, shape vectors weakly supermajorized (st order).
    T3_2,
    /// Parallel systems, shape vectors ordered componentwise (st order).
    T3_3,
    /// Parallel systems, scale vectors, α <= 1 (st order, both branches).
    T3_4,
    /// Parallel systems, power-shape sums (lr order, both directions).
    T3_5,
    /// Parallel systems, power-shape sums below 1, α < 1 (dispersive order).
    T3_6,
    /// Parallel systems across two (α, λ) pairs (convex transform order).
    T3_7,
    /// Lorenz consequence of T3_7.
    C_Lorenz,
    /// Series systems under Archimedean dependence (st order).
    T3_8,
    /// T3_8 specialized to the proportional reversed hazards model (λ = 1).
    C_PRH,
    /// T3_8 specialized to ENH marginals (NH baseline, power exponents).
    C_ENH_copula,
    /// x e^{1-x}/(1-e^{1-x}) decreasing on (1, ∞).
    L3_1,
    /// Weak-supermajorization ordering of an increasing Schur-concave map.
    L2_1,
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "T3_2" => TheoremId::T3_2,
            "T3_3" => TheoremId::T3_3,
            "T3_4" => TheoremId::T3_4,
            "T3_5" => TheoremId::T3_5,
            "T3_6" => TheoremId::T3_6,
            "T3_7" => TheoremId::T3_7,
            "C_Lorenz" => TheoremId::C_Lorenz,
            "T3_8" => TheoremId::T3_8,
            "C_PRH" => TheoremId::C_PRH,
            "C_ENH_copula" => TheoremId::C_ENH_copula,
            "L3_1" => TheoremId::L3_1,
            "L2_1" => TheoremId::L2_1,
            other => return Err(Error::Config(format!("unknown theorem id `{other}`"))),
        })
    }
}

pub fn all_theorems() -> [TheoremId; 12] {
    [
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T3_4,
        TheoremId::T3_5,
        TheoremId::T3_6,
        TheoremId::T3_7,
        TheoremId::C_Lorenz,
        TheoremId::T3_8,
        TheoremId::C_PRH,
        TheoremId::C_ENH_copula,
        TheoremId::L3_1,
        TheoremId::L2_1,
    ]
}

/// What a conclusion component certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckLabel {
    Order(OrderName),
    /// The lr verdict agrees with the sign of Σβ - Σβ*.
    IffSignAgreement,
    /// Closed-form composition agrees with the two-quantile route.
    CompositionAgreement,
    /// Hazard of the maximum nonincreasing (DHR premise of the disp result).
    HazardDecreasing,
    /// Survival of the series system ordered pointwise.
    MinSurvivalOrdering,
    /// The decreasing-function lemma holds strictly on its grid.
    GDecreasing,
    /// Exchange condition for Schur-concavity at the trial points.
    SchurExchange,
    /// Coordinatewise monotonicity of the max-cdf in its parameters.
    ParameterMonotone,
    /// Weak-supermajorization pairs order the function values.
    FunctionOrdering,
}

/// One certified inequality with its tightest point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub check: CheckLabel,
    pub holds: bool,
    pub worst_margin: f64,
    pub witness: f64,
}

impl From<OrderVerdict> for CheckVerdict {
    fn from(v: OrderVerdict) -> Self {
        CheckVerdict {
            check: CheckLabel::Order(v.order),
            holds: v.holds,
            worst_margin: v.worst_margin,
            witness: v.witness,
        }
    }
}

/// A failed trial, reproducible from its seed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u32,
    pub seed: u64,
    pub check: CheckLabel,
    pub witness: f64,
    pub margin: f64,
}

/// Aggregated outcome of a scenario run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub theorem_id: TheoremId,
    pub hypotheses_ok: bool,
    /// The worst-margin conclusion verdict observed across all trials;
    /// absent when the hypotheses failed before any conclusion was tested.
    pub conclusion_verdict: Option<CheckVerdict>,
    pub trials: u32,
    pub failures: Vec<TrialFailure>,
    pub notes: Vec<String>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.hypotheses_ok && self.failures.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

/// Hypothesis parameters of one trial, serializable for reproduction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Instance {
    Shape {
        alphas: Vec<f64>,
        alphas_star: Vec<f64>,
        lambda: f64,
        beta: f64,
    },
    Scale {
        lambdas: Vec<f64>,
        lambdas_star: Vec<f64>,
        alpha: f64,
        beta: f64,
    },
    Power {
        betas: Vec<f64>,
        betas_star: Vec<f64>,
        alpha: f64,
        lambda: f64,
    },
    TwoSample {
        alpha1: f64,
        alpha2: f64,
        lambda1: f64,
        lambda2: f64,
        betas: Vec<f64>,
        betas_star: Vec<f64>,
    },
    Copula {
        alphas: Vec<f64>,
        alphas_star: Vec<f64>,
        lambda: f64,
        baseline: Baseline,
        gen1: ArchGenerator,
        gen2: ArchGenerator,
    },
    SchurTrial {
        point: Vec<f64>,
        point_upper: Vec<f64>,
        lambda: f64,
        beta: f64,
        x: f64,
    },
    None {},
}

fn enh_marginals(alphas: &[f64], lambda: f64, beta: f64) -> Result<Vec<Marginal>> {
    alphas
        .iter()
        .map(|&a| EnhParams::new(a, lambda, beta).map(Marginal::Enh))
        .collect()
}

fn enh_scale_marginals(alpha: f64, lambdas: &[f64], beta: f64) -> Result<Vec<Marginal>> {
    lambdas
        .iter()
        .map(|&l| EnhParams::new(alpha, l, beta).map(Marginal::Enh))
        .collect()
}

fn es_marginals(alphas: &[f64], lambda: f64, baseline: Baseline) -> Result<Vec<Marginal>> {
    alphas
        .iter()
        .map(|&a| EsSpec::new(a, lambda, baseline).map(Marginal::Es))
        .collect()
}

// ---------------------------------------------------------------------------
// Hypothesis predicates
// ---------------------------------------------------------------------------

fn check_hypotheses(theorem: TheoremId, inst: &Instance) -> Result<bool> {
    match (theorem, inst) {
        (
            TheoremId::T3_2,
            Instance::Shape {
                alphas,
                alphas_star,
                ..
            },
        ) => is_weak_supermajorized(alphas_star, alphas),
        (
            TheoremId::T3_3,
            Instance::Shape {
                alphas,
                alphas_star,
                ..
            },
        ) => Ok(alphas.iter().zip(alphas_star.iter()).all(|(a, s)| a <= s)),
        (
            TheoremId::T3_4,
            Instance::Scale {
                lambdas,
                lambdas_star,
                alpha,
                ..
            },
        ) => {
            if !(0.0 < *alpha && *alpha <= 1.0) {
                return Ok(false);
            }
            let componentwise = lambdas.iter().zip(lambdas_star.iter()).all(|(l, s)| l <= s);
            Ok(componentwise || is_weak_supermajorized(lambdas_star, lambdas)?)
        }
        (TheoremId::T3_5, Instance::Power { .. }) => Ok(true),
        (
            TheoremId::T3_6,
            Instance::Power {
                betas,
                betas_star,
                alpha,
                ..
            },
        ) => {
            let b: f64 = betas.iter().sum();
            let bs: f64 = betas_star.iter().sum();
            Ok(*alpha < 1.0 && bs <= b && b < 1.0)
        }
        (
            TheoremId::T3_7 | TheoremId::C_Lorenz,
            Instance::TwoSample {
                alpha1,
                alpha2,
                betas,
                betas_star,
                ..
            },
        ) => {
            let b: f64 = betas.iter().sum();
            let bs: f64 = betas_star.iter().sum();
            Ok(alpha1 <= alpha2 && (b - bs).abs() <= 1e-12 * b.max(1.0) * betas.len() as f64)
        }
        (
            TheoremId::T3_8 | TheoremId::C_PRH | TheoremId::C_ENH_copula,
            Instance::Copula {
                alphas,
                alphas_star,
                lambda,
                gen1,
                gen2,
                ..
            },
        ) => {
            if matches!(theorem, TheoremId::C_PRH) && (*lambda - 1.0).abs() > 1e-12 {
                return Ok(false);
            }
            let n = alphas.len();
            if n >= 2 && (!check_n_monotone(gen1, n)?.ok || !check_n_monotone(gen2, n)?.ok) {
                return Ok(false);
            }
            if !check_super_additive(gen2, gen1).super_additive {
                return Ok(false);
            }
            is_weak_supermajorized(alphas_star, alphas)
        }
        (TheoremId::L3_1, Instance::None {}) => Ok(true),
        (
            TheoremId::L2_1,
            Instance::SchurTrial {
                point, point_upper, ..
            },
        ) => is_weak_supermajorized(point, point_upper),
        _ => Err(Error::BadScenario(format!(
            "instance shape does not match {theorem}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Conclusion components
// ---------------------------------------------------------------------------

fn verdict_from_margins(
    check: CheckLabel,
    tol: f64,
    margins: impl Iterator<Item = (f64, f64)>,
) -> CheckVerdict {
    let (mut worst, mut witness) = (f64::INFINITY, f64::NAN);
    let mut any = false;
    for (at, m) in margins {
        any = true;
        if m < worst {
            worst = m;
            witness = at;
        }
    }
    if !any {
        worst = 0.0;
    }
    CheckVerdict {
        check,
        holds: worst >= -tol,
        worst_margin: worst,
        witness,
    }
}

/// The decreasing-function lemma's map x e^{1-x}/(1-e^{1-x}).
pub fn lemma_g(x: f64) -> f64 {
    let q = (1.0 - x).exp();
    x * q / (1.0 - q)
}

/// Strict decrease of `lemma_g` across a grid inside (1, ∞).
pub fn check_lemma_g_decreasing(xs: &[f64]) -> Result<CheckVerdict> {
    if xs.len() < 2 || xs[0] <= 1.0 {
        return Err(Error::InvalidGrid(
            "lemma grid must have >= 2 points inside (1, inf)".into(),
        ));
    }
    let margins = xs.windows(2).map(|w| (w[0], lemma_g(w[0]) - lemma_g(w[1])));
    let mut v = verdict_from_margins(CheckLabel::GDecreasing, 0.0, margins);
    // Strictness: a zero margin is a failure here.
    v.holds = v.worst_margin > 0.0;
    Ok(v)
}

/// Default lemma grid: 10^4 points over (1+1e-6, 50].
pub fn default_lemma_grid() -> Vec<f64> {
    let n = 10_000;
    let (lo, hi) = (1.0 + 1e-6, 50.0);
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Report of a Schur exchange-condition check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchurReport {
    pub holds: bool,
    pub worst_margin: f64,
    pub witness: (usize, usize),
}

fn schur_exchange_margins<F: Fn(&[f64]) -> f64>(
    f: &F,
    point: &[f64],
    step: f64,
) -> Vec<((usize, usize), f64)> {
    let n = point.len();
    let mut grads = Vec::with_capacity(n);
    let mut work = point.to_vec();
    for i in 0..n {
        let h = step * point[i].abs().max(1.0);
        work[i] = point[i] + h;
        let up = f(&work);
        work[i] = point[i] - h;
        let down = f(&work);
        work[i] = point[i];
        grads.push((up - down) / (2.0 * h));
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let raw = (point[i] - point[j]) * (grads[i] - grads[j]);
            let scale = (point[i] - point[j]).abs() * (grads[i].abs() + grads[j].abs());
            out.push(((i, j), -raw / scale.max(1.0)));
        }
    }
    out
}

fn check_step(point: &[f64], step: f64) -> Result<()> {
    // The smallest effective step is step * max(1, |x_i|); reject anything
    // that would vanish in the central difference.
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::NotPositive {
            field: "step",
            value: step,
        });
    }
    for &x in point {
        let h = step * x.abs().max(1.0);
        if x.abs() + h == x.abs() {
            return Err(Error::NotPositive {
                field: "step",
                value: step,
            });
        }
    }
    Ok(())
}

/// Numeric Schur-concavity test: for every index pair,
/// (x_i - x_j)(∂f/∂x_i - ∂f/∂x_j) <= tol via central differences.
pub fn check_schur_concave_numeric<F: Fn(&[f64]) -> f64>(
    f: F,
    point: &[f64],
    step: f64,
) -> Result<SchurReport> {
    check_step(point, step)?;
    let margins = schur_exchange_margins(&f, point, step);
    let (mut worst, mut witness) = (f64::INFINITY, (0, 0));
    for (pair, m) in margins {
        if m < worst {
            worst = m;
            witness = pair;
        }
    }
    if !worst.is_finite() {
        worst = 0.0;
    }
    Ok(SchurReport {
        holds: worst >= -FD_TOL,
        worst_margin: worst,
        witness,
    })
}

/// Numeric Schur-convexity test (the exchange condition with the opposite
/// sign).
pub fn check_schur_convex_numeric<F: Fn(&[f64]) -> f64>(
    f: F,
    point: &[f64],
    step: f64,
) -> Result<SchurReport> {
    check_step(point, step)?;
    let margins = schur_exchange_margins(&f, point, step);
    let (mut worst, mut witness) = (f64::INFINITY, (0, 0));
    for (pair, m) in margins {
        let m = -m;
        if m < worst {
            worst = m;
            witness = pair;
        }
    }
    if !worst.is_finite() {
        worst = 0.0;
    }
    Ok(SchurReport {
        holds: worst >= -FD_TOL,
        worst_margin: worst,
        witness,
    })
}

fn max_cdf_in_alphas(alphas: &[f64], lambda: f64, beta: f64, x: f64) -> f64 {
    alphas
        .iter()
        .map(|&a| {
            Dist::cdf(
                &EnhParams::new(a, lambda, beta).expect("positive trial parameters"),
                x,
            )
        })
        .product()
}

/// Hazard of a law nonincreasing along its own quantile grid.
fn hazard_decreasing_verdict(d: &dyn Dist, grid: &ProbGrid) -> CheckVerdict {
    let hs: Vec<(f64, f64)> = grid
        .points()
        .iter()
        .filter_map(|&u| {
            let x = d.quantile(u);
            let h = d.hazard(x);
            h.is_finite().then_some((x, h))
        })
        .collect();
    let margins = hs.windows(2).map(|w| {
        let scale = w[0].1.abs().max(w[1].1.abs()).max(1.0);
        (w[0].0, (w[0].1 - w[1].1) / scale)
    });
    verdict_from_margins(CheckLabel::HazardDecreasing, POINTWISE_TOL, margins)
}

fn eval_components(
    theorem: TheoremId,
    inst: &Instance,
    grid: &ProbGrid,
) -> Result<Vec<CheckVerdict>> {
    match (theorem, inst) {
        // Largest order statistic grows stochastically when the shape vector
        // shrinks in the weak-supermajorization (or componentwise) sense.
        (
            TheoremId::T3_2 | TheoremId::T3_3,
            Instance::Shape {
                alphas,
                alphas_star,
                lambda,
                beta,
            },
        ) => {
            let star = MaxDist::new(enh_marginals(alphas_star, *lambda, *beta)?)?;
            let max = MaxDist::new(enh_marginals(alphas, *lambda, *beta)?)?;
            Ok(vec![check_st(&star, &max, grid)?.into()])
        }
        (
            TheoremId::T3_4,
            Instance::Scale {
                lambdas,
                lambdas_star,
                alpha,
                beta,
            },
        ) => {
            let star = MaxDist::new(enh_scale_marginals(*alpha, lambdas_star, *beta)?)?;
            let max = MaxDist::new(enh_scale_marginals(*alpha, lambdas, *beta)?)?;
            Ok(vec![check_st(&star, &max, grid)?.into()])
        }
        // The likelihood-ratio ordering of the two maxima holds exactly when
        // Σβ >= Σβ*; both the lr checker and the closed-form density ratio
        // must agree with that sign.
        (
            TheoremId::T3_5,
            Instance::Power {
                betas,
                betas_star,
                alpha,
                lambda,
            },
        ) => {
            let b: f64 = betas.iter().sum();
            let bs: f64 = betas_star.iter().sum();
            let expected = b >= bs;
            let max = common_max_law(*alpha, *lambda, betas)?;
            let star = common_max_law(*alpha, *lambda, betas_star)?;
            let lr = check_lr(&star, &max, grid)?;
            let lr_agrees = CheckVerdict {
                check: CheckLabel::Order(OrderName::Lr),
                holds: lr.holds == expected,
                worst_margin: if expected {
                    lr.worst_margin
                } else {
                    -lr.worst_margin
                },
                witness: lr.witness,
            };
            // Independent route: monotonicity of the closed-form ratio.
            let xs: Vec<f64> = grid
                .points()
                .iter()
                .map(|&u| Dist::quantile(&max, u))
                .collect();
            let mut worst = f64::INFINITY;
            let mut witness = f64::NAN;
            let mut prev = max_density_ratio(*alpha, *lambda, betas, betas_star, xs[0])?;
            for &x in &xs[1..] {
                let r = max_density_ratio(*alpha, *lambda, betas, betas_star, x)?;
                let m = (r - prev) / r.abs().max(prev.abs()).max(1.0);
                if m < worst {
                    worst = m;
                    witness = x;
                }
                prev = r;
            }
            let ratio_monotone = worst >= -MONOTONE_TOL;
            let ratio_agrees = CheckVerdict {
                check: CheckLabel::IffSignAgreement,
                holds: ratio_monotone == expected,
                worst_margin: if expected { worst } else { -worst },
                witness,
            };
            Ok(vec![lr_agrees, ratio_agrees])
        }
        // Dispersive ordering of the maxima, plus the DHR premise of the
        // larger one.
        (
            TheoremId::T3_6,
            Instance::Power {
                betas,
                betas_star,
                alpha,
                lambda,
            },
        ) => {
            let max = common_max_law(*alpha, *lambda, betas)?;
            let star = common_max_law(*alpha, *lambda, betas_star)?;
            let dhr = hazard_decreasing_verdict(&max, grid);
            let disp = check_disp(&star, &max, grid)?;
            Ok(vec![dhr, disp.into()])
        }
        // Convex-transform (or Lorenz) ordering of the maxima across two
        // (α, λ) pairs with matching power-shape totals, cross-checked
        // against the closed-form quantile composition.
        (
            TheoremId::T3_7 | TheoremId::C_Lorenz,
            Instance::TwoSample {
                alpha1,
                alpha2,
                lambda1,
                lambda2,
                betas,
                betas_star,
            },
        ) => {
            let max = common_max_law(*alpha1, *lambda1, betas)?;
            let star = common_max_law(*alpha2, *lambda2, betas_star)?;
            let mut out = Vec::new();
            if theorem == TheoremId::T3_7 {
                out.push(check_convex_transform(&star, &max, grid)?.into());
                // h(x) = ((1+λ2 x)^{α2/α1} - 1)/λ1 must match the
                // quantile-through-cdf composition.
                let c = alpha2 / alpha1;
                let mut worst_dev = 0.0f64;
                let mut witness = f64::NAN;
                for &u in grid.points() {
                    let x = Dist::quantile(&star, u);
                    let composed = Dist::quantile(&max, Dist::cdf(&star, x));
                    let closed = ((c * (lambda2 * x).ln_1p()).exp_m1()) / lambda1;
                    let dev = (composed - closed).abs() / closed.abs().max(1.0);
                    if dev > worst_dev {
                        worst_dev = dev;
                        witness = x;
                    }
                }
                out.push(CheckVerdict {
                    check: CheckLabel::CompositionAgreement,
                    holds: worst_dev <= 1e-7,
                    worst_margin: -worst_dev,
                    witness,
                });
            } else {
                out.push(check_lorenz(&star, &max, grid)?.into());
            }
            Ok(out)
        }
        // Series systems: the min of the α-sample under gen1 is stochastically
        // below the min of the α*-sample under gen2.
        (
            TheoremId::T3_8 | TheoremId::C_PRH | TheoremId::C_ENH_copula,
            Instance::Copula {
                alphas,
                alphas_star,
                lambda,
                baseline,
                gen1,
                gen2,
            },
        ) => {
            let sample = es_marginals(alphas, *lambda, *baseline)?;
            let sample_star = es_marginals(alphas_star, *lambda, *baseline)?;
            let mut xs: Vec<f64> = grid
                .points()
                .iter()
                .flat_map(|&u| {
                    sample
                        .iter()
                        .chain(sample_star.iter())
                        .map(move |m| m.dist().quantile(u))
                })
                .collect();
            xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            xs.dedup();
            let margins = xs.iter().map(|&x| {
                let sf = min_sf_with(gen1, &sample, x);
                let sf_star = min_sf_with(gen2, &sample_star, x);
                (x, sf_star - sf)
            });
            Ok(vec![verdict_from_margins(
                CheckLabel::MinSurvivalOrdering,
                POINTWISE_TOL,
                margins,
            )])
        }
        (TheoremId::L3_1, Instance::None {}) => {
            Ok(vec![check_lemma_g_decreasing(&default_lemma_grid())?])
        }
        // The max-cdf as a function of the shape vector is increasing and
        // Schur-concave, so weak supermajorization orders its values.
        (
            TheoremId::L2_1,
            Instance::SchurTrial {
                point,
                point_upper,
                lambda,
                beta,
                x,
            },
        ) => {
            let f = |v: &[f64]| max_cdf_in_alphas(v, *lambda, *beta, *x);
            let mut increasing_margins = Vec::new();
            for base in [point.as_slice(), point_upper.as_slice()] {
                let mut work = base.to_vec();
                for i in 0..base.len() {
                    let h = FD_STEP * base[i].abs().max(1.0);
                    work[i] = base[i] + h;
                    let up = f(&work);
                    work[i] = base[i] - h;
                    let down = f(&work);
                    work[i] = base[i];
                    increasing_margins.push((base[i], (up - down) / (2.0 * h)));
                }
            }
            let increasing = verdict_from_margins(
                CheckLabel::ParameterMonotone,
                FD_TOL,
                increasing_margins.into_iter(),
            );
            let s1 = check_schur_concave_numeric(f, point, FD_STEP)?;
            let s2 = check_schur_concave_numeric(f, point_upper, FD_STEP)?;
            let schur = CheckVerdict {
                check: CheckLabel::SchurExchange,
                holds: s1.holds && s2.holds,
                worst_margin: s1.worst_margin.min(s2.worst_margin),
                witness: point[s1.witness.0.min(point.len() - 1)],
            };
            // point ⪯^w point_upper and f increasing Schur-concave imply
            // f(point) >= f(point_upper).
            let ordering = CheckVerdict {
                check: CheckLabel::FunctionOrdering,
                holds: f(point) >= f(point_upper) - POINTWISE_TOL,
                worst_margin: f(point) - f(point_upper),
                witness: *x,
            };
            Ok(vec![increasing, schur, ordering])
        }
        _ => Err(Error::BadScenario(format!(
            "instance shape does not match {theorem}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Randomized instance generation
// ---------------------------------------------------------------------------

const A_DOM: (f64, f64) = (0.3, 3.0);
const L_DOM: (f64, f64) = (0.3, 3.0);
const B_DOM: (f64, f64) = (0.3, 3.0);
const THETA_GAP: f64 = 1e-3;

fn split_total(total: f64, n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let ws: Vec<f64> = (0..n).map(|_| rng.random_range(0.2..1.0)).collect();
    let s: f64 = ws.iter().sum();
    ws.iter().map(|w| total * w / s).collect()
}

fn gen_instance(theorem: TheoremId, n: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Instance> {
    Ok(match theorem {
        TheoremId::T3_2 => {
            let (alphas_star, alphas) =
                random_comparable_pair(n, Relation::WeakSuper, mix_seed(seed, 101), A_DOM)?;
            Instance::Shape {
                alphas,
                alphas_star,
                lambda: rng.random_range(L_DOM.0..L_DOM.1),
                beta: rng.random_range(B_DOM.0..B_DOM.1),
            }
        }
        TheoremId::T3_3 => {
            let alphas_star: Vec<f64> =
                (0..n).map(|_| rng.random_range(A_DOM.0..A_DOM.1)).collect();
            let alphas: Vec<f64> = alphas_star
                .iter()
                .map(|&s| A_DOM.0 + rng.random_range(0.0..1.0) * (s - A_DOM.0))
                .collect();
            Instance::Shape {
                alphas,
                alphas_star,
                lambda: rng.random_range(L_DOM.0..L_DOM.1),
                beta: rng.random_range(B_DOM.0..B_DOM.1),
            }
        }
        TheoremId::T3_4 => {
            let (lambdas_star, lambdas) = if seed % 2 == 0 {
                random_comparable_pair(n, Relation::WeakSuper, mix_seed(seed, 102), L_DOM)?
            } else {
                let base: Vec<f64> = (0..n).map(|_| rng.random_range(L_DOM.0..L_DOM.1)).collect();
                let upper: Vec<f64> = base
                    .iter()
                    .map(|&l| l + rng.random_range(0.0..1.0) * (L_DOM.1 - l))
                    .collect();
                (upper, base)
            };
            Instance::Scale {
                lambdas,
                lambdas_star,
                alpha: rng.random_range(0.15..1.0),
                beta: rng.random_range(B_DOM.0..B_DOM.1),
            }
        }
        TheoremId::T3_5 => loop {
            let betas: Vec<f64> = (0..n).map(|_| rng.random_range(B_DOM.0..B_DOM.1)).collect();
            let betas_star: Vec<f64> = (0..n).map(|_| rng.random_range(B_DOM.0..B_DOM.1)).collect();
            let gap: f64 = betas.iter().sum::<f64>() - betas_star.iter().sum::<f64>();
            if gap.abs() >= 0.05 {
                break Instance::Power {
                    betas,
                    betas_star,
                    alpha: rng.random_range(A_DOM.0..A_DOM.1),
                    lambda: rng.random_range(L_DOM.0..L_DOM.1),
                };
            }
        },
        TheoremId::T3_6 => {
            let total = rng.random_range(0.15..0.9);
            let total_star = total * rng.random_range(0.2..1.0);
            Instance::Power {
                betas: split_total(total, n, rng),
                betas_star: split_total(total_star, n, rng),
                alpha: rng.random_range(0.15..0.95),
                lambda: rng.random_range(L_DOM.0..L_DOM.1),
            }
        }
        TheoremId::T3_7 | TheoremId::C_Lorenz => {
            let alpha1 = rng.random_range(A_DOM.0..A_DOM.1);
            let alpha2 = alpha1 + rng.random_range(0.0..(A_DOM.1 - alpha1));
            let total = rng.random_range(0.5..4.0);
            Instance::TwoSample {
                alpha1,
                alpha2,
                lambda1: rng.random_range(L_DOM.0..L_DOM.1),
                lambda2: rng.random_range(L_DOM.0..L_DOM.1),
                betas: split_total(total, n, rng),
                betas_star: split_total(total, n, rng),
            }
        }
        TheoremId::T3_8 | TheoremId::C_PRH | TheoremId::C_ENH_copula => {
            let (alphas_star, alphas) =
                random_comparable_pair(n, Relation::WeakSuper, mix_seed(seed, 103), A_DOM)?;
            let baseline = if theorem == TheoremId::C_ENH_copula || seed % 2 == 0 {
                Baseline::nh(rng.random_range(0.3..3.0))?
            } else {
                Baseline::Exponential
            };
            let lambda = if theorem == TheoremId::C_PRH {
                1.0
            } else {
                rng.random_range(L_DOM.0..L_DOM.1)
            };
            let (gen1, gen2) = match seed % 3 {
                0 => (
                    ArchGenerator::independence(),
                    ArchGenerator::gumbel(rng.random_range(1.0..3.0))?,
                ),
                1 => {
                    let t1 = rng.random_range(1.0..2.5);
                    let t2 = t1 + THETA_GAP + rng.random_range(0.0..1.5);
                    (ArchGenerator::gumbel(t1)?, ArchGenerator::gumbel(t2)?)
                }
                _ => {
                    let t1 = rng.random_range(0.5..2.5);
                    let t2 = t1 + THETA_GAP + rng.random_range(0.0..1.5);
                    (ArchGenerator::clayton(t1)?, ArchGenerator::clayton(t2)?)
                }
            };
            Instance::Copula {
                alphas,
                alphas_star,
                lambda,
                baseline,
                gen1,
                gen2,
            }
        }
        TheoremId::L3_1 => Instance::None {},
        TheoremId::L2_1 => {
            let (point, point_upper) =
                random_comparable_pair(n, Relation::WeakSuper, mix_seed(seed, 104), A_DOM)?;
            let lambda = rng.random_range(L_DOM.0..L_DOM.1);
            let beta = rng.random_range(B_DOM.0..B_DOM.1);
            let mid = point_upper.iter().sum::<f64>() / point_upper.len() as f64;
            let probe = EnhParams::new(mid, lambda, beta)?;
            let x = probe.quantile(rng.random_range(0.1..0.9))?;
            Instance::SchurTrial {
                point,
                point_upper,
                lambda,
                beta,
                x,
            }
        }
    })
}

// ---------------------------------------------------------------------------
// Scenario running
// ---------------------------------------------------------------------------

/// Settings of one randomized scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSettings {
    pub theorem_id: TheoremId,
    /// Sample size; when absent each trial draws n in {2,...,5}.
    pub n: Option<usize>,
    pub trials: u32,
    pub seed: u64,
}

fn run_trial(
    theorem: TheoremId,
    inst: &Instance,
    grid: &ProbGrid,
    trial: u32,
    seed: u64,
    report: &mut ScenarioReport,
) -> Result<()> {
    let comps = eval_components(theorem, inst, grid)?;
    for c in comps {
        let worse = match &report.conclusion_verdict {
            Some(cur) => c.worst_margin < cur.worst_margin,
            None => true,
        };
        if worse {
            report.conclusion_verdict = Some(c);
        }
        if !c.holds {
            report.failures.push(TrialFailure {
                trial,
                seed,
                check: c.check,
                witness: c.witness,
                margin: c.worst_margin,
            });
        }
    }
    Ok(())
}

/// Run `trials` randomized hypothesis-satisfying trials of one theorem.
pub fn run_scenario(settings: &ScenarioSettings, grid: &ProbGrid) -> Result<ScenarioReport> {
    let mut report = ScenarioReport {
        theorem_id: settings.theorem_id,
        hypotheses_ok: true,
        conclusion_verdict: None,
        trials: settings.trials,
        failures: Vec::new(),
        notes: Vec::new(),
    };
    for trial in 0..settings.trials {
        let trial_seed = mix_seed(settings.seed, trial as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let n = settings.n.unwrap_or_else(|| 2 + (trial_seed % 4) as usize);
        let inst = gen_instance(settings.theorem_id, n, trial_seed, &mut rng)?;
        if !check_hypotheses(settings.theorem_id, &inst)? {
            // Construction guarantees the hypotheses; reaching this means the
            // generator and predicate disagree, which is itself a failure.
            report.hypotheses_ok = false;
            report.notes.push(format!(
                "trial {trial}: generated instance failed its own hypotheses"
            ));
            continue;
        }
        run_trial(
            settings.theorem_id,
            &inst,
            grid,
            trial,
            trial_seed,
            &mut report,
        )?;
    }
    Ok(report)
}

impl Instance {
    /// Sample size implied by the parameter vectors.
    pub fn dimension(&self) -> usize {
        match self {
            Instance::Shape { alphas, .. } => alphas.len(),
            Instance::Scale { lambdas, .. } => lambdas.len(),
            Instance::Power { betas, .. } => betas.len(),
            Instance::TwoSample { betas, .. } => betas.len(),
            Instance::Copula { alphas, .. } => alphas.len(),
            Instance::SchurTrial { point, .. } => point.len(),
            Instance::None {} => 2,
        }
    }
}

/// Run an explicit instance as trial 0, then `n_trials - 1` randomized
/// hypothesis-satisfying trials of the same sample size.
pub fn run_explicit_scenario(
    theorem: TheoremId,
    inst: &Instance,
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    explicit_report(theorem, inst, inst.dimension(), n_trials, seed, grid)
}

fn explicit_report(
    theorem: TheoremId,
    inst: &Instance,
    n: usize,
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    let mut report = ScenarioReport {
        theorem_id: theorem,
        hypotheses_ok: check_hypotheses(theorem, inst)?,
        conclusion_verdict: None,
        trials: 0,
        failures: Vec::new(),
        notes: Vec::new(),
    };
    if !report.hypotheses_ok {
        return Ok(report);
    }
    report.trials = 1;
    run_trial(theorem, inst, grid, 0, seed, &mut report)?;
    // Additional randomized trials of the same sample size.
    for trial in 1..n_trials {
        let trial_seed = mix_seed(seed, trial as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let rand_inst = gen_instance(theorem, n, trial_seed, &mut rng)?;
        if check_hypotheses(theorem, &rand_inst)? {
            report.trials += 1;
            run_trial(theorem, &rand_inst, grid, trial, trial_seed, &mut report)?;
        }
    }
    Ok(report)
}

/// Largest order statistics ordered stochastically along shape vectors
/// (weak-supermajorization hypothesis; the componentwise variant is the
/// T3_3 branch).
pub fn verify_max_st_shape(
    alphas: &[f64],
    alphas_star: &[f64],
    lambda: f64,
    beta: f64,
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    let inst = Instance::Shape {
        alphas: alphas.to_vec(),
        alphas_star: alphas_star.to_vec(),
        lambda,
        beta,
    };
    // Componentwise dominance implies the weak-supermajorization relation,
    // so the T3_3 branch only fires when the stronger hypothesis fails.
    let theorem = if is_weak_supermajorized(alphas_star, alphas)? {
        TheoremId::T3_2
    } else {
        TheoremId::T3_3
    };
    explicit_report(theorem, &inst, alphas.len(), n_trials, seed, grid)
}

/// Largest order statistics ordered stochastically along scale vectors for
/// α <= 1 (weak-supermajorization or componentwise hypothesis).
pub fn verify_max_st_scale(
    lambdas: &[f64],
    lambdas_star: &[f64],
    alpha: f64,
    beta: f64,
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    let inst = Instance::Scale {
        lambdas: lambdas.to_vec(),
        lambdas_star: lambdas_star.to_vec(),
        alpha,
        beta,
    };
    explicit_report(TheoremId::T3_4, &inst, lambdas.len(), n_trials, seed, grid)
}

/// Likelihood-ratio comparison of maxima driven by the power-shape totals
/// (both directions of the equivalence).
pub fn verify_max_lr(
    alpha: f64,
    lambda: f64,
    betas: &[f64],
    betas_star: &[f64],
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    let inst = Instance::Power {
        betas: betas.to_vec(),
        betas_star: betas_star.to_vec(),
        alpha,
        lambda,
    };
    explicit_report(TheoremId::T3_5, &inst, betas.len(), n_trials, seed, grid)
}

/// Dispersive comparison of maxima for α < 1 and power-shape totals below 1,
/// including the DHR premise.
pub fn verify_max_disp(
    alpha: f64,
    lambda: f64,
    betas: &[f64],
    betas_star: &[f64],
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    let inst = Instance::Power {
        betas: betas.to_vec(),
        betas_star: betas_star.to_vec(),
        alpha,
        lambda,
    };
    explicit_report(TheoremId::T3_6, &inst, betas.len(), n_trials, seed, grid)
}

/// Convex-transform comparison of maxima across two (α, λ) pairs with equal
/// power-shape totals; `with_lorenz` also asserts the Lorenz consequence.
#[allow(clippy::too_many_arguments)]
pub fn verify_max_convex_transform(
    alpha1: f64,
    alpha2: f64,
    lambda1: f64,
    lambda2: f64,
    betas: &[f64],
    betas_star: &[f64],
    with_lorenz: bool,
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    let inst = Instance::TwoSample {
        alpha1,
        alpha2,
        lambda1,
        lambda2,
        betas: betas.to_vec(),
        betas_star: betas_star.to_vec(),
    };
    let mut report = explicit_report(TheoremId::T3_7, &inst, betas.len(), n_trials, seed, grid)?;
    if with_lorenz && report.hypotheses_ok {
        let lorenz = explicit_report(
            TheoremId::C_Lorenz,
            &inst,
            betas.len(),
            n_trials,
            seed,
            grid,
        )?;
        report.failures.extend(lorenz.failures);
        if let Some(v) = lorenz.conclusion_verdict {
            let worse = match &report.conclusion_verdict {
                Some(cur) => v.worst_margin < cur.worst_margin,
                None => true,
            };
            if worse {
                report.conclusion_verdict = Some(v);
            }
        }
    }
    Ok(report)
}

/// Stochastic comparison of series-system lifetimes under two Archimedean
/// generators whose composition ψ2 ∘ φ1 is super-additive.
#[allow(clippy::too_many_arguments)]
pub fn verify_min_st_copula(
    alphas: &[f64],
    alphas_star: &[f64],
    lambda: f64,
    baseline: Baseline,
    gen1: ArchGenerator,
    gen2: ArchGenerator,
    n_trials: u32,
    seed: u64,
    grid: &ProbGrid,
) -> Result<ScenarioReport> {
    let inst = Instance::Copula {
        alphas: alphas.to_vec(),
        alphas_star: alphas_star.to_vec(),
        lambda,
        baseline,
        gen1,
        gen2,
    };
    let theorem = if (lambda - 1.0).abs() < 1e-12 {
        TheoremId::C_PRH
    } else {
        TheoremId::T3_8
    };
    let mut report = explicit_report(theorem, &inst, alphas.len(), n_trials, seed, grid)?;
    report.notes.push("common scale".into());
    Ok(report)
}

// ---------------------------------------------------------------------------
// Counterexample scanning
// ---------------------------------------------------------------------------

/// Sampling ranges for the scanner; defaults deliberately include
/// hypothesis-violating regions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanRanges {
    pub alpha: (f64, f64),
    pub lambda: (f64, f64),
    pub beta: (f64, f64),
    pub theta: (f64, f64),
}

impl Default for ScanRanges {
    fn default() -> Self {
        ScanRanges {
            alpha: (0.2, 3.0),
            lambda: (0.3, 3.0),
            beta: (0.2, 3.0),
            theta: (1.0, 4.0),
        }
    }
}

/// Whether the scanner samples freely over the ranges or constructs
/// hypothesis-satisfying instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    Free,
    WithinHypotheses,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSettings {
    pub theorem_id: TheoremId,
    pub samples: u32,
    pub seed: u64,
    pub mode: ScanMode,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub ranges: Option<ScanRanges>,
}

/// One conclusion violation found by the scanner, with everything needed to
/// reproduce it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub sample: u32,
    pub seed: u64,
    pub check: CheckLabel,
    pub params: Instance,
    pub witness: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanReport {
    pub theorem_id: TheoremId,
    pub mode: ScanMode,
    pub samples: u32,
    pub violations: Vec<Violation>,
}

fn free_instance(
    theorem: TheoremId,
    n: usize,
    ranges: &ScanRanges,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Instance> {
    let unif = |rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)| rng.random_range(lo..hi);
    Ok(match theorem {
        TheoremId::T3_2 | TheoremId::T3_3 => Instance::Shape {
            alphas: (0..n).map(|_| unif(rng, ranges.alpha)).collect(),
            alphas_star: (0..n).map(|_| unif(rng, ranges.alpha)).collect(),
            lambda: unif(rng, ranges.lambda),
            beta: unif(rng, ranges.beta),
        },
        TheoremId::T3_4 => Instance::Scale {
            lambdas: (0..n).map(|_| unif(rng, ranges.lambda)).collect(),
            lambdas_star: (0..n).map(|_| unif(rng, ranges.lambda)).collect(),
            alpha: unif(rng, ranges.alpha),
            beta: unif(rng, ranges.beta),
        },
        TheoremId::T3_5 | TheoremId::T3_6 => Instance::Power {
            betas: (0..n).map(|_| unif(rng, ranges.beta)).collect(),
            betas_star: (0..n).map(|_| unif(rng, ranges.beta)).collect(),
            alpha: unif(rng, ranges.alpha),
            lambda: unif(rng, ranges.lambda),
        },
        TheoremId::T3_7 | TheoremId::C_Lorenz => Instance::TwoSample {
            alpha1: unif(rng, ranges.alpha),
            alpha2: unif(rng, ranges.alpha),
            lambda1: unif(rng, ranges.lambda),
            lambda2: unif(rng, ranges.lambda),
            betas: (0..n).map(|_| unif(rng, ranges.beta)).collect(),
            betas_star: (0..n).map(|_| unif(rng, ranges.beta)).collect(),
        },
        TheoremId::T3_8 | TheoremId::C_PRH | TheoremId::C_ENH_copula => {
            let baseline = if seed % 2 == 0 {
                Baseline::nh(unif(rng, ranges.alpha))?
            } else {
                Baseline::Exponential
            };
            Instance::Copula {
                alphas: (0..n).map(|_| unif(rng, ranges.alpha)).collect(),
                alphas_star: (0..n).map(|_| unif(rng, ranges.alpha)).collect(),
                lambda: if theorem == TheoremId::C_PRH {
                    1.0
                } else {
                    unif(rng, ranges.lambda)
                },
                baseline,
                gen1: ArchGenerator::gumbel(unif(rng, ranges.theta))?,
                gen2: ArchGenerator::gumbel(unif(rng, ranges.theta))?,
            }
        }
        TheoremId::L3_1 => Instance::None {},
        TheoremId::L2_1 => {
            let point: Vec<f64> = (0..n).map(|_| unif(rng, ranges.alpha)).collect();
            let point_upper: Vec<f64> = (0..n).map(|_| unif(rng, ranges.alpha)).collect();
            let lambda = unif(rng, ranges.lambda);
            let beta = unif(rng, ranges.beta);
            let mid = point_upper.iter().sum::<f64>() / n as f64;
            let x = EnhParams::new(mid, lambda, beta)?.quantile(rng.random_range(0.1..0.9))?;
            Instance::SchurTrial {
                point,
                point_upper,
                lambda,
                beta,
                x,
            }
        }
    })
}

/// Conclusion components as a free scan sees them: the directional claims
/// themselves. For the lr equivalence this is the forward assertion
/// "max of the β-sample above the β*-sample in lr", which the converse
/// parameter region genuinely violates.
fn eval_scan_components(
    theorem: TheoremId,
    inst: &Instance,
    grid: &ProbGrid,
) -> Result<Vec<CheckVerdict>> {
    if theorem == TheoremId::T3_5 {
        if let Instance::Power {
            betas,
            betas_star,
            alpha,
            lambda,
        } = inst
        {
            let max = common_max_law(*alpha, *lambda, betas)?;
            let star = common_max_law(*alpha, *lambda, betas_star)?;
            return Ok(vec![check_lr(&star, &max, grid)?.into()]);
        }
    }
    eval_components(theorem, inst, grid)
}

/// Sample parameter tuples, evaluate the conclusion regardless of the
/// hypotheses (in `Free` mode), and record every violation found. The scan
/// never claims necessity; it only reports what it saw.
pub fn counterexample_scan(settings: &ScanSettings, grid: &ProbGrid) -> Result<ScanReport> {
    let ranges = settings.ranges.unwrap_or_default();
    let mut report = ScanReport {
        theorem_id: settings.theorem_id,
        mode: settings.mode,
        samples: settings.samples,
        violations: Vec::new(),
    };
    for sample in 0..settings.samples {
        let sample_seed = mix_seed(settings.seed, sample as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed);
        let n = settings.n.unwrap_or(2 + (sample_seed % 4) as usize);
        let inst = match settings.mode {
            ScanMode::Free => {
                free_instance(settings.theorem_id, n, &ranges, sample_seed, &mut rng)?
            }
            ScanMode::WithinHypotheses => {
                let inst = gen_instance(settings.theorem_id, n, sample_seed, &mut rng)?;
                if !check_hypotheses(settings.theorem_id, &inst)? {
                    continue;
                }
                inst
            }
        };
        let comps = match settings.mode {
            ScanMode::Free => eval_scan_components(settings.theorem_id, &inst, grid)?,
            ScanMode::WithinHypotheses => eval_components(settings.theorem_id, &inst, grid)?,
        };
        for c in comps {
            if !c.holds {
                report.violations.push(Violation {
                    sample,
                    seed: sample_seed,
                    check: c.check,
                    params: inst.clone(),
                    witness: c.witness,
                    margin: c.worst_margin,
                });
            }
        }
    }
    Ok(report)
}
