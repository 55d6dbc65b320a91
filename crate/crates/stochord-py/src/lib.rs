//! Python bindings: the ENH/ES laws, Archimedean generators, sample extremes,
//! majorization predicates, order checkers, and the theorem harness.
//!
//! Build the cdylib with `cargo build -p stochord-py --release`, rename
//! `libstochord_py.so` to `stochord_py.so` somewhere on `sys.path`, and
//! `import stochord_py`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use stochord::config as sconfig;
use stochord::copula::{check_n_monotone, check_super_additive, ArchGenerator};
use stochord::dist::{hazard_shape_of, Baseline, Dist, EnhParams, EsSpec};
use stochord::extremes::{self, Dependence, Marginal, MaxDist, SampleSpec};
use stochord::majorize;
use stochord::orders::{self, OrderName};
use stochord::verify::{run_scenario, ScenarioSettings, TheoremId};
use stochord::ProbGrid;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn grid(points: usize, u_min: f64, u_max: f64) -> PyResult<ProbGrid> {
    ProbGrid::new(points, u_min, u_max).map_err(err)
}

/// An exponentiated Nadarajah-Haghighi law ENH(alpha, lam, beta).
#[pyclass(name = "Enh", from_py_object)]
#[derive(Clone)]
struct PyEnh {
    inner: EnhParams,
}

#[pymethods]
impl PyEnh {
    #[new]
    fn new(alpha: f64, lam: f64, beta: f64) -> PyResult<Self> {
        Ok(Self {
            inner: EnhParams::new(alpha, lam, beta).map_err(err)?,
        })
    }

    #[staticmethod]
    fn exponential(lam: f64) -> PyResult<Self> {
        Ok(Self {
            inner: EnhParams::exponential(lam).map_err(err)?,
        })
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.alpha()
    }

    #[getter]
    fn lam(&self) -> f64 {
        self.inner.lambda()
    }

    #[getter]
    fn beta(&self) -> f64 {
        self.inner.beta()
    }

    fn cdf(&self, x: f64) -> PyResult<f64> {
        self.inner.cdf(x).map_err(err)
    }

    fn sf(&self, x: f64) -> PyResult<f64> {
        self.inner.sf(x).map_err(err)
    }

    fn pdf(&self, x: f64) -> PyResult<f64> {
        self.inner.pdf(x).map_err(err)
    }

    fn quantile(&self, u: f64) -> PyResult<f64> {
        self.inner.quantile(u).map_err(err)
    }

    fn hazard(&self, x: f64) -> PyResult<f64> {
        self.inner.hazard(x).map_err(err)
    }

    /// Failure-rate shape label on a quantile-mapped grid.
    #[pyo3(signature = (points = 512, u_min = 1e-4, u_max = 1.0 - 1e-4))]
    fn hazard_shape(&self, points: usize, u_min: f64, u_max: f64) -> PyResult<String> {
        let g = grid(points, u_min, u_max)?;
        Ok(self.inner.hazard_shape(&g).map_err(err)?.to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "Enh(alpha={}, lam={}, beta={})",
            self.inner.alpha(),
            self.inner.lambda(),
            self.inner.beta()
        )
    }
}

fn parse_baseline(s: &str) -> PyResult<Baseline> {
    if s == "exp" {
        return Ok(Baseline::Exponential);
    }
    if let Some(a) = s.strip_prefix("nh:") {
        let alpha: f64 = a
            .parse()
            .map_err(|_| err(format!("baseline `{s}`: alpha is not a number")))?;
        return Baseline::nh(alpha).map_err(err);
    }
    Err(err(format!("baseline `{s}`: expected `exp` or `nh:ALPHA`")))
}

/// An exponentiated-scale law [G(lam x)]^alpha with baseline "exp" or
/// "nh:ALPHA".
#[pyclass(name = "Es", from_py_object)]
#[derive(Clone)]
struct PyEs {
    inner: EsSpec,
}

#[pymethods]
impl PyEs {
    #[new]
    #[pyo3(signature = (alpha, lam, baseline = "exp"))]
    fn new(alpha: f64, lam: f64, baseline: &str) -> PyResult<Self> {
        Ok(Self {
            inner: EsSpec::new(alpha, lam, parse_baseline(baseline)?).map_err(err)?,
        })
    }

    fn cdf(&self, x: f64) -> PyResult<f64> {
        self.inner.cdf(x).map_err(err)
    }

    fn sf(&self, x: f64) -> PyResult<f64> {
        self.inner.sf(x).map_err(err)
    }

    fn pdf(&self, x: f64) -> PyResult<f64> {
        self.inner.pdf(x).map_err(err)
    }

    fn quantile(&self, u: f64) -> PyResult<f64> {
        self.inner.quantile(u).map_err(err)
    }

    fn hazard(&self, x: f64) -> PyResult<f64> {
        self.inner.hazard(x).map_err(err)
    }
}

/// Either marginal class, anywhere a distribution is expected.
#[derive(FromPyObject)]
enum DistArg {
    Enh(PyEnh),
    Es(PyEs),
    Max(PyMax),
}

impl DistArg {
    fn as_dist(&self) -> &dyn Dist {
        match self {
            DistArg::Enh(p) => &p.inner,
            DistArg::Es(s) => &s.inner,
            DistArg::Max(m) => &m.inner,
        }
    }

    fn to_marginal(&self) -> PyResult<Marginal> {
        match self {
            DistArg::Enh(p) => Ok(Marginal::Enh(p.inner)),
            DistArg::Es(s) => Ok(Marginal::Es(s.inner)),
            DistArg::Max(_) => Err(err("a maximum cannot be used as a marginal")),
        }
    }
}

/// Law of the maximum of independent marginals.
#[pyclass(name = "Max", from_py_object)]
#[derive(Clone)]
struct PyMax {
    inner: MaxDist,
}

#[pymethods]
impl PyMax {
    #[new]
    fn new(marginals: Vec<DistArg>) -> PyResult<Self> {
        let ms: PyResult<Vec<Marginal>> = marginals.iter().map(|d| d.to_marginal()).collect();
        Ok(Self {
            inner: MaxDist::new(ms?).map_err(err)?,
        })
    }

    fn cdf(&self, x: f64) -> f64 {
        self.inner.cdf(x)
    }

    fn sf(&self, x: f64) -> f64 {
        self.inner.sf(x)
    }

    fn pdf(&self, x: f64) -> f64 {
        self.inner.pdf(x)
    }

    fn quantile(&self, u: f64) -> PyResult<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(err(format!("u must lie in (0,1) (got {u})")));
        }
        Ok(self.inner.quantile(u))
    }

    fn hazard(&self, x: f64) -> f64 {
        self.inner.hazard(x)
    }
}

/// Archimedean generator: independence, Gumbel(theta >= 1), or
/// Clayton(theta > 0).
#[pyclass(name = "Generator", from_py_object)]
#[derive(Clone)]
struct PyGenerator {
    inner: ArchGenerator,
}

#[pymethods]
impl PyGenerator {
    #[staticmethod]
    fn independence() -> Self {
        Self {
            inner: ArchGenerator::independence(),
        }
    }

    #[staticmethod]
    fn gumbel(theta: f64) -> PyResult<Self> {
        Ok(Self {
            inner: ArchGenerator::gumbel(theta).map_err(err)?,
        })
    }

    #[staticmethod]
    fn clayton(theta: f64) -> PyResult<Self> {
        Ok(Self {
            inner: ArchGenerator::clayton(theta).map_err(err)?,
        })
    }

    fn phi(&self, t: f64) -> PyResult<f64> {
        self.inner.phi(t).map_err(err)
    }

    fn psi(&self, u: f64) -> PyResult<f64> {
        self.inner.psi(u).map_err(err)
    }

    fn copula(&self, us: Vec<f64>) -> PyResult<f64> {
        self.inner.copula_value(&us).map_err(err)
    }

    fn is_n_monotone(&self, n: usize) -> PyResult<bool> {
        Ok(check_n_monotone(&self.inner, n).map_err(err)?.ok)
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

/// Scan f = psi_outer ∘ phi_inner for super-additivity; returns a dict with
/// the verdict, worst margin, and witness pair.
#[pyfunction]
fn super_additive<'py>(
    py: Python<'py>,
    outer: &PyGenerator,
    inner: &PyGenerator,
) -> PyResult<Bound<'py, PyDict>> {
    let rep = check_super_additive(&outer.inner, &inner.inner);
    let d = PyDict::new(py);
    d.set_item("super_additive", rep.super_additive)?;
    d.set_item("worst_margin", rep.worst_margin)?;
    d.set_item("witness", rep.witness)?;
    d.set_item("scanned_range", rep.scanned_range)?;
    Ok(d)
}

#[pyfunction]
fn is_majorized(x: Vec<f64>, y: Vec<f64>) -> PyResult<bool> {
    majorize::is_majorized(&x, &y).map_err(err)
}

#[pyfunction]
fn is_weak_submajorized(x: Vec<f64>, y: Vec<f64>) -> PyResult<bool> {
    majorize::is_weak_submajorized(&x, &y).map_err(err)
}

#[pyfunction]
fn is_weak_supermajorized(x: Vec<f64>, y: Vec<f64>) -> PyResult<bool> {
    majorize::is_weak_supermajorized(&x, &y).map_err(err)
}

/// Seeded pair satisfying `relation` in {"m", "w_sub", "w_super"}, entries
/// inside [lo, hi].
#[pyfunction]
#[pyo3(signature = (n, relation, seed, lo = 0.1, hi = 3.0))]
fn random_comparable_pair(
    n: usize,
    relation: &str,
    seed: u64,
    lo: f64,
    hi: f64,
) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let rel = match relation {
        "m" => majorize::Relation::Majorize,
        "w_sub" => majorize::Relation::WeakSub,
        "w_super" => majorize::Relation::WeakSuper,
        other => return Err(err(format!("unknown relation `{other}`"))),
    };
    majorize::random_comparable_pair(n, rel, seed, (lo, hi)).map_err(err)
}

/// Check one stochastic order (st, hr, lr, disp, rs, convex_transform,
/// lorenz) between two distributions; returns the verdict as a dict.
#[pyfunction]
#[pyo3(signature = (order, f, g, points = 512, u_min = 1e-4, u_max = 1.0 - 1e-4))]
fn check_order<'py>(
    py: Python<'py>,
    order: &str,
    f: DistArg,
    g: DistArg,
    points: usize,
    u_min: f64,
    u_max: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let order: OrderName = order.parse().map_err(err)?;
    let gr = grid(points, u_min, u_max)?;
    let v = orders::check_order(order, f.as_dist(), g.as_dist(), &gr).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("order", v.order.to_string())?;
    d.set_item("holds", v.holds)?;
    d.set_item("worst_margin", v.worst_margin)?;
    d.set_item("witness", v.witness)?;
    d.set_item("skipped", v.skipped)?;
    Ok(d)
}

/// CDF of the maximum of independent marginals at x.
#[pyfunction]
fn max_cdf(marginals: Vec<DistArg>, x: f64) -> PyResult<f64> {
    let ms: PyResult<Vec<Marginal>> = marginals.iter().map(|d| d.to_marginal()).collect();
    let spec = SampleSpec::independent(ms?).map_err(err)?;
    extremes::max_cdf(&spec, x).map_err(err)
}

/// Survival of the minimum of marginals coupled by `generator` at x.
#[pyfunction]
fn min_sf(marginals: Vec<DistArg>, generator: &PyGenerator, x: f64) -> PyResult<f64> {
    let ms: PyResult<Vec<Marginal>> = marginals.iter().map(|d| d.to_marginal()).collect();
    let spec = SampleSpec::new(ms?, Dependence::Archimedean(generator.inner)).map_err(err)?;
    extremes::min_sf_archimedean(&spec, x).map_err(err)
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use pyo3::IntoPyObjectExt;
    match v {
        serde_json::Value::Null => py.None().into_bound_py_any(py),
        serde_json::Value::Bool(b) => b.into_bound_py_any(py),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_bound_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_bound_py_any(py)
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py)
            }
        }
        serde_json::Value::String(s) => s.into_bound_py_any(py),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_bound_py_any(py)
        }
        serde_json::Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, val) in map {
                d.set_item(k, json_to_py(py, val)?)?;
            }
            d.into_bound_py_any(py)
        }
    }
}

/// Run `trials` randomized hypothesis-satisfying trials of one theorem
/// scenario and return the report as a dict.
#[pyfunction]
#[pyo3(signature = (theorem, trials = 200, seed = 20_240_817, n = None, points = 512, u_min = 1e-4, u_max = 1.0 - 1e-4))]
fn verify_theorem<'py>(
    py: Python<'py>,
    theorem: &str,
    trials: u32,
    seed: u64,
    n: Option<usize>,
    points: usize,
    u_min: f64,
    u_max: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let theorem_id: TheoremId = theorem.parse().map_err(err)?;
    let gr = grid(points, u_min, u_max)?;
    let report = run_scenario(
        &ScenarioSettings {
            theorem_id,
            n,
            trials,
            seed,
        },
        &gr,
    )
    .map_err(err)?;
    let value = serde_json::to_value(&report).map_err(err)?;
    json_to_py(py, &value)
}

/// Run a full JSON run-config (same schema as the CLI) and return
/// (list of scenario reports, all_passed).
#[pyfunction]
fn run_verify_config<'py>(
    py: Python<'py>,
    config_json: &str,
) -> PyResult<(Bound<'py, PyAny>, bool)> {
    let cfg = sconfig::parse_config(config_json).map_err(err)?;
    let (reports, all_passed) = sconfig::run_verify(&cfg).map_err(err)?;
    let value = serde_json::to_value(&reports).map_err(err)?;
    Ok((json_to_py(py, &value)?, all_passed))
}

/// Failure-rate shape of an arbitrary distribution handle.
#[pyfunction]
#[pyo3(signature = (dist, points = 512, u_min = 1e-4, u_max = 1.0 - 1e-4))]
fn hazard_shape(dist: DistArg, points: usize, u_min: f64, u_max: f64) -> PyResult<String> {
    let g = grid(points, u_min, u_max)?;
    Ok(hazard_shape_of(dist.as_dist(), &g)
        .map_err(err)?
        .to_string())
}

#[pymodule]
fn stochord_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyEnh>()?;
    m.add_class::<PyEs>()?;
    m.add_class::<PyMax>()?;
    m.add_class::<PyGenerator>()?;
    m.add_function(wrap_pyfunction!(super_additive, m)?)?;
    m.add_function(wrap_pyfunction!(is_majorized, m)?)?;
    m.add_function(wrap_pyfunction!(is_weak_submajorized, m)?)?;
    m.add_function(wrap_pyfunction!(is_weak_supermajorized, m)?)?;
    m.add_function(wrap_pyfunction!(random_comparable_pair, m)?)?;
    m.add_function(wrap_pyfunction!(check_order, m)?)?;
    m.add_function(wrap_pyfunction!(max_cdf, m)?)?;
    m.add_function(wrap_pyfunction!(min_sf, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify_config, m)?)?;
    m.add_function(wrap_pyfunction!(hazard_shape, m)?)?;
    Ok(())
}
