//! Python bindings: `import twopath`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use twopath_core::config::{self, PRESET_NAMES};
use twopath_core::doubleslit::{GaussianTwoBeam, Normalization};
use twopath_core::emit::{self, PlotKind};
use twopath_core::verify::{self as oracle_checks, DEFAULT_TOLERANCE};
use twopath_core::{
    series, BartellSetup, BeamSplitterSetup, Error, Grid, MesonParams, MottParams, SetupConfig,
    Strangeness,
};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::NonConvergent { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn json_value<'py>(py: Python<'py>, text: String) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn load(preset: Option<&str>, config: Option<&str>, grid: Option<&str>) -> PyResult<SetupConfig> {
    let mut cfg = match (preset, config) {
        (Some(name), None) => SetupConfig::from_preset(name),
        (None, Some(text)) => config::parse_config(text),
        _ => return Err(PyValueError::new_err("pass exactly one of `preset` or `config`")),
    }
    .map_err(py_err)?;
    if let Some(spec) = grid {
        cfg.grid = Some(Grid::parse(spec).map_err(py_err)?);
        cfg.validate().map_err(py_err)?;
    }
    Ok(cfg)
}

fn strangeness(name: &str) -> PyResult<Strangeness> {
    match name {
        "K0" => Ok(Strangeness::K0),
        "K0bar" => Ok(Strangeness::K0Bar),
        _ => Err(PyValueError::new_err(format!("expected 'K0' or 'K0bar', got {name:?}"))),
    }
}

/// `V = K/cosh(Ay)`, `P = 1 - K + K|tanh(Ay)|`, `phi = By`.
#[pyclass(name = "UnifiedModel", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyUnifiedModel(twopath_core::UnifiedModel);

#[pymethods]
impl PyUnifiedModel {
    #[new]
    #[pyo3(signature = (a, b, k = 1.0))]
    fn new(a: f64, b: f64, k: f64) -> PyResult<Self> {
        twopath_core::UnifiedModel::with_k(a, b, k).map(Self).map_err(py_err)
    }

    #[getter]
    fn a(&self) -> f64 {
        self.0.a()
    }
    #[getter]
    fn b(&self) -> f64 {
        self.0.b()
    }
    #[getter]
    fn k(&self) -> f64 {
        self.0.k()
    }
    #[getter]
    fn is_pure(&self) -> bool {
        self.0.is_pure()
    }
    #[getter]
    fn ratio(&self) -> f64 {
        self.0.ratio()
    }

    fn visibility(&self, y: f64) -> f64 {
        self.0.visibility(y)
    }
    fn predictability(&self, y: f64) -> f64 {
        self.0.predictability(y)
    }
    fn phase(&self, y: f64) -> f64 {
        self.0.phase(y)
    }
    fn oscillatory_factor(&self, y: f64) -> f64 {
        self.0.oscillatory_factor(y)
    }
    fn duality_residual(&self, y: f64) -> f64 {
        self.0.duality_residual(y)
    }
    fn e_fold_y(&self) -> Option<f64> {
        self.0.e_fold_y()
    }

    /// `(nu, R)`; `nu` is `None` when `A = 0`.
    fn fringe_index(&self) -> (Option<f64>, f64) {
        let r = self.0.fringe_index();
        (r.nu.value(), r.r)
    }

    fn __repr__(&self) -> String {
        format!("UnifiedModel(a={}, b={}, k={})", self.0.a(), self.0.b(), self.0.k())
    }
}

#[pyclass(name = "BartellSetup", frozen)]
struct PyBartell(BartellSetup);

#[pymethods]
impl PyBartell {
    #[new]
    fn new(k: f64, x0: f64, d: f64, l: f64, f: f64) -> PyResult<Self> {
        let s = BartellSetup { k, x0, d, l, f };
        s.validate().map_err(py_err)?;
        Ok(Self(s))
    }
    #[staticmethod]
    fn reference() -> Self {
        Self(BartellSetup::REFERENCE)
    }
    fn sigma_squared(&self) -> f64 {
        self.0.sigma_squared()
    }
    fn model(&self) -> PyResult<PyUnifiedModel> {
        self.0.model().map(PyUnifiedModel).map_err(py_err)
    }
    /// Intensity normalized to 1 at `y = 0`.
    fn intensity(&self, y: f64) -> f64 {
        self.0.intensity(y, Normalization::CentralValue)
    }
}

#[pyclass(name = "BeamSplitterSetup", frozen)]
struct PyBeamSplitter(BeamSplitterSetup);

#[pymethods]
impl PyBeamSplitter {
    #[new]
    #[allow(non_snake_case)]
    fn new(k: f64, x0: f64, theta: f64, L: f64) -> PyResult<Self> {
        let s = BeamSplitterSetup {
            k,
            x0,
            theta,
            screen_offset: L,
        };
        s.validate().map_err(py_err)?;
        Ok(Self(s))
    }
    #[staticmethod]
    fn reference() -> Self {
        Self(BeamSplitterSetup::REFERENCE)
    }
    fn sigma_squared(&self) -> f64 {
        self.0.sigma_squared()
    }
    fn model(&self) -> PyResult<PyUnifiedModel> {
        self.0.model().map(PyUnifiedModel).map_err(py_err)
    }
    fn intensity(&self, y: f64) -> f64 {
        self.0.intensity(y, Normalization::CentralValue)
    }
}

#[pyclass(name = "MesonParams", frozen)]
struct PyMeson(MesonParams);

#[pymethods]
impl PyMeson {
    #[new]
    fn new(delta_m: f64, gamma_s: f64, gamma_l: f64) -> PyResult<Self> {
        let p = MesonParams {
            delta_m,
            gamma_s,
            gamma_l,
        };
        p.validate().map_err(py_err)?;
        Ok(Self(p))
    }
    #[staticmethod]
    fn kaon() -> Self {
        Self(MesonParams::kaon())
    }
    fn model(&self) -> PyResult<PyUnifiedModel> {
        self.0.model().map(PyUnifiedModel).map_err(py_err)
    }
    /// `initial` and `outcome` are `"K0"` or `"K0bar"`.
    fn strangeness_probability(&self, initial: &str, outcome: &str, t: f64) -> PyResult<f64> {
        self.0
            .strangeness_probability(strangeness(initial)?, strangeness(outcome)?, t)
            .map_err(py_err)
    }
    fn predictability(&self, t: f64) -> PyResult<f64> {
        self.0.predictability(t).map_err(py_err)
    }
}

#[pyclass(name = "MottParams", frozen)]
struct PyMott(MottParams);

#[pymethods]
impl PyMott {
    #[new]
    #[pyo3(signature = (z, mass_energy, energy, spin2, polarized = false))]
    fn new(z: u32, mass_energy: f64, energy: f64, spin2: u32, polarized: bool) -> PyResult<Self> {
        let p = MottParams {
            z,
            mass_energy,
            energy,
            spin2,
            polarized,
        };
        p.validate().map_err(py_err)?;
        Ok(Self(p))
    }
    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        twopath_core::mott::preset(name)
            .map(Self)
            .ok_or_else(|| py_err(Error::UnknownPreset(name.to_owned())))
    }
    fn sommerfeld_eta(&self) -> PyResult<f64> {
        self.0.sommerfeld_eta().map_err(py_err)
    }
    fn spin_factor(&self) -> f64 {
        self.0.spin_factor()
    }
    fn model(&self) -> PyResult<PyUnifiedModel> {
        self.0.reduced().map(|r| PyUnifiedModel(r.model)).map_err(py_err)
    }
    fn cross_section(&self, theta: f64) -> PyResult<f64> {
        self.0.cross_section(theta).map_err(py_err)
    }
}

#[pyfunction]
fn presets() -> Vec<&'static str> {
    PRESET_NAMES.to_vec()
}

/// Duality summary as a dict.
#[pyfunction]
#[pyo3(signature = (preset = None, config = None, grid = None))]
fn report<'py>(
    py: Python<'py>,
    preset: Option<&str>,
    config: Option<&str>,
    grid: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = load(preset, config, grid)?;
    json_value(py, emit::to_json(&series::report(&cfg).map_err(py_err)?))
}

/// Sampled pattern as a dict with `metadata` and `rows`.
#[pyfunction]
#[pyo3(signature = (preset = None, config = None, grid = None))]
fn profile<'py>(
    py: Python<'py>,
    preset: Option<&str>,
    config: Option<&str>,
    grid: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = load(preset, config, grid)?;
    json_value(py, emit::to_json(&series::profile(&cfg).map_err(py_err)?))
}

/// CSV table text, identical to the command-line output.
#[pyfunction]
#[pyo3(signature = (preset = None, config = None, grid = None))]
fn profile_csv(preset: Option<&str>, config: Option<&str>, grid: Option<&str>) -> PyResult<String> {
    let cfg = load(preset, config, grid)?;
    Ok(emit::csv_string(&series::profile(&cfg).map_err(py_err)?))
}

/// SVG figure text; `plot` is `"fringes"` or `"duality"`.
#[pyfunction]
#[pyo3(signature = (preset = None, config = None, grid = None, plot = "fringes"))]
fn profile_svg(preset: Option<&str>, config: Option<&str>, grid: Option<&str>, plot: &str) -> PyResult<String> {
    let kind = match plot {
        "fringes" => PlotKind::Fringes,
        "duality" => PlotKind::Duality,
        _ => return Err(PyValueError::new_err(format!("unknown plot {plot:?}"))),
    };
    let cfg = load(preset, config, grid)?;
    Ok(emit::render_svg(&series::profile(&cfg).map_err(py_err)?, kind))
}

/// Oracle results as a dict; check `result["passed"]`.
#[pyfunction]
#[pyo3(signature = (preset = None, config = None, grid = None, tolerance = DEFAULT_TOLERANCE))]
fn verify<'py>(
    py: Python<'py>,
    preset: Option<&str>,
    config: Option<&str>,
    grid: Option<&str>,
    tolerance: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = load(preset, config, grid)?;
    let outcome = py.detach(|| oracle_checks::verify(&cfg, tolerance)).map_err(py_err)?;
    json_value(py, emit::to_json(&outcome))
}

#[pymodule]
fn twopath(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUnifiedModel>()?;
    m.add_class::<PyBartell>()?;
    m.add_class::<PyBeamSplitter>()?;
    m.add_class::<PyMeson>()?;
    m.add_class::<PyMott>()?;
    m.add_function(wrap_pyfunction!(presets, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(profile_csv, m)?)?;
    m.add_function(wrap_pyfunction!(profile_svg, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_exposes_reports() {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "twopath").unwrap();
            twopath(&m).unwrap();
            let r = m.getattr("report").unwrap().call1(("bartell",)).unwrap();
            let nu: f64 = r.get_item("nu_rounded").unwrap().extract().unwrap();
            assert!((nu - 2.64).abs() < 5e-3);
            let err = m.getattr("report").unwrap().call1(("nope",)).unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
        });
    }
}
