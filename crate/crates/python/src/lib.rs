//! Python bindings for `gallai_core`.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use gallai_core::certificate::Certificate as CoreCertificate;
use gallai_core::coloring::{self, Color};
use gallai_core::constructions;
use gallai_core::decomposition;
use gallai_core::formulas::{self, Family, TopKind};
use gallai_core::search;
use gallai_core::target::TargetSpec;
use gallai_core::verify::{self, SearchOptions};

create_exception!(gallai, GallaiError, PyException);

fn err(e: gallai_core::Error) -> PyErr {
    GallaiError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = gallai_core::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn targets(specs: &[String]) -> PyResult<Vec<TargetSpec>> {
    specs.iter().map(|s| parse(s)).collect()
}

fn options(budget: u64, threads: usize) -> SearchOptions {
    SearchOptions { budget, threads: threads.max(1) }
}

#[pyclass(frozen, eq, from_py_object, module = "gallai")]
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredComplete(coloring::ColoredComplete);

#[pymethods]
impl ColoredComplete {
    /// Builds a coloring from `(u, v, color)` triples covering every pair once.
    #[new]
    fn new(n: usize, k: Color, edges: Vec<(usize, usize, Color)>) -> PyResult<Self> {
        coloring::make_coloring(n, k, &edges).map(Self).map_err(err)
    }

    /// Colors listed in edge order (0,1), (0,2), (1,2), (0,3), ...
    #[staticmethod]
    fn from_edge_colors(n: usize, k: Color, colors: Vec<Color>) -> PyResult<Self> {
        coloring::ColoredComplete::from_edge_order(n, k, colors).map(Self).map_err(err)
    }

    #[staticmethod]
    fn monochromatic(n: usize, k: Color, color: Color) -> PyResult<Self> {
        coloring::ColoredComplete::monochromatic(n, k, color).map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> Color {
        self.0.k()
    }

    fn color(&self, u: usize, v: usize) -> PyResult<Color> {
        if u == v || u >= self.0.n() || v >= self.0.n() {
            return Err(GallaiError::new_err(format!("no edge ({u}, {v}) in K_{}", self.0.n())));
        }
        Ok(self.0.color(u, v))
    }

    fn edge_colors(&self) -> Vec<Color> {
        self.0.edge_colors().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize, Color)> {
        self.0.edges().collect()
    }

    fn find_rainbow_triangle(&self) -> Option<(usize, usize, usize)> {
        coloring::find_rainbow_triangle(&self.0)
    }

    fn is_gallai(&self) -> bool {
        coloring::is_gallai(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("ColoredComplete(n={}, k={})", self.0.n(), self.0.k())
    }
}

#[pyclass(frozen, get_all, module = "gallai")]
pub struct Embedding {
    target: String,
    color: Color,
    vertices: Vec<usize>,
}

#[pymethods]
impl Embedding {
    fn __repr__(&self) -> String {
        format!("Embedding(target={}, color={}, vertices={:?})", self.target, self.color, self.vertices)
    }
}

impl From<gallai_core::target::Embedding> for Embedding {
    fn from(e: gallai_core::target::Embedding) -> Self {
        Embedding { target: e.target.to_string(), color: e.color, vertices: e.vertices }
    }
}

#[pyclass(frozen, module = "gallai")]
pub struct VerdictReport(verify::VerdictReport);

#[pymethods]
impl VerdictReport {
    /// "verified", "refuted" or "exhausted-budget".
    #[getter]
    fn verdict(&self) -> String {
        self.0.verdict.to_string()
    }

    #[getter]
    fn claim(&self) -> &str {
        &self.0.claim
    }

    #[getter]
    fn nodes(&self) -> u64 {
        self.0.stats.nodes
    }

    #[getter]
    fn complete(&self) -> bool {
        self.0.stats.complete
    }

    #[getter]
    fn exit_code(&self) -> i32 {
        self.0.verdict.exit_code()
    }

    /// The witness coloring carried by a search result, if any.
    #[getter]
    fn coloring(&self) -> Option<ColoredComplete> {
        match &self.0.evidence {
            Some(verify::Evidence::Coloring(c)) => Some(ColoredComplete(c.clone())),
            _ => None,
        }
    }

    #[getter]
    fn parts(&self) -> Vec<VerdictReport> {
        self.0.parts.iter().cloned().map(VerdictReport).collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("VerdictReport(verdict={:?}, claim={:?})", self.0.verdict.to_string(), self.0.claim)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(frozen, get_all, module = "gallai")]
pub struct GallaiPartition {
    parts: Vec<Vec<usize>>,
    reduced: ColoredComplete,
    inter_colors: Vec<Color>,
}

#[pyclass(frozen, module = "gallai")]
pub struct Certificate(CoreCertificate);

#[pymethods]
impl Certificate {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        CoreCertificate::parse(text).map(Self).map_err(err)
    }

    /// A certificate holding only a coloring.
    #[staticmethod]
    fn plain(c: &ColoredComplete) -> Self {
        Self(CoreCertificate::plain(c.0.clone()))
    }

    fn serialize(&self) -> String {
        self.0.serialize()
    }

    #[getter]
    fn coloring(&self) -> ColoredComplete {
        ColoredComplete(self.0.coloring.clone())
    }

    #[pyo3(signature = (budget = search::DEFAULT_NODE_BUDGET))]
    fn verify(&self, budget: u64) -> PyResult<VerdictReport> {
        self.0.verify(budget).map(VerdictReport).map_err(err)
    }
}

#[pyfunction]
#[pyo3(signature = (n, i_vector, top = "cycle"))]
fn gr_value(n: usize, i_vector: Vec<usize>, top: &str) -> PyResult<usize> {
    let inst = formulas::GrInstance::new(n, i_vector, parse::<TopKind>(top)?).map_err(err)?;
    Ok(formulas::gr_value(&inst))
}

/// Returns `(value, provenance)`.
#[pyfunction]
fn gr_k_family(n: usize, k: usize, family: &str) -> PyResult<(usize, String)> {
    let v = formulas::gr_k_family(n, k, parse::<Family>(family)?).map_err(err)?;
    Ok((v.value, v.provenance.to_string()))
}

#[pyfunction]
fn r2_even_cycle(n: usize) -> PyResult<usize> {
    formulas::r2_even_cycle(n).map_err(err)
}

#[pyfunction]
fn r_path_cycle(m: usize, n: usize) -> PyResult<usize> {
    formulas::r_path_cycle(m, n).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, i_vector, top = "cycle"))]
fn lower_bound_witness(n: usize, i_vector: Vec<usize>, top: &str) -> PyResult<ColoredComplete> {
    let inst = formulas::GrInstance::new(n, i_vector, parse::<TopKind>(top)?).map_err(err)?;
    constructions::lower_bound_witness(&inst).map(ColoredComplete).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, k, depth = 3, seed = 0))]
fn random_gallai(n: usize, k: Color, depth: usize, seed: u64) -> PyResult<ColoredComplete> {
    constructions::random_gallai(n, k, depth, seed).map(ColoredComplete).map_err(err)
}

#[pyfunction]
fn substitute(base: &ColoredComplete, parts: Vec<ColoredComplete>) -> PyResult<ColoredComplete> {
    let parts: Vec<_> = parts.into_iter().map(|p| p.0).collect();
    coloring::substitute(&base.0, &parts).map(|b| ColoredComplete(b.coloring)).map_err(err)
}

#[pyfunction]
fn gallai_partition(c: &ColoredComplete) -> PyResult<GallaiPartition> {
    let g = decomposition::gallai_partition(&c.0).map_err(err)?;
    Ok(GallaiPartition { parts: g.parts, reduced: ColoredComplete(g.reduced), inter_colors: g.inter_colors })
}

#[pyfunction]
fn find_mono_path(c: &ColoredComplete, color: Color, order: usize) -> PyResult<Option<Embedding>> {
    Ok(search::find_mono_path(&c.0, color, order).map_err(err)?.map(Embedding::from))
}

#[pyfunction]
fn find_mono_cycle(c: &ColoredComplete, color: Color, length: usize) -> PyResult<Option<Embedding>> {
    Ok(search::find_mono_cycle(&c.0, color, length).map_err(err)?.map(Embedding::from))
}

#[pyfunction]
fn find_mono_matching(c: &ColoredComplete, color: Color, size: usize) -> PyResult<Option<Embedding>> {
    Ok(search::find_mono_matching(&c.0, color, size).map_err(err)?.map(Embedding::from))
}

/// `targets` holds one spec per color, e.g. `["C10", "C10"]`.
#[pyfunction]
fn check_bad_coloring(c: &ColoredComplete, targets: Vec<String>) -> PyResult<VerdictReport> {
    verify::check_bad_coloring(&c.0, &self::targets(&targets)?).map(VerdictReport).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (t1, t2, n, budget = search::DEFAULT_NODE_BUDGET, threads = 1))]
fn exhaustive_ramsey2(
    py: Python<'_>,
    t1: &str,
    t2: &str,
    n: usize,
    budget: u64,
    threads: usize,
) -> PyResult<VerdictReport> {
    let (t1, t2) = (parse(t1)?, parse(t2)?);
    py.detach(|| verify::exhaustive_ramsey2(t1, t2, n, options(budget, threads))).map(VerdictReport).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, targets, budget = search::DEFAULT_NODE_BUDGET, threads = 1))]
fn search_bad_gallai(
    py: Python<'_>,
    n: usize,
    targets: Vec<String>,
    budget: u64,
    threads: usize,
) -> PyResult<VerdictReport> {
    let ts = self::targets(&targets)?;
    py.detach(|| verify::search_bad_gallai(n, &ts, options(budget, threads))).map(VerdictReport).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, i_vector, top = "cycle", budget = search::DEFAULT_NODE_BUDGET, threads = 1))]
fn verify_gr_point(
    py: Python<'_>,
    n: usize,
    i_vector: Vec<usize>,
    top: &str,
    budget: u64,
    threads: usize,
) -> PyResult<VerdictReport> {
    let inst = formulas::GrInstance::new(n, i_vector, parse::<TopKind>(top)?).map_err(err)?;
    py.detach(|| verify::verify_gr_point(&inst, options(budget, threads))).map(VerdictReport).map_err(err)
}

#[pymodule]
fn gallai(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GallaiError", m.py().get_type::<GallaiError>())?;
    m.add_class::<ColoredComplete>()?;
    m.add_class::<Embedding>()?;
    m.add_class::<VerdictReport>()?;
    m.add_class::<GallaiPartition>()?;
    m.add_class::<Certificate>()?;
    m.add_function(wrap_pyfunction!(gr_value, m)?)?;
    m.add_function(wrap_pyfunction!(gr_k_family, m)?)?;
    m.add_function(wrap_pyfunction!(r2_even_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(r_path_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound_witness, m)?)?;
    m.add_function(wrap_pyfunction!(random_gallai, m)?)?;
    m.add_function(wrap_pyfunction!(substitute, m)?)?;
    m.add_function(wrap_pyfunction!(gallai_partition, m)?)?;
    m.add_function(wrap_pyfunction!(find_mono_path, m)?)?;
    m.add_function(wrap_pyfunction!(find_mono_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(find_mono_matching, m)?)?;
    m.add_function(wrap_pyfunction!(check_bad_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_ramsey2, m)?)?;
    m.add_function(wrap_pyfunction!(search_bad_gallai, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gr_point, m)?)?;
    Ok(())
}
