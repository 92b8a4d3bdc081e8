use adinkra::construct::*;
use adinkra::dashing::{solve_dashings, validate_totally_odd};
use adinkra::heights::{move_vertex, valise, Direction, HeightAssignment};
use adinkra::structure::{bicolor_report, exchange_group, extract_code, DEFAULT_GROUP_CAP};
use adinkra::susy::{emit_rules, render, verify_algebra, RenderFormat};
use adinkra::{agf, code, BitVector};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: adinkra::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bits(s: &str) -> PyResult<BitVector> {
    s.parse().map_err(err)
}

#[pyclass(name = "LinearCode", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCode(adinkra::LinearCode);

#[pymethods]
impl PyCode {
    #[new]
    #[pyo3(signature = (length, rows = Vec::new()))]
    fn new(length: usize, rows: Vec<String>) -> PyResult<Self> {
        let rows = rows.iter().map(|r| bits(r)).collect::<PyResult<Vec<_>>>()?;
        adinkra::LinearCode::span(length, &rows).map(PyCode).map_err(err)
    }

    #[staticmethod]
    fn d2n(n: usize) -> PyResult<Self> {
        code::d2n_family(n).map(PyCode).map_err(err)
    }

    #[getter]
    fn length(&self) -> usize {
        self.0.len()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.0.dimension()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.0.basis().iter().map(|b| b.to_string()).collect()
    }

    fn codewords(&self) -> PyResult<Vec<String>> {
        Ok(self.0.codewords().map_err(err)?.iter().map(|w| w.to_string()).collect())
    }

    fn __contains__(&self, word: &str) -> PyResult<bool> {
        Ok(self.0.contains(&bits(word)?))
    }

    /// `(even, doubly_even)`.
    fn classify(&self) -> (bool, bool) {
        let c = self.0.classify();
        (c.even, c.doubly_even)
    }

    fn __repr__(&self) -> String {
        format!("LinearCode({}, {:?})", self.0.len(), self.basis())
    }
}

#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(adinkra::ColoredGraph);

fn graph(r: adinkra::Result<adinkra::ColoredGraph>) -> PyResult<PyGraph> {
    r.map(PyGraph).map_err(err)
}

#[pymethods]
impl PyGraph {
    #[staticmethod]
    fn hypercube(n: usize) -> PyResult<Self> {
        graph(build_hypercube(n))
    }

    #[staticmethod]
    fn folded_cube(n: usize) -> PyResult<Self> {
        graph(build_folded_cube(n))
    }

    #[staticmethod]
    fn complete_even(m: usize) -> PyResult<Self> {
        graph(build_complete_even(m))
    }

    #[staticmethod]
    fn complete_bipartite(n: usize) -> PyResult<Self> {
        graph(build_complete_bipartite(n))
    }

    #[staticmethod]
    fn bicolor_cycle(m: usize) -> PyResult<Self> {
        graph(build_bicolor_cycle(m))
    }

    #[staticmethod]
    fn quotient(n: usize, code: &PyCode) -> PyResult<Self> {
        graph(build_quotient(n, &code.0))
    }

    #[staticmethod]
    fn from_agf(text: &str) -> PyResult<Self> {
        graph(agf::parse(text))
    }

    fn to_agf(&self) -> String {
        agf::serialize(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn colors(&self) -> usize {
        self.0.colors()
    }

    /// `(u, v, color, sign)` with sign `+1` or `-1`.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize, usize, i64)> {
        self.0.edges().iter().map(|e| (e.u, e.v, e.color, e.sign.value())).collect()
    }

    #[getter]
    fn heights(&self) -> Option<Vec<i64>> {
        self.0.heights().map(<[i64]>::to_vec)
    }

    fn is_bipartite(&self) -> bool {
        self.0.is_bipartite()
    }

    fn is_quadrilateral(&self) -> PyResult<bool> {
        Ok(bicolor_report(&self.0).map_err(err)?.is_quadrilateral())
    }

    fn is_perfect_1factorization(&self) -> PyResult<bool> {
        Ok(bicolor_report(&self.0).map_err(err)?.is_perfect_1factorization())
    }

    /// Full `m_ij` table, colors in order, with ones on the diagonal.
    fn m_table(&self) -> PyResult<Vec<Vec<usize>>> {
        let r = bicolor_report(&self.0).map_err(err)?;
        Ok((1..=r.colors).map(|i| (1..=r.colors).map(|j| r.m(i, j)).collect()).collect())
    }

    #[pyo3(signature = (cap = DEFAULT_GROUP_CAP))]
    fn exchange_group_order(&self, cap: usize) -> PyResult<Option<usize>> {
        Ok(exchange_group(&self.0, cap).map_err(err)?.order)
    }

    #[pyo3(signature = (base = 1))]
    fn extract_code(&self, base: usize) -> PyResult<PyCode> {
        extract_code(&self.0, base).map(PyCode).map_err(err)
    }

    /// `(classification, report text)`.
    fn verify(&self) -> (String, String) {
        let r = adinkra::verify::verify(&self.0);
        (r.classification.to_string(), r.to_string())
    }

    fn is_totally_odd(&self) -> PyResult<bool> {
        Ok(validate_totally_odd(&self.0).map_err(err)?.is_empty())
    }

    /// Base-2 logarithm of the number of totally odd dashings, `None` if there are none.
    fn dashing_log2_count(&self) -> PyResult<Option<usize>> {
        Ok(solve_dashings(&self.0).map_err(err)?.log2_count())
    }

    fn dash_one(&self) -> PyResult<Option<PyGraph>> {
        adinkra::dashing::dash_one(&self.0)
            .map(|g| g.map(PyGraph))
            .map_err(err)
    }

    fn valise(&self) -> PyResult<PyGraph> {
        graph(valise(&self.0).and_then(|h| h.apply(&self.0)))
    }

    fn with_heights(&self, heights: Vec<i64>) -> PyResult<PyGraph> {
        graph(HeightAssignment::new(&self.0, heights).and_then(|h| h.apply(&self.0)))
    }

    fn raise_vertex(&self, v: usize) -> PyResult<PyGraph> {
        self.moved(v, Direction::Raise)
    }

    fn lower_vertex(&self, v: usize) -> PyResult<PyGraph> {
        self.moved(v, Direction::Lower)
    }

    fn rank_sequence(&self) -> PyResult<Vec<usize>> {
        Ok(HeightAssignment::of_graph(&self.0).map_err(err)?.rank_sequence())
    }

    fn to_latin(&self, row_names: Vec<String>) -> PyResult<String> {
        Ok(adinkra::latin::to_latin(&self.0).map_err(err)?.render_text(&row_names))
    }

    #[pyo3(signature = (symbolic = false))]
    fn to_matrix(&self, symbolic: bool) -> PyResult<String> {
        Ok(adinkra::matrix::to_matrix(&self.0).map_err(err)?.render_text(symbolic))
    }

    fn to_dot(&self) -> String {
        adinkra::dot::export_dot(&self.0)
    }

    /// Transformation rules for the given colors (all when omitted).
    #[pyo3(signature = (colors = None, format = "text"))]
    fn emit_susy(&self, colors: Option<Vec<usize>>, format: &str) -> PyResult<String> {
        let format: RenderFormat = format.parse().map_err(err)?;
        let rules = emit_rules(&self.0).map_err(err)?;
        let colors = colors.unwrap_or_else(|| (1..=self.0.colors()).collect());
        Ok(render(&rules, &colors, format))
    }

    fn algebra_holds(&self) -> PyResult<bool> {
        Ok(verify_algebra(&emit_rules(&self.0).map_err(err)?).passed())
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, colors={}, edges={})", self.0.n(), self.0.colors(), self.0.edges().len())
    }
}

impl PyGraph {
    fn moved(&self, v: usize, d: Direction) -> PyResult<PyGraph> {
        let h = HeightAssignment::of_graph(&self.0).map_err(err)?;
        graph(move_vertex(&self.0, &h, v, d).and_then(|h| h.apply(&self.0)))
    }
}

/// `(wt(x ^ y), wt(x) + wt(y), wt(x & y))`.
#[pyfunction]
fn weight_sum_identity(x: &str, y: &str) -> PyResult<(usize, usize, usize)> {
    code::weight_sum_identity(&bits(x)?, &bits(y)?).map_err(err)
}

#[pymodule]
fn adinkra_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCode>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(weight_sum_identity, m)?)?;
    Ok(())
}
