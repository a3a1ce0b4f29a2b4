//! Python bindings: partitions, expansions, tableau counts, identity
//! checks and the filtered graphs. Polynomials cross the boundary as
//! canonical text or as `(exponents, coefficient)` terms.

use grothendieck::graphs::{commutator_check, walk_sum, FilteredGraph, Relation};
use grothendieck::identities::{pieri_coefficient, verify, IdentitySpec};
use grothendieck::report::VerificationReport;
use grothendieck::suite::run_criterion;
use grothendieck::symfun::{Evaluator, SymFunId};
use grothendieck::tableau::{count as count_fillings, TableauShape};
use grothendieck::{Cap, Error, Poly as CorePoly, Ring};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr>(what: &str, s: &str) -> PyResult<T>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e: T::Err| PyValueError::new_err(format!("{what}: {e}")))
}

#[pyclass(frozen, eq, hash, str, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Partition(grothendieck::Partition);

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Partition {
    /// From a list of parts or a string such as `"3,2,1"` (`"-"` is empty).
    #[new]
    fn new(parts: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = parts.extract::<String>() {
            return Ok(Partition(parse("partition", &s)?));
        }
        let v: Vec<usize> = parts.extract()?;
        grothendieck::Partition::new(v)
            .map(Partition)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn conjugate(&self) -> Partition {
        Partition(self.0.conjugate())
    }

    /// Number of removable boxes.
    fn corners(&self) -> usize {
        self.0.corner_count()
    }

    fn subdiagram_count(&self) -> u64 {
        self.0.subdiagram_count()
    }

    fn contains(&self, other: &Partition) -> bool {
        self.0.contains(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0)
    }
}

#[pyclass(frozen, str)]
struct Poly(CorePoly);

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Poly {
    /// Variable names in exponent order.
    #[getter]
    fn variables(&self) -> Vec<String> {
        self.0.ring().var_names()
    }

    /// `[(exponents, coefficient), ...]` in canonical order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let int = py.import("builtins")?.getattr("int")?;
        let ring = self.0.ring();
        let out = PyList::empty(py);
        for (m, c) in self.0.sorted_terms() {
            out.append((m.exponents(ring), int.call1((c.to_string(),))?))?;
        }
        Ok(out)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.to_json()).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }
}

#[pyclass(frozen, str)]
struct Report(VerificationReport);

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl Report {
    #[getter]
    fn name(&self) -> String {
        self.0.name.clone()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn terms_compared(&self) -> u64 {
        self.0.stats.terms_compared
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    /// `(context, monomial, lhs, rhs)` of the first mismatch.
    #[getter]
    fn witness(&self) -> Option<(String, String, String, String)> {
        self.0
            .witness
            .as_ref()
            .map(|w| (w.context.clone(), w.monomial.clone(), w.lhs.clone(), w.rhs.clone()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __bool__(&self) -> bool {
        self.0.passed()
    }
}

/// Expands `family` (G, Gskew, g, J, j, s, h, e) on `shape`.
#[pyfunction]
#[pyo3(signature = (family, shape, vars = 2, xcap = 4, bcap = 4, route = "operator"))]
fn expand(family: &str, shape: &str, vars: usize, xcap: u32, bcap: u32, route: &str) -> PyResult<Poly> {
    let ring = Ring::builder()
        .scalar("b", Cap::Finite(bcap))
        .indexed("x", vars, Cap::Finite(xcap))
        .build()
        .map_err(err)?;
    let id = SymFunId::parse(family, shape).map_err(err)?;
    let ev = Evaluator::for_alphabet(&ring, "x").map_err(err)?;
    ev.evaluate(&id, parse("route", route)?).map(Poly).map_err(err)
}

/// Number of tableaux of `family` on `shape` with entries in `[n]`.
#[pyfunction]
fn count(family: &str, shape: &str, n: usize) -> PyResult<u64> {
    let family = parse("family", family)?;
    let shape = TableauShape::parse_for(family, shape).map_err(err)?;
    count_fillings(family, &shape, n).map_err(err)
}

/// Checks one named identity; `beta` is "formal", "0", "1", "-1" or None.
#[pyfunction]
#[pyo3(signature = (name, mu = "-", nu = "-", k = 1, xvars = 2, yvars = 2, xcap = 4, ycap = 4, bcap = 5, beta = None))]
#[allow(clippy::too_many_arguments)]
fn verify_identity(
    py: Python<'_>,
    name: &str,
    mu: &str,
    nu: &str,
    k: usize,
    xvars: usize,
    yvars: usize,
    xcap: u32,
    ycap: u32,
    bcap: u32,
    beta: Option<&str>,
) -> PyResult<Report> {
    let mut spec = IdentitySpec::new(parse("name", name)?)
        .mu(parse("mu", mu)?)
        .nu(parse("nu", nu)?)
        .k(k)
        .vars(xvars, yvars)
        .caps(xcap, ycap, bcap);
    if let Some(b) = beta {
        spec = spec.beta(parse("beta", b)?);
    }
    py.detach(|| verify(&spec)).map(Report).map_err(err)
}

/// Closed-form Pieri coefficient as text, e.g. `-1*b`.
#[pyfunction]
fn pieri(kind: &str, lam: &str, mu: &str, nu: &str, eta: &str, k: usize) -> PyResult<String> {
    let c = pieri_coefficient(
        parse("kind", kind)?,
        &parse("lam", lam)?,
        &parse("mu", mu)?,
        &parse("nu", nu)?,
        &parse("eta", eta)?,
        k,
    );
    Ok(c.to_string())
}

/// Runs one acceptance criterion (1 to 13).
#[pyfunction]
fn criterion(py: Python<'_>, id: u8) -> PyResult<Report> {
    py.detach(|| run_criterion(id)).map(|r| Report(r.report)).map_err(err)
}

#[pyclass(frozen)]
struct Graph(FilteredGraph);

#[pymethods]
impl Graph {
    /// `kind` is betaY, kappaY or moebiusY; parameters are "formal" or integers.
    #[new]
    #[pyo3(signature = (kind, n, beta = "formal", kappa = "formal"))]
    fn new(kind: &str, n: usize, beta: &str, kappa: &str) -> PyResult<Self> {
        Ok(Graph(FilteredGraph::build(
            parse("kind", kind)?,
            parse("beta", beta)?,
            parse("kappa", kappa)?,
            n,
        )))
    }

    fn walk_sum(&self, start: &Partition, end: &Partition, steps: usize, direction: &str) -> PyResult<Poly> {
        walk_sum(&self.0, &start.0, &end.0, steps, parse("direction", direction)?)
            .map(Poly)
            .map_err(err)
    }

    fn check(&self) -> PyResult<Report> {
        commutator_check(&self.0, Relation::for_kind(self.0.kind)).map(Report).map_err(err)
    }

    fn vertices(&self) -> Vec<Partition> {
        self.0.vertices().into_iter().map(Partition).collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.to_json()).expect("serializable")
    }
}

#[pymodule]
fn pygroth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_class::<Poly>()?;
    m.add_class::<Report>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(pieri, m)?)?;
    m.add_function(wrap_pyfunction!(criterion, m)?)?;
    Ok(())
}
