//! Python bindings: diagrams, homology, the six-term sequence and the law
//! suites.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use salamander_core::axioms::{exhaustive_table_suite, random_vec_suite, AxiomReport};
use salamander_core::diagram::{parse, parse_unchecked, serialize};
use salamander_core::fuzz::{fuzz_any, BackendChoice, FuzzParams};
use salamander_core::salamander::{sweep, vertical_salamander_sequence};
use salamander_core::table::groups::cyclic;
use salamander_core::translate::cross_backend_trials;
use salamander_core::{
    salamander_sequence, three_by_three, verify_salamander, with_complex, AnyComplex, Backend, CayleyGroup,
    HomologyKind, Pos, TableBackend,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn choice(name: &str) -> PyResult<BackendChoice> {
    match name {
        "table" => Ok(BackendChoice::Table),
        "vec" => Ok(BackendChoice::Vector),
        "mixed" => Ok(BackendChoice::Mixed),
        other => Err(value_error(format!("unknown backend `{other}`, expected table, vec or mixed"))),
    }
}

fn kind(name: &str) -> PyResult<HomologyKind> {
    HomologyKind::ALL
        .into_iter()
        .find(|k| k.to_string() == name)
        .ok_or_else(|| value_error(format!("unknown homology kind `{name}`")))
}

/// One of the four homology objects at a position.
#[pyclass(get_all, frozen)]
pub struct Homology {
    kind: String,
    position: Pos,
    defined: bool,
    order: Option<usize>,
    whole: bool,
    reason: Option<String>,
}

#[pymethods]
impl Homology {
    fn __repr__(&self) -> String {
        match &self.reason {
            None => format!("Homology({} at {:?}, order {})", self.kind, self.position, self.order.unwrap_or(0)),
            Some(r) => format!("Homology({} at {:?}, undefined: {r})", self.kind, self.position),
        }
    }
}

/// Verdicts on the six-term sequence at a position.
#[pyclass(get_all, frozen)]
pub struct SequenceVerdict {
    orders: Vec<usize>,
    exact_count: usize,
    all_exact: bool,
    checks_agree: bool,
}

#[pyclass(get_all, frozen)]
pub struct GridVerdict {
    first_row_exact: bool,
    routes_agree: bool,
    defined: usize,
    trace: Vec<String>,
}

#[pyclass(get_all, frozen)]
pub struct SweepSummary {
    positions: usize,
    verified: usize,
    skipped: usize,
    qualifying_edges: usize,
    failures: Vec<String>,
    passed: bool,
}

/// A double complex over finite groups or over a prime field.
#[pyclass(frozen)]
pub struct Complex {
    inner: AnyComplex,
}

#[pymethods]
impl Complex {
    /// Parses diagram text; `check=False` skips the complex laws.
    #[staticmethod]
    #[pyo3(signature = (text, check = true))]
    fn parse(text: &str, check: bool) -> PyResult<Self> {
        let inner = if check { parse(text) } else { parse_unchecked(text) }.map_err(value_error)?;
        Ok(Complex { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (seed, index = 0, backend = "mixed"))]
    fn fuzz(seed: u64, index: u64, backend: &str) -> PyResult<Self> {
        Ok(Complex {
            inner: fuzz_any(choice(backend)?, seed, index, FuzzParams::default()),
        })
    }

    #[getter]
    fn backend(&self) -> &'static str {
        match self.inner {
            AnyComplex::Table(_) => "table",
            AnyComplex::Vector(_) => "vec",
        }
    }

    fn support(&self) -> Vec<Pos> {
        self.inner.support()
    }

    /// Order of the object at a position (`p^dim` for vector spaces).
    fn order(&self, pos: Pos) -> usize {
        with_complex!(&self.inner, dc => dc.backend().order(&dc.object(pos)))
    }

    /// `(description, position)` for every broken complex law.
    fn violations(&self) -> PyResult<Vec<(String, Pos)>> {
        let report = self.inner.validate().map_err(value_error)?;
        Ok(report.violations.into_iter().map(|v| (v.kind.to_string(), v.pos)).collect())
    }

    fn is_valid(&self) -> PyResult<bool> {
        Ok(self.violations()?.is_empty())
    }

    fn transpose(&self) -> Self {
        let inner = match &self.inner {
            AnyComplex::Table(dc) => AnyComplex::Table(dc.transpose()),
            AnyComplex::Vector(dc) => AnyComplex::Vector(dc.transpose()),
        };
        Complex { inner }
    }

    /// `kind` is one of horizontal, vertical, donor, receptor.
    fn homology(&self, kind_name: &str, pos: Pos) -> PyResult<Homology> {
        let k = kind(kind_name)?;
        with_complex!(&self.inner, dc => {
            let b = dc.backend();
            let h = dc.homology(k, pos).map_err(value_error)?;
            Ok(Homology {
                kind: k.to_string(),
                position: pos,
                defined: h.is_defined(),
                order: h.order(b),
                whole: h.is_whole_object(b),
                reason: h.value.as_ref().err().map(ToString::to_string),
            })
        })
    }

    /// Builds and checks the six-term sequence; raises when a hypothesis
    /// fails.
    #[pyo3(signature = (pos, vertical = false))]
    fn salamander(&self, pos: Pos, vertical: bool) -> PyResult<SequenceVerdict> {
        with_complex!(&self.inner, dc => {
            let b = dc.backend();
            let seq = if vertical { vertical_salamander_sequence(dc, pos) } else { salamander_sequence(dc, pos) }
                .map_err(value_error)?;
            let v = verify_salamander(b, &seq).map_err(value_error)?;
            Ok(SequenceVerdict {
                orders: seq.objects.iter().map(|sq| sq.order(b)).collect(),
                exact_count: v.exact_count(),
                all_exact: v.all_exact(),
                checks_agree: v.checks_agree(),
            })
        })
    }

    fn three_by_three(&self) -> PyResult<GridVerdict> {
        let r = with_complex!(&self.inner, dc => three_by_three(dc)).map_err(value_error)?;
        Ok(GridVerdict {
            first_row_exact: r.first_row_exact(),
            routes_agree: r.routes_agree(),
            defined: r.definedness.iter().filter(|(_, ok)| *ok).count(),
            trace: r.trace,
        })
    }

    /// Sequences and corollary isomorphisms at every position.
    fn sweep(&self) -> PyResult<SweepSummary> {
        let r = with_complex!(&self.inner, dc => sweep(dc)).map_err(value_error)?;
        Ok(SweepSummary {
            positions: r.positions,
            verified: r.verified,
            skipped: r.skipped,
            qualifying_edges: r.qualifying_edges,
            passed: r.passed(),
            failures: r.failures,
        })
    }

    fn serialize(&self) -> String {
        serialize(&self.inner)
    }

    fn __eq__(&self, other: &Complex) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Complex({}, {} objects)", self.backend(), self.inner.support().len())
    }
}

/// A finite group given by its Cayley table; element 0 is the identity.
#[pyclass(frozen)]
pub struct Group {
    inner: CayleyGroup,
}

#[pymethods]
impl Group {
    #[new]
    fn new(table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Group {
            inner: CayleyGroup::from_table(&table).map_err(value_error)?,
        })
    }

    #[staticmethod]
    fn cyclic(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(value_error("cyclic group of order 0"));
        }
        Ok(Group { inner: cyclic(n) })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    /// Element lists of all subgroups, smallest first.
    #[pyo3(signature = (normal_only = false))]
    fn subgroups(&self, normal_only: bool) -> Vec<Vec<usize>> {
        TableBackend
            .all_subgroups(&self.inner)
            .into_iter()
            .filter(|s| !normal_only || self.inner.is_normal_subgroup(s))
            .map(|s| s.elements())
            .collect()
    }

    fn generated(&self, seed: Vec<usize>) -> PyResult<Vec<usize>> {
        if let Some(&bad) = seed.iter().find(|&&x| x >= self.inner.order()) {
            return Err(value_error(format!("element {bad} out of range")));
        }
        Ok(self.inner.generated_subgroup(&seed).elements())
    }
}

fn outcomes(name: &str, r: &AxiomReport) -> Vec<(String, bool, usize, usize)> {
    r.outcomes
        .iter()
        .map(|o| (format!("{name} {}", o.law), o.dual, o.instances, o.failures))
        .collect()
}

/// `(law, dual, instances, failures)` for each law. `backend` is table,
/// vec or mixed (both suites).
#[pyfunction]
#[pyo3(signature = (seed = 42, count = 500, backend = "mixed"))]
fn axioms(py: Python<'_>, seed: u64, count: usize, backend: &str) -> PyResult<Vec<(String, bool, usize, usize)>> {
    let which = choice(backend)?;
    Ok(py.detach(|| {
        let mut rows = Vec::new();
        if which != BackendChoice::Vector {
            rows.extend(outcomes("table", &exhaustive_table_suite()));
        }
        if which != BackendChoice::Table {
            rows.extend(outcomes("vector", &random_vec_suite(seed, count)));
        }
        rows
    }))
}

/// `(cases, comparisons, disagreements)` between the matrix and Cayley-table
/// realizations of random small spaces.
#[pyfunction]
#[pyo3(signature = (seed = 42, count = 500))]
fn cross_backend(py: Python<'_>, seed: u64, count: usize) -> (usize, usize, usize) {
    let r = py.detach(|| cross_backend_trials(seed, count));
    (r.cases, r.comparisons, r.disagreements)
}

#[pymodule]
fn salamander(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Complex>()?;
    m.add_class::<Group>()?;
    m.add_class::<Homology>()?;
    m.add_class::<SequenceVerdict>()?;
    m.add_class::<GridVerdict>()?;
    m.add_class::<SweepSummary>()?;
    m.add_function(wrap_pyfunction!(axioms, m)?)?;
    m.add_function(wrap_pyfunction!(cross_backend, m)?)?;
    Ok(())
}
