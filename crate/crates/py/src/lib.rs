//! Python bindings: the main types and operations, driven in-process.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use orbifix::bounds;
use orbifix::catalog;
use orbifix::orbital;
use orbifix::structure;
use orbifix::Rational;

fn err(e: orbifix::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn ratio(r: Rational) -> (u64, u64) {
    (*r.numer(), *r.denom())
}

/// A permutation of `{0, …, n-1}`.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Permutation {
    inner: orbifix::Permutation,
}

#[pymethods]
impl Permutation {
    /// Build from an image table, e.g. `Permutation([1, 0, 2])`.
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        Ok(Permutation {
            inner: orbifix::Permutation::from_images(images).map_err(err)?,
        })
    }

    /// Build from cycle notation, e.g. `Permutation.from_cycles(5, "(0 1)(2 3 4)")`.
    #[staticmethod]
    fn from_cycles(degree: usize, cycles: &str) -> PyResult<Self> {
        Ok(Permutation {
            inner: orbifix::Permutation::parse_cycles(degree, cycles).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(degree: usize) -> Self {
        Permutation {
            inner: orbifix::Permutation::identity(degree),
        }
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn image(&self, point: usize) -> PyResult<usize> {
        if point >= self.inner.degree() {
            return Err(PyValueError::new_err("point out of range"));
        }
        Ok(self.inner.image(point))
    }

    /// Apply `self` first, then `other`.
    fn compose(&self, other: &Permutation) -> PyResult<Permutation> {
        Ok(Permutation {
            inner: self.inner.compose(&other.inner).map_err(err)?,
        })
    }

    fn inverse(&self) -> Permutation {
        Permutation {
            inner: self.inner.inverse(),
        }
    }

    fn order(&self) -> u128 {
        self.inner.order()
    }

    fn fixed_points(&self) -> Vec<usize> {
        self.inner.fixed_points()
    }

    /// Exact fixed-point ratio as a `(numerator, denominator)` pair.
    fn fpr(&self) -> (u64, u64) {
        ratio(orbifix::fixed_point_ratio(&self.inner))
    }

    fn images(&self) -> Vec<usize> {
        self.inner.images().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({} deg {})", self.inner, self.inner.degree())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &Permutation) -> bool {
        self.inner == other.inner
    }
}

/// A permutation group given by generators, with stabilizer-chain queries.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct PermGroup {
    inner: orbifix::PermGroup,
}

#[pymethods]
impl PermGroup {
    /// Build from generators in cycle notation,
    /// e.g. `PermGroup(5, ["(0 1)", "(0 1 2 3 4)"])`.
    #[new]
    fn new(degree: usize, generators: Vec<String>) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|s| orbifix::Permutation::parse_cycles(degree, s))
            .collect::<orbifix::Result<Vec<_>>>()
            .map_err(err)?;
        Ok(PermGroup {
            inner: orbifix::PermGroup::new(degree, gens).map_err(err)?,
        })
    }

    #[staticmethod]
    fn symmetric(degree: usize) -> PyResult<Self> {
        Ok(PermGroup {
            inner: orbifix::PermGroup::symmetric(degree).map_err(err)?,
        })
    }

    #[staticmethod]
    fn cyclic(degree: usize) -> PyResult<Self> {
        Ok(PermGroup {
            inner: orbifix::PermGroup::cyclic(degree).map_err(err)?,
        })
    }

    #[staticmethod]
    fn dihedral(degree: usize) -> PyResult<Self> {
        Ok(PermGroup {
            inner: orbifix::PermGroup::dihedral(degree).map_err(err)?,
        })
    }

    /// Parse the group file format (see README).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PermGroup {
            inner: orbifix::PermGroup::parse(text).map_err(err)?,
        })
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn order(&self) -> u128 {
        self.inner.order()
    }

    fn generators(&self) -> Vec<Permutation> {
        self.inner
            .generators()
            .iter()
            .map(|g| Permutation { inner: g.clone() })
            .collect()
    }

    fn contains(&self, p: &Permutation) -> PyResult<bool> {
        self.inner.contains(&p.inner).map_err(err)
    }

    fn orbit(&self, point: usize) -> PyResult<Vec<usize>> {
        self.inner.orbit(point).map_err(err)
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        self.inner.orbits()
    }

    fn point_stabilizer(&self, point: usize) -> PyResult<PermGroup> {
        Ok(PermGroup {
            inner: self.inner.point_stabilizer(point).map_err(err)?,
        })
    }

    fn is_transitive(&self) -> bool {
        self.inner.is_transitive()
    }

    fn is_semiregular(&self) -> bool {
        self.inner.is_semiregular()
    }

    fn is_primitive(&self) -> PyResult<bool> {
        structure::is_primitive(&self.inner).map_err(err)
    }

    fn is_quasiprimitive(&self) -> PyResult<bool> {
        structure::is_quasiprimitive(&self.inner).map_err(err)
    }

    fn exponent(&self) -> PyResult<u128> {
        structure::exponent(&self.inner).map_err(err)
    }

    fn center_order(&self) -> PyResult<u128> {
        Ok(structure::center(&self.inner).map_err(err)?.order())
    }

    fn rank(&self) -> PyResult<usize> {
        structure::group_rank(&self.inner).map_err(err)
    }

    /// `(max fixed points, (rfx numerator, rfx denominator), witness)`.
    fn relative_fixity(&self) -> PyResult<(usize, (u64, u64), Permutation)> {
        let fixity = orbifix::relative_fixity(&self.inner).map_err(err)?;
        Ok((
            fixity.fixity,
            ratio(fixity.rfx),
            Permutation {
                inner: fixity.witness,
            },
        ))
    }

    /// `(is_primitive, all orbital digraphs connected)`; the two always agree.
    fn higman_check(&self) -> PyResult<(bool, bool)> {
        orbital::higman_check(&self.inner).map_err(err)
    }

    /// Suborbits at ω as `(points, self_paired, connected)` triples.
    fn suborbits(&self, omega: usize) -> PyResult<Vec<(Vec<usize>, bool, bool)>> {
        let specs = orbital::suborbits(&self.inner, omega).map_err(err)?;
        Ok(specs
            .into_iter()
            .map(|s| {
                let connected = s.is_connected();
                (s.suborbit, s.self_paired, connected)
            })
            .collect())
    }

    fn print(&self) -> String {
        self.inner.print()
    }

    fn __repr__(&self) -> String {
        format!(
            "PermGroup(degree={}, order={})",
            self.inner.degree(),
            self.inner.order()
        )
    }
}

/// A finite undirected simple graph.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct SimpleGraph {
    inner: orbifix::SimpleGraph,
}

#[pymethods]
impl SimpleGraph {
    #[new]
    fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(SimpleGraph {
            inner: orbifix::SimpleGraph::from_edges(n_vertices, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(SimpleGraph {
            inner: orbifix::SimpleGraph::parse(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn petersen() -> Self {
        SimpleGraph {
            inner: orbifix::SimpleGraph::petersen(),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(SimpleGraph {
            inner: orbifix::SimpleGraph::cycle(n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(SimpleGraph {
            inner: orbifix::SimpleGraph::complete(n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> PyResult<Self> {
        Ok(SimpleGraph {
            inner: orbifix::SimpleGraph::complete_bipartite(a, b).map_err(err)?,
        })
    }

    fn n_vertices(&self) -> usize {
        self.inner.n_vertices()
    }

    fn n_edges(&self) -> usize {
        self.inner.n_edges()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n_vertices() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_complete_bipartite(&self) -> bool {
        self.inner.is_complete_bipartite()
    }

    fn automorphism_group(&self) -> PyResult<PermGroup> {
        Ok(PermGroup {
            inner: orbifix::aut::automorphism_group(&self.inner).map_err(err)?,
        })
    }

    fn print(&self) -> String {
        self.inner.print()
    }

    fn __repr__(&self) -> String {
        format!(
            "SimpleGraph(n_vertices={}, n_edges={})",
            self.inner.n_vertices(),
            self.inner.n_edges()
        )
    }
}

/// The bound `f(x) = 1 / Γ⁻¹(x - 1)`.
#[pyfunction]
fn f_bound(x: f64) -> PyResult<f64> {
    bounds::f_bound(x).map_err(err)
}

/// The inverse `F` of `x ↦ x(2x)^x`.
#[pyfunction]
fn big_f_bound(y: f64) -> PyResult<f64> {
    bounds::big_f_bound(y).map_err(err)
}

/// The threshold `N_{L,α}` in logarithmic form:
/// `(log10 N, log10 log10 N)`; the first is `inf` when out of float range.
#[pyfunction]
fn n_threshold(c: u64, alpha_num: u64, alpha_den: u64) -> PyResult<(f64, f64)> {
    let t = bounds::n_threshold(c, Rational::new(alpha_num, alpha_den)).map_err(err)?;
    Ok((t.log10, t.log10_log10))
}

/// The wreath action behind the fixity `|Ω|-2` example; returns the group
/// and its relative fixity as a fraction pair.
#[pyfunction]
fn wreath_example(n: usize, m: usize) -> PyResult<(PermGroup, (u64, u64))> {
    let (group, rfx) = orbifix::wreath_example(n, m).map_err(err)?;
    Ok((PermGroup { inner: group }, ratio(rfx)))
}

/// Ids of the built-in catalog entries.
#[pyfunction]
fn catalog_ids() -> PyResult<Vec<String>> {
    Ok(catalog::builtin_catalog()
        .map_err(err)?
        .into_iter()
        .map(|e| e.id)
        .collect())
}

/// One catalog entry: `(graph, group, tags)`.
#[pyfunction]
fn catalog_entry(id: &str) -> PyResult<(SimpleGraph, PermGroup, Vec<String>)> {
    let catalog = catalog::builtin_catalog().map_err(err)?;
    let entry = catalog
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| PyValueError::new_err(format!("no catalog entry {id:?}")))?;
    Ok((
        SimpleGraph { inner: entry.graph },
        PermGroup { inner: entry.group },
        entry.tags.into_iter().collect(),
    ))
}

/// Full verification sweep over the built-in catalog. Returns
/// `(all_hold, csv_report)`.
#[pyfunction]
fn verify_catalog() -> PyResult<(bool, String)> {
    let catalog = catalog::builtin_catalog().map_err(err)?;
    let outcome = catalog::run_verification(&catalog, &catalog::VerificationConfig::default())
        .map_err(err)?;
    Ok((outcome.all_hold(), outcome.to_csv()))
}

#[pymodule]
fn orbifix_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Permutation>()?;
    m.add_class::<PermGroup>()?;
    m.add_class::<SimpleGraph>()?;
    m.add_function(wrap_pyfunction!(f_bound, m)?)?;
    m.add_function(wrap_pyfunction!(big_f_bound, m)?)?;
    m.add_function(wrap_pyfunction!(n_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_example, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_entry, m)?)?;
    m.add_function(wrap_pyfunction!(verify_catalog, m)?)?;
    Ok(())
}
