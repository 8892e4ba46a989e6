//! Python bindings. Geometries and hypergraphs travel as JSON strings in
//! the same formats the CLI uses; reports come back as JSON strings too.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sparsegeom::engine::{run_extraction, run_recognition};
use sparsegeom::generate;
use sparsegeom::geometry::IncidenceGeometry;
use sparsegeom::hypergraph::{self, Hypergraph};
use sparsegeom::oracle::{self, OracleBounds};
use sparsegeom::SparsityParams;

fn err(e: sparsegeom::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn params(lambda: u32, k1: u32, k2: u32, l: u32) -> PyResult<SparsityParams> {
    SparsityParams::new(lambda, k1, k2, l).map_err(err)
}

fn geometry(json: &str) -> PyResult<IncidenceGeometry> {
    IncidenceGeometry::from_json(json).map_err(err)
}

fn report<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

/// Validate and normalize a parameter quadruple.
#[pyfunction]
fn normalize_params(lambda: u32, k1: u32, k2: u32, l: u32) -> PyResult<(u32, u32, u32, u32)> {
    Ok(params(lambda, k1, k2, l)?.as_tuple())
}

/// Decide sparsity/tightness; returns the verdict report as JSON.
#[pyfunction]
fn check(geometry_json: &str, lambda: u32, k1: u32, k2: u32, l: u32) -> PyResult<String> {
    let g = geometry(geometry_json)?;
    let p = params(lambda, k1, k2, l)?;
    let v = run_recognition(&g, p).map_err(err)?;
    Ok(report(&v.to_report(&g)))
}

/// Extract a maximum sparse subgeometry (lambda = 1); verdict report JSON.
#[pyfunction]
fn extract(geometry_json: &str, k1: u32, k2: u32, l: u32) -> PyResult<String> {
    let g = geometry(geometry_json)?;
    let p = params(1, k1, k2, l)?;
    let v = run_extraction(&g, p).map_err(err)?;
    Ok(report(&v.to_report(&g)))
}

/// Exhaustive reference verdict; report JSON.
#[pyfunction]
#[pyo3(signature = (geometry_json, lambda, k1, k2, l, bound = 16))]
fn oracle_check(
    geometry_json: &str,
    lambda: u32,
    k1: u32,
    k2: u32,
    l: u32,
    bound: usize,
) -> PyResult<String> {
    let g = geometry(geometry_json)?;
    let p = params(lambda, k1, k2, l)?;
    let v = oracle::brute_force_verdict(&g, &p, &OracleBounds::with_limit(bound)).map_err(err)?;
    Ok(report(&v.to_report(&g)))
}

/// Exhaustive maximum sparse incidence subset, as (point, line) name pairs.
#[pyfunction]
#[pyo3(signature = (geometry_json, lambda, k1, k2, l, bound = 20))]
fn max_sparse_subset(
    geometry_json: &str,
    lambda: u32,
    k1: u32,
    k2: u32,
    l: u32,
    bound: usize,
) -> PyResult<Vec<(String, String)>> {
    let g = geometry(geometry_json)?;
    let p = params(lambda, k1, k2, l)?;
    let subset =
        oracle::max_sparse_subset(&g, &p, &OracleBounds::with_limit(bound)).map_err(err)?;
    Ok(subset
        .iter()
        .map(|&i| {
            let (pt, ln) = g.incidences()[i];
            (g.point_name(pt).to_owned(), g.line_name(ln).to_owned())
        })
        .collect())
}

/// Reduce a hypergraph (JSON) to its incidence geometry (JSON).
#[pyfunction]
fn convert_hypergraph(hypergraph_json: &str) -> PyResult<String> {
    let h = Hypergraph::from_json(hypergraph_json).map_err(err)?;
    Ok(hypergraph::hypergraph_to_geometry(&h).to_json())
}

/// Parameters matching (k, l)-sparsity of an r-uniform hypergraph.
#[pyfunction]
#[pyo3(signature = (k, l, r, lambda = None))]
fn derive_hypergraph_params(
    k: u32,
    l: u32,
    r: usize,
    lambda: Option<u32>,
) -> PyResult<(u32, u32, u32, u32)> {
    Ok(hypergraph::derive_params(k, l, r, lambda).map_err(err)?.as_tuple())
}

/// Build a (1, k1, k2, l)-tight geometry with n points and m lines (JSON).
#[pyfunction]
fn generate_tight(k1: u32, k2: u32, l: u32, n: usize, m: usize) -> PyResult<String> {
    let p = params(1, k1, k2, l)?;
    Ok(generate::construct_tight_geometry(&p, n, m).map_err(err)?.to_json())
}

/// Seeded Bernoulli incidences on an n x m grid (JSON).
#[pyfunction]
fn random_geometry(n: usize, m: usize, density: f64, seed: u64) -> PyResult<String> {
    if !(0.0..=1.0).contains(&density) {
        return Err(PyValueError::new_err("density must be in [0, 1]"));
    }
    Ok(generate::random_geometry(n, m, density, seed).to_json())
}

/// Pairwise basis-exchange check of two tight geometries; report JSON.
#[pyfunction]
fn verify_matroid_pair(
    first_json: &str,
    second_json: &str,
    lambda: u32,
    k1: u32,
    k2: u32,
    l: u32,
) -> PyResult<String> {
    let g1 = geometry(first_json)?;
    let g2 = geometry(second_json)?;
    let p = params(lambda, k1, k2, l)?;
    let r = oracle::verify_matroid_pairwise(&g1, &g2, &p).map_err(err)?;
    Ok(report(&r))
}

#[pymodule]
fn sparsegeom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(normalize_params, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(extract, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_check, m)?)?;
    m.add_function(wrap_pyfunction!(max_sparse_subset, m)?)?;
    m.add_function(wrap_pyfunction!(convert_hypergraph, m)?)?;
    m.add_function(wrap_pyfunction!(derive_hypergraph_params, m)?)?;
    m.add_function(wrap_pyfunction!(generate_tight, m)?)?;
    m.add_function(wrap_pyfunction!(random_geometry, m)?)?;
    m.add_function(wrap_pyfunction!(verify_matroid_pair, m)?)?;
    Ok(())
}
