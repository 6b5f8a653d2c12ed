//! Python bindings: thin wrappers over the core library returning JSON
//! strings, so the Python side stays schema-identical to the CLI.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use logtan_core::detsuite::{
    build_determinant, propn2_check, resolution_check as core_resolution_check,
    semigeneric_section, Flavor,
};
use logtan_core::geom::{cohom_t as core_cohom_t, cover_solutions as core_cover_solutions};
use logtan_core::groebner::hilbert_function;
use logtan_core::hypersurface::{stability_check, Hypersurface};
use logtan_core::quiver::semistability_scan;
use logtan_core::{parse_polynomial, CoreError, FieldSpec, DEFAULT_PRIME};

fn err(e: CoreError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(rationals: bool) -> FieldSpec {
    if rationals {
        FieldSpec::Rationals
    } else {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

fn flavor(name: &str) -> PyResult<Flavor> {
    match name {
        "generic" => Ok(Flavor::Generic),
        "symmetric" => Ok(Flavor::Symmetric),
        other => Err(PyValueError::new_err(format!("unknown flavor: {other}"))),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Parse a polynomial and return its canonical text form.
#[pyfunction]
#[pyo3(signature = (poly, vars, rationals = false))]
fn canonical_form(poly: &str, vars: usize, rationals: bool) -> PyResult<String> {
    let f = parse_polynomial(poly, vars, field(rationals)).map_err(err)?;
    Ok(f.to_text())
}

/// Slope-stability report for a hypersurface, as JSON.
#[pyfunction]
#[pyo3(signature = (poly, vars, rationals = false))]
fn stability(poly: &str, vars: usize, rationals: bool) -> PyResult<String> {
    let f = parse_polynomial(poly, vars, field(rationals)).map_err(err)?;
    let h = Hypersurface::new(f).map_err(err)?;
    to_json(&stability_check(&h).map_err(err)?)
}

/// Betti table check for the determinant of the given size/flavor, JSON.
#[pyfunction]
#[pyo3(signature = (n, flavor_name, rationals = false))]
fn resolution_check(n: usize, flavor_name: &str, rationals: bool) -> PyResult<String> {
    let inst = build_determinant(n, flavor(flavor_name)?, field(rationals)).map_err(err)?;
    to_json(&core_resolution_check(&inst).map_err(err)?)
}

/// Certified semigeneric section: certificate JSON.
#[pyfunction]
#[pyo3(signature = (n, seed = 17))]
fn semigeneric_certificate(n: usize, seed: u64) -> PyResult<String> {
    let sec = semigeneric_section(n, seed, FieldSpec::Prime(DEFAULT_PRIME)).map_err(err)?;
    to_json(&sec.certificate)
}

/// Section-ideal structure report for a certified section, JSON.
#[pyfunction]
#[pyo3(signature = (n, seed = 17))]
fn section_ideal_structure(n: usize, seed: u64) -> PyResult<String> {
    let sec = semigeneric_section(n, seed, FieldSpec::Prime(DEFAULT_PRIME)).map_err(err)?;
    to_json(&propn2_check(&sec).map_err(err)?)
}

/// Exhaustive quiver semistability scan, JSON.
#[pyfunction]
fn quiver_scan(n: i64) -> PyResult<String> {
    to_json(&semistability_scan(n).map_err(err)?)
}

/// Line-bundle cohomology on the plane bundle, JSON.
#[pyfunction]
fn cohom_t(i: i64, j: i64) -> PyResult<String> {
    to_json(&core_cohom_t(i, j))
}

/// Divisor-class solutions of the double-cover system, JSON.
#[pyfunction]
fn cover_solutions(n: i64) -> PyResult<String> {
    to_json(&core_cover_solutions(n).map_err(err)?)
}

/// Hilbert function of a quotient by semicolon-separated generators, JSON.
#[pyfunction]
#[pyo3(signature = (gens, vars, max_degree = 12, rationals = false))]
fn hilbert(gens: &str, vars: usize, max_degree: u32, rationals: bool) -> PyResult<String> {
    let field = field(rationals);
    let gens: Vec<_> = gens
        .split(';')
        .map(|g| parse_polynomial(g.trim(), vars, field))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let hf = hilbert_function(&gens, max_degree).map_err(err)?;
    to_json(&serde_json::json!({
        "values": hf.values,
        "stableFrom": hf.stable_from,
        "projDim": hf.proj_dim,
        "degree": hf.degree,
    }))
}

#[pymodule]
fn logtan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(stability, m)?)?;
    m.add_function(wrap_pyfunction!(resolution_check, m)?)?;
    m.add_function(wrap_pyfunction!(semigeneric_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(section_ideal_structure, m)?)?;
    m.add_function(wrap_pyfunction!(quiver_scan, m)?)?;
    m.add_function(wrap_pyfunction!(cohom_t, m)?)?;
    m.add_function(wrap_pyfunction!(cover_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    Ok(())
}
