//! Python bindings. Every function returns plain dicts and lists built from
//! the JSON form of the core types.

use pyo3::exceptions::{PyLookupError, PyOSError, PyValueError};
use pyo3::prelude::*;

use magical_core::dataset::{classify_exceptional, default_records};
use magical_core::magical::FormFamily;
use magical_core::moduli::rigidity_report;
use magical_core::orbits::{check_partition, enumerate_signed_data, orbit_labels, weighted_dynkin_for_label};
use magical_core::realforms::centralizer_realform;
use magical_core::verify::run_suite;
use magical_core::{
    ad_grading, build_root_system, classify_family as core_classify_family, classify_real_form, describe as core_describe,
    module_multiplicities, Error, Family, LieType, Partition, RealForm, Result,
};

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("core types serialize to JSON")
}

pub fn sl2_data_json(family: &str, rank: usize, partition: &str) -> Result<String> {
    let t = LieType::new(family.parse::<Family>()?, rank)?;
    let p: Partition = partition.parse()?;
    check_partition(t, &p)?;
    let label = orbit_labels(t)?.into_iter().find(|l| l.partition == p).expect("checked partition has a label");
    let w = weighted_dynkin_for_label(t, &label)?;
    let d = module_multiplicities(&ad_grading(&build_root_system(t), &w)?)?;
    Ok(to_json(&serde_json::json!({ "wdd": w.labels(), "sl2": d })))
}

pub fn describe_json(form: &str) -> Result<String> {
    Ok(to_json(&core_describe(form.parse()?)?))
}

pub fn classify_json(form: &str) -> Result<String> {
    let form: RealForm = form.parse()?;
    match form {
        RealForm::Exceptional { .. } => Ok(to_json(&classify_exceptional(&default_records()?, form)?)),
        _ => Ok(to_json(&classify_real_form(form)?)),
    }
}

pub fn classify_family_json(family: &str, up_to: usize) -> Result<String> {
    Ok(to_json(&core_classify_family(family.parse::<FormFamily>()?, up_to)?))
}

pub fn slodowy_json(form: &str, partition: &str, genus: u32, all: bool) -> Result<String> {
    let form: RealForm = form.parse()?;
    let p: Partition = partition.parse()?;
    check_partition(form.complex_type()?, &p)?;
    let mut out = Vec::new();
    for s in enumerate_signed_data(form, &p) {
        if all || centralizer_realform(form, &s)?.is_compact {
            out.push(rigidity_report(genus, form, &p, &s)?);
        }
    }
    Ok(to_json(&out))
}

pub fn verify_json(max_rank: usize) -> Result<String> {
    Ok(to_json(&run_suite(max_rank)?))
}

fn py_err(e: Error) -> PyErr {
    match e {
        Error::MissingData(_) => PyLookupError::new_err(e.to_string()),
        Error::Io(_) => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn loads<'py>(py: Python<'py>, text: Result<String>) -> PyResult<Bound<'py, PyAny>> {
    let text = text.map_err(py_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Weighted Dynkin diagram and sl2-module multiplicities of a classical orbit.
#[pyfunction]
fn sl2_data<'py>(py: Python<'py>, family: &str, rank: usize, partition: &str) -> PyResult<Bound<'py, PyAny>> {
    loads(py, sl2_data_json(family, rank, partition))
}

/// Dimensions and Hermitian data of a real form such as `su(2,3)`.
#[pyfunction]
fn describe<'py>(py: Python<'py>, form: &str) -> PyResult<Bound<'py, PyAny>> {
    loads(py, describe_json(form))
}

/// Extended magical orbits of one real form.
#[pyfunction]
fn classify<'py>(py: Python<'py>, form: &str) -> PyResult<Bound<'py, PyAny>> {
    loads(py, classify_json(form))
}

/// Extended magical orbits of every form of a family up to a size bound.
#[pyfunction]
fn classify_family<'py>(py: Python<'py>, family: &str, up_to: usize) -> PyResult<Bound<'py, PyAny>> {
    loads(py, classify_family_json(family, up_to))
}

/// Slodowy parameter counts for the signed data of a classical orbit.
#[pyfunction]
#[pyo3(signature = (form, partition, genus, all = false))]
fn slodowy<'py>(py: Python<'py>, form: &str, partition: &str, genus: u32, all: bool) -> PyResult<Bound<'py, PyAny>> {
    loads(py, slodowy_json(form, partition, genus, all))
}

/// Runs the consistency suite.
#[pyfunction]
#[pyo3(signature = (max_rank = 5))]
fn verify<'py>(py: Python<'py>, max_rank: usize) -> PyResult<Bound<'py, PyAny>> {
    loads(py, verify_json(max_rank))
}

#[pymodule]
fn magical(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(sl2_data, m)?)?;
    m.add_function(wrap_pyfunction!(describe, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_family, m)?)?;
    m.add_function(wrap_pyfunction!(slodowy, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
