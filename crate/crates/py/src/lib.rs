//! Python bindings. Partitions are accepted as strings (`"3,2^2,1"`) or
//! sequences of ints; skew shapes as `"OUTER/INNER"` strings or
//! `(outer, inner)` pairs.

use std::collections::BTreeMap;

use hive_lr::classify::{find_multiplicity_witness, gty_mf, skew_product_mf, stembridge_mf, MfVerdict};
use hive_lr::expansion::{duality_check, product_expansion, skew_expansion, Query};
use hive_lr::hive::{enumerate_lr_hives, free_interior_vertices, lr_coefficient_hive};
use hive_lr::sweep::{verify_sweep, Family};
use hive_lr::tableau::lr_tableau_count;
use hive_lr::witness::{witness as build_witness, Params};
use hive_lr::{Expansion, Method, Partition, SkewShape};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_error(e: hive_lr::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition_arg(obj: &Bound<'_, PyAny>) -> PyResult<Partition> {
    if let Ok(p) = obj.cast::<PyPartition>() {
        return Ok(p.get().0.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(value_error);
    }
    let parts: Vec<usize> = obj.extract()?;
    Partition::new(parts).map_err(value_error)
}

fn skew_arg(obj: &Bound<'_, PyAny>) -> PyResult<SkewShape> {
    if let Ok(s) = obj.cast::<PySkewShape>() {
        return Ok(s.get().0.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(value_error);
    }
    let (outer, inner): (Bound<'_, PyAny>, Bound<'_, PyAny>) = obj.extract()?;
    SkewShape::new(partition_arg(&outer)?, partition_arg(&inner)?).map_err(value_error)
}

fn method_arg(method: &str) -> PyResult<Method> {
    method.parse().map_err(value_error)
}

fn terms(e: &Expansion) -> Vec<(Vec<usize>, u64)> {
    e.terms().map(|(p, c)| (p.parts().to_vec(), c)).collect()
}

fn verdict(v: MfVerdict) -> (bool, Vec<String>) {
    (v.multiplicity_free, v.cases.iter().map(|c| c.to_string()).collect())
}

#[pyclass(name = "Partition", frozen, eq, hash, ord)]
#[derive(PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPartition(Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: &Bound<'_, PyAny>) -> PyResult<Self> {
        partition_arg(parts).map(PyPartition)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn complement(&self, m: usize, n: usize) -> PyResult<Self> {
        self.0.complement(m, n).map(PyPartition).map_err(value_error)
    }

    fn shortness(&self, m: usize, n: usize) -> PyResult<usize> {
        self.0.shortness(m, n).map_err(value_error)
    }

    fn boundary_segments(&self, m: usize, n: usize) -> PyResult<Vec<usize>> {
        self.0.boundary_segments(m, n).map(|s| s.segments).map_err(value_error)
    }

    fn contains(&self, other: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.0.contains(&partition_arg(other)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

#[pyclass(name = "SkewShape", frozen, eq)]
#[derive(PartialEq, Eq)]
struct PySkewShape(SkewShape);

#[pymethods]
impl PySkewShape {
    #[new]
    #[pyo3(signature = (outer, inner=None))]
    fn new(outer: &Bound<'_, PyAny>, inner: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        match inner {
            None => skew_arg(outer).map(PySkewShape),
            Some(inner) => SkewShape::new(partition_arg(outer)?, partition_arg(inner)?)
                .map(PySkewShape)
                .map_err(value_error),
        }
    }

    #[getter]
    fn outer(&self) -> Vec<usize> {
        self.0.outer().parts().to_vec()
    }

    #[getter]
    fn inner(&self) -> Vec<usize> {
        self.0.inner().parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn is_basic(&self) -> bool {
        self.0.is_basic()
    }

    fn to_basic(&self) -> Self {
        PySkewShape(self.0.to_basic())
    }

    fn rotate_pi(&self) -> Self {
        PySkewShape(self.0.rotate_pi())
    }

    fn ascii(&self) -> String {
        self.0.ascii()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SkewShape('{}')", self.0)
    }
}

/// `c^lambda_{mu nu}`.
#[pyfunction]
#[pyo3(signature = (lam, mu, nu, method="hive"))]
fn lr_coefficient(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>, nu: &Bound<'_, PyAny>, method: &str) -> PyResult<u64> {
    let (l, m, n) = (partition_arg(lam)?, partition_arg(mu)?, partition_arg(nu)?);
    Ok(match method_arg(method)? {
        Method::Hive => lr_coefficient_hive(&l, &m, &n),
        Method::Tableau => lr_tableau_count(&l, &m, &n),
    })
}

/// Terms of `s_mu s_nu` as `(parts, coefficient)`, decreasing.
#[pyfunction]
#[pyo3(signature = (mu, nu, method="hive"))]
fn product(mu: &Bound<'_, PyAny>, nu: &Bound<'_, PyAny>, method: &str) -> PyResult<Vec<(Vec<usize>, u64)>> {
    Ok(terms(&product_expansion(&partition_arg(mu)?, &partition_arg(nu)?, method_arg(method)?)))
}

/// Terms of `s_{lambda/mu}`.
#[pyfunction]
#[pyo3(signature = (shape, method="hive"))]
fn skew(shape: &Bound<'_, PyAny>, method: &str) -> PyResult<Vec<(Vec<usize>, u64)>> {
    Ok(terms(&skew_expansion(&skew_arg(shape)?, method_arg(method)?)))
}

#[pyfunction]
fn duality(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>, nu: &Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(duality_check(&partition_arg(lam)?, &partition_arg(mu)?, &partition_arg(nu)?))
}

/// `(multiplicity_free, cases)` for `s_mu s_nu`.
#[pyfunction]
fn mf_product(mu: &Bound<'_, PyAny>, nu: &Bound<'_, PyAny>) -> PyResult<(bool, Vec<String>)> {
    Ok(verdict(stembridge_mf(&partition_arg(mu)?, &partition_arg(nu)?)))
}

#[pyfunction]
fn mf_skew(shape: &Bound<'_, PyAny>) -> PyResult<(bool, Vec<String>)> {
    gty_mf(&skew_arg(shape)?).map(verdict).map_err(value_error)
}

#[pyfunction]
fn mf_skew_product(theta: &Bound<'_, PyAny>, phi: &Bound<'_, PyAny>) -> PyResult<(bool, Vec<String>)> {
    skew_product_mf(&skew_arg(theta)?, &skew_arg(phi)?).map(verdict).map_err(value_error)
}

/// Smallest partition with coefficient at least 2 in `s_mu s_nu`, if any.
#[pyfunction]
#[pyo3(signature = (mu, nu, method="hive"))]
fn product_multiplicity_witness(
    mu: &Bound<'_, PyAny>,
    nu: &Bound<'_, PyAny>,
    method: &str,
) -> PyResult<Option<(Vec<usize>, u64)>> {
    let q = Query::Product { mu: partition_arg(mu)?, nu: partition_arg(nu)? };
    let w = find_multiplicity_witness(&q, method_arg(method)?).map_err(value_error)?;
    Ok(w.map(|(p, c)| (p.parts().to_vec(), c)))
}

/// Builds the witness for a case label from integer parameters, e.g.
/// `witness("T1", a=3, b=2, c=1, d=1, e=1)`.
#[pyfunction]
#[pyo3(signature = (case, **params))]
fn witness<'py>(py: Python<'py>, case: &str, params: Option<&Bound<'py, PyDict>>) -> PyResult<Bound<'py, PyDict>> {
    let mut values = BTreeMap::new();
    if let Some(params) = params {
        for (k, v) in params.iter() {
            let name: String = k.extract()?;
            let mut chars = name.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => values.insert(c, v.extract::<i64>()?),
                _ => return Err(PyValueError::new_err(format!("bad parameter name {name}"))),
            };
        }
    }
    let pairs: Vec<(char, i64)> = values.into_iter().collect();
    let w = build_witness(case, &Params::new(&pairs)).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("case", w.case.to_string())?;
    out.set_item("lambda", w.lambda.parts().to_vec())?;
    out.set_item("mu", w.mu.parts().to_vec())?;
    out.set_item("nu", w.nu.parts().to_vec())?;
    out.set_item("constructed", w.constructed.parts().to_vec())?;
    out.set_item("coefficient", w.coefficient())?;
    out.set_item("expected", w.expected.to_string())?;
    out.set_item("verified", w.verify())?;
    Ok(out)
}

/// All LR-hives of size `n` as apex rows.
#[pyfunction]
fn hives(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>, nu: &Bound<'_, PyAny>, n: usize) -> PyResult<Vec<Vec<Vec<i64>>>> {
    let hs = enumerate_lr_hives(&partition_arg(lam)?, &partition_arg(mu)?, &partition_arg(nu)?, n).map_err(value_error)?;
    Ok(hs.iter().map(|h| h.apex_rows()).collect())
}

#[pyfunction]
fn free_vertices(
    lam: &Bound<'_, PyAny>,
    mu: &Bound<'_, PyAny>,
    nu: &Bound<'_, PyAny>,
    n: usize,
) -> PyResult<Vec<(usize, usize)>> {
    free_interior_vertices(&partition_arg(lam)?, &partition_arg(mu)?, &partition_arg(nu)?, n).map_err(value_error)
}

/// `(checked, agree, disagree)` for a classifier sweep over an `m x n` box.
#[pyfunction]
#[pyo3(signature = (family, m, n, sample=None, seed=0, method="hive"))]
fn verify(family: &str, m: usize, n: usize, sample: Option<usize>, seed: u64, method: &str) -> PyResult<(usize, usize, usize)> {
    let family: Family = family.parse().map_err(value_error)?;
    let r = verify_sweep(family, m, n, sample, seed, method_arg(method)?);
    Ok((r.checked, r.agree, r.disagree))
}

#[pymodule]
fn hivelr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PySkewShape>()?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(skew, m)?)?;
    m.add_function(wrap_pyfunction!(duality, m)?)?;
    m.add_function(wrap_pyfunction!(mf_product, m)?)?;
    m.add_function(wrap_pyfunction!(mf_skew, m)?)?;
    m.add_function(wrap_pyfunction!(mf_skew_product, m)?)?;
    m.add_function(wrap_pyfunction!(product_multiplicity_witness, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(hives, m)?)?;
    m.add_function(wrap_pyfunction!(free_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
