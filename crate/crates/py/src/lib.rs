//! Python bindings: fields, curves, the code families, weight analysis, and
//! the named checks, mirroring the CLI surface.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nt_codes::checks::{self, CheckRequest};
use nt_codes::code::{self, dual_weight_search, SearchOptions};
use nt_codes::curve::{Curve, Point};
use nt_codes::families::CodeFamilySpec;
use nt_codes::gf::{Felt, Field};

fn err(e: nt_codes::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Field", frozen)]
struct PyField {
    inner: Arc<Field>,
}

#[pymethods]
impl PyField {
    #[new]
    fn new(q: u64, r: u32) -> PyResult<Self> {
        Ok(PyField {
            inner: Arc::new(Field::from_q(q, r).map_err(err)?),
        })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q
    }

    #[getter]
    fn r(&self) -> u32 {
        self.inner.r
    }

    #[getter]
    fn order(&self) -> u64 {
        self.inner.order
    }

    #[getter]
    fn c(&self) -> u64 {
        self.inner.c
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        self.range(a)?;
        self.range(b)?;
        Ok(self.inner.add(Felt(a), Felt(b)).0)
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        self.range(a)?;
        self.range(b)?;
        Ok(self.inner.mul(Felt(a), Felt(b)).0)
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        self.range(a)?;
        if a == 0 {
            return Err(PyValueError::new_err("zero has no inverse"));
        }
        Ok(self.inner.inv(Felt(a)).0)
    }

    fn pow(&self, a: u32, k: u64) -> PyResult<u32> {
        self.range(a)?;
        Ok(self.inner.pow(Felt(a), k).0)
    }

    fn trace(&self, a: u32) -> PyResult<u32> {
        self.range(a)?;
        Ok(self.inner.trace_to_base(Felt(a)).0)
    }

    fn norm(&self, a: u32) -> PyResult<u32> {
        self.range(a)?;
        Ok(self.inner.norm_to_base(Felt(a)).0)
    }

    fn poly_string(&self, a: u32) -> PyResult<String> {
        self.range(a)?;
        Ok(self.inner.poly_string(Felt(a)))
    }
}

impl PyField {
    fn range(&self, a: u32) -> PyResult<()> {
        if (a as u64) < self.inner.order {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "element index {} outside 0..{}",
                a, self.inner.order
            )))
        }
    }
}

#[pyclass(name = "Curve", frozen)]
struct PyCurve {
    inner: Curve,
}

#[pymethods]
impl PyCurve {
    #[new]
    fn new(q: u64, r: u32) -> PyResult<Self> {
        let field = Arc::new(Field::from_q(q, r).map_err(err)?);
        Ok(PyCurve {
            inner: Curve::build(field).map_err(err)?,
        })
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.inner.genus
    }

    #[getter]
    fn c(&self) -> u64 {
        self.inner.c()
    }

    /// Affine rational points as (x_index, y_index) pairs, in build order.
    fn points(&self) -> Vec<(u32, u32)> {
        self.inner
            .affine_points
            .iter()
            .map(|p| {
                let Point::Affine(x, y) = *p else { unreachable!() };
                (x.0, y.0)
            })
            .collect()
    }

    fn on_curve(&self, x: u32, y: u32) -> bool {
        self.inner.on_curve(Point::Affine(Felt(x), Felt(y)))
    }
}

#[pyclass(name = "Code", frozen)]
struct PyCode {
    inner: code::LinearCode,
}

#[pymethods]
impl PyCode {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    fn generator(&self) -> Vec<Vec<u32>> {
        (0..self.inner.k())
            .map(|i| self.inner.gen.row(i).iter().map(|c| c.0).collect())
            .collect()
    }

    fn dual(&self) -> PyCode {
        PyCode {
            inner: code::dual(&self.inner),
        }
    }

    /// Dual minimum distance and weight counts up to w_max.
    fn analyze<'py>(&self, py: Python<'py>, w_max: usize) -> PyResult<Bound<'py, PyDict>> {
        let rep = dual_weight_search(
            &self.inner.gen,
            &self.inner.points,
            w_max,
            SearchOptions::default(),
        );
        let out = PyDict::new(py);
        out.set_item("dual_distance", rep.min_distance)?;
        let counts = PyDict::new(py);
        for (w, c) in &rep.counts {
            counts.set_item(w, c)?;
        }
        out.set_item("counts", counts)?;
        let supports: Vec<Vec<(u32, u32)>> = rep
            .supports
            .iter()
            .map(|s| {
                s.points
                    .iter()
                    .map(|p| {
                        let Point::Affine(x, y) = *p else { unreachable!() };
                        (x.0, y.0)
                    })
                    .collect()
            })
            .collect();
        out.set_item("supports", supports)?;
        Ok(out)
    }
}

fn spec_from_args(
    family: &str,
    d: Option<i64>,
    a: Option<u64>,
    b: Option<u64>,
    s: Option<i64>,
    m: Option<u64>,
    n: Option<u64>,
) -> PyResult<CodeFamilySpec> {
    let need_d = || d.ok_or_else(|| PyValueError::new_err("family requires d"));
    Ok(match family {
        "cd" => CodeFamilySpec::Cd { d: need_d()? },
        "cda" => CodeFamilySpec::Cda {
            d: need_d()?,
            a: a.unwrap_or(0),
        },
        "cdab" => CodeFamilySpec::Cdab {
            d: need_d()?,
            a: a.unwrap_or(0),
            b: b.unwrap_or(0),
        },
        "one_point" => CodeFamilySpec::OnePoint {
            s: s.ok_or_else(|| PyValueError::new_err("one_point requires s"))?,
        },
        "two_point" => CodeFamilySpec::TwoPoint {
            m: m.ok_or_else(|| PyValueError::new_err("two_point requires m"))?,
            n: n.unwrap_or(0),
        },
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown family {:?}",
                other
            )))
        }
    })
}

/// Build one of the code families on the given curve.
#[pyfunction]
#[pyo3(signature = (curve, family, d=None, a=None, b=None, s=None, m=None, n=None))]
#[allow(clippy::too_many_arguments)]
fn build_code(
    curve: &PyCurve,
    family: &str,
    d: Option<i64>,
    a: Option<u64>,
    b: Option<u64>,
    s: Option<i64>,
    m: Option<u64>,
    n: Option<u64>,
) -> PyResult<PyCode> {
    let spec = spec_from_args(family, d, a, b, s, m, n)?;
    Ok(PyCode {
        inner: spec.build(&curve.inner).map_err(err)?,
    })
}

/// Run a named check; returns the outcome as a dict (verdict, params,
/// claimed, computed, witness).
#[pyfunction]
#[pyo3(signature = (curve, name, seed=0, d=None, a=None, b=None, s=None, trials=None, e_points=None, e_line=None))]
#[allow(clippy::too_many_arguments)]
fn run_check<'py>(
    py: Python<'py>,
    curve: &PyCurve,
    name: &str,
    seed: u64,
    d: Option<i64>,
    a: Option<u64>,
    b: Option<u64>,
    s: Option<i64>,
    trials: Option<u64>,
    e_points: Option<usize>,
    e_line: Option<String>,
) -> PyResult<Bound<'py, PyDict>> {
    let req = CheckRequest {
        name: name.to_string(),
        d,
        a,
        b,
        s,
        trials,
        e_points,
        e_line,
    };
    let outcome = checks::run_check(&curve.inner, &req, seed).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("id", &outcome.id)?;
    out.set_item("verdict", format!("{:?}", outcome.verdict))?;
    let params = PyDict::new(py);
    for (k, v) in &outcome.params {
        params.set_item(k, v)?;
    }
    out.set_item("params", params)?;
    out.set_item("claimed", outcome.claimed.clone())?;
    out.set_item("computed", outcome.computed.clone())?;
    out.set_item("witness", outcome.witness.clone())?;
    out.set_item("seed", outcome.seed)?;
    out.set_item("elapsed_ms", outcome.elapsed_ms)?;
    Ok(out)
}

#[pyfunction]
fn check_names() -> Vec<&'static str> {
    checks::CHECK_NAMES.to_vec()
}

#[pymodule]
fn ntcodes(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyCurve>()?;
    m.add_class::<PyCode>()?;
    m.add_function(wrap_pyfunction!(build_code, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(check_names, m)?)?;
    Ok(())
}
