//! Python module `mzv_shuffle_py`.

use ::mzv_shuffle as core;
use core::numeric::{self, DEFAULT_TERMS};
use core::restricted::{self, DoubleRun};
use core::suites::{self, Suite};
use core::{Error, ExponentForm, Format};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(text: &str) -> PyResult<core::Word> {
    core::parse_word(text).map_err(py_err)
}

fn exps(a: Vec<u32>) -> PyResult<ExponentForm> {
    ExponentForm::new(a).map_err(py_err)
}

/// Integer linear combination of words over {x, y}.
#[pyclass(name = "LinComb", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLinComb(core::LinComb);

#[pymethods]
impl PyLinComb {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::LinComb::from_json(text).map(PyLinComb).map_err(py_err)
    }

    /// `(word, coefficient)` pairs in canonical word order.
    fn terms(&self) -> Vec<(String, BigInt)> {
        self.0.iter().map(|(w, c)| (w.to_string(), c.clone())).collect()
    }

    fn coefficient(&self, w: &str) -> PyResult<BigInt> {
        Ok(self.0.coefficient(&word(w)?))
    }

    fn coefficient_sum(&self) -> BigInt {
        self.0.coefficient_sum()
    }

    fn latex(&self) -> String {
        self.0.render(Format::Latex)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    /// ζ of every term, summed; all words must be admissible.
    #[pyo3(signature = (terms = DEFAULT_TERMS))]
    fn zeta(&self, terms: u64) -> PyResult<(f64, f64)> {
        let r = numeric::zeta_of_lincomb(&self.0, terms).map_err(py_err)?;
        Ok((r.value, r.err_est))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyLinComb(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyLinComb(&self.0 - &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LinComb({})", self.0)
    }
}

/// Shuffle two words given as text such as `"x^2y"`.
#[pyfunction]
#[pyo3(signature = (u, v, method = "recursive"))]
fn shuffle(u: &str, v: &str, method: &str) -> PyResult<PyLinComb> {
    let (u, v) = (word(u)?, word(v)?);
    let p = match method {
        "recursive" => core::shuffle_recursive(&u, &v),
        "permutation" => core::shuffle_permutation(&u, &v),
        "general" => core::expand_general(
            &core::to_exponent_form(&u).map_err(py_err)?,
            &core::to_exponent_form(&v).map_err(py_err)?,
        ),
        _ => return Err(PyValueError::new_err(format!("unknown method {method:?}"))),
    };
    Ok(PyLinComb(p))
}

#[pyfunction]
fn shuffle_nfold(words: Vec<String>) -> PyResult<PyLinComb> {
    let ws = words.iter().map(|w| word(w)).collect::<PyResult<Vec<_>>>()?;
    core::shuffle_nfold(&ws).map(PyLinComb).map_err(py_err)
}

/// Closed-form expansion of two h¹ words in exponent form.
#[pyfunction]
fn expand_general(a: Vec<u32>, b: Vec<u32>) -> PyResult<PyLinComb> {
    Ok(PyLinComb(core::expand_general(&exps(a)?, &exps(b)?)))
}

#[pyfunction]
fn coeff_general(alphas: Vec<u32>, a: Vec<u32>, b: Vec<u32>) -> PyResult<BigInt> {
    let alphas = core::AlphaTuple::new(alphas);
    core::coeff_general(&alphas, &exps(a)?, &exps(b)?).map_err(py_err)
}

#[pyfunction]
fn expand_euler(a: u32, b: u32) -> PyLinComb {
    PyLinComb(core::expand_euler(a, b))
}

#[pyfunction]
fn expand_1_s(a: u32, b: Vec<u32>) -> PyResult<PyLinComb> {
    Ok(PyLinComb(core::expand_1_s(a, &exps(b)?)))
}

#[pyfunction]
fn expand_res_1_1(a: u32, r: u32, b: u32, s: u32) -> PyResult<PyLinComb> {
    restricted::expand_res_1_1(a, r, b, s).map(PyLinComb).map_err(py_err)
}

#[pyfunction]
fn expand_res_1_2(a: u32, r: u32, b1: u32, s1: u32, b2: u32, s2: u32) -> PyResult<PyLinComb> {
    restricted::expand_res_1_2(a, r, b1, s1, b2, s2).map(PyLinComb).map_err(py_err)
}

/// Each factor is `(a1, r1, a2, r2)` for `x^{a1} y^{r1} x^{a2} y^{r2}`.
#[pyfunction]
fn expand_res_2_2(u: (u32, u32, u32, u32), v: (u32, u32, u32, u32)) -> PyResult<PyLinComb> {
    let run = |(a1, r1, a2, r2)| DoubleRun::new(a1, r1, a2, r2);
    restricted::expand_res_2_2(run(u), run(v)).map(PyLinComb).map_err(py_err)
}

/// Factors `x^{a_i} y^{r_i}` given as `(a_i, r_i)`.
#[pyfunction]
fn expand_nfold(factors: Vec<(u32, u32)>) -> PyResult<PyLinComb> {
    restricted::expand_nfold(&factors).map(PyLinComb).map_err(py_err)
}

/// `(value, err_est)` for ζ at an index such as `"3,1"`.
#[pyfunction]
#[pyo3(signature = (index, terms = DEFAULT_TERMS))]
fn zeta(index: &str, terms: u64) -> PyResult<(f64, f64)> {
    let idx: core::MzvIndex = index.parse().map_err(py_err)?;
    let r = numeric::mzv_eval(&idx, terms).map_err(py_err)?;
    Ok((r.value, r.err_est))
}

/// `(residual, bound, passes)` for ζ(u)ζ(v) = ζ(u ⧢ v).
#[pyfunction]
#[pyo3(signature = (u, v, terms = DEFAULT_TERMS))]
fn identity_check(u: &str, v: &str, terms: u64) -> PyResult<(f64, f64, bool)> {
    let c = numeric::identity_check(&word(u)?, &word(v)?, terms).map_err(py_err)?;
    Ok((c.residual, c.bound, c.passes()))
}

/// Runs a verification suite and returns its report as JSON text.
#[pyfunction]
fn verify(suite: &str, max_weight: u32) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    Ok(serde_json::to_string(&suites::run_suite(suite, max_weight)).expect("report serializes"))
}

#[pymodule]
fn mzv_shuffle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLinComb>()?;
    m.add_function(wrap_pyfunction!(shuffle, m)?)?;
    m.add_function(wrap_pyfunction!(shuffle_nfold, m)?)?;
    m.add_function(wrap_pyfunction!(expand_general, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_general, m)?)?;
    m.add_function(wrap_pyfunction!(expand_euler, m)?)?;
    m.add_function(wrap_pyfunction!(expand_1_s, m)?)?;
    m.add_function(wrap_pyfunction!(expand_res_1_1, m)?)?;
    m.add_function(wrap_pyfunction!(expand_res_1_2, m)?)?;
    m.add_function(wrap_pyfunction!(expand_res_2_2, m)?)?;
    m.add_function(wrap_pyfunction!(expand_nfold, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(identity_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
