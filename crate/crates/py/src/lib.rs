//! Python bindings for the skein calculus.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use skein::bmw::Bmw;
use skein::coeff::parse_ratfunc;
use skein::handlebody::{self, Cut, HandlebodyElement};
use skein::tangle::{parse_tangle, parse_tangle_file};
use skein::{RatFunc, SkeinError, SkeinElement, TangleWord, YoungDiagram};

fn err(e: SkeinError) -> PyErr {
    match e {
        SkeinError::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn partition(text: &str) -> PyResult<YoungDiagram> {
    text.parse().map_err(err)
}

/// Rational function in `a` and `s` with exact integer coefficients.
#[pyclass(name = "RatFunc", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyRatFunc(RatFunc);

#[pymethods]
impl PyRatFunc {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_ratfunc(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn alpha() -> Self {
        Self(RatFunc::alpha())
    }

    #[staticmethod]
    fn s() -> Self {
        Self(RatFunc::s())
    }

    #[staticmethod]
    fn z() -> Self {
        Self(RatFunc::z())
    }

    #[staticmethod]
    fn delta() -> Self {
        Self(RatFunc::delta())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(Self).map_err(err)
    }

    fn __add__(&self, o: &Self) -> Self {
        Self(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        Self(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        Self(&self.0 * &o.0)
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_div(&o.0).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RatFunc(\"{}\")", self.0)
    }
}

/// A tangle diagram given as a word of slices.
#[pyclass(name = "Tangle", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyTangle(TangleWord);

#[pymethods]
impl PyTangle {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_tangle(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(TangleWord::identity(n))
    }

    #[getter]
    fn src(&self) -> usize {
        self.0.src()
    }

    #[getter]
    fn dst(&self) -> usize {
        self.0.dst()
    }

    fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    /// `self` stacked on top of `other`.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        TangleWord::compose(&self.0, &other.0).map(Self).map_err(err)
    }

    fn tensor(&self, other: &Self) -> Self {
        Self(TangleWord::tensor(&self.0, &other.0))
    }

    fn closure(&self) -> PyResult<Self> {
        TangleWord::closure(&self.0).map(Self).map_err(err)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }
}

/// Reduced element of the skein module, a combination of Brauer matchings.
#[pyclass(name = "SkeinElement", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySkeinElement(SkeinElement);

#[pymethods]
impl PySkeinElement {
    #[getter]
    fn src(&self) -> usize {
        self.0.src()
    }

    #[getter]
    fn dst(&self) -> usize {
        self.0.dst()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// `(coefficient, matching)` pairs in canonical order.
    fn terms(&self) -> Vec<(PyRatFunc, String)> {
        self.0
            .terms()
            .iter()
            .map(|(m, c)| (PyRatFunc(c.clone()), m.to_string()))
            .collect()
    }

    fn scalar(&self) -> Option<PyRatFunc> {
        self.0.as_scalar().map(PyRatFunc)
    }

    fn __str__(&self) -> String {
        self.0.to_text().trim_end().to_string()
    }
}

/// Skein engine with the BMW algebra built on top of it.
#[pyclass(name = "Skein", frozen)]
struct PySkein(Bmw);

#[pymethods]
impl PySkein {
    #[new]
    #[pyo3(signature = (max_n = None))]
    fn new(max_n: Option<usize>) -> Self {
        let bmw = Bmw::default();
        Self(match max_n {
            Some(n) => bmw.with_max_n(n),
            None => bmw,
        })
    }

    fn reduce(&self, t: &PyTangle) -> PySkeinElement {
        PySkeinElement(self.0.engine().reduce_word(&t.0))
    }

    /// Reduce a tangle file, optionally holding several quoted-coefficient blocks.
    fn reduce_text(&self, text: &str) -> PyResult<PySkeinElement> {
        let terms = parse_tangle_file(text)
            .map_err(err)?
            .into_iter()
            .map(|b| {
                let c = match &b.coeff {
                    Some(t) => parse_ratfunc(t)?,
                    None => RatFunc::one(),
                };
                Ok((c, b.word))
            })
            .collect::<Result<Vec<_>, SkeinError>>()
            .map_err(err)?;
        self.0.engine().reduce(&terms).map(PySkeinElement).map_err(err)
    }

    fn kauffman_poly(&self, t: &PyTangle) -> PyResult<PyRatFunc> {
        self.0.engine().kauffman_poly(&t.0).map(PyRatFunc).map_err(err)
    }

    fn mul(&self, x: &PySkeinElement, y: &PySkeinElement) -> PyResult<PySkeinElement> {
        self.0.mul(&x.0, &y.0).map(PySkeinElement).map_err(err)
    }

    fn dim(&self, n: usize) -> PyResult<usize> {
        self.0.basis(n).map(|b| b.len()).map_err(err)
    }

    fn ytilde(&self, lambda: &str) -> PyResult<PySkeinElement> {
        self.0.ytilde(&partition(lambda)?).map(PySkeinElement).map_err(err)
    }

    fn qdim(&self, lambda: &str) -> PyResult<PyRatFunc> {
        self.0.qdim(&partition(lambda)?).map(PyRatFunc).map_err(err)
    }

    /// Reduce a handlebody element across a cut such as `"1"` or `"m1"`.
    fn hb_reduce(&self, text: &str, cut: &str) -> PyResult<String> {
        let x = HandlebodyElement::parse(text).map_err(err)?;
        match cut.parse::<Cut>().map_err(err)? {
            Cut::Separating(k) => handlebody::connect_sum_reduce(&x, k)
                .map(|t| t.to_text())
                .map_err(err),
            Cut::Meridian(_) => handlebody::meridian_reduce(&self.0, &x)
                .map(|c| c.to_string())
                .map_err(err),
        }
    }

    /// Value of the worked genus-two example with its step checks.
    fn example_s4(&self) -> PyResult<(PyRatFunc, Vec<(String, bool)>)> {
        let r = handlebody::example_s4(&self.0).map_err(err)?;
        let steps = r.steps.iter().map(|s| (s.name.clone(), s.ok)).collect();
        Ok((PyRatFunc(r.value), steps))
    }
}

#[pyfunction]
fn c_lambda(lambda: &str) -> PyResult<PyRatFunc> {
    Ok(PyRatFunc(partition(lambda)?.c_lambda()))
}

#[pyfunction]
fn hb_generators(g: usize, max_label: usize) -> PyResult<Vec<String>> {
    handlebody::enumerate_generators(g, max_label)
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .map_err(err)
}

#[pymodule]
fn pyskein(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRatFunc>()?;
    m.add_class::<PyTangle>()?;
    m.add_class::<PySkeinElement>()?;
    m.add_class::<PySkein>()?;
    m.add_function(wrap_pyfunction!(c_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(hb_generators, m)?)?;
    Ok(())
}
