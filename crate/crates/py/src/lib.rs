//! Python bindings: the collection engine, the classification layer and the
//! multiplier oracle, exposed with string-based word input and decimal-string
//! invariants (exponents are arbitrary precision on the Rust side).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use num_bigint::BigInt;

use nilmult_core::oracle::{multiplier_of, two_nilpotent_multiplier, Presentation};
use nilmult_core::theory::{
    classify, closed_form_multiplier, epicenter_membership, epicenter_witness, is_2_capable,
    is_capable,
};
use nilmult_core::word::parse_relator_lines;
use nilmult_core::{hall, GroupParams, Word};

fn params_of(p: u64, tuple: (u32, u32, u32, u32, u32)) -> GroupParams {
    GroupParams::new(p, tuple.0, tuple.1, tuple.2, tuple.3, tuple.4)
}

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Normal form in the rank-2 free group modulo γ₅, as an 8-tuple of
/// exponents over a, b, [a,b], [a,b,a], [a,b,b], [a,b,a,a], [a,b,b,a],
/// [a,b,b,b].
#[pyclass(frozen, eq, name = "NfElement")]
#[derive(PartialEq)]
struct PyNfElement {
    inner: hall::NfElement,
}

#[pymethods]
impl PyNfElement {
    /// Evaluates a word like "a^2 [a,b]^-1 b" into normal form.
    #[staticmethod]
    fn from_word(word: &str) -> PyResult<Self> {
        let w: Word = word.parse().map_err(value_err)?;
        Ok(Self {
            inner: hall::from_word(&w),
        })
    }

    #[staticmethod]
    fn identity() -> Self {
        Self {
            inner: hall::NfElement::identity(),
        }
    }

    fn mul(&self, other: &PyNfElement) -> Self {
        Self {
            inner: hall::mul(&self.inner, &other.inner),
        }
    }

    fn inv(&self) -> Self {
        Self {
            inner: hall::inv(&self.inner),
        }
    }

    fn pow(&self, n: i64) -> Self {
        Self {
            inner: hall::pow(&self.inner, &BigInt::from(n)),
        }
    }

    fn comm(&self, other: &PyNfElement) -> Self {
        Self {
            inner: hall::comm(&self.inner, &other.inner),
        }
    }

    /// The eight exponents as decimal strings.
    fn exponents(&self) -> Vec<String> {
        self.inner.exponents.iter().map(BigInt::to_string).collect()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn __repr__(&self) -> String {
        format!("NfElement({:?})", self.exponents())
    }
}

/// Canonical form, family, label and capability flags of a tuple.
#[pyfunction]
#[pyo3(name = "classify")]
fn py_classify<'py>(
    py: Python<'py>,
    p: u64,
    tuple: (u32, u32, u32, u32, u32),
) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
    let params = params_of(p, tuple);
    let class = classify(&params).map_err(value_err)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("canonical", class.canonical.tuple())?;
    dict.set_item("family", class.family.to_string())?;
    dict.set_item("label", class.label.unwrap().to_string())?;
    dict.set_item("capable", is_capable(&params).map_err(value_err)?)?;
    dict.set_item("two_capable", is_2_capable(&params).map_err(value_err)?)?;
    Ok(dict)
}

/// Oracle invariants of the tuple group, as decimal strings.
#[pyfunction]
fn multiplier_oracle(p: u64, tuple: (u32, u32, u32, u32, u32)) -> PyResult<Vec<String>> {
    let inv = multiplier_of(&params_of(p, tuple)).map_err(value_err)?;
    Ok(inv.divisors().iter().map(BigInt::to_string).collect())
}

/// Tabulated closed-form invariants, or None when no closed form exists.
#[pyfunction]
fn multiplier_closed(p: u64, tuple: (u32, u32, u32, u32, u32)) -> PyResult<Option<Vec<String>>> {
    let inv = closed_form_multiplier(&params_of(p, tuple)).map_err(value_err)?;
    Ok(inv.map(|i| i.divisors().iter().map(BigInt::to_string).collect()))
}

/// Oracle invariants of an arbitrary class-≤2 presentation given as relator
/// lines (one word per line, '#' comments).
#[pyfunction]
fn multiplier_from_relators(p: u64, relators: &str) -> PyResult<Vec<String>> {
    let relators = parse_relator_lines(relators).map_err(value_err)?;
    let pres = Presentation { p, relators };
    let inv = two_nilpotent_multiplier(&pres).map_err(value_err)?;
    Ok(inv.divisors().iter().map(BigInt::to_string).collect())
}

/// Epicenter witness (as "a^i b^j c^k", or None for capable groups) plus the
/// oracle-backed membership verdict.
#[pyfunction]
fn epicenter(p: u64, tuple: (u32, u32, u32, u32, u32)) -> PyResult<(Option<String>, Option<bool>)> {
    let params = params_of(p, tuple);
    match epicenter_witness(&params).map_err(value_err)? {
        None => Ok((None, None)),
        Some(w) => {
            let member = epicenter_membership(&params, &w).map_err(value_err)?;
            Ok((Some(w.to_string()), Some(member)))
        }
    }
}

#[pymodule]
fn nilmult(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNfElement>()?;
    m.add_function(wrap_pyfunction!(py_classify, m)?)?;
    m.add_function(wrap_pyfunction!(multiplier_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(multiplier_closed, m)?)?;
    m.add_function(wrap_pyfunction!(multiplier_from_relators, m)?)?;
    m.add_function(wrap_pyfunction!(epicenter, m)?)?;
    Ok(())
}
