//! Python bindings. Lengths may be given as `int`, decimal `str` ("12.5",
//! "7/2") or rational `Surd`; exact results come back as `Surd` objects.

use num_bigint::BigInt;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use cyclicquad::construct::{brahmagupta_quad as build, reflection_orbit};
use cyclicquad::mensuration::{self, DiagQuad, QuadSides, Rhombus, Triangle};
use cyclicquad::oracle::{self, embed};
use cyclicquad::{cli, parse_decimal, triples, Error, Rational};

fn value_error(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// An exact number `coefficient · √radicand` with a squarefree radicand.
#[pyclass(name = "Surd", module = "cyclicquad_py", frozen, eq, ord, hash)]
#[derive(PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PySurd(cyclicquad::Surd);

#[pymethods]
impl PySurd {
    /// `Surd(value, radicand=1)` is `value · √radicand`, normalized.
    #[new]
    #[pyo3(signature = (value, radicand = 1))]
    fn new(value: &Bound<'_, PyAny>, radicand: u64) -> PyResult<Self> {
        let root = cyclicquad::Surd::sqrt_int(radicand);
        Ok(PySurd(&cyclicquad::Surd::rational(rational(value)?) * &root))
    }

    /// Exact square root of a non-negative rational.
    #[staticmethod]
    fn sqrt(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        cyclicquad::Surd::sqrt_of(&rational(value)?).map(PySurd).map_err(value_error)
    }

    #[getter]
    fn numerator(&self) -> BigInt {
        self.0.coefficient().numer().clone()
    }

    #[getter]
    fn denominator(&self) -> BigInt {
        self.0.coefficient().denom().clone()
    }

    #[getter]
    fn radicand(&self) -> BigInt {
        self.0.radicand().clone().into()
    }

    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    /// Decimal string truncated to `digits` significant digits.
    #[pyo3(signature = (digits = 50))]
    fn decimal(&self, digits: u32) -> String {
        self.0.approx(digits).to_string()
    }

    fn square(&self) -> PySurd {
        PySurd(cyclicquad::Surd::rational(self.0.square()))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<PySurd> {
        Ok(PySurd(&self.0 * &surd(other)?))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<PySurd> {
        self.__mul__(other)
    }

    /// Raises `ValueError` when the radicands differ.
    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<PySurd> {
        self.0.checked_add(&surd(other)?).map(PySurd).map_err(value_error)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<PySurd> {
        self.0.checked_sub(&surd(other)?).map(PySurd).map_err(value_error)
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<PySurd> {
        self.0.checked_div(&surd(other)?).map(PySurd).map_err(value_error)
    }

    fn __neg__(&self) -> PySurd {
        PySurd(-self.0.clone())
    }

    fn __float__(&self) -> f64 {
        self.0.approx(20).to_f64()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Surd('{}')", self.0)
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(s) = obj.cast::<PySurd>() {
        return s
            .get()
            .0
            .as_rational()
            .cloned()
            .ok_or_else(|| PyValueError::new_err(format!("{} is not rational", s.get().0)));
    }
    if let Ok(i) = obj.extract::<BigInt>() {
        return Ok(Rational::from_integer(i));
    }
    if let Ok(text) = obj.extract::<String>() {
        return parse_decimal(&text).map_err(value_error);
    }
    Err(PyTypeError::new_err("expected int, str or Surd"))
}

fn surd(obj: &Bound<'_, PyAny>) -> PyResult<cyclicquad::Surd> {
    if let Ok(s) = obj.cast::<PySurd>() {
        return Ok(s.get().0.clone());
    }
    rational(obj).map(cyclicquad::Surd::rational)
}

fn quad(sides: &Bound<'_, PyAny>) -> PyResult<QuadSides> {
    let items: Vec<Bound<'_, PyAny>> = sides.try_iter()?.collect::<PyResult<_>>()?;
    let values: Vec<Rational> = items.iter().map(rational).collect::<PyResult<_>>()?;
    let values: [Rational; 4] = values
        .try_into()
        .map_err(|_| PyValueError::new_err("expected four side lengths"))?;
    QuadSides::new(values).map_err(value_error)
}

fn sides_list(q: &QuadSides) -> Vec<PySurd> {
    q.sides().iter().cloned().map(|s| PySurd(cyclicquad::Surd::rational(s))).collect()
}

type TripleTuple = (u64, u64, u64);

fn pair(t: TripleTuple) -> PyResult<triples::PythTriple> {
    triples::validate_triple(t.0, t.1, t.2).map_err(value_error)
}

/// Product of the half-sums of opposite sides.
#[pyfunction]
fn gross_area(sides: &Bound<'_, PyAny>) -> PyResult<PySurd> {
    Ok(PySurd(mensuration::gross_area(&quad(sides)?)))
}

/// `√((s−a)(s−b)(s−c)(s−d))`.
#[pyfunction]
fn sutra_area(sides: &Bound<'_, PyAny>) -> PyResult<PySurd> {
    Ok(PySurd(mensuration::sutra_area(&quad(sides)?)))
}

#[pyfunction]
fn heron_area(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PySurd> {
    let t = Triangle::new(surd(a)?, surd(b)?, surd(c)?).map_err(value_error)?;
    Ok(PySurd(mensuration::heron_area(&t)))
}

#[pyfunction]
fn triangle_circumradius(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PySurd> {
    let t = Triangle::new(surd(a)?, surd(b)?, surd(c)?).map_err(value_error)?;
    Ok(PySurd(mensuration::triangle_circumradius(&t)))
}

/// `(p, q)`: `p` separates `(a, b)` from `(c, d)`, `q` separates `(b, c)`
/// from `(d, a)`.
#[pyfunction]
fn cyclic_diagonal_pair(sides: &Bound<'_, PyAny>) -> PyResult<(PySurd, PySurd)> {
    let d = mensuration::cyclic_diagonal_pair(&quad(sides)?);
    Ok((PySurd(d.p), PySurd(d.q)))
}

/// Split along `diagonal` (between the `(a, b)` and `(c, d)` triangles).
/// `split_area` is `None` when the two triangle areas have different
/// radicands; `split_decimal` is always present.
#[pyfunction]
#[pyo3(signature = (sides, diagonal, digits = 50))]
fn area_by_diagonal<'py>(
    py: Python<'py>,
    sides: &Bound<'py, PyAny>,
    diagonal: &Bound<'py, PyAny>,
    digits: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let dq = DiagQuad::new(quad(sides)?, surd(diagonal)?).map_err(value_error)?;
    let first = mensuration::heron_area(&dq.first_triangle().map_err(value_error)?);
    let second = mensuration::heron_area(&dq.second_triangle().map_err(value_error)?);
    let out = PyDict::new(py);
    out.set_item("triangle_areas", (PySurd(first.clone()), PySurd(second.clone())))?;
    out.set_item("split_area", first.checked_add(&second).ok().map(PySurd))?;
    out.set_item("split_decimal", (&first.approx(digits) + &second.approx(digits)).to_string())?;
    let two_over = dq.diagonal().recip().map_err(value_error)?.scale(&Rational::from_integer(2.into()));
    out.set_item("perpendiculars", (PySurd(&first * &two_over), PySurd(&second * &two_over)))?;
    out.set_item("cyclic", oracle::ptolemy_exact(&dq).map_err(value_error)?)?;
    out.set_item("oracle_area", oracle::shoelace_area(&embed(&dq, digits)).to_string())?;
    Ok(out)
}

#[pyfunction]
fn rhombus<'py>(py: Python<'py>, side: &Bound<'py, PyAny>, d1: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
    let r = Rhombus::new(surd(side)?, surd(d1)?).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("second_diagonal", PySurd(mensuration::rhombus_second_diagonal(&r)))?;
    out.set_item("area", PySurd(mensuration::rhombus_area(&r)))?;
    Ok(out)
}

/// Rhombus of side `n` with diagonals `2l`, `2m`.
#[pyfunction]
fn rhombus_from_triple<'py>(py: Python<'py>, triple: TripleTuple) -> PyResult<Bound<'py, PyDict>> {
    let r = cyclicquad::construct::rhombus_from_triple(&pair(triple)?);
    let out = PyDict::new(py);
    out.set_item("side", PySurd(r.side().clone()))?;
    out.set_item("first_diagonal", PySurd(r.d1().clone()))?;
    out.set_item("second_diagonal", PySurd(mensuration::rhombus_second_diagonal(&r)))?;
    out.set_item("area", PySurd(mensuration::rhombus_area(&r)))?;
    Ok(out)
}

#[pyfunction]
fn brahmagupta_quad<'py>(py: Python<'py>, first: TripleTuple, second: TripleTuple) -> PyResult<Bound<'py, PyDict>> {
    let c = build(&pair(first)?, &pair(second)?);
    let d = mensuration::cyclic_diagonal_pair(&c.sides);
    let out = PyDict::new(py);
    out.set_item("sides", sides_list(&c.sides))?;
    out.set_item("glue_diagonal", PySurd(c.glue_diagonal.clone()))?;
    out.set_item("diagonals", (PySurd(d.p), PySurd(d.q)))?;
    out.set_item("area", PySurd(mensuration::sutra_area(&c.sides)))?;
    out.set_item("circumdiameter", PySurd(c.circumdiameter.clone()))?;
    let orbit = reflection_orbit(&c.sides).map_err(value_error)?;
    let classes = PyList::empty(py);
    for q in &orbit {
        classes.append(sides_list(q))?;
    }
    out.set_item("reflection_classes", classes)?;
    Ok(out)
}

/// Triples `(l, m, n)` with `n ≤ max_hypotenuse`, sorted by `(n, l)`.
#[pyfunction]
fn generate_triples(max_hypotenuse: u64) -> Vec<TripleTuple> {
    triples::generate_triples(max_hypotenuse)
        .iter()
        .map(|t| (t.l(), t.m(), t.n()))
        .collect()
}

#[pyfunction]
fn hypotenuse_pairs(max_hypotenuse: u64) -> Vec<(TripleTuple, TripleTuple)> {
    triples::hypotenuse_pairs(max_hypotenuse)
        .iter()
        .map(|(a, b)| ((a.l(), a.m(), a.n()), (b.l(), b.m(), b.n())))
        .collect()
}

/// Embedded area at `steps` interior diagonals; decimals as strings.
#[pyfunction]
#[pyo3(signature = (sides, steps = 999, digits = 50))]
fn area_scan<'py>(py: Python<'py>, sides: &Bound<'py, PyAny>, steps: usize, digits: u32) -> PyResult<Bound<'py, PyDict>> {
    let q = quad(sides)?;
    let scan = oracle::area_scan(&q, steps, digits).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("max_area", scan.max_area.to_string())?;
    out.set_item("argmax_diagonal", scan.argmax_diagonal.to_string())?;
    out.set_item("min_area", scan.min_area().to_string())?;
    out.set_item("argmax_near_cyclic", oracle::argmax_near_cyclic(&q, &scan, digits))?;
    let samples: Vec<(String, String)> = scan
        .samples
        .iter()
        .map(|s| (s.diagonal.to_string(), s.area.to_string()))
        .collect();
    out.set_item("samples", samples)?;
    Ok(out)
}

/// Run the command-line interface in-process: `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let outcome = cli::run(std::iter::once("cyclicquad".to_string()).chain(args));
    (outcome.code, outcome.stdout, outcome.stderr)
}

#[pymodule]
fn cyclicquad_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySurd>()?;
    m.add_function(wrap_pyfunction!(gross_area, m)?)?;
    m.add_function(wrap_pyfunction!(sutra_area, m)?)?;
    m.add_function(wrap_pyfunction!(heron_area, m)?)?;
    m.add_function(wrap_pyfunction!(triangle_circumradius, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_diagonal_pair, m)?)?;
    m.add_function(wrap_pyfunction!(area_by_diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(rhombus, m)?)?;
    m.add_function(wrap_pyfunction!(rhombus_from_triple, m)?)?;
    m.add_function(wrap_pyfunction!(brahmagupta_quad, m)?)?;
    m.add_function(wrap_pyfunction!(generate_triples, m)?)?;
    m.add_function(wrap_pyfunction!(hypotenuse_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(area_scan, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
