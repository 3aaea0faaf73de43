use desargues::configcheck::{self, Mode};
use desargues::coordinatize::{self, Frame as CoreFrame};
use desargues::field::{Backend, Budget, FieldValue};
use desargues::plane::{self, Decision};
use desargues::scalars::{self, Scalar as CoreScalar};
use desargues::symmetry::Translation as CoreTranslation;
use desargues::Error;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(pydesargues, UndecidedError, PyException, "A budgeted query ran out of precision.");

fn err(e: Error) -> PyErr {
    match e {
        Error::Undecided { budget } => UndecidedError::new_err(budget),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn budget(b: Option<u32>) -> Option<Budget> {
    b.map(Budget::of)
}

fn decision(d: Decision) -> Option<bool> {
    match d {
        Decision::Yes => Some(true),
        Decision::No => Some(false),
        Decision::Undecided(_) => None,
    }
}

/// Values cross the boundary as text: `"3/4"`, `"-2"`, or a named dyadic stream.
fn value(field: &Backend, v: &Bound<'_, PyAny>) -> PyResult<FieldValue> {
    let s = v.str()?.to_string();
    field.parse_value(&s).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyclass(frozen, module = "pydesargues")]
struct Field {
    inner: Backend,
}

#[pymethods]
impl Field {
    /// `"rational"`, `"gf:p"` or `"dyadic:budget"`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let inner = spec.parse().map_err(|e: desargues::field::FieldError| PyValueError::new_err(e.to_string()))?;
        Ok(Field { inner })
    }

    fn elements(&self) -> Option<Vec<String>> {
        self.inner.elements().map(|v| v.iter().map(|x| x.to_string()).collect())
    }

    fn point(&self, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<Point> {
        let p = plane::Point::new(value(&self.inner, x)?, value(&self.inner, y)?).map_err(err)?;
        Ok(Point { inner: p })
    }

    fn scalar(&self, x: &Bound<'_, PyAny>) -> PyResult<Scalar> {
        Ok(Scalar {
            inner: CoreScalar::new(value(&self.inner, x)?),
        })
    }

    /// All points of a finite plane, in enumeration order.
    fn points(&self) -> PyResult<Vec<Point>> {
        let fp = plane::FinitePlane::new(self.inner).ok_or_else(|| PyValueError::new_err("not a finite field"))?;
        Ok(fp.points.into_iter().map(|inner| Point { inner }).collect())
    }

    fn __repr__(&self) -> String {
        format!("Field('{}')", self.inner)
    }
}

#[pyclass(frozen, module = "pydesargues")]
struct Point {
    inner: plane::Point,
}

#[pymethods]
impl Point {
    #[getter]
    fn x(&self) -> String {
        self.inner.x.to_string()
    }

    #[getter]
    fn y(&self) -> String {
        self.inner.y.to_string()
    }

    /// True with a witness found, False when provably equal, raises when undecided.
    #[pyo3(signature = (other, budget=None))]
    fn apart(&self, other: &Point, budget: Option<u32>) -> PyResult<bool> {
        Ok(self.inner.apart(&other.inner, self::budget(budget)).map_err(err)?.is_some())
    }

    fn __eq__(&self, other: &Point) -> bool {
        self.inner.exact_eq(&other.inner) == Some(true)
    }

    fn __repr__(&self) -> String {
        format!("Point{}", self.inner)
    }
}

#[pyclass(frozen, module = "pydesargues")]
struct Line {
    inner: plane::Line,
}

#[pymethods]
impl Line {
    #[getter]
    fn base(&self) -> Point {
        Point {
            inner: self.inner.base().clone(),
        }
    }

    #[getter]
    fn direction(&self) -> Point {
        Point {
            inner: self.inner.dir().clone(),
        }
    }

    /// None when the budget runs out first.
    #[pyo3(signature = (p, budget=None))]
    fn contains(&self, p: &Point, budget: Option<u32>) -> PyResult<Option<bool>> {
        Ok(decision(plane::on_line(&p.inner, &self.inner, self::budget(budget)).map_err(err)?))
    }

    #[pyo3(signature = (other, budget=None))]
    fn is_parallel(&self, other: &Line, budget: Option<u32>) -> PyResult<Option<bool>> {
        Ok(decision(plane::is_parallel(&self.inner, &other.inner, self::budget(budget)).map_err(err)?))
    }

    #[pyo3(signature = (other, budget=None))]
    fn equals(&self, other: &Line, budget: Option<u32>) -> PyResult<Option<bool>> {
        Ok(decision(plane::lines_equal(&self.inner, &other.inner, self::budget(budget)).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Line({})", self.inner)
    }
}

#[pyclass(frozen, module = "pydesargues")]
struct Translation {
    inner: CoreTranslation,
}

#[pymethods]
impl Translation {
    #[new]
    fn new(offset: &Point) -> Self {
        Translation {
            inner: CoreTranslation::new(offset.inner.clone()),
        }
    }

    #[getter]
    fn offset(&self) -> Point {
        Point {
            inner: self.inner.offset().clone(),
        }
    }

    fn apply(&self, p: &Point) -> PyResult<Point> {
        Ok(Point {
            inner: self.inner.apply(&p.inner).map_err(err)?,
        })
    }

    fn compose(&self, other: &Translation) -> PyResult<Translation> {
        Ok(Translation {
            inner: self.inner.compose(&other.inner).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Translation({})", self.inner.offset())
    }
}

#[pyclass(frozen, module = "pydesargues")]
struct Scalar {
    inner: CoreScalar,
}

#[pymethods]
impl Scalar {
    #[getter]
    fn value(&self) -> String {
        self.inner.ratio().to_string()
    }

    fn apply(&self, t: &Translation) -> PyResult<Translation> {
        Ok(Translation {
            inner: self.inner.apply(&t.inner).map_err(err)?,
        })
    }

    fn __add__(&self, other: &Scalar) -> PyResult<Scalar> {
        Ok(Scalar {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn __mul__(&self, other: &Scalar) -> PyResult<Scalar> {
        Ok(Scalar {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __neg__(&self) -> Scalar {
        Scalar { inner: self.inner.neg() }
    }

    fn __eq__(&self, other: &Scalar) -> bool {
        self.inner.exact_eq(&other.inner) == Some(true)
    }

    fn __repr__(&self) -> String {
        format!("Scalar({})", self.inner.ratio())
    }
}

#[pyclass(frozen, module = "pydesargues")]
struct Frame {
    inner: CoreFrame,
}

#[pymethods]
impl Frame {
    #[new]
    #[pyo3(signature = (origin, t1, t2, budget=None))]
    fn new(origin: &Point, t1: &Translation, t2: &Translation, budget: Option<u32>) -> PyResult<Self> {
        let inner = CoreFrame::new(origin.inner.clone(), t1.inner.clone(), t2.inner.clone(), self::budget(budget))
            .map_err(err)?;
        Ok(Frame { inner })
    }

    #[staticmethod]
    fn canonical(field: &Field) -> Self {
        Frame {
            inner: CoreFrame::canonical(&field.inner),
        }
    }

    #[pyo3(signature = (p, budget=None))]
    fn coords(&self, p: &Point, budget: Option<u32>) -> PyResult<(String, String)> {
        let (x, y) = coordinatize::coords(&self.inner, &p.inner, self::budget(budget)).map_err(err)?;
        Ok((x.to_string(), y.to_string()))
    }

    fn point_at(&self, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<Point> {
        let b = self.inner.backend();
        let p = coordinatize::point_at(&self.inner, &value(&b, x)?, &value(&b, y)?).map_err(err)?;
        Ok(Point { inner: p })
    }
}

#[pyfunction]
#[pyo3(signature = (p, q, budget=None))]
fn join(p: &Point, q: &Point, budget: Option<u32>) -> PyResult<Line> {
    Ok(Line {
        inner: plane::join(&p.inner, &q.inner, self::budget(budget)).map_err(err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (l, m, budget=None))]
fn intersect(l: &Line, m: &Line, budget: Option<u32>) -> PyResult<Point> {
    let w = plane::nonparallel(&l.inner, &m.inner, self::budget(budget)).map_err(err)?;
    Ok(Point {
        inner: plane::intersect(&l.inner, &m.inner, &w).map_err(err)?,
    })
}

#[pyfunction]
fn parallel_through(p: &Point, l: &Line) -> PyResult<Line> {
    Ok(Line {
        inner: plane::parallel_through(&p.inner, &l.inner).map_err(err)?,
    })
}

/// The scalar `a` with `t2 = t1^a`.
#[pyfunction]
#[pyo3(signature = (t1, t2, budget=None))]
fn ratio_of(t1: &Translation, t2: &Translation, budget: Option<u32>) -> PyResult<Scalar> {
    Ok(Scalar {
        inner: scalars::ratio_of(&t1.inner, &t2.inner, self::budget(budget)).map_err(err)?,
    })
}

/// Runs a verification suite and returns the report as JSON text.
#[pyfunction]
#[pyo3(signature = (field, suite="axioms", mode="exhaustive", seed=1, n=1000))]
fn verify(field: &Field, suite: &str, mode: &str, seed: u64, n: usize) -> PyResult<String> {
    let mode = match mode {
        "exhaustive" => Mode::Exhaustive,
        "random" => Mode::Random { seed, n },
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    let report = match suite {
        "axioms" => configcheck::verify_axioms(&field.inner, mode),
        "configurations" => configcheck::verify_configurations(&field.inner, mode),
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    }
    .map_err(err)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (example, budget=64))]
fn demo(example: &str, budget: u32) -> PyResult<String> {
    let r = configcheck::brouwerian_demo(example, budget).map_err(err)?;
    serde_json::to_string(&r).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Runs the command-line front end in-process: `(exit code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = desargues::cli::run(std::iter::once("desargues".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
pub fn pydesargues(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("UndecidedError", m.py().get_type::<UndecidedError>())?;
    m.add_class::<Field>()?;
    m.add_class::<Point>()?;
    m.add_class::<Line>()?;
    m.add_class::<Translation>()?;
    m.add_class::<Scalar>()?;
    m.add_class::<Frame>()?;
    m.add_function(wrap_pyfunction!(join, m)?)?;
    m.add_function(wrap_pyfunction!(intersect, m)?)?;
    m.add_function(wrap_pyfunction!(parallel_through, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_of, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
