//! Python bindings. Rationals cross the boundary as strings such as
//! `"-3/5"`; inputs may also be ints or `fractions.Fraction`.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use realknot::cli::CurveFile;
use realknot::curve::{bidegree_split, jacobian_rank_default, torus_knot, Ambient, RationalCurve};
use realknot::forms::{fmt_rat, parse_rat, BinaryForm, Rat};
use realknot::projgeom::ProjPoint;
use realknot::sphere::{self, LiftContract, ProjectionFrame};
use realknot::writhe;
use realknot::{Error, ErrorClass};

fn to_py(e: Error) -> PyErr {
    match e.class() {
        ErrorClass::Parse => PyValueError::new_err(e.to_string()),
        ErrorClass::Math => PyArithmeticError::new_err(e.to_string()),
        ErrorClass::Internal => PyRuntimeError::new_err(e.to_string()),
    }
}

fn rat_of(x: &Bound<'_, PyAny>) -> PyResult<Rat> {
    parse_rat(&x.str()?.to_string()).map_err(to_py)
}

fn point_of(coords: &[Bound<'_, PyAny>]) -> PyResult<ProjPoint> {
    let c = coords.iter().map(rat_of).collect::<PyResult<Vec<_>>>()?;
    ProjPoint::real(c).map_err(to_py)
}

fn frame_of(center: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<ProjectionFrame> {
    match center {
        None => Ok(ProjectionFrame::north()),
        Some(c) => ProjectionFrame::new(point_of(&c)?).map_err(to_py),
    }
}

/// A rational curve in RP3 or RP4, given by one row of coefficients per
/// coordinate; entry `j` multiplies `s^(d-j) t^j`.
#[pyclass(frozen, name = "Curve")]
struct Curve {
    inner: RationalCurve,
}

fn wrap(inner: RationalCurve) -> Curve {
    Curve { inner }
}

#[pymethods]
impl Curve {
    #[new]
    fn new(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Curve> {
        let ambient = match rows.len() {
            4 => Ambient::Rp3,
            5 => Ambient::Rp4,
            n => return Err(PyValueError::new_err(format!("expected 4 or 5 rows, got {n}"))),
        };
        let forms = rows
            .iter()
            .map(|r| Ok(BinaryForm::new(r.iter().map(rat_of).collect::<PyResult<Vec<_>>>()?)))
            .collect::<PyResult<Vec<_>>>()?;
        RationalCurve::new(forms, ambient).map(wrap).map_err(to_py)
    }

    #[staticmethod]
    fn from_toml(text: &str) -> PyResult<Curve> {
        CurveFile::parse(text).and_then(|f| f.to_curve()).map(wrap).map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (degree, m, a="3/5", b="4/5"))]
    fn torus_knot(degree: usize, m: usize, a: &str, b: &str) -> PyResult<Curve> {
        let radii = (parse_rat(a).map_err(to_py)?, parse_rat(b).map_err(to_py)?);
        torus_knot(degree, m, radii).map(wrap).map_err(to_py)
    }

    fn to_toml(&self) -> String {
        CurveFile::from_curve(&self.inner, BTreeMap::new()).render()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let d = self.inner.degree();
        self.inner.forms().iter().map(|f| (0..=d).map(|j| fmt_rat(f.coeff(j))).collect()).collect()
    }

    fn is_on_sphere(&self) -> bool {
        self.inner.is_on_sphere()
    }

    fn is_immersion(&self) -> bool {
        self.inner.is_immersion().is_immersion()
    }

    fn is_nonsingular(&self) -> PyResult<bool> {
        Ok(self.inner.is_nonsingular_knot().map_err(to_py)?.is_nonsingular())
    }

    /// Double points and cusps as dicts with `kind`, approximate
    /// parameters `params` and, when rational, the exact `image`.
    fn double_points<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let cert = self.inner.is_nonsingular_knot().map_err(to_py)?;
        let mut out = Vec::new();
        for p in cert.double_points.iter().chain(&cert.cusps) {
            let d = PyDict::new(py);
            d.set_item("kind", p.kind.to_string())?;
            d.set_item("params", p.params.iter().map(|q| q.approx()).collect::<Vec<_>>())?;
            let image = p.image.as_ref().map(|q| q.to_string());
            d.set_item("image", image)?;
            out.push(d);
        }
        Ok(out)
    }

    /// Encomplexed writhe of a knot on the sphere, or the writhe of a knot
    /// in RP3.
    fn writhe(&self) -> PyResult<i64> {
        writhe::encomplexed_writhe(&self.inner).map_err(to_py)
    }

    /// Complex and real bi-degree of a curve on `x0 x3 = x1 x2`.
    fn bidegree(&self) -> PyResult<((usize, usize), (i64, i64))> {
        let s = bidegree_split(&self.inner).map_err(to_py)?;
        Ok((s.complex_bidegree, s.real_bidegree))
    }

    fn jacobian_rank(&self) -> PyResult<usize> {
        jacobian_rank_default(&self.inner).map_err(to_py)
    }

    #[pyo3(signature = (center=None))]
    fn project(&self, center: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<Curve> {
        let frame = frame_of(center)?;
        sphere::project(&self.inner, &frame).map(|p| wrap(p.curve)).map_err(to_py)
    }

    /// `contract` is one of `preserving`, `through-center`,
    /// `at-double-point`.
    #[pyo3(signature = (center=None, contract="preserving"))]
    fn lift(&self, center: Option<Vec<Bound<'_, PyAny>>>, contract: &str) -> PyResult<Curve> {
        let frame = frame_of(center)?;
        let contract = match contract {
            "preserving" => LiftContract::Preserving,
            "through-center" => LiftContract::ThroughCenter,
            "at-double-point" => LiftContract::AtDoublePoint,
            other => return Err(PyValueError::new_err(format!("unknown contract {other}"))),
        };
        sphere::lift(&self.inner, &frame, contract).map(wrap).map_err(to_py)
    }

    fn is_circle_image(&self) -> PyResult<bool> {
        sphere::is_circle_image(&self.inner).map_err(to_py)
    }

    fn __eq__(&self, other: &Curve) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Curve(degree={}, dim={})", self.inner.degree(), self.inner.dim())
    }
}

#[pyfunction]
fn linking_number(a: &Curve, b: &Curve) -> PyResult<i64> {
    writhe::linking_number(&a.inner, &b.inner).map_err(to_py)
}

/// Joins two RP3 curves meeting once. Without `epsilon`, halves from 1
/// until the result is nonsingular. Returns the curve and the epsilon used.
#[pyfunction]
#[pyo3(signature = (a, b, epsilon=None))]
fn join(a: &Curve, b: &Curve, epsilon: Option<Bound<'_, PyAny>>) -> PyResult<(Curve, String)> {
    let j = match epsilon {
        Some(e) => sphere::join_curves(&a.inner, &b.inner, &rat_of(&e)?),
        None => sphere::join_search(&a.inner, &b.inner, &Rat::from_integer(1.into())),
    }
    .map_err(to_py)?;
    Ok((wrap(j.curve), fmt_rat(&j.epsilon)))
}

#[pymodule]
fn realknot_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Curve>()?;
    m.add_function(wrap_pyfunction!(linking_number, m)?)?;
    m.add_function(wrap_pyfunction!(join, m)?)?;
    Ok(())
}
