//! Rational curves in RP3 and RP4: construction, quadrics through a curve,
//! singularity certificates, bi-degrees, torus knots and the Jacobian rank
//! of the sphere condition.

mod bidegree;
pub(crate) mod coincidence;
mod jacobian;
mod singular;
mod torus;

pub use bidegree::{bidegree_split, BiDegreeSplit};
pub use jacobian::{jacobian_rank, jacobian_rank_default};
pub use singular::{DoublePoint, DoublePointKind, Immersion, NonsingularCertificate, Param};
pub use torus::{torus_knot, torus_knot_default};

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{BinaryForm, GaussRat, Rat, RootBox};
use crate::linalg::Matrix;
use crate::projgeom::{ProjPoint, ProjTransform, QuadraticForm, QuadricKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Rp3,
    Rp4,
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::Rp3 => 3,
            Ambient::Rp4 => 4,
        }
    }

    pub fn from_dim(dim: usize) -> Result<Ambient> {
        match dim {
            3 => Ok(Ambient::Rp3),
            4 => Ok(Ambient::Rp4),
            d => Err(Error::DimensionMismatch { expected: 3, got: d }),
        }
    }
}

/// A common factor divided out of the coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDrop {
    pub from: usize,
    pub to: usize,
    pub factor: BinaryForm,
}

/// Curve `[s:t] -> [k_0(s,t) : ... : k_n(s,t)]` given by jointly coprime
/// forms of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCurve {
    ambient: Ambient,
    forms: Vec<BinaryForm>,
    on_sphere: bool,
}

/// Normalizes the forms: checks degrees, divides out the common factor and
/// records whether an RP4 curve lies on the sphere.
pub fn make_curve(forms: Vec<BinaryForm>, ambient: Ambient) -> Result<(RationalCurve, Option<DegreeDrop>)> {
    if forms.len() != ambient.dim() + 1 {
        return Err(Error::DimensionMismatch { expected: ambient.dim() + 1, got: forms.len() });
    }
    let d = forms[0].degree();
    if let Some(f) = forms.iter().find(|f| f.degree() != d) {
        return Err(Error::DegreeMismatch(d, f.degree()));
    }
    if forms.iter().all(|f| f.is_zero()) {
        return Err(Error::AllZero);
    }
    let g = forms.iter().filter(|f| !f.is_zero()).fold(BinaryForm::zero(d), |g, f| BinaryForm::gcd(&g, f));
    let (forms, drop) = if g.degree() > 0 {
        let reduced: Vec<BinaryForm> = forms.iter().map(|f| f.exact_div(&g)).collect::<Result<_>>()?;
        let to = reduced[0].degree();
        (reduced, Some(DegreeDrop { from: d, to, factor: g }))
    } else {
        (forms, None)
    };
    if forms[0].degree() == 0 {
        return Err(Error::Degenerate("the curve is constant".into()));
    }
    let on_sphere = ambient == Ambient::Rp4 && form_value(&QuadraticForm::sphere(4), &forms).is_zero();
    Ok((RationalCurve { ambient, forms, on_sphere }, drop))
}

/// `q(k(s,t))` as a form of degree `2d`.
pub(crate) fn form_value(q: &QuadraticForm, forms: &[BinaryForm]) -> BinaryForm {
    let m = q.matrix();
    let d = forms[0].degree();
    let mut acc = BinaryForm::zero(2 * d);
    for i in 0..forms.len() {
        for j in i..forms.len() {
            let c = if i == j { m[(i, i)].clone() } else { &m[(i, j)] * Rat::from_integer(2.into()) };
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&forms[i].mul(&forms[j]).scale(&c)).expect("equal degrees");
        }
    }
    acc
}

impl RationalCurve {
    /// Builds a curve whose forms are already coprime; fails otherwise.
    pub fn new(forms: Vec<BinaryForm>, ambient: Ambient) -> Result<RationalCurve> {
        match make_curve(forms, ambient)? {
            (c, None) => Ok(c),
            (_, Some(drop)) => Err(Error::Precondition(format!("coordinates share the factor {}", drop.factor))),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<RationalCurve> {
        let forms: Vec<BinaryForm> = rows.iter().map(|r| BinaryForm::from_ints(r)).collect();
        let ambient = Ambient::from_dim(forms.len().wrapping_sub(1))?;
        RationalCurve::new(forms, ambient)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    /// RP4 curve contained in the sphere `x1^2 + x2^2 + x3^2 + x4^2 = x0^2`.
    pub fn is_on_sphere(&self) -> bool {
        self.on_sphere
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> ProjPoint {
        ProjPoint::real(self.forms.iter().map(|f| f.eval(s, t)).collect()).expect("coprime forms")
    }

    pub fn eval_gauss(&self, s: &GaussRat, t: &GaussRat) -> ProjPoint {
        ProjPoint::new(self.forms.iter().map(|f| f.eval_gauss(s, t)).collect()).expect("coprime forms")
    }

    /// Exact test `q(k(s,t)) = 0`.
    pub fn on_quadric(&self, q: &QuadraticForm) -> Result<bool> {
        if q.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: q.dim() });
        }
        Ok(form_value(q, &self.forms).is_zero())
    }

    /// Basis of the quadrics containing the curve.
    pub fn quadric_through_curve(&self) -> Vec<QuadraticForm> {
        let dim = self.dim();
        let d = self.degree();
        let mons = crate::projgeom::quadratic_monomials(dim);
        let cols: Vec<BinaryForm> = mons.iter().map(|&(i, j)| self.forms[i].mul(&self.forms[j])).collect();
        let rows: Vec<Vec<Rat>> =
            (0..=2 * d).map(|k| cols.iter().map(|f| f.coeff(k).clone()).collect()).collect();
        Matrix::from_rows(rows)
            .nullspace()
            .into_iter()
            .map(|c| QuadraticForm::from_coeffs(dim, &c).expect("nonzero nullspace vector"))
            .collect()
    }

    pub fn apply_transform(&self, t: &ProjTransform) -> Result<RationalCurve> {
        if t.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: t.dim() });
        }
        let m = t.matrix();
        let d = self.degree();
        let forms: Vec<BinaryForm> = (0..=self.dim())
            .map(|i| {
                self.forms.iter().enumerate().fold(BinaryForm::zero(d), |acc, (j, f)| {
                    if m[(i, j)].is_zero() {
                        acc
                    } else {
                        acc.add(&f.scale(&m[(i, j)])).expect("equal degrees")
                    }
                })
            })
            .collect();
        RationalCurve::new(forms, self.ambient)
    }

    /// Substitutes `(s, t) -> (s, t) m` in every coordinate.
    pub fn reparametrize(&self, m: &[[Rat; 2]; 2]) -> Result<RationalCurve> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::Precondition("reparametrization matrix is singular".into()));
        }
        RationalCurve::new(self.forms.iter().map(|f| f.substitute(m)).collect(), self.ambient)
    }

    /// Matrix of coefficients: entry `(i, j)` is the coefficient of
    /// `s^(4-j) t^j` in `k_i`. Singular exactly when the curve lies in a
    /// hyperplane, which is then returned.
    pub fn coefficient_matrix(&self) -> Result<ProjTransform> {
        if self.degree() != self.dim() {
            return Err(Error::Precondition(format!(
                "coefficient matrix needs degree equal to dimension, got degree {} in RP{}",
                self.degree(),
                self.dim()
            )));
        }
        let a = Matrix::from_rows(self.forms.iter().map(|f| f.coeffs().to_vec()).collect());
        if a.det().is_zero() {
            let h = a.transpose().nullspace().into_iter().next().expect("singular matrix has a kernel");
            return Err(Error::NotInvertible(h));
        }
        ProjTransform::new(a)
    }

    /// Roots of `sum h_i k_i`, the parameters where the curve meets the
    /// hyperplane `h`.
    pub fn intersect_with_plane(&self, h: &[Rat], precision: &Rat) -> Result<Vec<RootBox>> {
        if h.len() != self.dim() + 1 {
            return Err(Error::DimensionMismatch { expected: self.dim() + 1, got: h.len() });
        }
        let f = self.forms.iter().zip(h).fold(BinaryForm::zero(self.degree()), |acc, (f, c)| {
            acc.add(&f.scale(c)).expect("equal degrees")
        });
        if f.is_zero() {
            return Err(Error::CurveInPlane);
        }
        f.isolate_roots(precision)
    }

    pub fn classify_quadric(q: &QuadraticForm) -> Result<QuadricKind> {
        q.classify()
    }
}

impl fmt::Display for RationalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.forms.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

#[cfg(test)]
mod tests;
