//! Stereographic projection between the sphere `x1^2 + ... + x4^2 = x0^2` in
//! RP4 and RP3, the trace of a curve on the plane at infinity, and the join
//! of two curves meeting in one point.

mod join;

pub use join::{join_curves, join_on_sphere, join_search, JoinResult};

use num_traits::Zero;

use crate::curve::{make_curve, Ambient, RationalCurve};
use crate::error::{Error, Result};
use crate::forms::{resultant, ri, BinaryForm, Rat, RootBox};
use crate::projgeom::{adapted_transform, ProjPoint, ProjTransform, QuadraticForm};

/// Center of a stereographic projection with the transform moving it to the
/// north pole `[1:0:0:0:1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionFrame {
    pub center: ProjPoint,
    pub adapted: ProjTransform,
}

impl ProjectionFrame {
    pub fn new(center: ProjPoint) -> Result<ProjectionFrame> {
        let adapted = adapted_transform(&center)?;
        Ok(ProjectionFrame { center, adapted })
    }

    /// Projection from the north pole itself.
    pub fn north() -> ProjectionFrame {
        ProjectionFrame::new(ProjPoint::from_ints(&[1, 0, 0, 0, 1])).expect("the pole is on the sphere")
    }
}

/// The standard empty conic `x1^2 + x2^2 + x3^2` on the plane `x0 = 0`.
pub fn standard_conic() -> QuadraticForm {
    QuadraticForm::diag(&[1, 1, 1])
}

/// Intersection of an RP3 curve with the plane at infinity `x0 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct InfinityTrace {
    /// The coordinate `k_0`, whose roots are the parameters at infinity.
    pub x0: BinaryForm,
    pub roots: Vec<RootBox>,
    /// Points with rational coordinates, with multiplicity.
    pub rational_points: Vec<(ProjPoint, usize)>,
    /// Number of intersections, with multiplicity, lying on the standard
    /// empty conic.
    pub on_conic: usize,
    pub total: usize,
    pub real_count: usize,
    pub pair_count: usize,
}

impl InfinityTrace {
    pub fn of(c: &RationalCurve) -> Result<InfinityTrace> {
        if c.dim() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: c.dim() });
        }
        let f = c.forms();
        let x0 = f[0].clone();
        if x0.is_zero() {
            return Err(Error::CurveInPlane);
        }
        let q = f[1].mul(&f[1]).add(&f[2].mul(&f[2]))?.add(&f[3].mul(&f[3]))?;
        let on_conic = if q.is_zero() { x0.degree() } else { BinaryForm::gcd(&x0, &q).degree() };
        let roots = x0.isolate_roots(&Rat::new(1.into(), (1u64 << 30).into()))?;
        let mut real_count = 0;
        let mut pair_count = 0;
        let mut rational_points = Vec::new();
        for r in &roots {
            let m = r.multiplicity();
            match r {
                RootBox::Conjugate { .. } => pair_count += m,
                RootBox::Infinity { .. } => {
                    real_count += m;
                    rational_points.push((c.eval(&Rat::zero(), &ri(1)), m));
                }
                RootBox::Real { u, .. } => {
                    real_count += m;
                    if u.lo == u.hi {
                        rational_points.push((c.eval(&ri(1), &u.lo), m));
                    }
                }
            }
        }
        Ok(InfinityTrace { total: x0.degree(), x0, roots, rational_points, on_conic, real_count, pair_count })
    }

    /// Every intersection with the plane at infinity lies on the conic.
    pub fn all_on_conic(&self) -> bool {
        self.on_conic == self.total
    }
}

/// `Res(k_0, y_1 k_1 + y_2 k_2 + y_3 k_3)` at `y = (1, a, b)`: up to a
/// constant, the product of `y . P` over the points `P` at infinity.
fn trace_form(c: &RationalCurve, a: &Rat, b: &Rat) -> Result<Rat> {
    let f = c.forms();
    let line = f[1].add(&f[2].scale(a))?.add(&f[3].scale(b))?;
    Ok(resultant(&f[0], &line))
}

/// Whether the points at infinity of `c`, with multiplicity, are exactly
/// those of `parts` taken together. Both sides are forms of degree `n` in
/// `y`, so agreement up to a constant on an `(n+1) x (n+1)` grid decides it.
pub fn trace_is_union(c: &RationalCurve, parts: &[&RationalCurve]) -> Result<bool> {
    if c.dim() != 3 || parts.iter().any(|p| p.dim() != 3) {
        return Err(Error::Precondition("infinity traces are taken in RP3".into()));
    }
    let n = c.degree();
    if parts.iter().map(|p| p.degree()).sum::<usize>() != n {
        return Ok(false);
    }
    let mut values = Vec::new();
    for a in 0..=n as i64 {
        for b in 0..=n as i64 {
            let (a, b) = (ri(a), ri(b));
            let mut g = ri(1);
            for p in parts {
                g *= trace_form(p, &a, &b)?;
            }
            values.push((trace_form(c, &a, &b)?, g));
        }
    }
    let Some((f0, g0)) = values.iter().find(|(_, g)| !g.is_zero()).cloned() else {
        return Ok(false);
    };
    Ok(values.iter().all(|(f, g)| f * &g0 == g * &f0))
}

/// Result of a stereographic projection.
#[derive(Clone, Debug, PartialEq)]
pub struct Projection {
    pub curve: RationalCurve,
    pub trace: InfinityTrace,
    /// Degree lost to the center lying on the curve: 0, 1 or 2.
    pub center_multiplicity: usize,
}

/// Projects an on-sphere curve from the frame's center.
pub fn project(c: &RationalCurve, frame: &ProjectionFrame) -> Result<Projection> {
    if !c.is_on_sphere() {
        return Err(Error::Precondition("the curve does not lie on the sphere".into()));
    }
    let moved = c.apply_transform(&frame.adapted)?;
    let k = moved.forms();
    let forms = vec![k[0].sub(&k[4])?, k[1].clone(), k[2].clone(), k[3].clone()];
    let (curve, drop) = make_curve(forms, Ambient::Rp3)?;
    let center_multiplicity = drop.map_or(0, |d| d.from - d.to);
    if center_multiplicity > 2 {
        return Err(Error::Internal(format!("center met with multiplicity {center_multiplicity}")));
    }
    let trace = InfinityTrace::of(&curve)?;
    Ok(Projection { curve, trace, center_multiplicity })
}

/// How many of the points at infinity must lie on the empty conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftContract {
    /// All `d` points; the lift has degree `d`.
    Preserving,
    /// `d - 1` points; the lift passes once through the center and has
    /// degree `d + 1`.
    ThroughCenter,
    /// `d - 2` points; the center is a double point of the lift, of degree
    /// `d + 2`.
    AtDoublePoint,
}

impl LiftContract {
    fn off_conic(self) -> usize {
        match self {
            LiftContract::Preserving => 0,
            LiftContract::ThroughCenter => 1,
            LiftContract::AtDoublePoint => 2,
        }
    }
}

/// Inverse stereographic projection of an RP3 curve into the sphere, in
/// the coordinates of `frame`.
pub fn lift(c: &RationalCurve, frame: &ProjectionFrame, contract: LiftContract) -> Result<RationalCurve> {
    let trace = InfinityTrace::of(c)?;
    let expected = trace.total.saturating_sub(contract.off_conic());
    if trace.on_conic != expected {
        return Err(Error::ConicConditionFailed { on_conic: trace.on_conic, total: trace.total, expected });
    }
    let y = c.forms();
    let y00 = y[0].mul(&y[0]);
    let norm = y[1].mul(&y[1]).add(&y[2].mul(&y[2]))?.add(&y[3].mul(&y[3]))?;
    let two = ri(2);
    let forms = vec![
        y00.add(&norm)?,
        y[0].mul(&y[1]).scale(&two),
        y[0].mul(&y[2]).scale(&two),
        y[0].mul(&y[3]).scale(&two),
        norm.sub(&y00)?,
    ];
    let (lifted, _) = make_curve(forms, Ambient::Rp4)?;
    let out = lifted.apply_transform(&frame.adapted.inverse())?;
    if !out.is_on_sphere() {
        return Err(Error::Internal("lift left the sphere".into()));
    }
    if out.degree() != c.degree() + contract.off_conic() {
        return Err(Error::Internal(format!("lift has degree {} for input degree {}", out.degree(), c.degree())));
    }
    Ok(out)
}

/// Degree-2 curve whose two points at infinity lie on the standard empty
/// conic, i.e. a circle.
pub fn is_circle_image(c: &RationalCurve) -> Result<bool> {
    if c.degree() != 2 {
        return Err(Error::Precondition(format!("expected a conic, got degree {}", c.degree())));
    }
    let t = InfinityTrace::of(c)?;
    Ok(t.all_on_conic())
}

/// The circle `center + (cos, sin)` in the frame `e1, e2` (orthogonal, of
/// equal length, which is the radius), parametrized by `(s^2 - t^2, 2st)`.
pub fn circle(center: &[Rat; 3], e1: &[Rat; 3], e2: &[Rat; 3]) -> Result<RationalCurve> {
    let dot = |a: &[Rat; 3], b: &[Rat; 3]| -> Rat { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    if !dot(e1, e2).is_zero() || dot(e1, e1) != dot(e2, e2) || dot(e1, e1).is_zero() {
        return Err(Error::Precondition("circle frame must be orthogonal with equal nonzero lengths".into()));
    }
    let mut forms = vec![BinaryForm::from_ints(&[1, 0, 1])];
    for i in 0..3 {
        forms.push(BinaryForm::new(vec![&center[i] + &e1[i], &e2[i] * ri(2), &center[i] - &e1[i]]));
    }
    RationalCurve::new(forms, Ambient::Rp3)
}

/// Forms `a` and `b` agree up to a nonzero scalar.
pub fn proportional(a: &[BinaryForm], b: &[BinaryForm]) -> bool {
    if a.len() != b.len() || a.iter().zip(b).any(|(f, g)| f.degree() != g.degree()) {
        return false;
    }
    let Some((i, j)) = a.iter().enumerate().find_map(|(i, f)| {
        (0..=f.degree()).find(|&j| !f.coeff(j).is_zero()).map(|j| (i, j))
    }) else {
        return false;
    };
    if b[i].coeff(j).is_zero() {
        return false;
    }
    let lambda = b[i].coeff(j) / a[i].coeff(j);
    a.iter().zip(b).all(|(f, g)| &f.scale(&lambda) == g)
}

#[cfg(test)]
mod tests;
