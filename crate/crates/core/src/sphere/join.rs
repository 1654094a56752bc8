use num_traits::{One, Zero};

use super::{lift, project, LiftContract, ProjectionFrame};
use crate::curve::coincidence::{mutual_coincidences, old_param};
use crate::curve::{make_curve, Ambient, RationalCurve};
use crate::error::{Error, Result};
use crate::forms::{ri, rq, BinaryForm, Rat};
use crate::linalg::Matrix;

/// A joined curve with the parameters used to build it.
#[derive(Clone, Debug, PartialEq)]
pub struct JoinResult {
    pub curve: RationalCurve,
    pub epsilon: Rat,
    /// The common point, scaled so `x0 = 1`.
    pub meeting: Vec<Rat>,
}

/// The single common point of two RP3 curves, as parameters `(s, t)` on each.
fn meeting_params(c1: &RationalCurve, c2: &RationalCurve) -> Result<((Rat, Rat), (Rat, Rat))> {
    let co = mutual_coincidences(c1.forms(), c2.forms())?;
    let n = co.root_count();
    if n != 1 {
        return Err(Error::MultipleIntersections(n));
    }
    let br = &co.branches[0];
    if br.real.len() != 1 || br.modulus.deg() != 1 {
        return Err(Error::MultipleIntersections(n));
    }
    let x = -br.modulus.coeff(0) / br.modulus.coeff(1);
    let y = br.partner.eval(&x);
    let to_st = |u: Option<Rat>| match u {
        Some(u) => (Rat::one(), u),
        None => (Rat::zero(), Rat::one()),
    };
    Ok((to_st(old_param(&co.chart_x, &x)), to_st(old_param(&co.chart_y, &y))))
}

/// Moebius map whose row `row` is `(s, t)`, completed to an invertible matrix.
fn moebius_with_row(row: usize, s: &Rat, t: &Rat) -> [[Rat; 2]; 2] {
    let other = if s.is_zero() { [ri(1), ri(0)] } else { [ri(0), ri(1)] };
    let given = [s.clone(), t.clone()];
    if row == 0 {
        [given, other]
    } else {
        [other, given]
    }
}

/// Joins two RP3 curves meeting in exactly one affine point `P` with
/// independent tangents.
///
/// The first curve is reparametrized to pass through `P` at `[1:0]`, the
/// second at `[0:1]`, and the second parameter is stretched by `1/epsilon`.
/// In the affine chart the result is `X(u) = P1(u) + P2(u/epsilon) - P`,
/// which stays close to the first curve away from `u = 0` and to the second
/// near it. Points at infinity of either input are kept.
pub fn join_curves(c1: &RationalCurve, c2: &RationalCurve, epsilon: &Rat) -> Result<JoinResult> {
    if c1.dim() != 3 || c2.dim() != 3 {
        return Err(Error::Precondition("joins are built in RP3".into()));
    }
    if *epsilon <= Rat::zero() {
        return Err(Error::Precondition("epsilon must be positive".into()));
    }
    let ((s1, t1), (s2, t2)) = meeting_params(c1, c2)?;
    let p = c1.reparametrize(&moebius_with_row(0, &s1, &t1))?;
    let q = c2.reparametrize(&moebius_with_row(1, &s2, &t2))?;
    let (pf, qf) = (p.forms(), q.forms());
    let (m, n) = (p.degree(), q.degree());
    // values at the meeting parameters
    let pv: Vec<Rat> = pf.iter().map(|f| f.coeff(0).clone()).collect();
    let qv: Vec<Rat> = qf.iter().map(|f| f.coeff(n).clone()).collect();
    if pv[0].is_zero() {
        return Err(Error::Precondition("the common point lies at infinity".into()));
    }
    let meeting: Vec<Rat> = pv.iter().map(|x| x / &pv[0]).collect();
    // tangent directions: d/du at u = 0 for p, d/dv at v = 0 (v = s/t) for q
    let dp: Vec<Rat> = pf.iter().map(|f| f.coeff(1).clone()).collect();
    let dq: Vec<Rat> = qf.iter().map(|f| f.coeff(n - 1).clone()).collect();
    if Matrix::from_rows(vec![pv.clone(), dp, dq]).rank() < 3 {
        return Err(Error::TangentsDependent);
    }
    let pf: Vec<BinaryForm> = pf.iter().map(|f| f.scale(&pv[0].recip())).collect();
    let stretch = [[ri(1), ri(0)], [ri(0), epsilon.recip()]];
    let qf: Vec<BinaryForm> = qf.iter().map(|f| f.substitute(&stretch).scale(&qv[0].recip())).collect();
    let p0q0 = pf[0].mul(&qf[0]);
    let mut forms = vec![p0q0.clone()];
    for i in 1..4 {
        let f = pf[i].mul(&qf[0]).add(&qf[i].mul(&pf[0]))?.sub(&p0q0.scale(&meeting[i]))?;
        forms.push(f);
    }
    let (curve, drop) = make_curve(forms, Ambient::Rp3)?;
    // a shared point at infinity of the two pieces cancels; another epsilon avoids it
    if drop.is_some() || curve.degree() != m + n {
        return Err(Error::StillSingular(epsilon.clone()));
    }
    if !curve.is_nonsingular_knot()?.is_nonsingular() {
        return Err(Error::StillSingular(epsilon.clone()));
    }
    Ok(JoinResult { curve, epsilon: epsilon.clone(), meeting })
}

/// `join_curves`, halving epsilon (starting at `start`) up to 20 times
/// until the result is nonsingular.
pub fn join_search(c1: &RationalCurve, c2: &RationalCurve, start: &Rat) -> Result<JoinResult> {
    let mut eps = start.clone();
    for _ in 0..=20 {
        match join_curves(c1, c2, &eps) {
            Err(Error::StillSingular(_)) => eps *= rq(1, 2),
            other => return other,
        }
    }
    Err(Error::StillSingular(eps))
}

/// Joins two on-sphere curves: projects both from the frame's center, joins
/// in RP3 and lifts back with the degree preserved.
pub fn join_on_sphere(c1: &RationalCurve, c2: &RationalCurve, frame: &ProjectionFrame, start: &Rat) -> Result<JoinResult> {
    let a = project(c1, frame)?;
    let b = project(c2, frame)?;
    if a.center_multiplicity > 0 || b.center_multiplicity > 0 {
        return Err(Error::Precondition("the projection center lies on an input curve".into()));
    }
    let j = join_search(&a.curve, &b.curve, start)?;
    let curve = lift(&j.curve, frame, LiftContract::Preserving)?;
    if !curve.is_nonsingular_knot()?.is_nonsingular() {
        return Err(Error::StillSingular(j.epsilon));
    }
    Ok(JoinResult { curve, ..j })
}
