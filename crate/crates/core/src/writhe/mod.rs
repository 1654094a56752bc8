//! Projection diagrams of curves in RP3, crossing signs, the encomplexed
//! writhe and linking numbers.
//!
//! Every sign is the sign of `D(x, y) = det[k(x), k'(x), k(y), k'(y)]`, the
//! volume spanned by the two tangent lines at the preimages of a crossing.
//! For real parameters in an affine chart this is the right-hand crossing
//! sign `det(a', b', a - b)`. `D` is symmetric and vanishes to order four on
//! the diagonal, so a real crossing that turns solitary when the center
//! crosses the tangent surface keeps its sign; at a conjugate pair `D(z, z̄)`
//! is real and gives the solitary sign.

mod det;

use std::fmt;

use crate::curve::coincidence::{mutual_coincidences, self_coincidences, RootRef};
use crate::curve::{Param, RationalCurve};
use crate::error::{Error, Result};
use crate::forms::{isolate_real, ri, rq, BinaryForm, Poly, Rat};
use crate::projgeom::ProjPoint;
use crate::sphere::{project, ProjectionFrame};

use det::{chart_jets, tangent_volume};

/// How many lattice centers are tried before giving up.
const MAX_CENTERS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Real,
    Solitary,
}

impl fmt::Display for CrossingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossingKind::Real => "real",
            CrossingKind::Solitary => "solitary",
        })
    }
}

/// A double point of a projected knot: two real parameters, or a conjugate
/// pair with real image.
#[derive(Clone, Debug, PartialEq)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub params: [Param; 2],
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Diagram {
    pub source: RationalCurve,
    pub center: ProjPoint,
    pub crossings: Vec<Crossing>,
    /// Double points of the projection with non-real image, up to swap.
    pub complex_pairs: usize,
    /// Cusps of the projection, all non-real.
    pub cusps: usize,
}

impl Diagram {
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn real_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.kind == CrossingKind::Real).count()
    }

    pub fn solitary_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.kind == CrossingKind::Solitary).count()
    }
}

pub fn crossing_sign(c: &Crossing) -> i32 {
    c.sign
}

/// Linear forms cutting out the lines through `p`.
fn projection_rows(p: &[Rat]) -> Vec<Vec<Rat>> {
    let j = p.iter().rposition(|x| !num_traits::Zero::is_zero(x)).expect("projective point");
    (0..p.len())
        .filter(|&i| i != j)
        .map(|i| {
            let mut r = vec![ri(0); p.len()];
            r[i] = p[j].clone();
            r[j] = -p[i].clone();
            r
        })
        .collect()
}

/// Coordinates of the projection of the curve from `p` to a plane.
fn project_forms(forms: &[BinaryForm], p: &[Rat]) -> Result<Vec<BinaryForm>> {
    let d = forms[0].degree();
    let out: Vec<BinaryForm> = projection_rows(p)
        .iter()
        .map(|row| {
            forms.iter().zip(row).fold(BinaryForm::zero(d), |acc, (f, c)| acc.add(&f.scale(c)).expect("equal degrees"))
        })
        .collect();
    let g = out.iter().filter(|f| !f.is_zero()).fold(BinaryForm::zero(d), |g, f| BinaryForm::gcd(&g, f));
    if g.is_zero() || g.degree() > 0 {
        return Err(Error::NonGenericCenter("the center lies on the curve".into()));
    }
    Ok(out)
}

fn real_center(center: &ProjPoint, dim: usize) -> Result<Vec<Rat>> {
    if center.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: center.dim() });
    }
    center.real_coords().ok_or_else(|| Error::Precondition("the projection center must be real".into()))
}

fn nongeneric(e: Error) -> Error {
    match e {
        Error::Degenerate(m) => Error::NonGenericCenter(m),
        Error::PositiveDimensional => Error::NonGenericCenter("the projection is not birational".into()),
        e => e,
    }
}

/// Projects a curve in RP3 from `center` and signs every real crossing and
/// solitary point of the image.
pub fn build_diagram(c: &RationalCurve, center: &ProjPoint) -> Result<Diagram> {
    if c.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: c.dim() });
    }
    let p = real_center(center, 3)?;
    let planar = project_forms(c.forms(), &p)?;
    let co = self_coincidences(&planar).map_err(nongeneric)?;
    if co.cusps.iter().any(|h| !isolate_real(h).is_empty()) {
        return Err(Error::NonGenericCenter("the center lies on a real tangent line".into()));
    }
    let d = c.degree();
    if co.root_count() / 2 + co.cusp_count() != (d - 1) * (d - 2) / 2 {
        return Err(Error::NonGenericCenter("the projection has a singularity worse than a node".into()));
    }
    let (k, dk) = chart_jets(c.forms(), &co.chart_x);
    let mut crossings = Vec::new();
    let mut complex_pairs = 0;
    let prs = co.partners()?;
    let mut volumes: Vec<Option<Poly>> = vec![None; co.branches.len()];
    for (r, other) in prs {
        let b = match r {
            RootRef::Real(b, _) | RootRef::Upper(b, _) | RootRef::Lower(b, _) => b,
        };
        let br = &co.branches[b];
        let (kind, sign) = match (r, other) {
            (RootRef::Real(..), RootRef::Real(..)) if r < other => {
                let RootRef::Real(_, i) = r else { unreachable!() };
                let e = volumes[b].get_or_insert_with(|| tangent_volume(&k, &dk, &k, &dk, &br.partner, &br.modulus));
                (CrossingKind::Real, co.sign_real(b, i, e)?)
            }
            (RootRef::Upper(_, i), RootRef::Lower(b2, i2)) if (b2, i2) == (b, i) => {
                let e = volumes[b].get_or_insert_with(|| tangent_volume(&k, &dk, &k, &dk, &br.partner, &br.modulus));
                (CrossingKind::Solitary, co.sign_re_upper(b, i, e)?)
            }
            (RootRef::Real(..), RootRef::Real(..)) | (RootRef::Lower(..), _) => continue,
            (RootRef::Real(..), _) | (_, RootRef::Real(..)) => {
                return Err(Error::Internal("real parameter paired with a non-real one".into()))
            }
            (RootRef::Upper(..), _) => {
                complex_pairs += 1;
                continue;
            }
        };
        if sign == 0 {
            return Err(Error::NonGenericCenter("the tangent lines at a crossing meet".into()));
        }
        crossings.push(Crossing { kind, params: [co.param(r)?, co.param(other)?], sign });
    }
    Ok(Diagram { source: c.clone(), center: center.clone(), crossings, complex_pairs, cusps: co.cusp_count() })
}

/// Affine rational points of RP3 used as projection centers, in a fixed
/// order.
pub fn lattice_centers() -> impl Iterator<Item = ProjPoint> {
    (0i64..).map(|k| {
        ProjPoint::real(vec![ri(1), rq(13 + 7 * k, 5), rq(-9 + 4 * k, 7), rq(5 - 3 * k, 3 + k % 2)]).expect("nonzero")
    })
}

/// Directions, i.e. points on the plane `x0 = 0`, for parallel projection.
pub fn direction_centers() -> impl Iterator<Item = ProjPoint> {
    (0i64..).map(|k| ProjPoint::real(vec![ri(0), ri(1), rq(3 + 2 * k, 7), rq(-5 + 3 * k, 11)]).expect("nonzero"))
}

/// Rational points of the sphere: the north pole, then inverse
/// stereographic images of lattice points.
pub fn sphere_centers() -> impl Iterator<Item = ProjPoint> {
    std::iter::once(ProjPoint::from_ints(&[1, 0, 0, 0, 1])).chain((1i64..).map(|k| {
        let (a, b, c) = (rq(k, 3), rq(2 - k, 5), rq(1 + 2 * k, 4));
        let n = &a * &a + &b * &b + &c * &c;
        let two = ri(2);
        ProjPoint::real(vec![&n + ri(1), &a * &two, &b * &two, &c * &two, n - ri(1)]).expect("nonzero")
    }))
}

/// Writhe of the diagrams at the first `count` generic lattice centers.
pub fn writhes_at_centers(c: &RationalCurve, count: usize) -> Result<Vec<(ProjPoint, i64)>> {
    let mut found = Vec::new();
    for center in lattice_centers().take(MAX_CENTERS) {
        match build_diagram(c, &center) {
            Ok(d) => found.push((center, d.writhe())),
            Err(Error::NonGenericCenter(_)) => continue,
            Err(e) => return Err(e),
        }
        if found.len() == count {
            return Ok(found);
        }
    }
    Err(Error::NonGenericCenter(format!("fewer than {count} generic centers among {MAX_CENTERS}")))
}

/// Writhe of a knot in RP3, computed at two centers which must agree.
pub fn writhe_rp3(c: &RationalCurve) -> Result<i64> {
    let w = writhes_at_centers(c, 2)?;
    if w[0].1 != w[1].1 {
        return Err(Error::Internal(format!("writhe {} at {} but {} at {}", w[0].1, w[0].0, w[1].1, w[1].0)));
    }
    Ok(w[0].1)
}

/// Encomplexed writhe of an on-sphere knot: the writhe of its stereographic
/// projection from `frame`'s center, which must be off the knot.
pub fn encomplexed_writhe_from(c: &RationalCurve, frame: &ProjectionFrame) -> Result<i64> {
    let p = project(c, frame)?;
    if p.center_multiplicity > 0 {
        return Err(Error::NonGenericCenter("the sphere center lies on the knot".into()));
    }
    writhe_rp3(&p.curve)
}

/// Sphere centers off the knot, in the order of `sphere_centers`.
pub fn generic_sphere_frames(c: &RationalCurve, count: usize) -> Result<Vec<ProjectionFrame>> {
    let mut out = Vec::new();
    for center in sphere_centers().take(MAX_CENTERS) {
        let frame = ProjectionFrame::new(center)?;
        if project(c, &frame)?.center_multiplicity == 0 {
            out.push(frame);
            if out.len() == count {
                return Ok(out);
            }
        }
    }
    Err(Error::NonGenericCenter("no sphere center off the knot".into()))
}

/// Encomplexed writhe of a knot on the sphere in RP4, or the writhe of a
/// knot in RP3.
pub fn encomplexed_writhe(c: &RationalCurve) -> Result<i64> {
    if c.dim() == 3 {
        return writhe_rp3(c);
    }
    if !c.is_on_sphere() {
        return Err(Error::Precondition("the curve does not lie on the sphere".into()));
    }
    let frame = generic_sphere_frames(c, 1)?.remove(0);
    encomplexed_writhe_from(c, &frame)
}

/// Linking number of two disjoint curves in RP3 that both avoid the plane
/// `x0 = 0`: half the signed count of their crossings under a parallel
/// projection.
pub fn linking_number(c1: &RationalCurve, c2: &RationalCurve) -> Result<i64> {
    if c1.dim() != 3 || c2.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: if c1.dim() != 3 { c1.dim() } else { c2.dim() } });
    }
    if c1.forms()[0].real_root_count() > 0 || c2.forms()[0].real_root_count() > 0 {
        return Err(Error::NoCommonAffineChart);
    }
    match mutual_coincidences(c1.forms(), c2.forms()) {
        Ok(co) if co.real_roots().next().is_some() => return Err(Error::CurvesIntersect),
        Err(Error::PositiveDimensional) => return Err(Error::CurvesIntersect),
        Err(e) => return Err(e),
        Ok(_) => {}
    }
    let expected = c1.degree() * c2.degree();
    'centers: for center in direction_centers().take(MAX_CENTERS) {
        let p = real_center(&center, 3)?;
        let (p1, p2) = (project_forms(c1.forms(), &p)?, project_forms(c2.forms(), &p)?);
        let co = match mutual_coincidences(&p1, &p2) {
            Ok(co) => co,
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        };
        if co.root_count() != expected {
            continue;
        }
        let (k1, dk1) = chart_jets(c1.forms(), &co.chart_x);
        let (k2, dk2) = chart_jets(c2.forms(), &co.chart_y);
        let mut total = 0i64;
        for (b, i) in co.real_roots() {
            let br = &co.branches[b];
            let e = tangent_volume(&k1, &dk1, &k2, &dk2, &br.partner, &br.modulus);
            match co.sign_real(b, i, &e)? {
                0 => continue 'centers,
                s => total += s as i64,
            }
        }
        if total % 2 != 0 {
            return Err(Error::Internal(format!("odd crossing sum {total}")));
        }
        return Ok(total / 2);
    }
    Err(Error::NonGenericCenter(format!("no generic direction among {MAX_CENTERS}")))
}
