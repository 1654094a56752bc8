use super::*;
use crate::forms::{ri, rq};

fn curve(rows: &[&[i64]]) -> RationalCurve {
    RationalCurve::from_ints(rows).unwrap()
}

fn class4() -> RationalCurve {
    // [s(s^3+t^3) : s(s^3-t^3) : t(s^3+t^3) : t(s^3-t^3)]
    curve(&[&[1, 0, 0, 1, 0], &[1, 0, 0, -1, 0], &[0, 1, 0, 0, 1], &[0, 1, 0, 0, -1]])
}

#[test]
fn plane_conic_is_valid() {
    let c = curve(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    assert_eq!(c.degree(), 2);
    assert!(!c.is_on_sphere());
}

#[test]
fn common_factor_is_removed() {
    let s2 = BinaryForm::from_ints(&[1, 0, 0]);
    let st = BinaryForm::from_ints(&[0, 1, 0]);
    let (c, drop) = make_curve(vec![s2, st.clone(), st.clone(), st], Ambient::Rp3).unwrap();
    assert_eq!(c.degree(), 1);
    let drop = drop.unwrap();
    assert_eq!((drop.from, drop.to), (2, 1));
    assert_eq!(drop.factor, BinaryForm::s());
}

#[test]
fn all_zero_rejected() {
    let z = BinaryForm::zero(2);
    assert_eq!(make_curve(vec![z.clone(), z.clone(), z.clone(), z], Ambient::Rp3), Err(Error::AllZero));
}

#[test]
fn class4_lies_on_segre_quadric() {
    let c = class4();
    assert!(c.on_quadric(&QuadraticForm::segre()).unwrap());
    assert!(!c.on_quadric(&QuadraticForm::sphere(3)).unwrap());
    assert!(c.on_quadric(&QuadraticForm::sphere(4)).is_err());
    let basis = c.quadric_through_curve();
    assert!(!basis.is_empty());
    assert!(basis.iter().all(|q| c.on_quadric(q).unwrap()));
    // the Segre form is in the span: adding it does not raise the rank
    let mut rows: Vec<Vec<Rat>> = basis.iter().map(|q| q.coeffs()).collect();
    let r = Matrix::from_rows(rows.clone()).rank();
    rows.push(QuadraticForm::segre().coeffs());
    assert_eq!(Matrix::from_rows(rows).rank(), r);
}

#[test]
fn plane_conic_has_many_quadrics() {
    let c = curve(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    assert!(c.quadric_through_curve().len() >= 4);
}

#[test]
fn quadric_classification() {
    assert_eq!(RationalCurve::classify_quadric(&QuadraticForm::segre()).unwrap(), QuadricKind::Hyperboloid);
    assert_eq!(RationalCurve::classify_quadric(&QuadraticForm::sphere(3)).unwrap(), QuadricKind::Sphere);
    let mut c = vec![Rat::zero(); 10];
    // x0 x2 - x1^2 in the order of monomials(3): 00 01 02 03 11 ...
    c[2] = ri(1);
    c[4] = ri(-1);
    let cone = QuadraticForm::from_coeffs(3, &c).unwrap();
    assert_eq!(cone.classify().unwrap(), QuadricKind::Cone);
}

#[test]
fn solitary_wall() {
    // [s^2(s^2+t^2) : st(s^2+t^2) : t^2(s^2+t^2) : s^4]
    let c = curve(&[&[1, 0, 1, 0, 0], &[0, 1, 0, 1, 0], &[0, 0, 1, 0, 1], &[1, 0, 0, 0, 0]]);
    let dps = c.double_points().unwrap();
    assert_eq!(dps.len(), 1);
    assert_eq!(dps[0].kind, DoublePointKind::Solitary);
    assert_eq!(dps[0].image, Some(ProjPoint::from_ints(&[0, 0, 0, 1])));
    let mut ims: Vec<f64> = dps[0].params.iter().map(|p| p.approx().1).collect();
    ims.sort_by(f64::total_cmp);
    assert!((ims[0] + 1.0).abs() < 1e-9 && (ims[1] - 1.0).abs() < 1e-9);
}

#[test]
fn crossing_wall() {
    // [s^3 t : s^2 t^2 : s t^3 : s^4 + t^4]
    let c = curve(&[&[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[1, 0, 0, 0, 1]]);
    let dps = c.double_points().unwrap();
    assert_eq!(dps.len(), 1);
    assert_eq!(dps[0].kind, DoublePointKind::RealCrossing);
    assert_eq!(dps[0].image, Some(ProjPoint::from_ints(&[0, 0, 0, 1])));
    let cert = c.is_nonsingular_knot().unwrap();
    assert!(!cert.is_nonsingular());
}

#[test]
fn circle_is_injective() {
    let c = curve(&[&[1, 0, 1], &[1, 0, -1], &[0, 2, 0], &[0, 0, 0]]);
    assert!(c.double_points().unwrap().is_empty());
    assert!(c.is_immersion().is_immersion());
}

#[test]
fn cusp_found_by_immersion_test() {
    // [s^3 : s^2 t : t^3 : 0] has a cusp at [0:1]
    let c = curve(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
    let imm = c.is_immersion();
    assert!(!imm.is_immersion());
    assert_eq!(imm.witnesses, vec![Param::Infinity]);
    let cert = c.is_nonsingular_knot().unwrap();
    assert_eq!(cert.cusps.len(), 1);
    assert_eq!(cert.cusps[0].image, Some(ProjPoint::from_ints(&[0, 0, 1, 0])));
}

#[test]
fn line_is_a_knot() {
    let c = curve(&[&[1, 0], &[0, 1], &[1, 1], &[0, 0]]);
    assert!(c.is_nonsingular_knot().unwrap().is_nonsingular());
}

#[test]
fn torus_knot_examples() {
    let c = torus_knot_default(2, 1).unwrap();
    let expect = curve(&[&[5, 0, 5], &[3, 0, -3], &[0, 6, 0], &[4, 0, -4], &[0, 8, 0]]);
    assert_eq!(c, expect);
    assert!(c.is_on_sphere());
    assert_eq!(torus_knot_default(6, 3), Err(Error::NotCoprime { m: 3, half: 3 }));
    assert!(matches!(torus_knot(6, 1, (rq(1, 2), rq(1, 2))), Err(Error::BadRadii(..))));
    let t62 = torus_knot_default(6, 2).unwrap();
    assert_eq!(t62.degree(), 6);
    let (again, drop) = make_curve(t62.forms().to_vec(), Ambient::Rp4).unwrap();
    assert!(drop.is_none() && again.is_on_sphere());
}

#[test]
fn torus_knots_are_nonsingular() {
    for (d, m) in [(2, 1), (4, 1), (6, 2)] {
        let c = torus_knot_default(d, m).unwrap();
        assert!(c.is_immersion().is_immersion(), "({d},{m})");
        let cert = c.is_nonsingular_knot().unwrap();
        assert!(cert.is_nonsingular(), "({d},{m}): {:?}", cert.double_points);
    }
}

#[test]
fn torus_6_1_has_complex_cusps() {
    // x1 + i x2 vanishes to order 2 at s = i t, x0 to order 3
    let c = torus_knot_default(6, 1).unwrap();
    let imm = c.is_immersion();
    assert!(!imm.is_immersion());
    let mut ims: Vec<f64> = imm.witnesses.iter().map(|p| p.approx().1).collect();
    ims.sort_by(f64::total_cmp);
    assert_eq!(ims.len(), 2);
    assert!((ims[0] + 1.0).abs() < 1e-9 && (ims[1] - 1.0).abs() < 1e-9);
    assert!(c.double_points().unwrap().is_empty());
}

#[test]
fn class4_bidegree() {
    let b = bidegree_split(&class4()).unwrap();
    assert_eq!(b.complex_bidegree, (1, 3));
    assert_eq!(b.q0, BinaryForm::s());
    assert_eq!(b.q1, BinaryForm::t());
    assert_eq!(b.q2, BinaryForm::from_ints(&[1, 0, 0, 1]));
    assert_eq!(b.q3, BinaryForm::from_ints(&[1, 0, 0, -1]));
    assert_eq!(b.real_bidegree, (1, -1));
}

#[test]
fn diagonal_bidegree() {
    // Segre image of ([s:t], [s:t])
    let c = curve(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
    let b = bidegree_split(&c).unwrap();
    assert_eq!(b.complex_bidegree, (1, 1));
    assert_eq!(b.real_bidegree, (1, 1));
    let off = curve(&[&[1, 0, 1], &[1, 0, -1], &[0, 2, 0], &[0, 0, 0]]);
    assert_eq!(bidegree_split(&off), Err(Error::NotOnSegreQuadric));
}

#[test]
fn jacobian_ranks() {
    for m in [1, 2] {
        let c = torus_knot_default(6, m).unwrap();
        assert_eq!(jacobian_rank_default(&c).unwrap(), 13);
    }
    let c = torus_knot_default(6, 1).unwrap();
    let samples: Vec<Rat> = (1..=13).map(ri).collect();
    // x0 = N (s^2+t^2)^3 has no s^5 t term
    assert_eq!(jacobian_rank(&c, &samples, 1), Err(Error::BadChart(1)));
}

#[test]
fn transforms_and_reparametrization() {
    let c = curve(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    assert_eq!(c.apply_transform(&ProjTransform::identity(3)).unwrap(), c);
    let swap = [[ri(0), ri(1)], [ri(1), ri(0)]];
    let r = c.reparametrize(&swap).unwrap();
    assert_eq!(r, curve(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]));
    let t = torus_knot_default(4, 1).unwrap();
    let moved = t.apply_transform(&crate::projgeom::mirror()).unwrap();
    assert!(moved.is_on_sphere());
}

#[test]
fn coefficient_matrices() {
    let t = torus_knot_default(4, 1).unwrap();
    assert!(t.coefficient_matrix().is_ok());
    let m = [[ri(1), ri(1)], [ri(-1), ri(2)]];
    assert!(t.reparametrize(&m).unwrap().coefficient_matrix().is_ok());
    let flat = curve(&[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 1], &[0, 0, 0, 0, 0]]);
    match flat.coefficient_matrix() {
        Err(Error::NotInvertible(h)) => assert_eq!(h, vec![ri(0), ri(0), ri(0), ri(0), ri(1)]),
        other => panic!("expected a hyperplane, got {other:?}"),
    }
}

#[test]
fn plane_sections() {
    let c = curve(&[&[1, 0, 1], &[1, 0, -1], &[0, 2, 0], &[0, 0, 0]]);
    assert_eq!(c.intersect_with_plane(&[ri(0), ri(0), ri(0), ri(1)], &rq(1, 100)), Err(Error::CurveInPlane));
    let roots = c.intersect_with_plane(&[ri(0), ri(1), ri(0), ri(0)], &rq(1, 100)).unwrap();
    assert_eq!(roots.len(), 2);
    assert!(roots.iter().all(|r| r.is_real()));
}
