use super::*;
use crate::curve::torus_knot_default;
use crate::forms::rq;

fn r3(a: [i64; 3]) -> [Rat; 3] {
    a.map(ri)
}

fn unit_circle() -> RationalCurve {
    circle(&r3([0, 0, 0]), &r3([1, 0, 0]), &r3([0, 1, 0])).unwrap()
}

#[test]
fn sphere_circle_projects_to_circle() {
    let c = RationalCurve::from_ints(&[&[1, 0, 1], &[1, 0, -1], &[0, 2, 0], &[0, 0, 0], &[0, 0, 0]]).unwrap();
    assert!(c.is_on_sphere());
    let p = project(&c, &ProjectionFrame::north()).unwrap();
    assert_eq!(p.center_multiplicity, 0);
    assert_eq!(p.curve.degree(), 2);
    assert!(p.trace.all_on_conic());
    assert!(is_circle_image(&p.curve).unwrap());
}

#[test]
fn center_on_curve_drops_degree() {
    let t = torus_knot_default(4, 1).unwrap();
    let center = t.eval(&ri(1), &ri(0));
    assert_eq!(center, ProjPoint::from_ints(&[5, 3, 0, 4, 0]));
    let p = project(&t, &ProjectionFrame::new(center).unwrap()).unwrap();
    assert_eq!(p.center_multiplicity, 1);
    assert_eq!(p.curve.degree(), 3);
    assert_eq!((p.trace.real_count, p.trace.pair_count), (1, 1));
    assert_eq!(p.trace.on_conic, 2);
    let back = lift(&p.curve, &ProjectionFrame::new(ProjPoint::from_ints(&[5, 3, 0, 4, 0])).unwrap(), LiftContract::ThroughCenter)
        .unwrap();
    assert!(proportional(back.forms(), t.forms()));
}

#[test]
fn center_at_double_point() {
    // an RP3 quartic meeting infinity at [1:+-i] on the conic and [1:+-1/2] off it
    let g = BinaryForm::from_ints(&[1, 1, 2]);
    let y = vec![
        BinaryForm::from_ints(&[1, 0, 1]).mul(&BinaryForm::from_ints(&[1, 0, -4])),
        BinaryForm::from_ints(&[1, 0, -1]).mul(&g),
        BinaryForm::from_ints(&[0, 2, 0]).mul(&g),
        BinaryForm::from_ints(&[1, 0, 1]).mul(&BinaryForm::from_ints(&[1, -1, 1])),
    ];
    let y = RationalCurve::new(y, Ambient::Rp3).unwrap();
    let frame = ProjectionFrame::north();
    let six = lift(&y, &frame, LiftContract::AtDoublePoint).unwrap();
    assert_eq!(six.degree(), 6);
    let dps = six.double_points().unwrap();
    assert_eq!(dps.len(), 1);
    assert_eq!(dps[0].image, Some(ProjPoint::from_ints(&[1, 0, 0, 0, 1])));
    let p = project(&six, &frame).unwrap();
    assert_eq!(p.center_multiplicity, 2);
    assert_eq!(p.curve.degree(), 4);
    assert_eq!(p.trace.total, 4);
    assert_eq!(p.trace.on_conic, 2);
    assert!(proportional(p.curve.forms(), y.forms()));
}

#[test]
fn round_trip_torus_knot() {
    let t = torus_knot_default(6, 2).unwrap();
    let frame = ProjectionFrame::new(ProjPoint::from_ints(&[3, 0, 0, 0, 3])).unwrap();
    let p = project(&t, &frame).unwrap();
    assert_eq!(p.curve.degree(), 6);
    assert!(p.trace.all_on_conic());
    let back = lift(&p.curve, &frame, LiftContract::Preserving).unwrap();
    assert!(proportional(back.forms(), t.forms()));
}

#[test]
fn ellipse_fails_conic_condition() {
    let e = RationalCurve::from_ints(&[&[1, 0, 1], &[2, 0, -2], &[0, 2, 0], &[0, 0, 0]]).unwrap();
    assert!(!is_circle_image(&e).unwrap());
    assert!(matches!(
        lift(&e, &ProjectionFrame::north(), LiftContract::Preserving),
        Err(Error::ConicConditionFailed { on_conic: 0, total: 2, expected: 2 })
    ));
    let c = RationalCurve::from_ints(&[&[1, 0, 1], &[1, 0, -1], &[0, 2, 0], &[0, 0, 0]]).unwrap();
    assert!(is_circle_image(&c).unwrap());
    let lifted = lift(&c, &ProjectionFrame::north(), LiftContract::Preserving).unwrap();
    assert_eq!(lifted.degree(), 2);
    let cubic = RationalCurve::from_ints(&[&[1, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
    assert!(is_circle_image(&cubic).is_err());
}

#[test]
fn plane_sections_of_class4_and_circle() {
    let c = RationalCurve::from_ints(&[&[1, 0, 0, 1, 0], &[1, 0, 0, -1, 0], &[0, 1, 0, 0, 1], &[0, 1, 0, 0, -1]]).unwrap();
    let t = InfinityTrace::of(&c).unwrap();
    assert_eq!((t.real_count, t.pair_count), (2, 1));
    let far = unit_circle().intersect_with_plane(&[ri(-5), ri(1), ri(0), ri(0)], &rq(1, 64)).unwrap();
    assert_eq!(far.len(), 1);
    assert!(!far[0].is_real());
}

fn two_circles_once() -> (RationalCurve, RationalCurve) {
    // the unit circle in z = 0 and the unit circle about (2,0,0) in y = 0
    let b = circle(&r3([2, 0, 0]), &r3([1, 0, 0]), &r3([0, 0, 1])).unwrap();
    (unit_circle(), b)
}

#[test]
fn join_two_circles() {
    let (a, b) = two_circles_once();
    let j = join_search(&a, &b, &ri(1)).unwrap();
    assert_eq!(j.curve.degree(), 4);
    assert_eq!(j.meeting, vec![ri(1), ri(1), ri(0), ri(0)]);
    let t = InfinityTrace::of(&j.curve).unwrap();
    assert!(t.all_on_conic());
    assert!(j.epsilon < ri(1));
    assert_eq!(t.total, a.degree() + b.degree());
    assert_eq!((t.real_count, t.pair_count), (0, 2));
    assert!(trace_is_union(&j.curve, &[&a, &b]).unwrap());
    assert!(!trace_is_union(&j.curve, &[&a, &a]).unwrap());
    assert!(j.curve.is_nonsingular_knot().unwrap().is_nonsingular());
    let lifted = lift(&j.curve, &ProjectionFrame::north(), LiftContract::Preserving).unwrap();
    assert_eq!(lifted.degree(), 4);
}

#[test]
fn join_rejects_bad_inputs() {
    let a = unit_circle();
    // tangent to a at (1,0,0) along y, in the plane x = 1
    let tangent = circle(&r3([1, 0, 1]), &r3([0, 0, -1]), &r3([0, 1, 0])).unwrap();
    assert_eq!(join_curves(&a, &tangent, &ri(1)).unwrap_err(), Error::TangentsDependent);
    // meets a at (1,0,0) and (-1,0,0)
    let twice = circle(&r3([0, 0, 0]), &r3([1, 0, 0]), &r3([0, 0, 1])).unwrap();
    assert!(matches!(join_curves(&a, &twice, &ri(1)), Err(Error::MultipleIntersections(2))));
}
