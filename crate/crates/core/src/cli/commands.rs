use std::collections::BTreeMap;
use std::path::Path;

use serde_json::json;

use super::file::{load_curve, CurveFile};
use super::report::{Check, Report, Status};
use crate::curve::{
    bidegree_split, jacobian_rank_default, torus_knot, DoublePoint, DoublePointKind, Param, RationalCurve,
};
use crate::error::{Error, Result};
use crate::forms::{fmt_rat, parse_rat, Rat, RootBox};
use crate::projgeom::{retract_to_conic, ProjPoint, QuadraticForm};
use crate::sphere::{
    join_curves, join_on_sphere, join_search, lift, project, proportional, standard_conic, trace_is_union,
    InfinityTrace, LiftContract, ProjectionFrame,
};
use crate::writhe::{build_diagram, generic_sphere_frames, lattice_centers, linking_number, sphere_centers};

/// Parses `1,0,0,0,1` or `1:0:0:0:1`.
pub fn parse_point(s: &str) -> Result<ProjPoint> {
    let coords = s.split([',', ':']).map(parse_rat).collect::<Result<Vec<_>>>()?;
    ProjPoint::real(coords).map_err(|_| Error::Parse(format!("not a projective point: {s:?}")))
}

pub fn parse_pair(s: &str) -> Result<(Rat, Rat)> {
    match s.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?.as_slice() {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(Error::Parse(format!("expected two rationals a,b, got {s:?}"))),
    }
}

pub fn parse_contract(s: &str) -> Result<LiftContract> {
    match s {
        "preserving" => Ok(LiftContract::Preserving),
        "through-center" => Ok(LiftContract::ThroughCenter),
        "at-double-point" => Ok(LiftContract::AtDoublePoint),
        _ => Err(Error::Parse(format!("unknown lift contract {s:?}"))),
    }
}

fn name_of(path: &Path) -> String {
    path.display().to_string()
}

fn with_curve(mut r: Report, c: &RationalCurve, name: &str) -> Report {
    let meta = BTreeMap::from([("name".to_string(), name.to_string())]);
    r.curve = Some(CurveFile::from_curve(c, meta).render());
    r
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

/// "1 solitary double point", "2 real crossings, 1 cusp", ...
pub fn describe_double_points(points: &[DoublePoint]) -> String {
    let count = |k| points.iter().filter(|p| p.kind == k).count();
    let parts: Vec<String> = [
        (DoublePointKind::RealCrossing, "real crossing", "real crossings"),
        (DoublePointKind::Solitary, "solitary double point", "solitary double points"),
        (DoublePointKind::Complex, "pair of complex double points", "pairs of complex double points"),
        (DoublePointKind::Cusp, "cusp", "cusps"),
    ]
    .into_iter()
    .filter(|(k, ..)| count(*k) > 0)
    .map(|(k, one, many)| plural(count(k), one, many))
    .collect();
    parts.join(", ")
}

fn param_json(p: &Param) -> serde_json::Value {
    match p.exact() {
        Some((s, t)) => json!(format!("[{}:{}]", fmt_rat(&s), fmt_rat(&t))),
        None => json!(p.to_string()),
    }
}

fn double_point_json(p: &DoublePoint) -> serde_json::Value {
    let image = match &p.image {
        Some(q) => json!(q.to_string()),
        None => json!(p.image_approx.iter().map(|(re, im)| vec![*re, *im]).collect::<Vec<_>>()),
    };
    json!({
        "kind": p.kind.to_string(),
        "params": p.params.iter().map(param_json).collect::<Vec<_>>(),
        "image": image,
    })
}

pub fn verify_curve(c: &RationalCurve, name: &str) -> Result<Report> {
    let mut r = Report::new("verify", &[name]);
    let space = if c.dim() == 3 { "RP3" } else { "RP4" };
    r.push(Check::info("curve", format!("degree {} in {space}", c.degree())).with("degree", c.degree()));
    if c.dim() == 4 {
        let on = c.is_on_sphere();
        r.push(Check::verdict("on_sphere", on, if on { "on-sphere" } else { "off the sphere" }));
    }
    let imm = c.is_immersion();
    r.push(
        Check::verdict("immersion", imm.is_immersion(), if imm.is_immersion() { "immersion" } else { "not an immersion" })
            .with("jacobian_gcd", imm.jacobian_gcd.to_string())
            .with("witnesses", imm.witnesses.iter().map(param_json).collect::<Vec<_>>()),
    );
    let cert = c.is_nonsingular_knot()?;
    let mut all = cert.double_points.clone();
    all.extend(cert.cusps.iter().cloned());
    let summary =
        if cert.is_nonsingular() { "nonsingular".to_string() } else { format!("singular: {}", describe_double_points(&all)) };
    r.push(
        Check::verdict("nonsingular", cert.is_nonsingular(), summary)
            .with("eliminant_degree", cert.eliminant.deg())
            .with("double_points", all.iter().map(double_point_json).collect::<Vec<_>>()),
    );
    Ok(r)
}

pub fn verify(path: &Path) -> Result<Report> {
    verify_curve(&load_curve(path)?, &name_of(path))
}

pub fn double_points(path: &Path) -> Result<Report> {
    let c = load_curve(path)?;
    let mut r = Report::new("double-points", &[&name_of(path)]);
    let mut points = c.double_points()?;
    points.extend(c.is_nonsingular_knot()?.cusps);
    r.push(Check::info("count", if points.is_empty() { "none".into() } else { describe_double_points(&points) }));
    for (i, p) in points.iter().enumerate() {
        let params: Vec<String> = p.params.iter().map(|q| q.to_string()).collect();
        let image = match &p.image {
            Some(q) => q.to_string(),
            None => format!("{:?}", p.image_approx),
        };
        r.push(
            Check::info(&format!("point {}", i + 1), format!("{} at {} -> {image}", p.kind, params.join(", ")))
                .with("detail", double_point_json(p)),
        );
    }
    Ok(r)
}

/// Writhe at two centers: of the knot itself in RP3, or of its projection
/// from the first sphere center off the knot.
pub fn writhe_curve(c: &RationalCurve, name: &str) -> Result<Report> {
    let mut r = Report::new("writhe", &[name]);
    let plane = if c.dim() == 3 {
        c.clone()
    } else {
        if !c.is_on_sphere() {
            return Err(Error::Precondition("the curve does not lie on the sphere".into()));
        }
        let frame = generic_sphere_frames(c, 1)?.remove(0);
        r.push(Check::info("sphere_center", frame.center.to_string()));
        project(c, &frame)?.curve
    };
    let mut found = Vec::new();
    for center in lattice_centers().take(24) {
        let d = match build_diagram(&plane, &center) {
            Err(Error::NonGenericCenter(_)) => continue,
            other => other?,
        };
        r.push(
            Check::info("diagram", format!("center {center}: writhe {}", d.writhe()))
                .with("real_crossings", d.real_count())
                .with("solitary_points", d.solitary_count())
                .with("complex_pairs", d.complex_pairs)
                .with("cusps", d.cusps),
        );
        found.push(d.writhe());
        if found.len() == 2 {
            break;
        }
    }
    if found.len() < 2 {
        return Err(Error::NonGenericCenter("fewer than 2 generic centers".into()));
    }
    let agree = found[0] == found[1];
    r.push(Check::verdict("writhe", agree, found[0].to_string()).with("value", found[0]));
    Ok(r)
}

pub fn writhe(path: &Path) -> Result<Report> {
    writhe_curve(&load_curve(path)?, &name_of(path))
}

fn trace_check(t: &InfinityTrace) -> Check {
    Check::info(
        "infinity_trace",
        format!("{} points at infinity, {} on the empty conic", t.total, t.on_conic),
    )
    .with("real", t.real_count)
    .with("conjugate_pairs", t.pair_count)
    .with("on_conic", t.on_conic)
    .with("x0", t.x0.to_string())
}

pub fn project_file(path: &Path, center: &ProjPoint) -> Result<Report> {
    let c = load_curve(path)?;
    let frame = ProjectionFrame::new(center.clone())?;
    let p = project(&c, &frame)?;
    let mut r = Report::new("project", &[&name_of(path)]);
    r.push(Check::info("center", center.to_string()).with("multiplicity_on_curve", p.center_multiplicity));
    r.push(Check::info("degree", format!("{} -> {}", c.degree(), p.curve.degree())));
    r.push(trace_check(&p.trace));
    let definite = standard_conic().signature().is_definite();
    r.push(Check::verdict("empty_conic", definite, standard_conic().signature().to_string()));
    Ok(with_curve(r, &p.curve, &format!("projection of {}", name_of(path))))
}

pub fn lift_file(path: &Path, center: &ProjPoint, contract: LiftContract) -> Result<Report> {
    let c = load_curve(path)?;
    let frame = ProjectionFrame::new(center.clone())?;
    let l = lift(&c, &frame, contract)?;
    let mut r = Report::new("lift", &[&name_of(path)]);
    r.push(Check::info("degree", format!("{} -> {}", c.degree(), l.degree())));
    r.push(Check::verdict("on_sphere", l.is_on_sphere(), if l.is_on_sphere() { "on-sphere" } else { "off the sphere" }));
    let back = project(&l, &frame)?.curve;
    let ok = proportional(back.forms(), c.forms());
    r.push(Check::verdict("round_trip", ok, if ok { "projects back to the input" } else { "projection differs from the input" }));
    Ok(with_curve(r, &l, &format!("lift of {}", name_of(path))))
}

pub fn join_files(p1: &Path, p2: &Path, epsilon: Option<&Rat>) -> Result<Report> {
    let (a, b) = (load_curve(p1)?, load_curve(p2)?);
    let mut r = Report::new("join", &[&name_of(p1), &name_of(p2)]);
    let j = match (a.dim(), epsilon) {
        (3, Some(e)) => join_curves(&a, &b, e)?,
        (3, None) => join_search(&a, &b, &Rat::from_integer(1.into()))?,
        _ => {
            let start = epsilon.cloned().unwrap_or_else(|| Rat::from_integer(1.into()));
            join_on_sphere(&a, &b, &ProjectionFrame::north(), &start)?
        }
    };
    r.push(Check::info("epsilon", fmt_rat(&j.epsilon)));
    r.push(Check::info("meeting", j.meeting.iter().map(fmt_rat).collect::<Vec<_>>().join(":")));
    r.push(Check::info("degree", format!("{} + {} -> {}", a.degree(), b.degree(), j.curve.degree())));
    if j.curve.dim() == 3 {
        let union = trace_is_union(&j.curve, &[&a, &b])?;
        r.push(Check::verdict("trace_union", union, if union { "union of the input traces" } else { "differs" }));
    }
    r.push(Check::verdict("nonsingular", true, "nonsingular"));
    Ok(with_curve(r, &j.curve, "join"))
}

pub fn bidegree(path: &Path) -> Result<Report> {
    let c = load_curve(path)?;
    let mut r = Report::new("bidegree", &[&name_of(path)]);
    let on = c.dim() == 3 && c.on_quadric(&QuadraticForm::segre())?;
    r.push(Check::verdict("segre_quadric", on, if on { "x0 x3 = x1 x2" } else { "not on x0 x3 = x1 x2" }));
    let s = bidegree_split(&c)?;
    let (p, q) = s.complex_bidegree;
    let (u, v) = s.real_bidegree;
    r.push(Check::info("complex_bidegree", format!("({p},{q})")).with("value", vec![p, q]));
    r.push(Check::info("real_bidegree", format!("({u},{v})")).with("value", vec![u, v]));
    r.push(Check::info("factors", format!("[{}:{}] x [{}:{}]", s.q0, s.q1, s.q2, s.q3)));
    Ok(r)
}

pub fn quadric(path: &Path) -> Result<Report> {
    let c = load_curve(path)?;
    let mut r = Report::new("quadric", &[&name_of(path)]);
    let basis = c.quadric_through_curve();
    r.push(Check::info("dimension", plural(basis.len(), "quadric", "independent quadrics")));
    for (i, q) in basis.iter().enumerate() {
        let kind = if c.dim() == 3 { format!("{:?}", q.classify()?).to_lowercase() } else { "-".into() };
        r.push(
            Check::info(&format!("quadric {}", i + 1), format!("{q}: {kind}, signature {}", q.signature()))
                .with("coefficients", q.coeffs().iter().map(fmt_rat).collect::<Vec<_>>()),
        );
    }
    Ok(r)
}

pub fn torus_knot_report(degree: usize, m: usize, radii: (Rat, Rat)) -> Result<Report> {
    let c = torus_knot(degree, m, radii.clone())?;
    let mut r = Report::new("torus-knot", &[]);
    r.push(Check::info("parameters", format!("degree {degree}, m {m}, radii ({}, {})", fmt_rat(&radii.0), fmt_rat(&radii.1))));
    r.push(Check::verdict("on_sphere", c.is_on_sphere(), "on-sphere"));
    Ok(with_curve(r, &c, &format!("torus_knot({degree},{m})")))
}

pub fn jacobian(path: &Path) -> Result<Report> {
    let c = load_curve(path)?;
    let mut r = Report::new("jacobian", &[&name_of(path)]);
    let rank = jacobian_rank_default(&c)?;
    r.push(Check::info("rank", rank.to_string()).with("value", rank));
    Ok(r)
}

/// Linking number; curves on the sphere are first projected from a common
/// sphere center off both.
pub fn link(p1: &Path, p2: &Path) -> Result<Report> {
    let (a, b) = (load_curve(p1)?, load_curve(p2)?);
    let mut r = Report::new("link", &[&name_of(p1), &name_of(p2)]);
    let (a, b) = if a.dim() == 3 && b.dim() == 3 {
        (a, b)
    } else {
        let mut found = None;
        for center in sphere_centers().take(24) {
            let frame = ProjectionFrame::new(center)?;
            let (pa, pb) = (project(&a, &frame)?, project(&b, &frame)?);
            if pa.center_multiplicity == 0 && pb.center_multiplicity == 0 {
                r.push(Check::info("sphere_center", frame.center.to_string()));
                found = Some((pa.curve, pb.curve));
                break;
            }
        }
        found.ok_or_else(|| Error::NonGenericCenter("no sphere center off both curves".into()))?
    };
    let lk = linking_number(&a, &b)?;
    r.push(Check::info("linking_number", lk.to_string()).with("value", lk));
    Ok(r)
}

/// A point at infinity with Gaussian rational coordinates, if any.
fn gaussian_point_at_infinity(c: &RationalCurve) -> Result<Option<ProjPoint>> {
    let t = InfinityTrace::of(c)?;
    let x0 = t.x0.to_poly();
    for root in &t.roots {
        if let RootBox::Conjugate { u, .. } = root {
            let p = Param::Complex { poly: x0.squarefree(), u: u.clone() };
            if let Some(z) = p.exact_gauss() {
                return Ok(Some(c.eval_gauss(&crate::forms::GaussRat::one(), &z)));
            }
        }
    }
    Ok(None)
}

/// The retraction moving a non-real point at infinity of the curve onto the
/// standard empty conic.
pub fn retract(path: &Path) -> Result<Report> {
    let c = load_curve(path)?;
    if c.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: c.dim() });
    }
    let mut r = Report::new("retract", &[&name_of(path)]);
    let z = gaussian_point_at_infinity(&c)?
        .ok_or_else(|| Error::Precondition("no non-real point at infinity with Gaussian rational coordinates".into()))?;
    r.push(Check::info("point", z.to_string()));
    let ret = retract_to_conic(&z, &standard_conic())?;
    r.push(Check::info("theta", ret.theta.to_string()));
    let rows: Vec<String> = (0..ret.t1.n())
        .map(|i| (0..ret.t1.n()).map(|j| ret.t1.rows[i][j].to_string()).collect::<Vec<_>>().join(", "))
        .collect();
    r.push(Check::info("transform", format!("[{}]", rows.join("; "))).with("rational", ret.t1.is_rational()));
    let (re, im) = &ret.image;
    // q(re + i im) = q(re) - q(im) + 2i b(re, im) for the identity form
    let dot = |a: &[crate::projgeom::QuadExt], b: &[crate::projgeom::QuadExt]| {
        a.iter().zip(b).fold(crate::projgeom::QuadExt::zero(), |acc, (x, y)| &acc + &(x * y))
    };
    let on = (&dot(re, re) - &dot(im, im)).is_zero() && dot(re, im).is_zero();
    r.push(Check::new("on_conic", if on { Status::Pass } else { Status::Fail }, if on { "image lies on the conic" } else { "image is off the conic" }));
    Ok(r)
}
