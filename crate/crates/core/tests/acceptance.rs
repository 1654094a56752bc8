//! Acceptance checks, one line per criterion.
//!
//! Run with `cargo test --test acceptance`. The process fails when any
//! criterion fails, except those listed in `KNOWN_RED`, which still print
//! `FAIL`.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use realknot::cli::{load_curve, AmbientTag, CurveFile};
use realknot::curve::{bidegree_split, jacobian_rank_default, torus_knot_default, Ambient, DoublePointKind, RationalCurve};
use realknot::forms::{augmented_sylvester_det, resultant, BinaryForm, GaussRat, Rat};
use realknot::projgeom::{mirror, quadric_through_set, ProjPoint, QuadricKind, QuadraticForm};
use realknot::sphere::{
    is_circle_image, join_search, lift, project, proportional, standard_conic, trace_is_union, InfinityTrace,
    LiftContract, ProjectionFrame,
};
use realknot::writhe::{encomplexed_writhe, generic_sphere_frames, linking_number, writhes_at_centers};

/// Criteria that cannot be met. Degree-4 sphere knots project to quartics
/// with three double points, so their writhe is odd and never 2.
const KNOWN_RED: &[usize] = &[2];

type Outcome = Result<String, String>;

fn ri(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn rq(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus() -> Vec<(String, RationalCurve)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "curve"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let c = load_curve(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, c)
        })
        .collect()
}

fn corpus_curve(name: &str) -> RationalCurve {
    load_curve(&corpus_dir().join(format!("{name}.curve"))).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn within(start: Instant, budget: Duration) -> Result<String, String> {
    let e = start.elapsed();
    if e <= budget {
        Ok(format!("{:.2} s", e.as_secs_f64()))
    } else {
        Err(format!("took {:.2} s, budget {} s", e.as_secs_f64(), budget.as_secs()))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: realknot::Error) -> String {
    e.to_string()
}

/// Generates a torus knot through the command layer and parses it back.
fn torus_from_cli(d: usize, m: usize) -> Result<RationalCurve, String> {
    let r = realknot::cli::torus_knot_report(d, m, (rq(3, 5), rq(4, 5))).map_err(err)?;
    let text = r.curve.ok_or("torus-knot produced no curve")?;
    let file = CurveFile::parse(&text).map_err(err)?;
    ensure(file.ambient == AmbientTag::P4 && file.sphere_claim, || "torus knot not marked on-sphere".into())?;
    file.to_curve().map_err(err)
}

fn verified(c: &RationalCurve, name: &str) -> Result<(), String> {
    let v = realknot::cli::verify_curve(c, name).map_err(err)?;
    ensure(v.passed(), || format!("{name} does not verify: {}", v.to_text().replace('\n', "; ")))
}

fn cli_writhe(c: &RationalCurve, name: &str) -> Result<i64, String> {
    let r = realknot::cli::writhe_curve(c, name).map_err(err)?;
    let w = r.check("writhe").ok_or("no writhe")?;
    ensure(r.passed(), || format!("{name}: diagrams disagree"))?;
    w.certificates["value"].as_i64().ok_or_else(|| "writhe is not an integer".into())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let c = torus_from_cli(2, 1)?;
    ensure(c.degree() == 2 && c.is_on_sphere(), || "not an on-sphere conic".into())?;
    verified(&c, "torus_knot(2,1)")?;
    let w = cli_writhe(&c, "torus_knot(2,1)")?;
    ensure(w == 0, || format!("writhe {w}"))?;
    Ok(format!("nonsingular, on-sphere, writhe 0, {}", within(start, Duration::from_secs(1))?))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let c = torus_from_cli(4, 1)?;
    verified(&c, "torus_knot(4,1)")?;
    let w = cli_writhe(&c, "torus_knot(4,1)")?;
    let m = c.apply_transform(&mirror()).map_err(err)?;
    let wm = encomplexed_writhe(&m).map_err(err)?;
    ensure(wm == -w, || format!("writhe {w} but mirror {wm}"))?;
    ensure(w.abs() == 2, || format!("writhe {w}, mirror {wm}; expected |w| = 2"))?;
    Ok(format!("nonsingular, writhe {w}, mirror {wm}, {}", within(start, Duration::from_secs(10))?))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let tre = torus_from_cli(6, 2)?;
    verified(&tre, "torus_knot(6,2)")?;
    let w = cli_writhe(&tre, "torus_knot(6,2)")?;
    ensure(w.abs() == 4, || format!("(6,2) writhe {w}"))?;
    let other = torus_from_cli(6, 1)?;
    let w1 = cli_writhe(&other, "torus_knot(6,1)")?;
    ensure([0, 2, -2].contains(&w1), || format!("(6,1) writhe {w1}"))?;
    Ok(format!("(6,2) nonsingular with writhe {w}, (6,1) writhe {w1}, {}", within(start, Duration::from_secs(60))?))
}

/// Writhes of three distinct diagrams. A sphere knot is projected from
/// three sphere centers; a knot in RP3 from three centers in RP3.
fn three_writhes(c: &RationalCurve) -> Result<Vec<i64>, String> {
    if c.dim() == 3 {
        return Ok(writhes_at_centers(c, 3).map_err(err)?.into_iter().map(|(_, w)| w).collect());
    }
    let mut out = Vec::new();
    for frame in generic_sphere_frames(c, 3).map_err(err)? {
        let p = project(c, &frame).map_err(err)?;
        out.push(writhes_at_centers(&p.curve, 1).map_err(err)?[0].1);
    }
    Ok(out)
}

fn criterion_4() -> Outcome {
    let mut knots = 0;
    for (name, c) in corpus() {
        if c.dim() == 4 && !c.is_on_sphere() {
            continue;
        }
        if !c.is_nonsingular_knot().map_err(err)?.is_nonsingular() {
            continue;
        }
        let w = three_writhes(&c)?;
        ensure(w.iter().all(|x| *x == w[0]), || format!("{name}: writhes {w:?}"))?;
        knots += 1;
    }
    ensure(knots >= 5, || format!("only {knots} corpus knots"))?;
    Ok(format!("{knots} corpus knots, three centers each, all agree"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for i in 1..=4 {
        let name = format!("wall_{i}");
        let dps = corpus_curve(&name).is_nonsingular_knot().map_err(err)?;
        ensure(dps.cusps.is_empty() && dps.double_points.len() == 1, || format!("{name}: {} double points", dps.double_points.len()))?;
        let k = dps.double_points[0].kind;
        ensure(k == DoublePointKind::RealCrossing, || format!("{name}: {k}"))?;
    }
    let dps = corpus_curve("wall_solitary").is_nonsingular_knot().map_err(err)?;
    ensure(dps.cusps.is_empty() && dps.double_points.len() == 1, || "fifth wall: not one double point".into())?;
    let p = &dps.double_points[0];
    ensure(p.kind == DoublePointKind::Solitary, || format!("fifth wall: {}", p.kind))?;
    let mut params: Vec<GaussRat> = p.params.iter().map(|q| q.exact_gauss().ok_or("inexact parameter")).collect::<Result<_, _>>()?;
    params.sort_by(|a, b| a.im.cmp(&b.im));
    let i = GaussRat::new(Rat::zero(), Rat::one());
    ensure(params == vec![i.conj(), i], || format!("fifth wall parameters {params:?}"))?;
    let image = p.image.as_ref().ok_or("no exact image")?;
    ensure(*image == ProjPoint::from_ints(&[0, 0, 0, 1]), || format!("fifth wall image {image}"))?;
    Ok(format!("four real crossings, solitary [1:±i] -> [0:0:0:1], {}", within(start, Duration::from_secs(30))?))
}

fn random_form(rng: &mut ChaCha8Rng, d: usize, range: i64) -> BinaryForm {
    let c: Vec<i64> = (0..=d).map(|_| rng.random_range(-range..=range)).collect();
    BinaryForm::from_ints(&c)
}

fn criterion_6() -> Outcome {
    let class4 = corpus_curve("class4");
    ensure(class4.on_quadric(&QuadraticForm::segre()).map_err(err)?, || "class4 is off x0 x3 = x1 x2".into())?;
    let k = class4.forms();
    ensure(k[0].mul(&k[3]) == k[1].mul(&k[2]), || "x0 x3 != x1 x2".into())?;
    let split = bidegree_split(&class4).map_err(err)?;
    ensure(split.complex_bidegree == (1, 3), || format!("class4 bidegree {:?}", split.complex_bidegree))?;

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut tried, mut singular22) = (0, 0);
    while tried < 100 {
        let a = rng.random_range(1..=3usize);
        let (q0, q1) = (random_form(&mut rng, a, 4), random_form(&mut rng, a, 4));
        let (q2, q3) = (random_form(&mut rng, 4 - a, 4), random_form(&mut rng, 4 - a, 4));
        let forms = vec![q0.mul(&q2), q0.mul(&q3), q1.mul(&q2), q1.mul(&q3)];
        let Ok(c) = RationalCurve::new(forms, Ambient::Rp3) else { continue };
        if c.degree() != 4 {
            continue;
        }
        tried += 1;
        ensure(c.on_quadric(&QuadraticForm::segre()).map_err(err)?, || "built curve is off the quadric".into())?;
        let s = bidegree_split(&c).map_err(err)?;
        let (p, q) = s.complex_bidegree;
        ensure(p + q == 4 && (p == a || q == a), || format!("bidegree ({p},{q}) for a factor of degree {a}"))?;
        if (p, q) == (2, 2) {
            let cert = c.is_nonsingular_knot().map_err(err)?;
            ensure(!cert.is_nonsingular(), || format!("nonsingular (2,2) curve {:?}", c.forms()))?;
            singular22 += 1;
        }
    }
    Ok(format!("class4 splits (1,3) on x0 x3 = x1 x2; 100 random curves, {singular22} of type (2,2), all singular"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let d = rng.random_range(1..=5usize);
        let k = rng.random_range(0..=4usize);
        let (p0, p1) = (random_form(&mut rng, d, 9), random_form(&mut rng, d, 9));
        let det = augmented_sylvester_det(&p0, &p1, k).map_err(err)?;
        let mut rhs = resultant(&p0, &p1);
        for _ in 0..=k {
            rhs = rhs * p1.coeff(d);
        }
        ensure(det == rhs || det == -rhs.clone(), || format!("p0 {p0}, p1 {p1}, k {k}: {det} vs {rhs}"))?;
    }
    Ok(format!("200 instances, {}", within(start, Duration::from_secs(30))?))
}

fn criterion_8() -> Outcome {
    let mut ranks = Vec::new();
    for m in [1, 2] {
        let c = torus_knot_default(6, m).map_err(err)?;
        let r = jacobian_rank_default(&c).map_err(err)?;
        ensure(r == 13, || format!("(6,{m}) rank {r}"))?;
        ranks.push(r);
    }
    Ok(format!("ranks {ranks:?}"))
}

/// The lift contract matching the number of points at infinity off the
/// empty conic.
fn contract_for(t: &InfinityTrace) -> Option<LiftContract> {
    match t.total - t.on_conic {
        0 => Some(LiftContract::Preserving),
        1 => Some(LiftContract::ThroughCenter),
        2 => Some(LiftContract::AtDoublePoint),
        _ => None,
    }
}

fn criterion_9() -> Outcome {
    ensure(standard_conic().signature().is_definite(), || "empty conic is not definite".into())?;
    let (mut on_sphere, mut lifted, mut skipped) = (0, 0, Vec::new());
    for (name, c) in corpus() {
        if c.dim() == 4 {
            let frame = generic_sphere_frames(&c, 1).map_err(err)?.remove(0);
            let p = project(&c, &frame).map_err(err)?;
            ensure(p.trace.all_on_conic(), || format!("{name}: projected trace off the conic"))?;
            let back = lift(&p.curve, &frame, LiftContract::Preserving).map_err(err)?;
            ensure(proportional(back.forms(), c.forms()), || format!("{name}: lift of projection differs"))?;
            on_sphere += 1;
        } else {
            let trace = InfinityTrace::of(&c).map_err(err)?;
            let Some(contract) = contract_for(&trace) else {
                skipped.push(name);
                continue;
            };
            let frame = ProjectionFrame::north();
            let up = lift(&c, &frame, contract).map_err(err)?;
            let down = project(&up, &frame).map_err(err)?;
            ensure(proportional(down.curve.forms(), c.forms()), || format!("{name}: projection of lift differs"))?;
            lifted += 1;
        }
    }
    let rest = if skipped.is_empty() {
        String::new()
    } else {
        format!("; {} with more than two points off the conic: {}", skipped.len(), skipped.join(", "))
    };
    Ok(format!("{on_sphere} sphere curves, {lifted} RP3 curves round trip{rest}"))
}

type V3 = [Rat; 3];

fn dot(a: &V3, b: &V3) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &V3, b: &V3) -> V3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn combo(a: &V3, x: &Rat, b: &V3, y: &Rat) -> V3 {
    [&a[0] * x + &b[0] * y, &a[1] * x + &b[1] * y, &a[2] * x + &b[2] * y]
}

/// Rows of the rotation matrix of the quaternion `q`, which are orthogonal
/// and of equal length.
fn rotation(q: [i64; 4]) -> [V3; 3] {
    let [a, b, c, d] = q;
    let n = a * a + b * b + c * c + d * d;
    let m = [
        [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
        [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
        [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
    ];
    m.map(|row| row.map(|x| rq(x, n)))
}

/// The conic `center + cos e1 + sin e2` on the parametrization
/// `(s^2 - t^2, 2st) / (s^2 + t^2)`.
fn ellipse(center: &V3, e1: &V3, e2: &V3) -> Result<RationalCurve, String> {
    let mut forms = vec![BinaryForm::from_ints(&[1, 0, 1])];
    for i in 0..3 {
        forms.push(BinaryForm::new(vec![&center[i] + &e1[i], &e2[i] * ri(2), &center[i] - &e1[i]]));
    }
    RationalCurve::new(forms, Ambient::Rp3).map_err(err)
}

fn random_v3(rng: &mut ChaCha8Rng, range: i64) -> V3 {
    [0; 3].map(|_| rq(rng.random_range(-range..=range), rng.random_range(1..=4)))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut q = || -> [i64; 4] {
        loop {
            let q = [0; 4].map(|_| rng.random_range(-5..=5i64));
            if q.iter().any(|x| *x != 0) {
                return q;
            }
        }
    };
    let mut frames = Vec::new();
    for _ in 0..100 {
        frames.push(rotation(q()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (i, rows) in frames.iter().enumerate() {
        let center = random_v3(&mut rng, 6);
        let r = rq(rng.random_range(1..=9), rng.random_range(1..=5));
        let e1 = rows[0].clone().map(|x| x * &r);
        let mut e2 = rows[1].clone().map(|x| x * &r);
        let circle = i < 50;
        if !circle {
            if i % 2 == 0 {
                // unequal axes
                let mut f = rq(rng.random_range(1..=9), rng.random_range(1..=9));
                if f == Rat::one() {
                    f = rq(3, 2);
                }
                e2 = e2.map(|x| x * &f);
            } else {
                // sheared axes
                let lean = rq(rng.random_range(1..=5), 7);
                e2 = combo(&e2, &Rat::one(), &e1, &lean);
            }
        }
        let c = ellipse(&center, &e1, &e2)?;
        let got = is_circle_image(&c).map_err(err)?;
        ensure(got == circle, || format!("sample {i}: expected {circle}, got {got}"))?;
    }
    Ok("50 circles accepted, 50 ellipses rejected".into())
}

fn criterion_11() -> Outcome {
    let r3 = |a: [i64; 3]| a.map(ri);
    let pairs = [
        ("join_a + join_b", corpus_curve("join_a"), corpus_curve("join_b")),
        (
            "tilted pair",
            ellipse(&r3([0, 0, 0]), &r3([1, 0, 0]), &r3([0, 1, 0]))?,
            ellipse(&r3([1, 0, 1]), &r3([0, 0, 1]), &r3([1, 0, 0]))?,
        ),
    ];
    let floor = Rat::new(1.into(), (1i64 << 20).into());
    let mut found = Vec::new();
    for (name, a, b) in &pairs {
        let j = join_search(a, b, &Rat::one()).map_err(err)?;
        ensure(j.epsilon >= floor, || format!("{name}: epsilon {} beyond 20 halvings", j.epsilon))?;
        ensure(j.curve.degree() == 4, || format!("{name}: degree {}", j.curve.degree()))?;
        let cert = j.curve.is_nonsingular_knot().map_err(err)?;
        ensure(cert.is_nonsingular(), || format!("{name}: joined curve is singular"))?;
        ensure(trace_is_union(&j.curve, &[a, b]).map_err(err)?, || format!("{name}: trace is not the union"))?;
        let t = InfinityTrace::of(&j.curve).map_err(err)?;
        ensure(t.all_on_conic() && t.total == 4, || format!("{name}: {} of {} points on the conic", t.on_conic, t.total))?;
        found.push(format!("{name} at epsilon {}", j.epsilon));
    }
    Ok(format!("nonsingular quartics: {}", found.join(", ")))
}

/// Center of the circle through three points.
fn circumcenter(a: &V3, b: &V3, c: &V3) -> Option<V3> {
    let (u, v) = (sub(b, a), sub(c, a));
    let m = realknot::linalg::Matrix::from_rows(vec![
        vec![dot(&u, &u), dot(&u, &v)],
        vec![dot(&u, &v), dot(&v, &v)],
    ]);
    let half = rq(1, 2);
    let x = m.solve(&[dot(&u, &u) * &half, dot(&v, &v) * &half])?;
    let off = combo(&u, &x[0], &v, &x[1]);
    Some([&a[0] + &off[0], &a[1] + &off[1], &a[2] + &off[2]])
}

/// Six distinct points of the circle through `a`, `b`, `c`: the second
/// intersections of lines through `a` in the plane of the circle.
fn circle_points(a: &V3, b: &V3, c: &V3) -> Option<Vec<V3>> {
    let center = circumcenter(a, b, c)?;
    let (u, v) = (sub(b, a), sub(c, a));
    let to_center = sub(&center, a);
    let mut out: Vec<V3> = vec![a.clone(), b.clone()];
    for (m, n) in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (3, -1), (1, 3)] {
        if out.len() == 6 {
            break;
        }
        let d = combo(&u, &ri(m), &v, &ri(n));
        let f = dot(&to_center, &d) * ri(2) / dot(&d, &d);
        let p = combo(a, &Rat::one(), &d, &f);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    (out.len() == 6).then_some(out)
}

fn affine(p: &V3) -> ProjPoint {
    ProjPoint::real(vec![Rat::one(), p[0].clone(), p[1].clone(), p[2].clone()]).expect("nonzero")
}

/// A member of the span whose quadratic part is a multiple of
/// `x1^2 + x2^2 + x3^2`, if any.
fn round_member(basis: &[QuadraticForm]) -> Option<QuadraticForm> {
    let eqs: Vec<Vec<Rat>> = [(1, 2), (1, 3), (2, 3)]
        .iter()
        .map(|&(i, j)| basis.iter().map(|q| q.matrix()[(i, j)].clone()).collect())
        .chain([(2, 2), (3, 3)].iter().map(|&(i, _)| basis.iter().map(|q| &q.matrix()[(1, 1)] - &q.matrix()[(i, i)]).collect()))
        .collect();
    for lam in realknot::linalg::Matrix::from_rows(eqs).nullspace() {
        let mut m = realknot::linalg::Matrix::zeros(4, 4);
        for (q, l) in basis.iter().zip(&lam) {
            for i in 0..4 {
                for j in 0..4 {
                    m[(i, j)] = &m[(i, j)] + &q.matrix()[(i, j)] * l;
                }
            }
        }
        if !m[(1, 1)].is_zero() {
            return QuadraticForm::new(m).ok();
        }
    }
    None
}

fn criterion_12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut done = 0;
    while done < 20 {
        let (a, b, p, q) = (random_v3(&mut rng, 5), random_v3(&mut rng, 5), random_v3(&mut rng, 5), random_v3(&mut rng, 5));
        let (Some(c1), Some(c2)) = (circle_points(&a, &b, &p), circle_points(&a, &b, &q)) else { continue };
        let normal = |x: &V3| {
            let (u, v) = (sub(&b, &a), sub(x, &a));
            [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
        };
        if dot(&normal(&p), &sub(&q, &a)).is_zero() {
            continue;
        }
        let mut pts: Vec<ProjPoint> = c1.iter().map(affine).collect();
        pts.extend(c2.iter().skip(2).map(affine));
        let basis = quadric_through_set(&pts).map_err(err)?;
        let s = round_member(&basis).ok_or_else(|| format!("pair {done}: no round quadric among {} forms", basis.len()))?;
        let kind = s.classify().map_err(err)?;
        ensure(kind == QuadricKind::Sphere, || format!("pair {done}: round member is {kind:?}"))?;
        ensure(pts.iter().all(|x| s.contains(x)), || format!("pair {done}: sphere misses a point"))?;
        done += 1;
    }
    Ok("20 pairs, each on a sphere".into())
}

fn sphere_pair(a: &RationalCurve, b: &RationalCurve) -> Result<(RationalCurve, RationalCurve), String> {
    for frame in generic_sphere_frames(a, 8).map_err(err)? {
        let (pa, pb) = (project(a, &frame).map_err(err)?, project(b, &frame).map_err(err)?);
        if pb.center_multiplicity == 0 {
            return Ok((pa.curve, pb.curve));
        }
    }
    Err("no sphere center off both curves".into())
}

fn criterion_13() -> Outcome {
    let (ha, hb) = sphere_pair(&corpus_curve("hopf_a"), &corpus_curve("hopf_b"))?;
    let hopf = linking_number(&ha, &hb).map_err(err)?;
    ensure(hopf.abs() == 1, || format!("Hopf pair links {hopf}"))?;
    let r3 = |a: [i64; 3]| a.map(ri);
    let ring_a = ellipse(&r3([0, 0, 0]), &r3([2, 0, 0]), &r3([0, 2, 0]))?;
    let ring_b = ellipse(&r3([2, 0, 0]), &r3([2, 0, 0]), &r3([0, 0, 2]))?;
    let chain = linking_number(&ring_a, &ring_b).map_err(err)?;
    ensure(chain.abs() == 1, || format!("chained circles link {chain}"))?;
    let far = linking_number(&corpus_curve("join_a"), &corpus_curve("far_b")).map_err(err)?;
    ensure(far == 0, || format!("separated pair links {far}"))?;
    Ok(format!("Hopf pair {hopf}, chained circles {chain}, separated pair {far}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("degree 2 writhe", criterion_1),
        ("degree 4 writhe and mirror", criterion_2),
        ("degree 6 writhes", criterion_3),
        ("projection independence", criterion_4),
        ("walls", criterion_5),
        ("bidegree", criterion_6),
        ("Sylvester identity", criterion_7),
        ("Jacobian rank", criterion_8),
        ("stereographic round trip", criterion_9),
        ("circle images", criterion_10),
        ("join", criterion_11),
        ("circles on a sphere", criterion_12),
        ("linking", criterion_13),
    ];
    let mut unexpected = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let n = k + 1;
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("PASS {n:>2} {name}: {msg}"),
            Err(msg) => {
                let known = KNOWN_RED.contains(&n);
                if !known {
                    unexpected += 1;
                }
                println!("FAIL {n:>2} {name}: {msg}{}", if known { " [known]" } else { "" });
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
