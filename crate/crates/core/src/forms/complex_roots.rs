use num_traits::Zero;

use super::sturm::{isolate_real, precision_budget};
use super::certify;
use super::{pow2, ri, round_down, round_up, rq, sgn, CInterval, GaussRat, Interval, Poly, Rat};
use crate::error::{Error, Result};

/// Closed axis-parallel rectangle `[x0, x1] × [y0, y1]` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x0: Rat,
    pub x1: Rat,
    pub y0: Rat,
    pub y1: Rat,
}

impl Rect {
    pub fn new(x0: Rat, x1: Rat, y0: Rat, y1: Rat) -> Self {
        debug_assert!(x0 < x1 && y0 < y1);
        Rect { x0, x1, y0, y1 }
    }

    pub fn width(&self) -> Rat {
        (&self.x1 - &self.x0).max(&self.y1 - &self.y0)
    }

    pub fn center(&self) -> GaussRat {
        let two = ri(2);
        GaussRat::new((&self.x0 + &self.x1) / &two, (&self.y0 + &self.y1) / &two)
    }

    pub fn conj(&self) -> Rect {
        Rect::new(self.x0.clone(), self.x1.clone(), -&self.y1, -&self.y0)
    }

    pub fn contains(&self, z: &GaussRat) -> bool {
        self.x0 <= z.re && z.re <= self.x1 && self.y0 <= z.im && z.im <= self.y1
    }

    pub fn inside(&self, o: &Rect) -> bool {
        o.x0 <= self.x0 && self.x1 <= o.x1 && o.y0 <= self.y0 && self.y1 <= o.y1
    }

    pub fn to_cinterval(&self) -> CInterval {
        CInterval::new(
            Interval::new(self.x0.clone(), self.x1.clone()),
            Interval::new(self.y0.clone(), self.y1.clone()),
        )
    }

    pub fn center_f64(&self) -> (f64, f64) {
        let c = self.center();
        (super::rat_to_f64(&c.re), super::rat_to_f64(&c.im))
    }
}

/// Real and imaginary parts of `p(a + h*tau)` as polynomials in `tau`.
fn restrict_to_segment(p: &Poly, a: &GaussRat, h: &GaussRat) -> (Poly, Poly) {
    let lin_re = Poly::new(vec![a.re.clone(), h.re.clone()]);
    let lin_im = Poly::new(vec![a.im.clone(), h.im.clone()]);
    let (mut u, mut v) = (Poly::zero(), Poly::zero());
    for c in p.coeffs().iter().rev() {
        let nu = &(&u * &lin_re) - &(&v * &lin_im);
        let nv = &(&u * &lin_im) + &(&v * &lin_re);
        u = &nu + &Poly::constant(c.clone());
        v = nv;
    }
    (u, v)
}

/// Cauchy index of `v/u` over `[0, 1]`, or `None` when `u` vanishes at an
/// endpoint or `u`, `v` share a zero in `[0, 1]`.
fn cauchy_index(u: &Poly, v: &Poly) -> Option<i64> {
    let zero = Rat::zero();
    let one = ri(1);
    if u.eval(&zero).is_zero() || u.eval(&one).is_zero() {
        return None;
    }
    if v.is_zero() {
        return Some(0);
    }
    let g = Poly::gcd(u, v);
    if g.deg() > 0 {
        if g.eval(&zero).is_zero() || g.eval(&one).is_zero() {
            return None;
        }
        if super::real_root_count_in(&g, &zero, &one) > 0 {
            return None;
        }
    }
    let mut seq = vec![u.primitive_part(), v.primitive_part()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive_part());
    }
    let var = |x: &Rat| {
        let mut last = 0;
        let mut c = 0i64;
        for q in &seq {
            let s = sgn(&q.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    c += 1;
                }
                last = s;
            }
        }
        c
    };
    Some(var(&zero) - var(&one))
}

/// Number of roots of `p` (with multiplicity) inside `rect`, or `None` when a
/// root lies on the boundary or a corner is degenerate for the count.
pub fn count_in_rect(p: &Poly, rect: &Rect) -> Option<usize> {
    let corners = [
        GaussRat::new(rect.x0.clone(), rect.y0.clone()),
        GaussRat::new(rect.x1.clone(), rect.y0.clone()),
        GaussRat::new(rect.x1.clone(), rect.y1.clone()),
        GaussRat::new(rect.x0.clone(), rect.y1.clone()),
    ];
    let mut total = 0i64;
    for k in 0..4 {
        let a = &corners[k];
        let h = &corners[(k + 1) % 4] - a;
        let (u, v) = restrict_to_segment(p, a, &h);
        total += cauchy_index(&u, &v)?;
    }
    debug_assert!(total <= 0 && total % 2 == 0);
    Some((-total / 2) as usize)
}

/// Like `count_in_rect`, nudging the rectangle outward by tiny dyadic
/// amounts until the count is well defined. The returned rectangle is the
/// one actually counted.
fn count_nudged(p: &Poly, rect: &Rect, scale: &Rat) -> (Rect, usize) {
    let mut r = rect.clone();
    for k in 1.. {
        if let Some(n) = count_in_rect(p, &r) {
            return (r, n);
        }
        let e = scale * rq(k, 1 << 12) * rq(1, 3);
        r = Rect::new(&rect.x0 - &e, &rect.x1 + &e * rq(5, 7), &rect.y0 - &e * rq(3, 5), &rect.y1 + &e * rq(2, 3));
    }
    unreachable!()
}

/// Split point for `[a, b]` near the middle.
fn splitter(a: &Rat, b: &Rat, attempt: i64) -> Rat {
    let w = b - a;
    let off = [0i64, 1, -1, 2, -2, 3, -3, 5, -5][(attempt as usize) % 9];
    a + &w * rq(32 + off, 64)
}

/// Four sub-rectangles of `r` each with a well-defined root count.
fn quad_split(p: &Poly, r: &Rect) -> Vec<(Rect, usize)> {
    for attempt in 0..64 {
        let mx = splitter(&r.x0, &r.x1, attempt);
        let my = splitter(&r.y0, &r.y1, attempt * 7 + 3);
        let subs = [
            Rect::new(r.x0.clone(), mx.clone(), r.y0.clone(), my.clone()),
            Rect::new(mx.clone(), r.x1.clone(), r.y0.clone(), my.clone()),
            Rect::new(r.x0.clone(), mx.clone(), my.clone(), r.y1.clone()),
            Rect::new(mx, r.x1.clone(), my, r.y1.clone()),
        ];
        let counts: Option<Vec<usize>> = subs.iter().map(|s| count_in_rect(p, s)).collect();
        if let Some(c) = counts {
            return subs.into_iter().zip(c).collect();
        }
    }
    unreachable!("no admissible split point")
}

/// Isolating intervals for the real roots, sorted, together with
/// [`isolate_complex`] for the non-real ones.
pub fn isolate_roots(p: &Poly) -> (Vec<Interval>, Vec<Rect>) {
    let q = p.squarefree();
    if q.deg() >= 2 {
        if let Some((real, mut upper)) = certify::certified_roots(&q) {
            let mut ivs: Vec<Interval> = real
                .into_iter()
                .map(|s| {
                    if q.eval(&s.x0).is_zero() {
                        Interval::point(s.x0)
                    } else if q.eval(&s.x1).is_zero() {
                        Interval::point(s.x1)
                    } else {
                        Interval::new(s.x0, s.x1)
                    }
                })
                .collect();
            ivs.sort_by(|a, b| a.lo.cmp(&b.lo));
            upper.sort_by(|a, b| (&a.x0, &a.y0).cmp(&(&b.x0, &b.y0)));
            return (ivs, upper);
        }
    }
    (isolate_real(&q), isolate_complex(&q))
}

/// Isolating rectangles for the non-real roots of `p` in the open upper
/// half-plane. Conjugate roots are implied. Each rectangle contains exactly
/// one root of the squarefree part of `p` and lies strictly above the real
/// axis.
pub fn isolate_complex(p: &Poly) -> Vec<Rect> {
    let q = p.squarefree();
    let n = q.deg();
    if n < 2 {
        return Vec::new();
    }
    let real = isolate_real(&q).len();
    let want = (n - real) / 2;
    if want == 0 {
        return Vec::new();
    }
    if let Some((_, mut upper)) = certify::certified_roots(&q) {
        if upper.len() == want {
            upper.sort_by(|a, b| (&a.x0, &a.y0).cmp(&(&b.x0, &b.y0)));
            return upper;
        }
    }
    let b = q.root_bound();
    let mut h = rq(1, 2).min(b.clone() / ri(4));
    let (mut top, mut c) = count_nudged(&q, &Rect::new(-&b, b.clone(), h.clone(), b.clone()), &h);
    while c < want {
        h /= ri(4);
        let r = count_nudged(&q, &Rect::new(-&b, b.clone(), h.clone(), b.clone()), &h);
        top = r.0;
        c = r.1;
    }
    let mut out = Vec::new();
    let mut stack = vec![(top, c)];
    while let Some((r, c)) = stack.pop() {
        match c {
            0 => {}
            1 => out.push(r),
            _ => stack.extend(quad_split(&q, &r)),
        }
    }
    out.sort_by(|a, b| (&a.x0, &a.y0).cmp(&(&b.x0, &b.y0)));
    out
}

/// Shrinks an isolating rectangle of a simple root of `p` until its width is
/// at most `2^-bits`. Uses Newton steps with a certified count, falling back
/// to quadrisection.
pub fn refine_complex(p: &Poly, rect: &Rect, bits: u32) -> Result<Rect> {
    let q = p.squarefree();
    let dq = q.derivative();
    let target = pow2(-(bits as i64));
    if rect.width() <= target {
        return Ok(rect.clone());
    }
    if let Some(s) = certify::refine_square(&q, rect, bits) {
        return Ok(s);
    }
    let mut r = rect.clone();
    let mut rounds = 0;
    while r.width() > target {
        rounds += 1;
        if rounds > 8 * precision_budget() {
            return Err(Error::PrecisionExhausted);
        }
        if let Some(nr) = newton_box(&q, &dq, &r, bits) {
            r = nr;
            continue;
        }
        r = quad_split(&q, &r)
            .into_iter()
            .find(|(_, c)| *c == 1)
            .map(|(s, _)| s)
            .ok_or_else(|| Error::Internal("lost root during refinement".into()))?;
    }
    Ok(r)
}

/// Attempts a jump to a much smaller box around the root via Newton
/// iteration from the box center, accepted only when certified.
fn newton_box(q: &Poly, dq: &Poly, r: &Rect, bits: u32) -> Option<Rect> {
    let w = r.width();
    let wb = w.numer().bits() as i64 - w.denom().bits() as i64;
    let goal = (-(bits as i64)).max(wb - 40);
    let work_bits = (-(goal) + 16).max(16) as u32;
    let mut z = r.center();
    for _ in 0..8 {
        let f = q.eval_gauss(&z);
        let d = dq.eval_gauss(&z);
        let dinv = d.inv()?;
        let step = &f * &dinv;
        z = &z - &step;
        z = GaussRat::new(round_down(&z.re, work_bits), round_down(&z.im, work_bits));
        if !r.contains(&z) {
            return None;
        }
        let sn = step.norm();
        if sn.is_zero() || sn < pow2(2 * (goal - 4)) {
            break;
        }
    }
    let e = pow2(goal - 1);
    let nr = Rect::new(
        round_down(&(&z.re - &e), work_bits),
        round_up(&(&z.re + &e), work_bits),
        round_down(&(&z.im - &e), work_bits),
        round_up(&(&z.im + &e), work_bits),
    );
    if !nr.inside(r) || nr.width() >= w {
        return None;
    }
    (count_in_rect(q, &nr)? == 1).then_some(nr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_unit_root() {
        let p = Poly::from_ints(&[1, 0, 1]);
        let r = Rect::new(ri(-1), ri(1), rq(1, 2), ri(2));
        assert_eq!(count_in_rect(&p, &r), Some(1));
        let r = Rect::new(ri(-1), ri(1), ri(-2), ri(2));
        assert_eq!(count_in_rect(&p, &r), Some(2));
        // root on the edge
        let r = Rect::new(ri(-1), ri(1), ri(1), ri(2));
        assert_eq!(count_in_rect(&p, &r), None);
    }

    #[test]
    fn isolates_and_refines() {
        // (x^2+1)(x^2+4)(x-3)
        let p = &(&Poly::from_ints(&[1, 0, 1]) * &Poly::from_ints(&[4, 0, 1])) * &Poly::from_ints(&[-3, 1]);
        let boxes = isolate_complex(&p);
        assert_eq!(boxes.len(), 2);
        for b in &boxes {
            assert!(b.y0 > Rat::zero());
            let r = refine_complex(&p, b, 40).unwrap();
            let c = r.center();
            assert!((super::super::rat_to_f64(&c.re)).abs() < 1e-9);
            let im = super::super::rat_to_f64(&c.im);
            assert!((im - 1.0).abs() < 1e-9 || (im - 2.0).abs() < 1e-9);
        }
    }
}
