//! Numerical root approximations turned into certified isolating squares.
//!
//! For any `z`, a polynomial of degree `n` has a root within
//! `n |p(z) / p'(z)|` of `z`. When `n` such disks are pairwise disjoint each
//! holds exactly one root.

use num_traits::{Signed, Zero};

use super::{pow2, rat_to_f64, round_down, GaussRat, Poly, Rat, Rect};

#[derive(Clone, Copy, Debug, PartialEq)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn add(self, o: C64) -> C64 {
        C64 { re: self.re + o.re, im: self.im + o.im }
    }
    fn sub(self, o: C64) -> C64 {
        C64 { re: self.re - o.re, im: self.im - o.im }
    }
    fn mul(self, o: C64) -> C64 {
        C64 { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64 { re: (self.re * o.re + self.im * o.im) / d, im: (self.im * o.re - self.re * o.im) / d }
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// All complex roots by the Aberth iteration in double precision.
fn aberth(p: &Poly) -> Option<Vec<C64>> {
    let n = p.deg();
    let lc = rat_to_f64(&p.lc());
    let c: Vec<f64> = p.coeffs().iter().map(|x| rat_to_f64(x) / lc).collect();
    if c.iter().any(|x| !x.is_finite()) {
        return None;
    }
    let eval = |z: C64| -> (C64, C64) {
        let mut v = C64 { re: 0.0, im: 0.0 };
        let mut d = C64 { re: 0.0, im: 0.0 };
        for &a in c.iter().rev() {
            d = d.mul(z).add(v);
            v = v.mul(z).add(C64 { re: a, im: 0.0 });
        }
        (v, d)
    };
    let radius = c[..n].iter().enumerate().map(|(k, a)| (a.abs()).powf(1.0 / (n - k) as f64)).fold(0.0, f64::max) * 2.0;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            C64 { re: radius * a.cos(), im: radius * a.sin() }
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.abs() == 0.0 {
                continue;
            }
            let ratio = v.div(d);
            let mut s = C64 { re: 0.0, im: 0.0 };
            for j in 0..n {
                if j != i {
                    s = s.add(C64 { re: 1.0, im: 0.0 }.div(z[i].sub(z[j])));
                }
            }
            let w = ratio.div(C64 { re: 1.0, im: 0.0 }.sub(ratio.mul(s)));
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[i] = z[i].sub(w);
            moved = moved.max(w.abs() / (1.0 + z[i].abs()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    Some(z)
}

fn to_gauss(z: C64) -> GaussRat {
    let r = |x: f64| Rat::from_float(x).unwrap_or_else(Rat::zero);
    GaussRat::new(r(z.re), r(z.im))
}

fn round_gauss(z: &GaussRat, bits: u32) -> GaussRat {
    GaussRat::new(round_down(&z.re, bits), round_down(&z.im, bits))
}

/// Dyadic upper bound for the square root of a nonnegative rational.
fn sqrt_up(x: &Rat) -> Rat {
    if x.is_zero() {
        return Rat::zero();
    }
    let f = rat_to_f64(x).sqrt() * (1.0 + 1e-12);
    let mut r = match Rat::from_float(f) {
        Some(r) if f > 0.0 && f.is_finite() => r,
        _ => pow2((x.numer().bits() as i64 - x.denom().bits() as i64 + 2) / 2 + 1),
    };
    while &(&r * &r) < x {
        r = &r * Rat::from_integer(2.into());
    }
    r
}

/// Radius bound `n |q(z)/q'(z)|` as a dyadic upper bound, `None` where `q'`
/// vanishes.
fn inclusion_radius(q: &Poly, dq: &Poly, z: &GaussRat) -> Option<Rat> {
    let n = Rat::from_integer((q.deg() as i64).into());
    let d = dq.eval_gauss(z).norm();
    if d.is_zero() {
        return None;
    }
    let r2 = q.eval_gauss(z).norm() / d * &n * &n;
    Some(sqrt_up(&r2))
}

/// Newton steps in exact arithmetic, rounded to `bits`.
fn polish(q: &Poly, dq: &Poly, z: &GaussRat, bits: u32, steps: usize) -> GaussRat {
    let mut z = z.clone();
    for _ in 0..steps {
        let d = dq.eval_gauss(&z);
        let Some(inv) = d.inv() else { break };
        let step = &q.eval_gauss(&z) * &inv;
        if step.is_zero() {
            break;
        }
        z = round_gauss(&(&z - &step), bits);
    }
    z
}

fn square(z: &GaussRat, r: &Rat) -> Rect {
    Rect::new(&z.re - r, &z.re + r, &z.im - r, &z.im + r)
}

fn disjoint(a: &Rect, b: &Rect) -> bool {
    a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0
}

/// Isolating squares for all roots of the squarefree `q`: real roots as
/// squares centered on the axis, and the roots in the open upper
/// half-plane. `None` when certification fails.
pub(crate) fn certified_roots(q: &Poly) -> Option<(Vec<Rect>, Vec<Rect>)> {
    let n = q.deg();
    let dq = q.derivative();
    let approx = aberth(q)?;
    let scale = approx.iter().map(|z| z.abs()).fold(1.0, f64::max);
    for bits in [60u32, 120, 240, 480] {
        let mut centers: Vec<GaussRat> = Vec::with_capacity(n);
        for z in &approx {
            let mut g = to_gauss(*z);
            if z.im.abs() < 1e-7 * scale {
                g.im = Rat::zero();
            }
            let mut c = polish(q, &dq, &round_gauss(&g, bits), bits, 4 + bits as usize / 30);
            if g.im.is_zero() {
                c.im = Rat::zero();
            }
            centers.push(c);
        }
        let mut squares = Vec::with_capacity(n);
        let mut ok = true;
        for c in &centers {
            match inclusion_radius(q, &dq, c) {
                Some(r) if !r.is_zero() => squares.push(square(c, &r)),
                Some(_) => squares.push(square(c, &pow2(-(2 * bits as i64)))),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let pairwise = (0..n).all(|i| (i + 1..n).all(|j| disjoint(&squares[i], &squares[j])));
        if !pairwise {
            continue;
        }
        let mut real = Vec::new();
        let mut upper = Vec::new();
        let mut lower = 0;
        for (c, s) in centers.iter().zip(squares) {
            if c.im.is_zero() {
                real.push(s);
            } else if s.y0.is_positive() {
                upper.push(s);
            } else if s.y1.is_negative() {
                lower += 1;
            } else {
                ok = false;
            }
        }
        if ok && lower == upper.len() {
            return Some((real, upper));
        }
    }
    None
}

/// A square of width at most `2^-bits` inside `rect` holding its root,
/// reached by Newton steps from the center.
pub(crate) fn refine_square(q: &Poly, rect: &Rect, bits: u32) -> Option<Rect> {
    let dq = q.derivative();
    let target = pow2(-(bits as i64));
    let work = bits + 2 * (64 - (q.deg() as u64).leading_zeros()) + 8;
    let mut z = rect.center();
    for _ in 0..64 {
        z = polish(q, &dq, &z, work, 1);
        if !rect.contains(&z) {
            return None;
        }
        let r = inclusion_radius(q, &dq, &z)?;
        let r = if r.is_zero() { target.clone() / Rat::from_integer(4.into()) } else { r };
        let s = square(&z, &r);
        if s.inside(rect) && &r + &r <= target {
            return Some(s);
        }
    }
    None
}
