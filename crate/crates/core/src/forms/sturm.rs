use num_traits::Zero;

use super::{pow2, ri, sgn, Interval, Poly, Rat};
use crate::error::{Error, Result};

/// Number of refinement rounds allowed before giving up. Round `r` asks for
/// `8r` bits of width.
pub(crate) fn precision_budget() -> u32 {
    std::env::var("REALKNOT_PRECISION_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&b| b > 0)
        .unwrap_or(64)
}

/// Sturm sequence of a polynomial (the squarefree part is taken first).
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        let p = p.squarefree();
        let mut seq = vec![p.primitive_part()];
        if p.deg() == 0 {
            return SturmChain { seq };
        }
        seq.push(p.derivative().primitive_part());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive_part());
        }
        SturmChain { seq }
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn var_at(&self, x: &Rat) -> usize {
        Self::variations(self.seq.iter().map(|q| sgn(&q.eval(x))))
    }

    fn var_at_inf(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|q| {
            let s = sgn(&q.lc());
            if positive || q.deg() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Rat, b: &Rat) -> usize {
        if self.seq[0].deg() == 0 || a >= b {
            return 0;
        }
        self.var_at(a).saturating_sub(self.var_at(b))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        if self.seq[0].deg() == 0 {
            return 0;
        }
        self.var_at_inf(false) - self.var_at_inf(true)
    }

    pub fn poly(&self) -> &Poly {
        &self.seq[0]
    }
}

/// Distinct real roots of `p` in `(a, b]`.
pub fn real_root_count_in(p: &Poly, a: &Rat, b: &Rat) -> usize {
    SturmChain::new(p).count(a, b)
}

/// Isolating intervals for the distinct real roots of `p`, in increasing
/// order. Each interval is either a single rational point that is a root, or
/// an open interval with non-root endpoints containing exactly one root.
pub fn isolate_real(p: &Poly) -> Vec<Interval> {
    let chain = SturmChain::new(p);
    let q = chain.poly().clone();
    if q.deg() == 0 {
        return Vec::new();
    }
    let b = q.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-&b, b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(Interval::new(lo, hi));
            continue;
        }
        let mid = split_point(&q, &lo, &hi);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// A dyadic point strictly inside `(lo, hi)` that is not a root of `q`.
fn split_point(q: &Poly, lo: &Rat, hi: &Rat) -> Rat {
    let w = hi - lo;
    for k in [8i64, 7, 9, 6, 10, 5, 11, 4, 12, 3, 13] {
        let m = lo + &w * Rat::new(k.into(), 16.into());
        if !q.eval(&m).is_zero() {
            return m;
        }
    }
    // at most deg q roots; one of 32 more candidates works
    for k in 1..64i64 {
        let m = lo + &w * Rat::new((2 * k + 1).into(), 128.into());
        if !q.eval(&m).is_zero() {
            return m;
        }
    }
    unreachable!("too many rational roots in a subinterval")
}

/// Shrinks an isolating interval of a root of squarefree `p` to width at most
/// `2^-bits`.
pub fn refine_real(p: &Poly, iv: &Interval, bits: u32) -> Interval {
    let target = pow2(-(bits as i64));
    let mut iv = iv.clone();
    if iv.lo == iv.hi {
        return iv;
    }
    let s_lo = sgn(&p.eval(&iv.lo));
    debug_assert!(s_lo != 0);
    let two = ri(2);
    while iv.width() > target {
        let mid = (&iv.lo + &iv.hi) / &two;
        let s = sgn(&p.eval(&mid));
        if s == 0 {
            return Interval::point(mid);
        }
        if s == s_lo {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    iv
}

/// Sign of `q` at the unique root of `p` isolated by `iv`. Zero when they
/// share that root.
pub fn sign_at_root(q: &Poly, p: &Poly, iv: &Interval) -> Result<i32> {
    if iv.lo == iv.hi {
        return Ok(sgn(&q.eval(&iv.lo)));
    }
    let p = p.squarefree();
    let mut cur = iv.clone();
    let mut checked = false;
    for round in 1..=precision_budget() {
        let bits = 8 * round + 24;
        if let Some(s) = Interval::eval_poly_rounded(q, &cur, bits + 32).sign() {
            return Ok(s);
        }
        if round >= 4 && !checked {
            checked = true;
            let g = Poly::gcd(&p, q);
            if g.deg() > 0 && real_root_count_in(&g, &cur.lo, &cur.hi) > 0 {
                return Ok(0);
            }
        }
        cur = refine_real(&p, &cur, bits);
        if cur.lo == cur.hi {
            return Ok(sgn(&q.eval(&cur.lo)));
        }
    }
    Err(Error::PrecisionExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::rq;

    #[test]
    fn counts_roots_of_cubic() {
        // (x-1)(x-2)(x+3)
        let p = &(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-2, 1])) * &Poly::from_ints(&[3, 1]);
        let c = SturmChain::new(&p);
        assert_eq!(c.count_all(), 3);
        assert_eq!(c.count(&ri(0), &ri(2)), 2);
        assert_eq!(c.count(&ri(1), &ri(2)), 1);
        assert_eq!(isolate_real(&p).len(), 3);
    }

    #[test]
    fn refines_sqrt2() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let ivs = isolate_real(&p);
        assert_eq!(ivs.len(), 2);
        let r = refine_real(&p, &ivs[1], 20);
        assert!(r.lo < rq(141422, 100000) && r.hi > rq(141421, 100000));
        assert_eq!(sign_at_root(&Poly::from_ints(&[-1, 1]), &p, &ivs[1]).unwrap(), 1);
        assert_eq!(sign_at_root(&Poly::x(), &p, &ivs[0]).unwrap(), -1);
    }

    #[test]
    fn shared_root_sign_is_zero() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let q = &p * &Poly::from_ints(&[5, 1]);
        let ivs = isolate_real(&p);
        assert_eq!(sign_at_root(&q, &p, &ivs[0]).unwrap(), 0);
    }
}
