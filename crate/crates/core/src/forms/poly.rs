use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, fmt_rat, ri, GaussRat, Rat};

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// order with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| ri(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        Poly::new(vec![r])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `x - r`
    pub fn linear_root(r: &Rat) -> Self {
        Poly::new(vec![-r, Rat::one()])
    }

    pub fn monomial(k: usize, r: Rat) -> Self {
        let mut c = vec![Rat::zero(); k + 1];
        c[k] = r;
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_gauss(&self, z: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for a in self.c.iter().rev() {
            acc = &acc * z;
            acc.re += a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + super::rat_to_f64(a);
        }
        acc
    }

    pub fn eval_c64(&self, re: f64, im: f64) -> (f64, f64) {
        let (mut ar, mut ai) = (0.0, 0.0);
        for a in self.c.iter().rev() {
            let nr = ar * re - ai * im + super::rat_to_f64(a);
            let ni = ar * im + ai * re;
            ar = nr;
            ai = ni;
        }
        (ar, ai)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * ri(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|a| a * r).collect() }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.lc().recip();
        self.scale(&l)
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut r = Poly::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        if self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.c.clone();
        let mut q = vec![Rat::zero(); self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv;
            if !f.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] -= &f * dj;
                }
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return Poly::zero(),
            (true, false) => return b.monic(),
            (false, true) => return a.monic(),
            _ => {}
        }
        let g = super::intpoly::gcd(&a.primitive_int(), &b.primitive_int());
        Poly::new(g.into_iter().map(Rat::from_integer).collect()).monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lc().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let a = self.rem(m);
        if a.is_zero() || m.deg() == 0 {
            return None;
        }
        if a.deg() == 0 || m.deg() <= 4 {
            let (g, s, _) = Poly::ext_gcd(&a, m);
            return (g.deg() == 0 && !g.is_zero()).then(|| s.rem(m));
        }
        // a = ai / da with integer ai, so a^-1 = da * ai^-1
        let da = Rat::from_integer(super::common_denominator(a.coeffs().iter()));
        let ai = a.scale(&da);
        let ints = |p: &Poly| -> Vec<BigInt> { p.coeffs().iter().map(|c| c.numer().clone()).collect() };
        let mi = m.scale(&Rat::from_integer(super::common_denominator(m.coeffs().iter())));
        let to_poly = |v: &[(BigInt, BigInt)]| Poly::new(v.iter().map(|(n, d)| Rat::new(n.clone(), d.clone())).collect());
        let check = |v: &[(BigInt, BigInt)]| (&ai * &to_poly(v)).rem(m) == Poly::one();
        match super::intpoly::inverse_mod(&ints(&ai), &ints(&mi), check) {
            Some(v) => Some(to_poly(&v).scale(&da)),
            None => {
                let (g, s, _) = Poly::ext_gcd(&a, m);
                (g.deg() == 0 && !g.is_zero()).then(|| s.rem(m))
            }
        }
    }

    /// Squarefree part, monic.
    pub fn squarefree(&self) -> Poly {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = Poly::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's squarefree decomposition: pairs `(f_i, i)` with `self = lc * prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let mut a = Poly::gcd(&f, &d);
        let mut b = f.exact_div(&a).unwrap();
        let mut c = d.exact_div(&a).unwrap();
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        while b.deg() > 0 {
            a = Poly::gcd(&b, &dd);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            c = dd.exact_div(&a).unwrap();
            dd = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(a.clone());
        }
        acc
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_int(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = common_denominator(self.c.iter());
        let mut ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|a| (a * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let neg = ints.last().unwrap().is_negative();
        for x in ints.iter_mut() {
            *x = &*x / &g;
            if neg {
                *x = -&*x;
            }
        }
        ints
    }

    /// Positive rational multiple with integer content 1 (sign of the
    /// leading coefficient kept).
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let den = common_denominator(self.c.iter());
        let ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|a| (a * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        Poly::new(ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect())
    }

    /// Cauchy bound: every complex root has modulus below the result.
    pub fn root_bound(&self) -> Rat {
        let l = self.lc().abs();
        let m = self
            .c
            .iter()
            .take(self.deg())
            .map(|a| a.abs() / &l)
            .max()
            .unwrap_or_else(Rat::zero);
        // round up to a power of two to keep subdivision points dyadic
        let b = m + Rat::one();
        let mut p = Rat::one();
        while p < b {
            p *= ri(2);
        }
        p
    }

    /// `self(x + a)`
    pub fn taylor_shift(&self, a: &Rat) -> Poly {
        self.compose(&Poly::new(vec![a.clone(), Rat::one()]))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let s = fmt_rat(a);
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{s}")?,
                1 => write!(f, "({s})x")?,
                _ => write!(f, "({s})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_division() {
        let a = Poly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(a.exact_div(&b), Some(Poly::from_ints(&[-1, 1])));
        assert_eq!(Poly::gcd(&a, &Poly::from_ints(&[1, 2, 1])), b);
        assert!(Poly::from_ints(&[1, 0, 1]).exact_div(&b).is_none());
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (x-1)^2 (x+2)^3 x
        let f = &(&Poly::from_ints(&[-1, 1]).pow(2) * &Poly::from_ints(&[2, 1]).pow(3)) * &Poly::x();
        let dec = f.squarefree_decomposition();
        let rebuilt = dec
            .iter()
            .fold(Poly::one(), |acc, (g, i)| &acc * &g.pow(*i));
        assert_eq!(rebuilt, f.monic());
        assert_eq!(f.squarefree().deg(), 3);
    }

    #[test]
    fn inverse_mod() {
        let m = Poly::from_ints(&[1, 0, 1]);
        let a = Poly::from_ints(&[1, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!((&a * &inv).rem(&m), Poly::one());
        assert!(Poly::from_ints(&[0, 0, 1, 0, 1]).inverse_mod(&m).is_none());
    }
}
