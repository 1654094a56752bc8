use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{rat_to_f64, round_down, round_up, GaussRat, Poly, Rat};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(r: Rat) -> Self {
        Interval { lo: r.clone(), hi: r }
    }

    /// Smallest interval with endpoints in `2^-bits Z` containing this one.
    pub fn round_out(&self, bits: u32) -> Interval {
        Interval::new(round_down(&self.lo, bits), round_up(&self.hi, bits))
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn contains(&self, r: &Rat) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    /// Sign of every element, if constant and nonzero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn abs_max(&self) -> Rat {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rat_to_f64(&self.lo), rat_to_f64(&self.hi))
    }

    /// Horner evaluation with endpoints rounded outward to `2^-bits`.
    pub fn eval_poly_rounded(p: &Poly, x: &Interval, bits: u32) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for a in p.coeffs().iter().rev() {
            acc = (&(&acc * x) + &Interval::point(a.clone())).round_out(bits);
        }
        acc
    }

    pub fn eval_poly(p: &Poly, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for a in p.coeffs().iter().rev() {
            acc = &(&acc * x) + &Interval::point(a.clone());
        }
        acc
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let ps = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = ps.iter().min().unwrap().clone();
        let hi = ps.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }
}

/// Complex rectangle `re × im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

impl CInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        CInterval { re, im }
    }

    pub fn point(z: &GaussRat) -> Self {
        CInterval::new(Interval::point(z.re.clone()), Interval::point(z.im.clone()))
    }

    pub fn real(x: Interval) -> Self {
        CInterval::new(x, Interval::point(Rat::zero()))
    }

    pub fn conj(&self) -> Self {
        CInterval::new(self.re.clone(), -&self.im)
    }

    pub fn center(&self) -> GaussRat {
        GaussRat::new(self.re.mid(), self.im.mid())
    }

    pub fn intersects(&self, o: &CInterval) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn width(&self) -> Rat {
        self.re.width().max(self.im.width())
    }

    /// Horner evaluation with endpoints rounded outward to multiples of
    /// `2^-bits` after every step, keeping the rationals short.
    pub fn eval_poly_rounded(p: &Poly, z: &CInterval, bits: u32) -> CInterval {
        let mut acc = CInterval::point(&GaussRat::zero());
        for a in p.coeffs().iter().rev() {
            acc = &acc * z;
            acc.re = &acc.re + &Interval::point(a.clone());
            acc.re = acc.re.round_out(bits);
            acc.im = acc.im.round_out(bits);
        }
        acc
    }

    pub fn eval_poly(p: &Poly, z: &CInterval) -> CInterval {
        let mut acc = CInterval::point(&GaussRat::zero());
        for a in p.coeffs().iter().rev() {
            acc = &acc * z;
            acc.re = &acc.re + &Interval::point(a.clone());
        }
        acc
    }
}

impl Add for &CInterval {
    type Output = CInterval;
    fn add(self, o: &CInterval) -> CInterval {
        CInterval::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &CInterval {
    type Output = CInterval;
    fn sub(self, o: &CInterval) -> CInterval {
        CInterval::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &CInterval {
    type Output = CInterval;
    fn mul(self, o: &CInterval) -> CInterval {
        CInterval::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}
