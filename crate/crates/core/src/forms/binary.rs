use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sturm::isolate_real;
use super::{common_denominator, fmt_rat, isolate_complex, refine_complex, refine_real, ri, GaussRat, Interval, Poly, Rat, Rect};
use crate::error::{Error, Result};

/// Homogeneous form of degree `d` in `(s, t)`. Index `j` of the coefficient
/// vector holds the coefficient of `s^(d-j) t^j`.
///
/// In the affine chart `s = 1` the form becomes the polynomial in `u = t/s`
/// whose ascending coefficients are exactly `coeffs`. The point `[0:1]` is a
/// root iff the last coefficient vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

/// Location of a root of a binary form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootBox {
    /// Real root `[1:u]` with `u` in the interval.
    Real { u: Interval, multiplicity: usize },
    /// The root `[0:1]`.
    Infinity { multiplicity: usize },
    /// Conjugate pair `[1:u]`, `[1:ū]` with `u` in the upper half-plane box.
    Conjugate { u: Rect, multiplicity: usize },
}

impl RootBox {
    pub fn multiplicity(&self) -> usize {
        match self {
            RootBox::Real { multiplicity, .. }
            | RootBox::Infinity { multiplicity }
            | RootBox::Conjugate { multiplicity, .. } => *multiplicity,
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self, RootBox::Conjugate { .. })
    }
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        BinaryForm::new(c.iter().map(|&x| ri(x)).collect())
    }

    pub fn zero(d: usize) -> Self {
        BinaryForm::new(vec![Rat::zero(); d + 1])
    }

    pub fn constant(r: Rat) -> Self {
        BinaryForm::new(vec![r])
    }

    /// `s`
    pub fn s() -> Self {
        BinaryForm::from_ints(&[1, 0])
    }

    /// `t`
    pub fn t() -> Self {
        BinaryForm::from_ints(&[0, 1])
    }

    /// Linear form `a s + b t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        BinaryForm::new(vec![a, b])
    }

    /// Homogenizes `p` to degree `d` (`d >= deg p`).
    pub fn from_poly(p: &Poly, d: usize) -> Self {
        assert!(p.is_zero() || p.deg() <= d);
        BinaryForm::new((0..=d).map(|j| p.coeff(j)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rat {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Dehomogenization at `s = 1`.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// Dehomogenization at `t = 1`, as a polynomial in `s/t`.
    pub fn to_poly_swapped(&self) -> Poly {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Multiplicity of the root `[0:1]`.
    pub fn mult_at_infinity(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        // Horner in the affine variable with powers of s carried along
        let mut acc = Rat::zero();
        let mut spow = Rat::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c * &spow;
            spow *= s;
        }
        // acc = sum c_j t^j s^(d-j) after the loop
        acc
    }

    pub fn eval_gauss(&self, s: &GaussRat, t: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        let mut spow = GaussRat::one();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + &spow.scale(c);
            spow = &spow * s;
        }
        acc
    }

    pub fn scale(&self, r: &Rat) -> Self {
        BinaryForm::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn neg(&self) -> Self {
        BinaryForm::new(self.coeffs.iter().map(|c| -c).collect())
    }

    fn check_add(&self, o: &BinaryForm) -> Result<()> {
        if self.degree() != o.degree() && !self.is_zero() && !o.is_zero() {
            return Err(Error::DegreeMismatch(self.degree(), o.degree()));
        }
        Ok(())
    }

    pub fn add(&self, o: &BinaryForm) -> Result<BinaryForm> {
        self.check_add(o)?;
        if self.is_zero() && self.degree() != o.degree() {
            return Ok(o.clone());
        }
        if o.is_zero() && self.degree() != o.degree() {
            return Ok(self.clone());
        }
        Ok(BinaryForm::new(
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, o: &BinaryForm) -> Result<BinaryForm> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &BinaryForm) -> BinaryForm {
        let mut c = vec![Rat::zero(); self.degree() + o.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        BinaryForm::new(c)
    }

    pub fn pow(&self, k: usize) -> BinaryForm {
        let mut r = BinaryForm::constant(Rat::one());
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// `q` with `self = b * q`, or `NonDivisible`.
    pub fn exact_div(&self, b: &BinaryForm) -> Result<BinaryForm> {
        if b.is_zero() {
            return Err(Error::Precondition("division by the zero form".into()));
        }
        if self.is_zero() {
            return Ok(BinaryForm::zero(self.degree().saturating_sub(b.degree())));
        }
        if b.degree() > self.degree() {
            return Err(Error::NonDivisible);
        }
        let qd = self.degree() - b.degree();
        let q = self.to_poly().exact_div(&b.to_poly()).ok_or(Error::NonDivisible)?;
        // the affine quotient must also account for roots at [0:1]
        if q.deg() > qd {
            return Err(Error::NonDivisible);
        }
        let q = BinaryForm::from_poly(&q, qd);
        if &q.mul(b) != self {
            return Err(Error::NonDivisible);
        }
        Ok(q)
    }

    /// Greatest common divisor, normalized so its affine part is monic.
    /// `gcd(0, 0)` is the zero form of degree 0.
    pub fn gcd(a: &BinaryForm, b: &BinaryForm) -> BinaryForm {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return BinaryForm::zero(0),
            (false, true) => return a.normalized_monic(),
            (true, false) => return b.normalized_monic(),
            _ => {}
        }
        let g = Poly::gcd(&a.to_poly(), &b.to_poly());
        let k = a.mult_at_infinity().min(b.mult_at_infinity());
        BinaryForm::from_poly(&g, g.deg() + k)
    }

    fn normalized_monic(&self) -> BinaryForm {
        let p = self.to_poly().monic();
        BinaryForm::from_poly(&p, self.degree())
    }

    /// Scalar multiple with coprime integer coefficients and positive first
    /// nonzero coefficient. Used as a canonical key.
    pub fn primitive(&self) -> BinaryForm {
        if self.is_zero() {
            return self.clone();
        }
        let den = common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if ints.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
            g = -g;
        }
        BinaryForm::new(ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect())
    }

    /// Partial derivative with respect to `s`.
    pub fn ds(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm::new((0..d).map(|j| &self.coeffs[j] * ri((d - j) as i64)).collect())
    }

    /// Partial derivative with respect to `t`.
    pub fn dt(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm::new((1..=d).map(|j| &self.coeffs[j] * ri(j as i64)).collect())
    }

    /// Exchanges `s` and `t`.
    pub fn swap(&self) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Substitutes `s -> a s + c t`, `t -> b s + d t` where `m = [[a, b], [c, d]]`,
    /// i.e. the row vector `(s, t)` is replaced by `(s, t) m`.
    pub fn substitute(&self, m: &[[Rat; 2]; 2]) -> BinaryForm {
        let d = self.degree();
        let ns = BinaryForm::linear(m[0][0].clone(), m[1][0].clone());
        let nt = BinaryForm::linear(m[0][1].clone(), m[1][1].clone());
        let mut acc = BinaryForm::zero(d);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = ns.pow(d - j).mul(&nt.pow(j)).scale(c);
            acc = acc.add(&term).expect("equal degrees");
        }
        acc
    }

    /// Distinct real projective roots.
    pub fn real_root_count(&self) -> usize {
        assert!(!self.is_zero(), "zero form has every point as a root");
        let inf = usize::from(self.mult_at_infinity() > 0);
        isolate_real(&self.to_poly()).len() + inf
    }

    /// Distinct real roots `[1:u]` with `u` in `(a, b]`.
    pub fn real_root_count_in(&self, a: &Rat, b: &Rat) -> usize {
        super::real_root_count_in(&self.to_poly(), a, b)
    }

    /// Boxes for all roots, each of width below `precision`, with
    /// multiplicities from a squarefree decomposition.
    pub fn isolate_roots(&self, precision: &Rat) -> Result<Vec<RootBox>> {
        if self.is_zero() {
            return Err(Error::Precondition("cannot isolate roots of the zero form".into()));
        }
        let bits = bits_for(precision);
        let mut out = Vec::new();
        let k = self.mult_at_infinity();
        if k > 0 {
            out.push(RootBox::Infinity { multiplicity: k });
        }
        let p = self.to_poly();
        for (f, m) in p.squarefree_decomposition() {
            for iv in isolate_real(&f) {
                out.push(RootBox::Real { u: refine_real(&f, &iv, bits), multiplicity: m });
            }
            for r in isolate_complex(&f) {
                out.push(RootBox::Conjugate { u: refine_complex(&f, &r, bits)?, multiplicity: m });
            }
        }
        Ok(out)
    }
}

/// Smallest `b` with `2^-b < precision`.
pub(crate) fn bits_for(precision: &Rat) -> u32 {
    let mut b = 0u32;
    let mut w = Rat::one();
    while &w >= precision {
        w /= ri(2);
        b += 1;
    }
    b
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - j, j) {
                (0, 0) => String::new(),
                (a, 0) => var("s", a),
                (0, b) => var("t", b),
                (a, b) => format!("{}*{}", var("s", a), var("t", b)),
            };
            let neg = c.is_negative();
            let mag = c.abs();
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            if mono.is_empty() {
                write!(f, "{sep}{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{sep}{mono}")?;
            } else {
                write!(f, "{sep}{}*{mono}", fmt_rat(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn var(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}
