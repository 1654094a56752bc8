use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::forms::{fmt_rat, sgn, Rat};

/// Element `a + b sqrt(k)` of a real quadratic field, `k` a squarefree
/// positive integer. `k = 1` encodes plain rationals (then `b = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
    pub k: BigInt,
}

impl QuadExt {
    pub fn rational(a: Rat) -> Self {
        QuadExt { a, b: Rat::zero(), k: BigInt::one() }
    }

    pub fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }

    pub fn one() -> Self {
        QuadExt::rational(Rat::one())
    }

    /// Square root of a nonnegative rational.
    pub fn sqrt(r: &Rat) -> Self {
        assert!(!r.is_negative(), "square root of a negative rational");
        let n = r.numer() * r.denom();
        let (f, k) = square_split(&n);
        let coef = Rat::new(f, r.denom().clone());
        if k.is_one() {
            QuadExt::rational(coef)
        } else {
            QuadExt { a: Rat::zero(), b: coef, k }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn field(&self, o: &QuadExt) -> BigInt {
        if self.b.is_zero() {
            o.k.clone()
        } else if o.b.is_zero() || self.k == o.k {
            self.k.clone()
        } else {
            panic!("mixing different quadratic fields")
        }
    }

    fn make(a: Rat, b: Rat, k: BigInt) -> Self {
        if b.is_zero() {
            QuadExt::rational(a)
        } else {
            QuadExt { a, b, k }
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> i32 {
        let sa = sgn(&self.a);
        let sb = sgn(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with b^2 k
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * Rat::from_integer(self.k.clone());
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        crate::forms::rat_to_f64(&self.a)
            + crate::forms::rat_to_f64(&self.b) * crate::forms::rat_to_f64(&Rat::from_integer(self.k.clone())).sqrt()
    }
}

/// Writes `n = f^2 k` with `k` squarefree (trial division up to a bound;
/// any leftover factor stays in `k`, which keeps arithmetic correct).
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        return (r, BigInt::one());
    }
    let mut k = n.clone();
    let mut f = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while p <= limit && &p * &p <= k {
        let pp = &p * &p;
        while (&k % &pp).is_zero() {
            k /= &pp;
            f *= &p;
        }
        p += 1;
    }
    let r = k.sqrt();
    if &(&r * &r) == &k {
        return (f * r, BigInt::one());
    }
    (f, k)
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        let k = self.field(o);
        QuadExt::make(&self.a + &o.a, &self.b + &o.b, k)
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        let k = self.field(o);
        QuadExt::make(&self.a - &o.a, &self.b - &o.b, k)
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        let k = self.field(o);
        let kr = Rat::from_integer(k.clone());
        QuadExt::make(
            &self.a * &o.a + &self.b * &o.b * kr,
            &self.a * &o.b + &self.b * &o.a,
            k,
        )
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::make(-&self.a, -&self.b, self.k.clone())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        if self.a.is_zero() {
            write!(f, "{}*sqrt({})", fmt_rat(&self.b), self.k)
        } else {
            write!(f, "{} + {}*sqrt({})", fmt_rat(&self.a), fmt_rat(&self.b), self.k)
        }
    }
}

/// Square matrix over a real quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadMatrix {
    pub rows: Vec<Vec<QuadExt>>,
}

impl QuadMatrix {
    pub fn from_rational(m: &crate::linalg::Matrix) -> Self {
        QuadMatrix {
            rows: m.to_rows().into_iter().map(|r| r.into_iter().map(QuadExt::rational).collect()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        QuadMatrix::from_rational(&crate::linalg::Matrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, o: &QuadMatrix) -> QuadMatrix {
        let n = self.n();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(QuadExt::zero(), |acc, k| &acc + &(&self.rows[i][k] * &o.rows[k][j])))
                    .collect()
            })
            .collect();
        QuadMatrix { rows }
    }

    pub fn apply(&self, v: &[QuadExt]) -> Vec<QuadExt> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).fold(QuadExt::zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect()
    }

    /// `(1 - t) I + t self`.
    pub fn lerp_identity(&self, t: &Rat) -> QuadMatrix {
        let n = self.n();
        let one_minus = QuadExt::rational(Rat::one() - t);
        let tt = QuadExt::rational(t.clone());
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let base = if i == j { one_minus.clone() } else { QuadExt::zero() };
                        &base + &(&tt * &self.rows[i][j])
                    })
                    .collect()
            })
            .collect();
        QuadMatrix { rows }
    }

    pub fn is_rational(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_rational())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{ri, rq};

    #[test]
    fn square_roots_normalize() {
        assert_eq!(QuadExt::sqrt(&ri(4)), QuadExt::rational(ri(2)));
        let s = QuadExt::sqrt(&rq(8, 9));
        assert_eq!(s.k, BigInt::from(2));
        assert_eq!(s.b, rq(2, 3));
        assert_eq!(&s * &s, QuadExt::rational(rq(8, 9)));
    }

    #[test]
    fn exact_sign() {
        let s2 = QuadExt::sqrt(&ri(2));
        let x = &QuadExt::rational(rq(-141, 100)) + &s2;
        assert_eq!(x.signum(), 1);
        let y = &QuadExt::rational(rq(-142, 100)) + &s2;
        assert_eq!(y.signum(), -1);
    }
}
