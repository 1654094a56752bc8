use std::fmt;

use num_traits::{One, Zero};

use super::{ProjPoint, ProjTransform};
use crate::error::{Error, Result};
use crate::forms::{ri, rq, sgn, GaussRat, Poly, Rat};
use crate::linalg::Matrix;

/// Inertia `(positive, negative, zero)` of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.pos == 0 || self.neg == 0)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.pos, self.neg, self.zero)
    }
}

/// Projective type of a quadric surface in RP3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricKind {
    Sphere,
    Hyperboloid,
    Cone,
    PlanePair,
    Other,
}

/// Quadratic form `x^T M x` with symmetric rational `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    matrix: Matrix,
}

impl QuadraticForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::Precondition("quadratic form matrix must be symmetric".into()));
        }
        if matrix.is_zero() {
            return Err(Error::AllZero);
        }
        Ok(QuadraticForm { matrix })
    }

    pub fn diag(d: &[i64]) -> Self {
        QuadraticForm::new(Matrix::diag(&d.iter().map(|&x| ri(x)).collect::<Vec<_>>())).unwrap()
    }

    /// The sphere form `-x0^2 + x1^2 + ... + xn^2`.
    pub fn sphere(dim: usize) -> Self {
        let mut d = vec![1i64; dim + 1];
        d[0] = -1;
        QuadraticForm::diag(&d)
    }

    /// The doubly ruled quadric `x0 x3 - x1 x2`.
    pub fn segre() -> Self {
        let mut c = vec![Rat::zero(); monomial_count(3)];
        c[monomial_index(3, 0, 3)] = ri(1);
        c[monomial_index(3, 1, 2)] = ri(-1);
        QuadraticForm::from_coeffs(3, &c).unwrap()
    }

    /// Builds the form `sum_{i<=j} c_ij x_i x_j` from coefficients listed in
    /// the order of `monomials(dim)`.
    pub fn from_coeffs(dim: usize, c: &[Rat]) -> Result<Self> {
        if c.len() != monomial_count(dim) {
            return Err(Error::DimensionMismatch { expected: monomial_count(dim), got: c.len() });
        }
        let n = dim + 1;
        let mut m = Matrix::zeros(n, n);
        for (k, (i, j)) in monomials(dim).into_iter().enumerate() {
            if i == j {
                m[(i, i)] = c[k].clone();
            } else {
                let h = &c[k] * rq(1, 2);
                m[(i, j)] = h.clone();
                m[(j, i)] = h;
            }
        }
        QuadraticForm::new(m)
    }

    /// Coefficients in the order of `monomials(dim)`.
    pub fn coeffs(&self) -> Vec<Rat> {
        monomials(self.dim())
            .into_iter()
            .map(|(i, j)| if i == j { self.matrix[(i, i)].clone() } else { &self.matrix[(i, j)] * ri(2) })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.bilinear(x, x)
    }

    pub fn bilinear(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let my = self.matrix.apply(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    pub fn eval_gauss(&self, x: &[GaussRat]) -> GaussRat {
        let n = x.len();
        let mut acc = GaussRat::zero();
        for i in 0..n {
            for j in 0..n {
                let m = &self.matrix[(i, j)];
                if m.is_zero() {
                    continue;
                }
                acc = &acc + &(&x[i] * &x[j]).scale(m);
            }
        }
        acc
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval_gauss(p.coords()).is_zero()
    }

    /// The form `q(T x)`, i.e. `T^T M T`.
    pub fn pullback(&self, t: &ProjTransform) -> QuadraticForm {
        let m = t.matrix();
        QuadraticForm { matrix: &(&m.transpose() * &self.matrix) * m }
    }

    pub fn scale(&self, r: &Rat) -> QuadraticForm {
        QuadraticForm::new(self.matrix.scale(r)).expect("nonzero scale")
    }

    pub fn neg(&self) -> QuadraticForm {
        self.scale(&ri(-1))
    }

    /// Inertia computed from the characteristic polynomial; all its roots are
    /// real so the rule of signs counts them exactly.
    pub fn signature(&self) -> Signature {
        signature_of(&self.matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Projective type of a quadric in RP3.
    pub fn classify(&self) -> Result<QuadricKind> {
        if self.dim() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: self.dim() });
        }
        let s = self.signature();
        Ok(match (s.rank(), s.pos.min(s.neg)) {
            (4, 1) => QuadricKind::Sphere,
            (4, 2) => QuadricKind::Hyperboloid,
            (3, _) => QuadricKind::Cone,
            (2, _) => QuadricKind::PlanePair,
            _ => QuadricKind::Other,
        })
    }
}

pub(crate) fn signature_of(m: &Matrix) -> Signature {
    let p = m.charpoly();
    let n = m.rows();
    let zero = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let pos = sign_variations(p.coeffs());
    let flipped: Vec<Rat> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
        .collect();
    let neg = sign_variations(&flipped);
    debug_assert_eq!(pos + neg + zero, n);
    Signature { pos, neg, zero }
}

fn sign_variations(c: &[Rat]) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in c.iter().map(sgn).filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Monomials `x_i x_j`, `i <= j`, in lexicographic order.
pub(crate) fn monomials(dim: usize) -> Vec<(usize, usize)> {
    let n = dim + 1;
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

pub(crate) fn monomial_count(dim: usize) -> usize {
    (dim + 1) * (dim + 2) / 2
}

pub(crate) fn monomial_index(dim: usize, i: usize, j: usize) -> usize {
    monomials(dim).iter().position(|&m| m == (i.min(j), i.max(j))).unwrap()
}

/// Leading principal minors of `a + x b` as polynomials in `x`.
pub(crate) fn minor_polys(a: &Matrix, b: &Matrix) -> Vec<Poly> {
    let n = a.rows();
    (1..=n)
        .map(|k| {
            let xs: Vec<Rat> = (0..=k as i64).map(ri).collect();
            let ys: Vec<Rat> = xs
                .iter()
                .map(|x| {
                    let mut m = a.leading_minor(k);
                    let bk = b.leading_minor(k);
                    for i in 0..k {
                        for j in 0..k {
                            m[(i, j)] += x * &bk[(i, j)];
                        }
                    }
                    m.det()
                })
                .collect();
            crate::linalg::interpolate(&xs, &ys)
        })
        .collect()
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j), c) in monomials(self.dim()).into_iter().zip(self.coeffs()) {
            if c.is_zero() {
                continue;
            }
            let mono = if i == j { format!("x{i}^2") } else { format!("x{i}*x{j}") };
            let sep = if first { "" } else { " + " };
            first = false;
            if c.is_one() {
                write!(f, "{sep}{mono}")?;
            } else {
                write!(f, "{sep}({})*{mono}", crate::forms::fmt_rat(&c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(QuadraticForm::diag(&[1, 1, 1]).signature(), Signature { pos: 3, neg: 0, zero: 0 });
        assert_eq!(QuadraticForm::sphere(4).signature(), Signature { pos: 4, neg: 1, zero: 0 });
        assert_eq!(QuadraticForm::segre().signature(), Signature { pos: 2, neg: 2, zero: 0 });
    }

    #[test]
    fn classification() {
        assert_eq!(QuadraticForm::segre().classify().unwrap(), QuadricKind::Hyperboloid);
        assert_eq!(QuadraticForm::sphere(3).classify().unwrap(), QuadricKind::Sphere);
        // x0 x2 - x1^2
        let mut c = vec![Rat::zero(); 10];
        c[monomial_index(3, 0, 2)] = ri(1);
        c[monomial_index(3, 1, 1)] = ri(-1);
        let cone = QuadraticForm::from_coeffs(3, &c).unwrap();
        assert_eq!(cone.classify().unwrap(), QuadricKind::Cone);
    }

    #[test]
    fn coefficient_round_trip() {
        let q = QuadraticForm::segre();
        assert_eq!(QuadraticForm::from_coeffs(3, &q.coeffs()).unwrap(), q);
        assert_eq!(q.eval(&[ri(1), ri(2), ri(3), ri(6)]), Rat::zero());
    }
}
