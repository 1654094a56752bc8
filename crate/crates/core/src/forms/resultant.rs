use num_traits::One;

use super::{ri, BinaryForm, Poly, Poly2, Rat};
use crate::error::{Error, Result};
use crate::linalg::{interpolate, Matrix};

/// Sylvester matrix of two coefficient vectors taken with their formal
/// degrees `a.len() - 1` and `b.len() - 1`.
pub(crate) fn sylvester_matrix(a: &[Rat], b: &[Rat]) -> Matrix {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut s = Matrix::zeros(size, size);
    for i in 0..n {
        for (j, c) in a.iter().enumerate() {
            s[(i, i + j)] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().enumerate() {
            s[(n + i, i + j)] = c.clone();
        }
    }
    s
}

pub fn sylvester_det(a: &[Rat], b: &[Rat]) -> Rat {
    if a.len() + b.len() == 2 {
        return Rat::one();
    }
    sylvester_matrix(a, b).det()
}

/// Homogeneous resultant; zero iff the forms share a projective root.
pub fn resultant(a: &BinaryForm, b: &BinaryForm) -> Rat {
    sylvester_det(a.coeffs(), b.coeffs())
}

/// Determinant of the `(2d+k+1)`-square matrix whose rows are the shifted
/// coefficient vectors `u^i p0` for `i < d` and `u^i p1` for `i <= d + k`.
/// Equals `±c^(k+1) resultant(p0, p1)` where `c` is the coefficient of
/// `t^d` in `p1`.
pub fn augmented_sylvester_det(p0: &BinaryForm, p1: &BinaryForm, k: usize) -> Result<Rat> {
    let d = p0.degree();
    if p1.degree() != d {
        return Err(Error::DegreeMismatch(d, p1.degree()));
    }
    let size = 2 * d + k + 1;
    let mut m = Matrix::zeros(size, size);
    let mut row = 0;
    for i in 0..d {
        for (j, c) in p0.coeffs().iter().enumerate() {
            m[(row, i + j)] = c.clone();
        }
        row += 1;
    }
    for i in 0..=d + k {
        for (j, c) in p1.coeffs().iter().enumerate() {
            m[(row, i + j)] = c.clone();
        }
        row += 1;
    }
    Ok(m.det())
}

/// Determinant of the Vandermonde matrix `(x_i^j)`.
pub fn vandermonde_det(xs: &[Rat]) -> Rat {
    let n = xs.len();
    let mut m = Matrix::zeros(n, n);
    for (i, x) in xs.iter().enumerate() {
        let mut p = Rat::one();
        for j in 0..n {
            m[(i, j)] = p.clone();
            p *= x;
        }
    }
    m.det()
}

/// Resultant of `f` and `g` with respect to `y`, as a polynomial in `x`,
/// up to sign. Uses the formal `y`-degrees of `f` and `g` and recovers the
/// result by interpolation.
pub fn resultant_y(f: &Poly2, g: &Poly2) -> Poly {
    if f.is_zero() || g.is_zero() {
        return Poly::zero();
    }
    let (fy, gy) = (f.deg_y(), g.deg_y());
    let bound = f.deg_x() * gy + g.deg_x() * fy;
    let xs: Vec<Rat> = (0..=bound as i64).map(|k| if k % 2 == 0 { ri(k / 2) } else { ri(-(k + 1) / 2) }).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x| {
            let a = pad(f.eval_x(x), fy);
            let b = pad(g.eval_x(x), gy);
            sylvester_det(&a, &b)
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Coefficients `(s0, s1)` of the first subresultant `s1 y + s0` of `f` and
/// `g` with respect to `y`, as polynomials in `x`. It is a combination of
/// `f` and `g`, so wherever `s1` is nonzero the two share at most the root
/// `y = -s0/s1`.
pub fn first_subresultant_y(f: &Poly2, g: &Poly2) -> (Poly, Poly) {
    let (p, q) = (f.deg_y(), g.deg_y());
    let linear = |h: &Poly2| {
        let c = h.as_poly_in_y();
        (c.first().cloned().unwrap_or_else(Poly::zero), c.get(1).cloned().unwrap_or_else(Poly::zero))
    };
    if q <= 1 {
        return linear(g);
    }
    if p <= 1 {
        return linear(f);
    }
    let bound = f.deg_x() * (q - 1) + g.deg_x() * (p - 1);
    let xs: Vec<Rat> = (0..=bound as i64).map(|k| if k % 2 == 0 { ri(k / 2) } else { ri(-(k + 1) / 2) }).collect();
    let n = p + q - 2;
    let mut v0 = Vec::with_capacity(xs.len());
    let mut v1 = Vec::with_capacity(xs.len());
    for x in &xs {
        let a = pad(f.eval_x(x), p);
        let b = pad(g.eval_x(x), q);
        // rows y^k f and y^k g by ascending powers 0..=p+q-2
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n);
        for k in 0..q - 1 {
            let mut r = vec![ri(0); n + 1];
            for (j, c) in a.iter().enumerate() {
                r[k + j] = c.clone();
            }
            rows.push(r);
        }
        for k in 0..p - 1 {
            let mut r = vec![ri(0); n + 1];
            for (j, c) in b.iter().enumerate() {
                r[k + j] = c.clone();
            }
            rows.push(r);
        }
        let det_with = |last: usize| {
            let mut m = Matrix::zeros(n, n);
            for (i, r) in rows.iter().enumerate() {
                for (col, pow) in (2..=n).rev().chain(std::iter::once(last)).enumerate() {
                    m[(i, col)] = r[pow].clone();
                }
            }
            m.det()
        };
        v0.push(det_with(0));
        v1.push(det_with(1));
    }
    (interpolate(&xs, &v0), interpolate(&xs, &v1))
}

fn pad(p: Poly, d: usize) -> Vec<Rat> {
    (0..=d).map(|j| p.coeff(j)).collect()
}
