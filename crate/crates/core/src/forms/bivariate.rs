use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{BinaryForm, Poly, Rat};

/// Dense polynomial in `x, y`; `c[i][j]` is the coefficient of `x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2 {
    c: Vec<Vec<Rat>>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { c: Vec::new() }
    }

    pub fn from_coeffs(c: Vec<Vec<Rat>>) -> Self {
        let mut p = Poly2 { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        for row in self.c.iter_mut() {
            while row.last().is_some_and(|x| x.is_zero()) {
                row.pop();
            }
        }
        while self.c.last().is_some_and(|r| r.is_empty()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.c.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_to(&mut self, i: usize, j: usize, v: Rat) {
        if self.c.len() <= i {
            self.c.resize(i + 1, Vec::new());
        }
        let row = &mut self.c[i];
        if row.len() <= j {
            row.resize(j + 1, Rat::zero());
        }
        row[j] += v;
    }

    /// Degree in `x`.
    pub fn deg_x(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    /// Degree in `y`.
    pub fn deg_y(&self) -> usize {
        self.c.iter().map(|r| r.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Substitutes a value for `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &Rat) -> Poly {
        let dy = self.deg_y();
        let mut out = vec![Rat::zero(); dy + 1];
        let mut xp = Rat::from_integer(1.into());
        for row in &self.c {
            for (j, a) in row.iter().enumerate() {
                out[j] += a * &xp;
            }
            xp *= x;
        }
        Poly::new(out)
    }

    /// Coefficients as a polynomial in `y` over `Q[x]`, ascending in `y`.
    pub fn as_poly_in_y(&self) -> Vec<Poly> {
        let dy = self.deg_y();
        if self.is_zero() {
            return Vec::new();
        }
        (0..=dy)
            .map(|j| Poly::new((0..self.c.len()).map(|i| self.coeff(i, j)).collect()))
            .collect()
    }

    /// `(f(x) g(y) - g(x) f(y)) / (x - y)` for the dehomogenized forms.
    pub fn divided_difference(f: &Poly, g: &Poly) -> Poly2 {
        let n = f.coeffs().len().max(g.coeffs().len());
        let mut out = Poly2::zero();
        for a in 0..n {
            for b in 0..a {
                // antisymmetric weight of x^a y^b
                let w = f.coeff(a) * g.coeff(b) - g.coeff(a) * f.coeff(b);
                if w.is_zero() {
                    continue;
                }
                // (x^a y^b - x^b y^a)/(x - y) = (xy)^b sum_k x^k y^(a-b-1-k)
                for k in 0..(a - b) {
                    out.add_to(b + k, b + (a - b - 1 - k), w.clone());
                }
            }
        }
        out.trim();
        out
    }

    /// Same as `divided_difference` applied to binary forms in the chart
    /// `s = 1`.
    pub fn divided_difference_forms(f: &BinaryForm, g: &BinaryForm) -> Poly2 {
        Poly2::divided_difference(&f.to_poly(), &g.to_poly())
    }

    /// `f(x) g(y) - h(x) k(y)`
    pub fn cross(f: &Poly, g: &Poly, h: &Poly, k: &Poly) -> Poly2 {
        let mut out = Poly2::zero();
        for (i, a) in f.coeffs().iter().enumerate() {
            for (j, b) in g.coeffs().iter().enumerate() {
                out.add_to(i, j, a * b);
            }
        }
        for (i, a) in h.coeffs().iter().enumerate() {
            for (j, b) in k.coeffs().iter().enumerate() {
                out.add_to(i, j, -(a * b));
            }
        }
        out.trim();
        out
    }

    /// Exchanges `x` and `y`.
    pub fn swap(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for (i, row) in self.c.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                out.add_to(j, i, a.clone());
            }
        }
        out.trim();
        out
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, o: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (i, row) in o.c.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                out.add_to(i, j, a.clone());
            }
        }
        out.trim();
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, o: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (i, row) in o.c.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                out.add_to(i, j, -a);
            }
        }
        out.trim();
        out
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, o: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (i, r) in self.c.iter().enumerate() {
            for (j, a) in r.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, s) in o.c.iter().enumerate() {
                    for (l, b) in s.iter().enumerate() {
                        out.add_to(i + k, j + l, a * b);
                    }
                }
            }
        }
        out.trim();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::ri;

    #[test]
    fn divided_difference_matches_definition() {
        let f = Poly::from_ints(&[1, 2, 0, 3]);
        let g = Poly::from_ints(&[0, -1, 4, 1]);
        let c = Poly2::divided_difference(&f, &g);
        for (x, y) in [(2, 5), (-1, 3), (7, -2)] {
            let (x, y) = (ri(x), ri(y));
            let lhs = c.eval_x(&x).eval(&y) * (&x - &y);
            let rhs = f.eval(&x) * g.eval(&y) - g.eval(&x) * f.eval(&y);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn swap_and_poly_in_y() {
        let p = Poly2::from_coeffs(vec![vec![ri(1), ri(2)], vec![ri(3)]]);
        assert_eq!(p.swap().coeff(1, 0), ri(2));
        let ys = p.as_poly_in_y();
        assert_eq!(ys[0], Poly::from_ints(&[1, 3]));
        assert_eq!(ys[1], Poly::from_ints(&[2]));
    }
}
