use num_traits::Zero;

use super::quadratic::{minor_polys, monomials};
use super::{ProjPoint, QuadraticForm};
use crate::error::{Error, Result};
use crate::forms::{isolate_real, ri, GaussRat, Poly, Rat};
use crate::linalg::Matrix;

/// Basis of the real quadratic forms on `P^dim` vanishing at every point.
/// A non-real point contributes two real conditions (real and imaginary
/// parts), so the result is the same for a conjugate-closed set.
pub fn forms_through(dim: usize, points: &[ProjPoint]) -> Result<Vec<QuadraticForm>> {
    let mons = monomials(dim);
    let mut rows = Vec::new();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: p.dim() });
        }
        let x = p.coords();
        let vals: Vec<GaussRat> = mons.iter().map(|&(i, j)| &x[i] * &x[j]).collect();
        rows.push(vals.iter().map(|v| v.re.clone()).collect::<Vec<_>>());
        if vals.iter().any(|v| !v.im.is_zero()) {
            rows.push(vals.iter().map(|v| v.im.clone()).collect());
        }
    }
    if rows.is_empty() {
        return (0..mons.len())
            .map(|k| {
                let mut c = vec![Rat::zero(); mons.len()];
                c[k] = ri(1);
                QuadraticForm::from_coeffs(dim, &c)
            })
            .collect();
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|c| QuadraticForm::from_coeffs(dim, &c))
        .collect()
}

/// Conics through points of the projective plane.
pub fn conic_through(points: &[ProjPoint]) -> Result<Vec<QuadraticForm>> {
    forms_through(2, points)
}

/// Quadrics through points of RP3 or RP4.
pub fn quadric_through_set(points: &[ProjPoint]) -> Result<Vec<QuadraticForm>> {
    let dim = points.first().map_or(3, |p| p.dim());
    forms_through(dim, points)
}

/// A definite real conic through four non-real points forming two conjugate
/// pairs.
///
/// The points span a pencil `A + x B`. Definiteness is an open condition
/// read off from the signs of the leading principal minors, which are
/// polynomials in `x`, so it suffices to test one point in each gap between
/// their real roots, plus the member `B` itself.
pub fn empty_conic_through(points: &[ProjPoint]) -> Result<QuadraticForm> {
    if points.len() != 4 {
        return Err(Error::Precondition(format!("expected 4 points, got {}", points.len())));
    }
    for (i, p) in points.iter().enumerate() {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: p.dim() });
        }
        if p.is_real() {
            return Err(Error::Precondition(format!("point {p} is real")));
        }
        if !points.contains(&p.conj()) {
            return Err(Error::Precondition(format!("conjugate of {p} is missing")));
        }
        if points[..i].contains(p) {
            return Err(Error::Precondition(format!("point {p} is repeated")));
        }
    }
    let pencil = conic_through(points)?;
    if pencil.len() != 2 {
        return Err(Error::NoEmptyMember);
    }
    let (a, b) = (pencil[0].matrix(), pencil[1].matrix());
    let minors = minor_polys(a, b);
    let mut candidates: Vec<Option<Rat>> = vec![None];
    let prod = minors.iter().fold(Poly::one(), |acc, m| &acc * m);
    let roots = if prod.is_zero() { Vec::new() } else { isolate_real(&prod) };
    if roots.is_empty() {
        candidates.push(Some(Rat::zero()));
    } else {
        candidates.push(Some(&roots[0].lo - ri(1)));
        candidates.push(Some(&roots[roots.len() - 1].hi + ri(1)));
        for w in roots.windows(2) {
            candidates.push(Some((&w[0].hi + &w[1].lo) / ri(2)));
        }
    }
    for x in candidates {
        let m = match &x {
            None => b.clone(),
            Some(x) => {
                let mut m = a.clone();
                for i in 0..3 {
                    for j in 0..3 {
                        m[(i, j)] += x * &b[(i, j)];
                    }
                }
                m
            }
        };
        let q = QuadraticForm::new(m)?;
        if q.signature().is_definite() {
            debug_assert!(points.iter().all(|p| q.contains(p)));
            return Ok(q);
        }
    }
    Err(Error::NoEmptyMember)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::Signature;

    fn pt(re: [i64; 3], im: [i64; 3]) -> ProjPoint {
        ProjPoint::complex(&re.map(ri), &im.map(ri)).unwrap()
    }

    #[test]
    fn pencil_contains_standard_conic() {
        let pts = [
            pt([0, 1, 0], [0, 0, 1]),
            pt([0, 1, 0], [0, 0, -1]),
            pt([1, 0, 0], [0, 1, 0]),
            pt([1, 0, 0], [0, -1, 0]),
        ];
        assert_eq!(conic_through(&pts).unwrap().len(), 2);
        let q = empty_conic_through(&pts).unwrap();
        let s = q.signature();
        assert!(s == Signature { pos: 3, neg: 0, zero: 0 } || s == Signature { pos: 0, neg: 3, zero: 0 });
        assert!(pts.iter().all(|p| q.contains(p)));
    }

    #[test]
    fn counts_of_conic_spaces() {
        assert_eq!(conic_through(&[]).unwrap().len(), 6);
        let five: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]
            .iter()
            .map(|c| ProjPoint::from_ints(c))
            .collect();
        assert_eq!(conic_through(&five).unwrap().len(), 1);
    }

    #[test]
    fn real_points_rejected() {
        let pts = [
            pt([0, 1, 0], [0, 0, 1]),
            pt([0, 1, 0], [0, 0, -1]),
            pt([1, 0, 0], [0, 0, 0]),
            pt([0, 1, 1], [0, 0, 0]),
        ];
        assert!(matches!(empty_conic_through(&pts), Err(Error::Precondition(_))));
    }
}
