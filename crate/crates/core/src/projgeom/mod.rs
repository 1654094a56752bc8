//! Projective points and transformations, quadratic forms and their
//! signatures, the sphere-preserving group, and conic/quadric fitting.

mod conics;
mod lorentz;
mod quadext;
mod quadratic;
mod retract;

pub use conics::{conic_through, empty_conic_through, forms_through, quadric_through_set};
pub use lorentz::{adapted_transform, in_po41, mirror, Po41Component};
pub use quadext::{QuadExt, QuadMatrix};
pub use quadratic::{QuadricKind, QuadraticForm, Signature};
pub use retract::{retract_to_conic, Retraction};
pub(crate) use quadratic::monomials as quadratic_monomials;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{GaussRat, Rat};
use crate::linalg::Matrix;

/// Point of real or complex projective space, stored with Gaussian rational
/// coordinates. Equality is projective.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    coords: Vec<GaussRat>,
}

impl ProjPoint {
    pub fn new(coords: Vec<GaussRat>) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::AllZero);
        }
        Ok(ProjPoint { coords })
    }

    pub fn real(coords: Vec<Rat>) -> Result<Self> {
        ProjPoint::new(coords.into_iter().map(GaussRat::real).collect())
    }

    pub fn from_ints(c: &[i64]) -> Self {
        ProjPoint::real(c.iter().map(|&x| crate::forms::ri(x)).collect()).expect("nonzero point")
    }

    /// Builds `re + i*im` coordinatewise.
    pub fn complex(re: &[Rat], im: &[Rat]) -> Result<Self> {
        ProjPoint::new(re.iter().zip(im).map(|(a, b)| GaussRat::new(a.clone(), b.clone())).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[GaussRat] {
        &self.coords
    }

    /// Representative with the first nonzero coordinate equal to one.
    pub fn canonical(&self) -> Vec<GaussRat> {
        let lead = self.coords.iter().find(|c| !c.is_zero()).unwrap();
        let inv = lead.inv().unwrap();
        self.coords.iter().map(|c| c * &inv).collect()
    }

    pub fn is_real(&self) -> bool {
        self.canonical().iter().all(|c| c.is_real())
    }

    /// Real coordinates of the canonical representative, when real.
    pub fn real_coords(&self) -> Option<Vec<Rat>> {
        let c = self.canonical();
        c.iter().all(|x| x.is_real()).then(|| c.into_iter().map(|x| x.re).collect())
    }

    pub fn conj(&self) -> ProjPoint {
        ProjPoint { coords: self.coords.iter().map(|c| c.conj()).collect() }
    }

    /// Real and imaginary parts of the stored representative.
    pub fn re_im(&self) -> (Vec<Rat>, Vec<Rat>) {
        (
            self.coords.iter().map(|c| c.re.clone()).collect(),
            self.coords.iter().map(|c| c.im.clone()).collect(),
        )
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, o: &ProjPoint) -> bool {
        self.dim() == o.dim() && self.canonical() == o.canonical()
    }
}

impl Eq for ProjPoint {}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.canonical().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", c.join(":"))
    }
}

/// Invertible linear map of projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjTransform {
    matrix: Matrix,
}

impl ProjTransform {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), got: matrix.cols() });
        }
        if matrix.det().is_zero() {
            return Err(Error::Precondition("transformation matrix is singular".into()));
        }
        Ok(ProjTransform { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        ProjTransform { matrix: Matrix::identity(dim + 1) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn compose(&self, then: &ProjTransform) -> ProjTransform {
        ProjTransform { matrix: &then.matrix * &self.matrix }
    }

    pub fn inverse(&self) -> ProjTransform {
        ProjTransform { matrix: self.matrix.inverse().expect("invertible by construction") }
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: p.dim() });
        }
        let (re, im) = p.re_im();
        ProjPoint::complex(&self.matrix.apply(&re), &self.matrix.apply(&im))
    }

    /// Whether the transform is a nonzero multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let c = self.matrix[(0, 0)].clone();
        self.matrix == Matrix::identity(self.dim() + 1).scale(&c)
    }
}

pub(crate) fn unit(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[k] = Rat::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::ri;

    #[test]
    fn projective_equality() {
        let a = ProjPoint::from_ints(&[0, 2, 4]);
        let b = ProjPoint::from_ints(&[0, -1, -2]);
        assert_eq!(a, b);
        assert!(ProjPoint::real(vec![ri(0), ri(0)]).is_err());
        let z = ProjPoint::complex(&[ri(0), ri(1)], &[ri(1), ri(0)]).unwrap();
        assert!(!z.is_real());
        assert_ne!(z, z.conj());
    }

    #[test]
    fn transforms_compose() {
        let t = ProjTransform::new(Matrix::from_ints(&[&[1, 1], &[0, 1]])).unwrap();
        let p = ProjPoint::from_ints(&[0, 1]);
        assert_eq!(t.apply(&p).unwrap(), ProjPoint::from_ints(&[1, 1]));
        assert!(t.compose(&t.inverse()).is_scalar());
        assert!(ProjTransform::new(Matrix::from_ints(&[&[1, 1], &[1, 1]])).is_err());
    }
}
