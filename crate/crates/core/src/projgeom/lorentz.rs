use num_traits::{Signed, Zero};

use super::{ProjPoint, ProjTransform, QuadraticForm};
use crate::error::{Error, Result};
use crate::forms::{ri, Rat};
use crate::linalg::Matrix;

/// The two connected components of the projectivized group preserving the
/// sphere form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Po41Component {
    IdentitySide,
    ReflectionSide,
}

impl Po41Component {
    pub fn compose(self, o: Po41Component) -> Po41Component {
        if self == o {
            Po41Component::IdentitySide
        } else {
            Po41Component::ReflectionSide
        }
    }
}

/// Decides whether `M^T J M = lambda J` with `lambda > 0` and
/// `J = diag(-1, 1, 1, 1, 1)`, and if so returns the component.
///
/// The label is the product of the time-orientation sign `sign(M00)` and the
/// sign of the determinant. Both flip under `M -> -M`, so the product is a
/// projective invariant.
pub fn in_po41(t: &ProjTransform) -> Option<Po41Component> {
    if t.dim() != 4 {
        return None;
    }
    let j = QuadraticForm::sphere(4);
    let g = j.pullback(t);
    let lambda = g.matrix()[(1, 1)].clone();
    if !lambda.is_positive() || g.matrix() != &j.matrix().scale(&lambda) {
        return None;
    }
    let m = t.matrix();
    let time = m[(0, 0)].signum();
    let det = m.det().signum();
    Some(if time * det == ri(1) { Po41Component::IdentitySide } else { Po41Component::ReflectionSide })
}

/// Reflection `x1 -> -x1`, fixing the north pole `[1:0:0:0:1]`.
pub fn mirror() -> ProjTransform {
    ProjTransform::new(Matrix::diag(&[ri(1), ri(-1), ri(1), ri(1), ri(1)])).unwrap()
}

/// The north pole `[1:0:0:0:1]` of the sphere.
pub(crate) fn north_pole() -> Vec<Rat> {
    vec![ri(1), ri(0), ri(0), ri(0), ri(1)]
}

/// Identity-side sphere-preserving transform sending the sphere point `c`
/// to the north pole. Built from the Lorentz reflection in `c - N`,
/// corrected by `x3 -> -x3` when that reflection lands on the other
/// component.
pub fn adapted_transform(c: &ProjPoint) -> Result<ProjTransform> {
    let j = QuadraticForm::sphere(4);
    let c = c.real_coords().ok_or(Error::CenterNotOnSphere)?;
    if c.len() != 5 || !j.eval(&c).is_zero() {
        return Err(Error::CenterNotOnSphere);
    }
    let n = north_pole();
    let cp = ProjPoint::real(c.clone())?;
    if cp == ProjPoint::real(n.clone())? {
        return Ok(ProjTransform::identity(4));
    }
    let u: Vec<Rat> = c.iter().zip(&n).map(|(a, b)| a - b).collect();
    let juu = j.eval(&u);
    // R x = x - 2 J(x,u)/J(u,u) u, column k is R e_k
    let ju = j.matrix().apply(&u);
    let mut r = Matrix::identity(5);
    for row in 0..5 {
        for col in 0..5 {
            r[(row, col)] -= ri(2) * &ju[col] * &u[row] / &juu;
        }
    }
    let mut t = ProjTransform::new(r)?;
    if in_po41(&t) == Some(Po41Component::ReflectionSide) {
        let flip = ProjTransform::new(Matrix::diag(&[ri(1), ri(1), ri(1), ri(-1), ri(1)]))?;
        t = t.compose(&flip);
    }
    debug_assert_eq!(in_po41(&t), Some(Po41Component::IdentitySide));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::rq;

    #[test]
    fn component_labels() {
        assert_eq!(in_po41(&ProjTransform::identity(4)), Some(Po41Component::IdentitySide));
        assert_eq!(in_po41(&mirror()), Some(Po41Component::ReflectionSide));
        let neg = ProjTransform::new(Matrix::identity(5).scale(&ri(-1))).unwrap();
        assert_eq!(in_po41(&neg), Some(Po41Component::IdentitySide));
        assert_eq!(in_po41(&mirror().compose(&mirror())), Some(Po41Component::IdentitySide));
        let mut shear = Matrix::identity(5);
        shear[(1, 2)] = ri(1);
        assert_eq!(in_po41(&ProjTransform::new(shear).unwrap()), None);
    }

    #[test]
    fn rotation_is_identity_side() {
        // rotation by the Pythagorean angle (3/5, 4/5) in the x1 x2 plane
        let mut m = Matrix::identity(5);
        m[(1, 1)] = rq(3, 5);
        m[(1, 2)] = rq(-4, 5);
        m[(2, 1)] = rq(4, 5);
        m[(2, 2)] = rq(3, 5);
        assert_eq!(in_po41(&ProjTransform::new(m).unwrap()), Some(Po41Component::IdentitySide));
    }

    #[test]
    fn adapted_transform_moves_center() {
        let c = ProjPoint::from_ints(&[5, 3, 0, 4, 0]);
        let t = adapted_transform(&c).unwrap();
        assert_eq!(t.apply(&c).unwrap(), ProjPoint::real(north_pole()).unwrap());
        assert!(adapted_transform(&ProjPoint::from_ints(&[1, 1, 1, 0, 0])).is_err());
    }
}
