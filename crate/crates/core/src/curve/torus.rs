use num_integer::Integer;
use num_traits::{One, Zero};

use super::{make_curve, Ambient, RationalCurve};
use crate::error::{Error, Result};
use crate::forms::{rq, BinaryForm, Rat};

/// Real and imaginary parts of `(s + i t)^n`.
pub(crate) fn cos_sin_forms(n: usize) -> (BinaryForm, BinaryForm) {
    let mut re = vec![Rat::zero(); n + 1];
    let mut im = vec![Rat::zero(); n + 1];
    let mut binom = num_bigint::BigInt::one();
    for j in 0..=n {
        // term binom(n, j) s^(n-j) (i t)^j
        let c = Rat::from_integer(binom.clone());
        match j % 4 {
            0 => re[j] = c,
            1 => im[j] = c,
            2 => re[j] = -c,
            _ => im[j] = -c,
        }
        binom = binom * (n - j) / (j + 1);
    }
    (BinaryForm::new(re), BinaryForm::new(im))
}

/// The `(m, d/2)` torus knot on the torus `|z| = a, |w| = b` in the sphere,
/// parametrized by the half-angle substitution.
pub fn torus_knot(d: usize, m: usize, radii: (Rat, Rat)) -> Result<RationalCurve> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::Precondition(format!("degree must be even and positive, got {d}")));
    }
    let half = d / 2;
    if m == 0 || m.gcd(&half) != 1 {
        return Err(Error::NotCoprime { m, half });
    }
    if m > half {
        return Err(Error::Precondition(format!("winding {m} exceeds half the degree {half}")));
    }
    let (a, b) = radii;
    if a.is_zero() || b.is_zero() || &a * &a + &b * &b != Rat::one() {
        return Err(Error::BadRadii(a, b));
    }
    let n = Rat::from_integer(a.denom().lcm(b.denom()));
    let circle = BinaryForm::from_ints(&[1, 0, 1]);
    let (cm, sm) = cos_sin_forms(2 * m);
    let (ch, sh) = cos_sin_forms(2 * half);
    let pad = circle.pow(half - m);
    let forms = vec![
        circle.pow(half).scale(&n),
        pad.mul(&cm).scale(&(&n * &a)),
        pad.mul(&sm).scale(&(&n * &a)),
        ch.scale(&(&n * &b)),
        sh.scale(&(&n * &b)),
    ];
    let (c, drop) = make_curve(forms, Ambient::Rp4)?;
    if drop.is_some() || !c.is_on_sphere() {
        return Err(Error::Internal("torus knot construction lost its degree or left the sphere".into()));
    }
    Ok(c)
}

/// `torus_knot` with radii `(3/5, 4/5)`.
pub fn torus_knot_default(d: usize, m: usize) -> Result<RationalCurve> {
    torus_knot(d, m, (rq(3, 5), rq(4, 5)))
}
