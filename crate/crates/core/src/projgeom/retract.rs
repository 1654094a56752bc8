use num_traits::{Signed, Zero};

use super::{unit, ProjPoint, QuadExt, QuadMatrix, QuadraticForm};
use crate::error::{Error, Result};
use crate::forms::{ri, Rat};
use crate::linalg::Matrix;

/// Real transformation of RP3 moving a non-real point of the plane at
/// infinity onto a definite conic there.
#[derive(Clone, Debug)]
pub struct Retraction {
    /// The real point of the plane at infinity kept fixed, off the line
    /// through `z` and its conjugate.
    pub theta: ProjPoint,
    /// `T_1` acting on `[x0:x1:x2:x3]`; fixes `[1:0:0:0]`.
    pub t1: QuadMatrix,
    /// Real and imaginary parts of the image of `z` in plane coordinates.
    pub image: (Vec<QuadExt>, Vec<QuadExt>),
}

impl Retraction {
    /// `T_t = (1 - t) I + t T_1`.
    pub fn at(&self, t: &Rat) -> QuadMatrix {
        self.t1.lerp_identity(t)
    }
}

fn q_eval(q: &QuadraticForm, x: &[QuadExt], y: &[QuadExt]) -> QuadExt {
    let m = q.matrix();
    let mut acc = QuadExt::zero();
    for i in 0..x.len() {
        for j in 0..y.len() {
            if m[(i, j)].is_zero() {
                continue;
            }
            acc = &acc + &(&(&x[i] * &y[j]) * &QuadExt::rational(m[(i, j)].clone()));
        }
    }
    acc
}

/// Builds `T_1` for the point `z` (either plane coordinates, or a point of
/// RP3 with `x0 = 0`) and the definite conic `target` on the plane at
/// infinity.
///
/// Writing the canonical representative as `z = P + iQ`, the line `l`
/// through `z` and its conjugate meets the conic in `w = (a - i sqrt(e)) P + Q`
/// and its conjugate, chosen on the same side as `z`. The transform fixes
/// `[1:0:0:0]`, the point `theta` and the real point `[Q]` of `l`, and
/// sends `z` to `w`.
pub fn retract_to_conic(z: &ProjPoint, target: &QuadraticForm) -> Result<Retraction> {
    if target.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: target.dim() });
    }
    if !target.signature().is_definite() {
        return Err(Error::Precondition("target conic must be definite".into()));
    }
    let c = z.canonical();
    let plane: Vec<_> = match z.dim() {
        2 => c,
        3 => {
            if !c[0].is_zero() {
                return Err(Error::Precondition("point is not on the plane at infinity".into()));
            }
            c[1..].to_vec()
        }
        d => return Err(Error::DimensionMismatch { expected: 3, got: d }),
    };
    let p: Vec<Rat> = plane.iter().map(|x| x.re.clone()).collect();
    let qv: Vec<Rat> = plane.iter().map(|x| x.im.clone()).collect();
    let alpha = target.eval(&p);
    let beta = target.bilinear(&p, &qv);
    let gamma = target.eval(&qv);
    let disc = &alpha * &gamma - &beta * &beta;
    if !disc.is_positive() {
        return Err(Error::Precondition("point is real".into()));
    }
    let mu = &QuadExt::sqrt(&disc) * &QuadExt::rational(gamma.abs().recip());
    let nu = QuadExt::rational(-&beta / &gamma);

    let theta = (0..3)
        .map(|k| unit(3, k))
        .find(|th| {
            Matrix::from_rows(vec![p.clone(), qv.clone(), th.clone()]).det() != Rat::zero()
        })
        .ok_or(Error::DegenerateChoice)?;
    let b = Matrix::from_rows(vec![p.clone(), qv.clone(), theta.clone()]).transpose();
    let binv = b.inverse().ok_or(Error::DegenerateChoice)?;
    let one = QuadExt::rational(ri(1));
    let zero = QuadExt::zero();
    let local = QuadMatrix {
        rows: vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![nu, mu, zero.clone()],
            vec![zero.clone(), zero, one],
        ],
    };
    let t3 = QuadMatrix::from_rational(&b).mul(&local).mul(&QuadMatrix::from_rational(&binv));
    let mut rows = vec![vec![QuadExt::rational(ri(1)), QuadExt::zero(), QuadExt::zero(), QuadExt::zero()]];
    for r in &t3.rows {
        let mut row = vec![QuadExt::zero()];
        row.extend(r.iter().cloned());
        rows.push(row);
    }
    let t1 = QuadMatrix { rows };

    let pe: Vec<QuadExt> = p.iter().cloned().map(QuadExt::rational).collect();
    let qe: Vec<QuadExt> = qv.iter().cloned().map(QuadExt::rational).collect();
    let (wr, wi) = (t3.apply(&pe), t3.apply(&qe));
    let on_conic = (&q_eval(target, &wr, &wr) - &q_eval(target, &wi, &wi)).is_zero()
        && q_eval(target, &wr, &wi).is_zero();
    if !on_conic {
        return Err(Error::Internal("retraction image is off the conic".into()));
    }
    let mut th = vec![Rat::zero()];
    th.extend(theta);
    Ok(Retraction { theta: ProjPoint::real(th)?, t1, image: (wr, wi) })
}
