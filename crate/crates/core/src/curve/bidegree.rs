use num_traits::Zero;

use super::RationalCurve;
use crate::error::{Error, Result};
use crate::forms::{isolate_real, ri, sign_at_root, BinaryForm, Poly, Rat};
use crate::projgeom::QuadraticForm;

/// Factorization `p0 = q0 q2, p1 = q0 q3, p2 = q1 q2, p3 = q1 q3` of a
/// curve on `x0 x3 = x1 x2`, i.e. the two maps to the rulings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiDegreeSplit {
    pub q0: BinaryForm,
    pub q1: BinaryForm,
    pub q2: BinaryForm,
    pub q3: BinaryForm,
    /// Degrees of `[q0:q1]` and `[q2:q3]` as maps of real projective lines,
    /// both lines oriented by increasing `t/s`.
    pub real_bidegree: (i64, i64),
    pub complex_bidegree: (usize, usize),
}

/// `[a:b]` with the common factor removed.
fn reduce_pair(a: &BinaryForm, b: &BinaryForm) -> Result<(BinaryForm, BinaryForm)> {
    let g = BinaryForm::gcd(a, b);
    Ok((a.exact_div(&g)?, b.exact_div(&g)?))
}

/// Topological degree of `[q0:q1]` as a self-map of the real projective
/// line: the signed number of preimages of a regular value `c`, each counted
/// with the sign of `(q1/q0)'`.
pub(crate) fn circle_map_degree(q0: &BinaryForm, q1: &BinaryForm) -> Result<i64> {
    if q0.degree() == 0 {
        return Ok(0);
    }
    let p0 = q0.to_poly();
    let p1 = q1.to_poly();
    let w = &(&p0 * &p1.derivative()) - &(&p0.derivative() * &p1);
    for k in 0..64i64 {
        let c = ri(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        let h = q1.sub(&q0.scale(&c))?;
        if h.is_zero() || h.mult_at_infinity() > 0 {
            continue;
        }
        let hp = h.to_poly();
        if Poly::gcd(&hp, &w).deg() > 0 {
            continue;
        }
        let mut deg = 0;
        let sq = hp.squarefree();
        for iv in isolate_real(&sq) {
            deg += sign_at_root(&w, &sq, &iv)? as i64;
        }
        return Ok(deg);
    }
    Err(Error::Degenerate("no regular value found".into()))
}

pub fn bidegree_split(c: &RationalCurve) -> Result<BiDegreeSplit> {
    if c.dim() != 3 || !c.on_quadric(&QuadraticForm::segre())? {
        return Err(Error::NotOnSegreQuadric);
    }
    let p = c.forms();
    let (q0, q1) = if p[0].is_zero() && p[2].is_zero() { reduce_pair(&p[1], &p[3])? } else { reduce_pair(&p[0], &p[2])? };
    let (mut q2, mut q3) = if p[0].is_zero() && p[1].is_zero() { reduce_pair(&p[2], &p[3])? } else { reduce_pair(&p[0], &p[1])? };
    // fix the scalar so that the products reproduce the coordinates
    let (k, i, j) = (0..4)
        .map(|k| (k, k / 2, k % 2))
        .find(|&(k, _, _)| !p[k].is_zero())
        .expect("a curve has a nonzero coordinate");
    let (qa, qb) = ([&q0, &q1][i], [&q2, &q3][j]);
    let prod = qa.mul(qb);
    let lead = (0..=prod.degree()).find(|&l| !prod.coeff(l).is_zero()).expect("nonzero product");
    let lambda: Rat = p[k].coeff(lead) / prod.coeff(lead);
    q2 = q2.scale(&lambda);
    q3 = q3.scale(&lambda);
    let ok = q0.mul(&q2) == p[0] && q0.mul(&q3) == p[1] && q1.mul(&q2) == p[2] && q1.mul(&q3) == p[3];
    if !ok {
        return Err(Error::Internal("bi-degree factorization does not reproduce the curve".into()));
    }
    let complex_bidegree = (q0.degree(), q2.degree());
    let real_bidegree = (circle_map_degree(&q0, &q1)?, circle_map_degree(&q2, &q3)?);
    Ok(BiDegreeSplit { q0, q1, q2, q3, real_bidegree, complex_bidegree })
}
