use num_traits::Zero;

use super::RationalCurve;
use crate::error::{Error, Result};
use crate::forms::{ri, Rat};
use crate::linalg::Matrix;

/// Rank of the Jacobian of the sphere condition `q = p1^2 + ... + p4^2 - p0^2`
/// with respect to the coefficients of the curve, one coefficient (index
/// `chart` in the flattened `5 x (d+1)` table) held fixed.
///
/// Row `j` holds the partial derivatives of `q(t_j)`: the entry for the
/// coefficient of `t^l` in `p_k` is `+-2 p_k(t_j) t_j^l`. With `2d + 1`
/// distinct samples these rows span the same space as the coefficients of
/// `q`.
pub fn jacobian_rank(c: &RationalCurve, samples: &[Rat], chart: usize) -> Result<usize> {
    if !c.is_on_sphere() {
        return Err(Error::Precondition("the curve must lie on the sphere".into()));
    }
    let d = c.degree();
    if samples.len() != 2 * d + 1 {
        return Err(Error::DimensionMismatch { expected: 2 * d + 1, got: samples.len() });
    }
    for (i, a) in samples.iter().enumerate() {
        if samples[..i].contains(a) {
            return Err(Error::Precondition("sample parameters must be distinct".into()));
        }
    }
    let forms = c.forms();
    let width = d + 1;
    if chart >= forms.len() * width || forms[chart / width].coeff(chart % width).is_zero() {
        return Err(Error::BadChart(chart));
    }
    let polys: Vec<_> = forms.iter().map(|f| f.to_poly()).collect();
    let mut rows = Vec::with_capacity(samples.len());
    for t in samples {
        let mut row = Vec::with_capacity(forms.len() * width - 1);
        for (k, p) in polys.iter().enumerate() {
            let sign = if k == 0 { ri(-2) } else { ri(2) };
            let base = &sign * &p.eval(t);
            let mut pw = ri(1);
            for l in 0..width {
                if k * width + l != chart {
                    row.push(&base * &pw);
                }
                pw *= t;
            }
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows).rank())
}

/// `jacobian_rank` at `t_j = 1, ..., 2d+1` with the first nonzero
/// coefficient as chart.
pub fn jacobian_rank_default(c: &RationalCurve) -> Result<usize> {
    let width = c.degree() + 1;
    let chart = c
        .forms()
        .iter()
        .flat_map(|f| f.coeffs().iter())
        .position(|a| !a.is_zero())
        .ok_or(Error::AllZero)?;
    debug_assert!(chart < c.forms().len() * width);
    let samples: Vec<Rat> = (1..=(2 * c.degree() as i64 + 1)).map(ri).collect();
    jacobian_rank(c, &samples, chart)
}
