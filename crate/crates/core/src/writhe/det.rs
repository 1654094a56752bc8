use crate::curve::coincidence::{substitute_all, Moebius};
use crate::forms::{BinaryForm, Poly};

/// Coordinates and their derivatives in the affine chart of `m`.
pub(super) fn chart_jets(forms: &[BinaryForm], m: &Moebius) -> (Vec<Poly>, Vec<Poly>) {
    let k: Vec<Poly> = substitute_all(forms, m).iter().map(|f| f.to_poly()).collect();
    let dk = k.iter().map(|p| p.derivative()).collect();
    (k, dk)
}

/// `p(phi(x)) mod m`.
fn compose_mod(p: &Poly, phi: &Poly, m: &Poly) -> Poly {
    let mut acc = Poly::zero();
    for c in p.coeffs().iter().rev() {
        acc = (&(&acc * phi) + &Poly::constant(c.clone())).rem(m);
    }
    acc
}

fn det_mod(rows: &[Vec<Poly>], cols: &[usize], m: &Poly) -> Poly {
    if rows.len() == 1 {
        return rows[0][cols[0]].clone();
    }
    let mut acc = Poly::zero();
    for (j, &c) in cols.iter().enumerate() {
        if rows[0][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = (&rows[0][c] * &det_mod(&rows[1..], &rest, m)).rem(m);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `det[kx(x), dkx(x), ky(phi x), dky(phi x)] mod m`.
pub(super) fn tangent_volume(kx: &[Poly], dkx: &[Poly], ky: &[Poly], dky: &[Poly], phi: &Poly, m: &Poly) -> Poly {
    let rows: Vec<Vec<Poly>> = (0..kx.len())
        .map(|i| {
            vec![kx[i].rem(m), dkx[i].rem(m), compose_mod(&ky[i], phi, m), compose_mod(&dky[i], phi, m)]
        })
        .collect();
    det_mod(&rows, &[0, 1, 2, 3], m)
}
