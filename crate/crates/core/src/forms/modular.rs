//! Greatest common divisors of polynomials in `y` whose coefficients live in
//! `Q[x]/(m)` for a squarefree `m`. Whenever a leading coefficient turns out
//! to be a zero divisor the modulus is split and both parts are followed.

use super::Poly;

/// One branch of a split computation: on the roots of `modulus`, the gcd is
/// `g` (ascending in `y`, monic, coefficients reduced mod `modulus`). An
/// empty `g` means every input vanished identically on this branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub modulus: Poly,
    pub g: Vec<Poly>,
}

impl Branch {
    /// Degree of `g` in `y`, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.g.len().checked_sub(1)
    }
}

fn reduce(m: &Poly, a: &[Poly]) -> Vec<Poly> {
    let mut v: Vec<Poly> = a.iter().map(|c| c.rem(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Splits `m` until the leading coefficient of `a` is either zero or a unit
/// on each part. Returns the parts together with `a` trimmed accordingly.
fn normalize(m: &Poly, a: &[Poly]) -> Vec<(Poly, Vec<Poly>)> {
    let a = reduce(m, a);
    let Some(lc) = a.last() else {
        return vec![(m.clone(), a)];
    };
    let g = Poly::gcd(lc, m);
    if g.deg() == 0 {
        return vec![(m.clone(), a)];
    }
    let other = m.exact_div(&g).expect("gcd divides the modulus");
    let mut out = normalize(&g, &a);
    if other.deg() > 0 {
        out.extend(normalize(&other, &a));
    }
    out
}

fn make_monic(m: &Poly, a: &[Poly]) -> Vec<Poly> {
    let inv = a.last().unwrap().inverse_mod(m).expect("leading coefficient is a unit");
    a.iter().map(|c| (c * &inv).rem(m)).collect()
}

/// Remainder of `a` by `b` in `(Q[x]/m)[y]`; `b` must have a unit leading
/// coefficient.
fn rem_mod(m: &Poly, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r = reduce(m, a);
    let db = b.len() - 1;
    let inv = b[db].inverse_mod(m).expect("leading coefficient is a unit");
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = (r.last().unwrap() * &inv).rem(m);
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &(&f * bj)).rem(m);
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn gcd_mod(m: &Poly, a: &[Poly], b: &[Poly]) -> Vec<Branch> {
    let mut out = Vec::new();
    for (m1, b1) in normalize(m, b) {
        if b1.is_empty() {
            for (m2, a2) in normalize(&m1, a) {
                let g = if a2.is_empty() { a2 } else { make_monic(&m2, &a2) };
                out.push(Branch { modulus: m2, g });
            }
            continue;
        }
        if b1.len() == 1 {
            out.push(Branch { modulus: m1, g: vec![Poly::one()] });
            continue;
        }
        let r = rem_mod(&m1, a, &b1);
        out.extend(gcd_mod(&m1, &b1, &r));
    }
    out
}

/// Gcd of all `polys` (each ascending in `y` with coefficients in `Q[x]`)
/// over the roots of the squarefree polynomial `m`, split into branches.
/// The branch moduli are pairwise coprime and multiply to `m` up to a unit.
pub fn split_gcd(m: &Poly, polys: &[Vec<Poly>]) -> Vec<Branch> {
    let m = m.monic();
    let mut branches = vec![Branch { modulus: m, g: Vec::new() }];
    for p in polys {
        let mut next = Vec::new();
        for br in branches {
            next.extend(gcd_mod(&br.modulus, &br.g, p));
        }
        branches = next;
    }
    for b in branches.iter_mut() {
        b.modulus = b.modulus.monic();
    }
    branches
}
