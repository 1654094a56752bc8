//! Pairs of parameters with proportional images.
//!
//! For forms `f_0..f_n` the pairs `(x, y)`, `x != y`, with `f(x) ~ f(y)` are the
//! common zeros of the divided differences
//! `C_ij = (f_i(x) f_j(y) - f_j(x) f_i(y)) / (x - y)`, which additionally vanish
//! on the diagonal exactly at cusps. The `x` coordinates are cut out by a gcd
//! of resultants; on each factor of that polynomial the partner `y` is the
//! root of the gcd of the `C_ij`, computed with dynamic splitting of the
//! modulus. A linear gcd gives the partner as a polynomial `phi(x)` modulo
//! the factor.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{
    count_in_rect, first_subresultant_y, isolate_roots, refine_complex, refine_real, resultant_y,
    sign_at_root, split_gcd, BinaryForm, CInterval, Interval, Poly, Poly2, Rat, Rect,
};
use crate::forms::{ri, rq, GaussRat};

use super::Param;

/// `[[a, b], [c, d]]`: the old parameters are `(s, t) = (s', t') m`.
pub type Moebius = [[Rat; 2]; 2];

pub(crate) fn identity_moebius() -> Moebius {
    [[ri(1), ri(0)], [ri(0), ri(1)]]
}

/// Old affine parameter `u = t/s` for a new affine parameter value.
/// Returns `None` for the old point `[0:1]`.
pub(crate) fn old_param(m: &Moebius, u_new: &Rat) -> Option<Rat> {
    // (s, t) = (1, u') m
    let s = &m[0][0] + u_new * &m[1][0];
    let t = &m[0][1] + u_new * &m[1][1];
    (!s.is_zero()).then(|| t / s)
}

fn moebius_for(u0: &Rat) -> Moebius {
    // new [0:1] goes to old [1:u0], new [1:0] to old [0:1]
    [[ri(0), ri(1)], [ri(1), u0.clone()]]
}

fn candidate_u0() -> impl Iterator<Item = Rat> {
    let base = [ri(0), ri(1), ri(-1), ri(2), ri(-2), rq(1, 2), rq(-1, 2), ri(3), ri(-3), rq(1, 3), rq(-1, 3)];
    base.into_iter().chain((4..200).map(|k| rq(k, 7) - ri(k / 5)))
}

pub(crate) fn substitute_all(forms: &[BinaryForm], m: &Moebius) -> Vec<BinaryForm> {
    forms.iter().map(|f| f.substitute(m)).collect()
}

/// Homogeneous gcd of the minors `c_j f_i - c_i f_j`, the forms vanishing
/// where the curve passes through the point `c`.
fn through_point(forms: &[BinaryForm], c: &[Rat]) -> BinaryForm {
    let mut g = BinaryForm::zero(forms[0].degree());
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let m = forms[i].scale(&c[j]).sub(&forms[j].scale(&c[i])).expect("equal degrees");
            if !m.is_zero() {
                g = BinaryForm::gcd(&g, &m);
            }
        }
    }
    g
}

fn point_at_infinity(forms: &[BinaryForm]) -> Vec<Rat> {
    forms.iter().map(|f| f.coeff(f.degree()).clone()).collect()
}

/// The image of `[0:1]` is a simple point of the curve: met only once, not a
/// cusp.
fn infinity_is_simple(forms: &[BinaryForm]) -> bool {
    let g = through_point(forms, &point_at_infinity(forms));
    !g.is_zero() && g.degree() == 1
}

/// The image of `[0:1]` under `forms` does not lie on the curve `other`.
fn infinity_off(forms: &[BinaryForm], other: &[BinaryForm]) -> bool {
    let g = through_point(other, &point_at_infinity(forms));
    !g.is_zero() && g.degree() == 0
}

fn choose_chart(ok: impl Fn(&Moebius) -> bool) -> Result<Moebius> {
    let id = identity_moebius();
    if ok(&id) {
        return Ok(id);
    }
    for u0 in candidate_u0() {
        let m = moebius_for(&u0);
        if ok(&m) {
            return Ok(m);
        }
    }
    Err(Error::Degenerate("no admissible affine chart".into()))
}

/// One factor of the coincidence polynomial together with its partner map.
#[derive(Clone, Debug)]
pub(crate) struct PairBranch {
    pub modulus: Poly,
    pub partner: Poly,
    pub real: Vec<Interval>,
    pub upper: Vec<Rect>,
}

/// Location of a root of some branch modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum RootRef {
    Real(usize, usize),
    Upper(usize, usize),
    Lower(usize, usize),
}

#[derive(Clone, Debug)]
pub(crate) struct Coincidences {
    pub chart_x: Moebius,
    pub chart_y: Moebius,
    pub fx: Vec<Poly>,
    pub branches: Vec<PairBranch>,
    /// Moduli whose roots are cusps (partner equal to itself).
    pub cusps: Vec<Poly>,
    /// Squarefree eliminant in `x`.
    pub eliminant: Poly,
}

fn combos(c: &[Poly2], attempt: usize) -> (Poly2, Poly2) {
    let mut a = Poly2::zero();
    let mut b = Poly2::zero();
    for (k, p) in c.iter().enumerate() {
        let k = k as i64;
        let at = attempt as i64;
        let wa = Poly2::from_coeffs(vec![vec![ri(1 + k * (at + 1))]]);
        let wb = Poly2::from_coeffs(vec![vec![ri((k * k + 3 * at + 2) % 11 - 5 + (k == 0) as i64 * 7)]]);
        a = &a + &(&wa * p);
        b = &b + &(&wb * p);
    }
    (a, b)
}

/// Squarefree polynomial whose roots include every `x` of a coincidence.
fn eliminate(c: &[Poly2]) -> Result<Poly> {
    if c.len() == 1 {
        // one equation cuts out finitely many points only if it is constant
        return if c[0].deg_x() == 0 && c[0].deg_y() == 0 { Ok(Poly::one()) } else { Err(Error::PositiveDimensional) };
    }
    if c.iter().any(|p| p.deg_x() == 0 && p.deg_y() == 0) {
        return Ok(Poly::one());
    }
    let mut acc: Option<Poly> = None;
    let mut found = 0;
    for attempt in 0..6 {
        let r = if attempt == 0 {
            resultant_y(&c[0], &c[1])
        } else {
            let (a, b) = combos(c, attempt);
            resultant_y(&a, &b)
        };
        if r.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => r,
            Some(g) => Poly::gcd(&g, &r),
        });
        found += 1;
        if found == 2 {
            break;
        }
    }
    let r = acc.ok_or(Error::PositiveDimensional)?;
    Ok(if r.deg() == 0 { Poly::one() } else { r.squarefree() })
}

fn build(chart_x: Moebius, chart_y: Moebius, fx: Vec<Poly>, c: Vec<Poly2>, symmetric: bool) -> Result<Coincidences> {
    let c: Vec<Poly2> = c.into_iter().filter(|p| !p.is_zero()).collect();
    let mut out = Coincidences { chart_x, chart_y, fx, branches: Vec::new(), cusps: Vec::new(), eliminant: Poly::one() };
    if c.is_empty() {
        return Err(Error::PositiveDimensional);
    }
    let r = eliminate(&c)?;
    out.eliminant = r.clone();
    if r.deg() == 0 {
        return Ok(out);
    }
    let polys: Vec<Vec<Poly>> = c.iter().map(|p| p.as_poly_in_y()).collect();
    let pm = partner_maps(&r, &c, &polys)?;
    for (mut m, mut phi) in pm {
        if symmetric {
            let h = Poly::gcd(&(&phi - &Poly::x()), &m);
            if h.deg() > 0 {
                m = m.exact_div(&h).unwrap().monic();
                phi = phi.rem(&m);
                out.cusps.push(h);
            }
        }
        if m.deg() == 0 {
            continue;
        }
        if !polys.iter().all(|ys| vanishes_on_graph(ys, &phi, &m)) {
            return Err(Error::Internal("coincidence failed back-substitution".into()));
        }
        let (real, upper) = isolate_roots(&m);
        out.branches.push(PairBranch { modulus: m, partner: phi, real, upper });
    }
    Ok(out)
}

/// `sum_k c_k(x) phi(x)^k` modulo `m`.
fn graph_residue(ys: &[Poly], phi: &Poly, m: &Poly) -> Poly {
    let mut acc = Poly::zero();
    for c in ys.iter().rev() {
        acc = (&(&acc * phi) + c).rem(m);
    }
    acc
}

fn vanishes_on_graph(ys: &[Poly], phi: &Poly, m: &Poly) -> bool {
    graph_residue(ys, phi, m).is_zero()
}

/// Factors of `r` with their partner maps. Where the first subresultant of
/// two combinations has a unit leading coefficient it gives the partner
/// directly; the remaining factor goes through `split_gcd`.
fn partner_maps(r: &Poly, c: &[Poly2], polys: &[Vec<Poly>]) -> Result<Vec<(Poly, Poly)>> {
    let mut best: Option<(Poly, Poly, Poly)> = None;
    for attempt in 0..4 {
        let (a, b) = if attempt == 0 { (c[0].clone(), c[1].clone()) } else { combos(c, attempt) };
        let (s0, s1) = first_subresultant_y(&a, &b);
        let bad = Poly::gcd(&s1, r);
        if best.as_ref().is_none_or(|(old, _, _)| bad.deg() < old.deg()) {
            best = Some((bad, s0, s1));
        }
        if best.as_ref().is_some_and(|(old, _, _)| old.deg() == 0) {
            break;
        }
    }
    let (bad, s0, s1) = best.expect("at least one attempt");
    let mut out = Vec::new();
    let good = r.exact_div(&bad).expect("gcd divides").monic();
    if good.deg() > 0 {
        let inv = s1.inverse_mod(&good).ok_or_else(|| Error::Internal("subresultant not invertible".into()))?;
        let phi = (&(-&s0) * &inv).rem(&good);
        // drop the roots where some equation misses the graph
        let mut keep = good.clone();
        for ys in polys {
            keep = Poly::gcd(&keep, &graph_residue(ys, &phi, &good));
        }
        if keep.deg() > 0 {
            let phi = phi.rem(&keep);
            out.push((keep, phi));
        }
    }
    if bad.deg() > 0 {
        for br in split_gcd(&bad, polys) {
            match br.degree() {
                None => return Err(Error::PositiveDimensional),
                Some(0) => continue,
                Some(1) => {}
                Some(_) => return Err(Error::Degenerate("a parameter has several partners".into())),
            }
            let phi = (-&br.g[0]).rem(&br.modulus);
            out.push((br.modulus, phi));
        }
    }
    Ok(out)
}

/// Coincident pairs of a single parametrized curve.
pub(crate) fn self_coincidences(forms: &[BinaryForm]) -> Result<Coincidences> {
    let chart = choose_chart(|m| infinity_is_simple(&substitute_all(forms, m)))?;
    let f: Vec<Poly> = substitute_all(forms, &chart).iter().map(|g| g.to_poly()).collect();
    let mut c = Vec::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            c.push(Poly2::divided_difference(&f[i], &f[j]));
        }
    }
    build(chart.clone(), chart, f, c, true)
}

/// Pairs `(x, y)` with `f(x) ~ g(y)` for two parametrized curves.
pub(crate) fn mutual_coincidences(f: &[BinaryForm], g: &[BinaryForm]) -> Result<Coincidences> {
    let cx = choose_chart(|m| infinity_off(&substitute_all(f, m), g))?;
    let fx_forms = substitute_all(f, &cx);
    let cy = choose_chart(|m| infinity_off(&substitute_all(g, m), &fx_forms))?;
    let fx: Vec<Poly> = fx_forms.iter().map(|p| p.to_poly()).collect();
    let fy: Vec<Poly> = substitute_all(g, &cy).iter().map(|p| p.to_poly()).collect();
    let mut c = Vec::new();
    for i in 0..fx.len() {
        for j in i + 1..fx.len() {
            c.push(Poly2::cross(&fx[i], &fy[j], &fx[j], &fy[i]));
        }
    }
    build(cx, cy, fx, c, false)
}

impl Coincidences {
    /// Number of roots over all branches (each unordered self-pair counts
    /// twice).
    pub fn root_count(&self) -> usize {
        self.branches.iter().map(|b| b.modulus.deg()).sum()
    }

    pub fn cusp_count(&self) -> usize {
        self.cusps.iter().map(|h| h.deg()).sum()
    }

    pub fn real_roots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.branches.iter().enumerate().flat_map(|(b, br)| (0..br.real.len()).map(move |k| (b, k)))
    }

    pub fn upper_roots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.branches.iter().enumerate().flat_map(|(b, br)| (0..br.upper.len()).map(move |k| (b, k)))
    }

    fn enclosure(&self, r: RootRef, bits: u32) -> Result<CInterval> {
        Ok(match r {
            RootRef::Real(b, k) => {
                let br = &self.branches[b];
                CInterval::real(refine_real(&br.modulus, &br.real[k], bits))
            }
            RootRef::Upper(b, k) => {
                let br = &self.branches[b];
                refine_complex(&br.modulus, &br.upper[k], bits)?.to_cinterval()
            }
            RootRef::Lower(b, k) => self.enclosure(RootRef::Upper(b, k), bits)?.conj(),
        })
    }

    fn all_roots(&self) -> Vec<RootRef> {
        let mut v: Vec<RootRef> = self.real_roots().map(|(b, k)| RootRef::Real(b, k)).collect();
        for (b, k) in self.upper_roots() {
            v.push(RootRef::Upper(b, k));
            v.push(RootRef::Lower(b, k));
        }
        v
    }

    /// Enclosures of `roots` (as listed by `all_roots`) refined to `bits`.
    fn enclosures(&self, roots: &[RootRef], bits: u32) -> Result<Vec<CInterval>> {
        let mut out: Vec<CInterval> = Vec::with_capacity(roots.len());
        for (i, &r) in roots.iter().enumerate() {
            let e = match r {
                RootRef::Lower(b, k) if i > 0 && roots[i - 1] == RootRef::Upper(b, k) => out[i - 1].conj(),
                _ => self.enclosure(r, bits)?,
            };
            out.push(e);
        }
        Ok(out)
    }

    /// Every root paired with the root that the partner map sends it to.
    /// Only meaningful for self-coincidences, where partners are again
    /// branch roots.
    pub fn partners(&self) -> Result<Vec<(RootRef, RootRef)>> {
        let all = self.all_roots();
        let mut found: Vec<Option<RootRef>> = vec![None; all.len()];
        let mut bits = 24;
        for _ in 0..crate::forms::precision_budget() {
            let enc = self.enclosures(&all, bits)?;
            for (i, &r) in all.iter().enumerate() {
                if found[i].is_some() {
                    continue;
                }
                let b = match r {
                    RootRef::Real(b, _) | RootRef::Upper(b, _) | RootRef::Lower(b, _) => b,
                };
                let img = CInterval::eval_poly_rounded(&self.branches[b].partner, &enc[i], bits + 16);
                let hits: Vec<usize> = (0..all.len()).filter(|&j| enc[j].intersects(&img)).collect();
                match hits.len() {
                    0 => return Err(Error::Internal("partner root not found".into())),
                    1 => found[i] = Some(all[hits[0]]),
                    _ => {}
                }
            }
            if found.iter().all(|f| f.is_some()) {
                return Ok(all.into_iter().zip(found.into_iter().map(|f| f.unwrap())).collect());
            }
            bits = (bits * 2).min(1 << 16);
        }
        Err(Error::PrecisionExhausted)
    }

    /// Sign of `e` at a real root.
    pub fn sign_real(&self, b: usize, k: usize, e: &Poly) -> Result<i32> {
        let br = &self.branches[b];
        sign_at_root(&e.rem(&br.modulus), &br.modulus, &br.real[k])
    }

    /// Sign of the real part of `e` at an upper root; zero only when `e`
    /// vanishes there exactly.
    pub fn sign_re_upper(&self, b: usize, k: usize, e: &Poly) -> Result<i32> {
        let br = &self.branches[b];
        let e = e.rem(&br.modulus);
        for round in 1..=crate::forms::precision_budget() {
            let bits = 8 * round + 24;
            let z = refine_complex(&br.modulus, &br.upper[k], bits)?.to_cinterval();
            if let Some(s) = CInterval::eval_poly_rounded(&e, &z, bits + 32).re.sign() {
                return Ok(s);
            }
            if round == 4 {
                let g = Poly::gcd(&e, &br.modulus);
                if g.deg() > 0 && count_in_rect(&g, &br.upper[k]).unwrap_or(1) > 0 {
                    return Ok(0);
                }
            }
        }
        Err(Error::PrecisionExhausted)
    }
}

impl Coincidences {
    /// The root as a parameter in the original coordinate `u = t/s`.
    pub fn param(&self, r: RootRef) -> Result<Param> {
        let b = match r {
            RootRef::Real(b, _) | RootRef::Upper(b, _) | RootRef::Lower(b, _) => b,
        };
        let br = &self.branches[b];
        let m = &br.modulus;
        if self.chart_x == identity_moebius() {
            return Ok(match r {
                RootRef::Real(_, k) => Param::Real { poly: m.clone(), u: br.real[k].clone() },
                RootRef::Upper(_, k) => Param::Complex { poly: m.clone(), u: br.upper[k].clone() },
                RootRef::Lower(_, k) => Param::Complex { poly: m.clone(), u: br.upper[k].conj() },
            });
        }
        // old u = u0 + 1/u'; new u' = 0 is the old [0:1]
        let u0 = self.chart_x[1][1].clone();
        let has_zero = m.coeff(0).is_zero();
        if let RootRef::Real(_, k) = r {
            if has_zero && br.real[k].contains(&Rat::zero()) {
                return Ok(Param::Infinity);
            }
        }
        let shift = m.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
        let rev = Poly::new(m.coeffs()[shift..].iter().rev().cloned().collect());
        let old = rev.compose(&(&Poly::x() - &Poly::constant(u0.clone()))).monic();
        let candidates: Vec<Param> = match r {
            RootRef::Real(..) => isolate_roots(&old).0.into_iter().map(|u| Param::Real { poly: old.clone(), u }).collect(),
            _ => isolate_roots(&old).1
                .into_iter()
                .flat_map(|u| {
                    [Param::Complex { poly: old.clone(), u: u.clone() }, Param::Complex { poly: old.clone(), u: u.conj() }]
                })
                .collect(),
        };
        let one = CInterval::point(&GaussRat::new(ri(1), ri(0)));
        let shift = CInterval::point(&GaussRat::new(u0, ri(0)));
        for round in 1..=crate::forms::precision_budget() {
            let bits = 8 * round + 8;
            let z = self.enclosure(r, bits)?;
            let mut hit = None;
            let mut hits = 0;
            for c in &candidates {
                let w = c.enclosure(bits)?;
                if (&(&w - &shift) * &z).intersects(&one) {
                    hits += 1;
                    hit = Some(c);
                }
            }
            if hits == 1 {
                return Ok(hit.unwrap().clone());
            }
        }
        Err(Error::PrecisionExhausted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_has_no_coincidences() {
        let forms = vec![BinaryForm::from_ints(&[1, 0, 1]), BinaryForm::from_ints(&[1, 0, -1]), BinaryForm::from_ints(&[0, 2, 0])];
        let c = self_coincidences(&forms).unwrap();
        assert_eq!(c.root_count(), 0);
    }

    #[test]
    fn nodal_cubic() {
        // [s(s^2 - t^2) : t(s^2 - t^2) : s^3]: u = 1 and u = -1 both map to [0:0:1]
        let forms = vec![
            BinaryForm::from_ints(&[1, 0, -1, 0]),
            BinaryForm::from_ints(&[0, 1, 0, -1]),
            BinaryForm::from_ints(&[1, 0, 0, 0]),
        ];
        let c = self_coincidences(&forms).unwrap();
        assert_eq!(c.root_count(), 2);
        assert_eq!(c.real_roots().count(), 2);
    }

    #[test]
    fn cusp_is_separated() {
        // [s^3 : s t^2 : t^3] has a cusp at [1:0]
        let forms = vec![
            BinaryForm::from_ints(&[1, 0, 0, 0]),
            BinaryForm::from_ints(&[0, 0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 0, 1]),
        ];
        let c = self_coincidences(&forms).unwrap();
        assert_eq!(c.root_count(), 0);
        assert_eq!(c.cusp_count(), 1);
    }
}
