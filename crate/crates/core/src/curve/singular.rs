use std::fmt;

use num_traits::Zero;

use super::coincidence::{self_coincidences, Coincidences, RootRef};
use super::RationalCurve;
use crate::error::{Error, Result};
use crate::forms::{
    rat_to_f64, refine_complex, refine_real, BinaryForm, CInterval, GaussRat, Interval, Poly, Rat, Rect, RootBox,
};
use crate::projgeom::ProjPoint;

/// A parameter `[1:u]`, `u` an algebraic number located by a box around a
/// root of `poly`, or the point `[0:1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Real { poly: Poly, u: Interval },
    Complex { poly: Poly, u: Rect },
    Infinity,
}

impl Param {
    pub fn is_real(&self) -> bool {
        !matches!(self, Param::Complex { .. })
    }

    /// Enclosure of `u` refined to width about `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> Result<CInterval> {
        match self {
            Param::Real { poly, u } => Ok(CInterval::real(refine_real(poly, u, bits))),
            Param::Complex { poly, u } => {
                if u.y1 <= Rat::zero() {
                    Ok(refine_complex(poly, &u.conj(), bits)?.conj().to_cinterval())
                } else {
                    Ok(refine_complex(poly, u, bits)?.to_cinterval())
                }
            }
            Param::Infinity => Err(Error::Precondition("the parameter [0:1] has no affine value".into())),
        }
    }

    /// `(re, im)` of `u`; infinite for `[0:1]`.
    pub fn approx(&self) -> (f64, f64) {
        match self.enclosure(60) {
            Ok(z) => {
                let c = z.center();
                (rat_to_f64(&c.re), rat_to_f64(&c.im))
            }
            Err(_) => (f64::INFINITY, 0.0),
        }
    }

    /// The exact value when `u` is rational.
    pub fn exact(&self) -> Option<(Rat, Rat)> {
        match self {
            Param::Infinity => Some((Rat::zero(), Rat::from_integer(1.into()))),
            Param::Real { poly, u } => {
                let iv = refine_real(poly, u, 128);
                let r = simplest_between(&iv.lo, &iv.hi);
                poly.eval(&r).is_zero().then(|| (Rat::from_integer(1.into()), r))
            }
            Param::Complex { .. } => None,
        }
    }

    /// The exact value when `u` is a Gaussian rational.
    pub fn exact_gauss(&self) -> Option<GaussRat> {
        match self {
            Param::Complex { poly, .. } => {
                let z = self.enclosure(128).ok()?;
                let g = GaussRat::new(simplest_between(&z.re.lo, &z.re.hi), simplest_between(&z.im.lo, &z.im.hi));
                poly.eval_gauss(&g).is_zero().then_some(g)
            }
            Param::Infinity => None,
            Param::Real { .. } => self.exact().map(|(s, t)| GaussRat::real(t / s)),
        }
    }

    fn from_root_box(b: &RootBox, poly: &Poly) -> Vec<Param> {
        match b {
            RootBox::Real { u, .. } => vec![Param::Real { poly: poly.clone(), u: u.clone() }],
            RootBox::Infinity { .. } => vec![Param::Infinity],
            RootBox::Conjugate { u, .. } => {
                vec![Param::Complex { poly: poly.clone(), u: u.clone() }, Param::Complex { poly: poly.clone(), u: u.conj() }]
            }
        }
    }
}

/// The rational of least denominator in `[lo, hi]`.
pub(crate) fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    let fl = lo.floor();
    if &fl == lo || fl.clone() + Rat::from_integer(1.into()) <= *hi {
        // an integer lies in the interval; take the one closest to zero
        let zero = Rat::zero();
        if lo <= &zero && &zero <= hi {
            return zero;
        }
        return if lo > &zero { lo.ceil() } else { hi.floor() };
    }
    // lo and hi share the integer part a: recurse on the reciprocals
    let one = Rat::from_integer(1.into());
    let inner = simplest_between(&(&one / (hi - &fl)), &(&one / (lo - &fl)));
    fl + one / inner
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Infinity => write!(f, "[0:1]"),
            _ => {
                let (re, im) = self.approx();
                if im == 0.0 {
                    write!(f, "[1:{re:.6}]")
                } else {
                    write!(f, "[1:{re:.6}{im:+.6}i]")
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoublePointKind {
    /// Two real parameters.
    RealCrossing,
    /// A conjugate pair of parameters with a real image.
    Solitary,
    /// Two non-real parameters that are not conjugate; the image is not real.
    Complex,
    /// A single parameter where the derivative is proportional to the point.
    Cusp,
}

impl fmt::Display for DoublePointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DoublePointKind::RealCrossing => "real crossing",
            DoublePointKind::Solitary => "solitary",
            DoublePointKind::Complex => "complex",
            DoublePointKind::Cusp => "cusp",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DoublePoint {
    pub kind: DoublePointKind,
    /// Two parameters, or one for a cusp.
    pub params: Vec<Param>,
    /// The image point when its coordinates are rational.
    pub image: Option<ProjPoint>,
    /// Floating point image, scaled so the largest coordinate is 1.
    pub image_approx: Vec<(f64, f64)>,
}

/// Outcome of the immersion test: the parameters where all 2x2 minors of
/// the partial derivatives vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct Immersion {
    pub jacobian_gcd: BinaryForm,
    pub witnesses: Vec<Param>,
}

impl Immersion {
    pub fn is_immersion(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NonsingularCertificate {
    pub double_points: Vec<DoublePoint>,
    pub cusps: Vec<DoublePoint>,
    /// Squarefree polynomial in the first parameter of a coincident pair.
    pub eliminant: Poly,
    pub jacobian_gcd: BinaryForm,
}

impl NonsingularCertificate {
    pub fn is_nonsingular(&self) -> bool {
        self.double_points.is_empty() && self.cusps.is_empty()
    }
}

/// Image of the roots of `m` when it is one rational point: every
/// coordinate is a constant multiple of a unit modulo `m`.
fn exact_image(fx: &[Poly], m: &Poly) -> Option<ProjPoint> {
    let red: Vec<Poly> = fx.iter().map(|f| f.rem(m)).collect();
    let inv = red.iter().find_map(|f| f.inverse_mod(m))?;
    let coords: Option<Vec<Rat>> = red
        .iter()
        .map(|f| {
            let r = (f * &inv).rem(m);
            r.is_constant().then(|| r.coeff(0).clone())
        })
        .collect();
    ProjPoint::real(coords?).ok()
}

pub(crate) fn approx_image(forms: &[BinaryForm], p: &Param) -> Vec<(f64, f64)> {
    let vals: Vec<(f64, f64)> = match p {
        Param::Infinity => forms.iter().map(|f| (rat_to_f64(f.coeff(f.degree())), 0.0)).collect(),
        _ => {
            let (re, im) = p.approx();
            forms.iter().map(|f| f.to_poly().eval_c64(re, im)).collect()
        }
    };
    let big = vals.iter().copied().max_by(|a, b| a.0.hypot(a.1).total_cmp(&b.0.hypot(b.1))).unwrap_or((1.0, 0.0));
    let n = big.0 * big.0 + big.1 * big.1;
    vals.iter()
        .map(|&(a, b)| {
            // (a + bi) / big
            ((a * big.0 + b * big.1) / n, (b * big.0 - a * big.1) / n)
        })
        .collect()
}

/// Double points read off from coincident pairs, each unordered pair once.
pub(crate) fn double_points_from(forms: &[BinaryForm], co: &Coincidences) -> Result<Vec<DoublePoint>> {
    let mut out = Vec::new();
    for (r, p) in co.partners()? {
        if p <= r {
            continue;
        }
        let kind = match (r, p) {
            (RootRef::Real(..), RootRef::Real(..)) => DoublePointKind::RealCrossing,
            (RootRef::Upper(b, k), RootRef::Lower(b2, k2)) if b == b2 && k == k2 => DoublePointKind::Solitary,
            (RootRef::Real(..), _) | (_, RootRef::Real(..)) => {
                return Err(Error::Internal("real parameter paired with a non-real one".into()))
            }
            _ => DoublePointKind::Complex,
        };
        let b = match r {
            RootRef::Real(b, _) | RootRef::Upper(b, _) | RootRef::Lower(b, _) => b,
        };
        let params = vec![co.param(r)?, co.param(p)?];
        let image = match kind {
            DoublePointKind::Complex => None,
            _ => exact_image(&co.fx, &co.branches[b].modulus),
        };
        let image_approx = approx_image(forms, &params[0]);
        out.push(DoublePoint { kind, params, image, image_approx });
    }
    Ok(out)
}

impl RationalCurve {
    /// All pairs of distinct parameters with the same image, up to swap.
    /// Cusps are not included; they are found by `is_immersion`.
    pub fn double_points(&self) -> Result<Vec<DoublePoint>> {
        let co = self_coincidences(self.forms())?;
        double_points_from(self.forms(), &co)
    }

    /// Common roots of the minors `d_s k_i d_t k_j - d_t k_i d_s k_j`.
    pub fn is_immersion(&self) -> Immersion {
        let g = jacobian_gcd(self.forms());
        let mut witnesses = Vec::new();
        if g.degree() > 0 {
            let p = g.to_poly().squarefree();
            let boxes = g.isolate_roots(&Rat::new(1.into(), (1u64 << 40).into())).expect("nonzero form");
            for b in &boxes {
                witnesses.extend(Param::from_root_box(b, &p));
            }
        }
        Immersion { jacobian_gcd: g, witnesses }
    }

    /// No double points and no cusps, real or complex.
    pub fn is_nonsingular_knot(&self) -> Result<NonsingularCertificate> {
        let imm = self.is_immersion();
        let co = self_coincidences(self.forms())?;
        let double_points = double_points_from(self.forms(), &co)?;
        let cusps = imm
            .witnesses
            .iter()
            .map(|p| {
                let image = p.exact().map(|(s, t)| self.eval(&s, &t));
                DoublePoint {
                    kind: DoublePointKind::Cusp,
                    params: vec![p.clone()],
                    image,
                    image_approx: approx_image(self.forms(), p),
                }
            })
            .collect();
        Ok(NonsingularCertificate { double_points, cusps, eliminant: co.eliminant, jacobian_gcd: imm.jacobian_gcd })
    }
}

/// Gcd of the 2x2 minors of the matrix of partial derivatives.
pub(crate) fn jacobian_gcd(forms: &[BinaryForm]) -> BinaryForm {
    let ds: Vec<BinaryForm> = forms.iter().map(|f| f.ds()).collect();
    let dt: Vec<BinaryForm> = forms.iter().map(|f| f.dt()).collect();
    let d = ds[0].degree();
    let mut g = BinaryForm::zero(2 * d);
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let m = ds[i].mul(&dt[j]).sub(&dt[i].mul(&ds[j])).expect("equal degrees");
            if !m.is_zero() {
                g = BinaryForm::gcd(&g, &m);
            }
        }
    }
    g
}
