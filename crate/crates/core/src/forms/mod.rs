//! Exact scalars, univariate polynomials, binary forms, root isolation and
//! elimination.

mod binary;
mod bivariate;
mod certify;
mod complex_roots;
mod gauss;
mod interval;
mod intpoly;
mod modular;
mod poly;
mod resultant;
mod sturm;

pub use binary::{BinaryForm, RootBox};
pub use bivariate::Poly2;
pub use complex_roots::{count_in_rect, isolate_complex, isolate_roots, refine_complex, Rect};
pub use gauss::GaussRat;
pub use interval::{CInterval, Interval};
pub use modular::{split_gcd, Branch};
pub use poly::Poly;
pub use resultant::{augmented_sylvester_det, first_subresultant_y, resultant, resultant_y, sylvester_det, vandermonde_det};
pub(crate) use sturm::precision_budget;
pub use sturm::{isolate_real, real_root_count_in, refine_real, sign_at_root, SturmChain};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn ri(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // very large numerators/denominators: scale down by bit length
        let nb = r.numer().bits() as i64;
        let db = r.denom().bits() as i64;
        let shift = (nb - db).clamp(-2000, 2000);
        let scaled = if shift >= 0 {
            r / Rat::from_integer(BigInt::one() << shift as usize)
        } else {
            r * Rat::from_integer(BigInt::one() << (-shift) as usize)
        };
        scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
    })
}

/// Parses "n", "n/d" or a decimal such as "0.6".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.trim_start().starts_with('-');
        let ipart: BigInt = if ip.is_empty() || ip == "-" {
            BigInt::zero()
        } else {
            ip.parse().map_err(|_| bad())?
        };
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let fnum: BigInt = fp.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let frac = Rat::new(fnum, den);
        let ip = Rat::from_integer(ipart);
        return Ok(if neg { ip - frac } else { ip + frac });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn pow2(k: i64) -> Rat {
    if k >= 0 {
        Rat::from_integer(BigInt::one() << k as usize)
    } else {
        Rat::new(BigInt::one(), BigInt::one() << (-k) as usize)
    }
}

/// Largest multiple of 2^-bits not above `r`.
pub(crate) fn round_down(r: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits as usize;
    if r.denom() <= &scale {
        return r.clone();
    }
    let n = (r.numer() * &scale).div_floor(r.denom());
    Rat::new(n, scale)
}

/// Smallest multiple of 2^-bits not below `r`.
pub(crate) fn round_up(r: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits as usize;
    if r.denom() <= &scale {
        return r.clone();
    }
    let n = (r.numer() * &scale).div_ceil(r.denom());
    Rat::new(n, scale)
}

/// Least common multiple of the denominators of `values`.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Sign as -1, 0, 1.
pub(crate) fn sgn(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

