//! Integer polynomial kernels behind `Poly::gcd`: a primitive pseudo-remainder
//! sequence over `Z`, and a modular degree probe that settles the common
//! coprime case without any coefficient growth.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Primes just below `2^62`.
const PRIMES: [u64; 3] = [4611686018427387847, 4611686018427387817, 4611686018427387787];

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &lr * c;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd of two nonzero integer polynomials (ascending
/// coefficients), leading coefficient positive.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if coprime_mod_p(&a, &b) {
        return vec![BigInt::from(1)];
    }
    while !b.is_empty() {
        let r = primitive(prem(&a, &b));
        a = b;
        b = r;
    }
    if a.last().is_some_and(|x| x.is_negative()) {
        for x in a.iter_mut() {
            *x = -&*x;
        }
    }
    a
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        let db = b.len() - 1;
        while a.len() > db && !a.is_empty() {
            let q = mulmod(*a.last().unwrap(), inv, p);
            let shift = a.len() - 1 - db;
            for (j, c) in b.iter().enumerate() {
                let s = mulmod(q, *c, p);
                a[shift + j] = (a[shift + j] + p - s) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when some prime not dividing either leading coefficient sees a
/// constant gcd, which forces the gcd over `Q` to be constant as well.
fn coprime_mod_p(a: &[BigInt], b: &[BigInt]) -> bool {
    for p in PRIMES {
        let (ra, rb) = (reduce(a, p), reduce(b, p));
        if ra.len() != a.len() || rb.len() != b.len() {
            continue;
        }
        return gcd_degree_mod(ra, rb, p) == 0;
    }
    false
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut r) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, descending.
fn primes() -> impl Iterator<Item = u64> {
    (0..).map(|k| (1u64 << 62) - 1 - 2 * k).filter(|&n| is_prime(n))
}

/// Inverse of `a` modulo `m` over `F_p`, both reduced with nonzero leading
/// coefficients.
fn inverse_mod_p(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    // invariant: s * a = r0 and t * a = r1 modulo m
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (vec![], vec![1]);
    while !r1.is_empty() {
        let inv = powmod(*r1.last().unwrap(), p - 2, p);
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut r = r0.clone();
        while r.len() >= r1.len() && !r.is_empty() {
            let c = mulmod(*r.last().unwrap(), inv, p);
            let shift = r.len() - r1.len();
            q[shift] = c;
            for (j, b) in r1.iter().enumerate() {
                let v = mulmod(c, *b, p);
                r[shift + j] = (r[shift + j] + p - v) % p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        // s_new = s0 - q s1
        let mut sn = s0.clone();
        sn.resize(sn.len().max(q.len() + s1.len()), 0);
        for (i, qi) in q.iter().enumerate() {
            for (j, sj) in s1.iter().enumerate() {
                let v = mulmod(*qi, *sj, p);
                sn[i + j] = (sn[i + j] + p - v) % p;
            }
        }
        while sn.last() == Some(&0) {
            sn.pop();
        }
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, sn);
    }
    if r0.len() != 1 {
        return None;
    }
    let inv = powmod(r0[0], p - 2, p);
    Some(s0.into_iter().map(|c| mulmod(c, inv, p)).collect())
}

/// `n / d` with `|n|, d <= sqrt(N / 2)` and `n = c d mod N`.
fn rational_reconstruction(c: &BigInt, modulus: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = (modulus / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (modulus.clone(), c.mod_floor(modulus));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::from(1));
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(if t1.is_negative() { (-r1, -t1) } else { (r1, t1) })
}

/// Inverse of `a` modulo `m` over `Q` (integer coefficients, ascending),
/// as numerator/denominator pairs; `None` if the primes tried all fail.
pub(crate) fn inverse_mod(a: &[BigInt], m: &[BigInt], check: impl Fn(&[(BigInt, BigInt)]) -> bool) -> Option<Vec<(BigInt, BigInt)>> {
    let n = m.len() - 1;
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n];
    let mut modulus = BigInt::from(1);
    let mut failures = 0;
    let mut used = 0;
    for p in primes() {
        let (ra, rm) = (reduce(a, p), reduce(m, p));
        if rm.len() != m.len() {
            continue;
        }
        let Some(mut u) = inverse_mod_p(&ra, &rm, p) else {
            failures += 1;
            if failures > 8 {
                return None;
            }
            continue;
        };
        u.resize(n, 0);
        let pb = BigInt::from(p);
        // CRT: acc + modulus * k = u mod p
        let minv = BigInt::from(powmod((&modulus % &pb).to_u64().unwrap(), p - 2, p));
        for (x, ui) in acc.iter_mut().zip(&u) {
            let diff = (BigInt::from(*ui) - &*x).mod_floor(&pb);
            let k = (diff * &minv).mod_floor(&pb);
            *x += &modulus * k;
        }
        modulus *= pb;
        used += 1;
        if used % 2 == 0 || used < 4 {
            let rec: Option<Vec<(BigInt, BigInt)>> = acc.iter().map(|c| rational_reconstruction(c, &modulus)).collect();
            if let Some(rec) = rec {
                if check(&rec) {
                    return Some(rec);
                }
            }
        }
        if used > 4000 {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integer_gcd() {
        // (x - 1)(x + 2) and (x - 1)(3x + 5)
        assert_eq!(gcd(&v(&[-2, 1, 1]), &v(&[-5, 2, 3])), v(&[-1, 1]));
        assert_eq!(gcd(&v(&[1, 0, 1]), &v(&[-1, 0, 1])), v(&[1]));
        assert_eq!(gcd(&v(&[0, 0, 2]), &v(&[0, 4])), v(&[0, 1]));
    }

    #[test]
    fn modular_inverse() {
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime((1 << 62) - 1));
        // (x + 3)^-1 mod x^2 + 1 is (3 - x)/10
        let u = inverse_mod(&v(&[3, 1]), &v(&[1, 0, 1]), |_| true).unwrap();
        let want = [(BigInt::from(3), BigInt::from(10)), (BigInt::from(-1), BigInt::from(10))];
        assert_eq!(u, want);
    }
}
