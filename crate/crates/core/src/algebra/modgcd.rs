//! Modular gcd over Z[i]: images in F_p[i] for primes p ≡ 3 (mod 4), where
//! the ring is the field F_{p²}, combined by CRT and checked by exact division.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fp2::{crt, primes, symmetric, Field, Fp2};
use super::roots::{gdiv_exact, ggcd, gmul, to_gaussian_integer_coeffs, GInt};
use super::{prs, GaussianRational as G, Rational, UPoly};

/// Past this many primes the remainder-sequence gcd takes over.
const MAX_PRIMES: usize = 400;

fn gzero(a: &GInt) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

/// Whether `g` divides `f` in Z[i][x]; `g` primitive.
fn divides(f: &[GInt], g: &[GInt]) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lg = g.last().unwrap();
    while r.last().is_some_and(gzero) {
        r.pop();
    }
    while r.len() > dg {
        let Some(q) = gdiv_exact(r.last().unwrap(), lg) else {
            return false;
        };
        let shift = r.len() - 1 - dg;
        for (j, c) in g.iter().enumerate() {
            let t = gmul(&q, c);
            let slot = &mut r[shift + j];
            *slot = (&slot.0 - &t.0, &slot.1 - &t.1);
        }
        while r.last().is_some_and(gzero) {
            r.pop();
        }
    }
    r.is_empty()
}

fn to_upoly(v: Vec<GInt>) -> UPoly {
    UPoly::new(v.into_iter().map(|(re, im)| G::new(Rational::from_integer(re), Rational::from_integer(im))).collect())
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(super) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_zero() || b.is_zero() {
        return prs::gcd(a, b);
    }
    let x = prs::primitive(to_gaussian_integer_coeffs(a));
    let y = prs::primitive(to_gaussian_integer_coeffs(b));
    if x.len() == 1 || y.len() == 1 {
        return UPoly::one();
    }
    // the primitive gcd's leading coefficient divides γ
    let gamma = ggcd(x.last().unwrap(), y.last().unwrap());
    let mut best: Option<usize> = None;
    let mut modulus = BigInt::one();
    let mut acc: Vec<(BigInt, BigInt)> = Vec::new();
    let mut last: Option<Vec<GInt>> = None;
    for p in primes().take(MAX_PRIMES) {
        let f = Field { p };
        let gm = f.reduce(&gamma);
        if f.reduce(x.last().unwrap()).is_zero() || f.reduce(y.last().unwrap()).is_zero() {
            continue;
        }
        let xa: Vec<Fp2> = x.iter().map(|c| f.reduce(c)).collect();
        let ya: Vec<Fp2> = y.iter().map(|c| f.reduce(c)).collect();
        let g = f.gcd(xa, ya);
        let deg = g.len() - 1;
        if deg == 0 {
            return UPoly::one();
        }
        match best {
            Some(d) if deg > d => continue, // unlucky prime
            Some(d) if deg == d => {
                let pb = BigInt::from(p);
                for (slot, c) in acc.iter_mut().zip(&g) {
                    let c = f.mul(*c, gm);
                    slot.0 = crt(&slot.0, &modulus, c.re, p);
                    slot.1 = crt(&slot.1, &modulus, c.im, p);
                }
                modulus *= pb;
            }
            _ => {
                // first prime, or every previous one was unlucky
                best = Some(deg);
                modulus = BigInt::from(p);
                acc = g
                    .iter()
                    .map(|&c| {
                        let c = f.mul(c, gm);
                        (BigInt::from(c.re), BigInt::from(c.im))
                    })
                    .collect();
                last = None;
                continue;
            }
        }
        let cand: Vec<GInt> = acc.iter().map(|(r, i)| (symmetric(r, &modulus), symmetric(i, &modulus))).collect();
        if last.as_ref() == Some(&cand) {
            let prim = prs::primitive(cand.clone());
            if divides(&x, &prim) && divides(&y, &prim) {
                return to_upoly(prim).monic();
            }
        }
        last = Some(cand);
    }
    prs::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[(i64, i64)]) -> UPoly {
        UPoly::new(c.iter().map(|&(a, b)| G::from_ints(a, b)).collect())
    }

    #[test]
    fn agrees_with_remainder_sequence() {
        let common = up(&[(3, -1), (0, 2), (5, 0)]);
        let a = &common * &up(&[(7, 1), (-2, 0), (1, 1), (4, 0)]);
        let b = &common * &up(&[(1, 0), (0, -9), (2, 3)]);
        let g = gcd(&a, &b);
        assert_eq!(g, prs::gcd(&a, &b));
        assert_eq!(g, common.monic());
    }

    #[test]
    fn coprime_inputs() {
        let a = up(&[(1, 0), (0, 1), (1, 0)]);
        let b = up(&[(2, 0), (1, 0)]);
        assert!(gcd(&a, &b).is_constant());
    }

    #[test]
    fn large_coefficients() {
        let big = up(&[(123456789, -987654321), (0, 0), (1, 0)]);
        let a = &(&big * &big) * &up(&[(1, 1), (3, 0)]);
        let b = &big * &up(&[(-5, 2), (0, 7), (11, 0)]);
        assert_eq!(gcd(&a, &b), big.monic());
    }
}
