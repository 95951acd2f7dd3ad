//! Polynomial gcd over Z[i] by primitive pseudo-remainder sequences, which
//! keeps coefficient growth in check where Euclid over Q(i) explodes.

use num_traits::Zero;

use super::roots::{gdiv_exact, ggcd, gmul, to_gaussian_integer_coeffs, GInt};
use super::{GaussianRational as G, Rational, UPoly};

fn is_zero(a: &GInt) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

fn trim(v: &mut Vec<GInt>) {
    while v.last().is_some_and(is_zero) {
        v.pop();
    }
}

pub(super) fn primitive(mut v: Vec<GInt>) -> Vec<GInt> {
    trim(&mut v);
    let mut c: Option<GInt> = None;
    for a in v.iter().filter(|a| !is_zero(a)) {
        c = Some(match c {
            None => a.clone(),
            Some(c) => ggcd(&c, a),
        });
        if c.as_ref().is_some_and(gnorm_is_one) {
            return v;
        }
    }
    match c {
        Some(c) => v.iter().map(|a| gdiv_exact(a, &c).expect("content divides")).collect(),
        None => v,
    }
}

fn gnorm_is_one(a: &GInt) -> bool {
    let n = &a.0 * &a.0 + &a.1 * &a.1;
    n == num_bigint::BigInt::from(1)
}

/// `lc(g)^e · f mod g`, leading terms cancelled one at a time.
fn pseudo_rem(f: &[GInt], g: &[GInt]) -> Vec<GInt> {
    let mut r = f.to_vec();
    let lg = g.last().unwrap();
    let dg = g.len() - 1;
    trim(&mut r);
    while r.len() > dg {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - dg;
        for a in r.iter_mut() {
            *a = gmul(a, lg);
        }
        for (j, c) in g.iter().enumerate() {
            let t = gmul(&lr, c);
            let slot = &mut r[shift + j];
            *slot = (&slot.0 - &t.0, &slot.1 - &t.1);
        }
        trim(&mut r);
    }
    r
}

/// Monic gcd of two polynomials; `gcd(0, 0) = 0`.
pub(super) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let mut x = primitive(to_gaussian_integer_coeffs(a));
    let mut y = primitive(to_gaussian_integer_coeffs(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        if y.len() == 1 {
            return UPoly::one();
        }
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            let coeffs = y
                .into_iter()
                .map(|(re, im)| G::new(Rational::from_integer(re), Rational::from_integer(im)))
                .collect();
            return UPoly::new(coeffs).monic();
        }
        x = y;
        y = primitive(r);
    }
}
