//! Exact Q(i)-rational roots of univariate polynomials.
//!
//! Degrees one and two are solved in closed form (square roots are taken
//! exactly in Q(i)). Higher degrees find the roots modulo an inert prime,
//! lift them p-adically and keep the lifts that are exact roots: for a
//! primitive integer polynomial with leading coefficient `a_n`, `a_n·r` is a
//! Gaussian integer bounded by the Cauchy bound. Anything that does not split
//! is returned as a residual factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp2::{primes, Field};
use super::{GaussianRational as G, Rational, UPoly};

/// Distinct Q(i) roots with multiplicities, plus the residual cofactor
/// (monic, without Q(i) roots unless the search limits were hit).
pub fn univariate_roots(f: &UPoly) -> (Vec<(G, u32)>, UPoly) {
    if f.is_constant() {
        return (Vec::new(), UPoly::one());
    }
    let sf = f.squarefree();
    let mut roots = Vec::new();
    split_squarefree(&sf, &mut roots);
    let mut residual = f.monic();
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let m = residual.root_multiplicity(&r);
        debug_assert!(m > 0);
        residual = residual.exact_div(&UPoly::linear_root(&r).pow(m as u32)).expect("root divides");
        out.push((r, m as u32));
    }
    (out, residual.monic())
}

fn split_squarefree(f: &UPoly, roots: &mut Vec<G>) {
    let mut f = f.monic();
    if f.coeff(0).is_zero() && !f.is_constant() {
        roots.push(G::zero());
        f = f.exact_div(&UPoly::monomial(G::one(), 1)).unwrap();
    }
    match f.degree() {
        None | Some(0) => {}
        Some(1) => roots.push(-&f.coeff(0)),
        Some(2) => {
            // x^2 + b x + c
            let b = f.coeff(1);
            let c = f.coeff(0);
            let disc = &(&b * &b) - &(&c * &G::from_int(4));
            if let Some(s) = disc.sqrt() {
                let half = G::from_fracs(1, 2, 0, 1);
                roots.push(&(&(-&b) + &s) * &half);
                roots.push(&(&(-&b) - &s) * &half);
            }
        }
        Some(_) => roots.extend(lifted_roots(&f)),
    }
}

pub(super) type GInt = (BigInt, BigInt);

pub(super) fn gmul(a: &GInt, b: &GInt) -> GInt {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

pub(super) fn gnorm(a: &GInt) -> BigInt {
    &a.0 * &a.0 + &a.1 * &a.1
}

/// Exact division in Z[i], if it divides.
pub(super) fn gdiv_exact(a: &GInt, b: &GInt) -> Option<GInt> {
    let n = gnorm(b);
    let conj = (b.0.clone(), -b.1.clone());
    let num = gmul(a, &conj);
    if (&num.0 % &n).is_zero() && (&num.1 % &n).is_zero() {
        Some((num.0 / &n, num.1 / &n))
    } else {
        None
    }
}

fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    // nearest integer to a/n, n > 0
    let two = BigInt::from(2);
    (a * &two + n).div_floor(&(n * &two))
}

pub(super) fn ggcd(a: &GInt, b: &GInt) -> GInt {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !(y.0.is_zero() && y.1.is_zero()) {
        let n = gnorm(&y);
        let num = gmul(&x, &(y.0.clone(), -y.1.clone()));
        let q = (round_div(&num.0, &n), round_div(&num.1, &n));
        let qy = gmul(&q, &y);
        let r = (&x.0 - &qy.0, &x.1 - &qy.1);
        x = y;
        y = r;
    }
    x
}

pub(super) fn to_gaussian_integer_coeffs(f: &UPoly) -> Vec<GInt> {
    let mut l = BigInt::one();
    for c in f.coeffs() {
        l = l.lcm(&c.denominator_lcm());
    }
    let lr = Rational::from_integer(l);
    f.coeffs()
        .iter()
        .map(|c| {
            let s = c * &G::from_rational(lr.clone());
            s.as_gaussian_integer().expect("cleared denominators")
        })
        .collect()
}

type Residue = (BigInt, BigInt);

/// Arithmetic in Z[i] / (m).
struct Ring {
    m: BigInt,
}

impl Ring {
    fn red(&self, a: &GInt) -> Residue {
        (a.0.mod_floor(&self.m), a.1.mod_floor(&self.m))
    }
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        self.red(&gmul(a, b))
    }
    fn eval(&self, f: &[GInt], x: &Residue) -> Residue {
        let mut acc = (BigInt::zero(), BigInt::zero());
        for c in f.iter().rev() {
            let t = gmul(&acc, x);
            acc = self.red(&(t.0 + &c.0, t.1 + &c.1));
        }
        acc
    }
    fn inv(&self, a: &Residue) -> Option<Residue> {
        let n = gnorm(a).mod_floor(&self.m);
        let ni = n.modinv(&self.m)?;
        Some(self.red(&(&a.0 * &ni, -&a.1 * &ni)))
    }
}

fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    if x * 2 > *m {
        x - m
    } else {
        x.clone()
    }
}

fn l1(a: &GInt) -> BigInt {
    a.0.abs() + a.1.abs()
}

/// Q(i) roots of a squarefree polynomial of degree at least three.
fn lifted_roots(f: &UPoly) -> Vec<G> {
    let ints = to_gaussian_integer_coeffs(f);
    let lead = ints.last().expect("nonconstant").clone();
    let deriv: Vec<GInt> = ints
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| (&c.0 * k, &c.1 * k))
        .collect();
    // components of lead·r are at most this in absolute value
    let bound = l1(&lead) + ints.iter().map(l1).max().unwrap_or_default();
    let Some(field) = primes().map(|p| Field { p }).find(|fd| {
        let fp = fd.reduce_poly(&ints);
        fp.len() == ints.len() && fd.gcd(fp.clone(), fd.derivative(&fp)).len() == 1
    }) else {
        return Vec::new();
    };
    let p = BigInt::from(field.p);
    let target = &bound * 2 + 1;
    let mut out = Vec::new();
    for r0 in field.roots(&field.reduce_poly(&ints)) {
        let mut r: Residue = (BigInt::from(r0.re), BigInt::from(r0.im));
        let mut m = p.clone();
        // Newton steps double the p-adic precision
        while m <= target {
            m = &m * &m;
            let ring = Ring { m: m.clone() };
            let num = ring.eval(&ints, &r);
            let Some(di) = ring.inv(&ring.eval(&deriv, &r)) else {
                break;
            };
            let step = ring.mul(&num, &di);
            r = ring.red(&(&r.0 - &step.0, &r.1 - &step.1));
        }
        let ring = Ring { m: m.clone() };
        let scaled = ring.mul(&r, &ring.red(&lead));
        let cand = (symmetric(&scaled.0, &m), symmetric(&scaled.1, &m));
        if cand.0.abs() > bound || cand.1.abs() > bound {
            continue;
        }
        let num = G::new(Rational::from_integer(cand.0), Rational::from_integer(cand.1));
        let den = G::new(Rational::from_integer(lead.0.clone()), Rational::from_integer(lead.1.clone()));
        let root = &num / &den;
        if f.eval(&root).is_zero() {
            out.push(root);
        }
    }
    out
}
