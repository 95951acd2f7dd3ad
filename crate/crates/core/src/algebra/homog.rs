//! Homogeneous bivariate polynomials in `z, w` over Q(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::gaussian::parse_rational;
use super::roots::univariate_roots;
use super::{GaussianRational as G, P1Point, UPoly};
use crate::error::{Error, Result};

/// A form of fixed degree `d`; each term `c·z^e·w^(d-e)` is stored as `(e, c)`.
///
/// Terms are sorted strictly by z-exponent and carry no zero coefficients.
/// The zero form keeps its degree and has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    degree: u32,
    terms: Vec<(u32, G)>,
}

impl HomogPoly {
    pub fn zero(degree: u32) -> Self {
        Self { degree, terms: Vec::new() }
    }

    pub fn constant(c: G) -> Self {
        Self::from_dense(0, vec![c])
    }

    pub fn one() -> Self {
        Self::constant(G::one())
    }

    /// `c·z^ez·w^ew`.
    pub fn monomial(c: G, ez: u32, ew: u32) -> Self {
        let degree = ez + ew;
        if c.is_zero() {
            return Self::zero(degree);
        }
        Self { degree, terms: vec![(ez, c)] }
    }

    pub fn z() -> Self {
        Self::monomial(G::one(), 1, 0)
    }

    pub fn w() -> Self {
        Self::monomial(G::one(), 0, 1)
    }

    /// The linear form `a·z + b·w`.
    pub fn linear(a: G, b: G) -> Self {
        Self::from_dense(1, vec![b, a])
    }

    /// The linear form vanishing exactly at `t`.
    pub fn vanishing_at(t: &P1Point) -> Self {
        Self::linear(t.w().clone(), -t.z())
    }

    /// Build from `(z-exponent, w-exponent, coefficient)` terms, merging duplicates.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (u32, u32, G)>) -> Result<Self> {
        let mut dense = vec![G::zero(); degree as usize + 1];
        for (ez, ew, c) in terms {
            if ez + ew != degree {
                return Err(Error::DegenerateInput(format!(
                    "term z^{ez} w^{ew} does not have degree {degree}"
                )));
            }
            dense[ez as usize] += &c;
        }
        Ok(Self::from_dense(degree, dense))
    }

    /// From coefficients indexed by z-exponent; `coeffs.len()` must not exceed `degree + 1`.
    pub fn from_dense(degree: u32, coeffs: Vec<G>) -> Self {
        assert!(coeffs.len() <= degree as usize + 1, "too many coefficients for degree");
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        Self { degree, terms }
    }

    pub fn to_dense(&self) -> Vec<G> {
        let mut out = vec![G::zero(); self.degree as usize + 1];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Terms as `(z-exponent, coefficient)`, sorted by z-exponent.
    pub fn terms(&self) -> &[(u32, G)] {
        &self.terms
    }

    pub fn coeff(&self, ez: u32) -> G {
        self.terms
            .binary_search_by_key(&ez, |(e, _)| *e)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of the term with the highest z-exponent.
    pub fn leading(&self) -> Option<&G> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn scale(&self, c: &G) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self { degree: self.degree, terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Scaled so the highest z-exponent term has coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, z: &G, w: &G) -> G {
        let zp: Vec<G> = powers(z, self.degree);
        let wp: Vec<G> = powers(w, self.degree);
        let mut acc = G::zero();
        for (e, c) in &self.terms {
            acc += &(&(c * &zp[*e as usize]) * &wp[(self.degree - e) as usize]);
        }
        acc
    }

    pub fn eval_at(&self, t: &P1Point) -> G {
        self.eval(t.z(), t.w())
    }

    /// `∂/∂z`, a form of degree `d - 1` (degree 0 stays 0).
    pub fn dz(&self) -> Self {
        let d = self.degree.saturating_sub(1);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| *e > 0)
            .map(|(e, c)| (e - 1, c * &G::from_int(*e as i64)))
            .collect();
        Self { degree: d, terms }
    }

    /// `∂/∂w`.
    pub fn dw(&self) -> Self {
        let d = self.degree.saturating_sub(1);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| *e < self.degree)
            .map(|(e, c)| (*e, c * &G::from_int((self.degree - e) as i64)))
            .collect();
        Self { degree: d, terms }
    }

    /// The affine polynomial `p(x, 1)`.
    pub fn dehomogenize_w(&self) -> UPoly {
        UPoly::new(self.to_dense())
    }

    /// The affine polynomial `p(1, x)`.
    pub fn dehomogenize_z(&self) -> UPoly {
        let mut dense = self.to_dense();
        dense.reverse();
        UPoly::new(dense)
    }

    /// Inverse of [`dehomogenize_w`](Self::dehomogenize_w) at a chosen degree.
    pub fn homogenize_w(u: &UPoly, degree: u32) -> Self {
        assert!(u.degree().is_none_or(|d| d <= degree as usize), "degree too small");
        Self::from_dense(degree, u.coeffs().to_vec())
    }

    /// Inverse of [`dehomogenize_z`](Self::dehomogenize_z) at a chosen degree.
    pub fn homogenize_z(u: &UPoly, degree: u32) -> Self {
        assert!(u.degree().is_none_or(|d| d <= degree as usize), "degree too small");
        let mut dense = vec![G::zero(); degree as usize + 1];
        for (e, c) in u.coeffs().iter().enumerate() {
            dense[degree as usize - e] = c.clone();
        }
        Self::from_dense(degree, dense)
    }

    /// `p(a z + b w, c z + d w)`.
    pub fn substitute(&self, a: &G, b: &G, c: &G, d: &G) -> Self {
        self.substitute_forms(&Self::linear(a.clone(), b.clone()), &Self::linear(c.clone(), d.clone()))
    }

    /// `p(f, g)` for forms `f`, `g` of equal degree.
    pub fn substitute_forms(&self, f: &Self, g: &Self) -> Self {
        assert_eq!(f.degree, g.degree, "substituted forms must have equal degree");
        let fp = powers_poly(f, self.degree);
        let gp = powers_poly(g, self.degree);
        let mut acc = Self::zero(self.degree * f.degree);
        for (e, coef) in &self.terms {
            let t = &fp[*e as usize] * &gp[(self.degree - e) as usize];
            acc = &acc + &t.scale(coef);
        }
        acc
    }

    /// `p(z^k, w^k)`.
    pub fn inflate(&self, k: u32) -> Self {
        Self {
            degree: self.degree * k,
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || divisor.degree > self.degree {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.degree - divisor.degree));
        }
        let (ws, wd) = (self.w_valuation(), divisor.w_valuation());
        if wd > ws {
            return None;
        }
        let q = self.dehomogenize_w().exact_div(&divisor.dehomogenize_w())?;
        let qd = self.degree - divisor.degree;
        if q.degree().unwrap_or(0) > qd as usize {
            return None;
        }
        Some(Self::homogenize_w(&q, qd))
    }

    /// Power of `w` dividing `self` (the order of vanishing at `[1, 0]`).
    fn w_valuation(&self) -> u32 {
        match self.terms.last() {
            Some((e, _)) => self.degree - e,
            None => u32::MAX,
        }
    }

    /// Order of vanishing at `t`. Panics on the zero form.
    pub fn valuation_at(&self, t: &P1Point) -> u32 {
        assert!(!self.is_zero(), "valuation of the zero form");
        match t.affine_value() {
            None => self.w_valuation(),
            Some(r) => self.dehomogenize_w().root_multiplicity(&r) as u32,
        }
    }

    /// Monic gcd of two forms. Fails when both are zero.
    pub fn gcd(p: &Self, q: &Self) -> Result<Self> {
        match (p.is_zero(), q.is_zero()) {
            (true, true) => Err(Error::DegenerateInput("gcd of two zero polynomials".into())),
            (true, false) => Ok(q.monic()),
            (false, true) => Ok(p.monic()),
            (false, false) => {
                let wv = p.w_valuation().min(q.w_valuation());
                let g = UPoly::gcd(&p.dehomogenize_w(), &q.dehomogenize_w());
                let gd = g.degree().unwrap_or(0) as u32;
                let affine_part = Self::homogenize_w(&g, gd);
                Ok((&affine_part * &Self::w().pow(wv)).monic())
            }
        }
    }

    /// Gcd of a list of forms, ignoring zero entries.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut acc: Option<Self> = None;
        for p in polys {
            if p.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => p.monic(),
                Some(a) if a.degree == 0 => return Ok(a),
                Some(a) => Self::gcd(&a, p)?,
            });
        }
        acc.ok_or_else(|| Error::DegenerateInput("gcd of zero polynomials".into()))
    }

    /// Square-free part (monic).
    pub fn squarefree(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let wv = self.w_valuation().min(1);
        let sf = self.dehomogenize_w().squarefree();
        let d = sf.degree().unwrap_or(0) as u32;
        (&Self::homogenize_w(&sf, d) * &Self::w().pow(wv)).monic()
    }

    /// Q(i)-rational roots on P¹ with multiplicity, and the root-free residual.
    ///
    /// The product of `vanishing_at(t)^m` over the roots times the residual
    /// equals `self` up to a nonzero scalar.
    pub fn linear_roots(&self) -> (Vec<(P1Point, u32)>, HomogPoly) {
        assert!(!self.is_zero(), "roots of the zero form");
        let mut out = Vec::new();
        let wv = self.w_valuation();
        if wv > 0 {
            out.push((P1Point::one_zero(), wv));
        }
        let (roots, residual) = univariate_roots(&self.dehomogenize_w());
        for (r, m) in roots {
            out.push((P1Point::affine(r), m));
        }
        out.sort();
        let rd = residual.degree().unwrap_or(0) as u32;
        (out, Self::homogenize_w(&residual, rd))
    }
}

fn powers(x: &G, n: u32) -> Vec<G> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = G::one();
    for _ in 0..=n {
        out.push(acc.clone());
        acc = &acc * x;
    }
    out
}

fn powers_poly(p: &HomogPoly, n: u32) -> Vec<HomogPoly> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = HomogPoly::one();
    for _ in 0..=n {
        out.push(acc.clone());
        acc = &acc * p;
    }
    out
}

impl Add for &HomogPoly {
    type Output = HomogPoly;
    fn add(self, rhs: &HomogPoly) -> HomogPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut dense = self.to_dense();
        for (e, c) in &rhs.terms {
            dense[*e as usize] += c;
        }
        HomogPoly::from_dense(self.degree, dense)
    }
}

impl Sub for &HomogPoly {
    type Output = HomogPoly;
    fn sub(self, rhs: &HomogPoly) -> HomogPoly {
        self + &(-rhs)
    }
}

impl Neg for &HomogPoly {
    type Output = HomogPoly;
    fn neg(self) -> HomogPoly {
        HomogPoly { degree: self.degree, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &HomogPoly {
    type Output = HomogPoly;
    fn mul(self, rhs: &HomogPoly) -> HomogPoly {
        let degree = self.degree + rhs.degree;
        if self.is_zero() || rhs.is_zero() {
            return HomogPoly::zero(degree);
        }
        let mut dense = vec![G::zero(); degree as usize + 1];
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                dense[(ea + eb) as usize] += &(a * b);
            }
        }
        HomogPoly::from_dense(degree, dense)
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (deg {})", self.degree);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| format!("({c})z^{e}w^{}", self.degree - e))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    ez: u32,
    ew: u32,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct HomogJson {
    degree: u32,
    terms: Vec<TermJson>,
}

impl Serialize for HomogPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HomogJson {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    ez: *e,
                    ew: self.degree - e,
                    re: c.re.to_string(),
                    im: c.im.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = HomogJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let re = parse_rational(&t.re).map_err(D::Error::custom)?;
            let im = parse_rational(&t.im).map_err(D::Error::custom)?;
            terms.push((t.ez, t.ew, G::new(re, im)));
        }
        HomogPoly::from_terms(raw.degree, terms).map_err(D::Error::custom)
    }
}
