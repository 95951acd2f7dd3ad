//! Dense univariate polynomials over Q(i), used for affine-chart work.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::GaussianRational as G;

/// Polynomial with coefficients in ascending degree order; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<G>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(G::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: G) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(G::one())
    }

    /// `x - r`.
    pub fn linear_root(r: &G) -> Self {
        Self::new(vec![-r, G::one()])
    }

    pub fn monomial(c: G, e: usize) -> Self {
        let mut coeffs = vec![G::zero(); e];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[G] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<G> {
        self.coeffs
    }

    pub fn coeff(&self, e: usize) -> G {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&G> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &G) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    pub fn eval(&self, x: &G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(e, c)| c * &G::from_int(e as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![G::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        super::modgcd::gcd(a, b)
    }

    /// Largest `m` with `(x - r)^m | self`; `self` must be nonzero.
    pub fn root_multiplicity(&self, r: &G) -> usize {
        let mut p = self.clone();
        let lin = Self::linear_root(r);
        let mut m = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.div_rem(&lin).0;
            m += 1;
        }
        m
    }

    /// Square-free part, monic.
    pub fn squarefree(&self) -> Self {
        if self.is_constant() {
            return Self::one();
        }
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// `self(a x + b)`.
    pub fn compose_linear(&self, a: &G, b: &G) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![G::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| format!("({c})x^{e}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
