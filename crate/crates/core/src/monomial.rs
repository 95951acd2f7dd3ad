//! Monomial curves `ξ_k`, their diagonal symmetries and the representation `ι_n`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{GaussianRational as G, HomogPoly};
use crate::error::{Error, Result};
use crate::invariants::CurveMap;
use crate::linalg::Matrix;
use crate::projective::{MobiusTransform, ProjTransform};

/// A strictly decreasing tuple of positive exponents in ambient dimension `n ≥ len`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ExponentTuple {
    k: Vec<u32>,
    n: usize,
}

impl ExponentTuple {
    pub fn new(k: Vec<u32>, n: usize) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::InvalidTuple("empty exponent tuple".into()));
        }
        if k.contains(&0) {
            return Err(Error::InvalidTuple(format!("{k:?} has a non-positive entry")));
        }
        if k.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidTuple(format!("{k:?} is not strictly decreasing")));
        }
        if n < k.len() {
            return Err(Error::InvalidTuple(format!("{k:?} needs ambient dimension ≥ {}", k.len())));
        }
        Ok(Self { k, n })
    }

    /// `(n, n−1, …, 1)`.
    pub fn rational_normal(n: usize) -> Self {
        Self { k: (1..=n as u32).rev().collect(), n }
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of exponents; the curve spans a `P^len`.
    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> u32 {
        self.k[0]
    }

    pub fn gcd(&self) -> u32 {
        self.k.iter().fold(0, |g, &e| g.gcd(&e))
    }

    pub fn is_proper(&self) -> bool {
        self.gcd() == 1
    }

    pub fn is_rational_normal(&self) -> bool {
        self.k == Self::rational_normal(self.k.len()).k
    }

    /// Gaps `k_i − k_{i+1}` with `k_{len+1} = 0`.
    pub fn gaps(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.k.windows(2).map(|w| w[0] - w[1]).collect();
        g.push(*self.k.last().unwrap());
        g
    }

    fn from_gaps(gaps: &[u32], n: usize) -> Self {
        let mut k: Vec<u32> = gaps
            .iter()
            .rev()
            .scan(0, |acc, g| {
                *acc += g;
                Some(*acc)
            })
            .collect();
        k.reverse();
        Self { k, n }
    }

    /// Tuple of `ξ_k ∘ swap` read in reverse coordinate order; same curve up to projective equivalence.
    pub fn reversed(&self) -> Self {
        let mut g = self.gaps();
        g.reverse();
        Self::from_gaps(&g, self.n)
    }

    /// Lexicographically smaller of the tuple and its reversal.
    pub fn canonical(&self) -> Self {
        let r = self.reversed();
        if r.k < self.k {
            r
        } else {
            self.clone()
        }
    }

    /// Divide every exponent by the common gcd.
    pub fn reduced(&self) -> Self {
        let g = self.gcd();
        Self { k: self.k.iter().map(|e| e / g).collect(), n: self.n }
    }

    /// Same exponents in a larger ambient space.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        Self::new(self.k.clone(), n)
    }
}

impl std::fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.k.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl<'de> Deserialize<'de> for ExponentTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            k: Vec<u32>,
            n: usize,
        }
        let raw = Raw::deserialize(d)?;
        ExponentTuple::new(raw.k, raw.n).map_err(serde::de::Error::custom)
    }
}

/// `[z^{k₁}, z^{k₂}w^{k₁−k₂}, …, w^{k₁}, 0, …, 0]`.
pub fn make_monomial_curve(k: &ExponentTuple) -> CurveMap {
    let d = k.degree();
    let mut coords: Vec<HomogPoly> =
        k.k.iter().chain(std::iter::once(&0)).map(|&e| HomogPoly::monomial(G::one(), e, d - e)).collect();
    coords.resize(k.n + 1, HomogPoly::zero(d));
    CurveMap::new(coords).expect("monomial curves are primitive")
}

/// Whether the gaps read the same in both directions.
pub fn is_symmetric(k: &ExponentTuple) -> Result<bool> {
    if !k.is_proper() {
        return Err(Error::NotProper(k.k.clone()));
    }
    let g = k.gaps();
    Ok(g.iter().eq(g.iter().rev()))
}

/// `diag[α^{k₁}, α^{k₂}β^{k₁−k₂}, …, β^{k₁}]`, padded with ones.
pub fn vk_element(k: &ExponentTuple, alpha: &G, beta: &G) -> Result<ProjTransform> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let d = k.degree();
    let mut diag: Vec<G> =
        k.k.iter().chain(std::iter::once(&0)).map(|&e| &alpha.pow(e) * &beta.pow(d - e)).collect();
    diag.resize(k.n + 1, G::one());
    ProjTransform::diagonal(&diag)
}

/// The anti-diagonal identity on `P^n`.
pub fn jn(n: usize) -> ProjTransform {
    jn_block(n, n)
}

/// Anti-diagonal identity on the first `m+1` coordinates, identity on the rest.
pub(crate) fn jn_block(m: usize, n: usize) -> ProjTransform {
    let mut a = Matrix::zeros(n + 1, n + 1);
    for i in 0..=m {
        a[(i, m - i)] = G::one();
    }
    for i in m + 1..=n {
        a[(i, i)] = G::one();
    }
    ProjTransform::new(a).expect("permutation matrix")
}

/// Symbolic description of the projective symmetries of `ξ_k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AutomorphismGroupDescription {
    pub tuple: ExponentTuple,
    /// Exponents `(a_i, b_i)` of the torus element `diag(α^{a_i} β^{b_i})`.
    pub torus_exponents: Vec<(u32, u32)>,
    pub includes_antidiagonal: bool,
    /// Whether the complete description is known to apply (proper and `k₁ > n`);
    /// otherwise the generators are only verified to be symmetries.
    pub applicability: bool,
    /// Every listed generator was checked to preserve the curve.
    pub verified: bool,
}

pub fn automorphism_group(k: &ExponentTuple) -> Result<AutomorphismGroupDescription> {
    let symmetric = is_symmetric(k)?;
    let d = k.degree();
    let torus_exponents = k.k.iter().chain(std::iter::once(&0)).map(|&e| (e, d - e)).collect();
    let psi = make_monomial_curve(k);
    let (alpha, beta) = (G::from_int(2), G::from_int(3));
    let torus = vk_element(k, &alpha, &beta)?;
    let scaled = psi.reparametrize(&MobiusTransform::diag(alpha, beta)?);
    let mut verified = psi.transform(&torus)?.same_map(&scaled);
    if symmetric {
        let j = jn_block(k.len(), k.n);
        verified &= psi.transform(&j)?.same_map(&psi.reparametrize(&MobiusTransform::swap()));
    }
    Ok(AutomorphismGroupDescription {
        tuple: k.clone(),
        torus_exponents,
        includes_antidiagonal: symmetric,
        applicability: k.degree() as usize > k.n,
        verified,
    })
}

fn binomial(n: i64, k: i64) -> G {
    if k < 0 || k > n || n < 0 {
        return G::zero();
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    G::from_rational(acc.into())
}

/// The representation `PGL(2) → PGL(n+1)` preserving the rational normal
/// curve `[z^n, z^{n−1}w, …, w^n]`: `ι_n(M)·ξ(p) ∝ ξ(M·p)`.
///
/// The printed upper summation bound in its second case stops one short;
/// the sum here runs to `min(m−1, n+1−j)`, which covers every nonzero term.
pub fn iota(n: usize, m: &MobiusTransform) -> Result<ProjTransform> {
    if n == 0 {
        return Err(Error::OutOfRange("ι_n needs n ≥ 1".into()));
    }
    let (a, b, c, d) = m.entries();
    let ni = n as i64;
    let mut out = Matrix::zeros(n + 1, n + 1);
    for mm in 1..=ni + 1 {
        for j in 1..=ni + 1 {
            let lo = (mm - j).max(0);
            let hi = if mm <= ni + 2 - j { mm - 1 } else { ni + 1 - j };
            let mut sum = G::zero();
            for k in lo..=hi {
                let coeff = &binomial(ni + 1 - j, k) * &binomial(j - 1, mm - 1 - k);
                if coeff.is_zero() {
                    continue;
                }
                let term = &(&(&a.pow((ni + 1 - j - k) as u32) * &b.pow((j - mm + k) as u32))
                    * &c.pow(k as u32))
                    * &d.pow((mm - 1 - k) as u32);
                sum += &(&coeff * &term);
            }
            let scale = &binomial(ni, j - 1) / &binomial(ni, mm - 1);
            out[((mm - 1) as usize, (j - 1) as usize)] = &scale * &sum;
        }
    }
    ProjTransform::new(out)
}
