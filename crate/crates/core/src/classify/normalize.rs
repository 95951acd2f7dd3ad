//! Bringing a curve to the monomial normal form `h ∘ ψ ∘ m = ξ_k`.

use serde::{Deserialize, Serialize};

use crate::algebra::{GaussianRational as G, P1Point};
use crate::error::{Error, Result};
use crate::invariants::{wedge::Wedge, CurveMap};
use crate::linalg::Matrix;
use crate::monomial::{make_monomial_curve, ExponentTuple};
use crate::projective::{MobiusTransform, ProjTransform};

/// `h ∘ ψ ∘ m = ξ_{gcd_power·k}` with `k` proper.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NormalForm {
    pub k: ExponentTuple,
    pub h: ProjTransform,
    pub m: MobiusTransform,
    /// Common factor divided out of the exponents; above one the
    /// parametrization covers its image several times.
    pub gcd_power: u32,
}

impl NormalForm {
    /// The model the identity is stated against (before dividing the gcd).
    pub fn model(&self) -> CurveMap {
        let k: Vec<u32> = self.k.k().iter().map(|e| e * self.gcd_power).collect();
        make_monomial_curve(&ExponentTuple::new(k, self.k.n()).expect("scaled tuple stays valid"))
    }

    pub fn verify(&self, psi: &CurveMap) -> bool {
        psi.reparametrize(&self.m)
            .transform(&self.h)
            .map(|c| c.same_map(&self.model()))
            .unwrap_or(false)
    }
}

/// Normal form of a curve spanning its ambient space.
fn normalize_spanning(psi: &CurveMap) -> Result<NormalForm> {
    let n = psi.n();
    let wronskian = Wedge::compute(psi, n)?.gcd;
    let (roots, residual) = wronskian.linear_roots();
    if residual.degree() > 0 {
        return Err(Error::NotMonomial(format!(
            "W-locus has {} parameters outside Q(i)",
            residual.degree()
        )));
    }
    let pts: Vec<P1Point> = roots.into_iter().map(|(p, _)| p).collect();
    let candidates = match pts.len() {
        0 => vec![MobiusTransform::identity()],
        2 => vec![
            MobiusTransform::from_two_points(&pts[0], &pts[1])?,
            MobiusTransform::from_two_points(&pts[1], &pts[0])?,
        ],
        c => return Err(Error::NotMonomial(format!("{c} W-points; a monomial curve has 0 or 2"))),
    };
    let mut found: Option<NormalForm> = None;
    for m in candidates {
        let Some(nf) = monomial_frame(psi, m) else { continue };
        let better = match &found {
            None => true,
            // on a tie (symmetric k) keep the frame that needs no change
            Some(prev) => nf.k < prev.k || (nf.k == prev.k && nf.m.is_identity() && nf.h.is_identity()),
        };
        if better {
            found = Some(nf);
        }
    }
    found.ok_or_else(|| Error::NotMonomial("coordinates do not span a monomial subspace".into()))
}

/// With the W-points at `0` and `∞`, row-reduce the coefficient matrix; the
/// curve is monomial iff every reduced row is a single monomial.
fn monomial_frame(psi: &CurveMap, m: MobiusTransform) -> Option<NormalForm> {
    let moved = psi.reparametrize(&m);
    let c = moved.coefficient_matrix();
    let r = c.rref();
    let n = psi.n();
    if r.pivots.len() != n + 1 {
        return None;
    }
    for i in 0..=n {
        if (0..c.cols()).any(|j| j != r.pivots[i] && !r.rref[(i, j)].is_zero()) {
            return None;
        }
    }
    let d = psi.degree() as usize;
    if r.pivots[0] != 0 || r.pivots[n] != d {
        return None;
    }
    // rows by decreasing z-exponent, as in ξ_k
    let rows: Vec<Vec<G>> = (0..=n).rev().map(|i| r.transform.row(i).to_vec()).collect();
    let h = ProjTransform::new(Matrix::from_rows(rows)).ok()?;
    let exps: Vec<u32> = r.pivots[1..].iter().rev().map(|&e| e as u32).collect();
    let tuple = ExponentTuple::new(exps, n).ok()?;
    let g = tuple.gcd();
    let nf = NormalForm { k: tuple.reduced(), h, m, gcd_power: g };
    nf.verify(psi).then_some(nf)
}

/// Coordinates adapted to the span of the curve: `frame⁻¹ ∘ ψ` has zeros after
/// the first `dim + 1` coordinates.
pub(crate) fn span_frame(psi: &CurveMap) -> (ProjTransform, usize) {
    let n = psi.n();
    let span = psi.span();
    let mut cols = span.basis_vectors();
    let s = cols.len() - 1;
    for j in 0..=n {
        if cols.len() == n + 1 {
            break;
        }
        let mut e = vec![G::zero(); n + 1];
        e[j] = G::one();
        let mut trial = cols.clone();
        trial.push(e.clone());
        if Matrix::from_columns(&trial).rank() == trial.len() {
            cols.push(e);
        }
    }
    (ProjTransform::new(Matrix::from_columns(&cols)).expect("completed basis"), s)
}

/// Normal form `h ∘ ψ ∘ m = ξ_k`. A curve inside a proper subspace is
/// normalized in coordinates of its span, with `k` having fewer entries than `n`.
pub fn normalize_to_monomial(psi: &CurveMap) -> Result<NormalForm> {
    let n = psi.n();
    if psi.is_nondegenerate() {
        return normalize_spanning(psi);
    }
    let (frame, s) = span_frame(psi);
    let inv = frame.inverse();
    let local = psi.transform(&inv)?;
    let reduced = CurveMap::new(local.coords()[..=s].to_vec())?;
    let inner = normalize_spanning(&reduced)?;
    let h = pad_block(&inner.h, n)?.compose(&inv);
    let nf = NormalForm { k: inner.k.with_ambient(n)?, h, m: inner.m, gcd_power: inner.gcd_power };
    if !nf.verify(psi) {
        return Err(Error::NotMonomial("normal form in span coordinates failed to lift".into()));
    }
    Ok(nf)
}

/// Variant that also moves a marked parameter to `[1,0]`: any parameter for
/// the rational normal curve, otherwise one of the two W-points.
pub fn normalize_with_marked_point(psi: &CurveMap, marked: &P1Point) -> Result<NormalForm> {
    let nf = normalize_to_monomial(psi)?;
    let image = nf.m.inverse().apply(marked);
    if image == P1Point::one_zero() {
        return Ok(nf);
    }
    let s = nf.k.len();
    if nf.k.is_rational_normal() && nf.gcd_power == 1 {
        // any Möbius change is absorbed by ι_s on the span block
        let other = if image == P1Point::zero_one() { P1Point::affine(G::one()) } else { P1Point::zero_one() };
        let fix = MobiusTransform::from_two_points(&image, &other)?;
        let iota = crate::monomial::iota(s, &fix)?;
        let h = pad_block(&iota, nf.h.n())?.inverse().compose(&nf.h);
        let out = NormalForm { m: nf.m.compose(&fix), h, ..nf };
        return if out.verify(psi) { Ok(out) } else { Err(Error::NotMonomial("marked frame check failed".into())) };
    }
    if image == P1Point::zero_one() && crate::monomial::is_symmetric(&nf.k)? {
        let j = crate::monomial::jn_block(s, nf.h.n());
        let out = NormalForm { m: nf.m.compose(&MobiusTransform::swap()), h: j.compose(&nf.h), ..nf };
        return if out.verify(psi) { Ok(out) } else { Err(Error::NotMonomial("marked frame check failed".into())) };
    }
    Err(Error::NotMonomial("marked parameter cannot be moved to [1,0] within the symmetries of ξ_k".into()))
}

/// `t ⊕ identity` on `P^n`.
pub(crate) fn pad_block(t: &ProjTransform, n: usize) -> Result<ProjTransform> {
    let s = t.n();
    let mut m = Matrix::identity(n + 1);
    for i in 0..=s {
        for j in 0..=s {
            m[(i, j)] = t.matrix()[(i, j)].clone();
        }
    }
    ProjTransform::new(m)
}
