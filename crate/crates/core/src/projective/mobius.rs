use std::fmt;

use serde::{Deserialize, Serialize};

use super::ProjTransform;
use crate::algebra::{GaussianRational as G, HomogPoly, P1Point};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// An element of PGL(2) acting on `[z, w]` as a column vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ProjTransform", into = "ProjTransform")]
pub struct MobiusTransform(ProjTransform);

impl MobiusTransform {
    /// `[[a, b], [c, d]]`.
    pub fn new(a: G, b: G, c: G, d: G) -> Result<Self> {
        Ok(Self(ProjTransform::from_rows(vec![vec![a, b], vec![c, d]])?))
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(G::from_int(a), G::from_int(b), G::from_int(c), G::from_int(d))
    }

    pub fn identity() -> Self {
        Self(ProjTransform::identity(1))
    }

    pub fn diag(alpha: G, beta: G) -> Result<Self> {
        Self::new(alpha, G::zero(), G::zero(), beta)
    }

    /// `[z, w] ↦ [w, z]`.
    pub fn swap() -> Self {
        Self::from_ints(0, 1, 1, 0).expect("invertible")
    }

    pub fn transform(&self) -> &ProjTransform {
        &self.0
    }

    pub fn matrix(&self) -> &Matrix {
        self.0.matrix()
    }

    /// Entries `(a, b, c, d)` of the canonical lift.
    pub fn entries(&self) -> (G, G, G, G) {
        let m = self.0.matrix();
        (m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone(), m[(1, 1)].clone())
    }

    pub fn apply(&self, p: &P1Point) -> P1Point {
        let v = self.0.apply_vec(&[p.z().clone(), p.w().clone()]);
        P1Point::new(v[0].clone(), v[1].clone()).expect("invertible")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0.compose(&other.0))
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_diagonal(&self) -> bool {
        self.matrix().is_diagonal()
    }

    pub fn is_antidiagonal(&self) -> bool {
        let m = self.matrix();
        m[(0, 0)].is_zero() && m[(1, 1)].is_zero()
    }

    /// The transform sending `[1,0], [0,1], [1,1]` to `p, q, r`.
    pub fn from_standard_frame(p: &P1Point, q: &P1Point, r: &P1Point) -> Result<Self> {
        // λ p + μ q = r
        let m = Matrix::from_columns(&[vec![p.z().clone(), p.w().clone()], vec![q.z().clone(), q.w().clone()]]);
        let sol = m
            .solve(&[r.z().clone(), r.w().clone()])
            .ok_or_else(|| Error::DegenerateInput("frame points are not distinct".into()))?;
        if sol.iter().any(G::is_zero) {
            return Err(Error::DegenerateInput("frame points are not distinct".into()));
        }
        Self::new(
            &sol[0] * p.z(),
            &sol[1] * q.z(),
            &sol[0] * p.w(),
            &sol[1] * q.w(),
        )
    }

    /// The transform sending `[1,0] ↦ p` and `[0,1] ↦ q`.
    pub fn from_two_points(p: &P1Point, q: &P1Point) -> Result<Self> {
        Self::new(p.z().clone(), q.z().clone(), p.w().clone(), q.w().clone())
    }

    /// The unique Möbius map sending `src[i] ↦ dst[i]`.
    pub fn through_three_points(src: &[P1Point; 3], dst: &[P1Point; 3]) -> Result<Self> {
        let a = Self::from_standard_frame(&src[0], &src[1], &src[2])?;
        let b = Self::from_standard_frame(&dst[0], &dst[1], &dst[2])?;
        Ok(b.compose(&a.inverse()))
    }

    /// Precompose a form with this map: `p ∘ self`.
    pub fn pullback(&self, p: &HomogPoly) -> HomogPoly {
        let (a, b, c, d) = self.entries();
        p.substitute(&a, &b, &c, &d)
    }
}

impl TryFrom<ProjTransform> for MobiusTransform {
    type Error = Error;
    fn try_from(t: ProjTransform) -> Result<Self> {
        if t.n() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: t.n() });
        }
        Ok(Self(t))
    }
}

impl From<MobiusTransform> for ProjTransform {
    fn from(m: MobiusTransform) -> Self {
        m.0
    }
}

impl fmt::Debug for MobiusTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c, d) = self.entries();
        write!(f, "Mobius[[{a}, {b}], [{c}, {d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64) -> P1Point {
        P1Point::new(G::from_int(a), G::from_int(b)).unwrap()
    }

    #[test]
    fn three_point_interpolation() {
        let src = [pt(1, 0), pt(0, 1), pt(1, 1)];
        let dst = [pt(2, 1), pt(1, 3), pt(-1, 1)];
        let m = MobiusTransform::through_three_points(&src, &dst).unwrap();
        for (s, d) in src.iter().zip(&dst) {
            assert_eq!(&m.apply(s), d);
        }
        assert!(MobiusTransform::through_three_points(&src, &[pt(1, 0), pt(1, 0), pt(1, 1)]).is_err());
    }

    #[test]
    fn pullback_matches_pointwise() {
        let m = MobiusTransform::from_ints(1, 2, 3, 5).unwrap();
        let p = &HomogPoly::z().pow(2) - &HomogPoly::w().pow(2);
        let q = m.pullback(&p);
        let t = pt(2, 7);
        let mt = m.matrix().mul_vec(&[t.z().clone(), t.w().clone()]);
        assert_eq!(q.eval_at(&t), p.eval(&mt[0], &mt[1]));
    }
}
