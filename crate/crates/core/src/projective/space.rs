//! Points, subspaces and transformations of projective space.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::GaussianRational as G;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A point of P^n, scaled so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PnPoint {
    coords: Vec<G>,
}

impl PnPoint {
    pub fn new(coords: Vec<G>) -> Result<Self> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(Error::DegenerateInput("the zero vector is not a projective point".into()));
        };
        let inv = first.inv().unwrap();
        Ok(Self { coords: coords.iter().map(|c| c * &inv).collect() })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| G::from_int(c)).collect())
    }

    /// The coordinate point `[e_i]` in P^n.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut coords = vec![G::zero(); n + 1];
        coords[i] = G::one();
        Self { coords }
    }

    pub fn coords(&self) -> &[G] {
        &self.coords
    }

    /// Ambient dimension n.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl fmt::Debug for PnPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl<'de> Deserialize<'de> for PnPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<G>::deserialize(d)?;
        PnPoint::new(coords).map_err(serde::de::Error::custom)
    }
}

/// A projective subspace, stored by the reduced row echelon basis of its
/// cone so that equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProjSubspace {
    ambient: usize,
    basis: Vec<PnPoint>,
}

impl ProjSubspace {
    /// Smallest subspace containing every vector (zero vectors are ignored).
    pub fn from_vectors(ambient: usize, vectors: &[Vec<G>]) -> Self {
        if vectors.is_empty() {
            return Self { ambient, basis: Vec::new() };
        }
        let m = Matrix::from_rows(vectors.to_vec());
        let r = m.rref();
        let basis = (0..r.pivots.len())
            .map(|i| PnPoint::new(r.rref.row(i).to_vec()).expect("pivot row nonzero"))
            .collect();
        Self { ambient, basis }
    }

    pub fn whole(n: usize) -> Self {
        Self { ambient: n, basis: (0..=n).map(|i| PnPoint::basis(n, i)).collect() }
    }

    /// Projective dimension (`-1` for the empty subspace).
    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[PnPoint] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<G>> {
        self.basis.iter().map(|p| p.coords().to_vec()).collect()
    }

    pub fn contains(&self, p: &PnPoint) -> bool {
        let mut rows = self.basis_vectors();
        rows.push(p.coords().to_vec());
        Matrix::from_rows(rows).rank() == self.basis.len()
    }

    pub fn contains_subspace(&self, other: &ProjSubspace) -> bool {
        other.basis.iter().all(|p| self.contains(p))
    }

    /// Sum (join) of two subspaces.
    pub fn join(&self, other: &ProjSubspace) -> ProjSubspace {
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Self::from_vectors(self.ambient, &rows)
    }
}

impl fmt::Debug for ProjSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.basis)
    }
}

/// Minimal subspace containing all points.
pub fn span(points: &[PnPoint]) -> Result<ProjSubspace> {
    let first = points.first().ok_or_else(|| Error::DegenerateInput("span of no points".into()))?;
    let n = first.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
    }
    let rows: Vec<Vec<G>> = points.iter().map(|p| p.coords().to_vec()).collect();
    Ok(ProjSubspace::from_vectors(n, &rows))
}

/// An invertible projective transformation of P^n, stored by its lift
/// scaled so the first nonzero entry (row-major) is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjTransform {
    matrix: Matrix,
}

impl ProjTransform {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        if matrix.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self { matrix: matrix.canonical_scaling() })
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows))
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| G::from_int(x)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self { matrix: Matrix::identity(n + 1) }
    }

    pub fn diagonal(entries: &[G]) -> Result<Self> {
        Self::new(Matrix::diagonal(entries))
    }

    /// Ambient dimension n (the lift is (n+1)×(n+1)).
    pub fn n(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing transforms of different dimension");
        Self { matrix: (&self.matrix * &other.matrix).canonical_scaling() }
    }

    pub fn inverse(&self) -> Self {
        Self { matrix: self.matrix.inverse().expect("invertible").canonical_scaling() }
    }

    pub fn pow(&self, e: u64) -> Self {
        Self { matrix: self.matrix.pow(e).canonical_scaling() }
    }

    /// `h · self · h⁻¹`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.compose(self).compose(&h.inverse())
    }

    /// Whether this is the identity of PGL (a scalar lift).
    pub fn is_identity(&self) -> bool {
        self.matrix.is_scalar()
    }

    pub fn apply(&self, x: &PnPoint) -> Result<PnPoint> {
        if x.dim() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: x.dim() });
        }
        PnPoint::new(self.matrix.mul_vec(x.coords()))
    }

    pub fn apply_vec(&self, v: &[G]) -> Vec<G> {
        self.matrix.mul_vec(v)
    }
}

impl fmt::Debug for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjTransform{:?}", self.matrix)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<G>,
}

impl Serialize for ProjTransform {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { dim: self.matrix.rows(), entries: self.matrix.data().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjTransform {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixJson::deserialize(d)?;
        if raw.entries.len() != raw.dim * raw.dim {
            return Err(D::Error::custom(format!(
                "expected {} entries for dim {}, found {}",
                raw.dim * raw.dim,
                raw.dim,
                raw.entries.len()
            )));
        }
        ProjTransform::new(Matrix::from_vec(raw.dim, raw.dim, raw.entries)).map_err(D::Error::custom)
    }
}

/// All `r`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// The induced transform on `⋀^{k+1}`, entries the `(k+1)`-minors of the lift
/// in the lexicographic basis of index sets.
pub fn wedge_power(t: &ProjTransform, k: usize) -> Result<ProjTransform> {
    let n = t.n();
    if k + 1 > n || n == 0 {
        return Err(Error::OutOfRange(format!("wedge order k = {k} for n = {n}")));
    }
    let sets = combinations(n + 1, k + 1);
    let mut m = Matrix::zeros(sets.len(), sets.len());
    for (i, rows) in sets.iter().enumerate() {
        for (j, cols) in sets.iter().enumerate() {
            m[(i, j)] = t.matrix().select(rows, cols).det();
        }
    }
    ProjTransform::new(m)
}
