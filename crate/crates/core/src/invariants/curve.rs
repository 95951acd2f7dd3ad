//! Parametrized rational curves `P¹ → Pⁿ`.

use serde::{Deserialize, Serialize};

use crate::algebra::{GaussianRational as G, HomogPoly, P1Point};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::projective::{MobiusTransform, PnPoint, ProjSubspace, ProjTransform};

/// A primitive tuple of `n + 1` forms of common degree, not all proportional.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CurveMap {
    n: usize,
    coords: Vec<HomogPoly>,
}

impl CurveMap {
    /// Checks equal degrees, primitivity and that the image is not a point.
    pub fn new(coords: Vec<HomogPoly>) -> Result<Self> {
        let curve = Self::unchecked(coords)?;
        let g = HomogPoly::gcd_all(&curve.coords)?;
        if g.degree() > 0 {
            return Err(Error::DegenerateInput(format!("coordinates share the factor {g:?}")));
        }
        if curve.coefficient_matrix().rank() < 2 {
            return Err(Error::DegenerateInput("parametrization is constant".into()));
        }
        Ok(curve)
    }

    /// Divide out the common factor of the coordinates; returns the curve
    /// and the removed factor (monic).
    pub fn primitivize(coords: Vec<HomogPoly>) -> Result<(Self, HomogPoly)> {
        let g = HomogPoly::gcd_all(&coords)?;
        let reduced = coords
            .iter()
            .map(|c| c.exact_div(&g).expect("gcd divides"))
            .collect();
        Ok((Self::new(reduced)?, g))
    }

    fn unchecked(coords: Vec<HomogPoly>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DegenerateInput("a curve needs at least two coordinates".into()));
        }
        let d = coords[0].degree();
        if let Some(c) = coords.iter().find(|c| c.degree() != d) {
            return Err(Error::DegenerateInput(format!(
                "coordinate degrees differ: {d} vs {}",
                c.degree()
            )));
        }
        Ok(Self { n: coords.len() - 1, coords })
    }

    /// Ambient dimension n.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.coords[0].degree()
    }

    pub fn coords(&self) -> &[HomogPoly] {
        &self.coords
    }

    /// Row `i` holds the coefficients of coordinate `i` by z-exponent.
    pub fn coefficient_matrix(&self) -> Matrix {
        Matrix::from_rows(self.coords.iter().map(HomogPoly::to_dense).collect())
    }

    /// Smallest subspace containing the image.
    pub fn span(&self) -> ProjSubspace {
        let c = self.coefficient_matrix();
        let cols: Vec<Vec<G>> = (0..c.cols()).map(|j| c.column(j)).collect();
        ProjSubspace::from_vectors(self.n, &cols)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.coefficient_matrix().rank() == self.n + 1
    }

    pub fn eval(&self, t: &P1Point) -> PnPoint {
        PnPoint::new(self.coords.iter().map(|c| c.eval_at(t)).collect()).expect("primitive curve")
    }

    /// `h ∘ self`.
    pub fn transform(&self, h: &ProjTransform) -> Result<Self> {
        if h.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: h.n() });
        }
        let m = h.matrix();
        let coords = (0..=self.n)
            .map(|i| {
                let mut acc = HomogPoly::zero(self.degree());
                for (j, c) in self.coords.iter().enumerate() {
                    if !m[(i, j)].is_zero() {
                        acc = &acc + &c.scale(&m[(i, j)]);
                    }
                }
                acc
            })
            .collect();
        Ok(Self { n: self.n, coords })
    }

    /// `self ∘ m`.
    pub fn reparametrize(&self, m: &MobiusTransform) -> Self {
        Self { n: self.n, coords: self.coords.iter().map(|c| m.pullback(c)).collect() }
    }

    /// Append zero coordinates up to ambient dimension `n`.
    pub fn pad(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: n });
        }
        let mut coords = self.coords.clone();
        coords.resize(n + 1, HomogPoly::zero(self.degree()));
        Ok(Self { n, coords })
    }

    /// Whether both tuples define the same map, i.e. `self_i · other_j = self_j · other_i`.
    pub fn same_map(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let (Some(i0), Some(_)) = (
            self.coords.iter().position(|c| !c.is_zero()),
            other.coords.iter().position(|c| !c.is_zero()),
        ) else {
            return false;
        };
        (0..=self.n).all(|j| {
            let lhs = &self.coords[i0] * &other.coords[j];
            let rhs = &self.coords[j] * &other.coords[i0];
            lhs == rhs
        }) && !other.coords[i0].is_zero()
    }

    /// Polynomial whose roots are the parameters mapping to `q` (a constant
    /// when `q` is off the curve).
    pub fn fiber(&self, q: &PnPoint) -> Result<HomogPoly> {
        if q.dim() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: q.dim() });
        }
        let qc = q.coords();
        let pivot = qc.iter().position(|c| !c.is_zero()).expect("projective point");
        let mut eqs = Vec::with_capacity(self.n);
        for j in 0..=self.n {
            if j != pivot {
                eqs.push(&self.coords[j].scale(&qc[pivot]) - &self.coords[pivot].scale(&qc[j]));
            }
        }
        match HomogPoly::gcd_all(&eqs) {
            Ok(g) => Ok(g),
            // every equation vanishes: the whole curve maps to q
            Err(_) => Err(Error::DegenerateInput("curve is constant".into())),
        }
    }

    /// Distinct Q(i)-rational parameters mapping to `q`, with multiplicity.
    pub fn preimages(&self, q: &PnPoint) -> Result<Vec<(P1Point, u32)>> {
        let f = self.fiber(q)?;
        if f.degree() == 0 {
            return Ok(Vec::new());
        }
        Ok(f.linear_roots().0)
    }
}

impl std::fmt::Debug for CurveMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

impl<'de> Deserialize<'de> for CurveMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            coords: Vec<HomogPoly>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.coords.len() != raw.n + 1 {
            return Err(D::Error::custom(format!(
                "expected {} coordinates for n = {}, found {}",
                raw.n + 1,
                raw.n,
                raw.coords.len()
            )));
        }
        CurveMap::new(raw.coords).map_err(D::Error::custom)
    }
}
