//! Central projections from a point and the parameter map between projected curves.

use serde::{Deserialize, Serialize};

use crate::algebra::{BiPoly, GaussianRational as G, HomogPoly, P1Point, UPoly};
use crate::error::{Error, Result};
use crate::invariants::CurveMap;
use crate::linalg::Matrix;
use crate::projective::{MobiusTransform, PnPoint, ProjSubspace, ProjTransform};

/// A center `p` and a hyperplane `L ∌ p`, with coordinates in which `p` is
/// the last basis point and `L` the last-coordinate hyperplane.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ProjectionFrame {
    center: PnPoint,
    hyperplane: ProjSubspace,
    adapted: ProjTransform,
}

impl ProjectionFrame {
    /// `hyperplane` defaults to the coordinate hyperplane `x_i = 0` for the
    /// first nonzero coordinate `i` of the center.
    pub fn new(center: PnPoint, hyperplane: Option<ProjSubspace>) -> Result<Self> {
        let n = center.dim();
        let hyperplane = match hyperplane {
            Some(h) => h,
            None => {
                let i0 = center.coords().iter().position(|c| !c.is_zero()).unwrap();
                let vecs: Vec<Vec<G>> =
                    (0..=n).filter(|&j| j != i0).map(|j| PnPoint::basis(n, j).coords().to_vec()).collect();
                ProjSubspace::from_vectors(n, &vecs)
            }
        };
        if hyperplane.ambient() != n {
            return Err(Error::DimensionMismatch { expected: n, found: hyperplane.ambient() });
        }
        if hyperplane.dim() != n as isize - 1 {
            return Err(Error::DegenerateInput(format!(
                "hyperplane has dimension {} in P^{n}",
                hyperplane.dim()
            )));
        }
        if hyperplane.contains(&center) {
            return Err(Error::DegenerateInput("center lies on the hyperplane".into()));
        }
        let mut cols = hyperplane.basis_vectors();
        cols.push(center.coords().to_vec());
        let adapted = ProjTransform::new(Matrix::from_columns(&cols))?.inverse();
        Ok(Self { center, hyperplane, adapted })
    }

    pub fn center(&self) -> &PnPoint {
        &self.center
    }

    pub fn hyperplane(&self) -> &ProjSubspace {
        &self.hyperplane
    }

    pub fn adapted(&self) -> &ProjTransform {
        &self.adapted
    }

    pub fn n(&self) -> usize {
        self.center.dim()
    }
}

/// Projected curve and the common factor removed from the coordinates; the
/// factor vanishes exactly at parameters mapping to the center.
#[derive(Clone, Debug)]
pub struct Projected {
    pub curve: CurveMap,
    pub removed_factor: HomogPoly,
}

pub fn project_curve(psi: &CurveMap, frame: &ProjectionFrame) -> Result<CurveMap> {
    project_curve_detailed(psi, frame).map(|p| p.curve)
}

pub fn project_curve_detailed(psi: &CurveMap, frame: &ProjectionFrame) -> Result<Projected> {
    let n = psi.n();
    if frame.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: frame.n() });
    }
    if n < 3 {
        return Err(Error::OutOfRange(format!("projection from P^{n} needs n ≥ 3")));
    }
    let moved = psi.transform(frame.adapted())?;
    let coords: Vec<HomogPoly> = moved.coords()[..n].to_vec();
    if coords.iter().all(HomogPoly::is_zero) {
        return Err(Error::Degenerate { span: Box::new(psi.span()) });
    }
    match CurveMap::primitivize(coords) {
        Ok((curve, removed_factor)) => Ok(Projected { curve, removed_factor }),
        Err(Error::DegenerateInput(_)) => Err(Error::Degenerate { span: Box::new(psi.span()) }),
        Err(e) => Err(e),
    }
}

/// The transform induced on the hyperplane by a transform fixing the center,
/// in the adapted coordinates of the hyperplane.
pub fn induced_transform(t: &ProjTransform, frame: &ProjectionFrame) -> Result<ProjTransform> {
    let n = frame.n();
    if t.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: t.n() });
    }
    if &t.apply(frame.center())? != frame.center() {
        return Err(Error::NotFixed);
    }
    let conj = t.conjugate_by(frame.adapted());
    let m = conj.matrix();
    debug_assert!((0..n).all(|i| m[(i, n)].is_zero()));
    let idx: Vec<usize> = (0..n).collect();
    ProjTransform::new(m.select(&idx, &idx))
}

/// A self-map of P¹ given by two coprime forms of equal degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalSelfMap {
    z: HomogPoly,
    w: HomogPoly,
}

impl RationalSelfMap {
    pub fn new(z: HomogPoly, w: HomogPoly) -> Result<Self> {
        if z.degree() != w.degree() {
            return Err(Error::DegenerateInput("components of different degree".into()));
        }
        if HomogPoly::gcd(&z, &w)?.degree() > 0 {
            return Err(Error::DegenerateInput("components share a factor".into()));
        }
        // canonical scale: first nonzero coefficient of z (or w) is one
        let lead = z.terms().first().or(w.terms().first()).map(|(_, c)| c.clone()).unwrap();
        let inv = lead.inv().unwrap();
        Ok(Self { z: z.scale(&inv), w: w.scale(&inv) })
    }

    pub fn from_mobius(m: &MobiusTransform) -> Self {
        let (a, b, c, d) = m.entries();
        Self::new(HomogPoly::linear(a, b), HomogPoly::linear(c, d)).expect("invertible")
    }

    pub fn degree(&self) -> u32 {
        self.z.degree()
    }

    pub fn components(&self) -> (&HomogPoly, &HomogPoly) {
        (&self.z, &self.w)
    }

    pub fn apply(&self, t: &P1Point) -> P1Point {
        P1Point::new(self.z.eval_at(t), self.w.eval_at(t)).expect("coprime components")
    }

    pub fn as_mobius(&self) -> Option<MobiusTransform> {
        if self.degree() != 1 {
            return None;
        }
        MobiusTransform::new(self.z.coeff(1), self.z.coeff(0), self.w.coeff(1), self.w.coeff(0)).ok()
    }

    /// `self ∘ m`.
    pub fn precompose(&self, m: &MobiusTransform) -> Self {
        Self::new(m.pullback(&self.z), m.pullback(&self.w)).expect("Möbius preserves coprimality")
    }

    /// `m ∘ self`.
    pub fn postcompose(&self, m: &MobiusTransform) -> Self {
        let (a, b, c, d) = m.entries();
        let z = &self.z.scale(&a) + &self.w.scale(&b);
        let w = &self.z.scale(&c) + &self.w.scale(&d);
        Self::new(z, w).expect("Möbius preserves coprimality")
    }

    /// Equality as maps (cross-multiplication).
    pub fn same_map(&self, other: &Self) -> bool {
        &self.z * &other.w == &self.w * &other.z
    }
}

/// The map `ϑ` with `ν ∘ ϑ` equal to the projection of `ψ`, found by
/// eliminating the parameter of `ν` over the function field of the projection.
pub fn parameter_map_theta(psi: &CurveMap, nu: &CurveMap, frame: &ProjectionFrame) -> Result<RationalSelfMap> {
    let projected = project_curve(psi, frame)?;
    theta_for(&projected, nu)
}

/// `ϑ` with `ν ∘ ϑ ∝ target`.
pub fn theta_for(target: &CurveMap, nu: &CurveMap) -> Result<RationalSelfMap> {
    if target.n() != nu.n() {
        return Err(Error::DimensionMismatch { expected: target.n(), found: nu.n() });
    }
    match theta_by_interpolation(target, nu) {
        Some(theta) => Ok(theta),
        None => theta_by_elimination(target, nu),
    }
}

/// Fast path: invert `ν` at sample points of the target and fit a map of
/// degree `deg target / deg ν` through the values. Only returned once the
/// identity `ν ∘ ϑ ∝ target` has been checked.
fn theta_by_interpolation(target: &CurveMap, nu: &CurveMap) -> Option<RationalSelfMap> {
    let (dt, dn) = (target.degree(), nu.degree());
    if dn == 0 || dt % dn != 0 {
        return None;
    }
    let e = (dt / dn) as usize;
    let needed = 2 * e + 3;
    let mut rows: Vec<Vec<G>> = Vec::with_capacity(needed);
    let mut misses = 0;
    // 0, 1, −1, 2, −2, …
    for x0 in (0..).map(|k: i64| if k % 2 == 1 { (k + 1) / 2 } else { -k / 2 }) {
        if rows.len() == needed {
            break;
        }
        if misses > needed + 8 {
            return None;
        }
        let x0 = G::from_int(x0);
        let fibre = nu.fiber(&target.eval(&P1Point::affine(x0.clone()))).ok()?;
        if fibre.degree() != 1 {
            misses += 1;
            continue;
        }
        let (roots, _) = fibre.linear_roots();
        let (u, v) = (roots[0].0.z().clone(), roots[0].0.w().clone());
        // v·N(x0) − u·D(x0) = 0 with N, D forms of degree e
        let powers: Vec<G> = std::iter::successors(Some(G::one()), |p| Some(p * &x0)).take(e + 1).collect();
        rows.push(powers.iter().map(|p| p * &v).chain(powers.iter().map(|p| -&(p * &u))).collect());
    }
    let kernel = Matrix::from_rows(rows).nullspace();
    if kernel.len() != 1 {
        return None;
    }
    let z = HomogPoly::from_dense(e as u32, kernel[0][..=e].to_vec());
    let w = HomogPoly::from_dense(e as u32, kernel[0][e + 1..].to_vec());
    let common = HomogPoly::gcd(&z, &w).ok()?;
    let theta = RationalSelfMap::new(z.exact_div(&common)?, w.exact_div(&common)?).ok()?;
    let composed = CurveMap::new(nu.coords().iter().map(|c| c.substitute_forms(&theta.z, &theta.w)).collect()).ok()?;
    composed.same_map(target).then_some(theta)
}

/// Eliminate the parameter of `ν` over the function field of the target.
fn theta_by_elimination(target: &CurveMap, nu: &CurveMap) -> Result<RationalSelfMap> {
    // x = parameter of the target, y = parameter of ν, both in the chart w = 1
    let p: Vec<UPoly> = target.coords().iter().map(HomogPoly::dehomogenize_w).collect();
    let v: Vec<Vec<G>> = nu.coords().iter().map(HomogPoly::to_dense).collect();
    let mut g = BiPoly::default();
    for i in 0..=nu.n() {
        for j in i + 1..=nu.n() {
            let eq = BiPoly::new(
                (0..v[i].len())
                    .map(|k| &p[j].scale(&v[i][k]) - &p[i].scale(&v[j][k]))
                    .collect(),
            );
            g = BiPoly::gcd(&g, &eq);
        }
    }
    match g.degree_y() {
        None | Some(0) => Err(Error::NoSolution("ν does not parametrize the projected curve".into())),
        Some(1) => {
            let c = g.coeffs();
            let num = -&c[0];
            let den = c[1].clone();
            let deg = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0)) as u32;
            let z = HomogPoly::homogenize_w(&num, deg);
            let w = HomogPoly::homogenize_w(&den, deg);
            let common = HomogPoly::gcd(&z, &w)?;
            let theta = RationalSelfMap::new(
                z.exact_div(&common).expect("gcd divides"),
                w.exact_div(&common).expect("gcd divides"),
            )?;
            let composed = CurveMap::new(
                nu.coords().iter().map(|c| c.substitute_forms(&theta.z, &theta.w)).collect(),
            )?;
            if composed.same_map(target) {
                Ok(theta)
            } else {
                Err(Error::NoSolution("eliminated map fails the identity check".into()))
            }
        }
        Some(d) => Err(Error::AmbiguousInversion(format!(
            "ν has degree {d} onto its image; no unique parameter map"
        ))),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ThetaCriticalData {
    /// Located critical parameters with multiplicity.
    pub critical_points: Vec<(P1Point, u32)>,
    pub critical_values: Vec<P1Point>,
    /// Part of the Wronskian without Q(i)-rational roots (monic).
    pub residual: HomogPoly,
    /// Exactly two distinct critical points over the algebraic closure.
    pub bicritical: bool,
}

pub fn theta_critical_data(theta: &RationalSelfMap) -> ThetaCriticalData {
    let (p, q) = theta.components();
    let wronskian = &(&p.dz() * &q.dw()) - &(&p.dw() * &q.dz());
    let (critical_points, residual) = if wronskian.degree() == 0 {
        (Vec::new(), HomogPoly::one())
    } else {
        wronskian.linear_roots()
    };
    let critical_values = critical_points.iter().map(|(c, _)| theta.apply(c)).collect();
    let distinct = critical_points.len() + residual.squarefree().degree() as usize;
    ThetaCriticalData { critical_points, critical_values, residual, bicritical: distinct == 2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{make_monomial_curve, ExponentTuple};

    #[test]
    fn projecting_twisted_cubic_gives_conic() {
        let psi = make_monomial_curve(&ExponentTuple::rational_normal(3));
        let frame = ProjectionFrame::new(PnPoint::basis(3, 3), None).unwrap();
        let out = project_curve_detailed(&psi, &frame).unwrap();
        assert!(out.curve.same_map(&make_monomial_curve(&ExponentTuple::rational_normal(2))));
        assert_eq!(out.removed_factor, HomogPoly::z());
        let nu = make_monomial_curve(&ExponentTuple::rational_normal(2));
        let theta = parameter_map_theta(&psi, &nu, &frame).unwrap();
        assert!(theta.as_mobius().unwrap().is_identity());
    }

    #[test]
    fn interpolation_agrees_with_elimination() {
        let psi = make_monomial_curve(&ExponentTuple::new(vec![5, 3, 1], 3).unwrap());
        let m = MobiusTransform::from_ints(2, 1, -1, 3).unwrap();
        let target = project_curve(&psi.reparametrize(&m), &ProjectionFrame::new(PnPoint::basis(3, 3), None).unwrap())
            .unwrap();
        let nu = make_monomial_curve(&ExponentTuple::new(vec![2, 1], 2).unwrap());
        let fast = theta_by_interpolation(&target, &nu).unwrap();
        let slow = theta_by_elimination(&target, &nu).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(fast.degree(), 2);
    }

    #[test]
    fn induced_on_block() {
        let frame = ProjectionFrame::new(PnPoint::basis(3, 3), None).unwrap();
        let t = ProjTransform::diagonal(&[2, 3, 5, 7].map(G::from_int)).unwrap();
        let expected = ProjTransform::diagonal(&[2, 3, 5].map(G::from_int)).unwrap();
        assert_eq!(induced_transform(&t, &frame).unwrap(), expected);
    }

    #[test]
    fn critical_points_of_examples() {
        let power = RationalSelfMap::new(HomogPoly::z().pow(2), HomogPoly::w().pow(2)).unwrap();
        let data = theta_critical_data(&power);
        assert!(data.bicritical);
        assert_eq!(data.critical_points.len(), 2);
        let zw = &HomogPoly::z() * &HomogPoly::w();
        let f = RationalSelfMap::new(&HomogPoly::z().pow(2) + &HomogPoly::w().pow(2), zw).unwrap();
        let pts: Vec<P1Point> = theta_critical_data(&f).critical_points.into_iter().map(|(p, _)| p).collect();
        let one = G::one();
        assert_eq!(
            pts,
            vec![P1Point::new(one.clone(), -&one).unwrap(), P1Point::new(one.clone(), one).unwrap()]
        );
    }
}
