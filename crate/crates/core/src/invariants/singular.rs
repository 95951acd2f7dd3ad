//! Cusps and multiple points of a parametrized curve.

use serde::{Deserialize, Serialize};

use crate::algebra::{resultant_in_t, BiPoly, GaussianRational as G, HomogPoly, P1Point, UPoly};
use crate::error::Result;

use super::{wedge, CurveMap};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SingularParameters {
    /// Parameters where the tangent degenerates (`s₀ > 0`).
    pub cusps: Vec<P1Point>,
    /// Groups of two or more parameters with the same image point.
    pub multiple_points: Vec<Vec<P1Point>>,
    /// Cusp locus without Q(i)-rational roots (monic).
    pub cusp_residual: HomogPoly,
    /// Affine double-point parameters not located over Q(i) (monic).
    pub double_point_residual: HomogPoly,
    /// False when the double-point system has a curve of solutions,
    /// i.e. the parametrization is not generically injective.
    pub birational: bool,
}

impl SingularParameters {
    pub fn nodes(&self) -> usize {
        self.multiple_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cusps.is_empty()
            && self.multiple_points.is_empty()
            && self.cusp_residual.degree() == 0
            && self.double_point_residual.degree() == 0
    }

    /// Every located singular parameter, sorted.
    pub fn parameters(&self) -> Vec<P1Point> {
        let mut all: Vec<P1Point> =
            self.cusps.iter().chain(self.multiple_points.iter().flatten()).cloned().collect();
        all.sort();
        all.dedup();
        all
    }
}

/// `(f(s)g(t) − g(s)f(t)) / (t − s)` in the chart `w = 1`; `x = s`, `y = t`.
fn divided_difference(f: &UPoly, g: &UPoly) -> BiPoly {
    let p = BiPoly::product(f, g).sub(&BiPoly::product(g, f));
    let c = p.coeffs();
    if c.is_empty() {
        return p;
    }
    // synthetic division by (y − x)
    let x = UPoly::new(vec![G::zero(), G::one()]);
    let m = c.len() - 1;
    let mut q = vec![UPoly::zero(); m];
    let mut carry = UPoly::zero();
    for j in (1..=m).rev() {
        carry = &c[j] + &(&x * &carry);
        q[j - 1] = carry.clone();
    }
    debug_assert!((&c[0] + &(&x * &carry)).is_zero());
    BiPoly::new(q)
}

fn combine(qs: &[BiPoly], base: i64) -> BiPoly {
    let mut acc = BiPoly::default();
    let mut w = G::one();
    let b = G::from_int(base);
    for q in qs {
        acc = acc.add(&q.scale(&w));
        w = &w * &b;
    }
    acc
}

pub fn singular_parameters(psi: &CurveMap) -> Result<SingularParameters> {
    let (cusp_roots, cusp_residual) = wedge::Wedge::compute(psi, 1)?.gcd.linear_roots();
    let cusps: Vec<P1Point> = cusp_roots.into_iter().map(|(p, _)| p).collect();

    let affine: Vec<UPoly> = psi.coords().iter().map(HomogPoly::dehomogenize_w).collect();
    let mut qs = Vec::new();
    for i in 0..affine.len() {
        for j in i + 1..affine.len() {
            let q = divided_difference(&affine[i], &affine[j]);
            if !q.is_zero() {
                qs.push(q);
            }
        }
    }

    let mut multiple_points = Vec::new();
    let mut residual = UPoly::one();
    let mut birational = true;
    if psi.n() == 1 {
        birational = psi.degree() == 1;
    } else {
        let a = combine(&qs, 1);
        // a few weightings in case two combinations share a component by accident
        let mut eliminant = None;
        for (b, c) in [(2, 3), (5, 7), (-3, 11)] {
            let r1 = resultant_in_t(&a, &combine(&qs, b));
            let r2 = resultant_in_t(&a, &combine(&qs, c));
            if !r1.is_zero() && !r2.is_zero() {
                eliminant = Some(UPoly::gcd(&r1, &r2));
                break;
            }
        }
        match eliminant {
            None => birational = false,
            Some(r) => {
                let mut candidates: Vec<P1Point> = vec![P1Point::one_zero()];
                if !r.is_constant() {
                    let (roots, res) = crate::algebra::univariate_roots(&r);
                    residual = res;
                    candidates.extend(roots.into_iter().map(|(x, _)| P1Point::affine(x)));
                }
                for s0 in candidates {
                    let fibre = psi.preimages(&psi.eval(&s0))?;
                    if fibre.len() >= 2 {
                        let group: Vec<P1Point> = fibre.into_iter().map(|(p, _)| p).collect();
                        if !multiple_points.contains(&group) {
                            multiple_points.push(group);
                        }
                    }
                }
            }
        }
    }
    multiple_points.sort();
    Ok(SingularParameters {
        cusps,
        multiple_points,
        cusp_residual,
        double_point_residual: HomogPoly::homogenize_w(&residual, residual.degree().unwrap_or(0) as u32),
        birational,
    })
}
