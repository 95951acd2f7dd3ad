//! Parameters singled out by an infinite-order symmetry.

use serde::{Deserialize, Serialize};

use crate::algebra::P1Point;
use crate::error::Result;
use crate::invariants::{curve_invariants, singular_parameters, CurveMap};
use crate::projective::PnPoint;

use super::InvarianceCertificate;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpecialParameterSet {
    pub wpoints: Vec<P1Point>,
    pub singular: Vec<P1Point>,
    /// Parameters mapping to the chosen center.
    pub center_preimages: Vec<P1Point>,
    /// Fixed parameters of the recovered Möbius map.
    pub fixed_parameters: Vec<P1Point>,
    /// W-points, singular parameters and center preimages together.
    pub union: Vec<P1Point>,
    /// Some W-point or singular parameter could not be located over Q(i).
    pub unlocated: bool,
    /// Number of distinct multiple points found.
    pub nodes: usize,
    /// `|union| ≤ 2`.
    pub within_bound: bool,
    /// Every fixed parameter lies in the union.
    pub fixed_covered: bool,
}

/// Fixed points of a Möbius map located over Q(i).
pub fn mobius_fixed_points(m: &crate::projective::MobiusTransform) -> Vec<P1Point> {
    let (a, b, c, d) = m.entries();
    // c z² + (d − a) z w − b w² = 0
    let q = crate::algebra::HomogPoly::from_dense(2, vec![-&b, &d - &a, c]);
    if q.is_zero() {
        return Vec::new();
    }
    q.linear_roots().0.into_iter().map(|(p, _)| p).collect()
}

pub fn special_parameters(
    psi: &CurveMap,
    cert: &InvarianceCertificate,
    center: &PnPoint,
) -> Result<SpecialParameterSet> {
    let inv = curve_invariants(psi)?;
    let sing = singular_parameters(psi)?;
    let center_preimages: Vec<P1Point> = psi.preimages(center)?.into_iter().map(|(p, _)| p).collect();
    let singular = sing.parameters();
    let mut union: Vec<P1Point> =
        inv.wpoints.iter().chain(&singular).chain(&center_preimages).cloned().collect();
    union.sort();
    union.dedup();
    let fixed_parameters = mobius_fixed_points(&cert.mobius);
    let unlocated = !inv.wlocus_splits()
        || sing.cusp_residual.degree() > 0
        || sing.double_point_residual.degree() > 0
        || !sing.birational;
    Ok(SpecialParameterSet {
        fixed_covered: fixed_parameters.iter().all(|p| union.contains(p)),
        within_bound: union.len() <= 2 && !unlocated,
        nodes: sing.nodes(),
        wpoints: inv.wpoints,
        singular,
        center_preimages,
        fixed_parameters,
        union,
        unlocated,
    })
}
