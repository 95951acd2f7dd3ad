//! Associated curves, ramification, Plücker degrees and singular parameters.

mod curve;
mod singular;
pub(crate) mod wedge;

use serde::{Deserialize, Serialize};

use crate::algebra::{HomogPoly, P1Point};
use crate::error::{Error, Result};

pub use curve::CurveMap;
pub use singular::{singular_parameters, SingularParameters};
use wedge::{wronskian_minors, Chart, Wedge};

/// Local exponents `α` and gaps `s` of a curve at one parameter.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RamificationProfile {
    pub parameter: P1Point,
    pub alpha: Vec<u32>,
    pub s: Vec<u32>,
}

impl RamificationProfile {
    /// Build from the gap list; `α₀ = 0`, `α_{k+1} = α_k + s_k + 1`.
    pub fn from_gaps(parameter: P1Point, s: Vec<u32>) -> Self {
        let mut alpha = vec![0];
        for sk in &s {
            alpha.push(alpha.last().unwrap() + sk + 1);
        }
        Self { parameter, alpha, s }
    }

    pub fn is_wpoint(&self) -> bool {
        self.s.iter().any(|&x| x > 0)
    }

    /// Weight of the point: its multiplicity in the full Wronskian.
    pub fn weight(&self) -> u32 {
        let n = self.s.len() as u32;
        self.s.iter().enumerate().map(|(k, s)| (n - k as u32) * s).sum()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveInvariants {
    /// Degrees `r_0 … r_{n−1}` of the associated curves.
    pub r: Vec<u32>,
    /// Profiles at every located W-point, ordered by parameter.
    pub profiles: Vec<RamificationProfile>,
    pub s_totals: Vec<u32>,
    pub genus: i64,
    pub wpoints: Vec<P1Point>,
    /// Part of the Wronskian without Q(i)-rational roots (monic).
    pub wpoint_residual: HomogPoly,
    /// Every W-point has weight one.
    pub simple_wpoints: bool,
}

impl CurveInvariants {
    pub fn wlocus_splits(&self) -> bool {
        self.wpoint_residual.degree() == 0
    }
}

fn require_nondegenerate(psi: &CurveMap) -> Result<()> {
    if psi.is_nondegenerate() {
        Ok(())
    } else {
        Err(Error::Degenerate { span: Box::new(psi.span()) })
    }
}

/// Associated curve of order `j`: the primitive tuple of `(j+1)`-minors of
/// the Wronskian matrix, in lexicographic wedge coordinates.
pub fn associated_curve(psi: &CurveMap, j: usize) -> Result<CurveMap> {
    if j >= psi.n() {
        return Err(Error::OutOfRange(format!("order {j} needs j < n = {}", psi.n())));
    }
    require_nondegenerate(psi)?;
    let wedge = Wedge::compute(psi, j)?;
    let primitive = wedge.primitive();
    let other = wronskian_minors(psi, j, Chart::Z);
    let g = HomogPoly::gcd_all(&other)?;
    let other: Vec<HomogPoly> = other.iter().map(|m| m.exact_div(&g).expect("gcd divides")).collect();
    let lhs = CurveMap::new(primitive)?;
    let rhs = CurveMap::new(other)?;
    if !lhs.same_map(&rhs) {
        return Err(Error::PluckerInconsistency(format!(
            "order-{j} wedge differs between the two affine charts"
        )));
    }
    Ok(lhs)
}

/// Valuations `v_{−1} = 0, v_0, …, v_n` of the wedge gcds at `t`.
fn valuations(gcds: &[HomogPoly], t: &P1Point) -> Vec<u32> {
    std::iter::once(0).chain(gcds.iter().map(|g| g.valuation_at(t))).collect()
}

fn gaps_from_valuations(v: &[u32]) -> Vec<u32> {
    // v[k + 1] is the valuation at order k
    (0..v.len() - 2)
        .map(|k| {
            let s = v[k + 2] as i64 - 2 * v[k + 1] as i64 + v[k] as i64;
            u32::try_from(s).expect("second differences of wedge valuations are non-negative")
        })
        .collect()
}

pub fn ramification_profile(psi: &CurveMap, t: &P1Point) -> Result<RamificationProfile> {
    require_nondegenerate(psi)?;
    let gcds = wedge::wedge_gcds(psi)?;
    Ok(RamificationProfile::from_gaps(t.clone(), gaps_from_valuations(&valuations(&gcds, t))))
}

pub fn curve_invariants(psi: &CurveMap) -> Result<CurveInvariants> {
    require_nondegenerate(psi)?;
    let n = psi.n();
    let d = psi.degree();
    let gcds = wedge::wedge_gcds(psi)?;
    let expected = |j: usize| (j as u32 + 1) * (d - j as u32);
    let r: Vec<u32> = (0..n).map(|j| expected(j) - gcds[j].degree()).collect();

    let wronskian = &gcds[n];
    let (roots, residual) = wronskian.linear_roots();
    let wpoints: Vec<P1Point> = roots.iter().map(|(p, _)| p.clone()).collect();
    let profiles: Vec<RamificationProfile> = wpoints
        .iter()
        .map(|t| RamificationProfile::from_gaps(t.clone(), gaps_from_valuations(&valuations(&gcds, t))))
        .collect();

    // degrees of the wedge gcds once the located W-points are removed
    let residual_degrees: Vec<i64> = std::iter::once(0)
        .chain(gcds.iter().map(|g| {
            let located: u32 = wpoints.iter().map(|t| g.valuation_at(t)).sum();
            (g.degree() - located) as i64
        }))
        .collect();
    let mut s_totals = Vec::with_capacity(n);
    for k in 0..n {
        let located: u32 = profiles.iter().map(|p| p.s[k]).sum();
        let res = residual_degrees[k + 2] - 2 * residual_degrees[k + 1] + residual_degrees[k];
        let total = located as i64 + res;
        if total < 0 {
            return Err(Error::PluckerInconsistency(format!("negative s-total at order {k}")));
        }
        s_totals.push(total as u32);
    }

    let genus = plucker_genus(&r, &s_totals)?;
    if genus != 0 {
        return Err(Error::PluckerInconsistency(format!("rational parametrization gave genus {genus}")));
    }
    let simple_wpoints = wronskian.squarefree().degree() == wronskian.degree();
    Ok(CurveInvariants { r, profiles, s_totals, genus, wpoints, wpoint_residual: residual, simple_wpoints })
}

/// Genus implied by `r_{k−1} − 2r_k + r_{k+1} = 2g − 2 − s_k` with `r_{−1} = r_n = 0`,
/// required to agree for every `k`.
pub fn plucker_genus(r: &[u32], s: &[u32]) -> Result<i64> {
    let n = r.len();
    let at = |k: isize| -> i64 {
        if k < 0 || k as usize >= n {
            0
        } else {
            r[k as usize] as i64
        }
    };
    let mut genus = None;
    for k in 0..n as isize {
        let twice = at(k - 1) - 2 * at(k) + at(k + 1) + 2 + s[k as usize] as i64;
        if twice % 2 != 0 {
            return Err(Error::PluckerInconsistency(format!("odd Euler characteristic at order {k}")));
        }
        match genus {
            None => genus = Some(twice / 2),
            Some(g) if g != twice / 2 => {
                return Err(Error::PluckerInconsistency(format!(
                    "genus {g} at order 0 but {} at order {k}",
                    twice / 2
                )))
            }
            _ => {}
        }
    }
    Ok(genus.unwrap_or(0))
}
