//! Order, ellipticity and eigenstructure of projective transformations.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{PnPoint, ProjSubspace, ProjTransform};
use crate::algebra::{univariate_roots, GaussianRational as G, Rational, UPoly};
use crate::linalg::Matrix;

/// Default bound for the fallback power test.
pub const DEFAULT_ORDER_BOUND: u64 = 360;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum Order {
    Finite(u64),
    Infinite,
    /// Spectrum did not split over Q(i) and no power up to the bound was scalar.
    Undecided(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Elliptic {
    Yes,
    No,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformClass {
    pub order: Order,
    pub elliptic: Elliptic,
}

impl TransformClass {
    pub fn is_infinite(&self) -> bool {
        self.order == Order::Infinite
    }
}

/// Eigenvalues in Q(i) with their eigenspaces, plus the factor of the
/// characteristic polynomial that has no Q(i) roots.
#[derive(Clone, Debug)]
pub struct FixedPoints {
    pub eigen: Vec<Eigen>,
    pub residual: UPoly,
}

#[derive(Clone, Debug)]
pub struct Eigen {
    pub value: G,
    pub algebraic_multiplicity: u32,
    pub eigenspace: ProjSubspace,
}

impl FixedPoints {
    pub fn splits(&self) -> bool {
        self.residual.is_constant()
    }

    pub fn is_diagonalizable(&self) -> bool {
        self.splits()
            && self
                .eigen
                .iter()
                .all(|e| e.eigenspace.dim() + 1 == e.algebraic_multiplicity as isize)
    }
}

pub fn fixed_points(t: &ProjTransform) -> FixedPoints {
    let a = t.matrix();
    let n = t.n();
    let (roots, residual) = univariate_roots(&a.char_poly());
    let eigen = roots
        .into_iter()
        .map(|(value, m)| {
            let shifted = a.sub(&Matrix::identity(n + 1).scale(&value));
            let eigenspace = ProjSubspace::from_vectors(n, &shifted.nullspace());
            Eigen { value, algebraic_multiplicity: m, eigenspace }
        })
        .collect();
    FixedPoints { eigen, residual }
}

/// Exact verdict when the spectrum splits over Q(i); otherwise a bounded
/// power search.
pub fn classify_transform(t: &ProjTransform, bound: u64) -> TransformClass {
    let fp = fixed_points(t);
    if !fp.splits() {
        return match first_scalar_power(t, bound) {
            Some(k) => TransformClass { order: Order::Finite(k), elliptic: Elliptic::Yes },
            None => TransformClass { order: Order::Undecided(bound), elliptic: Elliptic::Undecided },
        };
    }
    if !fp.is_diagonalizable() {
        return TransformClass { order: Order::Infinite, elliptic: Elliptic::No };
    }
    let base = &fp.eigen[0].value;
    let base_norm = base.norm();
    let mut order = Some(1u64);
    let mut elliptic = true;
    for e in &fp.eigen[1..] {
        let ratio = &e.value / base;
        order = match (order, ratio.root_of_unity_order()) {
            (Some(o), Some(k)) => Some(o.lcm(&(k as u64))),
            _ => None,
        };
        if e.value.norm() != base_norm {
            elliptic = false;
        }
    }
    TransformClass {
        order: order.map_or(Order::Infinite, Order::Finite),
        elliptic: if elliptic { Elliptic::Yes } else { Elliptic::No },
    }
}

fn first_scalar_power(t: &ProjTransform, bound: u64) -> Option<u64> {
    let mut acc = t.matrix().clone();
    for k in 1..=bound {
        if acc.is_scalar() {
            return Some(k);
        }
        acc = (&acc * t.matrix()).canonical_scaling();
    }
    None
}

/// Sums of eigenspaces grouped by squared eigenvalue modulus, in increasing
/// modulus order. For a non-elliptic split transform, points off the union
/// of the proper members have infinite orbits.
pub fn modulus_eigenspaces(t: &ProjTransform) -> Vec<(Rational, ProjSubspace)> {
    let fp = fixed_points(t);
    let mut groups: Vec<(Rational, ProjSubspace)> = Vec::new();
    for e in fp.eigen {
        let m = e.value.norm();
        match groups.iter_mut().find(|(k, _)| *k == m) {
            Some((_, s)) => *s = s.join(&e.eigenspace),
            None => groups.push((m, e.eigenspace)),
        }
    }
    groups.sort_by(|a, b| a.0.cmp(&b.0));
    groups
}

/// Whether the first `count` points of the forward orbit of `x` are distinct.
pub fn orbit_is_distinct(t: &ProjTransform, x: &PnPoint, count: usize) -> bool {
    let mut seen = vec![x.clone()];
    let mut cur = x.clone();
    for _ in 1..count {
        cur = t.apply(&cur).expect("dimension checked");
        if seen.contains(&cur) {
            return false;
        }
        seen.push(cur.clone());
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(entries: &[G]) -> ProjTransform {
        ProjTransform::diagonal(entries).unwrap()
    }

    #[test]
    fn finite_elliptic() {
        let t = diag(&[G::one(), G::i(), G::from_int(-1)]);
        let c = classify_transform(&t, DEFAULT_ORDER_BOUND);
        assert_eq!(c.order, Order::Finite(4));
        assert_eq!(c.elliptic, Elliptic::Yes);
        assert!(t.pow(4).is_identity());
    }

    #[test]
    fn infinite_loxodromic() {
        let t = diag(&[G::from_int(2), G::one(), G::one()]);
        let c = classify_transform(&t, DEFAULT_ORDER_BOUND);
        assert_eq!(c, TransformClass { order: Order::Infinite, elliptic: Elliptic::No });
        assert!((1..=20).all(|k| !t.pow(k).is_identity()));
    }

    #[test]
    fn infinite_elliptic() {
        let t = diag(&[G::from_fracs(3, 5, 4, 5), G::one(), G::one()]);
        let c = classify_transform(&t, DEFAULT_ORDER_BOUND);
        assert_eq!(c, TransformClass { order: Order::Infinite, elliptic: Elliptic::Yes });
        assert!((1..=20).all(|k| !t.pow(k).is_identity()));
    }

    #[test]
    fn unipotent_is_infinite() {
        let t = ProjTransform::from_int_rows(&[&[1, 1], &[0, 1]]).unwrap();
        let c = classify_transform(&t, DEFAULT_ORDER_BOUND);
        assert_eq!(c, TransformClass { order: Order::Infinite, elliptic: Elliptic::No });
    }

    #[test]
    fn non_split_falls_back_to_powers() {
        // order-3 rotation: char poly x^2 + x + 1 has no Q(i) roots
        let t = ProjTransform::from_int_rows(&[&[0, -1], &[1, -1]]).unwrap();
        assert_eq!(classify_transform(&t, 10).order, Order::Finite(3));
        // x^2 - 3x + 1, infinite order
        let t = ProjTransform::from_int_rows(&[&[2, 1], &[1, 1]]).unwrap();
        assert_eq!(classify_transform(&t, 10).order, Order::Undecided(10));
    }

    #[test]
    fn eigenstructure() {
        let t = ProjTransform::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        let fp = fixed_points(&t);
        assert!(fp.splits());
        assert_eq!(fp.eigen.len(), 3);
        for e in &fp.eigen {
            assert_eq!(e.eigenspace.dim(), 0);
            let p = &e.eigenspace.basis()[0];
            assert_eq!(&t.apply(p).unwrap(), p);
        }
        let id = fixed_points(&ProjTransform::identity(2));
        assert_eq!(id.eigen.len(), 1);
        assert_eq!(id.eigen[0].eigenspace, ProjSubspace::whole(2));
    }

    #[test]
    fn modulus_lattice_and_orbits() {
        let t = diag(&[G::from_int(4), G::from_int(2), G::one()]);
        assert_eq!(modulus_eigenspaces(&t).len(), 3);
        let x = PnPoint::from_ints(&[1, 1, 1]).unwrap();
        assert!(orbit_is_distinct(&t, &x, 30));
        let r = diag(&[G::one(), G::i(), G::from_int(-1)]);
        assert!(!orbit_is_distinct(&r, &x, 30));
    }
}
