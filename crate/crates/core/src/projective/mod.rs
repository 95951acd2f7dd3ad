//! Projective space: points, subspaces, transformations and their classification.

mod classify;
mod mobius;
mod space;

pub use classify::{
    classify_transform, fixed_points, modulus_eigenspaces, orbit_is_distinct, Eigen, Elliptic, FixedPoints,
    Order, TransformClass, DEFAULT_ORDER_BOUND,
};
pub use mobius::MobiusTransform;
pub use space::{combinations, span, wedge_power, PnPoint, ProjSubspace, ProjTransform};

/// Apply `t` to `x`; see [`ProjTransform::apply`].
pub fn apply(t: &ProjTransform, x: &PnPoint) -> crate::error::Result<PnPoint> {
    t.apply(x)
}
