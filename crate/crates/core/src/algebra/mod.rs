//! Exact scalar and polynomial arithmetic over the Gaussian rationals.

mod bipoly;
mod fp2;
mod gaussian;
mod homog;
mod modgcd;
mod p1;
mod prs;
mod roots;
mod upoly;

pub use bipoly::{resultant_in_t, BiPoly};
pub use gaussian::{GaussianRational, Rational};
pub use homog::HomogPoly;
pub use p1::P1Point;
pub use roots::univariate_roots;
pub use upoly::UPoly;

use crate::error::Result;

/// Monic gcd of two forms; see [`HomogPoly::gcd`].
pub fn poly_gcd(p: &HomogPoly, q: &HomogPoly) -> Result<HomogPoly> {
    HomogPoly::gcd(p, q)
}

/// Q(i)-rational roots of a nonzero form with multiplicities, and the residual.
pub fn linear_roots(p: &HomogPoly) -> (Vec<(P1Point, u32)>, HomogPoly) {
    p.linear_roots()
}

/// Order of vanishing of a nonzero form at `t`.
pub fn valuation_at(p: &HomogPoly, t: &P1Point) -> u32 {
    p.valuation_at(t)
}
