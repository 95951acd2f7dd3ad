use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GaussianRational as G;
use crate::error::{Error, Result};

/// A point of the projective line, scaled so its first nonzero entry is 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct P1Point {
    z: G,
    w: G,
}

impl P1Point {
    pub fn new(z: G, w: G) -> Result<Self> {
        if z.is_zero() && w.is_zero() {
            return Err(Error::DegenerateInput("[0,0] is not a point of P^1".into()));
        }
        Ok(if z.is_zero() {
            Self { z, w: G::one() }
        } else {
            let w = &w / &z;
            Self { z: G::one(), w }
        })
    }

    /// The affine parameter `t` as the point `[t, 1]`.
    pub fn affine(t: G) -> Self {
        Self::new(t, G::one()).expect("w = 1")
    }

    /// `[1, 0]`.
    pub fn one_zero() -> Self {
        Self { z: G::one(), w: G::zero() }
    }

    /// `[0, 1]`.
    pub fn zero_one() -> Self {
        Self { z: G::zero(), w: G::one() }
    }

    pub fn z(&self) -> &G {
        &self.z
    }

    pub fn w(&self) -> &G {
        &self.w
    }

    /// `z / w`, or `None` for `[1, 0]`.
    pub fn affine_value(&self) -> Option<G> {
        (!self.w.is_zero()).then(|| &self.z / &self.w)
    }
}

impl Ord for P1Point {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.z.re, &self.z.im, &self.w.re, &self.w.im).cmp(&(
            &other.z.re,
            &other.z.im,
            &other.w.re,
            &other.w.im,
        ))
    }
}

impl PartialOrd for P1Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.z, self.w)
    }
}

impl<'de> Deserialize<'de> for P1Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            z: G,
            w: G,
        }
        let raw = Raw::deserialize(d)?;
        P1Point::new(raw.z, raw.w).map_err(serde::de::Error::custom)
    }
}
