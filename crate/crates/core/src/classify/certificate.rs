//! Recovering the parameter action of a transform preserving a curve.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{GaussianRational as G, P1Point};
use crate::error::{Error, Result};
use crate::invariants::CurveMap;
use crate::projective::{MobiusTransform, ProjTransform};

/// `g ∘ ψ = ψ ∘ g̃`, checked as a polynomial identity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InvarianceCertificate {
    pub transform: ProjTransform,
    pub mobius: MobiusTransform,
    pub verified: bool,
}

impl InvarianceCertificate {
    /// Re-check the identity from scratch.
    pub fn check(&self, psi: &CurveMap) -> bool {
        psi.transform(&self.transform)
            .map(|lhs| lhs.same_map(&psi.reparametrize(&self.mobius)))
            .unwrap_or(false)
    }
}

/// How sample parameters are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    /// `None` walks the fixed sequence 1, 2, 1+i, 3, 2+i, …; a seed draws
    /// small random Gaussian rationals instead.
    pub seed: Option<u64>,
    /// Number of fresh triples tried before giving up.
    pub retry_bound: u32,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        Self { seed: None, retry_bound: 8 }
    }
}

/// Endless stream of distinct sample parameters.
pub(crate) struct Samples {
    rng: Option<ChaCha8Rng>,
    shell: i64,
    step: i64,
    seen: std::collections::HashSet<G>,
}

impl Samples {
    pub fn new(seed: Option<u64>) -> Self {
        Self { rng: seed.map(ChaCha8Rng::seed_from_u64), shell: 1, step: 0, seen: Default::default() }
    }
}

impl Iterator for Samples {
    type Item = G;

    fn next(&mut self) -> Option<G> {
        loop {
            let t = match &mut self.rng {
                Some(rng) => G::from_fracs(
                    rng.gen_range(-9..=9),
                    rng.gen_range(1..=4),
                    rng.gen_range(-9..=9),
                    rng.gen_range(1..=4),
                ),
                None => {
                    // a + bi with a ≥ 1, b ≥ 0, by increasing a + b then b
                    let t = G::from_ints(self.shell - self.step, self.step);
                    self.step += 1;
                    if self.step == self.shell {
                        self.shell += 1;
                        self.step = 0;
                    }
                    t
                }
            };
            if !t.is_zero() && self.seen.insert(t.clone()) {
                return Some(t);
            }
        }
    }
}

enum Inverted {
    Unique(P1Point),
    /// The point is not on the curve at all.
    OffCurve,
    /// Several or irrational preimages; try another sample.
    Ambiguous,
}

fn invert(psi: &CurveMap, q: &crate::projective::PnPoint) -> Result<Inverted> {
    let fibre = psi.fiber(q)?;
    if fibre.degree() == 0 {
        return Ok(Inverted::OffCurve);
    }
    if fibre.degree() > 1 {
        return Ok(Inverted::Ambiguous);
    }
    let (roots, _) = fibre.linear_roots();
    Ok(Inverted::Unique(roots[0].0.clone()))
}

/// Find `g̃` with `g ∘ ψ = ψ ∘ g̃`; `Ok(None)` means `g` does not preserve the curve.
pub fn find_conjugating_mobius(
    psi: &CurveMap,
    g: &ProjTransform,
    config: &SamplingConfig,
) -> Result<Option<InvarianceCertificate>> {
    if g.n() != psi.n() {
        return Err(Error::DimensionMismatch { expected: psi.n(), found: g.n() });
    }
    let image = psi.transform(g)?;
    let mut samples = Samples::new(config.seed);
    let mut consecutive_ambiguous = 0u32;
    let ambiguity_limit = 3 * config.retry_bound.max(1);
    for _ in 0..config.retry_bound.max(1) {
        let mut pairs: Vec<(P1Point, P1Point)> = Vec::with_capacity(3);
        while pairs.len() < 3 {
            let t = P1Point::affine(samples.next().unwrap());
            // the sample itself must be a simple point of the curve
            match invert(psi, &psi.eval(&t))? {
                Inverted::Unique(_) => consecutive_ambiguous = 0,
                _ => {
                    consecutive_ambiguous += 1;
                    if consecutive_ambiguous >= ambiguity_limit {
                        return Err(Error::AmbiguousInversion(
                            "generic fibres have several parameters; the parametrization is not birational"
                                .into(),
                        ));
                    }
                    continue;
                }
            }
            match invert(psi, &image.eval(&t))? {
                Inverted::Unique(s) => {
                    if pairs.iter().all(|(_, s0)| s0 != &s) {
                        pairs.push((t, s));
                    }
                }
                // a point of the curve is sent off it: certainly not invariant
                Inverted::OffCurve => return Ok(None),
                Inverted::Ambiguous => {}
            }
        }
        let src = [pairs[0].0.clone(), pairs[1].0.clone(), pairs[2].0.clone()];
        let dst = [pairs[0].1.clone(), pairs[1].1.clone(), pairs[2].1.clone()];
        let Ok(mobius) = MobiusTransform::through_three_points(&src, &dst) else {
            continue;
        };
        if image.same_map(&psi.reparametrize(&mobius)) {
            return Ok(Some(InvarianceCertificate { transform: g.clone(), mobius, verified: true }));
        }
    }
    Ok(None)
}
