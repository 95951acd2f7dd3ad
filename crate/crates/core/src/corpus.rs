//! Random invariant curves with known normal forms, for end-to-end checks.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::GaussianRational as G;
use crate::error::{Error, Result};
use crate::invariants::CurveMap;
use crate::linalg::Matrix;
use crate::monomial::{make_monomial_curve, vk_element, ExponentTuple};
use crate::projective::{MobiusTransform, ProjTransform};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// Ambient dimensions to draw from.
    pub dims: Vec<usize>,
    /// Explicit tuples to draw from; when empty, random proper tuples with
    /// leading exponent in `n..=max_degree`.
    #[serde(default)]
    pub tuples: Vec<Vec<u32>>,
    pub max_degree: u32,
    /// Bound on `|re| + |im|` for the entries of `h` and `m`.
    pub height: i64,
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.height < 1 {
            return Err(Error::OutOfRange("height bound must be at least 1".into()));
        }
        if self.count < 1 {
            return Err(Error::OutOfRange("count must be at least 1".into()));
        }
        if self.dims.is_empty() && self.tuples.is_empty() {
            return Err(Error::OutOfRange("no ambient dimensions".into()));
        }
        if self.tuples.is_empty() && self.dims.iter().any(|&n| n < 1 || self.max_degree < n as u32) {
            return Err(Error::OutOfRange("max_degree must be at least every dimension".into()));
        }
        for k in &self.tuples {
            let t = ExponentTuple::new(k.clone(), k.len())?;
            if !t.is_proper() {
                return Err(Error::NotProper(k.clone()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Instance {
    pub index: usize,
    pub curve: CurveMap,
    pub transform: ProjTransform,
}

/// Hidden data: `curve = h ∘ ξ_k ∘ m` and `transform = h · d · h⁻¹`,
/// `d = diag-torus element for (α, β)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroundTruth {
    pub index: usize,
    pub k: ExponentTuple,
    pub h: ProjTransform,
    pub m: MobiusTransform,
    pub d: ProjTransform,
    pub alpha: G,
    pub beta: G,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Corpus {
    #[serde(default)]
    pub spec: Option<CorpusSpec>,
    pub instances: Vec<Instance>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Sidecar {
    pub instances: Vec<GroundTruth>,
}

fn gaussian_integer(rng: &mut ChaCha8Rng, height: i64) -> G {
    let re = rng.gen_range(-height..=height);
    let rest = height - re.abs();
    let im = rng.gen_range(-rest..=rest);
    G::from_ints(re, im)
}

fn nonsingular(rng: &mut ChaCha8Rng, size: usize, height: i64) -> Matrix {
    loop {
        let data = (0..size * size).map(|_| gaussian_integer(rng, height)).collect();
        let m = Matrix::from_vec(size, size, data);
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn random_tuple(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> ExponentTuple {
    loop {
        let k1 = rng.gen_range(n as u32..=max_degree);
        let mut pool: Vec<u32> = (1..k1).collect();
        pool.shuffle(rng);
        let mut k: Vec<u32> = std::iter::once(k1).chain(pool.into_iter().take(n - 1)).collect();
        k.sort_unstable_by(|a, b| b.cmp(a));
        if k.iter().fold(0, |g, e| g.gcd(e)) == 1 {
            return ExponentTuple::new(k, n).expect("valid by construction").canonical();
        }
    }
}

fn torus_parameters(rng: &mut ChaCha8Rng, height: i64) -> (G, G) {
    let h = height.max(2);
    loop {
        let (a, b) = (gaussian_integer(rng, h), gaussian_integer(rng, h));
        if !a.is_zero() && !b.is_zero() && a.pow(4) != b.pow(4) {
            return (a, b);
        }
    }
}

/// Deterministic for a given spec.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<(Corpus, Sidecar)> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut instances = Vec::with_capacity(spec.count);
    let mut truths = Vec::with_capacity(spec.count);
    for index in 0..spec.count {
        let k = if spec.tuples.is_empty() {
            let n = *spec.dims.choose(&mut rng).unwrap();
            random_tuple(&mut rng, n, spec.max_degree)
        } else {
            let k = spec.tuples.choose(&mut rng).unwrap();
            ExponentTuple::new(k.clone(), k.len())?.canonical()
        };
        let n = k.n();
        let h = ProjTransform::new(nonsingular(&mut rng, n + 1, spec.height))?;
        let mm = nonsingular(&mut rng, 2, spec.height);
        let m = MobiusTransform::new(mm[(0, 0)].clone(), mm[(0, 1)].clone(), mm[(1, 0)].clone(), mm[(1, 1)].clone())?;
        let (alpha, beta) = torus_parameters(&mut rng, spec.height);
        let d = vk_element(&k, &alpha, &beta)?;
        let curve = make_monomial_curve(&k).reparametrize(&m).transform(&h)?;
        let transform = d.conjugate_by(&h);
        instances.push(Instance { index, curve, transform });
        truths.push(GroundTruth { index, k, h, m, d, alpha, beta });
    }
    Ok((Corpus { spec: Some(spec.clone()), instances }, Sidecar { instances: truths }))
}
