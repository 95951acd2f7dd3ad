//! Deciding whether a curve preserved by an infinite-order transform is
//! projectively monomial, with exact certificates at every step.

mod certificate;
mod normalize;
mod special;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::CurveMap;
use crate::linalg::Matrix;
use crate::monomial::{iota, is_symmetric, jn_block, vk_element, ExponentTuple};
use crate::projective::{classify_transform, MobiusTransform, ProjSubspace, ProjTransform, TransformClass};

pub use certificate::{find_conjugating_mobius, InvarianceCertificate, SamplingConfig};
pub use normalize::{normalize_to_monomial, normalize_with_marked_point, NormalForm};
pub use special::{mobius_fixed_points, special_parameters, SpecialParameterSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub sampling: SamplingConfig,
    /// Largest power examined when deciding finite order.
    pub order_bound: u64,
    /// Longest generator word tried by the group search.
    pub word_bound: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            sampling: SamplingConfig::default(),
            order_bound: crate::projective::DEFAULT_ORDER_BOUND,
            word_bound: 6,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum ClassificationResult {
    MonomialEquivalent { k: ExponentTuple, h: ProjTransform, m: MobiusTransform, gcd_power: u32 },
    Degenerate { span: ProjSubspace },
    NotInvariant,
    InfiniteOrderFailed { class: TransformClass },
}

impl ClassificationResult {
    pub fn label(&self) -> &'static str {
        match self {
            Self::MonomialEquivalent { .. } => "MonomialEquivalent",
            Self::Degenerate { .. } => "Degenerate",
            Self::NotInvariant => "NotInvariant",
            Self::InfiniteOrderFailed { .. } => "InfiniteOrderFailed",
        }
    }

    /// Process exit code for this verdict.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::MonomialEquivalent { .. } | Self::Degenerate { .. } => 0,
            Self::NotInvariant => 2,
            Self::InfiniteOrderFailed { .. } => 3,
        }
    }
}

/// Verdict plus the evidence behind it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub result: ClassificationResult,
    pub transform_class: TransformClass,
    pub certificate: Option<InvarianceCertificate>,
    pub special: Option<SpecialParameterSet>,
    /// The transform, moved into the normal-form frame, is a symmetry of the
    /// model of the expected shape (diagonal, anti-diagonal or `ι_n`).
    pub normal_form_check: Option<bool>,
    pub warnings: Vec<String>,
}

/// Matrix `r` with `g · B = B · r` for the basis `B` of an invariant subspace.
fn restrict_to_span(g: &ProjTransform, span: &ProjSubspace) -> Option<Matrix> {
    let b = Matrix::from_columns(&span.basis_vectors());
    let gb = g.matrix() * &b;
    let cols: Vec<Vec<_>> = (0..gb.cols())
        .map(|j| {
            // solve B x = column j through the normal equations of a full-column-rank B
            let bt = b.transpose();
            (&bt * &b).solve(&bt.mul_vec(&gb.column(j)))
        })
        .collect::<Option<_>>()?;
    let r = Matrix::from_columns(&cols);
    (&b * &r == gb).then_some(r)
}

fn block_matches(full: &Matrix, block: &Matrix) -> bool {
    let s = block.rows();
    let n = full.rows();
    let idx: Vec<usize> = (0..s).collect();
    let lower: Vec<usize> = (s..n).collect();
    let off_zero = lower.is_empty() || full.select(&lower, &idx).is_zero();
    off_zero && full.select(&idx, &idx).canonical_scaling() == block.canonical_scaling()
}

/// Conjugate `g` into the normal-form frame and compare with the symmetry of
/// `ξ_k` predicted by its parameter action.
fn check_against_model(nf: &NormalForm, cert: &InvarianceCertificate) -> Result<bool> {
    if nf.gcd_power != 1 {
        return Ok(false);
    }
    let g = cert.transform.conjugate_by(&nf.h);
    let mu = nf.m.inverse().compose(&cert.mobius).compose(&nf.m);
    let s = nf.k.len();
    let local = ExponentTuple::new(nf.k.k().to_vec(), s)?;
    let expected = if nf.k.is_rational_normal() {
        iota(s, &mu)?
    } else if mu.is_diagonal() {
        let (a, _, _, d) = mu.entries();
        vk_element(&local, &a, &d)?
    } else if mu.is_antidiagonal() && is_symmetric(&local)? {
        let (_, b, c, _) = mu.entries();
        vk_element(&local, &b, &c)?.compose(&jn_block(s, s))
    } else {
        return Ok(false);
    };
    Ok(block_matches(g.matrix(), expected.matrix()))
}

/// The classification pipeline for a single transform.
pub fn classify_invariant_curve(psi: &CurveMap, g: &ProjTransform, opts: &ClassifyOptions) -> Result<Classification> {
    let class = classify_transform(g, opts.order_bound);
    let certificate = find_conjugating_mobius(psi, g, &opts.sampling)?;
    let mut out = Classification {
        result: ClassificationResult::NotInvariant,
        transform_class: class,
        certificate: certificate.clone(),
        special: None,
        normal_form_check: None,
        warnings: Vec::new(),
    };
    if !class.is_infinite() {
        out.result = ClassificationResult::InfiniteOrderFailed { class };
        return Ok(out);
    }
    let Some(cert) = certificate else {
        return Ok(out);
    };
    if !psi.is_nondegenerate() {
        let span = psi.span();
        if restrict_to_span(g, &span).is_some_and(|r| r.is_scalar()) {
            out.result = ClassificationResult::Degenerate { span };
            return Ok(out);
        }
    }
    let nf = normalize_to_monomial(psi)?;
    if nf.gcd_power > 1 {
        out.warnings.push(format!(
            "parametrization covers its image {} times; exponents divided by their gcd",
            nf.gcd_power
        ));
    }
    out.normal_form_check = Some(check_against_model(&nf, &cert)?);
    if let Some(center) = mobius_fixed_points(&cert.mobius).first() {
        out.special = Some(special_parameters(psi, &cert, &psi.eval(center))?);
    }
    out.result = ClassificationResult::MonomialEquivalent { k: nf.k, h: nf.h, m: nf.m, gcd_power: nf.gcd_power };
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupClassification {
    pub result: ClassificationResult,
    pub per_generator: Vec<Classification>,
    /// The verdict rests on the bounded word search rather than a certificate.
    pub heuristic: bool,
    /// Word of generator indices that produced an infinite-order element.
    pub witness_word: Option<Vec<usize>>,
    /// The recovered model is smooth (a line or a rational normal curve).
    pub smooth_model: Option<bool>,
}

fn smooth_model(result: &ClassificationResult) -> Option<bool> {
    match result {
        ClassificationResult::MonomialEquivalent { k, gcd_power, .. } => {
            Some(*gcd_power == 1 && k.is_rational_normal())
        }
        ClassificationResult::Degenerate { span } => Some(span.dim() == 1),
        _ => None,
    }
}

/// Classify a curve against a group given by generators.
pub fn classify_group(generators: &[ProjTransform], psi: &CurveMap, opts: &ClassifyOptions) -> Result<GroupClassification> {
    if generators.is_empty() {
        return Err(Error::DegenerateInput("no generators".into()));
    }
    let per_generator: Vec<Classification> = generators
        .iter()
        .map(|g| classify_invariant_curve(psi, g, opts))
        .collect::<Result<_>>()?;
    let finish = |result: ClassificationResult, per_generator, heuristic, witness_word| {
        let smooth = smooth_model(&result);
        Ok(GroupClassification { result, per_generator, heuristic, witness_word, smooth_model: smooth })
    };
    if let Some(c) = per_generator.iter().find(|c| matches!(c.result, ClassificationResult::MonomialEquivalent { .. })) {
        let result = c.result.clone();
        return finish(result, per_generator, false, None);
    }
    if let Some(c) = per_generator.iter().find(|c| c.certificate.is_none()) {
        let result = c.result.clone();
        let result = match result {
            ClassificationResult::InfiniteOrderFailed { .. } => ClassificationResult::NotInvariant,
            other => other,
        };
        return finish(result, per_generator, false, None);
    }
    // every generator preserves the curve but has finite order (or acts as a
    // scalar on the span): look for an infinite-order product
    let mut frontier: Vec<(Vec<usize>, ProjTransform)> =
        generators.iter().cloned().enumerate().map(|(i, g)| (vec![i], g)).collect();
    let mut seen: std::collections::HashSet<ProjTransform> = frontier.iter().map(|(_, g)| g.clone()).collect();
    for _ in 1..opts.word_bound {
        let mut next = Vec::new();
        for (word, w) in &frontier {
            for (i, g) in generators.iter().enumerate() {
                let prod = w.compose(g);
                if !seen.insert(prod.clone()) {
                    continue;
                }
                let mut word = word.clone();
                word.push(i);
                if classify_transform(&prod, opts.order_bound).is_infinite() {
                    let c = classify_invariant_curve(psi, &prod, opts)?;
                    return finish(c.result, per_generator, false, Some(word));
                }
                next.push((word, prod));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let result = if psi.is_nondegenerate() {
        per_generator[0].result.clone()
    } else {
        ClassificationResult::Degenerate { span: psi.span() }
    };
    finish(result, per_generator, true, None)
}
