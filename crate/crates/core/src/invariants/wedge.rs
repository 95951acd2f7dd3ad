//! Exterior powers of the osculating frame: Wronskian minors and their gcds.

use crate::algebra::{HomogPoly, UPoly};
use crate::error::{Error, Result};
use crate::projective::combinations;

use super::CurveMap;

/// Determinant of a square matrix over Q(i)[x] by fraction-free elimination.
pub(crate) fn poly_det(mut m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut sign = false;
    let mut prev = UPoly::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return UPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Chart {
    /// affine parameter z/w
    W,
    /// affine parameter w/z
    Z,
}

/// All `(j+1)`-minors of the Wronskian matrix, homogenized to degree `(j+1)(d−j)`.
pub(crate) fn wronskian_minors(psi: &CurveMap, j: usize, chart: Chart) -> Vec<HomogPoly> {
    let n = psi.n();
    let d = psi.degree();
    let target = (j as u32 + 1) * d.saturating_sub(j as u32);
    if j as u32 > d {
        return vec![HomogPoly::zero(0); combinations(n + 1, j + 1).len()];
    }
    let affine: Vec<UPoly> = psi
        .coords()
        .iter()
        .map(|c| match chart {
            Chart::W => c.dehomogenize_w(),
            Chart::Z => c.dehomogenize_z(),
        })
        .collect();
    let derivs: Vec<Vec<UPoly>> = affine
        .iter()
        .map(|f| {
            let mut out = Vec::with_capacity(j + 1);
            let mut cur = f.clone();
            for _ in 0..=j {
                let next = cur.derivative();
                out.push(std::mem::replace(&mut cur, next));
            }
            out
        })
        .collect();
    combinations(n + 1, j + 1)
        .into_iter()
        .map(|idx| {
            let rows = (0..=j).map(|r| idx.iter().map(|&c| derivs[c][r].clone()).collect()).collect();
            let det = poly_det(rows);
            match chart {
                Chart::W => HomogPoly::homogenize_w(&det, target),
                Chart::Z => HomogPoly::homogenize_z(&det, target),
            }
        })
        .collect()
}

/// Wedge data at order `j`: raw minors, their gcd and the primitive tuple.
#[derive(Clone, Debug)]
pub(crate) struct Wedge {
    pub minors: Vec<HomogPoly>,
    pub gcd: HomogPoly,
}

impl Wedge {
    pub fn compute(psi: &CurveMap, j: usize) -> Result<Self> {
        let minors = wronskian_minors(psi, j, Chart::W);
        if minors.iter().all(HomogPoly::is_zero) {
            return Err(Error::Degenerate { span: Box::new(psi.span()) });
        }
        let gcd = HomogPoly::gcd_all(&minors)?;
        Ok(Self { minors, gcd })
    }

    pub fn primitive(&self) -> Vec<HomogPoly> {
        self.minors
            .iter()
            .map(|m| m.exact_div(&self.gcd).expect("gcd divides"))
            .collect()
    }
}

/// Gcds `G_0 … G_n` of the Wronskian minors of every order; `G_n` is the full Wronskian.
pub(crate) fn wedge_gcds(psi: &CurveMap) -> Result<Vec<HomogPoly>> {
    (0..=psi.n()).map(|j| Wedge::compute(psi, j).map(|w| w.gcd)).collect()
}
