//! Shared generators and independent oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's polynomial machinery
//! (Bareiss wedges, modular gcds, p-adic roots): they work on dense affine
//! coefficient vectors with schoolbook arithmetic and cofactor expansion.

#![allow(dead_code)]

use curvact::algebra::{GaussianRational as G, HomogPoly, P1Point};
use curvact::invariants::CurveMap;
use curvact::linalg::Matrix;
use curvact::projective::{MobiusTransform, ProjTransform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Gaussian rational with numerators in `[-h, h]` and denominators in `1..=h`.
pub fn rand_g(rng: &mut ChaCha8Rng, h: i64) -> G {
    G::from_fracs(rng.gen_range(-h..=h), rng.gen_range(1..=h), rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

pub fn rand_nonzero(rng: &mut ChaCha8Rng, h: i64) -> G {
    loop {
        let g = rand_g(rng, h);
        if !g.is_zero() {
            return g;
        }
    }
}

pub fn rand_matrix(rng: &mut ChaCha8Rng, size: usize, h: i64) -> Matrix {
    loop {
        let data = (0..size * size).map(|_| rand_g(rng, h)).collect();
        let m = Matrix::from_vec(size, size, data);
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn rand_transform(rng: &mut ChaCha8Rng, n: usize, h: i64) -> ProjTransform {
    ProjTransform::new(rand_matrix(rng, n + 1, h)).unwrap()
}

pub fn rand_mobius(rng: &mut ChaCha8Rng, h: i64) -> MobiusTransform {
    let m = rand_matrix(rng, 2, h);
    MobiusTransform::new(m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone(), m[(1, 1)].clone()).unwrap()
}

pub fn rand_point(rng: &mut ChaCha8Rng, h: i64) -> P1Point {
    loop {
        if let Ok(p) = P1Point::new(rand_g(rng, h), rand_g(rng, h)) {
            return p;
        }
    }
}

pub fn rand_homog(rng: &mut ChaCha8Rng, degree: u32, h: i64) -> HomogPoly {
    HomogPoly::from_dense(degree, (0..=degree).map(|_| rand_g(rng, h)).collect())
}

/// Random non-degenerate curve of the given degree in P^n (retrying on
/// non-primitive or degenerate draws).
pub fn rand_curve(rng: &mut ChaCha8Rng, n: usize, degree: u32, h: i64) -> CurveMap {
    loop {
        let coords = (0..=n).map(|_| rand_homog(rng, degree, h)).collect();
        if let Ok(c) = CurveMap::new(coords) {
            if c.is_nondegenerate() {
                return c;
            }
        }
    }
}

pub fn monomial(exps: &[u32]) -> CurveMap {
    let d = exps[0];
    CurveMap::new(exps.iter().map(|&e| HomogPoly::monomial(G::one(), e, d - e)).collect()).unwrap()
}

pub fn int(v: i64) -> G {
    G::from_int(v)
}

// ---------------------------------------------------------------------------
// Dense affine polynomials over Q(i): index = power of the variable.

pub type P = Vec<G>;

pub fn trim(mut p: P) -> P {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn deg(p: &P) -> Option<usize> {
    trim(p.clone()).len().checked_sub(1)
}

pub fn add(a: &P, b: &P) -> P {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| &a.get(i).cloned().unwrap_or_else(G::zero) + &b.get(i).cloned().unwrap_or_else(G::zero)).collect())
}

pub fn neg(a: &P) -> P {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &P, b: &P) -> P {
    add(a, &neg(b))
}

pub fn mul(a: &P, b: &P) -> P {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![G::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

pub fn deriv(a: &P) -> P {
    trim(a.iter().enumerate().skip(1).map(|(k, c)| c * &int(k as i64)).collect())
}

pub fn eval(a: &P, x: &G) -> G {
    a.iter().rev().fold(G::zero(), |acc, c| &(&acc * x) + c)
}

/// Remainder by Euclidean division.
pub fn rem(a: &P, b: &P) -> P {
    let b = trim(b.clone());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().unwrap();
    let mut r = trim(a.clone());
    while r.len() > db {
        let q = &r[r.len() - 1] * &lead_inv;
        let shift = r.len() - 1 - db;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&q * c);
        }
        r = trim(r);
    }
    r
}

/// Monic gcd by the Euclidean algorithm over Q(i).
pub fn gcd(a: &P, b: &P) -> P {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    match x.last() {
        None => x,
        Some(l) => {
            let li = l.inv().unwrap();
            x.iter().map(|c| c * &li).collect()
        }
    }
}

/// Determinant of a matrix of polynomials by cofactor expansion.
pub fn det(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: P = Vec::new();
    for col in 0..n {
        let minor: Vec<Vec<P>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, e)| e.clone()).collect()).collect();
        let term = mul(&m[0][col], &det(&minor));
        acc = if col % 2 == 0 { add(&acc, &term) } else { sub(&acc, &term) };
    }
    acc
}

pub fn combos(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if n < r {
        return Vec::new();
    }
    let mut out = combos(n - 1, r);
    for mut c in combos(n - 1, r - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}

/// Coordinates in the chart `w = 1`.
pub fn affine_coords(psi: &CurveMap) -> Vec<P> {
    psi.coords().iter().map(|c| trim(c.to_dense())).collect()
}

/// All `(j+1)`-minors of the derivative matrix in the chart `w = 1`, in
/// lexicographic order, homogenized to the formal degree `(j+1)(d−j)`.
pub fn wedge_minors(psi: &CurveMap, j: usize) -> Vec<HomogPoly> {
    let d = psi.degree() as usize;
    let f = affine_coords(psi);
    let mut rows: Vec<Vec<P>> = vec![f.clone()];
    for _ in 0..j {
        let next = rows.last().unwrap().iter().map(deriv).collect();
        rows.push(next);
    }
    let formal = (j + 1) * (d - j);
    combos(f.len(), j + 1)
        .into_iter()
        .map(|cols| {
            let mut m = det(&rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect::<Vec<_>>());
            m.resize(formal + 1, G::zero());
            HomogPoly::from_dense(formal as u32, m)
        })
        .collect()
}

/// Degree of the order-`j` associated curve straight from the definition:
/// the gcd of the minors and the extra vanishing at infinity read off from
/// the formal degree.
pub fn wedge_degree(psi: &CurveMap, j: usize) -> u32 {
    let minors: Vec<P> = wedge_minors(psi, j).iter().map(|m| trim(m.to_dense())).filter(|p| !p.is_empty()).collect();
    let formal = (j + 1) * (psi.degree() as usize - j);
    assert!(!minors.is_empty(), "wedge vanishes identically");
    let g = minors.iter().fold(Vec::new(), |acc, m| gcd(&acc, m));
    let at_infinity = minors.iter().map(|m| formal - deg(m).unwrap()).min().unwrap();
    (formal - deg(&g).unwrap() - at_infinity) as u32
}

/// Local vanishing orders `α` at `t` by definition: Taylor coefficients of
/// the coordinates in a local parameter, then the first column index at
/// which the rank of the leading columns grows.
pub fn alpha_definitional(psi: &CurveMap, t: &P1Point) -> Vec<u32> {
    let d = psi.degree() as usize;
    let n = psi.n();
    // columns: Taylor coefficients of each coordinate in the local parameter
    let taylor: Vec<Vec<G>> = match t.affine_value() {
        Some(a) => {
            // f(a + u): repeated derivatives divided by factorials
            affine_coords(psi)
                .iter()
                .map(|f| {
                    let mut cur = f.clone();
                    let mut fact = G::one();
                    (0..=d)
                        .map(|l| {
                            if l > 0 {
                                cur = deriv(&cur);
                                fact = &fact * &int(l as i64);
                            }
                            &eval(&cur, &a) / &fact
                        })
                        .collect()
                })
                .collect()
        }
        // chart z = 1: the coefficient of w^l is the z^{d−l} coefficient
        None => psi.coords().iter().map(|c| (0..=d).map(|l| c.coeff((d - l) as u32)).collect()).collect(),
    };
    let mut alpha = Vec::new();
    let mut rank = 0;
    for l in 0..=d {
        let cols: Vec<Vec<G>> = (0..=l).map(|c| taylor.iter().map(|row| row[c].clone()).collect()).collect();
        let r = Matrix::from_columns(&cols).rank();
        if r > rank {
            alpha.push(l as u32);
            rank = r;
        }
        if rank == n + 1 {
            break;
        }
    }
    alpha
}

/// `s_k = α_{k+1} − α_k − 1`.
pub fn gaps_of(alpha: &[u32]) -> Vec<u32> {
    alpha.windows(2).map(|w| w[1] - w[0] - 1).collect()
}

/// `h ∘ ψ = ψ ∘ m` up to a common scalar, checked by cross-multiplication of
/// expanded coordinates (no library identity checker involved).
pub fn maps_agree(lhs: &[HomogPoly], rhs: &[HomogPoly]) -> bool {
    assert_eq!(lhs.len(), rhs.len());
    let nz = (0..lhs.len()).find(|&i| !lhs[i].is_zero());
    let Some(i0) = nz else { return rhs.iter().all(HomogPoly::is_zero) };
    (0..lhs.len()).all(|j| {
        let a = mul(&lhs[j].to_dense(), &rhs[i0].to_dense());
        let b = mul(&rhs[j].to_dense(), &lhs[i0].to_dense());
        trim(a) == trim(b)
    })
}

/// `M · (f_0, …, f_n)` as explicit linear combinations.
pub fn apply_matrix(m: &Matrix, coords: &[HomogPoly]) -> Vec<HomogPoly> {
    let d = coords[0].degree();
    (0..m.rows())
        .map(|i| {
            let mut acc = vec![G::zero(); d as usize + 1];
            for (j, c) in coords.iter().enumerate() {
                for (e, v) in c.to_dense().into_iter().enumerate() {
                    acc[e] = &acc[e] + &(&m[(i, j)] * &v);
                }
            }
            HomogPoly::from_dense(d, acc)
        })
        .collect()
}

/// `f(az + bw, cz + dw)` by binomial expansion of each term.
pub fn substitute(f: &HomogPoly, a: &G, b: &G, c: &G, dd: &G) -> HomogPoly {
    let d = f.degree();
    let lin_z: P = vec![b.clone(), a.clone()]; // a z + b w in the w = 1 chart
    let lin_w: P = vec![dd.clone(), c.clone()];
    let mut acc: P = Vec::new();
    for (e, coeff) in f.to_dense().into_iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mut term: P = vec![coeff];
        for _ in 0..e {
            term = mul(&term, &lin_z);
        }
        for _ in 0..(d as usize - e) {
            term = mul(&term, &lin_w);
        }
        acc = add(&acc, &term);
    }
    acc.resize(d as usize + 1, G::zero());
    HomogPoly::from_dense(d, acc)
}

/// Scalar determinant by cofactor expansion.
pub fn det_g(m: &[Vec<G>]) -> G {
    let lifted: Vec<Vec<P>> = m.iter().map(|r| r.iter().map(|c| trim(vec![c.clone()])).collect()).collect();
    det(&lifted).first().cloned().unwrap_or_else(G::zero)
}

/// Schoolbook matrix product.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            for k in 0..a.cols() {
                out[(i, j)] = &out[(i, j)] + &(&a[(i, k)] * &b[(k, j)]);
            }
        }
    }
    out
}

/// The transform sending `src[i]` to `dst[i]` for `n + 2` points in general
/// position, by the standard frame construction.
pub fn frame_fit(src: &[Vec<G>], dst: &[Vec<G>]) -> ProjTransform {
    fn to_frame(pts: &[Vec<G>]) -> Matrix {
        let n = pts.len() - 2;
        let a = Matrix::from_columns(&pts[..=n]);
        let c = a.solve(&pts[n + 1]).expect("general position");
        let cols: Vec<Vec<G>> = (0..=n).map(|j| pts[j].iter().map(|x| x * &c[j]).collect()).collect();
        Matrix::from_columns(&cols)
    }
    let a = to_frame(src);
    let b = to_frame(dst);
    ProjTransform::new(mat_mul(&b, &a.inverse().unwrap())).unwrap()
}
