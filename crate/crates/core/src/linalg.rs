//! Dense matrices over Q(i) with exact elimination.

use std::fmt;
use std::ops::Mul;

use crate::algebra::{GaussianRational as G, UPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<G>,
}

/// Reduced row echelon form of `a`, with `transform · a = rref`.
pub struct Rref {
    pub rref: Matrix,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![G::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![G::one(); n])
    }

    pub fn diagonal(d: &[G]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<G>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn from_columns(cols: &[Vec<G>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[G] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[G] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<G> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &G) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[G]) -> Vec<G> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = G::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn trace(&self) -> G {
        let mut acc = G::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(G::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Whether this is a scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.is_square() && self.is_diagonal() && self.data.first().is_none_or(|d0| {
            (0..self.rows).all(|i| &self[(i, i)] == d0)
        })
    }

    pub fn rref(&self) -> Rref {
        let mut a = self.clone();
        let mut t = Self::identity(self.rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            t.swap_rows(r, p);
            let inv = a[(r, c)].inv().unwrap();
            a.scale_row(r, &inv);
            t.scale_row(r, &inv);
            for i in 0..self.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    a.add_row_multiple(i, r, &-&f);
                    t.add_row_multiple(i, r, &-&f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rref: a, pivots, transform: t }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<G>> {
        let Rref { rref, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![G::zero(); self.cols];
                v[f] = G::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&rref[(r, f)];
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> G {
        assert!(self.is_square());
        let mut a = self.clone();
        let n = self.rows;
        let mut det = G::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return G::zero();
            };
            if p != c {
                a.swap_rows(c, p);
                det = -det;
            }
            let pivot = a[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                if !a[(i, c)].is_zero() {
                    let f = &a[(i, c)] * &inv;
                    a.add_row_multiple(i, c, &-&f);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let Rref { pivots, transform, .. } = self.rref();
        (pivots.len() == self.rows).then_some(transform)
    }

    /// Solve `self · x = b` for one solution, if consistent.
    pub fn solve(&self, b: &[G]) -> Option<Vec<G>> {
        let Rref { rref, pivots, transform } = self.rref();
        let tb = transform.mul_vec(b);
        if tb[pivots.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = vec![G::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = tb[r].clone();
        }
        debug_assert_eq!(self.mul_vec(&x), b);
        let _ = rref;
        Some(x)
    }

    /// Characteristic polynomial `det(x I - A)` (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> UPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![G::zero(); n + 1];
        coeffs[n] = G::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n + 1 - k];
            }
            m = next;
            let am = self * &m;
            coeffs[n - k] = &am.trace() * &G::from_fracs(-1, k as i64, 0, 1);
        }
        UPoly::new(coeffs)
    }

    /// Submatrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Scaled so the first nonzero entry (row-major) is 1.
    pub fn canonical_scaling(&self) -> Self {
        match self.data.iter().find(|x| !x.is_zero()) {
            Some(f) => self.scale(&f.inv().unwrap()),
            None => self.clone(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &G) {
        for j in 0..self.cols {
            self.data[r * self.cols + j] *= c;
        }
    }

    fn add_row_multiple(&mut self, target: usize, src: usize, f: &G) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j];
            if !v.is_zero() {
                let t = v * f;
                self.data[target * self.cols + j] += &t;
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = G;
    fn index(&self, (i, j): (usize, usize)) -> &G {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut G {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}
