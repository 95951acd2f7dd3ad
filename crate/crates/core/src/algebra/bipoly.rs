//! Bivariate polynomials `Σ c_j(x) y^j` over Q(i), for elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::fp2::{crt, primes, symmetric, Field, Fp2};
use super::roots::GInt;
use super::{GaussianRational as G, Rational, UPoly};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    /// Coefficients of `y^j` as polynomials in `x`; no trailing zeros.
    coeffs: Vec<UPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(UPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `f(x)·g(y)`.
    pub fn product(f: &UPoly, g: &UPoly) -> Self {
        Self::new(g.coeffs().iter().map(|c| f.scale(c)).collect())
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> usize {
        self.coeffs.iter().filter_map(UPoly::degree).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = UPoly::zero();
        Self::new(
            (0..n)
                .map(|j| self.coeffs.get(j).unwrap_or(&z) + other.coeffs.get(j).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&G::from_int(-1)))
    }

    pub fn scale(&self, c: &G) -> Self {
        Self::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    fn mul_x(&self, f: &UPoly) -> Self {
        Self::new(self.coeffs.iter().map(|p| p * f).collect())
    }

    fn shift_y(&self, k: usize) -> Self {
        let mut coeffs = vec![UPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Specialize `x = x0`, giving a polynomial in `y`.
    pub fn at_x(&self, x0: &G) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|p| p.eval(x0)).collect())
    }

    /// Gcd of the coefficients (content in `x`), monic.
    pub fn content(&self) -> UPoly {
        self.coeffs.iter().fold(UPoly::zero(), |acc, c| UPoly::gcd(&acc, c))
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_constant() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|p| p.exact_div(&c).expect("content divides")).collect())
    }

    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.degree_y().expect("nonzero divisor");
        let lb = divisor.coeffs[db].clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree_y() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            r = r.mul_x(&lb).sub(&divisor.mul_x(&lr).shift_y(dr - db));
        }
        r
    }

    /// Gcd over Q(i)[x][y] up to a unit, via the primitive remainder sequence.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_part();
        }
        if b.is_zero() {
            return a.primitive_part();
        }
        let cont = UPoly::gcd(&a.content(), &b.content());
        let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
        if x.degree_y() < y.degree_y() {
            std::mem::swap(&mut x, &mut y);
        }
        loop {
            let r = x.pseudo_rem(&y);
            if r.is_zero() {
                return y.primitive_part().mul_x(&cont);
            }
            if r.degree_y() == Some(0) {
                return Self::new(vec![cont]);
            }
            x = y;
            y = r.primitive_part();
        }
    }
}

/// Resultant with respect to `y` of two bivariate polynomials, as a polynomial
/// in `x`, taken with the formal `y`-degrees.
///
/// After clearing denominators the resultant lies in Z[i][x]. It is computed
/// modulo inert primes by evaluation, elimination and interpolation, and
/// assembled by CRT once the modulus exceeds twice a Hadamard bound on its
/// coefficients. Reduction commutes with the formal Sylvester determinant, so
/// no prime is unlucky.
pub fn resultant_in_t(a: &BiPoly, b: &BiPoly) -> UPoly {
    let (Some(da), Some(db)) = (a.degree_y(), b.degree_y()) else {
        return UPoly::zero();
    };
    if da == 0 && db == 0 {
        return UPoly::one();
    }
    let (ia, sa) = integer_coeffs(a);
    let (ib, sb) = integer_coeffs(b);
    let npoints = da * b.degree_x() + db * a.degree_x() + 1;
    // coefficients are bounded by the maximum on the unit circle, which the
    // product of Sylvester row norms (entries bounded by their l1 norms) caps
    let row_bits = |c: &[Vec<GInt>]| -> u64 {
        let sq: BigInt = c.iter().map(|p| l1(p).pow(2)).sum();
        sq.bits().div_ceil(2)
    };
    let bound_bits = db as u64 * row_bits(&ia) + da as u64 * row_bits(&ib) + 2;
    let mut modulus = BigInt::one();
    let mut acc: Vec<GInt> = Vec::new();
    for p in primes() {
        if modulus.bits() > bound_bits {
            break;
        }
        let f = Field { p };
        let red = |c: &[Vec<GInt>]| -> Vec<Vec<Fp2>> {
            c.iter().map(|q| q.iter().map(|x| f.reduce(x)).collect()).collect()
        };
        let (ra, rb) = (red(&ia), red(&ib));
        let vals: Vec<Fp2> = (0..npoints as u64)
            .map(|x0| {
                let x0 = Fp2 { re: x0, im: 0 };
                let ev = |c: &[Vec<Fp2>]| -> Vec<Fp2> {
                    c.iter()
                        .map(|q| q.iter().rev().fold(f.zero(), |s, &k| f.add(f.mul(s, x0), k)))
                        .collect()
                };
                f.det(sylvester(&ev(&ra), &ev(&rb), f.zero()))
            })
            .collect();
        let mut img = f.interpolate(&vals);
        img.resize(npoints, f.zero());
        if acc.is_empty() {
            acc = img.iter().map(|c| (BigInt::from(c.re), BigInt::from(c.im))).collect();
        } else {
            for (slot, c) in acc.iter_mut().zip(&img) {
                slot.0 = crt(&slot.0, &modulus, c.re, p);
                slot.1 = crt(&slot.1, &modulus, c.im, p);
            }
        }
        modulus *= p;
    }
    let r = UPoly::new(
        acc.iter()
            .map(|(re, im)| {
                G::new(
                    Rational::from_integer(symmetric(re, &modulus)),
                    Rational::from_integer(symmetric(im, &modulus)),
                )
            })
            .collect(),
    );
    // undo the scaling: res(λa, μb) = λ^db μ^da res(a, b)
    let scale = &sa.pow(db as u32) * &sb.pow(da as u32);
    r.scale(&scale.inv().expect("nonzero scale"))
}

fn l1(p: &[GInt]) -> BigInt {
    p.iter().map(|(re, im)| re.abs() + im.abs()).sum()
}

/// Coefficients over Z[i] after multiplying by the returned scalar.
fn integer_coeffs(a: &BiPoly) -> (Vec<Vec<GInt>>, G) {
    let mut l = BigInt::one();
    for p in &a.coeffs {
        for c in p.coeffs() {
            l = l.lcm(&c.denominator_lcm());
        }
    }
    let scale = G::from_rational(Rational::from_integer(l));
    let coeffs = a
        .coeffs
        .iter()
        .map(|p| {
            p.coeffs()
                .iter()
                .map(|c| (c * &scale).as_gaussian_integer().expect("cleared denominators"))
                .collect()
        })
        .collect();
    (coeffs, scale)
}

/// Sylvester matrix of two coefficient vectors (constant term first).
fn sylvester<T: Clone>(a: &[T], b: &[T], zero: T) -> Vec<Vec<T>> {
    let (da, db) = (a.len() - 1, b.len() - 1);
    let n = da + db;
    let mut m = vec![vec![zero; n]; n];
    for i in 0..db {
        for (j, c) in a.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in b.iter().rev().enumerate() {
            m[db + i][i + j] = c.clone();
        }
    }
    m
}
