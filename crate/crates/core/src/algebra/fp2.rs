//! The field F_p[i] = F_{p²} for primes p ≡ 3 (mod 4), and dense polynomials
//! over it. Reductions of Z[i] land here without losing the imaginary unit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::roots::GInt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(super) struct Fp2 {
    pub re: u64,
    pub im: u64,
}

impl Fp2 {
    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub(super) struct Field {
    pub p: u64,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Primes ≡ 3 (mod 4) descending from 2³¹.
pub(super) fn primes() -> impl Iterator<Item = u64> {
    (0..).map(|k| (1u64 << 31) - 1 - 4 * k).filter(|&n| is_prime(n))
}

impl Field {
    pub fn zero(&self) -> Fp2 {
        Fp2 { re: 0, im: 0 }
    }
    pub fn one(&self) -> Fp2 {
        Fp2 { re: 1, im: 0 }
    }
    pub fn add(&self, a: Fp2, b: Fp2) -> Fp2 {
        Fp2 { re: (a.re + b.re) % self.p, im: (a.im + b.im) % self.p }
    }
    pub fn sub(&self, a: Fp2, b: Fp2) -> Fp2 {
        Fp2 { re: (a.re + self.p - b.re) % self.p, im: (a.im + self.p - b.im) % self.p }
    }
    pub fn neg(&self, a: Fp2) -> Fp2 {
        self.sub(self.zero(), a)
    }
    pub fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    pub fn mul(&self, a: Fp2, b: Fp2) -> Fp2 {
        let rr = self.mulm(a.re, b.re);
        let ii = self.mulm(a.im, b.im);
        let ri = self.mulm(a.re, b.im);
        let ir = self.mulm(a.im, b.re);
        Fp2 { re: (rr + self.p - ii) % self.p, im: (ri + ir) % self.p }
    }
    pub fn powm(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        acc
    }
    pub fn inv(&self, a: Fp2) -> Fp2 {
        // a⁻¹ = ā / N(a); N(a) ≠ 0 since -1 is a non-residue
        let n = (self.mulm(a.re, a.re) + self.mulm(a.im, a.im)) % self.p;
        let ni = self.powm(n, self.p - 2);
        Fp2 { re: self.mulm(a.re, ni), im: self.mulm((self.p - a.im) % self.p, ni) }
    }
    pub fn reduce(&self, a: &GInt) -> Fp2 {
        let p = BigInt::from(self.p);
        let r = |x: &BigInt| x.mod_floor(&p).to_u64().unwrap();
        Fp2 { re: r(&a.0), im: r(&a.1) }
    }

    pub fn reduce_poly(&self, f: &[GInt]) -> Vec<Fp2> {
        let mut v: Vec<Fp2> = f.iter().map(|c| self.reduce(c)).collect();
        trim(&mut v);
        v
    }

    pub fn make_monic(&self, v: &mut [Fp2]) {
        let li = self.inv(*v.last().unwrap());
        for c in v.iter_mut() {
            *c = self.mul(*c, li);
        }
    }

    /// Remainder of `a` by nonzero `b`.
    pub fn rem(&self, mut a: Vec<Fp2>, b: &[Fp2]) -> Vec<Fp2> {
        trim(&mut a);
        let db = b.len() - 1;
        let li = self.inv(b[db]);
        while a.len() > db {
            let lead = self.mul(*a.last().unwrap(), li);
            let shift = a.len() - 1 - db;
            for (j, &c) in b.iter().enumerate() {
                a[shift + j] = self.sub(a[shift + j], self.mul(lead, c));
            }
            trim(&mut a);
        }
        a
    }

    /// Quotient of `a` by `b` when the division is exact.
    pub fn div(&self, a: &[Fp2], b: &[Fp2]) -> Vec<Fp2> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let li = self.inv(b[db]);
        let mut q = vec![self.zero(); a.len().saturating_sub(db)];
        while r.len() > db {
            let lead = self.mul(*r.last().unwrap(), li);
            let shift = r.len() - 1 - db;
            q[shift] = lead;
            for (j, &c) in b.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(lead, c));
            }
            r.pop();
        }
        q
    }

    pub fn mul_poly(&self, a: &[Fp2], b: &[Fp2]) -> Vec<Fp2> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        out
    }

    /// `base^e mod m`.
    pub fn powmod(&self, base: &[Fp2], mut e: u128, m: &[Fp2]) -> Vec<Fp2> {
        let mut acc = vec![self.one()];
        let mut b = self.rem(base.to_vec(), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(self.mul_poly(&acc, &b), m);
            }
            b = self.rem(self.mul_poly(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self, a: &[Fp2]) -> Vec<Fp2> {
        let mut out: Vec<Fp2> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| self.mul(c, Fp2 { re: k as u64 % self.p, im: 0 }))
            .collect();
        trim(&mut out);
        out
    }

    /// Monic gcd by Euclid.
    pub fn gcd(&self, mut a: Vec<Fp2>, mut b: Vec<Fp2>) -> Vec<Fp2> {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = self.rem(a, &b);
            a = b;
            b = r;
        }
        if !a.is_empty() {
            self.make_monic(&mut a);
        }
        a
    }

    /// All roots in F_{p²} of a squarefree polynomial.
    pub fn roots(&self, f: &[Fp2]) -> Vec<Fp2> {
        let q = self.p as u128 * self.p as u128;
        let x = [self.zero(), self.one()];
        let mut xq = self.powmod(&x, q, f);
        // x^q - x
        if xq.len() < 2 {
            xq.resize(2, self.zero());
        }
        xq[1] = self.sub(xq[1], self.one());
        let linear = self.gcd(f.to_vec(), xq);
        let mut out = Vec::new();
        self.split(linear, q, &mut 1, &mut out);
        out
    }

    /// Equal-degree splitting of a product of distinct linear factors.
    fn split(&self, g: Vec<Fp2>, q: u128, salt: &mut u64, out: &mut Vec<Fp2>) {
        match g.len() {
            0 | 1 => return,
            2 => {
                out.push(self.neg(self.mul(g[0], self.inv(g[1]))));
                return;
            }
            _ => {}
        }
        loop {
            *salt += 1;
            let a = Fp2 { re: *salt % self.p, im: (salt.wrapping_mul(7919) + 3) % self.p };
            let mut t = self.powmod(&[a, self.one()], (q - 1) / 2, &g);
            if t.is_empty() {
                t.push(self.zero());
            }
            t[0] = self.sub(t[0], self.one());
            trim(&mut t);
            let d = self.gcd(g.clone(), t);
            if d.len() > 1 && d.len() < g.len() {
                let rest = self.div(&g, &d);
                self.split(d, q, salt, out);
                self.split(rest, q, salt, out);
                return;
            }
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, mut m: Vec<Vec<Fp2>>) -> Fp2 {
        let n = m.len();
        let mut acc = self.one();
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return self.zero();
            };
            if piv != k {
                m.swap(piv, k);
                acc = self.neg(acc);
            }
            acc = self.mul(acc, m[k][k]);
            let inv = self.inv(m[k][k]);
            for i in k + 1..n {
                let factor = self.mul(m[i][k], inv);
                if factor.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    m[i][j] = self.sub(m[i][j], self.mul(factor, m[k][j]));
                }
            }
        }
        acc
    }

    /// Interpolating polynomial through `(i, ys[i])`, `i = 0, 1, …`.
    pub fn interpolate(&self, ys: &[Fp2]) -> Vec<Fp2> {
        let n = ys.len();
        let at = |k: usize| Fp2 { re: k as u64 % self.p, im: 0 };
        let mut dd = ys.to_vec();
        for level in 1..n {
            let inv = self.inv(at(level));
            for i in (level..n).rev() {
                dd[i] = self.mul(self.sub(dd[i], dd[i - 1]), inv);
            }
        }
        let mut acc: Vec<Fp2> = Vec::new();
        for i in (0..n).rev() {
            // acc·(x - i) + dd[i]
            let mut next = vec![self.zero(); acc.len() + 1];
            for (j, &c) in acc.iter().enumerate() {
                next[j + 1] = self.add(next[j + 1], c);
                next[j] = self.sub(next[j], self.mul(c, at(i)));
            }
            next[0] = self.add(next[0], dd[i]);
            acc = next;
        }
        trim(&mut acc);
        acc
    }
}

/// Symmetric lift of `x mod m`.
pub(super) fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// The `y ≡ x (mod m)`, `y ≡ r (mod p)` representative in `[0, m·p)`.
pub(super) fn crt(x: &BigInt, m: &BigInt, r: u64, p: u64) -> BigInt {
    let pb = BigInt::from(p);
    let f = Field { p };
    let mi = f.powm(m.mod_floor(&pb).to_u64().unwrap(), p - 2);
    let diff = (BigInt::from(r) - x).mod_floor(&pb).to_u64().unwrap();
    x + m * BigInt::from(f.mulm(diff, mi))
}

pub(super) fn trim(v: &mut Vec<Fp2>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}
