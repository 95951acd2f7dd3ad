//! The Gaussian rationals Q(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Rational = BigRational;

/// An exact element `re + im·i` of Q(i).
///
/// Both parts are kept reduced by `BigRational`, so derived equality is
/// structural equality of the canonical representation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    pub fn from_int(re: i64) -> Self {
        Self::from_ints(re, 0)
    }

    pub fn from_rational(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`.
    pub fn from_fracs(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            Rational::new(re_num.into(), re_den.into()),
            Rational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re² + im²`, an exact rational.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Whether this is one of the four roots of unity in Q(i).
    pub fn is_unit_root(&self) -> bool {
        self.pow(4).is_one()
    }

    /// Multiplicative order when `self` is a root of unity (1, 2 or 4).
    pub fn root_of_unity_order(&self) -> Option<u32> {
        [1u32, 2, 4].into_iter().find(|&k| self.pow(k).is_one())
    }

    /// Exact square root in Q(i), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                rational_sqrt(&-self.re.clone()).map(|r| Self::new(Rational::zero(), r))
            } else {
                rational_sqrt(&self.re).map(Self::from_rational)
            };
        }
        let modulus = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(2.into());
        let a = rational_sqrt(&((&modulus + &self.re) / &two))?;
        let mut b = rational_sqrt(&((&modulus - &self.re) / &two))?;
        if self.im.is_negative() {
            b = -b;
        }
        let root = Self::new(a, b);
        debug_assert_eq!(&(&root * &root), self);
        Some(root)
    }

    /// Common denominator of both parts (positive).
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// Numerator pair `(a, b)` when `self = a + b i` has integer parts.
    pub fn as_gaussian_integer(&self) -> Option<(BigInt, BigInt)> {
        if self.re.is_integer() && self.im.is_integer() {
            Some((self.re.to_integer(), self.im.to_integer()))
        } else {
            None
        }
    }

    /// A crude size measure used to order search candidates.
    pub fn height(&self) -> BigInt {
        let parts = [self.re.numer(), self.re.denom(), self.im.numer(), self.im.denom()];
        parts.iter().map(|v| v.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

pub(crate) fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a fraction string: {s:?}"));
    if t.is_empty() || t.contains('.') {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

#[derive(Serialize, Deserialize)]
struct GaussianJson {
    re: String,
    #[serde(default = "zero_string")]
    im: String,
}

fn zero_string() -> String {
    "0".to_string()
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GaussianJson { re: self.re.to_string(), im: self.im.to_string() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        // real shorthands: `3` or `"-1/2"`
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Full(GaussianJson),
            Text(String),
            Int(i64),
        }
        let (re, im) = match Raw::deserialize(deserializer)? {
            Raw::Full(g) => (g.re, g.im),
            Raw::Text(t) => (t, zero_string()),
            Raw::Int(k) => return Ok(Self::from_int(k)),
        };
        let re = parse_rational(&re).map_err(serde::de::Error::custom)?;
        let im = parse_rational(&im).map_err(serde::de::Error::custom)?;
        Ok(Self::new(re, im))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $tr<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_rational(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero, like the rational division it wraps.
impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv().expect("division by zero in Q(i)")
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for GaussianRational {
    fn from(v: Rational) -> Self {
        Self::from_rational(v)
    }
}
