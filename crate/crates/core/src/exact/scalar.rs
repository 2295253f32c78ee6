//! Exact rationals and Gaussian rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.trim().parse().ok()?)),
    }
}

/// Gaussian rational `re + i·im`. Rationals are the `im = 0` case.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Scalar { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::real(rat(n))
    }

    pub fn i() -> Self {
        Scalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn gauss(re: i64, im: i64) -> Self {
        Scalar { re: rat(re), im: rat(im) }
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// |z|² = re² + im²
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Scalar { re: &self.re * r, im: &self.im * r }
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero scalar");
        Scalar { re: &self.re / &n, im: -(&self.im / &n) }
    }

    /// Multiplication by `i^k`.
    pub fn times_i_pow(&self, k: u32) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => Scalar { re: -self.im.clone(), im: self.re.clone() },
            2 => -self.clone(),
            _ => Scalar { re: self.im.clone(), im: -self.re.clone() },
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::real(r)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar { re: Rational::one(), im: Rational::zero() }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar::real(&self.re * &o.re);
        }
        Scalar { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, o: Scalar) {
        *self = &*self * &o;
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        &self * &o.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for Scalar {
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
