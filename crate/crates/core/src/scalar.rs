//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. `BigRational` keeps itself in lowest terms with a
/// positive denominator, and zero is stored as `0/1`.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"` or `"p/q"` (optional leading sign, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^e` for a possibly negative exponent.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Element of ℚ[i].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    /// `i^p` for any integer `p`.
    pub fn i_pow(p: i64) -> Self {
        match p.rem_euclid(4) {
            0 => Self::real(int(1)),
            1 => Self::new(int(0), int(1)),
            2 => Self::real(int(-1)),
            _ => Self::new(int(0), int(-1)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.re * q, &self.im * q)
    }

    /// Exact quotient; `None` when dividing by zero.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let n = other.norm_sqr();
        if n.is_zero() {
            return None;
        }
        let p = self * &other.conj();
        Some(Self::new(p.re / &n, p.im / n))
    }

    /// If `self = i^p · r` with `r` a positive rational, returns `(p mod 4, r)`.
    pub fn as_i_power_times_positive(&self) -> Option<(u8, Rational)> {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => None,
            (false, true) if self.re.is_positive() => Some((0, self.re.clone())),
            (false, true) => Some((2, -self.re.clone())),
            (true, false) if self.im.is_positive() => Some((1, self.im.clone())),
            (true, false) => Some((3, -self.im.clone())),
            (false, false) => None,
        }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_rational(&self.im)),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{} - {}*i", fmt_rational(&self.re), fmt_rational(&-self.im.clone()))
                } else {
                    write!(f, "{} + {}*i", fmt_rational(&self.re), fmt_rational(&self.im))
                }
            }
        }
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: Self) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: Self) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: Self) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}
