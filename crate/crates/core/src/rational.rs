//! Reduced fractions over [`Wide`] integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::wide::Wide;

/// A fraction in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Wide,
    den: Wide,
}

impl Rational {
    pub fn zero() -> Rational {
        Rational { num: Wide::ZERO, den: Wide::ONE }
    }

    pub fn integer(v: impl Into<Wide>) -> Rational {
        Rational { num: v.into(), den: Wide::ONE }
    }

    /// Builds `num / den` in lowest terms. Returns `None` when `den == 0`.
    pub fn new(num: impl Into<Wide>, den: impl Into<Wide>) -> Option<Rational> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    fn reduce(num: Wide, den: Wide) -> Rational {
        let g = num.gcd(&den);
        let (mut num, mut den) = if g == Wide::ONE || g.is_zero() {
            (num, den)
        } else {
            (num.checked_div(&g).unwrap(), den.checked_div(&g).unwrap())
        };
        if num.is_zero() {
            den = Wide::ONE;
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &Wide {
        &self.num
    }

    pub fn denom(&self) -> &Wide {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den == Wide::ONE
    }

    pub fn signum(&self) -> i32 {
        self.num.signum()
    }

    pub fn square(&self) -> Rational {
        Rational { num: self.num.square(), den: self.den.square() }
    }

    pub fn recip(&self) -> Option<Rational> {
        Rational::new(self.den.clone(), self.num.clone())
    }

    /// Exact square root when both numerator and denominator are perfect squares.
    pub fn exact_sqrt(&self) -> Option<Rational> {
        if self.num.is_negative() {
            return None;
        }
        Some(Rational { num: self.num.exact_sqrt()?, den: self.den.exact_sqrt()? })
    }

    /// Residue of this fraction modulo a prime `q` that does not divide the denominator.
    pub fn residue_mod(&self, q: u64) -> Option<u64> {
        let d = self.den.rem_u64(q);
        if d == 0 {
            return None;
        }
        let n = self.num.rem_u64(q);
        Some(mul_mod(n, inv_mod(d, q)?, q))
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

/// Inverse of `a` modulo `q`, if it exists.
pub(crate) fn inv_mod(a: u64, q: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (q as i128, (a % q) as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(q as i128) as u64)
}

impl From<Wide> for Rational {
    fn from(v: Wide) -> Rational {
        Rational::integer(v)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Rational {
        Rational::integer(v)
    }
}

impl Add<&Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        Rational::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub<&Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl Mul<&Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}`", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: Wide = n.trim().parse().map_err(|_| err())?;
                let d: Wide = d.trim().parse().map_err(|_| err())?;
                Rational::new(n, d).ok_or_else(err)
            }
            None => s.parse::<Wide>().map(Rational::integer).map_err(|_| err()),
        }
    }
}
