//! Integers that stay in `i128` while they fit and promote to [`BigInt`] on overflow.
//!
//! Every operation first tries checked 128-bit arithmetic; the slow path is only
//! taken when a result genuinely leaves the `i128` range. Results are always
//! normalized, so `Big` never holds a value that would fit in `Small`. That makes
//! the derived `Eq` and `Hash` agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Wide {
    Small(i128),
    Big(BigInt),
}

impl Wide {
    pub const ZERO: Wide = Wide::Small(0);
    pub const ONE: Wide = Wide::Small(1);

    fn from_big(b: BigInt) -> Wide {
        match b.to_i128() {
            Some(v) => Wide::Small(v),
            None => Wide::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Wide::Small(v) => BigInt::from(*v),
            Wide::Big(b) => b.clone(),
        }
    }

    pub fn to_i128(&self) -> Option<i128> {
        match self {
            Wide::Small(v) => Some(*v),
            Wide::Big(_) => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_i128().and_then(|v| i64::try_from(v).ok())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_i128().and_then(|v| u64::try_from(v).ok())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Wide::Small(v) => *v as f64,
            Wide::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Wide::Small(0))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Wide::Small(v) => v.signum() as i32,
            Wide::Big(b) => match b.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Wide {
        match self {
            Wide::Small(v) => match v.checked_abs() {
                Some(a) => Wide::Small(a),
                None => Wide::Big(BigInt::from(*v).abs()),
            },
            Wide::Big(b) => Wide::Big(b.abs()),
        }
    }

    pub fn square(&self) -> Wide {
        self * self
    }

    /// Non-negative greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Wide) -> Wide {
        match (self, other) {
            (Wide::Small(a), Wide::Small(b)) => {
                let g = a.unsigned_abs().gcd(&b.unsigned_abs());
                match i128::try_from(g) {
                    Ok(v) => Wide::Small(v),
                    Err(_) => Wide::Big(BigInt::from(g)),
                }
            }
            _ => Wide::from_big(self.to_bigint().gcd(&other.to_bigint())),
        }
    }

    /// Truncating division, `None` when `d == 0`.
    pub fn checked_div(&self, d: &Wide) -> Option<Wide> {
        if d.is_zero() {
            return None;
        }
        match (self, d) {
            (Wide::Small(a), Wide::Small(b)) => match a.checked_div(*b) {
                Some(q) => Some(Wide::Small(q)),
                None => Some(Wide::from_big(BigInt::from(*a) / BigInt::from(*b))),
            },
            _ => Some(Wide::from_big(self.to_bigint() / d.to_bigint())),
        }
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, d: &Wide) -> Option<Wide> {
        if d.is_zero() || !self.rem_euclid(d).is_zero() {
            return None;
        }
        self.checked_div(d)
    }

    /// Remainder in `[0, |d|)`. Panics on a zero modulus.
    pub fn rem_euclid(&self, d: &Wide) -> Wide {
        assert!(!d.is_zero(), "modulus must be non-zero");
        match (self, d) {
            (Wide::Small(a), Wide::Small(b)) => match a.checked_rem_euclid(*b) {
                Some(r) => Wide::Small(r),
                None => Wide::Small(0),
            },
            _ => {
                let m = d.to_bigint().abs();
                let r = self.to_bigint().mod_floor(&m);
                Wide::from_big(r)
            }
        }
    }

    pub fn rem_u64(&self, q: u64) -> u64 {
        self.rem_euclid(&Wide::from(q)).to_u64().expect("remainder below a u64 modulus")
    }

    pub fn divisible_by(&self, d: &Wide) -> bool {
        self.rem_euclid(d).is_zero()
    }

    /// Floor square root of a non-negative value.
    pub fn isqrt(&self) -> Option<Wide> {
        match self {
            Wide::Small(v) if *v >= 0 => Some(Wide::Small((*v as u128).sqrt() as i128)),
            Wide::Big(b) if !b.is_negative() => Some(Wide::from_big(b.sqrt())),
            _ => None,
        }
    }

    /// Exact square root when `self` is a perfect square.
    pub fn exact_sqrt(&self) -> Option<Wide> {
        let r = self.isqrt()?;
        if &r.square() == self {
            Some(r)
        } else {
            None
        }
    }
}

impl Default for Wide {
    fn default() -> Self {
        Wide::ZERO
    }
}

macro_rules! wide_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Wide {
            fn from(v: $t) -> Wide {
                Wide::Small(v as i128)
            }
        }
    )*};
}
wide_from!(i8, i16, i32, i64, u8, u16, u32, u64, usize);

impl From<i128> for Wide {
    fn from(v: i128) -> Wide {
        Wide::Small(v)
    }
}

impl From<u128> for Wide {
    fn from(v: u128) -> Wide {
        match i128::try_from(v) {
            Ok(s) => Wide::Small(s),
            Err(_) => Wide::Big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Wide {
    fn from(b: BigInt) -> Wide {
        Wide::from_big(b)
    }
}

impl Ord for Wide {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Wide::Small(a), Wide::Small(b)) => a.cmp(b),
            (Wide::Small(_), Wide::Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Wide::Big(a), Wide::Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Wide::Big(a), Wide::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Wide {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Wide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Wide::Small(v) => write!(f, "{v}"),
            Wide::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Wide {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i128>() {
            return Ok(Wide::Small(v));
        }
        s.parse::<BigInt>().map(Wide::from_big)
    }
}

macro_rules! wide_binop {
    ($tr:ident, $method:ident, $checked:ident, $op:tt) => {
        impl<'a> $tr<&'a Wide> for &'a Wide {
            type Output = Wide;
            fn $method(self, rhs: &'a Wide) -> Wide {
                if let (Wide::Small(a), Wide::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Wide::Small(v);
                    }
                }
                Wide::from_big(self.to_bigint() $op rhs.to_bigint())
            }
        }
        impl $tr<Wide> for Wide {
            type Output = Wide;
            fn $method(self, rhs: Wide) -> Wide {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Wide> for Wide {
            type Output = Wide;
            fn $method(self, rhs: &'a Wide) -> Wide {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Wide> for &'a Wide {
            type Output = Wide;
            fn $method(self, rhs: Wide) -> Wide {
                self.$method(&rhs)
            }
        }
    };
}

wide_binop!(Add, add, checked_add, +);
wide_binop!(Sub, sub, checked_sub, -);
wide_binop!(Mul, mul, checked_mul, *);

impl Neg for &Wide {
    type Output = Wide;
    fn neg(self) -> Wide {
        match self {
            Wide::Small(v) => match v.checked_neg() {
                Some(n) => Wide::Small(n),
                None => Wide::Big(-BigInt::from(*v)),
            },
            Wide::Big(b) => Wide::from_big(-b),
        }
    }
}

impl Neg for Wide {
    type Output = Wide;
    fn neg(self) -> Wide {
        -&self
    }
}

impl std::iter::Sum for Wide {
    fn sum<I: Iterator<Item = Wide>>(iter: I) -> Wide {
        iter.fold(Wide::ZERO, |acc, v| acc + v)
    }
}

impl<'a> std::iter::Sum<&'a Wide> for Wide {
    fn sum<I: Iterator<Item = &'a Wide>>(iter: I) -> Wide {
        iter.fold(Wide::ZERO, |acc, v| acc + v)
    }
}

impl Zero for Wide {
    fn zero() -> Self {
        Wide::ZERO
    }
    fn is_zero(&self) -> bool {
        Wide::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Wide::from(i128::MAX) + Wide::ONE;
        assert!(matches!(big, Wide::Big(_)));
        let back = big - Wide::ONE;
        assert_eq!(back, Wide::Small(i128::MAX));
        let sq = Wide::from(i128::MAX).square();
        assert_eq!(sq.exact_sqrt(), Some(Wide::from(i128::MAX)));
    }

    #[test]
    fn ordering_across_representations() {
        let big = Wide::from(i128::MAX) * Wide::from(4u8);
        let neg_big = -&big;
        assert!(big > Wide::from(5));
        assert!(neg_big < Wide::from(i128::MIN));
        assert!(neg_big < big);
    }

    #[test]
    fn rem_and_gcd() {
        assert_eq!(Wide::from(-7).rem_euclid(&Wide::from(3)), Wide::from(2));
        assert_eq!(Wide::from(-12).gcd(&Wide::from(18)), Wide::from(6));
        assert_eq!(Wide::from(12).div_exact(&Wide::from(5)), None);
        assert_eq!(Wide::from(-12).div_exact(&Wide::from(4)), Some(Wide::from(-3)));
    }

    #[test]
    fn parse_decimal_strings() {
        let w: Wide = "46923183273602".parse().unwrap();
        assert_eq!(w, Wide::from(46923183273602i64));
        let huge: Wide = "-1000000000000000000000000000000000000000000".parse().unwrap();
        assert!(matches!(huge, Wide::Big(_)));
        assert_eq!(huge.to_string(), "-1000000000000000000000000000000000000000000");
    }

    proptest! {
        #[test]
        fn matches_bigint(a in any::<i128>(), b in any::<i128>()) {
            let (wa, wb) = (Wide::from(a), Wide::from(b));
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!((&wa + &wb).to_bigint(), &ba + &bb);
            prop_assert_eq!((&wa - &wb).to_bigint(), &ba - &bb);
            prop_assert_eq!((&wa * &wb).to_bigint(), &ba * &bb);
            prop_assert_eq!(wa.cmp(&wb), ba.cmp(&bb));
        }
    }
}
