//! Integer coefficients with a machine-word fast path.
//!
//! Almost every coefficient met during a state sum fits in an `i64`; the rare
//! ones that do not are promoted to a heap-allocated [`BigInt`].  The
//! representation is canonical: a value that fits in `i64` is always stored
//! as [`Coeff::Small`], so derived equality and hashing are value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(Box<BigInt>),
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0);
    pub const ONE: Coeff = Coeff::Small(1);

    fn from_big(b: BigInt) -> Coeff {
        match b.to_i64() {
            Some(v) => Coeff::Small(v),
            None => Coeff::Big(Box::new(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(v) => Some(*v),
            Coeff::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Coeff::Small(1) | Coeff::Small(-1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Coeff) -> Option<Coeff> {
        if d.is_zero() {
            return None;
        }
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, d) {
            if let Some(r) = a.checked_rem(*b) {
                return if r == 0 { a.checked_div(*b).map(Coeff::Small) } else { None };
            }
        }
        let (q, r) = self.to_bigint().div_rem(&d.to_bigint());
        if r.is_zero() {
            Some(Coeff::from_big(q))
        } else {
            None
        }
    }

    /// Non-negative greatest common divisor.
    pub fn gcd(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if *a != i64::MIN && *b != i64::MIN {
                return Coeff::Small(a.gcd(b));
            }
        }
        Coeff::from_big(self.to_bigint().gcd(&other.to_bigint()))
    }

    pub fn pow(&self, e: u32) -> Coeff {
        let mut acc = Coeff::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::ZERO
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<i32> for Coeff {
    fn from(v: i32) -> Self {
        Coeff::Small(v as i64)
    }
}

impl From<BigInt> for Coeff {
    fn from(b: BigInt) -> Self {
        Coeff::from_big(b)
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_bigint() + rhs.to_bigint())
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_bigint() - rhs.to_bigint())
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_bigint() * rhs.to_bigint())
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::from_big(-BigInt::from(*v)),
            },
            Coeff::Big(b) => Coeff::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

impl std::str::FromStr for Coeff {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Coeff::Small(v));
        }
        s.parse::<BigInt>().map(Coeff::from_big)
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::ONE
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Coeff::Small(i64::MAX);
        let sum = &big + &Coeff::ONE;
        assert!(matches!(sum, Coeff::Big(_)));
        let back = &sum - &Coeff::ONE;
        assert_eq!(back, Coeff::Small(i64::MAX));
        let neg = -&Coeff::Small(i64::MIN);
        assert!(matches!(neg, Coeff::Big(_)));
    }

    #[test]
    fn exact_division() {
        assert_eq!(Coeff::from(12).div_exact(&Coeff::from(-4)), Some(Coeff::from(-3)));
        assert_eq!(Coeff::from(12).div_exact(&Coeff::from(5)), None);
        let p = Coeff::from(1i64 << 40).pow(2);
        assert_eq!(p.div_exact(&Coeff::from(1i64 << 40)), Some(Coeff::from(1i64 << 40)));
    }
}
