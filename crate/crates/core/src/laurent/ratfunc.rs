use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd::{gcd, normalize};
use super::poly::{LaurentPoly, Mono};
use super::LaurentError;

/// A reduced fraction of Laurent polynomials.
///
/// The denominator is coprime to the numerator, carries no monomial factor
/// and has a positive leading coefficient; with that normal form, derived
/// equality is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(inv) = den.unit_inverse() {
            return Ok(RatFunc { num: &num * &inv, den: LaurentPoly::one() });
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let dn = normalize(&d);
        // dn = u * d for a unit u; apply the same unit to the numerator.
        let u = unit_ratio(&dn, &d);
        Ok(RatFunc { num: &n * &u, den: dn })
    }

    /// Shorthand for `new` when the denominator is known to be non-zero.
    pub fn frac(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::new(num, den).expect("non-zero denominator")
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial value, if the denominator is a unit.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self, LaurentError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(RatFunc { num: base.num.pow(e.unsigned_abs()), den: base.den.pow(e.unsigned_abs()) })
    }

    pub fn substitute_monomial(&self, m: [[i32; 2]; 2]) -> Result<Self, LaurentError> {
        Self::new(self.num.substitute_monomial(m), self.den.substitute_monomial(m))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::frac(&self.num * p, self.den.clone())
    }
}

fn unit_ratio(target: &LaurentPoly, source: &LaurentPoly) -> LaurentPoly {
    let (mt, ct) = target.leading().unwrap();
    let (ms, cs) = source.leading().unwrap();
    let sign = if ct.is_negative() == cs.is_negative() { 1 } else { -1 };
    LaurentPoly::term(mt.div(*ms), sign.into())
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::frac(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::frac(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::frac(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// `q^(a*alpha + b) - q^-(a*alpha + b)` as a rational function.
pub fn curly_rat(a: i32, b: i32) -> RatFunc {
    RatFunc::from_poly(super::poly::curly(a, b))
}

/// The quantum integer `[x] = {x}/{1}` for `x = a*alpha + b`.
pub fn qint(a: i32, b: i32) -> RatFunc {
    RatFunc::frac(super::poly::curly(a, b), super::poly::curly(0, 1))
}

/// `s^a q^b`
pub fn mono_rat(a: i32, b: i32) -> RatFunc {
    RatFunc::from_poly(LaurentPoly::term(Mono::new(a, b), 1.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_is_canonical() {
        let a = RatFunc::frac(super::super::poly::curly(0, 2), super::super::poly::curly(0, 1));
        assert_eq!(a, RatFunc::from_poly(LaurentPoly::from_triples([(0, 1, 1), (0, -1, 1)])));
        let b = RatFunc::frac(LaurentPoly::from_triples([(1, 0, -2)]), LaurentPoly::from_triples([(0, 3, -4), (5, 3, -4)]));
        let c = RatFunc::frac(LaurentPoly::from_triples([(-3, 1, 1)]), LaurentPoly::from_triples([(-4, 4, 2), (1, 4, 2)]));
        assert_eq!(b, c);
    }

    #[test]
    fn field_operations() {
        let x = qint(1, 0);
        let y = qint(1, 1);
        let z = &(&x / &y) * &y;
        assert_eq!(z, x);
        assert!((&x - &x).is_zero());
    }
}
