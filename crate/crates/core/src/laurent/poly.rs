use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coeff;
use super::LaurentError;

const Q_BIAS: i64 = 1 << 31;

/// A monomial `s^a q^b` packed into one `i64` so that integer order is the
/// lexicographic order on `(a, b)`.  Exponents live in `i32`; leaving that
/// range panics, it is never silently widened.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(i64);

impl Mono {
    pub const ONE: Mono = Mono(Q_BIAS);

    #[inline]
    pub fn new(es: i32, eq: i32) -> Mono {
        Mono(((es as i64) << 32) + (eq as i64 + Q_BIAS))
    }

    #[inline]
    pub fn s(self) -> i32 {
        (self.0 >> 32) as i32
    }

    #[inline]
    pub fn q(self) -> i32 {
        ((self.0 & 0xffff_ffff) - Q_BIAS) as i32
    }

    #[inline]
    pub fn mul(self, other: Mono) -> Mono {
        let es = self.s().checked_add(other.s()).expect("exponent overflow in s");
        let eq = self.q().checked_add(other.q()).expect("exponent overflow in q");
        Mono::new(es, eq)
    }

    #[inline]
    pub fn div(self, other: Mono) -> Mono {
        self.mul(other.inv())
    }

    #[inline]
    pub fn inv(self) -> Mono {
        let es = self.s().checked_neg().expect("exponent overflow in s");
        let eq = self.q().checked_neg().expect("exponent overflow in q");
        Mono::new(es, eq)
    }

    pub fn pow(self, e: i32) -> Mono {
        let es = self.s().checked_mul(e).expect("exponent overflow in s");
        let eq = self.q().checked_mul(e).expect("exponent overflow in q");
        Mono::new(es, eq)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s^{}q^{}", self.s(), self.q())
    }
}

/// An element of `Z[s, s^-1, q, q^-1]`, kept as a strictly increasing list of
/// monomials with non-zero coefficients.  That normal form makes structural
/// equality coincide with mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Mono, Coeff)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Self::term(Mono::ONE, c.into())
    }

    pub fn term(m: Mono, c: Coeff) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// `c * s^es * q^eq`
    pub fn mono(c: impl Into<Coeff>, es: i32, eq: i32) -> Self {
        Self::term(Mono::new(es, eq), c.into())
    }

    pub fn s() -> Self {
        Self::mono(1, 1, 0)
    }

    pub fn q() -> Self {
        Self::mono(1, 0, 1)
    }

    /// Builds a polynomial from arbitrary (unsorted, repeated, zero) terms.
    pub fn from_terms(iter: impl IntoIterator<Item = (Mono, Coeff)>) -> Self {
        let mut v: Vec<(Mono, Coeff)> = iter.into_iter().collect();
        v.sort_unstable_by_key(|t| t.0);
        LaurentPoly { terms: combine_sorted(v) }
    }

    /// Builds from `(es, eq, c)` triples.
    pub fn from_triples(iter: impl IntoIterator<Item = (i32, i32, i64)>) -> Self {
        Self::from_terms(iter.into_iter().map(|(a, b, c)| (Mono::new(a, b), Coeff::from(c))))
    }

    pub fn terms(&self) -> &[(Mono, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(Mono, Coeff)> {
        self.terms.last()
    }

    /// Lexicographically smallest term.
    pub fn trailing(&self) -> Option<&(Mono, Coeff)> {
        self.terms.first()
    }

    pub fn coeff_of(&self, m: Mono) -> Coeff {
        match self.terms.binary_search_by_key(&m, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::ZERO,
        }
    }

    pub fn s_range(&self) -> Option<(i32, i32)> {
        Some((self.terms.first()?.0.s(), self.terms.last()?.0.s()))
    }

    pub fn q_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.iter().map(|t| t.0.q()).min()?;
        let hi = self.terms.iter().map(|t| t.0.q()).max()?;
        Some((lo, hi))
    }

    /// `max_s - min_s`, zero for the zero polynomial.
    pub fn s_span(&self) -> i32 {
        self.s_range().map(|(a, b)| b - a).unwrap_or(0)
    }

    /// Returns `(m, sign)` when the polynomial is `±m`.
    pub fn as_unit(&self) -> Option<(Mono, bool)> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_unit() => Some((*m, c.is_negative())),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Inverse of a unit `±s^a q^b`.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        let (m, _) = self.as_unit()?;
        Some(Self::term(m.inv(), self.terms[0].1.clone()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// `self * c * m`; monomial multiplication preserves order.
    pub fn mul_term(&self, m: Mono, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(x, y)| (x.mul(m), y * c)).collect() }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(x, y)| (x.mul(m), y.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
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

    /// Integer power, negative exponents only for units.
    pub fn powi(&self, e: i32) -> Result<Self, LaurentError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            let inv = self.unit_inverse().ok_or(LaurentError::NotDivisible)?;
            Ok(inv.pow(e.unsigned_abs()))
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        self.terms = merge(&self.terms, &other.terms, false);
    }

    /// Exact division.  Fails with [`LaurentError::NotDivisible`] when the
    /// quotient is not a Laurent polynomial with integer coefficients.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let [(m, c)] = d.terms.as_slice() {
            let mi = m.inv();
            let mut out = Vec::with_capacity(self.terms.len());
            for (x, y) in &self.terms {
                out.push((x.mul(mi), y.div_exact(c).ok_or(LaurentError::NotDivisible)?));
            }
            return Ok(LaurentPoly { terms: out });
        }
        // The quotient's Newton box is determined by the extreme exponents,
        // which bounds the lexicographic long division below.
        let (ps, pq) = (self.s_range().unwrap(), self.q_range().unwrap());
        let (ds, dq) = (d.s_range().unwrap(), d.q_range().unwrap());
        let s_box = (ps.0 - ds.0, ps.1 - ds.1);
        let q_box = (pq.0 - dq.0, pq.1 - dq.1);
        if s_box.0 > s_box.1 || q_box.0 > q_box.1 {
            return Err(LaurentError::NotDivisible);
        }
        let (dm, dc) = d.terms.last().unwrap().clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, Coeff)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.last().cloned() {
            let m = rm.div(dm);
            if m.s() < s_box.0 || m.s() > s_box.1 || m.q() < q_box.0 || m.q() > q_box.1 {
                return Err(LaurentError::NotDivisible);
            }
            let c = rc.div_exact(&dc).ok_or(LaurentError::NotDivisible)?;
            rem = &rem - &d.mul_term(m, &c);
            quot.push((m, c));
        }
        quot.reverse();
        Ok(LaurentPoly { terms: quot })
    }

    /// Applies `s^a q^b -> s^(m00 a + m01 b) q^(m10 a + m11 b)`, i.e. the
    /// substitution `s -> s^m00 q^m10`, `q -> s^m01 q^m11`.
    pub fn substitute_monomial(&self, m: [[i32; 2]; 2]) -> LaurentPoly {
        self.map_exponents(|a, b| (m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b))
    }

    /// Affine exponent map; the closure must be injective for good performance
    /// but correctness does not depend on it.
    pub fn map_exponents(&self, f: impl Fn(i32, i32) -> (i32, i32)) -> LaurentPoly {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let (a, b) = f(m.s(), m.q());
            (Mono::new(a, b), c.clone())
        }))
    }

    /// `s^a q^b -> s^(a/2) q^b`; every `s` exponent must be even.
    pub fn halve_s_exponents(&self) -> Result<LaurentPoly, LaurentError> {
        if self.terms.iter().any(|(m, _)| m.s() % 2 != 0) {
            return Err(LaurentError::OddExponent);
        }
        Ok(self.map_exponents(|a, b| (a / 2, b)))
    }

    /// Evaluates at `s = q = 1`.
    pub fn sum_of_coefficients(&self) -> Coeff {
        self.terms.iter().fold(Coeff::ZERO, |acc, (_, c)| &acc + c)
    }

    pub fn content(&self) -> Coeff {
        self.terms.iter().fold(Coeff::ZERO, |acc, (_, c)| acc.gcd(c))
    }

    pub fn div_coeff(&self, c: &Coeff) -> Result<LaurentPoly, LaurentError> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, x) in &self.terms {
            out.push((*m, x.div_exact(c).ok_or(LaurentError::NotDivisible)?));
        }
        Ok(LaurentPoly { terms: out })
    }

    /// Renders with custom variable names, e.g. `("t", "h")`.
    pub fn display_with(&self, names: (&str, &str)) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (name, e) in [(names.0, m.s()), (names.1, m.q())] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn combine_sorted(v: Vec<(Mono, Coeff)>) -> Vec<(Mono, Coeff)> {
    let mut out: Vec<(Mono, Coeff)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => {
                *lc = &*lc + &c;
            }
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if lc.is_zero() {
            out.pop();
        }
    }
    out
}

fn merge(a: &[(Mono, Coeff)], b: &[(Mono, Coeff)], negate_b: bool) -> Vec<(Mono, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ma, ca) = &a[i];
        let (mb, cb) = &b[j];
        if ma < mb {
            out.push((*ma, ca.clone()));
            i += 1;
        } else if mb < ma {
            out.push((*mb, if negate_b { -cb } else { cb.clone() }));
            j += 1;
        } else {
            let c = if negate_b { ca - cb } else { ca + cb };
            if !c.is_zero() {
                out.push((*ma, c));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(a[i..].iter().cloned());
    for (m, c) in &b[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    out
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        let mut v = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                v.push((ma.mul(*mb), ca * cb));
            }
        }
        v.sort_unstable_by_key(|t| t.0);
        LaurentPoly { terms: combine_sorted(v) }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc.add_assign_ref(&p);
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(("s", "q")))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// The quantum bracket `{x} = q^x - q^-x` for `x = a*alpha + b`, with
/// `q^alpha = s`.
pub fn curly(a: i32, b: i32) -> LaurentPoly {
    &LaurentPoly::mono(1, a, b) - &LaurentPoly::mono(1, -a, -b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mono_packing_roundtrip_and_order() {
        for &(a, b) in &[(0, 0), (-3, 7), (5, -9), (i32::MAX, i32::MIN), (i32::MIN, i32::MAX)] {
            let m = Mono::new(a, b);
            assert_eq!((m.s(), m.q()), (a, b));
        }
        assert!(Mono::new(0, 100) < Mono::new(1, -100));
        assert!(Mono::new(-1, 5) < Mono::new(-1, 6));
    }

    #[test]
    fn exact_div_roundtrip() {
        let a = LaurentPoly::from_triples([(1, 0, 2), (0, 1, -3), (-1, -2, 1)]);
        let b = LaurentPoly::from_triples([(2, 1, 1), (0, 0, 5), (-1, 3, -1)]);
        let p = &a * &b;
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        let bump = &p + &LaurentPoly::one();
        assert!(bump.exact_div(&a).is_err());
    }

    #[test]
    fn curly_bracket_quotient() {
        // {2}/{1} = q + q^-1
        let r = curly(0, 2).exact_div(&curly(0, 1)).unwrap();
        assert_eq!(r, LaurentPoly::from_triples([(0, 1, 1), (0, -1, 1)]));
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn exponent_overflow_panics() {
        let m = Mono::new(i32::MAX, 0);
        let _ = m.mul(Mono::new(1, 0));
    }
}
