use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use super::poly::LaurentPoly;
use super::LaurentError;

/// `q^(charge * alpha^2) * poly`.
///
/// Braiding matrices of the generic-weight modules carry a factor
/// `q^(c alpha^2)` that no Laurent polynomial in `s = q^alpha` can express.
/// The factor is uniform across each operator, so it is tracked as an integer
/// and cancels in every invariant.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChargedLaurent {
    pub charge: i32,
    pub poly: LaurentPoly,
}

impl ChargedLaurent {
    pub fn new(charge: i32, poly: LaurentPoly) -> Self {
        ChargedLaurent { charge, poly }
    }

    pub fn uncharged(poly: LaurentPoly) -> Self {
        ChargedLaurent { charge: 0, poly }
    }

    pub fn zero() -> Self {
        Self::uncharged(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::uncharged(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Sum of two values of equal charge.  Zero is neutral for every charge.
    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.charge != other.charge {
            return Err(LaurentError::ChargeMismatch { left: self.charge, right: other.charge });
        }
        Ok(ChargedLaurent::new(self.charge, &self.poly + &other.poly))
    }

    /// Inverse of a unit value.
    pub fn unit_inverse(&self) -> Option<Self> {
        Some(ChargedLaurent::new(-self.charge, self.poly.unit_inverse()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, LaurentError> {
        Ok(ChargedLaurent::new(self.charge * e, self.poly.powi(e)?))
    }
}

impl<'a> Mul<&'a ChargedLaurent> for &'a ChargedLaurent {
    type Output = ChargedLaurent;
    fn mul(self, rhs: &ChargedLaurent) -> ChargedLaurent {
        ChargedLaurent::new(self.charge + rhs.charge, &self.poly * &rhs.poly)
    }
}

impl Mul for ChargedLaurent {
    type Output = ChargedLaurent;
    fn mul(self, rhs: ChargedLaurent) -> ChargedLaurent {
        &self * &rhs
    }
}

impl Neg for &ChargedLaurent {
    type Output = ChargedLaurent;
    fn neg(self) -> ChargedLaurent {
        ChargedLaurent::new(self.charge, -&self.poly)
    }
}

impl fmt::Display for ChargedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.charge == 0 {
            write!(f, "{}", self.poly)
        } else {
            write!(f, "q^({}*alpha^2) * ({})", self.charge, self.poly)
        }
    }
}

impl fmt::Debug for ChargedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChargedLaurent({self})")
    }
}
