//! Multiplicities of `V(0,α)^{⊗n}` and the knot-independent coefficients of
//! the cabling formulas.

use serde::Serialize;

use super::ColoredError;
use crate::laurent::{curly, curly_rat, LaurentPoly, RatFunc};
use crate::linalg;
use crate::rmatrices::r_v1_eigenvalues;

/// `m[k][ℓ]` is the multiplicity of `V(k, nα + ℓ)` in `V(0,α)^{⊗n}`, for
/// `k + ℓ ≤ n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub n: u32,
    pub rows: Vec<Vec<u64>>,
}

impl MultiplicityTable {
    pub fn get(&self, k: i64, l: i64) -> u64 {
        if k < 0 || l < 0 {
            return 0;
        }
        self.rows.get(k as usize).and_then(|r| r.get(l as usize)).copied().unwrap_or(0)
    }

    /// `(k, ℓ, m)` for every non-zero entry.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().enumerate().map(move |(l, &m)| (k as u32, l as u32, m)))
            .filter(|e| e.2 > 0)
    }
}

/// `m^{(n)}_{k,ℓ} = m^{(n-1)}_{k,ℓ} + m^{(n-1)}_{k,ℓ-1} + m^{(n-1)}_{k-1,ℓ} + m^{(n-1)}_{k+1,ℓ-1}`
/// starting from `m^{(1)}_{0,0} = 1`.
pub fn multiplicities(n: u32) -> MultiplicityTable {
    assert!(n >= 1, "tensor powers start at n = 1");
    let mut table = MultiplicityTable { n: 1, rows: vec![vec![1]] };
    for step in 2..=n {
        let rows = (0..step as i64)
            .map(|k| {
                (0..step as i64 - k)
                    .map(|l| {
                        table.get(k, l) + table.get(k, l - 1) + table.get(k - 1, l) + table.get(k + 1, l - 1)
                    })
                    .collect()
            })
            .collect();
        table = MultiplicityTable { n: step, rows };
    }
    table
}

/// `A^{(n)}_{k,ℓ} = (-1)^k {k+1}{α}{α+1} / ({1}{nα+ℓ}{nα+k+ℓ+1})`.
pub fn coeff_a(n: u32, k: u32, l: u32) -> RatFunc {
    let (n, k, l) = (n as i32, k as i32, l as i32);
    let sign = RatFunc::constant(if k % 2 == 1 { -1 } else { 1 });
    let num = &(&(&sign * &curly_rat(0, k + 1)) * &curly_rat(1, 0)) * &curly_rat(1, 1);
    let den = &(&curly_rat(0, 1) * &curly_rat(n, l)) * &curly_rat(n, k + l + 1);
    &num / &den
}

/// `Σ_{k,ℓ} m^{(n)}_{k,ℓ} A^{(n)}_{k,ℓ}`, which vanishes identically for
/// `n ≥ 2` (the `n`-component unlink has invariant zero); for `n = 1` it is 1.
///
/// Every denominator divides `D = {1} Π_{j=0}^{n} {nα+j}`, so the sum is
/// formed as `(Σ m · A · D) / D` with a polynomial numerator.
pub fn sum_rule(n: u32) -> RatFunc {
    let nn = n as i32;
    let den = (0..=nn).fold(curly(0, 1), |acc, j| &acc * &curly(nn, j));
    let shared = &curly(1, 0) * &curly(1, 1);
    let mut num = LaurentPoly::zero();
    for (k, l, m) in multiplicities(n).entries() {
        let (k, l) = (k as i32, l as i32);
        let sign = if k % 2 == 1 { -(m as i64) } else { m as i64 };
        let others = (0..=nn)
            .filter(|&j| j != l && j != k + l + 1)
            .fold(LaurentPoly::constant(sign), |acc, j| &acc * &curly(nn, j));
        num.add_assign_ref(&(&(&others * &shared) * &curly(0, k + 1)));
    }
    RatFunc::frac(num, den)
}

/// The coefficients of the `(2,1)`-cabling formula for `V_1`, in `(t, h)`,
/// `h = q̃^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CableCoefficients {
    pub b00: RatFunc,
    pub b01: RatFunc,
    pub b10: RatFunc,
    /// The solution `(x_1, x_2, x_3)` of the closure system.
    pub x: [RatFunc; 3],
}

/// Solves
///
/// ```text
/// x_1 + x_2 + x_3 = 0,
/// λ_1 x_1 + λ_2 x_2 - x_3 = 1,
/// λ_1^{-1} x_1 + λ_2^{-1} x_2 - x_3 = 1
/// ```
///
/// for the eigenvalues `λ_1 = t^{-1}h`, `λ_2 = th` of the `V_1` crossing, and
/// sets `B_{0,0} = λ_1 x_1`, `B_{0,1} = λ_2 x_2`, `B_{1,0} = -x_3`.
pub fn coeff_b2() -> Result<CableCoefficients, ColoredError> {
    let [l1, l2, _] = r_v1_eigenvalues();
    let l1 = RatFunc::from_poly(l1);
    let l2 = RatFunc::from_poly(l2);
    let one = RatFunc::one();
    let m = vec![
        vec![one.clone(), one.clone(), one.clone()],
        vec![l1.clone(), l2.clone(), -&one],
        vec![l1.inv()?, l2.inv()?, -&one],
    ];
    let rhs = [RatFunc::zero(), one.clone(), one];
    let x = linalg::solve(&m, &rhs).ok_or(ColoredError::SingularSystem)?;
    let x: [RatFunc; 3] = x.try_into().expect("three unknowns");
    Ok(CableCoefficients { b00: &l1 * &x[0], b01: &l2 * &x[1], b10: -&x[2], x })
}

fn rf(p: LaurentPoly) -> RatFunc {
    RatFunc::from_poly(p)
}

/// The coefficients exactly as typeset, in `(t, h)`:
///
/// ```text
/// B00 = t^{-2}h^2 P / ((t^{-2}h^2 - 1)(t^{-2} - 1))
/// B01 =           P / ((t^{-2} - 1)(t^{-2}h^{-2} - 1))
/// B10 = -(h + h^{-1}) t^{-1} P / ((t^{-2}h^2 - 1)(t^{-2}h^{-2} - 1))
/// ```
///
/// with `P = (t^{-1}h - 1)(t^{-1}h^{-1} - 1)`.
pub fn coeff_b2_typeset() -> [RatFunc; 3] {
    let m = |a, b| LaurentPoly::mono(1, a, b);
    let one = LaurentPoly::one();
    let p = &(&m(-1, 1) - &one) * &(&m(-1, -1) - &one);
    let d_plus = &m(-2, 2) - &one;
    let d_zero = &m(-2, 0) - &one;
    let d_minus = &m(-2, -2) - &one;
    let b00 = &rf(&m(-2, 2) * &p) / &rf(&d_plus * &d_zero);
    let b01 = &rf(p.clone()) / &rf(&d_zero * &d_minus);
    let pref = -&(&(&m(0, 1) + &m(0, -1)) * &m(-1, 0));
    let b10 = &rf(&pref * &p) / &rf(&d_plus * &d_minus);
    [b00, b01, b10]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_triangles() {
        assert_eq!(multiplicities(3).rows, vec![vec![1, 3, 1], vec![2, 2], vec![1]]);
        assert_eq!(multiplicities(4).rows[1], vec![3, 8, 3]);
    }

    #[test]
    fn sum_rule_small() {
        assert!(sum_rule(1).is_one());
        // the cleared form agrees with summing the reduced fractions
        for n in 1..=3 {
            let direct = multiplicities(n)
                .entries()
                .fold(RatFunc::zero(), |acc, (k, l, m)| &acc + &(&RatFunc::constant(m as i64) * &coeff_a(n, k, l)));
            assert_eq!(direct, sum_rule(n));
        }
        for n in 2..=4 {
            assert!(sum_rule(n).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn closure_system_sums_to_zero() {
        let c = coeff_b2().unwrap();
        assert!((&(&c.x[0] + &c.x[1]) + &c.x[2]).is_zero());
    }
}
