//! The enhancement `μ` and twist of a crossing operator, solved from the
//! Markov-move constraints
//!
//! ```text
//! ptr_2((1 ⊗ μ) R) = c · 1,   ptr_2((1 ⊗ μ) R^{-1}) = c' · 1,   c c' = 1,
//! ```
//!
//! which are linear in `(μ, c, c')`.  The solution is unique up to a common
//! scalar; `c c' = 1` fixes it up to sign.  The sign is chosen so that the
//! twist `c` has a positive coefficient (a positive kink then scales by a
//! monomial, by exactly 1 for normalised data); the alternative sign changes
//! every closure by `(-1)^{closed strands}` and the twist by `-1`, which
//! cancel in every invariant.

use super::{SparseOperator, StateSumError};
use crate::laurent::{ChargedLaurent, LaurentPoly, Mono, RatFunc};
use crate::linalg;

fn trace_rows(op: &SparseOperator, d: usize, unknown_c: usize, n_unknowns: usize) -> Vec<Vec<RatFunc>> {
    let mut rows = Vec::new();
    for i in 0..d {
        for k in 0..d {
            let mut row = vec![RatFunc::zero(); n_unknowns];
            let mut any = i == k;
            for j in 0..d {
                let v = op.get(i * d + j, k * d + j);
                if !v.is_zero() {
                    row[j] = RatFunc::from_poly(v.poly);
                    any = true;
                }
            }
            if i == k {
                row[unknown_c] = RatFunc::constant(-1);
            }
            if any {
                rows.push(row);
            }
        }
    }
    rows
}

fn as_unit(x: &RatFunc) -> Option<LaurentPoly> {
    let p = x.to_laurent()?;
    p.is_unit().then_some(p)
}

pub fn derive_enhancement(
    r: &SparseOperator,
    r_inv: &SparseOperator,
    d: usize,
) -> Result<(Vec<ChargedLaurent>, ChargedLaurent), StateSumError> {
    let charge = r.uniform_charge().ok_or(StateSumError::MixedCharge)?;
    let n = d + 2;
    let mut rows = trace_rows(r, d, d, n);
    rows.extend(trace_rows(r_inv, d, d + 1, n));
    let null = linalg::nullspace(&rows, n);
    let v = match null.len() {
        0 => return Err(StateSumError::NoEnhancement("only the trivial solution".into())),
        1 => &null[0],
        k => return Err(StateSumError::AmbiguousEnhancement(k)),
    };
    let prod = &v[d] * &v[d + 1];
    let unit = as_unit(&prod).ok_or_else(|| StateSumError::NoEnhancement(format!("c c' = {prod} is not a unit")))?;
    let (m, neg) = unit.as_unit().unwrap();
    if neg || m.s() % 2 != 0 || m.q() % 2 != 0 {
        return Err(StateSumError::NoEnhancement(format!("c c' = {unit} has no unit square root")));
    }
    let lambda = RatFunc::from_poly(LaurentPoly::term(Mono::new(-m.s() / 2, -m.q() / 2), 1.into()));
    let mut mu = Vec::with_capacity(d);
    for x in &v[..d] {
        let y = &lambda * x;
        mu.push(as_unit(&y).ok_or_else(|| StateSumError::NoEnhancement(format!("μ entry {y} is not a unit")))?);
    }
    let mut twist = as_unit(&(&lambda * &v[d])).ok_or_else(|| StateSumError::NoEnhancement("twist is not a unit".into()))?;
    if twist.leading().unwrap().1.is_negative() {
        mu.iter_mut().for_each(|p| *p = -&*p);
        twist = -twist;
    }
    let mu: Vec<ChargedLaurent> = mu.into_iter().map(ChargedLaurent::uncharged).collect();
    if !commutes_with_mu_squared(r, &mu, d) {
        return Err(StateSumError::NoEnhancement("μ⊗μ does not commute with R".into()));
    }
    Ok((mu, ChargedLaurent::new(charge, twist)))
}

pub(crate) fn commutes_with_mu_squared(r: &SparseOperator, mu: &[ChargedLaurent], d: usize) -> bool {
    r.entries().all(|(c, row, _)| {
        let lhs = &mu[row / d] * &mu[row % d];
        let rhs = &mu[c / d] * &mu[c % d];
        lhs == rhs
    })
}

/// `ptr_2((1 ⊗ μ) op)` as a `d × d` matrix of charged values.
pub(crate) fn right_partial_trace(op: &SparseOperator, mu: &[ChargedLaurent], d: usize) -> Result<Vec<Vec<ChargedLaurent>>, StateSumError> {
    let mut out = vec![vec![ChargedLaurent::zero(); d]; d];
    for (c, row, v) in op.entries() {
        let (i, j) = (row / d, row % d);
        let (k, l) = (c / d, c % d);
        if j == l {
            out[i][k] = out[i][k].try_add(&(&mu[j] * v))?;
        }
    }
    Ok(out)
}
