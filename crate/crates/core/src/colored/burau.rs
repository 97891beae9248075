//! Alexander polynomial from the reduced Burau representation.  This is an
//! oracle that shares no code with the state-sum engine.

use crate::braid::{BraidError, BraidWord};
use crate::laurent::{LaurentPoly, Mono};

fn t(e: i32) -> LaurentPoly {
    LaurentPoly::mono(1, e, 0)
}

fn neg_t(e: i32) -> LaurentPoly {
    LaurentPoly::mono(-1, e, 0)
}

type Matrix = Vec<Vec<LaurentPoly>>;

fn identity(d: usize) -> Matrix {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect()
}

/// Reduced Burau matrix of `σ_i^{±1}` on `n` strands (size `n-1`).
fn generator_matrix(n: usize, g: i32) -> Matrix {
    let d = n - 1;
    let mut m = identity(d);
    let i = g.unsigned_abs() as usize;
    let pos = g > 0;
    if d == 1 {
        m[0][0] = if pos { neg_t(1) } else { neg_t(-1) };
        return m;
    }
    if i == 1 {
        m[0][0] = if pos { neg_t(1) } else { neg_t(-1) };
        m[0][1] = if pos { LaurentPoly::one() } else { t(-1) };
    } else if i == n - 1 {
        let r = d - 1;
        m[r][r - 1] = if pos { t(1) } else { LaurentPoly::one() };
        m[r][r] = if pos { neg_t(1) } else { neg_t(-1) };
    } else {
        let r = i - 1;
        m[r][r - 1] = if pos { t(1) } else { LaurentPoly::one() };
        m[r][r] = if pos { neg_t(1) } else { neg_t(-1) };
        m[r][r + 1] = if pos { LaurentPoly::one() } else { t(-1) };
    }
    m
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) determinant; all divisions are exact.
fn determinant(mut m: Matrix) -> LaurentPoly {
    let d = m.len();
    if d == 0 {
        return LaurentPoly::one();
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..d {
        if m[k][k].is_zero() {
            match (k + 1..d).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss step is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[d - 1][d - 1].scale(&sign.into())
}

/// Alexander polynomial of the closure, in the `s` slot of a Laurent
/// polynomial, normalised so that `Δ(t) = Δ(1/t)` and `Δ(1) = 1`.
pub fn alexander_burau(b: &BraidWord) -> Result<LaurentPoly, BraidError> {
    let comps = b.components().len();
    if comps != 1 {
        return Err(BraidError::NotAKnot { components: comps });
    }
    let n = b.strands();
    let d = n - 1;
    let mut acc = identity(d);
    for &g in b.word() {
        acc = matmul(&acc, &generator_matrix(n, g));
    }
    let id = identity(d);
    let diff: Matrix = (0..d)
        .map(|i| (0..d).map(|j| &id[i][j] - &acc[i][j]).collect())
        .collect();
    let det = determinant(diff);
    let geometric: LaurentPoly = (0..n as i32).map(t).sum();
    let delta = det.exact_div(&geometric).expect("closure of a knot braid");
    let (lo, hi) = delta.s_range().expect("Alexander polynomial is non-zero");
    debug_assert_eq!((hi - lo) % 2, 0);
    let centred = delta.mul_mono(Mono::new(-(lo + hi) / 2, 0));
    if centred.sum_of_coefficients().is_negative() {
        Ok(-centred)
    } else {
        Ok(centred)
    }
}
