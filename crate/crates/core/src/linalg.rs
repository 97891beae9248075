//! Dense Gaussian elimination over the rational-function field.  Matrices here
//! are small (a few dozen rows); operators of larger dimension are split into
//! independent blocks before they get here.

use crate::laurent::RatFunc;

pub type RatMatrix = Vec<Vec<RatFunc>>;

pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
    vec![vec![RatFunc::zero(); cols]; rows]
}

pub fn identity(n: usize) -> RatMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = RatFunc::one();
    }
    m
}

pub fn matmul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is non-zero");
        for j in c..cols {
            if !m[r][j].is_zero() {
                m[r][j] = &m[r][j] * &inv;
            }
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        m[i][j] = &m[i][j] - &(&f * &m[r][j]);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of the right null space.
pub fn nullspace(m: &RatMatrix, cols: usize) -> Vec<Vec<RatFunc>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RatFunc::zero(); cols];
            v[f] = RatFunc::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&a[r][f];
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Unique solution of `m x = b`, `None` if singular.
pub fn solve(m: &RatMatrix, b: &[RatFunc]) -> Option<Vec<RatFunc>> {
    let inv = inverse(m)?;
    Some(
        inv.iter()
            .map(|row| row.iter().zip(b).fold(RatFunc::zero(), |acc, (x, y)| &acc + &(x * y)))
            .collect(),
    )
}

/// Rank of a matrix.
pub fn rank(m: &RatMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qint;

    #[test]
    fn inverse_of_quantum_matrix() {
        let m = vec![vec![qint(1, 0), qint(0, 2)], vec![qint(0, 1), qint(1, 1)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(matmul(&m, &inv), identity(2));
        let sing = vec![vec![qint(1, 0), qint(1, 0)], vec![qint(0, 2), qint(0, 2)]];
        assert!(inverse(&sing).is_none());
        assert_eq!(nullspace(&sing, 2).len(), 1);
    }
}
