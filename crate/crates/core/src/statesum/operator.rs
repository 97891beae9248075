use std::collections::BTreeMap;

use super::StateSumError;
use crate::laurent::{ChargedLaurent, LaurentPoly, RatFunc};
use crate::linalg;

/// A sparse matrix with charged Laurent entries, stored by columns.  On
/// `V ⊗ W` the basis vector `v_i ⊗ w_j` has index `i * dim(W) + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    rows: usize,
    cols: Vec<Vec<(u32, ChargedLaurent)>>,
}

impl SparseOperator {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseOperator { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut op = Self::zero(n, n);
        for (i, col) in op.cols.iter_mut().enumerate() {
            col.push((i as u32, ChargedLaurent::one()));
        }
        op
    }

    /// Builds from `(col, row, value)` triples; repeated positions are summed.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, ChargedLaurent)>,
    ) -> Result<Self, StateSumError> {
        let mut acc: Vec<BTreeMap<u32, ChargedLaurent>> = vec![BTreeMap::new(); cols];
        for (c, r, v) in entries {
            if c >= cols || r >= rows {
                return Err(StateSumError::Shape(format!("entry ({r},{c}) outside {rows}x{cols}")));
            }
            let slot = acc[c].entry(r as u32).or_insert_with(ChargedLaurent::zero);
            *slot = slot.try_add(&v)?;
        }
        let cols = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseOperator { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &[(u32, ChargedLaurent)] {
        &self.cols[c]
    }

    pub fn get(&self, row: usize, col: usize) -> ChargedLaurent {
        self.cols[col]
            .iter()
            .find(|(r, _)| *r as usize == row)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(ChargedLaurent::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ChargedLaurent)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (c, *r as usize, v)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// The common charge of all non-zero entries.
    pub fn uniform_charge(&self) -> Option<i32> {
        let mut it = self.entries().map(|(_, _, v)| v.charge);
        let first = it.next().unwrap_or(0);
        it.all(|c| c == first).then_some(first)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &SparseOperator) -> Result<SparseOperator, StateSumError> {
        if other.rows != self.cols() {
            return Err(StateSumError::Shape("composition of incompatible operators".into()));
        }
        let mut triples = Vec::new();
        for (c, col) in other.cols.iter().enumerate() {
            for (k, v) in col {
                for (r, w) in &self.cols[*k as usize] {
                    triples.push((c, *r as usize, w * v));
                }
            }
        }
        Self::from_entries(self.rows, other.cols(), triples)
    }

    pub fn scale(&self, x: &ChargedLaurent) -> SparseOperator {
        SparseOperator {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * x)).filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn map_polys(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> SparseOperator {
        SparseOperator {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|(r, v)| (*r, ChargedLaurent::new(v.charge, f(&v.poly))))
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.cols())
    }

    /// Exact inverse.  The operator is split into the connected blocks of its
    /// sparsity pattern, each inverted by Gaussian elimination over the
    /// rational functions; every entry of the inverse must be Laurent.
    pub fn inverse(&self) -> Result<SparseOperator, StateSumError> {
        let n = self.cols();
        if self.rows != n {
            return Err(StateSumError::Shape("inverse of a non-square operator".into()));
        }
        let charge = self.uniform_charge().ok_or(StateSumError::MixedCharge)?;
        // union-find over indices linked by a non-zero entry
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (c, r, _) in self.entries() {
            let (a, b) = (find(&mut parent, c), find(&mut parent, r));
            if a != b {
                parent[a] = b;
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            blocks.entry(root).or_default().push(i);
        }
        let mut triples = Vec::new();
        for idx in blocks.values() {
            let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
            let mut m = linalg::zeros(idx.len(), idx.len());
            for &c in idx {
                for (r, v) in &self.cols[c] {
                    m[pos[&(*r as usize)]][pos[&c]] = RatFunc::from_poly(v.poly.clone());
                }
            }
            let inv = linalg::inverse(&m).ok_or(StateSumError::Singular)?;
            for (bi, &r) in idx.iter().enumerate() {
                for (bj, &c) in idx.iter().enumerate() {
                    let x = &inv[bi][bj];
                    if x.is_zero() {
                        continue;
                    }
                    let p = x.to_laurent().ok_or(StateSumError::NonLaurentInverse)?;
                    triples.push((c, r, ChargedLaurent::new(-charge, p)));
                }
            }
        }
        Self::from_entries(n, n, triples)
    }
}
