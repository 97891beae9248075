//! The two transcribed 16×16 crossing matrices and the variable conventions
//! that relate them.
//!
//! * `R_LG` acts on `V(0,α)^{⊗2}` in the internal variables `(s, q)`, `s = q^α`.
//! * `R_V1` is the matrix defining `V_1`.  Its data file uses the typeset
//!   variables `(t_m, q̃_m)`; only even powers of `t_m` occur.  These relate to
//!   the variables `(t, h)` of the polynomial `V_1(t, q̃)`, `h = q̃^{1/2}`, by
//!   `t_m^2 = t h^{-1}` and `q̃_m = h^{-2}`.
//! * `(t, h)` map into `(s, q)` by `t ↦ s^{-2} q^{-1}`, `h ↦ q^{-1}`.

use serde::Deserialize;

use crate::laurent::{ChargedLaurent, LaurentPoly, RatFunc};
use crate::linalg::{self, RatMatrix};
use crate::statesum::{RMatrixDatum, SparseOperator, StateSumError};

#[derive(Debug, thiserror::Error)]
pub enum RMatrixError {
    #[error("transcription error in {name}: {reason}")]
    Transcription { name: String, reason: String },
    #[error("spectral decomposition mismatch: {0}")]
    SpectralMismatch(String),
    #[error("malformed matrix file: {0}")]
    Format(String),
    #[error(transparent)]
    StateSum(#[from] StateSumError),
}

/// A matrix data file: entries `[col, row, poly]`.
#[derive(Debug, Clone, Deserialize)]
pub struct MatrixFile {
    pub name: String,
    pub variables: [String; 2],
    pub dim: usize,
    pub basis: Vec<String>,
    pub entries: Vec<(usize, usize, LaurentPoly)>,
    #[serde(default)]
    pub errata: Vec<Erratum>,
}

/// A corrected entry together with the value as originally typeset.
#[derive(Debug, Clone, Deserialize)]
pub struct Erratum {
    pub col: usize,
    pub row: usize,
    pub typeset: LaurentPoly,
    pub note: String,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self, RMatrixError> {
        let f: MatrixFile = serde_json::from_str(text).map_err(|e| RMatrixError::Format(e.to_string()))?;
        let n = f.dim * f.dim;
        if f.basis.len() != n || f.entries.iter().any(|(c, r, _)| *c >= n || *r >= n) {
            return Err(RMatrixError::Format(format!("{}: indices exceed dimension", f.name)));
        }
        Ok(f)
    }

    /// The operator with every polynomial passed through `map`.
    pub fn operator(&self, map: impl Fn(&LaurentPoly) -> LaurentPoly) -> Result<SparseOperator, RMatrixError> {
        let n = self.dim * self.dim;
        Ok(SparseOperator::from_entries(
            n,
            n,
            self.entries.iter().map(|(c, r, p)| (*c, *r, ChargedLaurent::uncharged(map(p)))),
        )?)
    }

    /// The operator with the errata reverted to their typeset values.
    pub fn typeset_operator(&self, map: impl Fn(&LaurentPoly) -> LaurentPoly) -> Result<SparseOperator, RMatrixError> {
        let n = self.dim * self.dim;
        let entries = self.entries.iter().map(|(c, r, p)| {
            let p = self
                .errata
                .iter()
                .find(|e| e.col == *c && e.row == *r)
                .map_or(p, |e| &e.typeset);
            (*c, *r, ChargedLaurent::uncharged(map(p)))
        });
        Ok(SparseOperator::from_entries(n, n, entries)?)
    }
}

pub fn r_lg_file() -> MatrixFile {
    MatrixFile::parse(include_str!("../data/r_lg.json")).expect("shipped R_LG data is well formed")
}

pub fn r_v1_file() -> MatrixFile {
    MatrixFile::parse(include_str!("../data/r_v1.json")).expect("shipped R_V1 data is well formed")
}

fn finish(name: &str, r: SparseOperator) -> Result<RMatrixDatum, RMatrixError> {
    let datum = RMatrixDatum::from_operator(name, 4, r)?;
    if !datum.check_yang_baxter()? {
        return Err(RMatrixError::Transcription { name: name.into(), reason: "Yang-Baxter equation fails".into() });
    }
    Ok(datum)
}

/// `R_LG` in `(s, q)` with its derived enhancement.
pub fn build_r_lg() -> Result<RMatrixDatum, RMatrixError> {
    finish("R_LG", r_lg_file().operator(LaurentPoly::clone)?)
}

/// `R_V1` in `(t, h)` with its derived enhancement.
pub fn build_r_v1() -> Result<RMatrixDatum, RMatrixError> {
    finish("R_V1", r_v1_operator()?)
}

pub fn r_v1_operator() -> Result<SparseOperator, RMatrixError> {
    r_v1_file().operator(|p| matrix_vars_to_v_vars(p).expect("only even powers of t occur"))
}

/// `t_m^{2a} q̃_m^b ↦ t^a h^{-a-2b}`.  Fails on odd powers of `t_m`.
pub fn matrix_vars_to_v_vars(p: &LaurentPoly) -> Result<LaurentPoly, crate::laurent::LaurentError> {
    let halved = p.halve_s_exponents()?;
    Ok(halved.map_exponents(|a, b| (a, -a - 2 * b)))
}

/// `t ↦ s^{-2} q^{-1}`, `h ↦ q^{-1}`; injective on exponents.
pub fn lg_to_v_vars(p: &LaurentPoly) -> LaurentPoly {
    p.map_exponents(|a, c| (-2 * a, -a - c))
}

/// Inverse of [`lg_to_v_vars`] on its image, the polynomials with even
/// `s`-exponents: `s^{2x} q^y ↦ t^{-x} h^{x-y}`.
pub fn v_from_lg_vars(p: &LaurentPoly) -> Result<LaurentPoly, crate::laurent::LaurentError> {
    Ok(p.halve_s_exponents()?.map_exponents(|x, y| (-x, x - y)))
}

/// Eigenvalues of `R_V1` in `(t, h)`: `t^{-1} h`, `t h`, `-1`.
pub fn r_v1_eigenvalues() -> [LaurentPoly; 3] {
    [LaurentPoly::mono(1, -1, 1), LaurentPoly::mono(1, 1, 1), LaurentPoly::constant(-1)]
}

/// `R_V1 = Σ λ_i P_i` with orthogonal idempotents summing to the identity.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: [LaurentPoly; 3],
    pub projectors: Vec<RatMatrix>,
    pub ranks: Vec<usize>,
}

fn dense(op: &SparseOperator) -> RatMatrix {
    let mut m = linalg::zeros(op.rows(), op.cols());
    for (c, r, v) in op.entries() {
        m[r][c] = RatFunc::from_poly(v.poly.clone());
    }
    m
}

fn shifted(m: &RatMatrix, lambda: &RatFunc) -> RatMatrix {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = &row[i] - lambda;
    }
    out
}

fn scaled(m: &RatMatrix, x: &RatFunc) -> RatMatrix {
    m.iter().map(|row| row.iter().map(|y| y * x).collect()).collect()
}

fn add(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

/// Lagrange-interpolation projectors `P_i = Π_{j≠i} (R - λ_j)/(λ_i - λ_j)`,
/// verified to be orthogonal idempotents resolving the identity and `R`.
pub fn spectral_decompose_r1() -> Result<SpectralDecomposition, RMatrixError> {
    let r = dense(&r_v1_operator()?);
    let n = r.len();
    let eig = r_v1_eigenvalues();
    let lam: Vec<RatFunc> = eig.iter().cloned().map(RatFunc::from_poly).collect();
    let mut projectors = Vec::new();
    for i in 0..3 {
        let mut p = linalg::identity(n);
        for j in (0..3).filter(|&j| j != i) {
            let factor = scaled(&shifted(&r, &lam[j]), &(&lam[i] - &lam[j]).inv().expect("distinct eigenvalues"));
            p = linalg::matmul(&p, &factor);
        }
        projectors.push(p);
    }
    let zero = linalg::zeros(n, n);
    for i in 0..3 {
        for j in 0..3 {
            let prod = linalg::matmul(&projectors[i], &projectors[j]);
            let want = if i == j { &projectors[i] } else { &zero };
            if &prod != want {
                return Err(RMatrixError::SpectralMismatch(format!("P{i} P{j} is not δ P")));
            }
        }
    }
    let sum = projectors.iter().fold(zero.clone(), |acc, p| add(&acc, p));
    if sum != linalg::identity(n) {
        return Err(RMatrixError::SpectralMismatch("projectors do not sum to the identity".into()));
    }
    let recon = projectors.iter().zip(&lam).fold(zero, |acc, (p, l)| add(&acc, &scaled(p, l)));
    if recon != r {
        return Err(RMatrixError::SpectralMismatch("Σ λ P differs from R".into()));
    }
    let ranks = projectors.iter().map(linalg::rank).collect();
    Ok(SpectralDecomposition { eigenvalues: eig, projectors, ranks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_maps() {
        assert_eq!(lg_to_v_vars(&LaurentPoly::mono(1, -1, 1)), LaurentPoly::mono(1, 2, 0));
        assert_eq!(lg_to_v_vars(&LaurentPoly::mono(1, 1, 1)), LaurentPoly::mono(1, -2, -2));
        let p = LaurentPoly::from_triples([(2, 3, 1), (-4, 1, -2), (0, 0, 7)]);
        assert_eq!(lg_to_v_vars(&v_from_lg_vars(&p).unwrap()), p);
    }
}
