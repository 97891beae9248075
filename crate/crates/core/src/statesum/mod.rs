//! Quantum invariants of braid closures from a crossing operator.

mod engine;
mod enhance;
mod operator;

use std::fmt;

pub use engine::{braid_operator, eval_link, eval_tangle, full_closure_is_zero};
pub use enhance::derive_enhancement;
pub use operator::SparseOperator;

use crate::braid::BraidWord;
use crate::laurent::{ChargedLaurent, LaurentError, LaurentPoly};
use engine::Gate;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StateSumError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("operator entries carry different charges")]
    MixedCharge,
    #[error("operator is singular")]
    Singular,
    #[error("inverse has non-Laurent entries")]
    NonLaurentInverse,
    #[error("no enhancement: {0}")]
    NoEnhancement(String),
    #[error("enhancement is not unique ({0}-dimensional solution space)")]
    AmbiguousEnhancement(usize),
    #[error("twist is not invertible")]
    NonUnitTwist,
    #[error("{strands} strands of dimension {dim} do not fit a packed state")]
    TooLarge { strands: usize, dim: usize },
    #[error("open strand {open} out of range for {strands} strands")]
    OpenStrand { open: usize, strands: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Everything needed to evaluate braid closures colored by one simple object.
pub struct RMatrixDatum {
    label: String,
    dim: usize,
    r: SparseOperator,
    r_inv: SparseOperator,
    mu: Vec<ChargedLaurent>,
    twist: ChargedLaurent,
    r_charge: i32,
    pos_gate: Gate,
    neg_gate: Gate,
}

impl fmt::Debug for RMatrixDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RMatrixDatum")
            .field("label", &self.label)
            .field("dim", &self.dim)
            .field("nnz", &self.r.nnz())
            .field("mu", &self.mu)
            .field("twist", &self.twist)
            .finish()
    }
}

impl RMatrixDatum {
    /// Inverts `r` exactly and derives its enhancement.
    pub fn from_operator(label: impl Into<String>, dim: usize, r: SparseOperator) -> Result<Self, StateSumError> {
        let r_inv = r.inverse()?;
        let (mu, twist) = derive_enhancement(&r, &r_inv, dim)?;
        Self::assemble(label.into(), dim, r, r_inv, mu, twist)
    }

    /// Uses a supplied enhancement (e.g. the pivotal structure of a module).
    pub fn with_enhancement(
        label: impl Into<String>,
        dim: usize,
        r: SparseOperator,
        mu: Vec<ChargedLaurent>,
        twist: ChargedLaurent,
    ) -> Result<Self, StateSumError> {
        let r_inv = r.inverse()?;
        Self::assemble(label.into(), dim, r, r_inv, mu, twist)
    }

    fn assemble(
        label: String,
        dim: usize,
        r: SparseOperator,
        r_inv: SparseOperator,
        mu: Vec<ChargedLaurent>,
        twist: ChargedLaurent,
    ) -> Result<Self, StateSumError> {
        if r.rows() != dim * dim || r.cols() != dim * dim || mu.len() != dim {
            return Err(StateSumError::Shape(format!("{label}: dimension mismatch")));
        }
        if mu.iter().any(|m| m.charge != 0 || !m.poly.is_unit()) {
            return Err(StateSumError::NoEnhancement(format!("{label}: μ must be uncharged units")));
        }
        let r_charge = r.uniform_charge().ok_or(StateSumError::MixedCharge)?;
        let pos_gate = Gate::new(&r, dim);
        let neg_gate = Gate::new(&r_inv, dim);
        Ok(RMatrixDatum { label, dim, r, r_inv, mu, twist, r_charge, pos_gate, neg_gate })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn r(&self) -> &SparseOperator {
        &self.r
    }

    pub fn r_inv(&self) -> &SparseOperator {
        &self.r_inv
    }

    pub fn mu(&self) -> &[ChargedLaurent] {
        &self.mu
    }

    pub fn twist(&self) -> &ChargedLaurent {
        &self.twist
    }

    pub(crate) fn mu_polys(&self) -> Vec<LaurentPoly> {
        self.mu.iter().map(|m| m.poly.clone()).collect()
    }

    /// `R R^{-1} = R^{-1} R = 1`
    pub fn check_inverse(&self) -> Result<bool, StateSumError> {
        Ok(self.r.compose(&self.r_inv)?.is_identity() && self.r_inv.compose(&self.r)?.is_identity())
    }

    /// `(R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R)` on `V^{⊗3}`.
    pub fn check_yang_baxter(&self) -> Result<bool, StateSumError> {
        let lhs = braid_operator(&BraidWord::new(3, vec![1, 2, 1]).unwrap(), self)?;
        let rhs = braid_operator(&BraidWord::new(3, vec![2, 1, 2]).unwrap(), self)?;
        Ok(lhs == rhs)
    }

    /// Both partial-trace identities and `[R, μ⊗μ] = 0`.
    pub fn check_enhancement(&self) -> Result<bool, StateSumError> {
        let d = self.dim;
        let inv_twist = self.twist.unit_inverse().ok_or(StateSumError::NonUnitTwist)?;
        for (op, scalar) in [(&self.r, &self.twist), (&self.r_inv, &inv_twist)] {
            let t = enhance::right_partial_trace(op, &self.mu, d)?;
            for (i, row) in t.iter().enumerate() {
                for (k, x) in row.iter().enumerate() {
                    let want = if i == k { scalar.clone() } else { ChargedLaurent::zero() };
                    if *x != want {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(enhance::commutes_with_mu_squared(&self.r, &self.mu, d))
    }

    /// `Σ μ_i`, which vanishes for colors of zero quantum dimension.
    pub fn mu_sum(&self) -> LaurentPoly {
        self.mu.iter().map(|m| m.poly.clone()).sum()
    }
}
