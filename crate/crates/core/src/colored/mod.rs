//! Colored invariants and the cabling identities tying them together:
//! multiplicities and coefficients, direct and cable-extracted `LG^{(2)}` /
//! `V_2`, identity checkers, specialization checks and the Alexander oracle.

mod burau;
mod coefficients;
mod invariants;
mod verify;

pub use burau::alexander_burau;
pub use coefficients::{
    coeff_a, coeff_b2, coeff_b2_typeset, multiplicities, sum_rule, CableCoefficients, MultiplicityTable,
};
pub use invariants::{lg_to_v, rescale_color, v_to_lg, Cable21Form, InvariantEngine};
pub use verify::{color_dual, specialization_records, t_span, verify_specializations, CheckRecord};

use crate::braid::BraidError;
use crate::laurent::LaurentError;
use crate::repcore::RepError;
use crate::rmatrices::RMatrixError;
use crate::statesum::StateSumError;

#[derive(Debug, thiserror::Error)]
pub enum ColoredError {
    #[error("closure of {0} is not a knot")]
    NotAKnot(String),
    #[error("{check} violated: {detail}")]
    IdentityViolated { check: String, detail: String },
    #[error("coefficient system is singular")]
    SingularSystem,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    StateSum(#[from] StateSumError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}
