//! Typical modules `V(n, α)` of the quantum supergroup of `sl(2|1)` with
//! symbolic `α` (entering only through `s = q^α` and integer offsets), their
//! braidings, ribbon scalars, modified dimensions and fusion.

mod braiding;
mod fusion;
mod module;

pub use braiding::{
    build_braiding, check_open_hopf, colored_datum, modified_dimension, open_hopf, open_hopf_formula,
    pivotal_enhancement, twist_scalar, twist_via_trace,
};
pub use fusion::{decompose, fuse, fusion_rule, tensor_power_of_generator, Character, Decomposition};
pub use module::{build_module, WeightModule};

use crate::statesum::StateSumError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("twist mismatch: {0}")]
    TwistMismatch(String),
    #[error("open Hopf link mismatch: {0}")]
    HopfMismatch(String),
    #[error("character does not decompose into typical characters: {0}")]
    CharacterResidue(String),
    #[error("expected a Laurent polynomial: {0}")]
    NonLaurent(String),
    #[error(transparent)]
    StateSum(#[from] StateSumError),
    #[error(transparent)]
    Laurent(#[from] crate::laurent::LaurentError),
}
