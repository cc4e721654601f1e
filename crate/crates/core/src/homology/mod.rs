//! The action of mapping classes on `H_1(Σ_g; Z)`.
//!
//! Conventions: the form is `J = [[0, I], [-I, 0]]`, so `<e_i, e_{g+i}> = 1`,
//! and the twist about a class `c` acts as the transvection
//! `T_c(x) = x + <x, c> c`. Only the homological shadow of a mapping class is
//! kept; nothing here can tell a pseudo-Anosov from a reducible map.

mod groups;
mod scan;
mod spectral;
mod symplectic;
mod word;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use groups::{SymplecticGroup, TwistWordGroup};
pub use scan::{fixed_class_coset_scan, FixedClassRow, FixedClassScan};
pub use spectral::{characteristic_polynomial, roots_within, stretch_lower_bound, SpectralBound};
pub use symplectic::{
    chain_curve_classes, fixed_classes, transvection, transvection_power, HomologyClass, SymplecticBasis,
    SymplecticMap,
};
pub use word::{sl2_word, word_to_matrix, TwistLetter, TwistWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("expected a vector of length {expected}, got {found}")]
    Length { expected: usize, found: usize },
    #[error("class {0} is neither primitive nor zero")]
    NotPrimitive(String),
    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
