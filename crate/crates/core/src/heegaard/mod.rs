//! Homology of Heegaard splittings `N_f = H_A ∪_f H_B` of genus `g`.
//!
//! `H_1(N_f)` is presented by a `2g × 2g` integer matrix whose first `g`
//! rows are the A-disk classes pulled back through the gluing and whose last
//! `g` rows are the B-disk classes. With that choice a twist on the right of
//! the gluing moves only the first `g` rows, by a multiple of the twist class.

mod data;
mod poly;
mod presentation;
mod scan;

use thiserror::Error;

use crate::homology::HomologyError;
use crate::linalg::LinalgError;

pub use data::{lens_space, DiskSystem, HeegaardData};
pub use poly::{det_polynomial, IntPolynomial};
pub use presentation::{b1_mod_p, invariants, presentation_matrix, twist_update, H1Order, Invariants, PresentationMatrix};
pub use scan::{coset_scan, PeriodicityVerdict, ScanReport, ScanRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeegaardError {
    #[error("disk system needs {expected} classes, got {found}")]
    DiskCount { expected: usize, found: usize },
    #[error("disk classes {0} and {1} pair nontrivially")]
    NotIsotropic(usize, usize),
    #[error("disk classes span a sublattice of rank {0}, not the genus")]
    Degenerate(usize),
    #[error("lens space L({p}, {q}) needs p >= 0 and gcd(p, q) = 1")]
    Lens { p: i64, q: i64 },
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
