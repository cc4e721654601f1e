//! Exact integer linear algebra. Nothing in here touches floating point.

mod elimination;
mod matrix;
mod modular;
mod smith;

use thiserror::Error;

pub use elimination::{determinant, rank};
pub use matrix::Matrix;
pub use modular::{is_prime, rank_mod_p};
pub use smith::{integral_kernel, smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("a {rows}x{cols} matrix needs {} entries, got {found}", rows * cols)]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("{rows}x{cols} matrix is not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("incompatible shapes {left:?} and {right:?}")]
    Shape { left: (usize, usize), right: (usize, usize) },
    #[error("{0} is not prime")]
    NotPrime(u64),
}
