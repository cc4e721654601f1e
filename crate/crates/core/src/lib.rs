//! Exact-arithmetic experiments on twist cosets in mapping class groups.
//!
//! * [`linalg`]: determinants, Smith normal form, ranks over Z and F_p, integral kernels.
//! * [`topology`]: cyclically-cofinite topology probes over a zoo of groups.
//! * [`homology`]: Dehn twists as symplectic transvections on H_1 of a closed surface.
//! * [`heegaard`]: presentation matrices of Heegaard splittings and twist-coset scans.
//! * [`farey`]: the torus curve graph (Farey graph), annular twisting and distance scans.
//!
//! The integer linear algebra is generic over [`Scalar`]; the aliases below
//! fix the arbitrary-precision instance used by every scan.

pub mod farey;
pub mod heegaard;
pub mod homology;
pub mod linalg;
pub mod scalar;
pub mod topology;
mod window;

pub use num_bigint::BigInt;
pub use scalar::Scalar;
pub use window::{Side, Window};

/// Arbitrary-precision integer matrix.
pub type IntMatrix = linalg::Matrix<BigInt>;
/// Smith form over arbitrary-precision integers.
pub type IntSmithForm = linalg::SmithForm<BigInt>;
/// Fixed-width matrix for small fixtures; overflows panic in debug builds.
pub type SmallMatrix = linalg::Matrix<i64>;
