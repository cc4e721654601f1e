//! The curve graph of the torus: primitive slopes joined when they meet once.
//!
//! A slope `p/q` is the class `p e_1 + q e_2` up to sign, so twists act by
//! the same transvection as on homology, `v -> v + n <v, c> c` with
//! `<v, c> = v_p c_q - v_q c_p`.

mod annular;
mod distance;
mod scan;
mod slope;

use thiserror::Error;

pub use annular::{annular_distance, dual_slope, twisting_coefficient};
pub use distance::{distance, geodesic, GeodesicPath};
pub use scan::{twist_coset_distance_scan, DistanceRow, DistanceScan};
pub use slope::{intersection_number, twist, Slope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    #[error("({0}, {1}) is not a primitive vector")]
    NotPrimitive(i64, i64),
    #[error("cannot parse slope {0:?}")]
    Parse(String),
    #[error("slope {0} is the core curve; it has no annular projection")]
    CoreCurve(Slope),
    #[error("slope coordinates overflow")]
    Overflow,
}
