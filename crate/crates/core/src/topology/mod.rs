//! Cyclically-cofinite topologies on a group with a marked generating set.
//!
//! A subset `U` is open when every coset ray `g x^n` (and `x^n g`) through a
//! point of `U` stays in `U` for all but finitely many `n`. Nothing finite can
//! decide that, so every probe here answers a window-relative question: are
//! the exceptions confined to the inner part of a finite window?

mod group;
mod probe;
pub mod zoo;

use thiserror::Error;

pub use group::{GeneratingSet, Generator, Group, Order, Subset};
pub use probe::{
    coset_exception_set, density_probe, finite_order_collapse, intersection_witness,
    morphism_pullback_check, openness_probe, conjugation_transport_check, CollapseReport,
    CosetSide, ExceptionEntry, ExceptionReport, MorphismReport, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("generator {index} ({element}) does not have declared order {declared}")]
    WrongOrder { index: usize, element: String, declared: u64 },
    #[error("{0} is not a finite group with an element list")]
    NotFinite(String),
    #[error("generator {0} has infinite order; finite-order collapse needs torsion generators")]
    InfiniteGenerator(usize),
    #[error("generating set is not declared closed under conjugation")]
    NotConjugationClosed,
    #[error("conjugation-closed generating set has no membership predicate")]
    MissingClosurePredicate,
    #[error("conjugate {conjugate} of generator {generator} by {by} is not in the generating set")]
    ConjugateNotMember { generator: String, by: String, conjugate: String },
    #[error("x^n g != g (g^-1 x g)^n for g = {g}, x = {x}, n = {n}")]
    TransportIdentity { g: String, x: String, n: i64 },
    #[error("decomposition does not multiply out to the target: got {got}, expected {expected}")]
    InvalidDecomposition { got: String, expected: String },
    #[error("{element} is not in {subset}")]
    NotMember { element: String, subset: String },
    #[error("density hypothesis fails at v = {v}, x = {x}: v x^n leaves the subset outside the inner window")]
    HypothesisViolated { v: String, x: String },
    #[error("map is not multiplicative at ({a}, {b})")]
    NotHomomorphism { a: String, b: String },
    #[error("exception sets differ at g = {g}, x = {x} ({side:?}): pulled back {pulled:?}, image {image:?}")]
    PullbackMismatch { g: String, x: String, side: CosetSide, pulled: Vec<i64>, image: Vec<i64> },
}
