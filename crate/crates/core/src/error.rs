use alloc::string::String;

use crate::rootsys::{Basis, TypeLabel};

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("inadmissible type {letter}{rank}")]
    InadmissibleType { letter: char, rank: usize },

    #[error("cannot parse type label {0:?}")]
    UnparsableType(String),

    #[error("not a Cartan matrix: {0}")]
    InvalidCartan(&'static str),

    #[error("Cartan matrix is reducible")]
    Reducible,

    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,

    #[error("vector {0:?} is not a root of the ambient system")]
    NotARoot(alloc::vec::Vec<i64>),

    #[error("expected a vector of length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("basis mismatch: expected {expected} coordinates, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("weight is not in the root lattice (non-integral alpha-coordinates)")]
    NotInRootLattice,

    #[error("sublattice is not contained in the ambient lattice")]
    NotContained,

    #[error("lattice is rank deficient (rank {rank} < {ambient})")]
    RankDeficient { rank: usize, ambient: usize },

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("orbit exceeds the cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },

    #[error("rank {rank} exceeds the supported maximum {max}")]
    RankUnsupported { rank: usize, max: usize },

    #[error("subsystem belongs to {found}, not {expected}")]
    AmbientMismatch {
        expected: TypeLabel,
        found: TypeLabel,
    },

    #[error("highest weight is not dominant")]
    NotDominant,

    #[error("representation dimension {dim} exceeds the guard {guard}")]
    DimensionGuard { dim: String, guard: u64 },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("Freudenthal recursion produced a non-integral multiplicity")]
    NonIntegralMultiplicity,
}

pub type Result<T> = core::result::Result<T, Error>;
