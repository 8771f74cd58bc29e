//! Exact root-system and integer-lattice algebra for deciding which ample
//! line bundles on a flag variety `G/P` descend to the GIT quotient by the
//! maximal torus.
//!
//! The descent lattice `L(g)` of a simple type is the intersection of the
//! root lattices `ZΔ⁺(s)` over every semisimple subalgebra `s ⊇ t`. It is
//! computed here three ways:
//!
//! * [`descent::Method::Recursive`]: walk the extended-Dynkin deletion chart,
//!   recurse on component types, and take the Weyl-stable core;
//! * [`descent::Method::Direct`]: intersect the lattices of every full-rank
//!   subsystem produced by [`subsys::enumerate_all`] and take the core;
//! * [`descent::Method::ClosedForm`]: the tabulated per-type answer.
//!
//! All arithmetic is exact. Lattice intermediates use arbitrary-precision
//! integers; small root coordinates use `i64` with checked conversions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod descent;
mod error;
pub mod intlat;
pub mod repcheck;
pub mod rootsys;
pub mod subsys;
pub mod weylcore;

pub use error::{Error, Result};
pub use rootsys::{Basis, Letter, RootSystem, TypeLabel, WeightVec};
