//! Weyl-group action by simple reflections on weights and lattices.
//!
//! The Weyl-stable core `[M]_W = ∩_{w∈W} wM` is computed as the fixed point
//! of `M ← M ∩ s_1 M ∩ … ∩ s_ℓ M`. A lattice stable under every simple
//! reflection is stable under the group they generate, so the group itself
//! is never enumerated.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intlat::IntLattice;
use crate::rootsys::{Basis, RootSystem, WeightVec};

/// Default orbit size cap.
pub const DEFAULT_ORBIT_CAP: usize = 10_000;

/// Simple reflections `s_i = I - e_i (row i of C)` acting on alpha-coordinate
/// column vectors.
#[derive(Debug, Clone)]
pub struct ReflectionAction {
    system: RootSystem,
    matrices: Vec<Vec<Vec<i64>>>,
}

/// Outcome of a Weyl-core computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreTrace {
    pub core: IntLattice,
    /// Number of rounds that strictly shrank the lattice.
    pub rounds: usize,
}

impl ReflectionAction {
    pub fn new(system: RootSystem) -> Self {
        let n = system.rank();
        let matrices = (0..n)
            .map(|i| {
                let mut m = vec![vec![0i64; n]; n];
                for (k, row) in m.iter_mut().enumerate() {
                    row[k] = 1;
                }
                for j in 0..n {
                    m[i][j] -= system.cartan()[i][j];
                }
                m
            })
            .collect();
        ReflectionAction { system, matrices }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// Matrix of `s_i` in alpha-coordinates.
    pub fn matrix(&self, i: usize) -> &[Vec<i64>] {
        &self.matrices[i]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `s_i(v)`, in the basis `v` is given in.
    pub fn reflect(&self, i: usize, v: &WeightVec) -> Result<WeightVec> {
        self.check_index(i)?;
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        let mut coords = v.coords.clone();
        match v.basis {
            Basis::Alpha => {
                let c = self.system.coroot_value(&v.coords, i);
                coords[i] -= c;
            }
            Basis::Omega => {
                // C s_i C^{-1}: subtract lambda_i times alpha_i in omega-coordinates.
                let li = v.coords[i];
                for (k, x) in coords.iter_mut().enumerate() {
                    *x -= li * self.system.cartan()[k][i];
                }
            }
        }
        Ok(WeightVec {
            coords,
            basis: v.basis,
        })
    }

    fn reflect_alpha_big(&self, i: usize, v: &[BigInt]) -> Vec<BigInt> {
        let row = &self.system.cartan()[i];
        let c: BigInt = row.iter().zip(v).map(|(a, x)| BigInt::from(*a) * x).sum();
        let mut out = v.to_vec();
        out[i] -= c;
        out
    }

    /// `s_i M` for an alpha-coordinate lattice.
    pub fn reflect_lattice(&self, i: usize, m: &IntLattice) -> Result<IntLattice> {
        self.check_index(i)?;
        self.check_lattice(m)?;
        Ok(m.map_rows(|r| self.reflect_alpha_big(i, r)))
    }

    fn check_lattice(&self, m: &IntLattice) -> Result<()> {
        if m.basis() != Basis::Alpha {
            return Err(Error::BasisMismatch {
                expected: Basis::Alpha,
                found: m.basis(),
            });
        }
        if m.ambient_rank() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: m.ambient_rank(),
            });
        }
        Ok(())
    }

    /// Whether `s_i M = M` for every simple reflection.
    pub fn is_w_stable(&self, m: &IntLattice) -> Result<bool> {
        self.check_lattice(m)?;
        for i in 0..self.rank() {
            if self.reflect_lattice(i, m)? != *m {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest W-stable sublattice of a full-rank `M`.
    pub fn weyl_core(&self, m: &IntLattice) -> Result<IntLattice> {
        Ok(self.weyl_core_traced(m)?.core)
    }

    /// [`weyl_core`](Self::weyl_core) together with its round count.
    pub fn weyl_core_traced(&self, m: &IntLattice) -> Result<CoreTrace> {
        self.check_lattice(m)?;
        if !m.is_full_rank() {
            return Err(Error::RankDeficient {
                rank: m.rank(),
                ambient: m.ambient_rank(),
            });
        }
        let mut current = m.clone();
        let mut det = current.determinant()?;
        let mut rounds = 0;
        loop {
            let mut next = current.clone();
            for i in 0..self.rank() {
                next = next.intersect(&self.reflect_lattice(i, &current)?)?;
            }
            if next == current {
                return Ok(CoreTrace {
                    core: current,
                    rounds,
                });
            }
            let next_det = next.determinant()?;
            // Each productive round at least doubles [Q : M_k].
            assert!(next_det > det, "Weyl-core iteration failed to shrink");
            det = next_det;
            current = next;
            rounds += 1;
        }
    }

    /// Orbit of `v` under `W`, or [`Error::OrbitCapExceeded`] once more than
    /// `cap` elements have been found.
    pub fn orbit(&self, v: &WeightVec, cap: usize) -> Result<BTreeSet<WeightVec>> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        let mut seen = BTreeSet::new();
        seen.insert(v.clone());
        let mut frontier = vec![v.clone()];
        while let Some(x) = frontier.pop() {
            for i in 0..self.rank() {
                let y = self.reflect(i, &x)?;
                if !seen.contains(&y) {
                    if seen.len() == cap {
                        return Err(Error::OrbitCapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        Ok(seen)
    }
}
