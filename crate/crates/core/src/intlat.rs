//! Exact integer lattices in canonical row Hermite normal form.
//!
//! A lattice is stored as the nonzero rows of the HNF of any generating set:
//! rows are in echelon form with strictly increasing pivot columns, every
//! pivot is positive, and entries above a pivot lie in `[0, pivot)`. Two
//! lattices are equal as sets exactly when their bases are equal matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{Basis, RootSystem, WeightVec};

/// A sublattice of `Z^n`, tagged with the basis its coordinates refer to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntLattice {
    ambient_rank: usize,
    basis: Basis,
    rows: Vec<Vec<BigInt>>,
}

/// Index of one lattice in another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => f.write_str("infinite"),
        }
    }
}

/// Invariant factors `d_1 | d_2 | ...` (all `> 1`) of a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TorsionProfile {
    pub invariant_factors: Vec<BigInt>,
}

impl TorsionProfile {
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// Result of testing an omega-coordinate weight against an alpha-coordinate
/// lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotMember,
    /// The weight has non-integral alpha-coordinates, so it lies in no
    /// sublattice of `Q`.
    NotInRootLattice,
}

impl Membership {
    pub fn is_member(self) -> bool {
        self == Membership::Member
    }
}

/// Row HNF of an arbitrary integer matrix with `ncols` columns. Zero and
/// dependent rows are allowed; the result has only the nonzero rows.
pub fn hnf_rows(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let nrows = a.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero remains.
        loop {
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if !a[i][c].is_zero() && best.is_none_or(|b| a[i][c].abs() < a[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap(r, b);
            let mut done = true;
            for i in r + 1..nrows {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (head, tail) = a.split_at_mut(i);
                let pivot_row = &head[r];
                for (x, p) in tail[0][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &q * p;
                }
                if !tail[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r][c..].iter_mut() {
                *x = -&*x;
            }
        }
        let (head, tail) = a.split_at_mut(r);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let q = row[c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &q * p;
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

impl IntLattice {
    /// Canonical lattice spanned by `generators` (each of length `ambient_rank`).
    pub fn from_big(
        ambient_rank: usize,
        basis: Basis,
        generators: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        for g in &generators {
            if g.len() != ambient_rank {
                return Err(Error::LengthMismatch {
                    expected: ambient_rank,
                    found: g.len(),
                });
            }
        }
        Ok(IntLattice {
            ambient_rank,
            basis,
            rows: hnf_rows(generators, ambient_rank),
        })
    }

    pub fn from_rows(ambient_rank: usize, basis: Basis, generators: &[Vec<i64>]) -> Result<Self> {
        Self::from_big(ambient_rank, basis, to_big(generators))
    }

    /// `Z^n` in the given basis (the root lattice `Q` for alpha-coordinates,
    /// the weight lattice `Λ` for omega-coordinates).
    pub fn standard(ambient_rank: usize, basis: Basis) -> Self {
        Self::scaled_standard(ambient_rank, basis, 1)
    }

    /// `k Z^n`.
    pub fn scaled_standard(ambient_rank: usize, basis: Basis, k: i64) -> Self {
        let rows = (0..ambient_rank)
            .map(|i| {
                let mut v = vec![BigInt::zero(); ambient_rank];
                v[i] = BigInt::from(k.abs());
                v
            })
            .collect();
        IntLattice {
            ambient_rank,
            basis,
            rows: if k == 0 { Vec::new() } else { rows },
        }
    }

    pub fn zero(ambient_rank: usize, basis: Basis) -> Self {
        IntLattice {
            ambient_rank,
            basis,
            rows: Vec::new(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_rank
    }

    /// Canonical HNF rows.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Rows as `i64`, if every entry fits.
    pub fn rows_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    fn check_compatible(&self, other: &IntLattice) -> Result<()> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::LengthMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        Ok(())
    }

    /// `self + other`.
    pub fn sum(&self, other: &IntLattice) -> Result<IntLattice> {
        self.check_compatible(other)?;
        let mut gens = self.rows.clone();
        gens.extend(other.rows.iter().cloned());
        Ok(IntLattice {
            ambient_rank: self.ambient_rank,
            basis: self.basis,
            rows: hnf_rows(gens, self.ambient_rank),
        })
    }

    /// `self ∩ other`, exactly.
    ///
    /// Stacks `[B1 | B1]` over `[B2 | 0]`; a combination `x B1 + y B2` with
    /// zero left half has `x B1 = -y B2` on the right, so the HNF rows whose
    /// pivot lies in the right half span the intersection.
    pub fn intersect(&self, other: &IntLattice) -> Result<IntLattice> {
        self.check_compatible(other)?;
        let n = self.ambient_rank;
        let mut gens = Vec::with_capacity(self.rank() + other.rank());
        for r in &self.rows {
            let mut row = r.clone();
            row.extend(r.iter().cloned());
            gens.push(row);
        }
        for r in &other.rows {
            let mut row = r.clone();
            row.extend(core::iter::repeat_n(BigInt::zero(), n));
            gens.push(row);
        }
        let h = hnf_rows(gens, 2 * n);
        let rows: Vec<Vec<BigInt>> = h
            .into_iter()
            .filter(|row| row[..n].iter().all(Zero::is_zero))
            .map(|row| row[n..].to_vec())
            .collect();
        Ok(IntLattice {
            ambient_rank: n,
            basis: self.basis,
            rows: hnf_rows(rows, n),
        })
    }

    /// Integer coordinates of `v` with respect to the basis rows, if `v` is in
    /// the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.ambient_rank {
            return Err(Error::LengthMismatch {
                expected: self.ambient_rank,
                found: v.len(),
            });
        }
        let mut rest: Vec<BigInt> = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for row in &self.rows {
            let c = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let (q, rem) = rest[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for (x, p) in rest[c..].iter_mut().zip(&row[c..]) {
                    *x -= &q * p;
                }
            }
            coeffs.push(q);
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coeffs))
    }

    /// Whether `v` (coordinates in this lattice's basis) lies in the lattice.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_i64(&self, v: &[i64]) -> Result<bool> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains(&big)
    }

    /// Membership of a tagged vector. An omega-coordinate vector tested
    /// against an alpha-coordinate lattice is first converted exactly through
    /// `system`; non-integral alpha-coordinates give
    /// [`Membership::NotInRootLattice`].
    pub fn contains_weight(&self, v: &WeightVec, system: &RootSystem) -> Result<Membership> {
        if v.len() != self.ambient_rank {
            return Err(Error::LengthMismatch {
                expected: self.ambient_rank,
                found: v.len(),
            });
        }
        let coords = match (v.basis, self.basis) {
            (a, b) if a == b => v.coords.clone(),
            _ => match system.convert(v, self.basis) {
                Ok(w) => w.coords,
                Err(Error::NotInRootLattice) => return Ok(Membership::NotInRootLattice),
                Err(e) => return Err(e),
            },
        };
        Ok(if self.contains_i64(&coords)? {
            Membership::Member
        } else {
            Membership::NotMember
        })
    }

    /// `self ⊆ other`.
    pub fn is_sublattice_of(&self, other: &IntLattice) -> Result<bool> {
        self.check_compatible(other)?;
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `|self / small|`, or [`Index::Infinite`] when `small` has lower rank.
    pub fn index_of(&self, small: &IntLattice) -> Result<Index> {
        if !small.is_sublattice_of(self)? {
            return Err(Error::NotContained);
        }
        if small.rank() < self.rank() {
            return Ok(Index::Infinite);
        }
        let coords = self.coords_matrix(small)?;
        let h = hnf_rows(coords, self.rank());
        Ok(Index::Finite(
            h.iter().enumerate().map(|(i, r)| r[i].clone()).product(),
        ))
    }

    fn coords_matrix(&self, small: &IntLattice) -> Result<Vec<Vec<BigInt>>> {
        small
            .rows
            .iter()
            .map(|r| self.coordinates(r)?.ok_or(Error::NotContained))
            .collect()
    }

    /// Torsion subgroup of `self / sub` via the Smith normal form of `sub`'s
    /// basis written in coordinates of `self`'s basis.
    pub fn torsion_quotient(&self, sub: &IntLattice) -> Result<TorsionProfile> {
        if !sub.is_sublattice_of(self)? {
            return Err(Error::NotContained);
        }
        let coords = self.coords_matrix(sub)?;
        let invariant_factors = smith_diagonal(coords, self.rank())
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        Ok(TorsionProfile { invariant_factors })
    }

    /// Applies `f` to every basis row and re-canonicalizes.
    pub fn map_rows(&self, mut f: impl FnMut(&[BigInt]) -> Vec<BigInt>) -> IntLattice {
        let gens = self.rows.iter().map(|r| f(r)).collect();
        IntLattice {
            ambient_rank: self.ambient_rank,
            basis: self.basis,
            rows: hnf_rows(gens, self.ambient_rank),
        }
    }

    /// `k * self`.
    pub fn scale(&self, k: i64) -> IntLattice {
        let k = BigInt::from(k);
        self.map_rows(|r| r.iter().map(|x| x * &k).collect())
    }

    /// Product of the pivots: the index in `Z^n` for a full-rank lattice.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_full_rank() {
            return Err(Error::RankDeficient {
                rank: self.rank(),
                ambient: self.ambient_rank,
            });
        }
        Ok(self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r[i].clone())
            .product())
    }
}

/// Nonzero diagonal of the Smith normal form of `a` (`ncols` columns), in
/// divisibility order.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<BigInt> {
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry of the trailing block goes to (t, t).
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..nrows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            let (head, tail) = a.split_at_mut(i);
            for (x, p) in tail[0][t..].iter_mut().zip(&head[t][t..]) {
                *x -= &q * p;
            }
            if !tail[0][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..ncols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for row in a.iter_mut() {
                let p = row[t].clone();
                row[j] -= &q * p;
            }
            if !a[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold any offending row into row t and retry.
        let p = a[t][t].clone();
        let offender = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !(&a[i][j] % &p).is_zero()));
        if let Some(i) = offender {
            let (head, tail) = a.split_at_mut(i);
            for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                *x += y;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}
