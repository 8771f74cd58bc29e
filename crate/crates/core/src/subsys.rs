//! Full-rank root subsystems via extended Dynkin diagrams.
//!
//! For an irreducible component with simple roots `γ_1..γ_k` and highest
//! root `θ`, replacing `γ_i` by `-θ` gives a simple system of a closed
//! subsystem. It is a proper maximal one exactly when the mark `a_i` of `θ`
//! at `γ_i` is prime; mark 1 regenerates the component and composite marks
//! give non-maximal subsystems, which iteration reaches anyway.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::intlat::IntLattice;
use crate::rootsys::{
    bourbaki_cartan, classify_cartan, combine, diagram_components, positive_roots_of,
    validate_cartan, Basis, RootSystem, TypeLabel,
};

/// Largest ambient rank accepted by [`enumerate_all`].
pub const MAX_ENUMERATION_RANK: usize = 8;

/// A full-rank closed subsystem, given by its simple roots in ambient
/// alpha-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSubsystem {
    ambient: TypeLabel,
    simple_roots: Vec<Vec<i64>>,
    components: Vec<Vec<usize>>,
    component_labels: Vec<TypeLabel>,
    /// `component_order[c][k]` is the index into `simple_roots` of Bourbaki
    /// node `k` of component `c`.
    component_order: Vec<Vec<usize>>,
    root_lattice: IntLattice,
}

impl RootSubsystem {
    pub fn new(ambient: &RootSystem, simple_roots: Vec<Vec<i64>>) -> Result<Self> {
        let n = ambient.rank();
        if simple_roots.len() != n {
            return Err(Error::RankDeficient {
                rank: simple_roots.len(),
                ambient: n,
            });
        }
        let m = ambient.cartan_of(&simple_roots)?;
        validate_cartan(&m)?;
        let components = diagram_components(&m);
        let mut component_labels = Vec::with_capacity(components.len());
        let mut component_order = Vec::with_capacity(components.len());
        for comp in &components {
            let local: Vec<Vec<i64>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| m[i][j]).collect())
                .collect();
            let (label, perm) = classify_cartan(&local)?;
            let mut order = alloc::vec![0usize; comp.len()];
            for (local_idx, &bourbaki_idx) in perm.iter().enumerate() {
                order[bourbaki_idx] = comp[local_idx];
            }
            component_labels.push(label);
            component_order.push(order);
        }
        let root_lattice = IntLattice::from_rows(n, Basis::Alpha, &simple_roots)?;
        if !root_lattice.is_full_rank() {
            return Err(Error::RankDeficient {
                rank: root_lattice.rank(),
                ambient: n,
            });
        }
        Ok(RootSubsystem {
            ambient: ambient.label(),
            simple_roots,
            components,
            component_labels,
            component_order,
            root_lattice,
        })
    }

    /// The ambient system itself.
    pub fn full(ambient: &RootSystem) -> Self {
        let simple = (0..ambient.rank())
            .map(|i| ambient.simple_root(i))
            .collect();
        RootSubsystem::new(ambient, simple).expect("simple roots form a valid subsystem")
    }

    pub fn ambient(&self) -> TypeLabel {
        self.ambient
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_labels(&self) -> &[TypeLabel] {
        &self.component_labels
    }

    /// Simple roots of component `c` listed in Bourbaki order of its type.
    pub fn component_simple_roots(&self, c: usize) -> Vec<Vec<i64>> {
        self.component_order[c]
            .iter()
            .map(|&i| self.simple_roots[i].clone())
            .collect()
    }

    pub fn root_lattice(&self) -> &IntLattice {
        &self.root_lattice
    }

    /// Component type labels, sorted.
    pub fn type_multiset(&self) -> Vec<TypeLabel> {
        let mut v = self.component_labels.clone();
        v.sort();
        v
    }

    /// Positive roots (relative to this subsystem's simple roots) in ambient
    /// alpha-coordinates.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (c, label) in self.component_labels.iter().enumerate() {
            let basis = self.component_simple_roots(c);
            for r in positive_roots_of(&bourbaki_cartan(*label)) {
                out.push(combine(&r, &basis));
            }
        }
        out
    }

    /// Every root of the subsystem, sorted.
    pub fn roots(&self) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        for r in self.positive_roots() {
            out.insert(r.iter().map(|x| -x).collect());
            out.insert(r);
        }
        out
    }

    /// Highest root of component `c`, in ambient alpha-coordinates.
    pub fn component_theta(&self, c: usize) -> Vec<i64> {
        let marks = bourbaki_marks(self.component_labels[c]);
        combine(&marks, &self.component_simple_roots(c))
    }
}

/// Marks of the highest root of `label` in Bourbaki order.
pub fn bourbaki_marks(label: TypeLabel) -> Vec<i64> {
    positive_roots_of(&bourbaki_cartan(label))
        .pop()
        .expect("nonempty")
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Proper maximal full-rank subsystems of `sub`: for each component and each
/// node with prime mark, that node's simple root is replaced by `-θ` of the
/// component.
pub fn maximal_subsystems(ambient: &RootSystem, sub: &RootSubsystem) -> Result<Vec<RootSubsystem>> {
    if sub.ambient() != ambient.label() {
        return Err(Error::AmbientMismatch {
            expected: ambient.label(),
            found: sub.ambient(),
        });
    }
    let mut out = Vec::new();
    for c in 0..sub.components.len() {
        let marks = bourbaki_marks(sub.component_labels[c]);
        let theta = sub.component_theta(c);
        let neg_theta: Vec<i64> = theta.iter().map(|x| -x).collect();
        for (k, &mark) in marks.iter().enumerate() {
            if !is_prime(mark) {
                continue;
            }
            let mut simple = sub.simple_roots.clone();
            simple[sub.component_order[c][k]] = neg_theta.clone();
            out.push(RootSubsystem::new(ambient, simple)?);
        }
    }
    Ok(out)
}

/// Canonical key of a subsystem: its roots, each normalized to be positive
/// in the ambient system.
fn root_set_key(sub: &RootSubsystem) -> BTreeSet<Vec<i64>> {
    sub.positive_roots()
        .into_iter()
        .map(|r| {
            let neg = r.iter().find(|x| **x != 0).is_some_and(|x| *x < 0);
            if neg {
                r.iter().map(|x| -x).collect()
            } else {
                r
            }
        })
        .collect()
}

/// Every full-rank subsystem reachable from the full system by iterated
/// maximal deletions, including the full system. Covers every conjugacy
/// class at least once. One subsystem is kept per distinct root lattice;
/// the output is sorted by canonical lattice basis.
pub fn enumerate_all(ambient: &RootSystem) -> Result<Vec<RootSubsystem>> {
    if ambient.rank() > MAX_ENUMERATION_RANK {
        return Err(Error::RankUnsupported {
            rank: ambient.rank(),
            max: MAX_ENUMERATION_RANK,
        });
    }
    let full = RootSubsystem::full(ambient);
    let mut seen: BTreeSet<BTreeSet<Vec<i64>>> = BTreeSet::new();
    let mut by_lattice: BTreeMap<IntLattice, RootSubsystem> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(root_set_key(&full));
    queue.push_back(full);
    while let Some(sub) = queue.pop_front() {
        for child in maximal_subsystems(ambient, &sub)? {
            if seen.insert(root_set_key(&child)) {
                queue.push_back(child);
            }
        }
        by_lattice.entry(sub.root_lattice.clone()).or_insert(sub);
    }
    Ok(by_lattice.into_values().collect())
}
