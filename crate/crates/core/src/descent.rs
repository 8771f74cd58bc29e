//! The descent lattice `L(g) = ∩_s ZΔ⁺(s)` over all semisimple `s ⊇ t`, and
//! per-weight descent queries.
//!
//! An ample `L_P(λ)` descends to `Y(λ)//T` iff `λ ∈ L(g)`; the parabolic only
//! enters through ampleness.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intlat::{Index, IntLattice, Membership};
use crate::rootsys::{Basis, Letter, RootSystem, TypeLabel, WeightVec};
use crate::subsys::{enumerate_all, maximal_subsystems, RootSubsystem};
use crate::weylcore::ReflectionAction;

/// Largest rank for which descent lattices are computed.
pub const MAX_DESCENT_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Chart recursion: intersect the embedded lattices of the maximal
    /// subsystems, then take the Weyl core.
    Recursive,
    /// Weyl core of the intersection over every enumerated subsystem.
    Direct,
    /// Tabulated generators per type.
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Recursive, Method::Direct, Method::ClosedForm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::Direct => "direct",
            Method::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "recursive" => Ok(Method::Recursive),
            "direct" => Ok(Method::Direct),
            "closed" | "closed_form" | "closed-form" => Ok(Method::ClosedForm),
            _ => Err(()),
        }
    }
}

/// `L(g)` in alpha-coordinates, with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentLattice {
    pub label: TypeLabel,
    pub lattice: IntLattice,
    pub method: Method,
}

impl DescentLattice {
    /// `[Q : L]`.
    pub fn index_in_root_lattice(&self) -> Result<Index> {
        IntLattice::standard(self.label.rank(), Basis::Alpha).index_of(&self.lattice)
    }
}

/// Answer to a single descent query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentReport {
    pub label: TypeLabel,
    pub lambda_omega: WeightVec,
    /// Exact alpha-coordinates, when integral.
    pub lambda_alpha: Option<Vec<i64>>,
    /// Bourbaki indices (1-based) of the simple roots of the Levi of `P`.
    pub parabolic: BTreeSet<usize>,
    pub ample: bool,
    pub in_root_lattice: bool,
    pub member: bool,
    pub descends: bool,
}

/// Side-by-side results of the three methods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub label: TypeLabel,
    pub lattices: Vec<DescentLattice>,
    pub agree: bool,
}

impl VerifyReport {
    pub fn lattice(&self, method: Method) -> &DescentLattice {
        self.lattices
            .iter()
            .find(|l| l.method == method)
            .expect("all methods present")
    }
}

fn check_rank(label: TypeLabel) -> Result<()> {
    if label.rank() > MAX_DESCENT_RANK {
        return Err(Error::RankUnsupported {
            rank: label.rank(),
            max: MAX_DESCENT_RANK,
        });
    }
    Ok(())
}

/// Memo of recursively computed lattices, keyed by abstract type and stored
/// in that type's own Bourbaki alpha-coordinates.
#[derive(Debug, Default, Clone)]
pub struct RecursiveMemo {
    lattices: BTreeMap<TypeLabel, IntLattice>,
}

impl RecursiveMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lattice(&mut self, label: TypeLabel) -> Result<IntLattice> {
        check_rank(label)?;
        if let Some(l) = self.lattices.get(&label) {
            return Ok(l.clone());
        }
        let system = RootSystem::new(label)?;
        let result = match self.chart_intersection(label)? {
            None => IntLattice::standard(system.rank(), Basis::Alpha),
            Some(m) => ReflectionAction::new(system).weyl_core(&m)?,
        };
        self.lattices.insert(label, result.clone());
        Ok(result)
    }

    /// Intersection of the embedded descent lattices of the maximal
    /// subsystems, before the Weyl core is taken. `None` when the type has no
    /// proper maximal subsystem (type A).
    pub fn chart_intersection(&mut self, label: TypeLabel) -> Result<Option<IntLattice>> {
        check_rank(label)?;
        let system = RootSystem::new(label)?;
        let n = system.rank();
        let full = RootSubsystem::full(&system);
        let mut acc: Option<IntLattice> = None;
        for sub in &maximal_subsystems(&system, &full)? {
            let embedded = self.embed_subsystem(sub, n)?;
            acc = Some(match acc {
                None => embedded,
                Some(a) => a.intersect(&embedded)?,
            });
        }
        Ok(acc)
    }

    /// `Σ_c embed(L(type of c))`, substituting each component's abstract
    /// simple roots by its actual ambient roots.
    fn embed_subsystem(&mut self, sub: &RootSubsystem, n: usize) -> Result<IntLattice> {
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for (c, label) in sub.component_labels().iter().enumerate() {
            let local = self.lattice(*label)?;
            let basis = sub.component_simple_roots(c);
            for row in local.rows() {
                let mut v = alloc::vec![BigInt::zero(); n];
                for (coef, root) in row.iter().zip(&basis) {
                    for (x, r) in v.iter_mut().zip(root) {
                        *x += coef * BigInt::from(*r);
                    }
                }
                gens.push(v);
            }
        }
        IntLattice::from_big(n, Basis::Alpha, gens)
    }
}

/// `L(label)` by the requested method.
pub fn descent_lattice(label: TypeLabel, method: Method) -> Result<DescentLattice> {
    check_rank(label)?;
    let lattice = match method {
        Method::Recursive => RecursiveMemo::new().lattice(label)?,
        Method::Direct => direct_lattice(label)?,
        Method::ClosedForm => return closed_form_lattice(label),
    };
    Ok(DescentLattice {
        label,
        lattice,
        method,
    })
}

fn direct_lattice(label: TypeLabel) -> Result<IntLattice> {
    let system = RootSystem::new(label)?;
    let mut acc = IntLattice::standard(system.rank(), Basis::Alpha);
    for sub in enumerate_all(&system)? {
        acc = acc.intersect(sub.root_lattice())?;
    }
    ReflectionAction::new(system).weyl_core(&acc)
}

/// `k Λ` in alpha-coordinates; each `k ω_i` must be integral.
pub fn weight_lattice_multiple(system: &RootSystem, k: i64) -> Result<IntLattice> {
    let n = system.rank();
    let det = system.cartan_det();
    let adj = system.cartan_adjugate();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|r| {
                    let x = k * adj[r][i];
                    if x % det == 0 {
                        Ok(x / det)
                    } else {
                        Err(Error::NotInRootLattice)
                    }
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    IntLattice::from_rows(n, Basis::Alpha, &rows)
}

fn diagonal(entries: &[i64]) -> Vec<Vec<i64>> {
    let n = entries.len();
    (0..n)
        .map(|i| {
            let mut v = alloc::vec![0; n];
            v[i] = entries[i];
            v
        })
        .collect()
}

/// Tabulated generators of `L(label)` per type.
pub fn closed_form_lattice(label: TypeLabel) -> Result<DescentLattice> {
    check_rank(label)?;
    let n = label.rank();
    let unit = |i: usize, k: i64| {
        let mut v = alloc::vec![0; n];
        v[i] = k;
        v
    };
    let lattice = match (label.letter(), n) {
        (Letter::A, _) => IntLattice::standard(n, Basis::Alpha),
        (Letter::B, _) => IntLattice::scaled_standard(n, Basis::Alpha, 2),
        (Letter::C, _) => {
            let mut d = alloc::vec![2; n];
            d[n - 1] = 1;
            IntLattice::from_rows(n, Basis::Alpha, &diagonal(&d))?
        }
        (Letter::D, 4) => {
            // {n1 a1 + 2 n2 a2 + n3 a3 + n4 a4 : n1 + n3 + n4 even}
            let gens = [
                unit(0, 2),
                unit(1, 2),
                alloc::vec![1, 0, 1, 0],
                alloc::vec![0, 0, 1, 1],
            ];
            IntLattice::from_rows(n, Basis::Alpha, &gens)?
        }
        (Letter::D, _) => {
            // {2n_1 a_1 + .. + 2n_{l-2} a_{l-2} + n_{l-1} a_{l-1} + n_l a_l : n_{l-1} + n_l even}
            let mut gens: Vec<Vec<i64>> = (0..n - 2).map(|i| unit(i, 2)).collect();
            let mut pair = alloc::vec![0; n];
            pair[n - 2] = 1;
            pair[n - 1] = 1;
            gens.push(pair);
            gens.push(unit(n - 1, 2));
            IntLattice::from_rows(n, Basis::Alpha, &gens)?
        }
        (Letter::G, _) => IntLattice::from_rows(n, Basis::Alpha, &diagonal(&[6, 2]))?,
        (Letter::F, _) => IntLattice::from_rows(n, Basis::Alpha, &diagonal(&[6, 6, 12, 12]))?,
        (Letter::E, 6) => weight_lattice_multiple(&RootSystem::new(label)?, 6)?,
        (Letter::E, 7) => weight_lattice_multiple(&RootSystem::new(label)?, 12)?,
        (Letter::E, _) => IntLattice::scaled_standard(n, Basis::Alpha, 60),
    };
    Ok(DescentLattice {
        label,
        lattice,
        method: Method::ClosedForm,
    })
}

/// Whether `L_P(λ)` is ample and descends, for `λ` in omega-coordinates and
/// `parabolic` the 1-based indices of `Π_P`.
pub fn descends(
    label: TypeLabel,
    lambda: &WeightVec,
    parabolic: &BTreeSet<usize>,
) -> Result<DescentReport> {
    let lattice = descent_lattice(label, Method::Recursive)?;
    descends_in(&lattice, lambda, parabolic)
}

/// [`descends`] against an already computed descent lattice.
pub fn descends_in(
    lattice: &DescentLattice,
    lambda: &WeightVec,
    parabolic: &BTreeSet<usize>,
) -> Result<DescentReport> {
    let label = lattice.label;
    let system = RootSystem::new(label)?;
    let n = system.rank();
    if lambda.basis != Basis::Omega {
        return Err(Error::BasisMismatch {
            expected: Basis::Omega,
            found: lambda.basis,
        });
    }
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: lambda.len(),
        });
    }
    if let Some(&bad) = parabolic.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: n,
        });
    }
    let ample = lambda.coords.iter().enumerate().all(|(i, &x)| {
        if parabolic.contains(&(i + 1)) {
            x == 0
        } else {
            x > 0
        }
    });
    let membership = lattice.lattice.contains_weight(lambda, &system)?;
    let lambda_alpha = match system.omega_to_alpha(&lambda.coords) {
        Ok(a) => Some(a),
        Err(Error::NotInRootLattice) => None,
        Err(e) => return Err(e),
    };
    let member = membership == Membership::Member;
    Ok(DescentReport {
        label,
        lambda_omega: lambda.clone(),
        lambda_alpha,
        parabolic: parabolic.clone(),
        ample,
        in_root_lattice: membership != Membership::NotInRootLattice,
        member,
        descends: ample && member,
    })
}

/// Computes all three lattices and checks they coincide.
pub fn verify_type(label: TypeLabel) -> Result<VerifyReport> {
    let lattices = Method::ALL
        .iter()
        .map(|&m| descent_lattice(label, m))
        .collect::<Result<Vec<_>>>()?;
    let agree = lattices.windows(2).all(|w| w[0].lattice == w[1].lattice);
    Ok(VerifyReport {
        label,
        lattices,
        agree,
    })
}

/// Every type covered by verification: `A1–A8, B3–B8, C2–C8, D4–D8`, and
/// the exceptional types.
pub fn supported_types() -> Vec<TypeLabel> {
    TypeLabel::all_up_to(MAX_DESCENT_RANK)
}
