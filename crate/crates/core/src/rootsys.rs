//! Root-system data for the simple types in Bourbaki numbering.
//!
//! Orientation of the Cartan matrix, used everywhere in the crate:
//!
//! ```text
//! C[i][j] = <alpha_j, alpha_i^vee>
//! ```
//!
//! so row `i` of `C` evaluates the simple coroot `alpha_i^vee` on a vector
//! given in alpha-coordinates, and the omega-coordinates of a weight are
//! `C * (alpha-coordinates)`.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Cartan–Killing letter of a simple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Letter::A,
            'B' => Letter::B,
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            _ => return None,
        })
    }
}

/// A simple Lie type, normalized so that each isomorphism class has exactly
/// one label: `D3` becomes `A3` and `B2` becomes `C2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeLabel {
    letter: Letter,
    rank: usize,
}

impl TypeLabel {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let admissible = match letter {
            Letter::A => rank >= 1,
            Letter::B | Letter::C => rank >= 2,
            Letter::D => rank >= 3,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if !admissible {
            return Err(Error::InadmissibleType {
                letter: letter.as_char(),
                rank,
            });
        }
        let (letter, rank) = match (letter, rank) {
            (Letter::D, 3) => (Letter::A, 3),
            (Letter::B, 2) => (Letter::C, 2),
            other => other,
        };
        Ok(TypeLabel { letter, rank })
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every normalized label of rank at most `max_rank`, sorted.
    pub fn all_up_to(max_rank: usize) -> Vec<TypeLabel> {
        let mut out = BTreeSet::new();
        for rank in 1..=max_rank {
            for letter in [
                Letter::A,
                Letter::B,
                Letter::C,
                Letter::D,
                Letter::E,
                Letter::F,
                Letter::G,
            ] {
                if let Ok(t) = TypeLabel::new(letter, rank) {
                    out.insert(t);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 1) / 2,
            Letter::B | Letter::C => n * n,
            Letter::D => n * (n - 1),
            Letter::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Letter::F => 24,
            Letter::G => 6,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Accepts `G2`, `g2`, `E_8`, `B 3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnparsableType(s.to_string());
        let s_trim = s.trim();
        let mut chars = s_trim.chars();
        let letter = chars.next().and_then(Letter::from_char).ok_or_else(bad)?;
        let rest = chars.as_str().trim_start_matches(['_', ' ']);
        let rank: usize = rest.parse().map_err(|_| bad())?;
        TypeLabel::new(letter, rank)
    }
}

/// Coordinate basis of a vector: simple roots or fundamental weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Alpha,
    Omega,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Alpha => "alpha",
            Basis::Omega => "omega",
        })
    }
}

/// An exact integer vector tagged with its coordinate basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec {
    pub coords: Vec<i64>,
    pub basis: Basis,
}

impl WeightVec {
    pub fn alpha(coords: Vec<i64>) -> Self {
        WeightVec {
            coords,
            basis: Basis::Alpha,
        }
    }

    pub fn omega(coords: Vec<i64>) -> Self {
        WeightVec {
            coords,
            basis: Basis::Omega,
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Cartan matrix of `label` in Bourbaki numbering (0-based indices).
pub fn bourbaki_cartan(label: TypeLabel) -> Vec<Vec<i64>> {
    let n = label.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match label.letter() {
        Letter::A | Letter::B | Letter::C => {
            for i in 0..n.saturating_sub(1) {
                bond(i, i + 1);
            }
        }
        Letter::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        Letter::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
        }
        Letter::F => {
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
        }
        Letter::G => bond(0, 1),
    }
    // Multiple bonds: C[long][short] = -1, C[short][long] = -r.
    match label.letter() {
        Letter::B => c[n - 1][n - 2] = -2,
        Letter::C => c[n - 2][n - 1] = -2,
        Letter::F => c[2][1] = -2,
        Letter::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Checks the axioms of a (generalized) Cartan matrix with bond products at
/// most 3. Finite type is established separately by classification.
pub fn validate_cartan(m: &[Vec<i64>]) -> Result<()> {
    let n = m.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix"));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan("matrix is not square"));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan("diagonal entry is not 2"));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if row[j] > 0 {
                return Err(Error::InvalidCartan("positive off-diagonal entry"));
            }
            if (row[j] == 0) != (m[j][i] == 0) {
                return Err(Error::InvalidCartan("zero pattern is not symmetric"));
            }
            if row[j] * m[j][i] > 3 {
                return Err(Error::InvalidCartan("bond product exceeds 3"));
            }
        }
    }
    Ok(())
}

/// Connected components of the Dynkin diagram, each sorted, ordered by
/// smallest node.
pub fn diagram_components(m: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in 0..n {
                if !seen[w] && m[v][w] != 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Minimal positive integers `d` with `d_i C[i][j] = d_j C[j][i]`, so that
/// `(alpha_i, alpha_j) = d_i C[i][j]` is a symmetric form.
pub fn symmetrizer(m: &[Vec<i64>]) -> Vec<i64> {
    let n = m.len();
    // Rational d stored as (num, den); each component seeded with 1.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for comp in diagram_components(m) {
        d[comp[0]] = Some((1, 1));
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            let (num, den) = d[i].unwrap();
            for j in 0..n {
                if j != i && m[i][j] != 0 && d[j].is_none() {
                    // d_j = d_i C[i][j] / C[j][i]
                    let nn = num * m[i][j];
                    let dd = den * m[j][i];
                    let g = num_integer::gcd(nn, dd);
                    d[j] = Some((nn / g, dd / g));
                    stack.push(j);
                }
            }
        }
        let lcm = comp
            .iter()
            .fold(1i64, |acc, &i| num_integer::lcm(acc, d[i].unwrap().1.abs()));
        let scaled: Vec<i64> = comp
            .iter()
            .map(|&i| {
                let (num, den) = d[i].unwrap();
                (num * lcm / den).abs()
            })
            .collect();
        let g = scaled.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
        for (&i, s) in comp.iter().zip(scaled) {
            d[i] = Some((s / g, 1));
        }
    }
    d.into_iter().map(|x| x.unwrap().0).collect()
}

/// Positive roots of a finite-type Cartan matrix in its own simple-root
/// coordinates, generated level by level with the root-string criterion:
/// for a positive root `b` and simple `a_i`, the `a_i`-string through `b`
/// runs from `b - p a_i` to `b + q a_i` with `p - q = <b, a_i^vee>`.
///
/// Returned sorted by height, then lexicographically.
pub fn positive_roots_of(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut level: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !level.is_empty() {
        level.sort();
        for r in &level {
            all.insert(r.clone());
        }
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for r in &level {
            for i in 0..n {
                if *r == unit(i) {
                    continue;
                }
                let mut p = 0i64;
                let mut probe = r.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| m[i][j] * r[j]).sum();
                if p - pairing > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        out.append(&mut level);
        level = next.into_iter().collect();
    }
    out
}

/// Identifies the Bourbaki type of an irreducible Cartan matrix.
///
/// Returns the label and `perm` with `perm[i]` the Bourbaki index of input
/// node `i`, i.e. `bourbaki_cartan(label)[perm[i]][perm[j]] == m[i][j]`.
/// When diagram automorphisms allow several such permutations the
/// lexicographically smallest one is returned.
pub fn classify_cartan(m: &[Vec<i64>]) -> Result<(TypeLabel, Vec<usize>)> {
    validate_cartan(m)?;
    if diagram_components(m).len() != 1 {
        return Err(Error::Reducible);
    }
    let n = m.len();
    let candidates = [
        (Letter::A, n),
        (Letter::B, n),
        (Letter::C, n),
        (Letter::D, n),
        (Letter::E, n),
        (Letter::F, n),
        (Letter::G, n),
    ];
    for (letter, rank) in candidates {
        let Ok(label) = TypeLabel::new(letter, rank) else {
            continue;
        };
        if label.letter() != letter {
            // B2 / D3 aliases are covered by their normalized candidates.
            continue;
        }
        let target = bourbaki_cartan(label);
        if let Some(perm) = find_relabeling(m, &target) {
            return Ok((label, perm));
        }
    }
    Err(Error::NotFiniteType)
}

fn find_relabeling(m: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn go(
        i: usize,
        m: &[Vec<i64>],
        target: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let n = m.len();
        if i == n {
            return true;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            let ok = (0..i).all(|j| target[t][perm[j]] == m[i][j] && target[perm[j]][t] == m[j][i]);
            if !ok {
                continue;
            }
            used[t] = true;
            perm.push(t);
            if go(i + 1, m, target, perm, used) {
                return true;
            }
            perm.pop();
            used[t] = false;
        }
        false
    }
    let mut perm = Vec::with_capacity(m.len());
    let mut used = vec![false; m.len()];
    go(0, m, target, &mut perm, &mut used).then_some(perm)
}

/// Determinant by fraction-free (Bareiss) elimination with checked `i128`.
pub(crate) fn det_i128(m: &[Vec<i64>]) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .ok_or(Error::Overflow)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Root-system data of a simple type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    theta: Vec<i64>,
    root_set: BTreeSet<Vec<i64>>,
    adjugate: Vec<Vec<i64>>,
    det: i64,
}

impl RootSystem {
    /// Builds the root system of `label` by root closure from the Bourbaki
    /// Cartan matrix.
    pub fn new(label: TypeLabel) -> Result<Self> {
        let cartan = bourbaki_cartan(label);
        let positive_roots = positive_roots_of(&cartan);
        debug_assert_eq!(positive_roots.len(), label.positive_root_count());
        let theta = positive_roots
            .last()
            .cloned()
            .expect("nonempty root system");
        let mut root_set = BTreeSet::new();
        for r in &positive_roots {
            root_set.insert(r.clone());
            root_set.insert(r.iter().map(|x| -x).collect());
        }
        let n = cartan.len();
        let det = det_i128(&cartan)?;
        let mut adjugate = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<i64>> = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| (0..n).filter(|&c| c != i).map(|c| cartan[r][c]).collect())
                    .collect();
                let cof = det_i128(&minor)?;
                let signed = if (i + j) % 2 == 0 { cof } else { -cof };
                adjugate[i][j] = i64::try_from(signed).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(RootSystem {
            label,
            symmetrizer: symmetrizer(&cartan),
            cartan,
            positive_roots,
            theta,
            root_set,
            adjugate,
            det: i64::try_from(det).map_err(|_| Error::Overflow)?,
        })
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// All roots, positive and negative.
    pub fn roots(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.root_set.iter()
    }

    /// Highest root in alpha-coordinates.
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    /// Alpha-coordinates of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.theta
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_set.contains(v)
    }

    /// `det(C)`, the order of `Λ/Q`.
    pub fn cartan_det(&self) -> i64 {
        self.det
    }

    /// `det(C) * C^{-1}`.
    pub fn cartan_adjugate(&self) -> &[Vec<i64>] {
        &self.adjugate
    }

    /// `<v, alpha_i^vee>` for `v` in alpha-coordinates.
    pub fn coroot_value(&self, v: &[i64], i: usize) -> i64 {
        self.cartan[i].iter().zip(v).map(|(c, x)| c * x).sum()
    }

    /// Symmetric form `(b, g)` normalized by the minimal symmetrizer.
    pub fn inner(&self, b: &[i64], g: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if b[i] == 0 {
                continue;
            }
            let mut row = 0;
            for j in 0..n {
                row += self.cartan[i][j] * g[j];
            }
            s += b[i] * self.symmetrizer[i] * row;
        }
        s
    }

    /// `<b, g^vee> = 2 (b, g) / (g, g)` for a root `g`.
    pub fn pairing(&self, b: &[i64], g: &[i64]) -> i64 {
        let gg = self.inner(g, g);
        debug_assert!(gg > 0);
        2 * self.inner(b, g) / gg
    }

    fn check_len(&self, v: &WeightVec) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Omega-coordinates `C * a` of an alpha-coordinate vector.
    pub fn alpha_to_omega(&self, a: &[i64]) -> Result<Vec<i64>> {
        self.cartan
            .iter()
            .map(|row| {
                row.iter().zip(a).try_fold(0i64, |acc, (c, x)| {
                    c.checked_mul(*x)
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    /// Alpha-coordinates scaled by `det(C)`: returns `adj(C) * w`.
    pub fn omega_to_alpha_scaled(&self, w: &[i64]) -> Result<Vec<i64>> {
        self.adjugate
            .iter()
            .map(|row| {
                row.iter().zip(w).try_fold(0i64, |acc, (c, x)| {
                    c.checked_mul(*x)
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    /// Exact alpha-coordinates of an omega-coordinate weight; fails with
    /// [`Error::NotInRootLattice`] when they are not integers.
    pub fn omega_to_alpha(&self, w: &[i64]) -> Result<Vec<i64>> {
        let scaled = self.omega_to_alpha_scaled(w)?;
        scaled
            .into_iter()
            .map(|x| {
                if x % self.det == 0 {
                    Ok(x / self.det)
                } else {
                    Err(Error::NotInRootLattice)
                }
            })
            .collect()
    }

    /// Re-expresses `v` in `basis`.
    pub fn convert(&self, v: &WeightVec, basis: Basis) -> Result<WeightVec> {
        self.check_len(v)?;
        let coords = match (v.basis, basis) {
            (a, b) if a == b => v.coords.clone(),
            (Basis::Alpha, Basis::Omega) => self.alpha_to_omega(&v.coords)?,
            (Basis::Omega, Basis::Alpha) => self.omega_to_alpha(&v.coords)?,
            _ => unreachable!(),
        };
        Ok(WeightVec { coords, basis })
    }

    /// Matrix of pairings `M[i][j] = <g_j, g_i^vee>` of a list of ambient
    /// roots, oriented like [`RootSystem::cartan`].
    pub fn cartan_of(&self, roots: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
        for r in roots {
            if r.len() != self.rank() {
                return Err(Error::LengthMismatch {
                    expected: self.rank(),
                    found: r.len(),
                });
            }
            if !self.is_root(r) {
                return Err(Error::NotARoot(r.clone()));
            }
        }
        Ok(roots
            .iter()
            .map(|gi| roots.iter().map(|gj| self.pairing(gj, gi)).collect())
            .collect())
    }

    /// Highest root of the subsystem with the given irreducible simple system,
    /// in ambient alpha-coordinates.
    pub fn highest_root(&self, simple_roots: &[Vec<i64>]) -> Result<Vec<i64>> {
        let m = self.cartan_of(simple_roots)?;
        classify_cartan(&m)?;
        let top = positive_roots_of(&m).pop().expect("nonempty");
        Ok(combine(&top, simple_roots))
    }
}

/// `sum_k c_k * basis_k`.
pub(crate) fn combine(c: &[i64], basis: &[Vec<i64>]) -> Vec<i64> {
    let n = basis.first().map_or(0, Vec::len);
    let mut out = vec![0i64; n];
    for (ck, b) in c.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o += ck * x;
        }
    }
    out
}
