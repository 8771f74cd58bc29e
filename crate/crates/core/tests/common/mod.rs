//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use descent_core::intlat::IntLattice;
use descent_core::{Basis, RootSystem, TypeLabel};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::test_runner::{Config, RngSeed};

pub type Matrix = Vec<Vec<i64>>;

pub fn t(s: &str) -> TypeLabel {
    s.parse().unwrap()
}

pub fn sys(s: &str) -> RootSystem {
    RootSystem::new(t(s)).unwrap()
}

pub fn alpha_lattice(rows: &[Vec<i64>]) -> IntLattice {
    IntLattice::from_rows(rows[0].len(), Basis::Alpha, rows).unwrap()
}

pub fn diag(entries: &[i64]) -> Matrix {
    let n = entries.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { entries[i] } else { 0 })
                .collect()
        })
        .collect()
}

pub fn fixed_config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// `s_i` on alpha-coordinate columns, rebuilt from the Cartan matrix.
pub fn reflection(cartan: &Matrix, i: usize) -> Matrix {
    let n = cartan.len();
    let mut m: Matrix = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();
    for j in 0..n {
        m[i][j] -= cartan[i][j];
    }
    m
}

/// Every element of `W` as an alpha-coordinate matrix, by closure.
pub fn weyl_group(system: &RootSystem) -> Vec<Matrix> {
    let cartan: Matrix = system.cartan().to_vec();
    let n = cartan.len();
    let gens: Vec<Matrix> = (0..n).map(|i| reflection(&cartan, i)).collect();
    let id: Matrix = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();
    let mut seen = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let x = mat_mul(g, &w);
            if seen.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    seen.into_iter().collect()
}

/// `∩_{w ∈ W} wM`, over the whole enumerated group.
pub fn literal_core(group: &[Matrix], m: &IntLattice) -> IntLattice {
    let rows = m.rows_i64().unwrap();
    let n = m.ambient_rank();
    let mut acc = m.clone();
    for w in group {
        let image: Vec<Vec<i64>> = rows.iter().map(|r| mat_vec(w, r)).collect();
        acc = acc
            .intersect(&IntLattice::from_rows(n, Basis::Alpha, &image).unwrap())
            .unwrap();
    }
    acc
}

fn negate(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Smallest symmetric subset of `roots` containing `seed` and closed under
/// addition within `roots`.
pub fn closure(roots: &BTreeSet<Vec<i64>>, seed: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for s in seed {
        set.insert(s.clone());
        set.insert(negate(s));
    }
    loop {
        let items: Vec<Vec<i64>> = set.iter().cloned().collect();
        let mut grew = false;
        for a in &items {
            for b in &items {
                let c = add(a, b);
                if roots.contains(&c) && set.insert(c) {
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Root lattices of all closed full-rank subsystems, from the closures of
/// every rank-sized subset of positive roots.
pub fn brute_force_subsystem_lattices(system: &RootSystem) -> BTreeSet<IntLattice> {
    let n = system.rank();
    let roots: BTreeSet<Vec<i64>> = system.roots().cloned().collect();
    let positive = system.positive_roots().to_vec();
    let mut seen: BTreeSet<BTreeSet<Vec<i64>>> = BTreeSet::new();
    let mut out = BTreeSet::new();
    for idx in subsets(positive.len(), n) {
        let seed: Vec<Vec<i64>> = idx.iter().map(|&i| positive[i].clone()).collect();
        let closed = closure(&roots, &seed);
        if !seen.insert(closed.clone()) {
            continue;
        }
        let gens: Vec<Vec<i64>> = closed.iter().cloned().collect();
        let lattice = IntLattice::from_rows(n, Basis::Alpha, &gens).unwrap();
        if lattice.is_full_rank() {
            out.insert(lattice);
        }
    }
    out
}

/// Closure of a set of alpha-lattices under the simple reflections.
pub fn w_saturate(
    system: &RootSystem,
    seeds: impl IntoIterator<Item = IntLattice>,
) -> BTreeSet<IntLattice> {
    let cartan: Matrix = system.cartan().to_vec();
    let gens: Vec<Matrix> = (0..cartan.len()).map(|i| reflection(&cartan, i)).collect();
    let mut seen = BTreeSet::new();
    let mut frontier: Vec<IntLattice> = Vec::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            frontier.push(s);
        }
    }
    while let Some(m) = frontier.pop() {
        let rows = m.rows_i64().unwrap();
        for g in &gens {
            let image: Vec<Vec<i64>> = rows.iter().map(|r| mat_vec(g, r)).collect();
            let x = IntLattice::from_rows(m.ambient_rank(), m.basis(), &image).unwrap();
            if seen.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    seen
}

/// Determinant by cofactor expansion along the first row (sizes here are
/// at most 8).
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return i128::from(m[0][0]);
    }
    let mut total = 0i128;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, x)| *x)
                    .collect()
            })
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * i128::from(m[0][c]) * det(&minor);
    }
    total
}

/// Transposed cofactor matrix.
pub fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.len();
    let mut adj = vec![vec![0i128; n]; n];
    for r in 0..n {
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != r)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, x)| *x)
                        .collect()
                })
                .collect();
            let sign = if (r + c) % 2 == 0 { 1 } else { -1 };
            adj[c][r] = sign * det(&minor);
        }
    }
    adj
}

/// For a full-rank basis `b` (rows) of `L ⊆ Z^n`, returns `k ↦ |G[k]|` for
/// every divisor `k` of `|G|`, where `G = Z^n / L`. The coset of `x` is
/// encoded as `x · adj(b) mod |det b|`, an injective homomorphism, and the
/// group is the span of the images of the unit vectors.
pub fn quotient_torsion_counts(b: &[Vec<i64>]) -> (u64, BTreeMap<u64, u64>) {
    let d = det(b).abs();
    assert!(d > 0, "basis must be full rank");
    let adj = adjugate(b);
    let n = b.len();
    let gens: Vec<Vec<i128>> = (0..n)
        .map(|i| adj[i].iter().map(|x| x.rem_euclid(d)).collect())
        .collect();
    let zero = vec![0i128; n];
    let mut group = BTreeSet::new();
    group.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y: Vec<i128> = x
                .iter()
                .zip(g)
                .map(|(a, b)| (a + b).rem_euclid(d))
                .collect();
            if group.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let order = group.len() as u64;
    let mut counts = BTreeMap::new();
    for k in (1..=order).filter(|k| order.is_multiple_of(*k)) {
        let c = group
            .iter()
            .filter(|x| x.iter().all(|v| (v * i128::from(k)).rem_euclid(d) == 0))
            .count() as u64;
        counts.insert(k, c);
    }
    (order, counts)
}

/// `k ↦ ∏ gcd(k, d_i)` for a list of invariant factors.
pub fn counts_from_factors(factors: &[BigInt], order: u64) -> BTreeMap<u64, u64> {
    (1..=order)
        .filter(|k| order.is_multiple_of(*k))
        .map(|k| {
            let kk = BigInt::from(k);
            let c: BigInt = factors.iter().map(|d| d.gcd(&kk)).product();
            (k, u64::try_from(c).unwrap())
        })
        .collect()
}

/// Exact Weyl dimension via the invariant form: `∏ (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension_oracle(system: &RootSystem, lambda: &[i64]) -> BigInt {
    let d = system.symmetrizer();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in system.positive_roots() {
        let mut a = 0i64;
        let mut b = 0i64;
        for j in 0..root.len() {
            a += (lambda[j] + 1) * d[j] * root[j];
            b += d[j] * root[j];
        }
        num *= a;
        den *= b;
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// Whether omega-coordinates `w` lie in `Q`, by solving `C a = w` with the
/// adjugate.
pub fn in_root_lattice(system: &RootSystem, w: &[i64]) -> bool {
    let c: Matrix = system.cartan().to_vec();
    let d = det(&c);
    let adj = adjugate(&c);
    adj.iter().all(|row| {
        let s: i128 = row.iter().zip(w).map(|(x, y)| x * i128::from(*y)).sum();
        s % d == 0
    })
}
