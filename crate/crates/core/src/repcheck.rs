//! Weight multiplicities of irreducible representations at small rank, by
//! Freudenthal's recursion.
//!
//! ```text
//! ((λ+ρ, λ+ρ) - (μ+ρ, μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) (μ+kα, α)
//! ```
//!
//! evaluated on dominant weights only; every other multiplicity is read off
//! the dominant conjugate. Used as an oracle for the zero-weight criterion:
//! `V(λ)^T ≠ 0` iff `λ ∈ Q`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, TypeLabel, WeightVec};
use crate::weylcore::ReflectionAction;

pub const MAX_MULTIPLICITY_RANK: usize = 4;
pub const DIMENSION_GUARD: u64 = 1_000_000;

/// Multiplicities of the dominant weights of `V(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub label: TypeLabel,
    /// Highest weight, omega-coordinates.
    pub highest_weight: Vec<i64>,
    pub dimension: u64,
    dominant: BTreeMap<Vec<i64>, u64>,
}

/// Scaled symmetric form on omega-coordinate vectors: `det(C) (μ, ν)`.
struct Form<'a> {
    system: &'a RootSystem,
}

impl Form<'_> {
    fn eval(&self, mu: &[i64], nu: &[i64]) -> Result<i128> {
        let a = self.system.omega_to_alpha_scaled(mu)?;
        let d = self.system.symmetrizer();
        let mut s: i128 = 0;
        for i in 0..a.len() {
            let term = (a[i] as i128)
                .checked_mul(d[i] as i128)
                .and_then(|x| x.checked_mul(nu[i] as i128))
                .ok_or(Error::Overflow)?;
            s = s.checked_add(term).ok_or(Error::Overflow)?;
        }
        Ok(s)
    }
}

fn check_input(system: &RootSystem, lambda: &[i64]) -> Result<()> {
    if system.rank() > MAX_MULTIPLICITY_RANK {
        return Err(Error::RankUnsupported {
            rank: system.rank(),
            max: MAX_MULTIPLICITY_RANK,
        });
    }
    if lambda.len() != system.rank() {
        return Err(Error::LengthMismatch {
            expected: system.rank(),
            found: lambda.len(),
        });
    }
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant);
    }
    Ok(())
}

fn positive_roots_omega(system: &RootSystem) -> Result<Vec<Vec<i64>>> {
    system
        .positive_roots()
        .iter()
        .map(|r| system.alpha_to_omega(r))
        .collect()
}

/// `dim V(λ) = Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(system: &RootSystem, lambda: &[i64]) -> Result<BigInt> {
    if lambda.len() != system.rank() {
        return Err(Error::LengthMismatch {
            expected: system.rank(),
            found: lambda.len(),
        });
    }
    let form = Form { system };
    let rho = alloc::vec![1i64; system.rank()];
    let shifted: Vec<i64> = lambda
        .iter()
        .map(|x| x.checked_add(1).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for alpha in positive_roots_omega(system)? {
        num *= BigInt::from(form.eval(&shifted, &alpha)?);
        den *= BigInt::from(form.eval(&rho, &alpha)?);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Dominant conjugate of an omega-coordinate weight.
fn dominant_conjugate(system: &RootSystem, mu: &[i64]) -> Vec<i64> {
    let c = system.cartan();
    let mut v = mu.to_vec();
    while let Some(i) = v.iter().position(|&x| x < 0) {
        let li = v[i];
        for (k, x) in v.iter_mut().enumerate() {
            *x -= li * c[k][i];
        }
    }
    v
}

impl WeightSystem {
    pub fn new(label: TypeLabel, lambda: &[i64]) -> Result<Self> {
        let system = RootSystem::new(label)?;
        check_input(&system, lambda)?;
        let dim = weyl_dimension(&system, lambda)?;
        let dimension = match dim.to_u64() {
            Some(d) if d <= DIMENSION_GUARD => d,
            _ => {
                return Err(Error::DimensionGuard {
                    dim: dim.to_string(),
                    guard: DIMENSION_GUARD,
                })
            }
        };
        let form = Form { system: &system };
        let roots = positive_roots_omega(&system)?;

        // Dominant weights below λ; covering relations among them are
        // differences of positive roots, so this reaches all of them.
        let mut dominant_set: BTreeSet<Vec<i64>> = BTreeSet::new();
        dominant_set.insert(lambda.to_vec());
        let mut queue = VecDeque::from([lambda.to_vec()]);
        while let Some(nu) = queue.pop_front() {
            for alpha in &roots {
                let mu: Vec<i64> = nu.iter().zip(alpha).map(|(a, b)| a - b).collect();
                if mu.iter().all(|&x| x >= 0) && dominant_set.insert(mu.clone()) {
                    queue.push_back(mu);
                }
            }
        }

        // Process in order of depth ht(λ - μ).
        let det = system.cartan_det();
        let depth = |mu: &Vec<i64>| -> Result<i64> {
            let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
            Ok(system.omega_to_alpha_scaled(&diff)?.iter().sum::<i64>() / det)
        };
        let mut ordered: Vec<(i64, Vec<i64>)> = dominant_set
            .iter()
            .map(|mu| Ok((depth(mu)?, mu.clone())))
            .collect::<Result<_>>()?;
        ordered.sort();

        let plus_rho = |v: &[i64]| v.iter().map(|x| x + 1).collect::<Vec<i64>>();
        let top = form.eval(&plus_rho(lambda), &plus_rho(lambda))?;
        let mut dominant: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (_, mu) in ordered {
            if mu == lambda {
                dominant.insert(mu, 1);
                continue;
            }
            let mut sum: i128 = 0;
            for alpha in &roots {
                let mut shifted = mu.clone();
                loop {
                    for (x, a) in shifted.iter_mut().zip(alpha) {
                        *x += a;
                    }
                    let key = dominant_conjugate(&system, &shifted);
                    let Some(&m) = dominant.get(&key) else {
                        if dominant_set.contains(&key) {
                            unreachable!("higher weight processed later than a lower one");
                        }
                        break;
                    };
                    let term = (m as i128)
                        .checked_mul(form.eval(&shifted, alpha)?)
                        .ok_or(Error::Overflow)?;
                    sum = sum.checked_add(term).ok_or(Error::Overflow)?;
                }
            }
            let denom = top - form.eval(&plus_rho(&mu), &plus_rho(&mu))?;
            let numer = sum.checked_mul(2).ok_or(Error::Overflow)?;
            if denom <= 0 || numer % denom != 0 {
                return Err(Error::NonIntegralMultiplicity);
            }
            let m = u64::try_from(numer / denom).map_err(|_| Error::Overflow)?;
            dominant.insert(mu, m);
        }
        Ok(WeightSystem {
            label,
            highest_weight: lambda.to_vec(),
            dimension,
            dominant,
        })
    }

    /// Multiplicities of the dominant weights.
    pub fn dominant_multiplicities(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.dominant
    }

    /// `dim V(λ)_μ` for any omega-coordinate `μ`.
    pub fn multiplicity(&self, mu: &[i64]) -> Result<u64> {
        let system = RootSystem::new(self.label)?;
        if mu.len() != system.rank() {
            return Err(Error::LengthMismatch {
                expected: system.rank(),
                found: mu.len(),
            });
        }
        let key = dominant_conjugate(&system, mu);
        Ok(self.dominant.get(&key).copied().unwrap_or(0))
    }

    /// Every weight with its multiplicity, by expanding dominant W-orbits.
    pub fn all_multiplicities(&self) -> Result<BTreeMap<Vec<i64>, u64>> {
        let action = ReflectionAction::new(RootSystem::new(self.label)?);
        let mut out = BTreeMap::new();
        for (mu, &m) in &self.dominant {
            let cap = usize::try_from(self.dimension).unwrap_or(usize::MAX).max(1);
            for w in action.orbit(&WeightVec::omega(mu.clone()), cap)? {
                out.insert(w.coords, m);
            }
        }
        Ok(out)
    }
}

/// `dim V(λ)_μ`, with `λ` dominant and both in omega-coordinates.
pub fn weight_multiplicity(label: TypeLabel, lambda: &[i64], mu: &[i64]) -> Result<u64> {
    WeightSystem::new(label, lambda)?.multiplicity(mu)
}

/// Whether the zero-weight space of `V(λ)` is nonzero.
pub fn zero_weight_nonzero(label: TypeLabel, lambda: &[i64]) -> Result<bool> {
    let zero = alloc::vec![0i64; lambda.len()];
    Ok(weight_multiplicity(label, lambda, &zero)? > 0)
}
