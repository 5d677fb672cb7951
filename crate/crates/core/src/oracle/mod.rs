//! Ground truth by brute force over small finite fields.
//!
//! A [`SearchSpace`] fixes a source `P`, a number of added rows `z` and a
//! degree bound `g` for the entries of `W`. Enumerating it yields the
//! [`AchievableSet`] of structural data of every `[P; W]`, against which
//! the predicates of [`crate::completion`] are compared.

mod campaign;
mod targets;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use campaign::{
    differential_test, exists_extension, run_campaign, CampaignConfig, CampaignReport, CheckKind, Disagreement,
    SourceReport,
};
pub use targets::{
    divisor_chains, monic_polys, near_misses, order_sequences, partitions, rational_chains, split_partitions,
};

use crate::error::OracleError;
use crate::field::Field;
use crate::matrix::{PolyMatrix, RatMatrix};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::structure::{polynomial_structural_data, StructuralData};

/// Default bound on the number of candidates an exhaustive search may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// All `W` over `GF(p)` with `z` rows and entries of degree at most `degree`.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    source: PolyMatrix,
    z: usize,
    degree: usize,
    x: Option<usize>,
}

impl SearchSpace {
    pub fn new(source: PolyMatrix, z: usize, degree: usize) -> Result<Self, OracleError> {
        if source.field().order().is_none() {
            return Err(OracleError::InfiniteField(source.field().to_string()));
        }
        Ok(SearchSpace { source, z, degree, x: None })
    }

    /// Keeps only completions whose rank grows by exactly `x`.
    pub fn with_rank_increment(mut self, x: usize) -> Self {
        self.x = Some(x);
        self
    }

    pub fn source(&self) -> &PolyMatrix {
        &self.source
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn digits(&self) -> u32 {
        (self.z * self.source.cols() * (self.degree + 1)) as u32
    }

    /// `p^(z n (g + 1))`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.field().order().expect("finite field")).pow(self.digits())
    }

    /// The candidate with the given index, coefficients read as base-`p`
    /// digits, lowest first.
    pub fn candidate(&self, mut index: u64) -> PolyMatrix {
        let field = self.field();
        let p = field.order().expect("finite field");
        let n = self.source.cols();
        let entries = (0..self.z * n)
            .map(|_| {
                let coeffs = (0..=self.degree)
                    .map(|_| {
                        let d = index % p;
                        index /= p;
                        field.from_i64(d as i64)
                    })
                    .collect();
                Poly::from_coeffs(coeffs)
            })
            .collect();
        PolyMatrix::new(field, self.z, n, entries).expect("shape matches")
    }

    fn stacked_data(&self, index: u64) -> Result<Option<StructuralData>, OracleError> {
        let q = self.source.vstack(&self.candidate(index)).expect("same column count");
        let data = polynomial_structural_data(&q)?;
        if let Some(x) = self.x {
            if data.rank() != self.source.rank() + x {
                return Ok(None);
            }
        }
        Ok(Some(data))
    }
}

/// Structural data reached by some candidate, each with the smallest index
/// of a witness.
#[derive(Clone, Debug)]
pub struct AchievableSet {
    members: BTreeMap<StructuralData, u64>,
    exhaustive: bool,
    visited: u64,
}

impl AchievableSet {
    pub fn contains(&self, data: &StructuralData) -> bool {
        self.members.contains_key(data)
    }

    pub fn witness_index(&self, data: &StructuralData) -> Option<u64> {
        self.members.get(data).copied()
    }

    pub fn members(&self) -> impl Iterator<Item = &StructuralData> {
        self.members.keys()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// False for a sampled set, which may miss achievable data.
    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn visited(&self) -> u64 {
        self.visited
    }
}

fn merge(mut a: BTreeMap<StructuralData, u64>, b: BTreeMap<StructuralData, u64>) -> BTreeMap<StructuralData, u64> {
    for (k, v) in b {
        a.entry(k).and_modify(|w| *w = (*w).min(v)).or_insert(v);
    }
    a
}

fn collect(
    space: &SearchSpace,
    indices: impl ParallelIterator<Item = u64>,
) -> Result<BTreeMap<StructuralData, u64>, OracleError> {
    indices
        .map(|i| space.stacked_data(i).map(|d| d.map(|d| (d, i))))
        .try_fold(BTreeMap::new, |mut map, item| {
            if let Some((d, i)) = item? {
                map.entry(d).and_modify(|w: &mut u64| *w = (*w).min(i)).or_insert(i);
            }
            Ok::<_, OracleError>(map)
        })
        .try_reduce(BTreeMap::new, |a, b| Ok(merge(a, b)))
}

/// Visits every candidate. Fails if the space exceeds `budget`.
pub fn enumerate_completions(space: &SearchSpace, budget: u64) -> Result<AchievableSet, OracleError> {
    let size = space.size();
    if size > BigUint::from(budget) {
        return Err(OracleError::BudgetExceeded { size: size.to_string(), budget });
    }
    let total = u64::try_from(&size).expect("within budget");
    let members = collect(space, (0..total).into_par_iter())?;
    Ok(AchievableSet { members, exhaustive: true, visited: total })
}

/// Visits `samples` candidates drawn uniformly with a seeded generator.
pub fn sample_completions(space: &SearchSpace, samples: u64, seed: u64) -> Result<AchievableSet, OracleError> {
    let size = space.size();
    let bound = u64::try_from(&size).unwrap_or(u64::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices: Vec<u64> = (0..samples).map(|_| rng.gen_range(0..bound)).collect();
    let members = collect(space, indices.into_par_iter())?;
    Ok(AchievableSet { members, exhaustive: false, visited: samples })
}

/// A reproducible random matrix with entries of degree at most `max_deg`.
/// Over the rationals the coefficients are small integers.
pub fn random_instance(field: Field, m: usize, n: usize, max_deg: usize, seed: u64) -> PolyMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..m * n)
        .map(|_| {
            let coeffs = (0..=max_deg)
                .map(|_| match field.order() {
                    Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
                    None => field.from_i64(rng.gen_range(-3..=3)),
                })
                .collect();
            Poly::from_coeffs(coeffs)
        })
        .collect();
    PolyMatrix::new(field, m, n, entries).expect("shape matches")
}

/// A reproducible random rational matrix: numerators as in
/// [`random_instance`], each over a random monic denominator of degree at
/// most `max_den`.
pub fn random_rational_instance(
    field: Field,
    m: usize,
    n: usize,
    max_deg: usize,
    max_den: usize,
    seed: u64,
) -> RatMatrix {
    let nums = random_instance(field, m, n, max_deg, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let entries = nums
        .entries()
        .iter()
        .map(|num| {
            let deg = rng.gen_range(0..=max_den);
            let mut coeffs: Vec<_> = (0..deg)
                .map(|_| match field.order() {
                    Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
                    None => field.from_i64(rng.gen_range(-3..=3)),
                })
                .collect();
            coeffs.push(field.one());
            RatFunc::new(num.clone(), Poly::from_coeffs(coeffs)).expect("monic denominator")
        })
        .collect();
    RatMatrix::new(field, m, n, entries).expect("shape matches")
}

/// Every `m x n` matrix over `GF(p)` with entries of degree at most `max_deg`.
pub fn all_matrices(
    field: Field,
    m: usize,
    n: usize,
    max_deg: usize,
    budget: u64,
) -> Result<Vec<PolyMatrix>, OracleError> {
    let zero = PolyMatrix::zeros(field, 0, n);
    let space = SearchSpace::new(zero, m, max_deg)?;
    let size = space.size();
    if size > BigUint::from(budget) {
        return Err(OracleError::BudgetExceeded { size: size.to_string(), budget });
    }
    let total = u64::try_from(&size).expect("within budget");
    Ok((0..total).map(|i| space.candidate(i)).collect())
}

#[cfg(test)]
mod tests;
