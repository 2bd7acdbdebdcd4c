//! Independent ground truth: Kronecker coefficients computed from
//! symmetric-group characters via the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::contraction::ExactScalar;
use crate::partition::{enumerate_partitions, Partition};
use crate::{Error, Result};

/// Default cap (in boxes) for [`CharacterCache::kronecker`] and
/// [`CharacterCache::tensor_square_decomposition`].
pub const DEFAULT_ORACLE_CAP: u64 = 25;

/// A partition read as the cycle lengths of a symmetric-group conjugacy
/// class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        Self(partition)
    }

    /// The identity class of the symmetric group on `d` letters.
    pub fn identity(d: u64) -> Self {
        Self(Partition::column(d as u32))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.size()
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.0.rows()
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        Self(p)
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn factorial(d: u64) -> ExactScalar {
    let mut out = BigInt::one();
    for k in 2..=d {
        out *= k;
    }
    out
}

/// Size of the conjugacy class: d!/z with z = Π ℓ^m · m! over the distinct
/// cycle lengths ℓ with multiplicity m.
pub fn class_size(ct: &CycleType) -> ExactScalar {
    let mut z = BigInt::one();
    let parts = ct.partition().parts();
    let mut i = 0;
    while i < parts.len() {
        let length = parts[i];
        let mut multiplicity = 0u64;
        while i < parts.len() && parts[i] == length {
            multiplicity += 1;
            i += 1;
        }
        for _ in 0..multiplicity {
            z *= u64::from(length);
        }
        z *= factorial(multiplicity);
    }
    let total = factorial(ct.degree());
    debug_assert!((&total % &z).is_zero());
    total / z
}

/// Memoized character values. Lookups after insertion are deterministic;
/// concurrent readers share the map and duplicated computations are harmless
/// because every entry is a pure function of its key.
#[derive(Default)]
pub struct CharacterCache {
    memo: RwLock<HashMap<(Partition, Vec<u32>), ExactScalar>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The irreducible character χ^λ on the class `ct`.
    pub fn character(&self, lambda: &Partition, ct: &CycleType) -> Result<ExactScalar> {
        if lambda.size() != ct.degree() {
            return Err(Error::SizeMismatch {
                left: lambda.size(),
                right: ct.degree(),
            });
        }
        Ok(self.character_rec(lambda.clone(), ct.partition().parts()))
    }

    /// χ^λ at the identity class, i.e. the dimension of the irreducible.
    pub fn dimension(&self, lambda: &Partition) -> Result<ExactScalar> {
        self.character(lambda, &CycleType::identity(lambda.size()))
    }

    /// Murnaghan–Nakayama: remove a border strip for the largest remaining
    /// cycle and recurse. Strips are manipulated through the beta-number set
    /// {λ_i + (m − i)}: removing a strip of length ℓ moves one beta number
    /// down by ℓ, and the sign counts the beta numbers jumped over.
    fn character_rec(&self, shape: Partition, cycles: &[u32]) -> ExactScalar {
        let Some((&length, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        let key = (shape, cycles.to_vec());
        if let Some(hit) = self
            .memo
            .read()
            .expect("character cache poisoned")
            .get(&key)
        {
            return hit.clone();
        }
        let shape = &key.0;
        let m = shape.rows();
        let betas: Vec<u64> = (0..m)
            .map(|i| u64::from(shape.part(i)) + (m - 1 - i) as u64)
            .collect();
        let mut total = BigInt::zero();
        for i in 0..m {
            let Some(lowered) = betas[i].checked_sub(u64::from(length)) else {
                continue;
            };
            if betas.contains(&lowered) {
                continue;
            }
            let jumped = betas
                .iter()
                .filter(|&&b| lowered < b && b < betas[i])
                .count();
            let mut new_betas = betas.clone();
            new_betas[i] = lowered;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<u32> = new_betas
                .iter()
                .enumerate()
                .map(|(j, &b)| (b - (m - 1 - j) as u64) as u32)
                .collect();
            let sub_shape = Partition::new(parts).expect("strip removal yields a partition");
            let sub_value = self.character_rec(sub_shape, rest);
            if jumped % 2 == 0 {
                total += sub_value;
            } else {
                total -= sub_value;
            }
        }
        self.memo
            .write()
            .expect("character cache poisoned")
            .insert(key, total.clone());
        total
    }

    /// κ(λ, μ, ν) = (1/d!) Σ over classes of |class|·χ^λ·χ^μ·χ^ν. The class
    /// sum must divide exactly by d! and be nonnegative; anything else
    /// signals a character bug and surfaces as an error.
    pub fn kronecker(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<ExactScalar> {
        self.kronecker_with_cap(lambda, mu, nu, DEFAULT_ORACLE_CAP)
    }

    pub fn kronecker_with_cap(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        cap: u64,
    ) -> Result<ExactScalar> {
        let d = lambda.size();
        for other in [mu, nu] {
            if other.size() != d {
                return Err(Error::SizeMismatch {
                    left: d,
                    right: other.size(),
                });
            }
        }
        if d > cap {
            return Err(Error::CapExceeded {
                what: "kronecker oracle box count",
                value: d,
                cap,
            });
        }
        let mut sum = BigInt::zero();
        for class in enumerate_partitions(d)? {
            let ct = CycleType::new(class);
            let term = class_size(&ct)
                * self.character(lambda, &ct)?
                * self.character(mu, &ct)?
                * self.character(nu, &ct)?;
            sum += term;
        }
        let order = factorial(d);
        if !(&sum % &order).is_zero() {
            return Err(Error::InternalInconsistency(format!(
                "class sum for ({lambda}|{mu}|{nu}) is not divisible by {d}!"
            )));
        }
        let value = sum / order;
        if value.is_negative() {
            return Err(Error::InternalInconsistency(format!(
                "negative multiplicity for ({lambda}|{mu}|{nu})"
            )));
        }
        Ok(value)
    }

    /// Multiplicity of every ν of d boxes inside the tensor square of ρ,
    /// zeros included. Evaluated in parallel across ν; the result map is
    /// independent of the scheduling.
    pub fn tensor_square_decomposition(
        &self,
        rho: &Partition,
    ) -> Result<std::collections::BTreeMap<Partition, ExactScalar>> {
        self.tensor_square_decomposition_with_cap(rho, DEFAULT_ORACLE_CAP)
    }

    pub fn tensor_square_decomposition_with_cap(
        &self,
        rho: &Partition,
        cap: u64,
    ) -> Result<std::collections::BTreeMap<Partition, ExactScalar>> {
        let d = rho.size();
        if d > cap {
            return Err(Error::CapExceeded {
                what: "tensor square decomposition box count",
                value: d,
                cap,
            });
        }
        let all = enumerate_partitions(d)?;
        let entries: Result<Vec<(Partition, ExactScalar)>> = all
            .into_par_iter()
            .map(|nu| {
                let value = self.kronecker_with_cap(rho, rho, &nu, cap)?;
                Ok((nu, value))
            })
            .collect();
        Ok(entries?.into_iter().collect())
    }
}
