//! Symmetric-group characters and Kronecker coefficients.
//!
//! Characters are computed by the Murnaghan–Nakayama recursion over border
//! strips, encoded with beta-sets (first-column hook lengths): removing a
//! strip of length k subtracts k from one beta number, and the strip height
//! is the number of beta numbers jumped over. Kronecker coefficients are
//! class-weighted triple inner products of characters, divided by n! last
//! with an exact-divisibility check.

use std::sync::Arc;

use crate::cache::{self, tables};
use crate::error::{Error, Result};
use crate::lr::SchurExpansion;
use crate::partitions::{partitions_of, Partition};

/// A conjugacy class of the symmetric group: a cycle type together with the
/// number of permutations of that type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: i64,
}

pub(crate) fn factorial(n: u32) -> Result<i64> {
    let mut out: i64 = 1;
    for k in 2..=i64::from(n) {
        out = out.checked_mul(k).ok_or(Error::Overflow)?;
    }
    Ok(out)
}

/// Centralizer order of a permutation of the given cycle type:
/// `z = prod_k k^{m_k} m_k!` with `m_k` the multiplicity of part k.
fn centralizer_order(cycle_type: &Partition) -> Result<i64> {
    let mut z: i64 = 1;
    let parts = cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let mult = (j - i) as u32;
        for _ in 0..mult {
            z = z.checked_mul(i64::from(parts[i])).ok_or(Error::Overflow)?;
        }
        z = z.checked_mul(factorial(mult)?).ok_or(Error::Overflow)?;
        i = j;
    }
    Ok(z)
}

/// One class per partition of n, with class sizes summing to n!.
pub fn conjugacy_classes(n: u32) -> Result<Vec<ConjugacyClass>> {
    let order = factorial(n)?;
    partitions_of(n)
        .into_iter()
        .map(|cycle_type| {
            let z = centralizer_order(&cycle_type)?;
            debug_assert_eq!(order % z, 0);
            Ok(ConjugacyClass {
                size: order / z,
                cycle_type,
            })
        })
        .collect()
}

fn beta_set(shape: &Partition) -> Vec<i64> {
    let r = shape.len();
    (0..r)
        .map(|j| i64::from(shape.parts()[j]) + (r - 1 - j) as i64)
        .collect()
}

fn shape_from_betas(mut betas: Vec<i64>) -> Partition {
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let r = betas.len();
    let parts: Vec<u32> = betas
        .iter()
        .enumerate()
        .map(|(j, &b)| (b - (r - 1 - j) as i64) as u32)
        .collect();
    Partition::new(parts).expect("beta set reconstruction")
}

fn character_inner(shape: &Partition, cycle_type: &Partition) -> Result<i64> {
    if shape.is_empty() {
        return Ok(1);
    }
    let key = (shape.clone(), cycle_type.clone());
    cache::get_or_try_insert(&tables().character, key, || {
        // remove a border strip for the largest cycle first
        let strip = i64::from(cycle_type.parts()[0]);
        let rest = cycle_type.strip_first();
        let betas = beta_set(shape);
        let mut total: i64 = 0;
        for (idx, &b) in betas.iter().enumerate() {
            let target = b - strip;
            if target < 0 || betas.contains(&target) {
                continue;
            }
            let height = betas.iter().filter(|&&x| target < x && x < b).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut next = betas.clone();
            next[idx] = target;
            let sub = character_inner(&shape_from_betas(next), &rest)?;
            total = total.checked_add(sign * sub).ok_or(Error::Overflow)?;
        }
        Ok(total)
    })
}

/// Irreducible character value `chi_lambda(rho)`.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    character_inner(lambda, rho)
}

/// Kronecker coefficient `g_{lambda,mu}^{nu}`; 0 when the sizes differ.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Ok(0);
    }
    let key = cache::sorted_triple(lambda, mu, nu);
    cache::get_or_try_insert(&tables().kron_triple, key.clone(), || {
        let (a, b, c) = &key;
        let mut sum: i64 = 0;
        for class in conjugacy_classes(n)? {
            let xa = character(a, &class.cycle_type)?;
            let xb = character(b, &class.cycle_type)?;
            let xc = character(c, &class.cycle_type)?;
            let term = xa
                .checked_mul(xb)
                .and_then(|t| t.checked_mul(xc))
                .and_then(|t| t.checked_mul(class.size))
                .ok_or(Error::Overflow)?;
            sum = sum.checked_add(term).ok_or(Error::Overflow)?;
        }
        let order = factorial(n)?;
        assert_eq!(sum % order, 0, "character inner product must be integral");
        Ok(sum / order)
    })
}

/// Full Schur expansion of the Kronecker product `s_lambda * s_mu`.
pub fn kronecker_product(lambda: &Partition, mu: &Partition) -> Result<Arc<SchurExpansion>> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: mu.size(),
        });
    }
    let key = cache::sorted_pair(lambda, mu);
    cache::get_or_try_insert(&tables().kron_product, key, || {
        let mut out = SchurExpansion::new(n);
        for nu in partitions_of(n) {
            let g = kronecker_coefficient(lambda, mu, &nu)?;
            if g != 0 {
                out.add_term(nu, g)?;
            }
        }
        Ok(Arc::new(out))
    })
}

/// Reduced (stable) Kronecker coefficient for reduced data `lambda, mu, nu`:
/// the eventual value of `g_{lambda[n],mu[n]}^{nu[n]}`, evaluated at the
/// stabilization point n = |lambda|+|mu|+lambda_1+mu_1, raised just enough
/// for all three embeddings to be partitions.
pub fn reduced_kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let stable_at = lambda.size() + mu.size() + lambda.first() + mu.first();
    let n = stable_at
        .max(lambda.size() + lambda.first())
        .max(mu.size() + mu.first())
        .max(nu.size() + nu.first());
    let n = i64::from(n);
    let l = lambda.embed(n).to_partition().expect("valid embedding");
    let m = mu.embed(n).to_partition().expect("valid embedding");
    let v = nu.embed(n).to_partition().expect("valid embedding");
    kronecker_coefficient(&l, &m, &v)
}
