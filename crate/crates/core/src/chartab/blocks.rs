//! p-blocks of S_n by the Nakayama criterion and the principal-block
//! central idempotent, computed exactly from the ordinary character table
//! and reduced mod p.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::characters::{factorial_big, CharTable};
use super::partition::{p_core, partitions, Partition};
use crate::gfp::GFScalar;

use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockError {
    /// n beyond the character-table scale guard.
    TooLarge(usize),
    /// A class coefficient failed the p-integrality check; block theory
    /// guarantees integrality, so this flags an implementation bug.
    NotPIntegral(Partition),
}

impl fmt::Display for BlockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockError::TooLarge(n) => write!(f, "character-table guard: n = {n} > 12"),
            BlockError::NotPIntegral(mu) => {
                write!(f, "class coefficient at {mu:?} is not p-integral")
            }
        }
    }
}

impl core::error::Error for BlockError {}

/// Block distribution of the partitions of n plus the principal-block
/// idempotent as class-sum coefficients mod p.
#[derive(Clone, Debug)]
pub struct BlockData {
    pub p: u8,
    pub n: usize,
    /// Block label (= p-core) of each partition of n.
    pub block_of_partition: BTreeMap<Partition, Partition>,
    /// Coefficient of the class sum of each cycle type in ε_n, reduced mod p.
    pub principal_class_coeffs: BTreeMap<Partition, GFScalar>,
}

impl BlockData {
    /// The label of the principal block: the p-core of (n).
    pub fn principal_core(&self) -> Partition {
        p_core(&Partition::one_row(self.n), self.p)
    }

    pub fn is_principal(&self, lambda: &Partition) -> bool {
        self.block_of_partition.get(lambda) == Some(&self.principal_core())
    }

    /// Partitions labelling ordinary characters in the principal block.
    pub fn principal_partitions(&self) -> Vec<Partition> {
        let core = self.principal_core();
        self.block_of_partition
            .iter()
            .filter(|(_, c)| **c == core)
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// p-regular partitions in the principal block: the labels of the
    /// simple modules of the block.
    pub fn principal_simple_labels(&self) -> Vec<Partition> {
        self.principal_partitions()
            .into_iter()
            .filter(|l| l.is_p_regular(self.p))
            .collect()
    }

    /// Nonzero idempotent coefficients as (cycle type, residue).
    pub fn nonzero_coeffs(&self) -> Vec<(Partition, u8)> {
        self.principal_class_coeffs
            .iter()
            .filter(|(_, c)| c.value() != 0)
            .map(|(m, c)| (m.clone(), c.value()))
            .collect()
    }
}

/// Compute the block data for (p, n): block labels by the Nakayama
/// criterion (equal p-cores) and the exact class-sum coefficients
/// c_μ = (1/n!)·Σ_{λ in B₀} χ^λ(1)·χ^λ(μ) of ε_n, verified p-integral and
/// reduced mod p.
pub fn principal_block_idempotent(p: u8, n: usize) -> Result<BlockData, BlockError> {
    if n > 12 {
        return Err(BlockError::TooLarge(n));
    }
    let lams = partitions(n);
    let mut ct = CharTable::new(n);
    let core0 = p_core(&Partition::one_row(n), p);

    let mut block_of_partition = BTreeMap::new();
    let mut principal: Vec<(Partition, i64)> = Vec::new();
    for lam in &lams {
        let core = p_core(lam, p);
        if core == core0 {
            let dim = ct.dimension(lam);
            principal.push((lam.clone(), dim));
        }
        block_of_partition.insert(lam.clone(), core);
    }

    let nfact = BigInt::from(factorial_big(n));
    let mut principal_class_coeffs = BTreeMap::new();
    for mu in &lams {
        // Classes of S_n are real, so χ(g^{-1}) = χ(g).
        let mut num = BigInt::zero();
        for (lam, dim) in &principal {
            num += BigInt::from(*dim) * BigInt::from(ct.value(lam, mu));
        }
        // c_μ = num / n!, must be p-integral.
        let g = num.gcd(&nfact);
        let den = &nfact / &g;
        let num_red = &num / &g;
        if den.magnitude() % BigUint::from(p as u64) == BigUint::zero() {
            return Err(BlockError::NotPIntegral(mu.clone()));
        }
        // Reduce mod p: num_red · den^{-1}.
        let pm = BigInt::from(p as i64);
        let num_mod = ((num_red % &pm) + &pm) % &pm;
        let den_mod = ((den % &pm) + &pm) % &pm;
        let num_u = num_mod.to_u64_digits().1.first().copied().unwrap_or(0) as u8;
        let den_u = den_mod.to_u64_digits().1.first().copied().unwrap_or(0) as u8;
        let den_inv = crate::gfp::GFScalar::new(p, den_u as i64).unwrap().inv();
        let c = GFScalar::new(p, num_u as i64).unwrap().mul(&den_inv);
        principal_class_coeffs.insert(mu.clone(), c);
    }
    Ok(BlockData {
        p,
        n,
        block_of_partition,
        principal_class_coeffs,
    })
}

/// Number of simple modules in the principal block: p-regular partitions
/// with the principal p-core.
pub fn count_principal_simples(p: u8, n: usize) -> usize {
    let core0 = p_core(&Partition::one_row(n), p);
    partitions(n)
        .into_iter()
        .filter(|l| l.is_p_regular(p) && p_core(l, p) == core0)
        .count()
}
