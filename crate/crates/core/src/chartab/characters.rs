//! Ordinary character values of S_n by the Murnaghan–Nakayama rule, and
//! class sizes.

use alloc::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use super::partition::{remove_rim_hooks_literal, Partition};

/// Memoized Murnaghan–Nakayama evaluator for a fixed n.
pub struct CharTable {
    n: usize,
    memo: BTreeMap<(Partition, Partition), i64>,
}

impl CharTable {
    pub fn new(n: usize) -> Self {
        CharTable { n, memo: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// χ^λ evaluated on the class of cycle type μ; |λ| = |μ| required.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        assert_eq!(lambda.n(), mu.n(), "size mismatch");
        self.value_inner(lambda, mu)
    }

    fn value_inner(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        if lambda.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // Recurse on the first (largest) part of μ.
        let t = mu.parts()[0] as usize;
        let mu_rest = Partition::new(mu.parts()[1..].to_vec());
        let mut acc = 0i64;
        for (rest, leg) in remove_rim_hooks_literal(lambda, t) {
            let sign = if leg % 2 == 0 { 1 } else { -1 };
            acc += sign * self.value_inner(&rest, &mu_rest);
        }
        self.memo.insert(key, acc);
        acc
    }

    /// χ^λ(1) via the hook length formula is avoided; the MN recursion on
    /// the identity class gives it exactly as well.
    pub fn dimension(&mut self, lambda: &Partition) -> i64 {
        let ones = Partition::new(alloc::vec![1; lambda.n()]);
        self.value(lambda, &ones)
    }
}

/// Centralizer order z_μ = Π i^{m_i} · m_i!.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    let mut by_len: BTreeMap<u8, u32> = BTreeMap::new();
    for &part in mu.parts() {
        *by_len.entry(part).or_insert(0) += 1;
    }
    let mut z = BigUint::one();
    for (len, mult) in by_len {
        for _ in 0..mult {
            z *= BigUint::from(len as u64);
        }
        for k in 1..=mult as u64 {
            z *= BigUint::from(k);
        }
    }
    z
}

pub fn factorial_big(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n as u64 {
        f *= BigUint::from(k);
    }
    f
}

/// |class of cycle type μ| = n!/z_μ.
pub fn class_size(mu: &Partition) -> BigUint {
    factorial_big(mu.n()) / centralizer_order(mu)
}

#[cfg(test)]
mod tests {
    use super::super::partition::partitions;
    use super::*;
    use crate::symgrp::{for_each_perm, Perm};
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..9 {
            let mut ct = CharTable::new(n);
            let triv = Partition::one_row(n);
            let sign = Partition::new(vec![1; n]);
            for mu in partitions(n) {
                assert_eq!(ct.value(&triv, &mu), 1);
                let expect = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(ct.value(&sign, &mu), expect, "sign at {mu:?}");
            }
        }
    }

    #[test]
    fn standard_character_is_fixed_points_minus_one() {
        // χ^{(n-1,1)}(μ) = #fixed(μ) − 1, cross-checked against the trace
        // of the natural permutation representation for n ≤ 7.
        for n in 2..=7 {
            let mut ct = CharTable::new(n);
            let std_lam = Partition::new(vec![(n - 1) as u8, 1]);
            for mu in partitions(n) {
                let fixed = mu.count_parts_eq(1) as i64;
                assert_eq!(ct.value(&std_lam, &mu), fixed - 1, "n={n} mu={mu:?}");
            }
            // brute trace over one representative per type
            let mut seen: alloc::collections::BTreeSet<Vec<u8>> = Default::default();
            for_each_perm(n, |_, p: &Perm| {
                let ty: Vec<u8> = p.cycle_type().iter().map(|&x| x as u8).collect();
                if seen.insert(ty.clone()) {
                    let trace = (0..n).filter(|&i| p.apply(i) == i).count() as i64;
                    let mu = Partition::new(ty);
                    let mut ct2 = CharTable::new(n);
                    assert_eq!(ct2.value(&std_lam, &mu), trace - 1);
                }
            });
        }
    }

    #[test]
    fn column_orthogonality_at_identity() {
        // Σ_λ χ^λ(1)² = n! for n ≤ 9.
        for n in 1..=9 {
            let mut ct = CharTable::new(n);
            let mut acc = BigUint::default();
            for lam in partitions(n) {
                let d = ct.dimension(&lam);
                assert!(d > 0);
                acc += BigUint::from((d * d) as u64);
            }
            assert_eq!(acc, factorial_big(n), "n={n}");
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=9 {
            let total: BigUint = partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial_big(n));
        }
    }
}
