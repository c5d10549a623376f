//! The Dynkin–Specht–Wever element ω_n = (1−c_2)(1−c_3)⋯(1−c_n) and its
//! symbolic group-algebra arithmetic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::gfp::GFMatrix;
use crate::symgrp::{factorial, perm_rank, Perm};

/// The backward cycle c_k = (k, k−1, …, 2, 1), extended to degree n.
pub fn backward_cycle(k: usize, n: usize) -> Perm {
    // 1-based: k ↦ k−1 ↦ … ↦ 2 ↦ 1 ↦ k; 0-based: i ↦ i−1 for 1 ≤ i < k, 0 ↦ k−1.
    let mut images: Vec<u8> = (0..n as u8).collect();
    if k >= 2 {
        images[0] = (k - 1) as u8;
        for i in 1..k {
            images[i] = (i - 1) as u8;
        }
    }
    Perm::from_images(images).expect("cycle")
}

/// Sparse group-algebra element: permutation → integer coefficient.
pub type SparseGa = BTreeMap<Perm, i64>;

/// Expand a product Π (1 − t_i) symbolically, in the given factor order.
pub fn expand_one_minus_product(factors: &[Perm], n: usize) -> SparseGa {
    let mut acc: SparseGa = BTreeMap::new();
    acc.insert(Perm::identity(n), 1);
    for t in factors {
        let mut next: SparseGa = BTreeMap::new();
        for (g, c) in &acc {
            *next.entry(g.clone()).or_insert(0) += c;
            // g·(−t): product g·t, multiplied left-to-right in the written
            // order of the group algebra.
            *next.entry(g.compose(t)).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc
}

/// ω_n as a sparse integer element of ZS_n (support ≤ 2^{n−1}).
pub fn omega_support(n: usize) -> SparseGa {
    assert!(n >= 1);
    let factors: Vec<Perm> = (2..=n).map(|k| backward_cycle(k, n)).collect();
    expand_one_minus_product(&factors, n)
}

/// ω_n^ι = (1−c_n^{-1})(1−c_{n−1}^{-1})⋯(1−c_2^{-1}).
pub fn omega_iota_support(n: usize) -> SparseGa {
    assert!(n >= 2);
    let factors: Vec<Perm> = (2..=n).rev().map(|k| backward_cycle(k, n).inverse()).collect();
    expand_one_minus_product(&factors, n)
}

/// Product of two sparse elements (convolution).
pub fn ga_mul(a: &SparseGa, b: &SparseGa) -> SparseGa {
    let mut out: SparseGa = BTreeMap::new();
    for (g, cg) in a {
        for (h, ch) in b {
            *out.entry(g.compose(h)).or_insert(0) += cg * ch;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// ω_n² = n·ω_n in F_pS_n, checked symbolically.
pub fn omega_squared_identity(p: u8, n: usize) -> bool {
    let om = omega_support(n);
    let sq = ga_mul(&om, &om);
    let pm = p as i64;
    // supports may differ by terms vanishing mod p
    let mut keys: alloc::collections::BTreeSet<Perm> = sq.keys().cloned().collect();
    keys.extend(om.keys().cloned());
    keys.into_iter().all(|g| {
        let lhs = sq.get(&g).copied().unwrap_or(0).rem_euclid(pm);
        let rhs = (om.get(&g).copied().unwrap_or(0) * n as i64).rem_euclid(pm);
        lhs == rhs
    })
}

/// A packed coordinate vector of length n! over GF(p), indexed by
/// lexicographic permutation rank.
#[derive(Clone)]
pub struct GroupAlgebraVector {
    pub p: u8,
    pub n: usize,
    pub coords: GFMatrix,
}

impl GroupAlgebraVector {
    pub fn from_sparse(p: u8, n: usize, sparse: &SparseGa) -> Self {
        let len = factorial(n) as usize;
        let mut coords = GFMatrix::zeros(p, 1, len);
        for (g, c) in sparse {
            let r = perm_rank(g).rank as usize;
            let v = (coords.get(0, r) as i64 + c).rem_euclid(p as i64) as u8;
            coords.set(0, r, v);
        }
        GroupAlgebraVector { p, n, coords }
    }

    pub fn support_size(&self) -> usize {
        self.coords.row_nonzeros(0).len()
    }
}

/// ω_n in dense group-algebra coordinates.
pub fn dsw_element(p: u8, n: usize) -> GroupAlgebraVector {
    GroupAlgebraVector::from_sparse(p, n, &omega_support(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_2_is_one_minus_swap() {
        let om = dsw_element(3, 2);
        // coords: 1 at identity (rank 0), p−1 at (1,2) (rank 1)
        assert_eq!(om.coords.get(0, 0), 1);
        assert_eq!(om.coords.get(0, 1), 2);
    }

    #[test]
    fn omega_3_support_is_four_terms() {
        // (1−c_2)(1−c_3) expands to exactly 4 distinct terms.
        let om = omega_support(3);
        assert_eq!(om.len(), 4);
        assert!(om.values().all(|&c| c == 1 || c == -1));
        // support contains the identity with coefficient +1
        assert_eq!(om.get(&Perm::identity(3)), Some(&1));
    }

    #[test]
    fn omega_support_bound() {
        for n in 2..=8 {
            assert!(omega_support(n).len() <= 1 << (n - 1), "n={n}");
        }
    }

    #[test]
    fn omega_squared_is_n_omega() {
        for p in [2u8, 3, 5] {
            for n in 2..=6 {
                assert!(omega_squared_identity(p, n), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn backward_cycle_matches_notation() {
        // c_3 = (3,2,1) sends 3→2, 2→1, 1→3.
        let c3 = backward_cycle(3, 4);
        assert_eq!(c3.to_cycles(), "(1,3,2)");
        assert_eq!(c3.apply(2), 1);
        assert_eq!(c3.apply(1), 0);
        assert_eq!(c3.apply(0), 2);
        assert_eq!(c3.apply(3), 3);
    }
}
