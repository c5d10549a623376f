//! Construction of the Lie module Lie_p(n) = F_pS_n·ω_n, its
//! principal-block component, and the dual variant F_pS_n·ω_n^ι.
//!
//! Two independent backends: group-algebra coordinates (translate spinning
//! through the streamed echelon) and the multilinear-bracket rewriting.
//! Both produce the (n−1)!-dimensional module on the basis
//! {π·c_n·ω_n | π ∈ S_{n−1}}.

mod blocksimples;
mod dsw;
mod ga;
mod straighten;

pub use blocksimples::{
    epsilon_on_permutation_module, principal_block_labels, principal_block_simples, tabloids,
    young_permutation_module,
};
pub use dsw::{
    backward_cycle, dsw_element, ga_mul, omega_iota_support, omega_squared_identity,
    omega_support, GroupAlgebraVector, SparseGa,
};
pub use ga::{build_translates, pbl_seed, sym_gens, TranslateBuild};
pub use straighten::{act_on_basis_bracket, apply_omega, generator_matrix, omega_action_identity};

use alloc::vec::Vec;

use crate::chartab::BlockData;
use crate::gfp::GfError;
use crate::modrep::Module;
use crate::symgrp::{factorial, perm_rank, perm_unrank, Perm};

use core::fmt;

#[derive(Clone, Debug)]
pub enum LieError {
    /// The spanning set of the unprojected Lie module failed to reach
    /// rank (n−1)!: an internal indexing bug, never expected.
    RankDeficient { expected: usize, got: usize },
    /// Workspace estimate exceeds the memory budget; pass a larger one.
    MemoryBudget { needed: u64, budget: u64 },
    /// A size guard (straightening n ≤ 10, dual variant n ≤ 7).
    GuardExceeded(&'static str),
    Gf(GfError),
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::RankDeficient { expected, got } => {
                write!(f, "spanning set rank {got}, expected {expected}")
            }
            LieError::MemoryBudget { needed, budget } => {
                write!(f, "build needs ~{needed} bytes, budget {budget}")
            }
            LieError::GuardExceeded(s) => write!(f, "size guard exceeded: {s}"),
            LieError::Gf(e) => write!(f, "linear algebra: {e}"),
        }
    }
}

impl core::error::Error for LieError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieBackend {
    GroupAlgebra,
    Straightening,
}

/// A constructed Lie module: the underlying representation plus the basis
/// bookkeeping (which spanning translates became basis rows).
pub struct LieModule {
    pub module: Module,
    /// π with basis row i = π_i·c_n·ω_n (times ε_n when projected).
    pub basis_perms: Vec<Perm>,
    pub backend: LieBackend,
    pub block_projected: bool,
}

impl LieModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// Default memory budget: 4 GiB.
pub const DEFAULT_BUDGET: u64 = 4 << 30;

/// The standard generator matrices target: (1,…,n) and (1,2), plus any
/// extra permutations (Sylow generators) whose action should be computed
/// at build time.
pub fn output_generators(n: usize, extra: &[Perm]) -> Vec<Perm> {
    let mut gens = sym_gens(n, n);
    for e in extra {
        if !gens.contains(e) {
            gens.push(e.clone());
        }
    }
    gens
}

/// Build Lie_p(n) (or its principal-block component when `block` is given)
/// in group-algebra coordinates.
pub fn build_lie(
    p: u8,
    n: usize,
    backend: LieBackend,
    block: Option<&BlockData>,
    extra_gens: &[Perm],
    budget: u64,
) -> Result<LieModule, LieError> {
    assert!(n >= 2);
    match backend {
        LieBackend::Straightening => {
            if block.is_some() {
                return Err(LieError::GuardExceeded(
                    "straightening backend does not project to blocks",
                ));
            }
            build_lie_straightening(p, n, extra_gens)
        }
        LieBackend::GroupAlgebra => {
            let out_gens = output_generators(n, extra_gens);
            let cand = sym_gens(n - 1, n);
            let cap = factorial(n - 1) as usize;
            let seed = match block {
                Some(bd) => {
                    assert_eq!(bd.p, p);
                    assert_eq!(bd.n, n);
                    pbl_seed(p, n, bd)
                }
                None => {
                    let cn = backward_cycle(n, n);
                    let shifted: SparseGa = omega_support(n)
                        .into_iter()
                        .map(|(g, c)| (cn.compose(&g), c))
                        .collect();
                    GroupAlgebraVector::from_sparse(p, n, &shifted)
                }
            };
            let built = build_translates(p, n, &seed, &cand, &out_gens, cap, budget)?;
            if block.is_none() && built.module.dim() != cap {
                return Err(LieError::RankDeficient {
                    expected: cap,
                    got: built.module.dim(),
                });
            }
            let mut lm = LieModule {
                module: built.module,
                basis_perms: built.kept_perms,
                backend: LieBackend::GroupAlgebra,
                block_projected: block.is_some(),
            };
            if block.is_none() {
                reorder_to_rank_order(&mut lm);
            }
            Ok(lm)
        }
    }
}

/// The straightening backend: basis rows in perm-rank order of S_{n−1},
/// action matrices straight from the bracket rewriting.
pub fn build_lie_straightening(p: u8, n: usize, extra_gens: &[Perm]) -> Result<LieModule, LieError> {
    if n > 10 {
        return Err(LieError::GuardExceeded("straightening guard n ≤ 10"));
    }
    let out_gens = output_generators(n, extra_gens);
    let mats: Vec<_> = out_gens.iter().map(|g| generator_matrix(p, n, g)).collect();
    let module = Module::new(p, n, out_gens, mats);
    let dim = factorial(n - 1);
    let basis_perms: Vec<Perm> = (0..dim)
        .map(|r| perm_unrank(n - 1, r).expect("in range").extended(n))
        .collect();
    Ok(LieModule {
        module,
        basis_perms,
        backend: LieBackend::Straightening,
        block_projected: false,
    })
}

/// The dual-variant module F_pS_n·ω_n^ι, built by spinning ω_n^ι in
/// group-algebra coordinates (guard n ≤ 7).
pub fn dual_variant(p: u8, n: usize, budget: u64) -> Result<Module, LieError> {
    if n > 7 {
        return Err(LieError::GuardExceeded("dual variant guard n ≤ 7"));
    }
    let seed = GroupAlgebraVector::from_sparse(p, n, &omega_iota_support(n));
    let cand = sym_gens(n, n);
    let out = sym_gens(n, n);
    let cap = factorial(n - 1) as usize;
    let built = build_translates(p, n, &seed, &cand, &out, cap, budget)?;
    Ok(built.module)
}

/// Permute the basis rows into perm-rank order (full Lie module only,
/// where the kept translates are all of S_{n−1}).
fn reorder_to_rank_order(lm: &mut LieModule) {
    let dim = lm.module.dim();
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&i| perm_rank(&lm.basis_perms[i]).rank);
    let inv: Vec<usize> = {
        let mut v = alloc::vec![0usize; dim];
        for (new, &old) in order.iter().enumerate() {
            v[old] = new;
        }
        v
    };
    let p = lm.module.p();
    let mats: Vec<_> = lm
        .module
        .mats()
        .iter()
        .map(|m| {
            let mut out = crate::gfp::GFMatrix::zeros(p, dim, dim);
            for a in 0..dim {
                for (b, c) in m.row_nonzeros(a) {
                    out.set(inv[a], inv[b], c);
                }
            }
            out
        })
        .collect();
    let gens = lm.module.gens().to_vec();
    let degree = lm.module.degree();
    lm.module = Module::new(p, degree, gens, mats);
    lm.basis_perms = order.iter().map(|&i| lm.basis_perms[i].clone()).collect();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::is_isomorphic;
    use crate::rng::SplitMix64;

    #[test]
    fn dims_are_n_minus_one_factorial_both_backends() {
        for p in [2u8, 3, 5] {
            for n in 2..=5usize {
                let ga = build_lie(p, n, LieBackend::GroupAlgebra, None, &[], DEFAULT_BUDGET).unwrap();
                let st = build_lie_straightening(p, n, &[]).unwrap();
                assert_eq!(ga.dim(), factorial(n - 1) as usize);
                assert_eq!(st.dim(), factorial(n - 1) as usize);
            }
        }
    }

    #[test]
    fn backends_agree_exactly_on_the_standard_basis() {
        // The bracket basis corresponds term-by-term to the translate
        // basis, so the two backends must produce identical matrices.
        for p in [2u8, 3] {
            for n in 2..=5usize {
                let ga = build_lie(p, n, LieBackend::GroupAlgebra, None, &[], DEFAULT_BUDGET).unwrap();
                let st = build_lie_straightening(p, n, &[]).unwrap();
                assert_eq!(ga.module.gens(), st.module.gens());
                for (a, b) in ga.module.mats().iter().zip(st.module.mats()) {
                    assert_eq!(a, b, "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn cross_backend_isomorphism() {
        let mut rng = SplitMix64::new(0);
        for n in 3..=5usize {
            let ga = build_lie(2, n, LieBackend::GroupAlgebra, None, &[], DEFAULT_BUDGET).unwrap();
            let st = build_lie_straightening(2, n, &[]).unwrap();
            assert!(is_isomorphic(&ga.module, &st.module, &mut rng).is_some());
        }
    }

    #[test]
    fn dual_variant_dim_and_duality() {
        let mut rng = SplitMix64::new(1);
        for (p, n) in [(2u8, 3usize), (3, 4), (2, 4)] {
            let dv = dual_variant(p, n, DEFAULT_BUDGET).unwrap();
            assert_eq!(dv.dim(), factorial(n - 1) as usize);
            let lie = build_lie(p, n, LieBackend::GroupAlgebra, None, &[], DEFAULT_BUDGET).unwrap();
            let dual = lie.module.dual();
            assert!(is_isomorphic(&dv, &dual, &mut rng).is_some(), "p={p} n={n}");
        }
    }

    #[test]
    fn restriction_to_s_n_minus_one_is_regular() {
        // res_{S_{n−1}} Lie_F(n) ≅ F S_{n−1} for small n.
        let mut rng = SplitMix64::new(2);
        for (p, n) in [(2u8, 3usize), (2, 4), (3, 4)] {
            let lie = build_lie(p, n, LieBackend::GroupAlgebra, None, &[], DEFAULT_BUDGET).unwrap();
            let sub_gens = sym_gens(n - 1, n);
            let res = lie.module.restrict(&sub_gens, 1 << 16).unwrap();
            let group = crate::symgrp::PGroup::generate(n, sub_gens).unwrap();
            let reg = crate::modrep::Module::regular(p, &group);
            assert!(is_isomorphic(&res, &reg, &mut rng).is_some(), "p={p} n={n}");
        }
    }
}
