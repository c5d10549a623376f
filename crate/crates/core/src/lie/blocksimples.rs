//! Bootstrap of the principal-block simple modules: chop the ε-projected
//! Young permutation modules M^μ for the p-regular principal-block labels
//! μ.  Every block simple D^μ occurs in M^μ, and projecting by the block
//! idempotent first keeps the chops inside the block, so completeness is
//! certified by comparing against the combinatorial count of p-regular
//! labels with the principal p-core.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::chartab::{
    count_principal_simples, cycle_type_partition, p_core, partitions, BlockData, Partition,
};
use crate::gfp::GFMatrix;
use crate::modrep::{chop, hom_basis_mats, row_space_basis, Module};
use crate::rng::SplitMix64;
use crate::symgrp::{for_each_perm, Perm};

/// Tabloids of shape μ: functions {0..n−1} → row index with the row sizes
/// of μ, enumerated deterministically.
pub fn tabloids(mu: &Partition) -> Vec<Vec<u8>> {
    let n = mu.n();
    let rows = mu.parts();
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u8; n];
    let mut remaining: Vec<u8> = rows.to_vec();
    fn rec(
        pos: usize,
        n: usize,
        cur: &mut Vec<u8>,
        remaining: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if pos == n {
            out.push(cur.clone());
            return;
        }
        for r in 0..remaining.len() {
            if remaining[r] > 0 {
                remaining[r] -= 1;
                cur[pos] = r as u8;
                rec(pos + 1, n, cur, remaining, out);
                remaining[r] += 1;
            }
        }
    }
    rec(0, n, &mut cur, &mut remaining, &mut out);
    out
}

/// The Young permutation module M^μ = Ind_{S_μ}^{S_n}(F) on tabloids.
pub fn young_permutation_module(p: u8, mu: &Partition, gens: &[Perm]) -> Module {
    let tabs = tabloids(mu);
    let index: BTreeMap<Vec<u8>, u32> = tabs
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();
    let n = mu.n();
    let images: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let ginv = g.inverse();
            tabs.iter()
                .map(|t| {
                    // (g·f)(x) = f(g^{-1} x)
                    let img: Vec<u8> = (0..n).map(|x| t[ginv.apply(x)]).collect();
                    index[&img]
                })
                .collect()
        })
        .collect();
    Module::from_point_action(p, gens.first().map(|g| g.degree()).unwrap_or(1), gens.to_vec(), &images)
}

/// The action matrix of ε_n on a permutation module given by its point
/// action, accumulated by streaming all of S_n grouped by cycle type.
pub fn epsilon_on_permutation_module(
    block: &BlockData,
    point_act: impl Fn(&Perm, usize) -> usize,
    npoints: usize,
) -> GFMatrix {
    let p = block.p;
    let n = block.n;
    let coeff_of_type: BTreeMap<Vec<u8>, u8> = block
        .principal_class_coeffs
        .iter()
        .map(|(mu, c)| (mu.parts().to_vec(), c.value()))
        .collect();
    let mut acc = GFMatrix::zeros(p, npoints, npoints);
    for_each_perm(n, |_, g| {
        let ty = cycle_type_partition(g);
        let c = *coeff_of_type.get(ty.parts()).expect("all types");
        if c == 0 {
            return;
        }
        for x in 0..npoints {
            let y = point_act(g, x);
            let v = (acc.get(x, y) as u16 + c as u16) % p as u16;
            acc.set(x, y, v as u8);
        }
    });
    acc
}

/// The p-regular labels of the principal block.
pub fn principal_block_labels(p: u8, n: usize) -> Vec<Partition> {
    let core0 = p_core(&Partition::one_row(n), p);
    partitions(n)
        .into_iter()
        .filter(|l| l.is_p_regular(p) && p_core(l, p) == core0)
        .collect()
}

/// All simple modules of the principal block, certified complete against
/// the combinatorial count.
pub fn principal_block_simples(block: &BlockData, gens: &[Perm], seed: u64) -> Vec<Module> {
    let p = block.p;
    let n = block.n;
    let expected = count_principal_simples(p, n);
    let mut rng = SplitMix64::new(seed).fork(0x73696d);
    let mut simples: Vec<Module> = Vec::new();
    for mu in principal_block_labels(p, n) {
        if simples.len() == expected {
            break;
        }
        let m = young_permutation_module(p, &mu, gens);
        let tabs = tabloids(&mu);
        let index: BTreeMap<Vec<u8>, u32> = tabs
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
        let nn = mu.n();
        let eps = epsilon_on_permutation_module(
            block,
            |g, x| {
                let ginv = g.inverse();
                let img: Vec<u8> = (0..nn).map(|q| tabs[x][ginv.apply(q)]).collect();
                index[&img] as usize
            },
            tabs.len(),
        );
        let basis = row_space_basis(&eps);
        if basis.rows() == 0 {
            continue;
        }
        let part = m.submodule(&basis).expect("epsilon image is a submodule");
        for (f, _) in chop(&part, &mut rng) {
            let already = simples.iter().any(|s| {
                s.dim() == f.dim()
                    && !hom_basis_mats(p, s.dim(), s.mats(), f.dim(), f.mats()).is_empty()
            });
            if !already {
                simples.push(f);
            }
        }
    }
    assert_eq!(
        simples.len(),
        expected,
        "principal-block simple bootstrap incomplete for p={p} n={n}"
    );
    simples
}
