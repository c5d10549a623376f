//! The group-algebra backend: Lie_p(n) and its principal-block component
//! are spanned by left translates of a single seed vector in F_pS_n
//! coordinates.  Candidates are enumerated along a depth-first Schreier
//! tree (each translate is one indexed gather away from its parent), fed
//! through the streaming echelon in batches, and the generator action
//! matrices fall out of the dependent-row expressions.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::chartab::{cycle_type_partition, BlockData};
use crate::gfp::{Echelon, Fed, GFMatrix};
use crate::modrep::Module;
use crate::symgrp::{factorial, for_each_perm, perm_rank, Perm};

use super::dsw::{backward_cycle, omega_support, GroupAlgebraVector, SparseGa};
use super::LieError;

const BATCH: usize = 128;

/// Generators of S_m embedded at the given degree (fixing later points).
pub fn sym_gens(m: usize, degree: usize) -> Vec<Perm> {
    if m < 2 {
        return Vec::new();
    }
    let mut tr: Vec<u8> = (0..degree as u8).collect();
    tr.swap(0, 1);
    let tr = Perm::from_images(tr).expect("transposition");
    if m == 2 {
        return alloc::vec![tr];
    }
    let mut cy: Vec<u8> = (0..degree as u8).collect();
    for i in 0..m {
        cy[i] = ((i + 1) % m) as u8;
    }
    alloc::vec![Perm::from_images(cy).expect("cycle"), tr]
}

/// Index table of the left-translation action: table[j] is the rank of
/// σ^{-1}·g where g has rank j, so that (σ·v)[j] = v[table[j]].
fn left_mult_gather_table(n: usize, sigma: &Perm) -> Vec<u32> {
    let inv = sigma.inverse();
    let mut table = alloc::vec![0u32; factorial(n) as usize];
    for_each_perm(n, |rank, g| {
        table[rank as usize] = perm_rank(&inv.compose(g)).rank as u32;
    });
    table
}

/// The seed c_n·ω_n as a sparse element.
fn seed_support(n: usize) -> SparseGa {
    let cn = backward_cycle(n, n);
    let mut out = SparseGa::new();
    for (g, c) in omega_support(n) {
        out.insert(cn.compose(&g), c);
    }
    out
}

/// The seed c_n·ω_n·ε_n in dense coordinates, accumulated by streaming all
/// of S_n grouped by cycle type (ε_n is a combination of class sums).
pub fn pbl_seed(p: u8, n: usize, block: &BlockData) -> GroupAlgebraVector {
    let supp: Vec<(Perm, u8)> = seed_support(n)
        .into_iter()
        .map(|(g, c)| (g, c.rem_euclid(p as i64) as u8))
        .filter(|(_, c)| *c != 0)
        .collect();
    let mut coeff_of_type: alloc::collections::BTreeMap<Vec<u8>, u8> = Default::default();
    for (mu, c) in &block.principal_class_coeffs {
        coeff_of_type.insert(mu.parts().to_vec(), c.value());
    }
    let len = factorial(n) as usize;
    let mut coords = GFMatrix::zeros(p, 1, len);
    for_each_perm(n, |_, g| {
        let ty = cycle_type_partition(g);
        let c = *coeff_of_type.get(ty.parts()).expect("all types present");
        if c == 0 {
            return;
        }
        for (s, cs) in &supp {
            let idx = perm_rank(&s.compose(g)).rank as usize;
            let v = (coords.get(0, idx) as u16 + c as u16 * *cs as u16) % p as u16;
            coords.set(0, idx, v as u8);
        }
    });
    GroupAlgebraVector { p, n, coords }
}

pub struct TranslateBuild {
    pub module: Module,
    /// The kept candidate permutations, in feed order: row i of the module
    /// basis is kept_perms[i]·v0.
    pub kept_perms: Vec<Perm>,
    pub candidates_fed: usize,
}

/// Span the left translates {π·v0 : π ∈ ⟨cand_gens⟩} and compute the
/// action matrices of `out_gens` on the resulting basis.
///
/// `rank_cap` bounds the basis size (used for the workspace estimate and
/// enforced); `budget_bytes` caps the streamed echelon plus raw-basis
/// storage.
pub fn build_translates(
    p: u8,
    n: usize,
    v0: &GroupAlgebraVector,
    cand_gens: &[Perm],
    out_gens: &[Perm],
    rank_cap: usize,
    budget_bytes: u64,
) -> Result<TranslateBuild, LieError> {
    let width = factorial(n) as usize;
    let bits_per_entry: u64 = match p {
        2 => 1,
        3 => 2,
        _ => 8,
    };
    // Worst-case workspace: echelon + raw translates + transform + narrow.
    let estimate = 2 * (rank_cap as u64 * width as u64 * bits_per_entry).div_ceil(8)
        + 2 * (rank_cap as u64 * rank_cap as u64 * bits_per_entry).div_ceil(8);
    if estimate > budget_bytes {
        return Err(LieError::MemoryBudget {
            needed: estimate,
            budget: budget_bytes,
        });
    }

    let mut eng = Echelon::with_budget(p, width, rank_cap, budget_bytes);
    let mut raw = GFMatrix::zeros(p, 0, width);
    let mut kept_perms: Vec<Perm> = Vec::new();
    let mut candidates_fed = 0usize;

    let cand_tables: Vec<Vec<u32>> = cand_gens.iter().map(|g| left_mult_gather_table(n, g)).collect();

    // Pending batch.
    let mut pending = GFMatrix::zeros(p, 0, width);
    let mut pending_perms: Vec<Perm> = Vec::new();
    let flush = |pending: &mut GFMatrix,
                     pending_perms: &mut Vec<Perm>,
                     eng: &mut Echelon,
                     raw: &mut GFMatrix,
                     kept_perms: &mut Vec<Perm>|
     -> Result<(), LieError> {
        if pending.rows() == 0 {
            return Ok(());
        }
        let raw_batch = pending.clone();
        let feeds = eng.feed_batch(pending).map_err(LieError::Gf)?;
        for (i, fed) in feeds.iter().enumerate() {
            if let Fed::Kept { .. } = fed {
                raw.push_zero_row();
                let last = raw.rows() - 1;
                raw.copy_row_from(last, &raw_batch, i);
                kept_perms.push(pending_perms[i].clone());
            }
        }
        *pending = GFMatrix::zeros(p, 0, width);
        pending_perms.clear();
        Ok(())
    };

    // Depth-first Schreier traversal of the candidate group.
    let mut visited: BTreeSet<Perm> = BTreeSet::new();
    let id = Perm::identity(n);
    visited.insert(id.clone());
    let mut stack: Vec<(Perm, GFMatrix)> = alloc::vec![(id, v0.coords.clone())];
    while let Some((pi, vec)) = stack.pop() {
        candidates_fed += 1;
        pending.push_zero_row();
        let last = pending.rows() - 1;
        pending.copy_row_from(last, &vec, 0);
        pending_perms.push(pi.clone());
        if pending.rows() >= BATCH {
            flush(&mut pending, &mut pending_perms, &mut eng, &mut raw, &mut kept_perms)?;
        }
        for (gi, g) in cand_gens.iter().enumerate() {
            let child = g.compose(&pi);
            if visited.insert(child.clone()) {
                let child_vec = vec.gathered_row(0, &cand_tables[gi]);
                stack.push((child, child_vec));
            }
        }
    }
    flush(&mut pending, &mut pending_perms, &mut eng, &mut raw, &mut kept_perms)?;
    let rank = eng.rank();
    debug_assert_eq!(rank, raw.rows());

    // Action matrices: σ·(π_i·v0) = (σπ_i)·v0 is a gather of the stored
    // raw basis row; every image must express over the basis.
    let mut mats: Vec<GFMatrix> = Vec::with_capacity(out_gens.len());
    for g in out_gens {
        let table = left_mult_gather_table(n, g);
        let mut mat = GFMatrix::zeros(p, rank, rank);
        let mut row0 = 0usize;
        while row0 < rank {
            let hi = (row0 + BATCH).min(rank);
            let mut batch = GFMatrix::zeros(p, 0, width);
            for i in row0..hi {
                batch.push_zero_row();
                let last = batch.rows() - 1;
                let img = raw.gathered_row(i, &table);
                batch.copy_row_from(last, &img, 0);
            }
            let feeds = eng.feed_batch(&mut batch).map_err(LieError::Gf)?;
            for (off, fed) in feeds.iter().enumerate() {
                match fed {
                    Fed::Dependent { coeffs } => {
                        for (j, &c) in coeffs.iter().enumerate() {
                            if c != 0 {
                                mat.set(row0 + off, j, c);
                            }
                        }
                    }
                    Fed::Kept { .. } => {
                        panic!("generator image escaped the spanned module: not invariant")
                    }
                }
            }
            row0 = hi;
        }
        mats.push(mat);
    }
    let module = Module::new(p, n, out_gens.to_vec(), mats);
    Ok(TranslateBuild {
        module,
        kept_perms,
        candidates_fed,
    })
}
