//! Higman's criterion: M is relatively H-projective iff the identity lies
//! in the image of the relative trace Tr_H^P : End_{FH}(M) → End_{FP}(M).

use alloc::vec::Vec;

use crate::gfp::{solve, GFMatrix};
use crate::modrep::{element_matrices, hom_basis_mats, Module};
use crate::symgrp::{PGroup, Subgroup};

/// A module over a p-group P with the matrices of every group element
/// precomputed (element-list order), shared across Higman tests.
pub struct PModuleCtx<'a> {
    pub module: &'a Module,
    pub group: &'a PGroup,
    pub elem_mats: Vec<GFMatrix>,
}

impl<'a> PModuleCtx<'a> {
    pub fn new(module: &'a Module, group: &'a PGroup) -> Self {
        let elem_mats = element_matrices(module, group);
        PModuleCtx { module, group, elem_mats }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Action matrices of a subgroup's generators.
    pub fn mats_of(&self, gens: &[crate::symgrp::Perm]) -> Vec<GFMatrix> {
        gens.iter()
            .map(|g| {
                let i = self.group.index_of(g).expect("subgroup generator in group");
                self.elem_mats[i as usize].clone()
            })
            .collect()
    }
}

/// The relative trace of an FH-endomorphism over a left transversal:
/// v ↦ Σ_t t·φ(t^{-1}·v).
pub fn relative_trace(ctx: &PModuleCtx, transversal: &[crate::symgrp::Perm], phi: &GFMatrix) -> GFMatrix {
    let p = ctx.module.p();
    let dim = ctx.dim();
    let mut acc = GFMatrix::zeros(p, dim, dim);
    for t in transversal {
        let ti = ctx.group.index_of(t).expect("in group") as usize;
        let tinv = ctx.group.index_of(&t.inverse()).expect("in group") as usize;
        let term = ctx.elem_mats[tinv]
            .mat_mul(phi)
            .expect("dims")
            .mat_mul(&ctx.elem_mats[ti])
            .expect("dims");
        for r in 0..dim {
            acc.axpy_row_from(r, &term, r, 1);
        }
    }
    acc
}

/// Relative projectivity of M with respect to H ≤ P.
pub fn rel_projective(ctx: &PModuleCtx, h: &Subgroup) -> bool {
    let p = ctx.module.p();
    let dim = ctx.dim();
    if h.elem_idx.len() == ctx.group.order() {
        return true;
    }
    let h_mats = ctx.mats_of(&h.gens);
    let end_h = hom_basis_mats(p, dim, &h_mats, dim, &h_mats);
    let transversal = ctx.group.left_transversal(h);
    // id ∈ span of the relative traces?
    let mut stack = GFMatrix::zeros(p, 0, dim * dim);
    for phi in &end_h {
        let tr = relative_trace(ctx, &transversal, phi);
        debug_assert!(crate::modrep::intertwines(
            ctx.module.mats(),
            ctx.module.mats(),
            &tr
        ));
        stack = stack.vstack(&tr.flatten()).expect("dims");
    }
    let id = GFMatrix::identity(p, dim).flatten();
    solve(&stack, &id).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::Module;
    use crate::symgrp::Perm;

    #[test]
    fn whole_group_is_always_relatively_projective() {
        let g = PGroup::generate(2, alloc::vec![Perm::from_cycles(2, "(1,2)").unwrap()]).unwrap();
        let m = Module::trivial(2, 2, g.gens().to_vec());
        let ctx = PModuleCtx::new(&m, &g);
        assert!(rel_projective(&ctx, &g.full_subgroup()));
    }

    #[test]
    fn free_module_is_one_projective_and_trivial_is_not() {
        let g = PGroup::generate(
            4,
            alloc::vec![
                Perm::from_cycles(4, "(1,2)(3,4)").unwrap(),
                Perm::from_cycles(4, "(1,3)(2,4)").unwrap(),
            ],
        )
        .unwrap();
        let free = Module::regular(2, &g);
        let ctx = PModuleCtx::new(&free, &g);
        assert!(rel_projective(&ctx, &g.trivial_subgroup()));
        let f = Module::trivial(2, 4, g.gens().to_vec());
        let ctxf = PModuleCtx::new(&f, &g);
        assert!(!rel_projective(&ctxf, &g.trivial_subgroup()));
        // trivial module has vertex P: fails for every proper subgroup
        let lat = g.subgroup_classes().unwrap();
        for c in &lat.classes {
            if c.order < g.order() {
                assert!(!rel_projective(&ctxf, &lat.subgroups[c.rep]));
            }
        }
    }

    #[test]
    fn trace_is_transversal_independent() {
        // Compare against the coset-reversed transversal.
        let g = PGroup::generate(
            4,
            alloc::vec![
                Perm::from_cycles(4, "(1,2)(3,4)").unwrap(),
                Perm::from_cycles(4, "(1,3)(2,4)").unwrap(),
            ],
        )
        .unwrap();
        let m = Module::regular(2, &g);
        let ctx = PModuleCtx::new(&m, &g);
        let lat = g.subgroup_classes().unwrap();
        let h = lat.classes.iter().find(|c| c.order == 2).unwrap();
        let hsub = &lat.subgroups[h.rep];
        let t1 = g.left_transversal(hsub);
        // a different transversal: multiply each rep by an element of H
        let hg = &g.elements()[hsub.elem_idx[1] as usize];
        let t2: Vec<Perm> = t1.iter().map(|t| t.compose(hg)).collect();
        let end_h = hom_basis_mats(2, m.dim(), &ctx.mats_of(&hsub.gens), m.dim(), &ctx.mats_of(&hsub.gens));
        for phi in &end_h {
            assert_eq!(
                relative_trace(&ctx, &t1, phi),
                relative_trace(&ctx, &t2, phi)
            );
        }
    }
}
