//! Vertices and sources: minimal relatively-projective subgroups via
//! Higman tests over the subgroup lattice, and source extraction from the
//! restriction to the vertex.

use alloc::vec::Vec;

use crate::modrep::{decompose, is_isomorphic, Module, SummandCert};
use crate::rng::SplitMix64;
use crate::symgrp::{PGroup, Perm, SubgroupLattice};

use super::higman::{rel_projective, PModuleCtx};

#[derive(Clone)]
pub struct SourceCert {
    pub module: Module,
    pub dim: usize,
    pub multiplicity: usize,
}

pub struct VertexReport {
    /// Class id of the vertex in the parent lattice.
    pub vertex_class: usize,
    pub vertex_order: usize,
    pub vertex_gens: Vec<Perm>,
    /// Iso-classes of sources: indecomposable summands of the restriction
    /// to the vertex having full vertex there.
    pub sources: Vec<SourceCert>,
    pub module_dim: usize,
}

/// Vertex of an indecomposable module over a p-group: the minimal
/// subgroup class passing Higman's criterion.  Search order: descending
/// subgroup order, pruned by the |P:Q| | dim M divisibility constraint and
/// by monotonicity (subgroups of failing groups fail).
pub fn vertex(
    ctx: &PModuleCtx,
    lattice: &SubgroupLattice,
    seed: u64,
) -> VertexReport {
    let vclass = vertex_class(ctx, lattice);
    let vrep = &lattice.subgroups[lattice.classes[vclass].rep];
    let sources = sources_at(ctx, lattice, vclass, seed);
    VertexReport {
        vertex_class: vclass,
        vertex_order: lattice.classes[vclass].order,
        vertex_gens: vrep.gens.clone(),
        sources,
        module_dim: ctx.dim(),
    }
}

/// The vertex search only, without source extraction.
pub fn vertex_class(ctx: &PModuleCtx, lattice: &SubgroupLattice) -> usize {
    let dim = ctx.dim();
    let order_p = ctx.group.order();
    let mut class_ids: Vec<usize> = (0..lattice.classes.len()).collect();
    class_ids.sort_by(|&a, &b| lattice.classes[b].order.cmp(&lattice.classes[a].order));

    let mut failed: Vec<usize> = Vec::new();
    let mut passing: Vec<usize> = Vec::new();
    for &cid in &class_ids {
        let class = &lattice.classes[cid];
        let index = order_p / class.order;
        if dim % index != 0 {
            failed.push(cid);
            continue;
        }
        let rep = &lattice.subgroups[class.rep];
        // Monotonicity: a subgroup conjugate into a failing group fails.
        if failed.iter().any(|&f| {
            lattice.classes[f].order > class.order
                && ctx.group.conjugate_into(rep, &lattice.subgroups[lattice.classes[f].rep])
        }) {
            failed.push(cid);
            continue;
        }
        if rel_projective(ctx, rep) {
            passing.push(cid);
        } else {
            failed.push(cid);
        }
    }
    let min_order = passing
        .iter()
        .map(|&c| lattice.classes[c].order)
        .min()
        .expect("P itself always passes");
    let minimal: Vec<usize> = passing
        .iter()
        .copied()
        .filter(|&c| lattice.classes[c].order == min_order)
        .collect();
    assert_eq!(
        minimal.len(),
        1,
        "vertex must be unique up to conjugacy for an indecomposable module"
    );
    minimal[0]
}

fn sources_at(
    ctx: &PModuleCtx,
    lattice: &SubgroupLattice,
    vclass: usize,
    seed: u64,
) -> Vec<SourceCert> {
    let vrep = &lattice.subgroups[lattice.classes[vclass].rep];
    let vorder = lattice.classes[vclass].order;
    let q_gens = vrep.gens.clone();
    let res = if q_gens.is_empty() {
        // Trivial vertex: the restriction forgets the action entirely.
        Module::over_trivial_group(ctx.module.p(), ctx.dim())
    } else {
        let q_mats = ctx.mats_of(&q_gens);
        Module::new(ctx.module.p(), ctx.module.degree(), q_gens.clone(), q_mats)
    };
    let q_group = PGroup::generate(res.degree(), q_gens).expect("small");
    let certs = decompose(&res, Some(&q_group), seed ^ 0x736f);
    let q_lattice = q_group.subgroup_classes().expect("small");
    let mut rng = SplitMix64::new(seed).fork(0x737263);
    let mut out: Vec<SourceCert> = Vec::new();
    for cert in certs {
        // Keep summands whose own vertex is all of Q.
        let sctx = PModuleCtx::new(&cert.module, &q_group);
        let vc = vertex_class(&sctx, &q_lattice);
        if q_lattice.classes[vc].order != vorder {
            continue;
        }
        match out
            .iter_mut()
            .find(|s| s.dim == cert.module.dim() && is_isomorphic(&s.module, &cert.module, &mut rng).is_some())
        {
            Some(s) => s.multiplicity += 1,
            None => out.push(SourceCert {
                dim: cert.module.dim(),
                module: cert.module,
                multiplicity: 1,
            }),
        }
    }
    assert!(!out.is_empty(), "restriction to the vertex must contain a source");
    out
}

/// Per-summand vertex data for the restriction of an S_n-module to its
/// Sylow p-subgroup.
pub struct SylowSummandVertex {
    pub cert: SummandCert,
    pub report: VertexReport,
}

pub struct SylowVertexAnalysis {
    pub summands: Vec<SylowSummandVertex>,
    /// Index of a summand attaining the maximal vertex order: it shares a
    /// vertex and sources with the original module.
    pub attaining: usize,
}

/// Restrict to the Sylow subgroup, decompose, and compute the vertex of
/// every summand; the maximal one is a vertex of the original module.
/// `sylow_mats` must be the action matrices of `sylow.gens()` on `m`.
pub fn vertex_via_sylow(
    m: &Module,
    sylow: &PGroup,
    sylow_mats: Vec<crate::gfp::GFMatrix>,
    lattice: &SubgroupLattice,
    seed: u64,
) -> SylowVertexAnalysis {
    let res = Module::new(m.p(), m.degree(), sylow.gens().to_vec(), sylow_mats);
    let certs = decompose(&res, Some(sylow), seed ^ 0x766961);
    let mut summands = Vec::new();
    for cert in certs {
        let ctx = PModuleCtx::new(&cert.module, sylow);
        let report = vertex(&ctx, lattice, seed);
        summands.push(SylowSummandVertex { cert, report });
    }
    let attaining = summands
        .iter()
        .enumerate()
        .max_by_key(|(_, s)| s.report.vertex_order)
        .map(|(i, _)| i)
        .expect("nonzero module");
    SylowVertexAnalysis { summands, attaining }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::regular_elementary;

    #[test]
    fn trivial_module_has_vertex_p_with_trivial_source() {
        let g = regular_elementary(2, 2).unwrap();
        let f = Module::trivial(2, 4, g.gens().to_vec());
        let ctx = PModuleCtx::new(&f, &g);
        let lat = g.subgroup_classes().unwrap();
        let vr = vertex(&ctx, &lat, 0);
        assert_eq!(vr.vertex_order, 4);
        assert_eq!(vr.sources.len(), 1);
        assert_eq!(vr.sources[0].dim, 1);
    }

    #[test]
    fn free_module_has_vertex_one() {
        let g = regular_elementary(2, 2).unwrap();
        let m = Module::regular(2, &g);
        let ctx = PModuleCtx::new(&m, &g);
        let lat = g.subgroup_classes().unwrap();
        let vr = vertex(&ctx, &lat, 0);
        assert_eq!(vr.vertex_order, 1);
        assert_eq!(vr.sources[0].dim, 1);
    }

    #[test]
    fn heller_translate_has_full_vertex() {
        // Ω(F) over E_4 is indecomposable non-projective: vertex E_4.
        let g = regular_elementary(2, 2).unwrap();
        let f = Module::trivial(2, 4, g.gens().to_vec());
        let om = crate::modrep::heller(&f, &g).unwrap();
        let ctx = PModuleCtx::new(&om, &g);
        let lat = g.subgroup_classes().unwrap();
        let vr = vertex(&ctx, &lat, 1);
        assert_eq!(vr.vertex_order, 4);
        assert_eq!(vr.sources.iter().map(|s| s.dim).min(), Some(3));
    }

    #[test]
    fn induced_module_vertex_is_the_inducing_subgroup() {
        // Ind_Q^{E_4}(F) for |Q| = 2 is indecomposable with vertex Q.
        let g = regular_elementary(2, 2).unwrap();
        let lat = g.subgroup_classes().unwrap();
        let qcid = (0..lat.classes.len())
            .find(|&c| lat.classes[c].order == 2)
            .unwrap();
        let q = &lat.subgroups[lat.classes[qcid].rep];
        let triv_q = Module::trivial(2, 4, q.gens.clone());
        let ind = triv_q.induce(&g, &q.elem_idx).unwrap();
        assert_eq!(ind.dim(), 2);
        let ctx = PModuleCtx::new(&ind, &g);
        let vr = vertex(&ctx, &lat, 2);
        assert_eq!(vr.vertex_order, 2);
        assert_eq!(vr.vertex_class, qcid);
        assert_eq!(vr.sources[0].dim, 1);
    }
}
