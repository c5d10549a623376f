//! Mid-scale pipeline exercise: Lie_p(6) for p ∈ {2, 3}, including the
//! reduction-predicted vertex of a Lie_2(6) summand.

use liemod::chartab::principal_block_idempotent;
use liemod::lie::{build_lie, principal_block_simples, LieBackend, DEFAULT_BUDGET};
use liemod::localrep::{vertex, PModuleCtx};
use liemod::modrep::{decompose, strip_projectives, Module};
use liemod::reduce::predicted_vertex;
use liemod::symgrp::sylow_p_subgroup;

fn pbl_strip(p: u8, n: usize, seed: u64) -> (Module, Module, Vec<usize>) {
    let sylow = sylow_p_subgroup(p, n).unwrap();
    let bd = principal_block_idempotent(p, n).unwrap();
    let pbl = build_lie(p, n, LieBackend::GroupAlgebra, Some(&bd), sylow.gens(), DEFAULT_BUDGET)
        .unwrap();
    let simples = principal_block_simples(&bd, pbl.module.gens(), seed);
    let sylow_mats = pbl.module.matrices_for(sylow.gens(), 1 << 16).unwrap();
    let out = strip_projectives(&pbl.module, &simples, &sylow_mats, sylow.order(), seed).unwrap();
    let core = pbl.module.submodule(&out.core_basis).unwrap();
    let proj_dims: Vec<usize> = out.summands.iter().map(|s| s.basis.rows()).collect();
    (pbl.module, core, proj_dims)
}

#[test]
fn lie_2_6_pipeline() {
    let (pbl, core, proj_dims) = pbl_strip(2, 6, 0);
    let total: usize = proj_dims.iter().sum();
    assert_eq!(total + core.dim(), pbl.dim());
    eprintln!(
        "Lie_2(6): pbl dim {}, projective dims {:?}, core dim {}",
        pbl.dim(),
        proj_dims,
        core.dim()
    );
    // Reduction, Cor d=1 case: some indecomposable summand of Lie_2(6) has
    // vertex of order 2 conjugate to E_2^♯ = ⟨(1,4)(2,5)(3,6)⟩ in S_6.
    let sylow = sylow_p_subgroup(2, 6).unwrap();
    let lattice = sylow.subgroup_classes().unwrap();
    let res = core.restrict(sylow.gens(), 1 << 16).unwrap();
    let certs = decompose(&res, Some(&sylow), 1);
    let predicted = predicted_vertex(2, 3, 1).unwrap();
    // Conjugacy in the corollary is in S_6: check by brute force over S_6.
    let pred_elems: std::collections::BTreeSet<liemod::symgrp::Perm> =
        predicted.elements().iter().cloned().collect();
    let mut found = false;
    for cert in &certs {
        let ctx = PModuleCtx::new(&cert.module, &sylow);
        let vr = vertex(&ctx, &lattice, 0);
        eprintln!("  summand dim {} vertex order {}", cert.dim(), vr.vertex_order);
        if vr.vertex_order == 2 {
            let vgroup =
                liemod::symgrp::PGroup::generate(6, vr.vertex_gens.clone()).unwrap();
            let velems: Vec<liemod::symgrp::Perm> = vgroup.elements().to_vec();
            let mut conj_found = false;
            liemod::symgrp::for_each_perm(6, |_, sigma| {
                if conj_found {
                    return;
                }
                let sinv = sigma.inverse();
                let mapped: std::collections::BTreeSet<liemod::symgrp::Perm> = velems
                    .iter()
                    .map(|x| sigma.compose(x).compose(&sinv))
                    .collect();
                if mapped == pred_elems {
                    conj_found = true;
                }
            });
            if conj_found {
                found = true;
            }
        }
    }
    assert!(found, "a summand with vertex S_6-conjugate to E_2^sharp exists");
}

#[test]
fn lie_3_6_pipeline() {
    let (pbl, core, proj_dims) = pbl_strip(3, 6, 0);
    let total: usize = proj_dims.iter().sum();
    assert_eq!(total + core.dim(), pbl.dim());
    eprintln!(
        "Lie_3(6): pbl dim {}, projective dims {:?}, core dim {}",
        pbl.dim(),
        proj_dims,
        core.dim()
    );
    // Whatever the split is, the core is projective-free and decomposes
    // with certificates.
    let sylow = sylow_p_subgroup(3, 6).unwrap();
    assert!(!liemod::modrep::is_projective(&core, &sylow).unwrap() || core.dim() == 0);
}
