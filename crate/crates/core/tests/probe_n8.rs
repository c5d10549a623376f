//! Timing probe for the Lie_2(8) tier (run with --ignored --nocapture).

use std::time::Instant;

use liemod::chartab::principal_block_idempotent;
use liemod::lie::{build_lie, principal_block_simples, LieBackend, DEFAULT_BUDGET};
use liemod::modrep::{end_basis, strip_projectives};
use liemod::symgrp::sylow_p_subgroup;

#[test]
#[ignore = "timing probe"]
fn probe_n8_build_strip() {
    let p = 2u8;
    let n = 8usize;
    let t0 = Instant::now();
    let sylow = sylow_p_subgroup(p, n).unwrap();
    let bd = principal_block_idempotent(p, n).unwrap();
    eprintln!("[{:?}] block data", t0.elapsed());
    let pbl = build_lie(p, n, LieBackend::GroupAlgebra, Some(&bd), sylow.gens(), DEFAULT_BUDGET)
        .unwrap();
    eprintln!("[{:?}] pbl built: dim {}", t0.elapsed(), pbl.dim());
    assert_eq!(pbl.dim(), 4016);
    let simples = principal_block_simples(&bd, pbl.module.gens(), 0);
    eprintln!(
        "[{:?}] {} block simples, dims {:?}",
        t0.elapsed(),
        simples.len(),
        simples.iter().map(|s| s.dim()).collect::<Vec<_>>()
    );
    let sylow_mats = pbl.module.matrices_for(sylow.gens(), 1 << 17).unwrap();
    eprintln!("[{:?}] sylow matrices", t0.elapsed());
    let out = strip_projectives(&pbl.module, &simples, &sylow_mats, sylow.order(), 0).unwrap();
    let proj_dims: Vec<usize> = out.summands.iter().map(|s| s.basis.rows()).collect();
    let proj_total: usize = proj_dims.iter().sum();
    eprintln!(
        "[{:?}] strip: {} summands, dims {:?}, total {}",
        t0.elapsed(),
        out.summands.len(),
        proj_dims,
        proj_total
    );
    assert_eq!(proj_total, 3200);
    assert_eq!(out.summands.len(), 7);
    let core = pbl.module.submodule(&out.core_basis).unwrap();
    eprintln!("[{:?}] core dim {}", t0.elapsed(), core.dim());
    assert_eq!(core.dim(), 816);
    let ends = end_basis(&core);
    eprintln!("[{:?}] dim End(core) = {}", t0.elapsed(), ends.len());
}

#[test]
#[ignore = "timing probe"]
fn probe_p8_lattice() {
    let t0 = Instant::now();
    let sylow = sylow_p_subgroup(2, 8).unwrap();
    let lat = sylow.subgroup_classes().unwrap();
    eprintln!(
        "[{:?}] P_8 lattice: {} subgroups in {} classes",
        t0.elapsed(),
        lat.subgroups.len(),
        lat.classes.len()
    );
    let oracle = sylow.enumerate_subgroups_oracle().unwrap();
    eprintln!("[{:?}] oracle count {}", t0.elapsed(), oracle);
    assert_eq!(oracle, lat.subgroups.len());
}

#[test]
#[ignore = "timing probe"]
fn probe_n8_local_analysis() {
    use liemod::localrep::{check_stability, dade_candidate, vertex, DadeClass, PModuleCtx};
    use liemod::modrep::{decompose, is_isomorphic};
    use liemod::rng::SplitMix64;
    use liemod::symgrp::{regular_elementary, Perm};

    let p = 2u8;
    let n = 8usize;
    let t0 = Instant::now();
    let sylow = sylow_p_subgroup(p, n).unwrap();
    let bd = principal_block_idempotent(p, n).unwrap();
    let pbl = build_lie(p, n, LieBackend::GroupAlgebra, Some(&bd), sylow.gens(), DEFAULT_BUDGET)
        .unwrap();
    let simples = principal_block_simples(&bd, pbl.module.gens(), 0);
    let sylow_mats = pbl.module.matrices_for(sylow.gens(), 1 << 17).unwrap();
    let out = strip_projectives(&pbl.module, &simples, &sylow_mats, sylow.order(), 0).unwrap();
    let core = pbl.module.submodule(&out.core_basis).unwrap();
    eprintln!("[{:?}] core dim {}", t0.elapsed(), core.dim());

    // Restriction to P_8 and its decomposition.
    let res = core.restrict(sylow.gens(), 1 << 17).unwrap();
    let certs = decompose(&res, Some(&sylow), 0);
    let mut dims: Vec<usize> = certs.iter().map(|c| c.dim()).collect();
    dims.sort_unstable();
    eprintln!("[{:?}] res_P8 summand dims: {:?}", t0.elapsed(), dims);

    let lattice = sylow.subgroup_classes().unwrap();
    eprintln!("[{:?}] lattice ready", t0.elapsed());
    for cert in &certs {
        let ctx = PModuleCtx::new(&cert.module, &sylow);
        let vr = vertex(&ctx, &lattice, 0);
        eprintln!(
            "[{:?}] summand dim {}: vertex order {}, gens {:?}, sources dims {:?}",
            t0.elapsed(),
            cert.dim(),
            vr.vertex_order,
            vr.vertex_gens.iter().map(|g| g.to_cycles()).collect::<Vec<_>>(),
            vr.sources.iter().map(|s| (s.dim, s.multiplicity)).collect::<Vec<_>>()
        );
    }

    // Dade candidate with the paper's exponents vs the dim-21 source.
    let e8 = regular_elementary(2, 3).unwrap();
    let elat = e8.subgroup_classes().unwrap();
    let triv_cid = (0..elat.classes.len()).find(|&c| elat.classes[c].order == 1).unwrap();
    let mut exps: Vec<(usize, i64)> = alloc_vec(&elat, 2);
    exps.push((triv_cid, 3));
    let class = DadeClass { p: 2, d: 3, exponents: exps };
    assert!(check_stability(&class));
    let cand = dade_candidate(&class, 0);
    eprintln!("[{:?}] dade candidate dim {}", t0.elapsed(), cand.dim());

    // The attaining summand's dim-21 source should be the candidate.
    let m1 = certs.iter().find(|c| c.dim() == 336).expect("M1");
    let ctx = PModuleCtx::new(&m1.module, &sylow);
    let vr = vertex(&ctx, &lattice, 0);
    let src = vr.sources.iter().find(|s| s.dim == 21).expect("source dim 21");
    // Translate the source onto E_8's standard generators.
    let src_on_e8 = src.module.restrict(e8.gens(), 1 << 10);
    let mut rng = SplitMix64::new(5);
    match src_on_e8 {
        Ok(s) => {
            let iso = is_isomorphic(&s, &cand, &mut rng).is_some();
            eprintln!("[{:?}] source ≅ dade candidate: {}", t0.elapsed(), iso);
        }
        Err(e) => eprintln!("[{:?}] source restriction issue: {}", t0.elapsed(), e),
    }
    let _ = Perm::identity(8);
}

fn alloc_vec(elat: &liemod::symgrp::SubgroupLattice, order: usize) -> Vec<(usize, i64)> {
    (0..elat.classes.len())
        .filter(|&c| elat.classes[c].order == order)
        .map(|c| (c, -1))
        .collect()
}
