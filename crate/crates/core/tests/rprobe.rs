use std::time::Instant;

#[test]
#[ignore = "timing probe"]
fn probe_head_dim() {
    use liemod::*;
    let t0 = Instant::now();
    let sylow = symgrp::sylow_p_subgroup(2, 8).unwrap();
    let bd = chartab::principal_block_idempotent(2, 8).unwrap();
    let pbl = lie::build_lie(
        2,
        8,
        lie::LieBackend::GroupAlgebra,
        Some(&bd),
        sylow.gens(),
        lie::DEFAULT_BUDGET,
    )
    .unwrap();
    let simples = lie::principal_block_simples(&bd, pbl.module.gens(), 0);
    let sylow_mats = pbl.module.matrices_for(sylow.gens(), 1 << 17).unwrap();
    let out =
        modrep::strip_projectives(&pbl.module, &simples, &sylow_mats, sylow.order(), 0).unwrap();
    let core = pbl.module.submodule(&out.core_basis).unwrap();
    let res = core.restrict(sylow.gens(), 1 << 17).unwrap();
    eprintln!("[{:?}] res built", t0.elapsed());
    let rad = modrep::rad_p_group(2, res.dim(), res.mats());
    eprintln!(
        "[{:?}] head dim of res_P8 = {}",
        t0.elapsed(),
        res.dim() - rad.rows()
    );
    let sp = modrep::spin_standard(2, res.dim(), res.mats());
    eprintln!(
        "[{:?}] spin_standard seeds = {}, relations = {}",
        t0.elapsed(),
        sp.seed_count(),
        sp.relations.len()
    );
}
