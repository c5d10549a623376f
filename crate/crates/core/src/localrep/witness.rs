//! The two worked non-endo-permutation cases: machine-checked replays of
//! the exclusion arguments for Lie^pf at n = 4 (p = 2) and n = 3 (p = 3).

use alloc::vec::Vec;

use crate::lie::{build_lie, LieBackend, DEFAULT_BUDGET};
use crate::modrep::{
    chop, decompose, hom_basis, is_isomorphic, iso_classes, ModError, Module,
};
use crate::rng::SplitMix64;
use crate::symgrp::{sylow_generators, sylow_p_subgroup, PGroup, Perm};

use super::higman::PModuleCtx;
use super::vertex::vertex;

pub struct NotEndoPermWitness {
    pub n: usize,
    pub p: u8,
    /// Sorted dims of the indecomposable summands of Lie^pf ⊗ (Lie^pf)*.
    pub summand_dims: Vec<usize>,
    /// Named machine-checked facts; all must hold.
    pub facts: Vec<(&'static str, bool)>,
}

impl NotEndoPermWitness {
    pub fn all_hold(&self) -> bool {
        self.facts.iter().all(|(_, ok)| *ok)
    }
}

/// Decompose Lie^pf_p(n) ⊗ Lie^pf_p(n)* and replay the paper's argument
/// that it is not a permutation module.  Supported: n ∈ {3, 4}.
pub fn not_endo_permutation_witness(n: usize, seed: u64) -> Result<NotEndoPermWitness, ModError> {
    match n {
        4 => witness_n4(seed),
        3 => witness_n3(seed),
        _ => Err(ModError::Incompatible("witness supports n in {3, 4} only")),
    }
}

fn witness_n4(seed: u64) -> Result<NotEndoPermWitness, ModError> {
    let p = 2u8;
    let n = 4usize;
    let sylow_gens = sylow_generators(p, n);
    let lie = build_lie(p, n, LieBackend::GroupAlgebra, None, &sylow_gens, DEFAULT_BUDGET)
        .expect("small build");
    // dim 6 < 8 = |P_4|: no projective summand, Lie = Lie^pf.
    let m = lie.module;
    let tensor = m.tensor(&m.dual())?;
    let s4 = PGroup::generate(4, m.gens().to_vec()).expect("S_4");
    let sylow = sylow_p_subgroup(p, n).expect("P_4");
    let certs = decompose(&tensor, Some(&sylow), seed);
    let mut rng = SplitMix64::new(seed).fork(0x77);
    let mut summand_dims: Vec<usize> = certs.iter().map(|c| c.dim()).collect();
    summand_dims.sort_unstable();

    let mut facts: Vec<(&'static str, bool)> = Vec::new();
    facts.push(("summand dims are {2,2,8,8,8,8}", summand_dims == alloc::vec![2, 2, 8, 8, 8, 8]));

    // The two 2-dimensional summands: one simple (D^{(3,1)}), one uniserial
    // (Ind_{A_4}(F)).
    let two_dims: Vec<&Module> = certs
        .iter()
        .filter(|c| c.dim() == 2)
        .map(|c| &c.module)
        .collect();
    let mut d31: Option<Module> = None;
    let mut ind_a4_summand: Option<Module> = None;
    for t in &two_dims {
        let factors = chop(t, &mut rng);
        if factors.len() == 1 && factors[0].1 == 1 && factors[0].0.dim() == 2 {
            d31 = Some((*t).clone());
        } else {
            ind_a4_summand = Some((*t).clone());
        }
    }
    facts.push(("one 2-dim summand is simple", d31.is_some()));
    facts.push(("one 2-dim summand is not simple", ind_a4_summand.is_some()));

    // Ind_{A_4}^{S_4}(F_2) really occurs.
    let a4 = s4
        .subgroup_generated(&[
            Perm::from_cycles(4, "(1,2,3)").unwrap(),
            Perm::from_cycles(4, "(1,2)(3,4)").unwrap(),
        ])
        .expect("A_4");
    let triv_a4 = Module::trivial(p, 4, a4.gens.clone());
    let ind_a4 = triv_a4.induce(&s4, &a4.elem_idx)?;
    // Rebuild over the tensor's generator list for comparability.
    let ind_a4 = ind_a4.restrict(m.gens(), 1 << 10)?;
    if let (Some(d), Some(u)) = (&d31, &ind_a4_summand) {
        facts.push((
            "the non-simple 2-dim is Ind_{A4}(F)",
            is_isomorphic(u, &ind_a4, &mut rng).is_some(),
        ));
        facts.push((
            "D^{(3,1)} is not a summand of Ind_{A4}(F)",
            is_isomorphic(d, &ind_a4, &mut rng).is_none(),
        ));
        // Vertex of D^{(3,1)} is E_4 (order 4, normal in S_4).
        let lattice = sylow.subgroup_classes().expect("small");
        let d_res = d.restrict(sylow.gens(), 1 << 10)?;
        let ctx = PModuleCtx::new(&d_res, &sylow);
        let vr = vertex(&ctx, &lattice, seed);
        let e4 = sylow
            .subgroup_generated(&[
                Perm::from_cycles(4, "(1,2)(3,4)").unwrap(),
                Perm::from_cycles(4, "(1,3)(2,4)").unwrap(),
            ])
            .expect("E_4 ≤ P_4");
        let vrep = &lattice.subgroups[lattice.classes[vr.vertex_class].rep];
        facts.push((
            "vertex of D^{(3,1)} is E_4",
            vr.vertex_order == 4 && sylow.are_conjugate(vrep, &e4),
        ));
        facts.push((
            "D^{(3,1)} is a trivial-source module",
            vr.sources.iter().any(|s| s.dim == 1),
        ));
        // 2·D^{(3,1)} | Ind_{E_4}^{S_4}(F): the other exclusion branch.
        let e4_in_s4 = s4
            .subgroup_generated(&e4.gens)
            .expect("E_4 ≤ S_4");
        let ind_e4 = Module::trivial(p, 4, e4_in_s4.gens.clone())
            .induce(&s4, &e4_in_s4.elem_idx)?
            .restrict(m.gens(), 1 << 10)?;
        let ind_certs = decompose(&ind_e4, Some(&sylow), seed ^ 1);
        let d_count = ind_certs
            .iter()
            .filter(|c| c.dim() == 2 && is_isomorphic(&c.module, d, &mut rng).is_some())
            .count();
        facts.push(("2·D^{(3,1)} | Ind_{E4}(F)", d_count == 2));
    }

    // The 8-dimensional summands: projective, in two iso-classes with
    // multiplicities 1 and 3.
    let eights: Vec<usize> = (0..certs.len()).filter(|&i| certs[i].dim() == 8).collect();
    facts.push((
        "all 8-dim summands are projective",
        eights.iter().all(|&i| certs[i].projective),
    ));
    let eight_certs: Vec<_> = eights.iter().map(|&i| certs[i].clone()).collect();
    let classes = iso_classes(&eight_certs, &mut rng);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    facts.push(("8-dims fall in classes of sizes {1, 3}", sizes == alloc::vec![1, 3]));

    Ok(NotEndoPermWitness { n, p, summand_dims, facts })
}

fn witness_n3(seed: u64) -> Result<NotEndoPermWitness, ModError> {
    let p = 3u8;
    let n = 3usize;
    let sylow_gens = sylow_generators(p, n);
    let lie = build_lie(p, n, LieBackend::GroupAlgebra, None, &sylow_gens, DEFAULT_BUDGET)
        .expect("small build");
    let m = lie.module;
    let tensor = m.tensor(&m.dual())?;
    let sylow = sylow_p_subgroup(p, n).expect("C_3");
    let certs = decompose(&tensor, Some(&sylow), seed);
    let mut rng = SplitMix64::new(seed).fork(0x78);
    let mut summand_dims: Vec<usize> = certs.iter().map(|c| c.dim()).collect();
    summand_dims.sort_unstable();

    let mut facts: Vec<(&'static str, bool)> = Vec::new();
    facts.push(("summands are F ⊕ P^{(2,1)} with dims {1,3}", summand_dims == alloc::vec![1, 3]));
    let triv = Module::trivial(p, 3, m.gens().to_vec());
    if let Some(one) = certs.iter().find(|c| c.dim() == 1) {
        facts.push((
            "the 1-dim summand is trivial",
            is_isomorphic(&one.module, &triv, &mut rng).is_some(),
        ));
    }
    if let Some(three) = certs.iter().find(|c| c.dim() == 3) {
        facts.push(("P^{(2,1)} is projective", three.projective));
        // The exclusion argument: P^{(2,1)} has no trivial quotient.
        let homs = hom_basis(&three.module, &triv);
        facts.push(("Hom(P^{(2,1)}, F) = 0", homs.is_empty()));
    }
    Ok(NotEndoPermWitness { n, p, summand_dims, facts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_n3_holds() {
        let w = not_endo_permutation_witness(3, 0).unwrap();
        assert_eq!(w.summand_dims, alloc::vec![1, 3]);
        for (name, ok) in &w.facts {
            assert!(*ok, "fact failed: {name}");
        }
    }

    #[test]
    fn unsupported_n_is_an_error() {
        assert!(not_endo_permutation_witness(5, 0).is_err());
    }
}
