//! Projectivity testing and the Monte Carlo projective-summand stripping
//! with deterministic completion certificates.
//!
//! A module over a finite group is projective iff its restriction to a
//! Sylow p-subgroup is free, and freeness over a p-group P is decided by
//! the minimal-cover rank: M is free iff |P|·dim(M/rad M) = dim M.

use alloc::vec::Vec;

use crate::gfp::{left_kernel, Echelon, Fed, GFMatrix};
use crate::rng::SplitMix64;
use crate::symgrp::{PGroup, CLOSURE_CAP};

use super::heller::rad_p_group;
use super::hom::hom_basis_mats;
use super::module::{submodule_action, ModError, Module};
use super::spin::spin;
use super::words::{peakword_search, stable_kernel, AlgebraElement};

/// Freeness over a p-group, given the action matrices of its generators.
pub fn is_free_over_p_group(p: u8, dim: usize, mats: &[GFMatrix], group_order: usize) -> bool {
    if dim % group_order != 0 {
        return false;
    }
    let rad = rad_p_group(p, dim, mats);
    let head = dim - rad.rows();
    head * group_order == dim
}

/// Projectivity via the free-restriction test.
pub fn is_projective(m: &Module, sylow: &PGroup) -> Result<bool, ModError> {
    let mats = m.matrices_for(sylow.gens(), CLOSURE_CAP)?;
    Ok(is_free_over_p_group(m.p(), m.dim(), &mats, sylow.order()))
}

/// One stripped projective summand.
pub struct StrippedSummand {
    /// Basis rows inside the parent.
    pub basis: GFMatrix,
    /// Index of the simple whose projective cover this is (into the
    /// simples list passed to the strip).
    pub head: usize,
}

/// Outcome of the projective strip: summand bases plus a projective-free
/// complement, certified as an internal direct sum by the combined rank.
pub struct StripOutcome {
    pub summands: Vec<StrippedSummand>,
    /// Basis of the complement submodule.
    pub core_basis: GFMatrix,
    pub seed: u64,
}

const STALL_LIMIT: usize = 24;

/// Find the projective direct summands of `m` by peakword-kernel spinning,
/// then cut out a genuine complement submodule by the same strip on the
/// dual and annihilating.  The returned bases together with `core_basis`
/// form an internal direct sum decomposition of the parent (verified).
///
/// `simples`: the simple modules of the block(s) supporting `m`, over the
/// same generators; for p-groups pass the trivial module alone.
/// `sylow_mats`: action matrices of the Sylow generators on `m`.
pub fn strip_projectives(
    m: &Module,
    simples: &[Module],
    sylow_mats: &[GFMatrix],
    sylow_order: usize,
    seed: u64,
) -> Result<StripOutcome, ModError> {
    let mut rng = SplitMix64::new(seed).fork(0x73747269);
    let primal = strip_side(m, simples, sylow_mats, sylow_order, &mut rng)?;

    // Dual side: the projective part of M* annihilates to a projective-free
    // complement in M.
    let dual = m.dual();
    let dual_simples: Vec<Module> = simples.iter().map(|s| s.dual()).collect();
    let dual_sylow_mats: Vec<GFMatrix> = sylow_mats
        .iter()
        .map(|x| x.inverse().expect("invertible").transpose())
        .collect();
    for retry in 0..4u64 {
        let mut drng = SplitMix64::new(seed ^ 0xd7a1).fork(retry);
        let dual_found = strip_side(&dual, &dual_simples, &dual_sylow_mats, sylow_order, &mut drng)?;
        let mut lprime = GFMatrix::zeros(m.p(), 0, m.dim());
        for s in &dual_found {
            lprime = lprime.vstack(&s.basis).expect("dims");
        }
        let core_basis = left_kernel(&lprime.transpose());
        // Certificate: the summands plus the complement are an internal
        // direct sum.
        let mut stack = GFMatrix::zeros(m.p(), 0, m.dim());
        for s in &primal {
            stack = stack.vstack(&s.basis).expect("dims");
        }
        let proj_dim = stack.rows();
        stack = stack.vstack(&core_basis).expect("dims");
        if stack.rows() == m.dim() && stack.rank() == m.dim() && proj_dim == lprime.rows() {
            return Ok(StripOutcome {
                summands: primal,
                core_basis,
                seed,
            });
        }
    }
    Err(ModError::BudgetExhausted("projective strip splitting"))
}

fn strip_side(
    m: &Module,
    simples: &[Module],
    sylow_mats: &[GFMatrix],
    sylow_order: usize,
    rng: &mut SplitMix64,
) -> Result<Vec<StrippedSummand>, ModError> {
    let p = m.p();
    let dim = m.dim();
    let mut found: Vec<StrippedSummand> = Vec::new();
    let mut collected = Echelon::new(p, dim, dim);
    let mut collected_dim = 0usize;

    for (si, _s) in simples.iter().enumerate() {
        let peak = peakword_search(simples, si, 30000, rng.next_u64())?;
        let kernel = peak_kernel(&peak, m);
        if kernel.rows() == 0 {
            continue;
        }
        let mut stall = 0usize;
        while stall < STALL_LIMIT {
            let coeffs = rng.nonzero_vector(p, kernel.rows());
            let mut v = GFMatrix::zeros(p, 1, dim);
            for (i, &c) in coeffs.iter().enumerate() {
                v.axpy_row_from(0, &kernel, i, c);
            }
            if v.row_is_zero(0) {
                stall += 1;
                continue;
            }
            let sp = spin(p, dim, m.mats(), &v);
            // Projective candidate?  Its restriction to the Sylow
            // subgroup must be free.
            let sub_sylow = match submodule_action(p, sylow_mats, &sp.basis) {
                Some(mats) => mats,
                None => {
                    stall += 1;
                    continue;
                }
            };
            if !is_free_over_p_group(p, sp.dim(), &sub_sylow, sylow_order) {
                stall += 1;
                continue;
            }
            //독립성: commit only if the candidate meets nothing collected.
            let mut probe = collected.clone();
            let mut ok = true;
            for r in 0..sp.basis.rows() {
                match probe.feed_row_of(&sp.basis, r) {
                    Ok(Fed::Kept { .. }) => {}
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                stall += 1;
                continue;
            }
            collected = probe;
            collected_dim += sp.dim();
            debug_assert!(collected_dim <= dim);
            found.push(StrippedSummand {
                basis: sp.basis,
                head: si,
            });
            stall = 0;
        }
    }
    Ok(found)
}

/// Union of the kernels of the powers of a peakword on a module; for the
/// zero peakword (p-group case) this is everything.
fn peak_kernel(peak: &AlgebraElement, m: &Module) -> GFMatrix {
    if peak.is_zero() {
        return GFMatrix::identity(m.p(), m.dim());
    }
    stable_kernel(&peak.evaluate_on(m))
}

/// Head classification of a projective summand: dim Hom(P, S) = 1 exactly
/// for the simple S it covers.  Used to sort stripped summands into
/// isomorphism classes without large hom computations.
pub fn head_of_projective(
    p: u8,
    basis: &GFMatrix,
    parent_mats: &[GFMatrix],
    simples: &[Module],
) -> Option<usize> {
    let mats = submodule_action(p, parent_mats, basis)?;
    let dim = basis.rows();
    let mut head = None;
    for (i, s) in simples.iter().enumerate() {
        let h = hom_basis_mats(p, dim, &mats, s.dim(), s.mats());
        if !h.is_empty() {
            if h.len() != 1 || head.is_some() {
                return None;
            }
            head = Some(i);
        }
    }
    head
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::Perm;

    #[test]
    fn free_module_over_p8_is_projective() {
        let g = crate::symgrp::sylow_p_subgroup(2, 8).unwrap();
        let m = Module::regular(2, &g);
        assert!(is_projective(&m, &g).unwrap());
    }

    #[test]
    fn trivial_module_over_cp_is_not_projective() {
        for p in [2u8, 3] {
            let cyc: Vec<u8> = (0..p).map(|i| (i + 1) % p).collect();
            let g = PGroup::generate(p as usize, alloc::vec![Perm::from_images(cyc).unwrap()]).unwrap();
            let f = Module::trivial(p, p as usize, g.gens().to_vec());
            assert!(!is_projective(&f, &g).unwrap());
        }
    }

    #[test]
    fn strip_regular_c2_leaves_nothing() {
        let g = PGroup::generate(2, alloc::vec![Perm::from_cycles(2, "(1,2)").unwrap()]).unwrap();
        let m = Module::regular(2, &g);
        let triv = Module::trivial(2, 2, g.gens().to_vec());
        let out = strip_projectives(&m, &[triv], m.mats(), 2, 0).unwrap();
        assert_eq!(out.summands.len(), 1);
        assert_eq!(out.summands[0].basis.rows(), 2);
        assert_eq!(out.core_basis.rows(), 0);
    }

    #[test]
    fn strip_projective_free_module_returns_it_whole() {
        let g = PGroup::generate(2, alloc::vec![Perm::from_cycles(2, "(1,2)").unwrap()]).unwrap();
        let f = Module::trivial(2, 2, g.gens().to_vec());
        let out = strip_projectives(&f, &[f.clone()], f.mats(), 2, 0).unwrap();
        assert!(out.summands.is_empty());
        assert_eq!(out.core_basis.rows(), 1);
    }

    #[test]
    fn strip_mixed_module() {
        // F ⊕ F_2C_2: one free summand, core of dim 1.
        let g = PGroup::generate(2, alloc::vec![Perm::from_cycles(2, "(1,2)").unwrap()]).unwrap();
        let m = Module::regular(2, &g)
            .direct_sum(&Module::trivial(2, 2, g.gens().to_vec()))
            .unwrap();
        let triv = Module::trivial(2, 2, g.gens().to_vec());
        let out = strip_projectives(&m, &[triv.clone()], m.mats(), 2, 7).unwrap();
        assert_eq!(out.summands.len(), 1);
        assert_eq!(out.summands[0].basis.rows(), 2);
        assert_eq!(out.core_basis.rows(), 1);
        // The core really is a submodule isomorphic to F.
        let core = m.submodule(&out.core_basis).unwrap();
        let mut rng = SplitMix64::new(0);
        assert!(super::super::hom::is_isomorphic(&core, &triv, &mut rng).is_some());
    }
}
