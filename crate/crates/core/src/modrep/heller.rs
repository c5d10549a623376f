//! Heller translates.  Over a p-group, Ω(M) is the kernel of the minimal
//! free cover FP^r → M with r = dim(M/rad M); Ω^{-1} is its dual twist.
//! A small general-group variant (projective covers assembled from the
//! regular module) backs the handful of non-p-group golden checks.

use alloc::vec::Vec;

use crate::gfp::{left_kernel, Echelon, Fed, GFMatrix};
use crate::rng::SplitMix64;
use crate::symgrp::PGroup;
#[cfg(test)]
use crate::symgrp::Perm;

use super::chop::chop;
use super::fitting::{decompose, row_space_basis};
use super::hom::{hom_basis, is_isomorphic};
use super::module::{submodule_action, ModError, Module};
use super::spin::spin;

/// Basis of rad M = (aug F_pP)·M over a p-group: the action closure of
/// Σ im(mat(g) − 1).
pub fn rad_p_group(p: u8, dim: usize, mats: &[GFMatrix]) -> GFMatrix {
    let mut seeds = GFMatrix::zeros(p, 0, dim);
    let id = GFMatrix::identity(p, dim);
    for m in mats {
        let gm1 = m.sub(&id).expect("dims");
        seeds = seeds.vstack(&gm1).expect("dims");
    }
    spin(p, dim, mats, &seeds).basis
}

/// Matrices of every group element on the module, in element-list order.
/// Requires the module generators to be exactly the group generators.
pub fn element_matrices(m: &Module, group: &PGroup) -> Vec<GFMatrix> {
    assert_eq!(m.gens(), group.gens(), "module generators must match the group");
    let n = group.order();
    let mut mats: Vec<Option<GFMatrix>> = alloc::vec![None; n];
    let id_idx = group.identity_index() as usize;
    mats[id_idx] = Some(GFMatrix::identity(m.p(), m.dim()));
    let mut frontier = alloc::vec![id_idx];
    while let Some(x) = frontier.pop() {
        for (gi, g) in group.gens().iter().enumerate() {
            let y = g.compose(&group.elements()[x]);
            let yi = group.index_of(&y).expect("closed") as usize;
            if mats[yi].is_none() {
                // mat(g·x) = mat(x)·mat(g) by the anti-homomorphism rule.
                let my = mats[x].as_ref().unwrap().mat_mul(m.mat(gi)).expect("square");
                mats[yi] = Some(my);
                frontier.push(yi);
            }
        }
    }
    mats.into_iter().map(|o| o.expect("connected")).collect()
}

/// Ω(M) over a p-group: kernel of the minimal free cover.
pub fn heller(m: &Module, group: &PGroup) -> Result<Module, ModError> {
    if group.p().is_none() {
        return Err(ModError::NotAPGroup);
    }
    let p = m.p();
    let dim = m.dim();
    let rad = rad_p_group(p, dim, m.mats());
    // Lift a basis of M/rad M: identity rows independent of rad.
    let mut eng = Echelon::new(p, dim, dim);
    let id = GFMatrix::identity(p, dim);
    for i in 0..rad.rows() {
        eng.feed_row_of(&rad, i).expect("cap");
    }
    let mut lifts: Vec<usize> = Vec::new();
    for i in 0..dim {
        if let Fed::Kept { .. } = eng.feed_row_of(&id, i).expect("cap") {
            lifts.push(i);
        }
    }
    let r = lifts.len();
    debug_assert_eq!(r, dim - rad.rows());
    let order = group.order();
    let elem_mats = element_matrices(m, group);

    // Cover Φ: F_pP^r → M, basis (i, t) ↦ elem_t · m_i.
    let mut phi = GFMatrix::zeros(p, r * order, dim);
    for (i, &lift) in lifts.iter().enumerate() {
        for (t, em) in elem_mats.iter().enumerate() {
            let row = id.select_rows(&[lift]).mat_mul(em).expect("dims");
            for (c, v) in row.row_nonzeros(0) {
                phi.set(i * order + t, c, v);
            }
        }
    }
    let kernel = left_kernel(&phi);
    // Action of the generators on F_pP^r: (i, t) ↦ (i, g·t).
    let free_mats: Vec<GFMatrix> = group
        .gens()
        .iter()
        .map(|g| {
            let mut mat = GFMatrix::zeros(p, r * order, r * order);
            for t in 0..order {
                let gt = group
                    .index_of(&g.compose(&group.elements()[t]))
                    .expect("closed") as usize;
                for i in 0..r {
                    mat.set(i * order + t, i * order + gt, 1);
                }
            }
            mat
        })
        .collect();
    let omats = submodule_action(p, &free_mats, &kernel).expect("kernel invariant");
    Ok(Module::new(p, m.degree(), m.gens().to_vec(), omats))
}

/// Ω^{-1}(M) = (Ω(M*))* over a p-group.
pub fn heller_inv(m: &Module, group: &PGroup) -> Result<Module, ModError> {
    Ok(heller(&m.dual(), group)?.dual())
}

/// Ω^n for any integer n (0 gives back M).
pub fn heller_power(m: &Module, group: &PGroup, n: i64) -> Result<Module, ModError> {
    let mut cur = m.clone();
    for _ in 0..n.unsigned_abs() {
        cur = if n > 0 { heller(&cur, group)? } else { heller_inv(&cur, group)? };
    }
    Ok(cur)
}

/// Radical of the group algebra F_pG as coordinate rows over the element
/// list: the joint kernel of the irreducible representations.
pub fn group_algebra_radical(p: u8, group: &PGroup, rng: &mut SplitMix64) -> GFMatrix {
    let reg = Module::regular(p, group);
    let simples = chop(&reg, rng);
    let n = group.order();
    let mut blocks: Vec<(Vec<GFMatrix>, usize)> = Vec::new();
    for (s, _) in &simples {
        let mats = element_matrices(s, group);
        let d = s.dim();
        blocks.push((mats, d));
    }
    let total: usize = blocks.iter().map(|(_, d)| d * d).sum();
    let mut system = GFMatrix::zeros(p, n, total);
    for g in 0..n {
        let mut off = 0;
        for (mats, d) in &blocks {
            for rr in 0..*d {
                for (cc, v) in mats[g].row_nonzeros(rr) {
                    system.set(g, off + rr * d + cc, v);
                }
            }
            off += d * d;
        }
    }
    left_kernel(&system)
}

/// rad M over an arbitrary listed group: (rad F_pG)·M.
pub fn rad_general(m: &Module, group: &PGroup, rng: &mut SplitMix64) -> GFMatrix {
    let radfg = group_algebra_radical(m.p(), group, rng);
    let elem_mats = element_matrices(m, group);
    let mut stacked = GFMatrix::zeros(m.p(), 0, m.dim());
    for b in 0..radfg.rows() {
        let mut rho = GFMatrix::zeros(m.p(), m.dim(), m.dim());
        for (g, c) in radfg.row_nonzeros(b) {
            for i in 0..m.dim() {
                rho.axpy_row_from(i, &elem_mats[g], i, c);
            }
        }
        stacked = stacked.vstack(&rho).expect("dims");
    }
    row_space_basis(&stacked)
}

/// Ω(M) over a small listed group, via a minimal projective cover
/// assembled from the indecomposable summands of the regular module.
pub fn heller_general(m: &Module, group: &PGroup, rng: &mut SplitMix64) -> Module {
    let p = m.p();
    // Projective indecomposables with their heads.
    let reg = Module::regular(p, group);
    let pims_raw = decompose(&reg, None, rng.next_u64());
    let mut pims: Vec<Module> = Vec::new();
    for cert in &pims_raw {
        if !pims
            .iter()
            .any(|q| q.dim() == cert.dim() && is_isomorphic(q, &cert.module, rng).is_some())
        {
            pims.push(cert.module.clone());
        }
    }
    // Head of M with multiplicities.
    let rad = rad_general(m, group, rng);
    let (head, _) = m.quotient(&rad).expect("invariant");
    let head_factors = chop(&head, rng);
    // Cover C = ⊕ P_S^{mult}: match PIMs to simples by Hom(P, S) ≠ 0.
    let mut cover: Option<Module> = None;
    for (s, mult) in &head_factors {
        let pim = pims
            .iter()
            .find(|pm| !hom_basis(pm, s).is_empty())
            .expect("every simple has a projective cover in the regular module");
        for _ in 0..*mult {
            cover = Some(match cover {
                None => pim.clone(),
                Some(c) => c.direct_sum(pim).expect("same gens"),
            });
        }
    }
    let cover = cover.expect("nonzero module has a cover");
    // A surjection C → M; any hom of full rank is a minimal cover here.
    let homs = hom_basis(&cover, m);
    let mut surj: Option<GFMatrix> = None;
    for _ in 0..512 {
        let mut h = GFMatrix::zeros(p, cover.dim(), m.dim());
        for b in &homs {
            let c = rng.below(p as u64) as u8;
            if c != 0 {
                for i in 0..cover.dim() {
                    h.axpy_row_from(i, b, i, c);
                }
            }
        }
        if crate::gfp::echelonize(&h).rank == m.dim() {
            surj = Some(h);
            break;
        }
    }
    let h = surj.expect("projective cover surjection exists");
    let kernel = left_kernel(&h);
    cover.submodule(&kernel).expect("kernel invariant")
}

pub fn heller_inv_general(m: &Module, group: &PGroup, rng: &mut SplitMix64) -> Module {
    heller_general(&m.dual(), group, rng).dual()
}

/// Socle of a module over a p-group: the fixed points ∩ ker(mat(g) − 1).
pub fn socle_p_group(p: u8, dim: usize, mats: &[GFMatrix]) -> GFMatrix {
    let id = GFMatrix::identity(p, dim);
    let mut stacked = GFMatrix::zeros(p, dim, 0);
    for m in mats {
        stacked = stacked.hstack(&m.sub(&id).expect("dims")).expect("dims");
    }
    left_kernel(&stacked)
}

/// Convenience: build the quotient F_pP/soc(F_pP) of the regular module.
pub fn regular_mod_socle(p: u8, group: &PGroup) -> Module {
    let reg = Module::regular(p, group);
    let soc = socle_p_group(p, reg.dim(), reg.mats());
    let (q, _) = reg.quotient(&soc).expect("invariant");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(_p: u8, n: usize) -> PGroup {
        let cyc: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        PGroup::generate(n, alloc::vec![Perm::from_images(cyc).unwrap()]).unwrap()
    }

    #[test]
    fn heller_of_trivial_over_cp_has_dim_p_minus_one() {
        for p in [2u8, 3, 5] {
            let g = cyclic(p, p as usize);
            let f = Module::trivial(p, p as usize, g.gens().to_vec());
            let om = heller(&f, &g).unwrap();
            assert_eq!(om.dim(), p as usize - 1);
        }
    }

    #[test]
    fn heller_inv_heller_is_identity_on_projective_free() {
        // Ω^{-1}(Ω(F)) ≅ F over E_4.
        let g = PGroup::generate(
            4,
            alloc::vec![
                Perm::from_cycles(4, "(1,2)(3,4)").unwrap(),
                Perm::from_cycles(4, "(1,3)(2,4)").unwrap(),
            ],
        )
        .unwrap();
        let f = Module::trivial(2, 4, g.gens().to_vec());
        let om = heller(&f, &g).unwrap();
        assert_eq!(om.dim(), 3);
        let back = heller_inv(&om, &g).unwrap();
        let mut rng = SplitMix64::new(0);
        assert!(is_isomorphic(&back, &f, &mut rng).is_some());
    }

    #[test]
    fn heller_inv_of_trivial_over_e4_is_regular_mod_socle() {
        let g = PGroup::generate(
            4,
            alloc::vec![
                Perm::from_cycles(4, "(1,2)(3,4)").unwrap(),
                Perm::from_cycles(4, "(1,3)(2,4)").unwrap(),
            ],
        )
        .unwrap();
        let f = Module::trivial(2, 4, g.gens().to_vec());
        let omi = heller_inv(&f, &g).unwrap();
        assert_eq!(omi.dim(), 3);
        let rms = regular_mod_socle(2, &g);
        let mut rng = SplitMix64::new(0);
        assert!(is_isomorphic(&omi, &rms, &mut rng).is_some());
    }

    #[test]
    fn general_heller_matches_p_group_heller_on_p_groups() {
        let g = cyclic(3, 3);
        let f = Module::trivial(3, 3, g.gens().to_vec());
        let mut rng = SplitMix64::new(4);
        let a = heller(&f, &g).unwrap();
        let b = heller_general(&f, &g, &mut rng);
        assert!(is_isomorphic(&a, &b, &mut rng).is_some());
    }
}
