//! Dade-group bookkeeping over the regular elementary abelian subgroups:
//! building the classified endo-permutation module from its exponents,
//! and the normalizer-stability test.

use alloc::vec::Vec;

use crate::modrep::{decompose, heller_power, Module};
use crate::symgrp::{
    elementary_normalizer, regular_elementary, PGroup, Perm, Subgroup, SubgroupLattice,
};

use super::higman::PModuleCtx;
use super::vertex::vertex_class;

/// A Dade-group class over E_{p^d}: exponents n_Q on the subgroups
/// Q < E with |E:Q| ≥ 3, keyed by class id in E's subgroup lattice
/// (E is abelian, so classes are single subgroups).  Omitted exponents
/// are zero; for cyclic E/Q the exponent is read mod 2.
#[derive(Clone, Debug)]
pub struct DadeClass {
    pub p: u8,
    pub d: usize,
    pub exponents: Vec<(usize, i64)>,
}

impl DadeClass {
    pub fn exponent_at(&self, class_id: usize) -> i64 {
        self.exponents
            .iter()
            .find(|(c, _)| *c == class_id)
            .map(|(_, n)| *n)
            .unwrap_or(0)
    }
}

/// The subgroups eligible for exponents: proper, index ≥ 3.
pub fn exponent_domain(e: &PGroup, lattice: &SubgroupLattice) -> Vec<usize> {
    (0..lattice.classes.len())
        .filter(|&c| {
            let o = lattice.classes[c].order;
            o < e.order() && e.order() / o >= 3
        })
        .collect()
}

/// The quotient group E/Q as a permutation group on the cosets, with
/// generators the images of E's generators (possibly trivial).
fn quotient_group(e: &PGroup, q: &Subgroup) -> (PGroup, Vec<Perm>) {
    let transversal = e.left_transversal(q);
    let r = transversal.len();
    // coset index of an element
    let coset_of = |x: &Perm| -> usize {
        for (j, t) in transversal.iter().enumerate() {
            let h = t.inverse().compose(x);
            let hi = e.index_of(&h).expect("in group");
            if q.elem_idx.binary_search(&hi).is_ok() {
                return j;
            }
        }
        unreachable!("transversal covers")
    };
    let images: Vec<Perm> = e
        .gens()
        .iter()
        .map(|g| {
            let imgs: Vec<u8> = (0..r)
                .map(|j| coset_of(&g.compose(&transversal[j])) as u8)
                .collect();
            Perm::from_images(imgs).expect("coset action")
        })
        .collect();
    let qg = PGroup::generate(r, images.clone()).expect("small");
    (qg, images)
}

/// Build Ω^{n}(F_{E/Q}) inflated to E: the quotient module's matrices,
/// re-labelled by E's generators.
fn inflated_heller(p: u8, e: &PGroup, q: &Subgroup, n: i64) -> Module {
    let (qg, images) = quotient_group(e, q);
    // Module over the quotient with generator list = the images of E's
    // generators, so inflation is just a relabelling.
    let f = Module::trivial(p, qg.degree(), images);
    // heller_power needs the module generators to match the group's; the
    // quotient group was generated from exactly these images.
    let om = heller_power_with_group(&f, &qg, n);
    Module::new(p, e.degree(), e.gens().to_vec(), om.mats().to_vec())
}

fn heller_power_with_group(m: &Module, group: &PGroup, n: i64) -> Module {
    // element_matrices requires module gens == group gens; the quotient
    // group's stored generators may differ from the image list (duplicates
    // or identities removed by closure), so rebuild on the group's gens.
    let mats = m
        .matrices_for(group.gens(), crate::symgrp::CLOSURE_CAP)
        .expect("images generate");
    let mm = Module::new(m.p(), group.degree(), group.gens().to_vec(), mats);
    let om = heller_power(&mm, group, n).expect("p-group");
    // translate back to the original generator list
    let back = om
        .matrices_for(m.gens(), crate::symgrp::CLOSURE_CAP)
        .expect("same group");
    Module::new(m.p(), m.degree(), m.gens().to_vec(), back)
}

/// The unique vertex-E indecomposable summand of
/// ⊗_{|E:Q| ≥ 3} Inf_{E/Q}^E(Ω^{n_Q}(F_{E/Q})), computed with projective
/// summands stripped after every tensor step.
pub fn dade_candidate(class: &DadeClass, seed: u64) -> Module {
    let e = regular_elementary(class.p, class.d).expect("small");
    let lattice = e.subgroup_classes().expect("small");
    let domain = exponent_domain(&e, &lattice);
    let p = class.p;
    let mut acc = Module::trivial(p, e.degree(), e.gens().to_vec());
    for &cid in &domain {
        let n_q = class.exponent_at(cid);
        if n_q == 0 {
            continue;
        }
        let q = &lattice.subgroups[lattice.classes[cid].rep];
        let factor = inflated_heller(p, &e, q, n_q);
        acc = acc.tensor(&factor).expect("same gens");
        acc = nonprojective_part(&acc, &e, seed ^ cid as u64);
    }
    // Final pass: the unique summand with vertex E.
    let certs = decompose(&acc, Some(&e), seed ^ 0xdade);
    let mut found: Option<Module> = None;
    for cert in certs {
        let ctx = PModuleCtx::new(&cert.module, &e);
        let vc = vertex_class(&ctx, &lattice);
        if lattice.classes[vc].order == e.order() {
            assert!(found.is_none(), "vertex-E summand must be unique");
            found = Some(cert.module);
        }
    }
    found.expect("no vertex-E summand: inconsistent exponents")
}

/// The direct sum of the non-projective summands.
fn nonprojective_part(m: &Module, e: &PGroup, seed: u64) -> Module {
    let certs = decompose(m, Some(e), seed);
    let mut acc: Option<Module> = None;
    for cert in certs {
        if cert.projective {
            continue;
        }
        acc = Some(match acc {
            None => cert.module,
            Some(a) => a.direct_sum(&cert.module).expect("same gens"),
        });
    }
    acc.unwrap_or_else(|| {
        let zeros: Vec<crate::gfp::GFMatrix> = m
            .mats()
            .iter()
            .map(|_| crate::gfp::GFMatrix::zeros(m.p(), 0, 0))
            .collect();
        Module::new(m.p(), m.degree(), m.gens().to_vec(), zeros)
    })
}

/// Stability under N_{S_{p^d}}(E): the exponent function must be constant
/// on the normalizer orbits of the subgroups (mod 2 where E/Q is cyclic).
pub fn check_stability(class: &DadeClass) -> bool {
    let e = regular_elementary(class.p, class.d).expect("small");
    let lattice = e.subgroup_classes().expect("small");
    let domain = exponent_domain(&e, &lattice);
    let n = elementary_normalizer(class.p, class.d).expect("small");
    // Orbits of N on the subgroups of E (as element sets of E).
    let mut orbit_of: Vec<Option<usize>> = alloc::vec![None; lattice.subgroups.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let find_subgroup = |idx_set: &[u32]| -> usize {
        lattice
            .subgroups
            .iter()
            .position(|s| s.elem_idx == idx_set)
            .expect("closed under normalizer conjugation")
    };
    for s in 0..lattice.subgroups.len() {
        if orbit_of[s].is_some() {
            continue;
        }
        let oid = orbits.len();
        let mut members = alloc::vec![s];
        orbit_of[s] = Some(oid);
        let mut w = 0;
        while w < members.len() {
            let cur = members[w];
            for g in n.gens() {
                let ginv = g.inverse();
                let mut conj: Vec<u32> = lattice.subgroups[cur]
                    .elem_idx
                    .iter()
                    .map(|&i| {
                        let c = g.compose(&e.elements()[i as usize]).compose(&ginv);
                        e.index_of(&c).expect("N normalizes E")
                    })
                    .collect();
                conj.sort_unstable();
                let j = find_subgroup(&conj);
                if orbit_of[j].is_none() {
                    orbit_of[j] = Some(oid);
                    members.push(j);
                }
            }
            w += 1;
        }
        orbits.push(members);
    }
    // Constancy over each orbit restricted to the exponent domain.
    for orbit in &orbits {
        let in_domain: Vec<usize> = orbit
            .iter()
            .map(|&s| lattice.class_of[s])
            .filter(|c| domain.contains(c))
            .collect();
        if in_domain.len() < 2 {
            continue;
        }
        let cyclic = {
            let o = lattice.classes[in_domain[0]].order;
            e.order() / o == class.p as usize
        };
        let norm = |v: i64| if cyclic { v.rem_euclid(2) } else { v };
        let first = norm(class.exponent_at(in_domain[0]));
        if !in_domain.iter().all(|&c| norm(class.exponent_at(c)) == first) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::is_isomorphic;
    use crate::rng::SplitMix64;

    #[test]
    fn empty_exponents_give_trivial_module() {
        let class = DadeClass { p: 2, d: 2, exponents: alloc::vec![] };
        let m = dade_candidate(&class, 0);
        assert_eq!(m.dim(), 1);
    }

    #[test]
    fn heller_exponent_one_at_trivial_subgroup() {
        // n_1 = 1, nothing else: the candidate is Ω(F) over E_4, dim 3.
        let e = regular_elementary(2, 2).unwrap();
        let lattice = e.subgroup_classes().unwrap();
        let trivial_class = (0..lattice.classes.len())
            .find(|&c| lattice.classes[c].order == 1)
            .unwrap();
        let class = DadeClass {
            p: 2,
            d: 2,
            exponents: alloc::vec![(trivial_class, 1)],
        };
        let m = dade_candidate(&class, 0);
        assert_eq!(m.dim(), 3);
        let f = Module::trivial(2, 4, e.gens().to_vec());
        let om = crate::modrep::heller(&f, &e).unwrap();
        let mut rng = SplitMix64::new(0);
        assert!(is_isomorphic(&m, &om, &mut rng).is_some());
    }

    #[test]
    fn stability_of_uniform_and_skew_exponents() {
        let e = regular_elementary(2, 3).unwrap();
        let lattice = e.subgroup_classes().unwrap();
        let order2: Vec<usize> = (0..lattice.classes.len())
            .filter(|&c| lattice.classes[c].order == 2)
            .collect();
        assert_eq!(order2.len(), 7);
        let trivial_class = (0..lattice.classes.len())
            .find(|&c| lattice.classes[c].order == 1)
            .unwrap();
        // Uniform −1 on all order-2 subgroups, anything at 1: stable.
        let mut exps: Vec<(usize, i64)> = order2.iter().map(|&c| (c, -1)).collect();
        exps.push((trivial_class, 3));
        assert!(check_stability(&DadeClass { p: 2, d: 3, exponents: exps.clone() }));
        // Distinguishing two order-2 subgroups: unstable, since GL_3(2)
        // acts transitively on them.
        exps[0].1 = 1;
        assert!(!check_stability(&DadeClass { p: 2, d: 3, exponents: exps }));
    }
}
