//! Permutation-module recognition over a p-group: every indecomposable
//! summand must be isomorphic to some Ind_Q^P(F) (those are the
//! indecomposable transitive permutation modules, one per subgroup up to
//! conjugacy, each with trivial source and vertex Q).

use alloc::vec::Vec;

use crate::modrep::{decompose, is_isomorphic, Module};
use crate::rng::SplitMix64;
use crate::symgrp::{PGroup, SubgroupLattice};

/// The certificate: (subgroup class id, multiplicity) per transitive
/// constituent, or `None` when some summand is not of that shape.
pub fn is_permutation_module(
    m: &Module,
    group: &PGroup,
    lattice: &SubgroupLattice,
    seed: u64,
) -> Option<Vec<(usize, usize)>> {
    let certs = decompose(m, Some(group), seed ^ 0x7065726d);
    let mut rng = SplitMix64::new(seed).fork(0x7065);
    let mut counts: Vec<(usize, usize)> = Vec::new();
    'next: for cert in certs {
        let d = cert.module.dim();
        if d == 0 || group.order() % d != 0 {
            return None;
        }
        let order_q = group.order() / d;
        for (cid, class) in lattice.classes.iter().enumerate() {
            if class.order != order_q {
                continue;
            }
            let q = &lattice.subgroups[class.rep];
            let ind = induced_trivial(m.p(), group, cid, lattice);
            if is_isomorphic(&cert.module, &ind, &mut rng).is_some() {
                match counts.iter_mut().find(|(c, _)| *c == cid) {
                    Some((_, k)) => *k += 1,
                    None => counts.push((cid, 1)),
                }
                let _ = q;
                continue 'next;
            }
        }
        return None;
    }
    counts.sort_unstable();
    Some(counts)
}

/// Ind_Q^P(F) for a lattice class.
pub fn induced_trivial(p: u8, group: &PGroup, class_id: usize, lattice: &SubgroupLattice) -> Module {
    let q = &lattice.subgroups[lattice.classes[class_id].rep];
    let triv = Module::trivial(p, group.degree(), q.gens.clone());
    triv.induce(group, &q.elem_idx).expect("listed subgroup")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::regular_elementary;

    #[test]
    fn trivial_plus_regular_is_recognized() {
        let g = regular_elementary(2, 2).unwrap();
        let lat = g.subgroup_classes().unwrap();
        let m = Module::trivial(2, 4, g.gens().to_vec())
            .direct_sum(&Module::regular(2, &g))
            .unwrap();
        let cert = is_permutation_module(&m, &g, &lat, 0).expect("permutation module");
        // One transitive constituent for Q = P (the trivial summand),
        // one for Q = 1 (the regular summand).
        assert_eq!(cert.len(), 2);
        let orders: Vec<usize> = cert.iter().map(|&(c, _)| lat.classes[c].order).collect();
        assert!(orders.contains(&1));
        assert!(orders.contains(&4));
    }

    #[test]
    fn heller_translate_is_not_a_permutation_module() {
        let g = regular_elementary(2, 2).unwrap();
        let lat = g.subgroup_classes().unwrap();
        let f = Module::trivial(2, 4, g.gens().to_vec());
        let om = crate::modrep::heller(&f, &g).unwrap();
        assert!(is_permutation_module(&om, &g, &lat, 0).is_none());
    }
}
