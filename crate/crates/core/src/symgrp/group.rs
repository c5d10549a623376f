//! Explicit small permutation groups: element lists, subgroup lattices,
//! conjugacy of subgroups, normalizers, transversals.
//!
//! Everything here enumerates elements, so orders are capped (2^16 for
//! closure, 2^14 for lattices).  That covers the Sylow subgroups and
//! normalizer overgroups the pipeline needs; nothing resembling a
//! Schreier–Sims chain is attempted.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::perm::Perm;
use super::SymError;

pub const CLOSURE_CAP: usize = 1 << 16;
pub const LATTICE_CAP: usize = 1 << 14;

/// A finite permutation group with a full element list.  `p` is set when
/// the group is tagged (and verified) as a p-group.
#[derive(Clone, Debug)]
pub struct PGroup {
    degree: usize,
    gens: Vec<Perm>,
    /// All elements, sorted by image sequence; index 0 need not be the
    /// identity, use `identity_index`.
    elements: Vec<Perm>,
    p: Option<u8>,
}

/// A subgroup of a fixed parent [`PGroup`], stored by sorted element
/// indices into the parent's element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elem_idx: Vec<u32>,
    pub gens: Vec<Perm>,
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Index of the representative in `SubgroupLattice::subgroups`.
    pub rep: usize,
    pub order: usize,
    /// All members of the conjugacy class, as lattice indices.
    pub members: Vec<usize>,
    /// Generators of the normalizer N_G(rep).
    pub normalizer_gens: Vec<Perm>,
    pub normalizer_order: usize,
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub subgroups: Vec<Subgroup>,
    /// Conjugacy class id of each subgroup.
    pub class_of: Vec<usize>,
    pub classes: Vec<SubgroupClass>,
}

impl PGroup {
    /// Close the generators under multiplication.  Errors out when the cap
    /// is exceeded.
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Self, SymError> {
        Self::generate_capped(degree, gens, CLOSURE_CAP)
    }

    pub fn generate_capped(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self, SymError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(SymError::DegreeMismatch);
            }
        }
        let mut set: BTreeSet<Perm> = BTreeSet::new();
        let mut frontier = vec![Perm::identity(degree)];
        set.insert(frontier[0].clone());
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = g.compose(&x);
                if !set.contains(&y) {
                    if set.len() >= cap {
                        return Err(SymError::OrderCapExceeded);
                    }
                    set.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        let elements: Vec<Perm> = set.into_iter().collect();
        let p = prime_power_base(elements.len());
        Ok(PGroup { degree, gens, elements, p })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The prime p when |G| is a p-power (and > 1).
    pub fn p(&self) -> Option<u8> {
        self.p
    }

    pub fn index_of(&self, x: &Perm) -> Option<u32> {
        self.elements.binary_search(x).ok().map(|i| i as u32)
    }

    pub fn contains(&self, x: &Perm) -> bool {
        self.index_of(x).is_some()
    }

    pub fn identity_index(&self) -> u32 {
        self.index_of(&Perm::identity(self.degree)).expect("identity")
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn exponent_divides(&self, e: usize) -> bool {
        self.elements.iter().all(|g| g.pow(e as i64).is_identity())
    }

    /// Orbits of the natural action on {0..degree-1}.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            let mut orbit = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < orbit.len() {
                for g in &self.gens {
                    let t = g.apply(orbit[i]);
                    if !seen[t] {
                        seen[t] = true;
                        orbit.push(t);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            elem_idx: (0..self.order() as u32).collect(),
            gens: self.gens.clone(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            elem_idx: vec![self.identity_index()],
            gens: vec![],
        }
    }

    /// Subgroup generated by elements of this group.
    pub fn subgroup_generated(&self, gens: &[Perm]) -> Result<Subgroup, SymError> {
        let mut idx = BTreeSet::new();
        idx.insert(self.identity_index());
        let mut frontier = vec![Perm::identity(self.degree)];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = g.compose(&x);
                let Some(i) = self.index_of(&y) else {
                    return Err(SymError::NotInGroup);
                };
                if idx.insert(i) {
                    frontier.push(y);
                }
            }
        }
        Ok(Subgroup {
            elem_idx: idx.into_iter().collect(),
            gens: gens.to_vec(),
        })
    }

    /// Subgroup from an element-index set, with a small generating set
    /// extracted greedily.
    pub fn subgroup_from_indices(&self, idx: Vec<u32>) -> Subgroup {
        let mut gens: Vec<Perm> = Vec::new();
        let mut have: BTreeSet<u32> = BTreeSet::new();
        have.insert(self.identity_index());
        for &i in &idx {
            if have.contains(&i) {
                continue;
            }
            gens.push(self.elements[i as usize].clone());
            // re-close
            let sub = self.subgroup_generated(&gens).expect("indices in group");
            have = sub.elem_idx.iter().copied().collect();
            if have.len() == idx.len() {
                break;
            }
        }
        Subgroup { elem_idx: idx, gens }
    }

    /// Left transversal of H in G: representatives t with G = ⊔ tH,
    /// deterministic (first element of each coset in sorted order).
    pub fn left_transversal(&self, h: &Subgroup) -> Vec<Perm> {
        let in_h: BTreeSet<u32> = h.elem_idx.iter().copied().collect();
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            reps.push(g.clone());
            // mark the coset gH
            for &hi in &in_h {
                let gh = g.compose(&self.elements[hi as usize]);
                let j = self.index_of(&gh).expect("closed");
                covered[j as usize] = true;
            }
        }
        reps
    }

    pub fn conjugate_subgroup_indices(&self, h: &Subgroup, g: &Perm) -> Vec<u32> {
        let ginv = g.inverse();
        let mut out: Vec<u32> = h
            .elem_idx
            .iter()
            .map(|&i| {
                let c = g.compose(&self.elements[i as usize]).compose(&ginv);
                self.index_of(&c).expect("conjugation stays in G")
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Elements of G normalizing H.
    pub fn normalizer_indices(&self, h: &Subgroup) -> Vec<u32> {
        let in_h: BTreeSet<u32> = h.elem_idx.iter().copied().collect();
        let mut out = Vec::new();
        'outer: for (i, g) in self.elements.iter().enumerate() {
            let ginv = g.inverse();
            for hg in &h.gens {
                let c = g.compose(hg).compose(&ginv);
                match self.index_of(&c) {
                    Some(j) if in_h.contains(&j) => {}
                    _ => continue 'outer,
                }
            }
            out.push(i as u32);
        }
        out
    }

    /// Are two subgroups conjugate in G?  Brute force over elements.
    pub fn are_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        if a.elem_idx.len() != b.elem_idx.len() {
            return false;
        }
        if a.elem_idx == b.elem_idx {
            return true;
        }
        self.elements
            .iter()
            .any(|g| self.conjugate_subgroup_indices(a, g) == b.elem_idx)
    }

    /// Is some G-conjugate of `a` contained in `b`?
    pub fn conjugate_into(&self, a: &Subgroup, b: &Subgroup) -> bool {
        if a.elem_idx.len() > b.elem_idx.len() {
            return false;
        }
        self.elements.iter().any(|g| {
            self.conjugate_subgroup_indices(a, g)
                .iter()
                .all(|i| b.elem_idx.binary_search(i).is_ok())
        })
    }

    /// All subgroups with conjugacy classes and normalizers, by bottom-up
    /// cyclic-subgroup closure: collect the cyclic subgroups, then join
    /// every known subgroup with every cyclic one until stable,
    /// deduplicating by sorted element lists.
    pub fn subgroup_classes(&self) -> Result<SubgroupLattice, SymError> {
        if self.order() > LATTICE_CAP {
            return Err(SymError::OrderCapExceeded);
        }
        let id_idx = self.identity_index();

        // All cyclic subgroups, dedup by element set.
        let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        let mut subgroups: Vec<Subgroup> = Vec::new();
        let add = |sub: Subgroup, seen: &mut BTreeMap<Vec<u32>, usize>, subs: &mut Vec<Subgroup>| -> bool {
            if seen.contains_key(&sub.elem_idx) {
                false
            } else {
                seen.insert(sub.elem_idx.clone(), subs.len());
                subs.push(sub);
                true
            }
        };
        add(self.trivial_subgroup(), &mut seen, &mut subgroups);
        let mut cyclics: Vec<usize> = vec![0];
        for g in &self.elements {
            if g.is_identity() {
                continue;
            }
            let mut idx = BTreeSet::new();
            idx.insert(id_idx);
            let mut x = g.clone();
            while !x.is_identity() {
                idx.insert(self.index_of(&x).expect("closed"));
                x = g.compose(&x);
            }
            let sub = Subgroup {
                elem_idx: idx.into_iter().collect(),
                gens: vec![g.clone()],
            };
            let fresh = add(sub, &mut seen, &mut subgroups);
            if fresh {
                cyclics.push(subgroups.len() - 1);
            }
        }
        let cyclic_list = cyclics.clone();

        // Worklist of subgroups to join against every cyclic subgroup.
        let mut queue: Vec<usize> = (0..subgroups.len()).collect();
        while let Some(hi) = queue.pop() {
            for &ci in &cyclic_list {
                let (h, c) = (&subgroups[hi], &subgroups[ci]);
                if c.elem_idx.iter().all(|i| h.elem_idx.binary_search(i).is_ok()) {
                    continue;
                }
                let mut gens = h.gens.clone();
                gens.extend(c.gens.iter().cloned());
                let join = self.subgroup_generated(&gens)?;
                if add(join, &mut seen, &mut subgroups) {
                    queue.push(subgroups.len() - 1);
                }
            }
        }

        // Conjugacy classes: orbits of G on the subgroup set.
        let n_subs = subgroups.len();
        let mut class_of = vec![usize::MAX; n_subs];
        let mut classes: Vec<SubgroupClass> = Vec::new();
        for s in 0..n_subs {
            if class_of[s] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![s];
            class_of[s] = cid;
            let mut w = 0;
            while w < members.len() {
                let cur = members[w];
                for g in &self.elements {
                    let conj = self.conjugate_subgroup_indices(&subgroups[cur], g);
                    let j = *seen.get(&conj).expect("conjugate subgroup is a subgroup");
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                    }
                }
                w += 1;
            }
            members.sort_unstable();
            let norm_idx = self.normalizer_indices(&subgroups[s]);
            let norm_order = norm_idx.len();
            let norm_sub = self.subgroup_from_indices(norm_idx);
            classes.push(SubgroupClass {
                rep: s,
                order: subgroups[s].elem_idx.len(),
                members,
                normalizer_gens: norm_sub.gens,
                normalizer_order: norm_order,
            });
        }
        Ok(SubgroupLattice {
            subgroups,
            class_of,
            classes,
        })
    }

    /// Independent subgroup enumeration for testing: grow order by order,
    /// extending each subgroup by normalizing elements with p-th power
    /// inside.  Valid for p-groups only.
    pub fn enumerate_subgroups_oracle(&self) -> Result<usize, SymError> {
        let Some(p) = self.p else {
            return Err(SymError::NotAPGroup);
        };
        let p = p as i64;
        let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
        all.insert(self.trivial_subgroup().elem_idx);
        let mut layer: Vec<Subgroup> = vec![self.trivial_subgroup()];
        while !layer.is_empty() {
            let mut next: BTreeMap<Vec<u32>, Subgroup> = BTreeMap::new();
            for h in &layer {
                for ni in self.normalizer_indices(h) {
                    let g = &self.elements[ni as usize];
                    if h.elem_idx.binary_search(&ni).is_ok() {
                        continue;
                    }
                    let gp = g.pow(p);
                    let gp_i = self.index_of(&gp).expect("closed");
                    if h.elem_idx.binary_search(&gp_i).is_err() {
                        continue;
                    }
                    // K = H⟨g⟩ = ∪ H·g^i
                    let mut idx = BTreeSet::new();
                    for &hi in &h.elem_idx {
                        let mut x = self.elements[hi as usize].clone();
                        for _ in 0..p {
                            idx.insert(self.index_of(&x).expect("closed"));
                            x = x.compose(g);
                        }
                    }
                    let key: Vec<u32> = idx.into_iter().collect();
                    if !all.contains(&key) && !next.contains_key(&key) {
                        let mut gens = h.gens.clone();
                        gens.push(g.clone());
                        next.insert(key.clone(), Subgroup { elem_idx: key, gens });
                    }
                }
            }
            layer = next.into_values().collect();
            for s in &layer {
                all.insert(s.elem_idx.clone());
            }
        }
        Ok(all.len())
    }
}

fn prime_power_base(order: usize) -> Option<u8> {
    if order < 2 {
        return None;
    }
    for p in [2u8, 3, 5, 7, 11, 13] {
        let mut m = order;
        while m % p as usize == 0 {
            m /= p as usize;
        }
        if m == 1 {
            return Some(p);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> PGroup {
        PGroup::generate(2, vec![Perm::from_cycles(2, "(1,2)").unwrap()]).unwrap()
    }

    fn e4() -> PGroup {
        PGroup::generate(
            4,
            vec![
                Perm::from_cycles(4, "(1,2)(3,4)").unwrap(),
                Perm::from_cycles(4, "(1,3)(2,4)").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(c2().order(), 2);
        assert_eq!(e4().order(), 4);
        let s3 = PGroup::generate(
            3,
            vec![
                Perm::from_cycles(3, "(1,2)").unwrap(),
                Perm::from_cycles(3, "(1,2,3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.p(), None);
        assert_eq!(e4().p(), Some(2));
    }

    #[test]
    fn lattice_of_c2() {
        let g = c2();
        let lat = g.subgroup_classes().unwrap();
        assert_eq!(lat.subgroups.len(), 2);
        assert_eq!(lat.classes.len(), 2);
    }

    #[test]
    fn lattice_of_e4_counts() {
        let g = e4();
        let lat = g.subgroup_classes().unwrap();
        // 1 trivial, 3 of order 2, 1 of order 4; all normal (abelian).
        assert_eq!(lat.subgroups.len(), 5);
        assert_eq!(lat.classes.len(), 5);
        let mut by_order = BTreeMap::new();
        for c in &lat.classes {
            *by_order.entry(c.order).or_insert(0usize) += c.members.len();
        }
        assert_eq!(by_order.get(&1), Some(&1));
        assert_eq!(by_order.get(&2), Some(&3));
        assert_eq!(by_order.get(&4), Some(&1));
    }

    #[test]
    fn e4_brute_force_subsets_oracle() {
        // Brute force over all subsets of E4 closed under multiplication.
        let g = e4();
        let n = g.order();
        let mut count = 0;
        for mask in 0..(1u32 << n) {
            let idx: Vec<u32> = (0..n as u32).filter(|i| mask >> i & 1 == 1).collect();
            if idx.is_empty() || idx.binary_search(&g.identity_index()).is_err() {
                continue;
            }
            let closed = idx.iter().all(|&a| {
                idx.iter().all(|&b| {
                    let prod = g.elements()[a as usize].compose(&g.elements()[b as usize]);
                    idx.binary_search(&g.index_of(&prod).unwrap()).is_ok()
                })
            });
            if closed {
                count += 1;
            }
        }
        assert_eq!(count, g.subgroup_classes().unwrap().subgroups.len());
        assert_eq!(count, g.enumerate_subgroups_oracle().unwrap());
    }

    #[test]
    fn transversal_partitions_group() {
        let g = e4();
        let lat = g.subgroup_classes().unwrap();
        for c in &lat.classes {
            let h = &lat.subgroups[c.rep];
            let t = g.left_transversal(h);
            assert_eq!(t.len() * h.elem_idx.len(), g.order());
        }
    }
}
