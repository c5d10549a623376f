//! Modules over group algebras F_p G, given by one action matrix per
//! group generator.
//!
//! Row-vector convention: the left action `g·v` is the right multiplication
//! `v · mat(g)`, so the matrix of a product is `mat(gh) = mat(h)·mat(g)`
//! and words in generators multiply in reverse.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::gfp::{solve, GFMatrix};
use crate::rng::SplitMix64;
use crate::symgrp::{PGroup, Perm};

use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModError {
    /// Generator count or dimension mismatch between modules.
    Incompatible(&'static str),
    /// A subspace was not invariant under the action.
    NotInvariant,
    /// A permutation could not be written as a word in the stored
    /// generators within the closure cap.
    NotInSpan(String),
    /// The acting group is not a p-group where one is required.
    NotAPGroup,
    /// A Monte Carlo search ran out of budget; retry with a new seed.
    BudgetExhausted(&'static str),
}

impl fmt::Display for ModError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModError::Incompatible(s) => write!(f, "incompatible modules: {s}"),
            ModError::NotInvariant => write!(f, "subspace is not action-invariant"),
            ModError::NotInSpan(s) => write!(f, "permutation {s} not reachable from stored generators"),
            ModError::NotAPGroup => write!(f, "acting group is not a p-group"),
            ModError::BudgetExhausted(s) => write!(f, "search budget exhausted in {s}"),
        }
    }
}

impl core::error::Error for ModError {}

/// An F_p-representation: generator permutations of the acting group plus
/// one invertible matrix per generator.
#[derive(Clone)]
pub struct Module {
    p: u8,
    dim: usize,
    degree: usize,
    gens: Vec<Perm>,
    mats: Vec<GFMatrix>,
}

impl Module {
    pub fn new(p: u8, degree: usize, gens: Vec<Perm>, mats: Vec<GFMatrix>) -> Self {
        let dim = mats.first().map(|m| m.rows()).unwrap_or(0);
        Self::new_with_dim(p, degree, dim, gens, mats)
    }

    /// Like [`Module::new`] but with the dimension explicit, so modules
    /// over the trivial group (no generators) are representable.
    pub fn new_with_dim(p: u8, degree: usize, dim: usize, gens: Vec<Perm>, mats: Vec<GFMatrix>) -> Self {
        assert_eq!(gens.len(), mats.len());
        for (g, m) in gens.iter().zip(&mats) {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            assert_eq!(m.rows(), dim);
            assert_eq!(m.cols(), dim);
            assert_eq!(m.p(), p);
        }
        Module { p, dim, degree, gens, mats }
    }

    /// A module with zero generators (trivial group) of the given dimension.
    pub fn over_trivial_group(p: u8, dim: usize) -> Self {
        Module { p, dim, degree: 1, gens: vec![], mats: vec![] }
    }

    /// Evaluate on an algebra element on this module (the empty module has
    /// no matrices, so the dimension is passed through explicitly).
    pub fn zero_matrix(&self) -> GFMatrix {
        GFMatrix::zeros(self.p, self.dim, self.dim)
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn mats(&self) -> &[GFMatrix] {
        &self.mats
    }

    pub fn mat(&self, i: usize) -> &GFMatrix {
        &self.mats[i]
    }

    /// The trivial one-dimensional module for the given generators.
    pub fn trivial(p: u8, degree: usize, gens: Vec<Perm>) -> Self {
        if gens.is_empty() {
            return Module { p, dim: 1, degree, gens, mats: vec![] };
        }
        let mats = gens.iter().map(|_| GFMatrix::identity(p, 1)).collect();
        Module::new(p, degree, gens, mats)
    }

    /// The sign module (p odd).
    pub fn sign(p: u8, degree: usize, gens: Vec<Perm>) -> Self {
        let mats = gens
            .iter()
            .map(|g| {
                let even = g
                    .cycle_type()
                    .iter()
                    .map(|&l| l - 1)
                    .sum::<usize>()
                    % 2
                    == 0;
                GFMatrix::from_i64(p, 1, 1, &[if even { 1 } else { -1 }])
            })
            .collect();
        Module::new(p, degree, gens, mats)
    }

    /// Permutation module on the natural points: g·e_i = e_{g(i)}.
    pub fn natural_permutation(p: u8, gens: Vec<Perm>) -> Self {
        let degree = gens.first().map(|g| g.degree()).unwrap_or(1);
        let mats = gens
            .iter()
            .map(|g| {
                let mut m = GFMatrix::zeros(p, degree, degree);
                for i in 0..degree {
                    m.set(i, g.apply(i), 1);
                }
                m
            })
            .collect();
        Module::new(p, degree, gens, mats)
    }

    /// Permutation module from an abstract point action: `images[k][x]` is
    /// where generator k sends point x.
    pub fn from_point_action(p: u8, degree: usize, gens: Vec<Perm>, images: &[Vec<u32>]) -> Self {
        let npoints = images.first().map(|v| v.len()).unwrap_or(0);
        let mats = images
            .iter()
            .map(|img| {
                let mut m = GFMatrix::zeros(p, npoints, npoints);
                for (x, &y) in img.iter().enumerate() {
                    m.set(x, y as usize, 1);
                }
                m
            })
            .collect();
        Module::new(p, degree, gens, mats)
    }

    /// The regular module of an explicitly listed group: basis indexed by
    /// the element list, generators act by left multiplication.
    pub fn regular(p: u8, group: &PGroup) -> Self {
        let n = group.order();
        let images: Vec<Vec<u32>> = group
            .gens()
            .iter()
            .map(|g| {
                group
                    .elements()
                    .iter()
                    .map(|h| group.index_of(&g.compose(h)).expect("closed"))
                    .collect()
            })
            .collect();
        let _ = n;
        Module::from_point_action(p, group.degree(), group.gens().to_vec(), &images)
    }

    /// Matrix of the group element `w = gens[i0]·gens[i1]···` (product as
    /// permutations, rightmost applied first).  Anti-homomorphism rule:
    /// the matrices multiply in reverse order.
    pub fn matrix_of_word(&self, word: &[usize]) -> GFMatrix {
        let mut acc = GFMatrix::identity(self.p, self.dim);
        for &i in word.iter().rev() {
            acc = acc.mat_mul(&self.mats[i]).expect("square");
        }
        acc
    }

    pub fn perm_of_word(&self, word: &[usize]) -> Perm {
        let mut acc = Perm::identity(self.degree);
        for &i in word {
            acc = acc.compose(&self.gens[i]);
        }
        acc
    }

    /// Write each target permutation as a word in the stored generators by
    /// breadth-first search through the generated permutation group, then
    /// return the corresponding action matrices.  `cap` bounds the closure.
    pub fn matrices_for(&self, targets: &[Perm], cap: usize) -> Result<Vec<GFMatrix>, ModError> {
        // Fast path: exact generator matches.
        let mut out: Vec<Option<GFMatrix>> = targets
            .iter()
            .map(|t| {
                self.gens
                    .iter()
                    .position(|g| g == t)
                    .map(|i| self.mats[i].clone())
            })
            .collect();
        if out.iter().all(|o| o.is_some()) {
            return Ok(out.into_iter().map(|o| o.unwrap()).collect());
        }
        let words = word_search(&self.gens, targets, cap)?;
        for (slot, word) in out.iter_mut().zip(&words) {
            if slot.is_none() {
                *slot = Some(self.matrix_of_word(word));
            }
        }
        Ok(out.into_iter().map(|o| o.unwrap()).collect())
    }

    /// Restriction to a subgroup given by its generators.
    pub fn restrict(&self, sub_gens: &[Perm], cap: usize) -> Result<Module, ModError> {
        let mats = self.matrices_for(sub_gens, cap)?;
        Ok(Module::new_with_dim(self.p, self.degree, self.dim, sub_gens.to_vec(), mats))
    }

    /// Contragredient dual: inverse-transpose matrices.
    pub fn dual(&self) -> Module {
        let mats = self
            .mats
            .iter()
            .map(|m| m.inverse().expect("action matrix invertible").transpose())
            .collect();
        Module::new_with_dim(self.p, self.degree, self.dim, self.gens.clone(), mats)
    }

    /// Inner tensor product (diagonal action); same acting generators.
    pub fn tensor(&self, other: &Module) -> Result<Module, ModError> {
        if self.gens != other.gens || self.p != other.p {
            return Err(ModError::Incompatible("tensor"));
        }
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.kronecker(b).expect("same p"))
            .collect();
        Ok(Module::new_with_dim(
            self.p,
            self.degree,
            self.dim * other.dim,
            self.gens.clone(),
            mats,
        ))
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module, ModError> {
        if self.gens != other.gens || self.p != other.p {
            return Err(ModError::Incompatible("direct sum"));
        }
        let d = self.dim + other.dim;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = GFMatrix::zeros(self.p, d, d);
                for i in 0..self.dim {
                    for (j, c) in a.row_nonzeros(i) {
                        m.set(i, j, c);
                    }
                }
                for i in 0..other.dim {
                    for (j, c) in b.row_nonzeros(i) {
                        m.set(self.dim + i, self.dim + j, c);
                    }
                }
                m
            })
            .collect();
        Ok(Module::new_with_dim(self.p, self.degree, d, self.gens.clone(), mats))
    }

    /// Submodule on an invariant row space; errors if not invariant.
    pub fn submodule(&self, basis: &GFMatrix) -> Result<Module, ModError> {
        let mats = submodule_action(self.p, &self.mats, basis).ok_or(ModError::NotInvariant)?;
        Ok(Module::new_with_dim(self.p, self.degree, basis.rows(), self.gens.clone(), mats))
    }

    /// Quotient by an invariant row space; returns the quotient module and
    /// the projection matrix (dim × qdim) sending v to its coset
    /// coordinates.
    pub fn quotient(&self, sub_basis: &GFMatrix) -> Result<(Module, GFMatrix), ModError> {
        let (mats, proj) = quotient_action(self.p, self.dim, &self.mats, sub_basis);
        let qdim = proj.cols();
        let qm = Module::new_with_dim(self.p, self.degree, qdim, self.gens.clone(), mats);
        Ok((qm, proj))
    }

    /// Induction from the subgroup H (with the same generators as this
    /// module) to the listed overgroup G.  Basis: transversal × basis.
    pub fn induce(&self, g: &PGroup, h_elem_idx: &[u32]) -> Result<Module, ModError> {
        let h_sub = crate::symgrp::Subgroup {
            elem_idx: h_elem_idx.to_vec(),
            gens: self.gens.clone(),
        };
        let transversal = g.left_transversal(&h_sub);
        let r = transversal.len();
        let d = self.dim;
        // Factor h in H's generators via BFS inside H.
        let h_elems: Vec<Perm> = h_elem_idx
            .iter()
            .map(|&i| g.elements()[i as usize].clone())
            .collect();
        let mut h_mats: BTreeMap<Perm, GFMatrix> = BTreeMap::new();
        {
            let words = word_search(&self.gens, &h_elems, crate::symgrp::CLOSURE_CAP)?;
            for (e, w) in h_elems.iter().zip(&words) {
                h_mats.insert(e.clone(), self.matrix_of_word(w));
            }
        }
        let mut mats = Vec::new();
        for gen in g.gens() {
            let mut m = GFMatrix::zeros(self.p, r * d, r * d);
            for (i, t) in transversal.iter().enumerate() {
                let x = gen.compose(t);
                // find j with x ∈ t_j H
                let mut found = None;
                for (j, tj) in transversal.iter().enumerate() {
                    let h = tj.inverse().compose(&x);
                    if let Some(hm) = h_mats.get(&h) {
                        found = Some((j, hm));
                        break;
                    }
                }
                let (j, hm) = found.expect("transversal covers G");
                for a in 0..d {
                    for (b, c) in hm.row_nonzeros(a) {
                        m.set(i * d + a, j * d + b, c);
                    }
                }
            }
            mats.push(m);
        }
        Ok(Module::new(self.p, g.degree(), g.gens().to_vec(), mats))
    }

    /// Spot-check that the stored matrices satisfy the visible relations of
    /// the generator permutations: generator orders, plus orders of random
    /// short products.
    pub fn validate_relations(&self, rng: &mut SplitMix64, samples: usize) -> bool {
        for (g, m) in self.gens.iter().zip(&self.mats) {
            let ord = g.order();
            let mut acc = GFMatrix::identity(self.p, self.dim);
            for _ in 0..ord {
                acc = acc.mat_mul(m).expect("square");
            }
            if !acc.is_identity() {
                return false;
            }
        }
        if self.gens.is_empty() {
            return true;
        }
        for _ in 0..samples {
            let len = 2 + (rng.next_u64() % 3) as usize;
            let word: Vec<usize> = (0..len)
                .map(|_| (rng.next_u64() % self.gens.len() as u64) as usize)
                .collect();
            let perm = self.perm_of_word(&word);
            let ord = perm.order();
            let base = self.matrix_of_word(&word);
            let mut acc = GFMatrix::identity(self.p, self.dim);
            for _ in 0..ord {
                acc = acc.mat_mul(&base).expect("square");
            }
            if !acc.is_identity() {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module(p={}, dim={}, gens=[{}])",
            self.p,
            self.dim,
            self.gens
                .iter()
                .map(|g| g.to_cycles())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// Action induced on an invariant row space; `None` if not invariant.
pub fn submodule_action(p: u8, mats: &[GFMatrix], basis: &GFMatrix) -> Option<Vec<GFMatrix>> {
    let _ = p;
    mats.iter()
        .map(|m| {
            let image = basis.mat_mul(m).expect("dims");
            solve(basis, &image)
        })
        .collect()
}

/// Action induced on the quotient by an invariant row space, plus the
/// projection matrix (dim × qdim) onto coset coordinates (the coordinates
/// at the non-pivot columns of the subspace echelon).
pub fn quotient_action(
    p: u8,
    dim: usize,
    mats: &[GFMatrix],
    sub_basis: &GFMatrix,
) -> (Vec<GFMatrix>, GFMatrix) {
    let ef = crate::gfp::echelonize(sub_basis);
    let pivots: alloc::collections::BTreeSet<usize> = ef.pivots.iter().copied().collect();
    let free: Vec<usize> = (0..dim).filter(|j| !pivots.contains(j)).collect();
    let qdim = free.len();
    let reduce_row = |row: &GFMatrix, out: &mut GFMatrix, out_row: usize| {
        let mut r = row.clone();
        for (t, &pc) in ef.pivots.iter().enumerate() {
            let c = r.get(0, pc);
            if c != 0 {
                r.axpy_row_from(0, &ef.reduced, t, p - c);
            }
        }
        for (jj, &col) in free.iter().enumerate() {
            let v = r.get(0, col);
            if v != 0 {
                out.set(out_row, jj, v);
            }
        }
    };
    let id = GFMatrix::identity(p, dim);
    let mut proj = GFMatrix::zeros(p, dim, qdim);
    for j in 0..dim {
        reduce_row(&id.select_rows(&[j]), &mut proj, j);
    }
    let qmats: Vec<GFMatrix> = mats
        .iter()
        .map(|m| {
            let mut q = GFMatrix::zeros(p, qdim, qdim);
            for (i, &col) in free.iter().enumerate() {
                let row = id.select_rows(&[col]).mat_mul(m).expect("dims");
                reduce_row(&row, &mut q, i);
            }
            q
        })
        .collect();
    (qmats, proj)
}

/// BFS through the group generated by `gens`, producing a word for each
/// target.  Errors if a target is not reached within `cap` elements.
pub fn word_search(gens: &[Perm], targets: &[Perm], cap: usize) -> Result<Vec<Vec<usize>>, ModError> {
    let degree = gens
        .first()
        .or_else(|| targets.first())
        .map(|g| g.degree())
        .unwrap_or(1);
    let mut words: BTreeMap<Perm, Vec<usize>> = BTreeMap::new();
    words.insert(Perm::identity(degree), vec![]);
    let mut frontier = vec![Perm::identity(degree)];
    let mut missing: usize = targets.iter().filter(|t| !words.contains_key(*t)).count();
    while missing > 0 && !frontier.is_empty() {
        let mut next = Vec::new();
        for x in frontier {
            for (gi, g) in gens.iter().enumerate() {
                let y = g.compose(&x);
                if !words.contains_key(&y) {
                    if words.len() >= cap {
                        return Err(ModError::NotInSpan(
                            targets
                                .iter()
                                .find(|t| !words.contains_key(*t))
                                .map(|t| t.to_cycles())
                                .unwrap_or_default(),
                        ));
                    }
                    // y = g · x: word = [g] ++ word(x)
                    let mut w = vec![gi];
                    w.extend_from_slice(&words[&x]);
                    if targets.contains(&y) {
                        missing -= 1;
                    }
                    words.insert(y.clone(), w);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    targets
        .iter()
        .map(|t| {
            words
                .get(t)
                .cloned()
                .ok_or_else(|| ModError::NotInSpan(t.to_cycles()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::PGroup;

    fn s3_gens() -> Vec<Perm> {
        vec![
            Perm::from_cycles(3, "(1,2,3)").unwrap(),
            Perm::from_cycles(3, "(1,2)").unwrap(),
        ]
    }

    #[test]
    fn word_matrix_convention() {
        // In the natural permutation module of S_3, the matrix of the word
        // [a, b] (element a·b) must be the permutation matrix of a·b.
        let m = Module::natural_permutation(2, s3_gens());
        let ab = m.gens()[0].compose(&m.gens()[1]);
        let direct = Module::natural_permutation(2, vec![ab.clone()]);
        assert_eq!(m.matrix_of_word(&[0, 1]), direct.mats()[0].clone());
        assert_eq!(m.perm_of_word(&[0, 1]), ab);
    }

    #[test]
    fn relations_validate() {
        let mut rng = SplitMix64::new(3);
        for p in [2u8, 3, 5] {
            let m = Module::natural_permutation(p, s3_gens());
            assert!(m.validate_relations(&mut rng, 10));
            let d = m.dual();
            assert!(d.validate_relations(&mut rng, 10));
        }
    }

    #[test]
    fn dual_dual_is_original() {
        let m = Module::natural_permutation(3, s3_gens());
        let dd = m.dual().dual();
        assert_eq!(m.mats(), dd.mats());
    }

    #[test]
    fn tensor_with_trivial() {
        let m = Module::natural_permutation(3, s3_gens());
        let t = Module::trivial(3, 3, s3_gens());
        let mt = t.tensor(&m).unwrap();
        assert_eq!(mt.dim(), m.dim());
        assert_eq!(mt.mats(), m.mats());
    }

    #[test]
    fn regular_module_of_c3() {
        let g = PGroup::generate(3, vec![Perm::from_cycles(3, "(1,2,3)").unwrap()]).unwrap();
        let r = Module::regular(2, &g);
        assert_eq!(r.dim(), 3);
        let mut rng = SplitMix64::new(1);
        assert!(r.validate_relations(&mut rng, 5));
    }

    #[test]
    fn induce_dimension() {
        // Ind_{A_3}^{S_3}(F): dim = [S_3 : A_3] = 2.
        let s3 = PGroup::generate(3, s3_gens()).unwrap();
        let a3 = s3
            .subgroup_generated(&[Perm::from_cycles(3, "(1,2,3)").unwrap()])
            .unwrap();
        let triv = Module::trivial(2, 3, vec![Perm::from_cycles(3, "(1,2,3)").unwrap()]);
        let ind = triv.induce(&s3, &a3.elem_idx).unwrap();
        assert_eq!(ind.dim(), 2);
        let mut rng = SplitMix64::new(1);
        assert!(ind.validate_relations(&mut rng, 10));
    }

    #[test]
    fn restriction_via_words() {
        let m = Module::natural_permutation(2, s3_gens());
        // (2,3) = (1,2,3)·(1,2) reachable by BFS
        let target = Perm::from_cycles(3, "(2,3)").unwrap();
        let r = m.restrict(core::slice::from_ref(&target), 100).unwrap();
        let direct = Module::natural_permutation(2, vec![target]);
        assert_eq!(r.mats(), direct.mats());
    }

    #[test]
    fn quotient_of_natural_module() {
        // The all-ones vector spans a trivial submodule; quotient has dim 2.
        let m = Module::natural_permutation(2, s3_gens());
        let ones = GFMatrix::from_entries(2, 1, 3, &[1, 1, 1]);
        let (q, proj) = m.quotient(&ones).unwrap();
        assert_eq!(q.dim(), 2);
        let mut rng = SplitMix64::new(5);
        assert!(q.validate_relations(&mut rng, 5));
        // proj intertwines: mat_M(g)·proj = proj·mat_Q(g)
        for (a, b) in m.mats().iter().zip(q.mats()) {
            assert_eq!(a.mat_mul(&proj).unwrap(), proj.mat_mul(b).unwrap());
        }
    }
}
