//! Group-algebra elements as linear combinations of words in the acting
//! generators, and the peakword search.

use alloc::vec;
use alloc::vec::Vec;

use crate::gfp::{left_kernel, GFMatrix};
use crate::rng::SplitMix64;

use super::hom::hom_basis_mats;
use super::module::{ModError, Module};

/// Σ c · (product of generators); the empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub terms: Vec<(u8, Vec<usize>)>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluate on an action: Σ c·mat(word).
    pub fn evaluate(&self, p: u8, dim: usize, mats: &[GFMatrix]) -> GFMatrix {
        let mut acc = GFMatrix::zeros(p, dim, dim);
        for (c, word) in &self.terms {
            let mut m = GFMatrix::identity(p, dim);
            for &i in word.iter().rev() {
                m = m.mat_mul(&mats[i]).expect("square");
            }
            for r in 0..dim {
                acc.axpy_row_from(r, &m, r, *c);
            }
        }
        acc
    }

    pub fn evaluate_on(&self, m: &Module) -> GFMatrix {
        self.evaluate(m.p(), m.dim(), m.mats())
    }

    /// A seeded random element: a handful of words of moderate length with
    /// nonzero coefficients, identity included now and then.  Rich enough
    /// for the spectra the peakword search needs.
    pub fn random(rng: &mut SplitMix64, ngens: usize, p: u8) -> Self {
        let nterms = 2 + rng.below(5) as usize;
        let mut terms: Vec<(u8, Vec<usize>)> = (0..nterms)
            .map(|_| {
                let len = 1 + rng.below(6) as usize;
                let word: Vec<usize> = (0..len).map(|_| rng.below(ngens as u64) as usize).collect();
                let c = 1 + rng.below(p as u64 - 1) as u8;
                (c, word)
            })
            .collect();
        if rng.below(2) == 0 {
            terms.push((1 + rng.below(p as u64 - 1) as u8, Vec::new()));
        }
        AlgebraElement { terms }
    }
}

fn nullity(a: &GFMatrix) -> usize {
    a.rows() - crate::gfp::echelonize(a).rank
}

/// Search for an S-peakword for `simples[target]`: an element a with
/// dim ker(a_S) = dim ker(a²_S) = 1 and ker(a_T) = 0 on the other listed
/// simples.  Requires the base field to be a splitting field, i.e.
/// dim End(S) = 1 for every listed simple.
pub fn peakword_search(
    simples: &[Module],
    target: usize,
    budget: usize,
    seed: u64,
) -> Result<AlgebraElement, ModError> {
    for s in simples {
        let e = hom_basis_mats(s.p(), s.dim(), s.mats(), s.dim(), s.mats());
        assert_eq!(e.len(), 1, "field is not a splitting field for a listed simple");
    }
    // Degenerate case: a single one-dimensional simple is peaked by zero.
    if simples.len() == 1 && simples[target].dim() == 1 {
        return Ok(AlgebraElement::zero());
    }
    let p = simples[target].p();
    let ngens = simples[target].gens().len();
    let mut rng = SplitMix64::new(seed);
    for _ in 0..budget {
        let a = AlgebraElement::random(&mut rng, ngens, p);
        if is_peakword(&a, simples, target) {
            return Ok(a);
        }
    }
    Err(ModError::BudgetExhausted("peakword search"))
}

/// Re-verify the defining peakword conditions.
pub fn is_peakword(a: &AlgebraElement, simples: &[Module], target: usize) -> bool {
    for (i, s) in simples.iter().enumerate() {
        let mat = a.evaluate_on(s);
        if i == target {
            if nullity(&mat) != 1 {
                return false;
            }
            let sq = mat.mat_mul(&mat).expect("square");
            if nullity(&sq) != 1 {
                return false;
            }
        } else if nullity(&mat) != 0 {
            return false;
        }
    }
    true
}

/// Union of the kernels ker(a^i) on a module, as a row-space basis:
/// iterate powers until the kernel stabilizes.
pub fn stable_kernel(a: &GFMatrix) -> GFMatrix {
    let mut pow = a.clone();
    let mut prev = left_kernel(&pow);
    loop {
        pow = pow.mat_mul(a).expect("square");
        let next = left_kernel(&pow);
        if next.rows() == prev.rows() {
            return prev;
        }
        prev = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::Perm;

    #[test]
    fn zero_is_peakword_for_unique_trivial_simple() {
        let t = Module::trivial(2, 1, vec![]);
        let a = peakword_search(&[t.clone()], 0, 10, 0).unwrap();
        assert!(a.is_zero());
        assert!(is_peakword(&a, &[t], 0));
    }

    #[test]
    fn g_minus_one_peaks_trivial_over_c2() {
        // For C_2 over GF(2), a = g − 1 = g + 1 has ker(a_F) = F of dim 1.
        let g = Perm::from_cycles(2, "(1,2)").unwrap();
        let f = Module::trivial(2, 2, vec![g]);
        let a = AlgebraElement {
            terms: vec![(1, vec![0]), (1, vec![])],
        };
        assert!(is_peakword(&a, &[f], 0));
    }

    #[test]
    fn evaluate_is_linear_in_terms() {
        let gens = vec![
            Perm::from_cycles(3, "(1,2,3)").unwrap(),
            Perm::from_cycles(3, "(1,2)").unwrap(),
        ];
        let m = Module::natural_permutation(3, gens);
        let a = AlgebraElement { terms: vec![(2, vec![0, 1])] };
        let b = AlgebraElement { terms: vec![(1, vec![1])] };
        let ab = AlgebraElement {
            terms: vec![(2, vec![0, 1]), (1, vec![1])],
        };
        let sum = a.evaluate_on(&m).add(&b.evaluate_on(&m)).unwrap();
        assert_eq!(sum, ab.evaluate_on(&m));
    }
}
