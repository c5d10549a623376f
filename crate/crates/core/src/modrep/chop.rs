//! Composition factors by the MeatAxe chop with Norton's irreducibility
//! test.
//!
//! Splitting evidence is sound for any kernel vector; the irreducibility
//! conclusion is drawn only from algebra elements of nullity one, which
//! exist whenever the simple is absolutely irreducible — the case
//! throughout this crate, where F_p is a splitting field.

use alloc::vec::Vec;

use crate::gfp::{left_kernel, GFMatrix};
use crate::rng::SplitMix64;

use super::hom::hom_basis_mats;
use super::module::{quotient_action, submodule_action, Module};
use super::spin::spin;
use super::words::AlgebraElement;

const CHOP_ATTEMPTS: usize = 600;

/// Composition factors of the action as bare matrix lists.
pub fn chop_mats(p: u8, dim: usize, mats: &[GFMatrix], rng: &mut SplitMix64) -> Vec<Vec<GFMatrix>> {
    let mut out = Vec::new();
    chop_rec(p, dim, mats, rng, &mut out);
    out
}

fn chop_rec(p: u8, dim: usize, mats: &[GFMatrix], rng: &mut SplitMix64, out: &mut Vec<Vec<GFMatrix>>) {
    if dim == 0 {
        return;
    }
    if mats.is_empty() {
        // Trivial algebra: everything is a sum of one-dimensional pieces.
        for _ in 0..dim {
            out.push(Vec::new());
        }
        return;
    }
    if dim == 1 {
        out.push(mats.to_vec());
        return;
    }
    fn split(
        p: u8,
        dim: usize,
        mats: &[GFMatrix],
        sub_basis: &GFMatrix,
        rng: &mut SplitMix64,
        out: &mut Vec<Vec<GFMatrix>>,
    ) {
        let sub_mats = submodule_action(p, mats, sub_basis).expect("invariant");
        let (q_mats, _) = quotient_action(p, dim, mats, sub_basis);
        chop_rec(p, sub_basis.rows(), &sub_mats, rng, out);
        chop_rec(p, dim - sub_basis.rows(), &q_mats, rng, out);
    }
    for _ in 0..CHOP_ATTEMPTS {
        let a = AlgebraElement::random(rng, mats.len(), p);
        let am = a.evaluate(p, dim, mats);
        let ker = left_kernel(&am);
        let k = ker.rows();
        if k == 0 || k == dim {
            continue;
        }
        // Any kernel vector generating a proper closure splits M.
        for i in 0..k {
            let sp = spin(p, dim, mats, &ker.select_rows(&[i]));
            if sp.dim() < dim {
                split(p, dim, mats, &sp.basis, rng, out);
                return;
            }
        }
        if k > 1 {
            // Cannot conclude irreducibility from a fat kernel.
            continue;
        }
        // Norton: one dual kernel vector of the transposed action.
        let tr_mats: Vec<GFMatrix> = mats.iter().map(|m| m.transpose()).collect();
        let dual_ker = left_kernel(&am.transpose());
        debug_assert!(dual_ker.rows() >= 1);
        let sp = spin(p, dim, &tr_mats, &dual_ker.select_rows(&[0]));
        if sp.dim() == dim {
            out.push(mats.to_vec());
            return;
        }
        // The annihilator of a proper dual submodule is a proper submodule.
        let ann = left_kernel(&sp.basis.transpose());
        debug_assert!(ann.rows() > 0 && ann.rows() < dim);
        split(p, dim, mats, &ann, rng, out);
        return;
    }
    panic!("chop: attempt budget exhausted at dim {dim} (non-split field?)");
}

/// Composition factors with multiplicities, as modules over the same
/// generators.
pub fn chop(m: &Module, rng: &mut SplitMix64) -> Vec<(Module, usize)> {
    let factors = chop_mats(m.p(), m.dim(), m.mats(), rng);
    let mut grouped: Vec<(Module, usize)> = Vec::new();
    'next: for f in factors {
        let fdim = f.first().map(|x| x.rows()).unwrap_or(1);
        let fm = Module::new_with_dim(m.p(), m.degree(), fdim, m.gens().to_vec(), f);
        for (rep, count) in grouped.iter_mut() {
            if rep.dim() == fm.dim() && iso_simple(rep, &fm, rng) {
                *count += 1;
                continue 'next;
            }
        }
        grouped.push((fm, 1));
    }
    grouped
}

/// Isomorphism of simple modules: any nonzero hom is invertible.
fn iso_simple(a: &Module, b: &Module, _rng: &mut SplitMix64) -> bool {
    let h = hom_basis_mats(a.p(), a.dim(), a.mats(), b.dim(), b.mats());
    !h.is_empty()
}
