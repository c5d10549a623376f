//! Homomorphism spaces between modules, by the standard-basis method: spin
//! the source from a generating sequence, carry one word matrix per spun
//! node over the target, and filter candidate seed-images through the
//! recorded product relations.

use alloc::vec;
use alloc::vec::Vec;

use crate::gfp::{left_kernel, GFMatrix};
use crate::rng::SplitMix64;

use super::module::Module;
use super::spin::{spin_standard, SpinResult};

/// Basis of the space of intertwiners H with mat_M(g)·H = H·mat_N(g) for
/// every generator g, as dim_M × dim_N matrices over the original bases.
pub fn hom_basis_mats(
    p: u8,
    dim_m: usize,
    m_mats: &[GFMatrix],
    dim_n: usize,
    n_mats: &[GFMatrix],
) -> Vec<GFMatrix> {
    assert_eq!(m_mats.len(), n_mats.len(), "generator count mismatch");
    if dim_m == 0 || dim_n == 0 {
        return Vec::new();
    }
    let sp: SpinResult = spin_standard(p, dim_m, m_mats);
    let r = sp.seed_count();
    let k_nodes = sp.dim();

    // Word matrices over N, one per spun node.
    let mut w: Vec<GFMatrix> = Vec::with_capacity(k_nodes);
    for node in &sp.nodes {
        match *node {
            super::spin::SpinNode::Seed { .. } => w.push(GFMatrix::identity(p, dim_n)),
            super::spin::SpinNode::Child { parent, gen } => {
                w.push(w[parent].mat_mul(&n_mats[gen]).expect("square"))
            }
        }
    }

    // Solution space over the unknown seed images, filtered per relation.
    let unknowns = r * dim_n;
    let mut k = GFMatrix::identity(p, unknowns);
    for rel in &sp.relations {
        if k.rows() == 0 {
            break;
        }
        // Condition block: for seed s the contribution
        //   [s == seed(rel.node)]·W_node·N_gen − Σ_{j: seed(j)=s} c_j·W_j.
        let mut c_rel = GFMatrix::zeros(p, unknowns, dim_n);
        let lead = w[rel.node].mat_mul(&n_mats[rel.gen]).expect("square");
        let si = sp.node_seed[rel.node];
        for row in 0..dim_n {
            c_rel.axpy_row_from(si * dim_n + row, &lead, row, 1);
        }
        for (j, &c) in rel.coeffs.iter().enumerate() {
            if c != 0 {
                let s = sp.node_seed[j];
                for row in 0..dim_n {
                    c_rel.axpy_row_from(s * dim_n + row, &w[j], row, p - c);
                }
            }
        }
        let proj = k.mat_mul(&c_rel).expect("dims");
        let lk = left_kernel(&proj);
        if lk.rows() == k.rows() {
            continue;
        }
        k = lk.mat_mul(&k).expect("dims");
    }

    // Assemble each solution into a matrix over the original bases:
    // rows of Y are x_{seed(node)}·W_node; H = S^{-1}·Y.
    let s_inv = sp.basis.inverse().expect("spun basis invertible");
    let mut out = Vec::with_capacity(k.rows());
    for t in 0..k.rows() {
        // Slice the solution row into per-seed vectors once.
        let mut xs_rows = GFMatrix::zeros(p, r, dim_n);
        for col in 0..unknowns {
            let v = k.get(t, col);
            if v != 0 {
                xs_rows.set(col / dim_n, col % dim_n, v);
            }
        }
        let mut y = GFMatrix::zeros(p, k_nodes, dim_n);
        for (node, wn) in w.iter().enumerate() {
            let s = sp.node_seed[node];
            let row = xs_rows.select_rows(&[s]).mat_mul(wn).expect("dims");
            y.copy_row_from(node, &row, 0);
        }
        let h = s_inv.mat_mul(&y).expect("dims");
        debug_assert!(intertwines(m_mats, n_mats, &h));
        out.push(h);
    }
    out
}

pub fn intertwines(m_mats: &[GFMatrix], n_mats: &[GFMatrix], h: &GFMatrix) -> bool {
    m_mats.iter().zip(n_mats).all(|(a, b)| {
        a.mat_mul(h).expect("dims") == h.mat_mul(b).expect("dims")
    })
}

/// Hom_{FG}(M, N) for modules over the same generator list.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<GFMatrix> {
    assert_eq!(m.gens(), n.gens(), "acting generators differ");
    assert_eq!(m.p(), n.p());
    hom_basis_mats(m.p(), m.dim(), m.mats(), n.dim(), n.mats())
}

pub fn end_basis(m: &Module) -> Vec<GFMatrix> {
    hom_basis_mats(m.p(), m.dim(), m.mats(), m.dim(), m.mats())
}

/// Isomorphism test with witness: search the hom space for an invertible
/// element, randomized then exhaustive for small spaces.
pub fn is_isomorphic(m: &Module, n: &Module, rng: &mut SplitMix64) -> Option<GFMatrix> {
    if m.dim() != n.dim() || m.p() != n.p() {
        return None;
    }
    if m.dim() == 0 {
        return Some(GFMatrix::zeros(m.p(), 0, 0));
    }
    let homs = hom_basis(m, n);
    find_invertible_combination(m.p(), &homs, rng)
}

/// Search a matrix space for an invertible combination: basis elements
/// first, then seeded random combinations, then exhaustive enumeration
/// when p^len is small.
pub fn find_invertible_combination(
    p: u8,
    basis: &[GFMatrix],
    rng: &mut SplitMix64,
) -> Option<GFMatrix> {
    if basis.is_empty() {
        return None;
    }
    let dim = basis[0].rows();
    let full = |h: &GFMatrix| h.rank() == dim;
    for h in basis {
        if full(h) {
            return Some(h.clone());
        }
    }
    let combine = |coeffs: &[u8]| -> GFMatrix {
        let mut acc = GFMatrix::zeros(p, dim, dim);
        for (c, h) in coeffs.iter().zip(basis) {
            if *c != 0 {
                for i in 0..dim {
                    acc.axpy_row_from(i, h, i, *c);
                }
            }
        }
        acc
    };
    for _ in 0..64 {
        let coeffs: Vec<u8> = (0..basis.len()).map(|_| rng.below(p as u64) as u8).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let h = combine(&coeffs);
        if full(&h) {
            return Some(h);
        }
    }
    // Exhaustive fallback for small spaces.
    let total = (p as u64).checked_pow(basis.len() as u32);
    if let Some(total) = total {
        if total <= 6561 {
            let mut coeffs = vec![0u8; basis.len()];
            for code in 1..total {
                let mut c = code;
                for slot in coeffs.iter_mut() {
                    *slot = (c % p as u64) as u8;
                    c /= p as u64;
                }
                let h = combine(&coeffs);
                if full(&h) {
                    return Some(h);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::{PGroup, Perm};

    #[test]
    fn hom_trivial_trivial_is_one_dimensional() {
        let gens = vec![Perm::from_cycles(3, "(1,2,3)").unwrap()];
        let t = Module::trivial(2, 3, gens);
        let h = hom_basis(&t, &t);
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn end_contains_identity() {
        let gens = vec![
            Perm::from_cycles(4, "(1,2,3,4)").unwrap(),
            Perm::from_cycles(4, "(1,2)").unwrap(),
        ];
        let m = Module::natural_permutation(3, gens);
        let e = end_basis(&m);
        assert!(!e.is_empty());
        // identity lies in the span: solve
        let flat: Vec<GFMatrix> = e.iter().map(|h| h.flatten()).collect();
        let mut stack = flat[0].clone();
        for f in &flat[1..] {
            stack = stack.vstack(f).unwrap();
        }
        let id = GFMatrix::identity(3, 4).flatten();
        assert!(crate::gfp::solve(&stack, &id).is_some());
    }

    #[test]
    fn end_of_regular_c2_mod2_is_two_dimensional() {
        // Brute-force oracle: all 2×2 GF(2) matrices commuting with the swap.
        let g = PGroup::generate(2, vec![Perm::from_cycles(2, "(1,2)").unwrap()]).unwrap();
        let m = Module::regular(2, &g);
        let e = end_basis(&m);
        assert_eq!(e.len(), 2);
        let mut brute = 0;
        for code in 0..16u32 {
            let ent: Vec<u8> = (0..4).map(|i| (code >> i & 1) as u8).collect();
            let h = GFMatrix::from_entries(2, 2, 2, &ent);
            if intertwines(m.mats(), m.mats(), &h) {
                brute += 1;
            }
        }
        assert_eq!(brute, 4); // 2-dimensional space over GF(2)
    }

    #[test]
    fn iso_detects_identity_and_dimension_mismatch() {
        let gens = vec![Perm::from_cycles(3, "(1,2,3)").unwrap(), Perm::from_cycles(3, "(1,2)").unwrap()];
        let m = Module::natural_permutation(2, gens.clone());
        let mut rng = SplitMix64::new(0);
        let w = is_isomorphic(&m, &m, &mut rng).expect("self-isomorphic");
        assert!(intertwines(m.mats(), m.mats(), &w));
        let t = Module::trivial(2, 3, gens);
        assert!(is_isomorphic(&m, &t, &mut rng).is_none());
    }

    #[test]
    fn iso_invariant_under_base_change() {
        // Conjugating the action by a random invertible matrix gives an
        // isomorphic module.
        let gens = vec![
            Perm::from_cycles(4, "(1,2,3,4)").unwrap(),
            Perm::from_cycles(4, "(1,2)").unwrap(),
        ];
        let m = Module::natural_permutation(3, gens.clone());
        let mut rng = SplitMix64::new(7);
        let mut b = GFMatrix::zeros(3, 4, 4);
        loop {
            for i in 0..4 {
                for j in 0..4 {
                    b.set(i, j, rng.below(3) as u8);
                }
            }
            if b.inverse().is_some() {
                break;
            }
        }
        let binv = b.inverse().unwrap();
        let mats: Vec<GFMatrix> = m
            .mats()
            .iter()
            .map(|x| b.mat_mul(x).unwrap().mat_mul(&binv).unwrap())
            .collect();
        let n = Module::new(3, 4, gens, mats);
        let w = is_isomorphic(&m, &n, &mut rng).expect("conjugate modules isomorphic");
        assert!(intertwines(m.mats(), n.mats(), &w));
    }
}
