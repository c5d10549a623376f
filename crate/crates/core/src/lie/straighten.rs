//! The multilinear-bracket backend: basis brackets [[e_n, e_{π(1)}, …,
//! e_{π(n−1)}] indexed by π ∈ S_{n−1} in rank order.  A generator relabels
//! the letters; a bracket whose first letter is not e_n is rewritten by
//! expanding the prefix ending at e_n into its tensor words:
//!
//!   [[x_1,…,x_{k−1}, e_n, …] = −Σ_w c_w [[e_n, w, x_{k+1}, …]
//!
//! where w runs over the 2^{k−2} signed tensor words of [[x_1,…,x_{k−1}].
//! Every output term is a basis bracket, so the action of any permutation
//! is a sparse row with at most 2^{n−2} entries.

use alloc::vec;
use alloc::vec::Vec;

use crate::gfp::GFMatrix;
use crate::symgrp::{factorial, perm_rank, perm_unrank, Perm};

/// Signed tensor expansion of the left-normed bracket on the given
/// distinct letters: 2^{len−1} signed words.
fn tensor_words(letters: &[u8]) -> Vec<(i8, Vec<u8>)> {
    let mut acc: Vec<(i8, Vec<u8>)> = vec![(1, vec![letters[0]])];
    for &x in &letters[1..] {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (s, w) in &acc {
            let mut a = w.clone();
            a.push(x);
            next.push((*s, a));
            let mut b = vec![x];
            b.extend_from_slice(w);
            next.push((-s, b));
        }
        acc = next;
    }
    acc
}

/// The image σ·b_π as a sparse signed row over the bracket basis:
/// pairs (basis rank of degree n−1, sign ∈ {+1, −1}).
pub fn act_on_basis_bracket(n: usize, sigma: &Perm, pi: &Perm) -> Vec<(u64, i8)> {
    debug_assert_eq!(sigma.degree(), n);
    debug_assert_eq!(pi.degree(), n - 1);
    let special = (n - 1) as u8; // the letter e_n, 0-based
    // Letters of σ·b_π: y_0 = σ(n), y_{i+1} = σ(π(i)).
    let mut y = Vec::with_capacity(n);
    y.push(sigma.apply(n - 1) as u8);
    for i in 0..n - 1 {
        y.push(sigma.apply(pi.apply(i)) as u8);
    }
    let k0 = y.iter().position(|&v| v == special).expect("letter present");
    if k0 == 0 {
        let tail: Vec<u8> = y[1..].to_vec();
        let r = perm_rank(&Perm::from_images(tail).expect("arrangement")).rank;
        return vec![(r, 1)];
    }
    let prefix = &y[..k0];
    let suffix = &y[k0 + 1..];
    tensor_words(prefix)
        .into_iter()
        .map(|(s, w)| {
            let mut arrangement = w;
            arrangement.extend_from_slice(suffix);
            let r = perm_rank(&Perm::from_images(arrangement).expect("arrangement")).rank;
            (r, -s)
        })
        .collect()
}

/// Action matrix of an arbitrary permutation on the bracket basis.
pub fn generator_matrix(p: u8, n: usize, sigma: &Perm) -> GFMatrix {
    let dim = factorial(n - 1) as usize;
    let mut mat = GFMatrix::zeros(p, dim, dim);
    let mut pi = Perm::identity(n - 1);
    for row in 0..dim {
        for (col, sign) in act_on_basis_bracket(n, sigma, &pi) {
            let v = (sign as i64).rem_euclid(p as i64) as u8;
            let cur = mat.get(row, col as usize);
            mat.set(row, col as usize, ((cur + v) % p) as u8);
        }
        if row + 1 < dim {
            pi = perm_unrank(n - 1, row as u64 + 1).expect("in range");
        }
    }
    mat
}

/// Apply the operator of left multiplication by c_k to a dense coefficient
/// vector over the bracket basis.
fn apply_cycle(p: u8, n: usize, k: usize, vec_in: &[u8]) -> Vec<u8> {
    let dim = vec_in.len();
    let ck = super::dsw::backward_cycle(k, n);
    let mut out = vec![0u8; dim];
    for (row, &c) in vec_in.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let pi = perm_unrank(n - 1, row as u64).expect("in range");
        for (col, sign) in act_on_basis_bracket(n, &ck, &pi) {
            let v = (sign as i64 * c as i64).rem_euclid(p as i64) as u8;
            let slot = &mut out[col as usize];
            *slot = ((*slot as u16 + v as u16) % p as u16) as u8;
        }
    }
    out
}

/// ω_n applied as an operator: factors (1−c_k) for k = n down to 2
/// (left multiplication composes right to left).
pub fn apply_omega(p: u8, n: usize, vec_in: &[u8]) -> Vec<u8> {
    let mut cur = vec_in.to_vec();
    for k in (2..=n).rev() {
        let ck = apply_cycle(p, n, k, &cur);
        for (c, d) in cur.iter_mut().zip(&ck) {
            // (1 − c_k)·v = v − c_k·v
            *c = ((*c as u16 + (p - d % p) as u16) % p as u16) as u8;
        }
    }
    cur
}

/// The action-matrix identity X² = n·X for the operator X of ω_n on the
/// bracket basis, checked row by row without materializing X².
pub fn omega_action_identity(p: u8, n: usize) -> bool {
    let dim = factorial(n - 1) as usize;
    let nm = (n as u64 % p as u64) as u16;
    let check_row = |row: usize| -> bool {
        let mut e = vec![0u8; dim];
        e[row] = 1;
        let r1 = apply_omega(p, n, &e);
        let r2 = apply_omega(p, n, &r1);
        r2.iter()
            .zip(&r1)
            .all(|(&a, &b)| a as u16 == (nm * b as u16) % p as u16)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..dim).into_par_iter().all(check_row)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..dim).all(check_row)
    }
}
