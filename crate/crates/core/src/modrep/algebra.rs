//! Structure analysis of the endomorphism algebra of a module: structure
//! constants, regular representation, Jacobson radical, and the
//! local-ring/absolute-indecomposability certificates.
//!
//! The radical is the intersection of the kernels of the irreducible
//! representations of E = End(M), which are found by chopping the regular
//! module of E; everything beyond the one-off structure-constant
//! computation happens at dimension dim E.

use alloc::vec::Vec;

use crate::gfp::{left_kernel, Echelon, Fed, GFMatrix};
use crate::rng::SplitMix64;

use super::chop::chop_mats;
use super::hom::hom_basis_mats;

#[derive(Clone, Debug)]
pub struct EndReport {
    /// dim End(M).
    pub end_dim: usize,
    /// dim rad End(M).
    pub rad_dim: usize,
    /// Number of pairwise non-isomorphic simple End-modules.
    pub distinct_simples: usize,
    /// End(M) local ⟺ M indecomposable.
    pub local: bool,
    /// End/rad ≅ F_p ⟺ M absolutely indecomposable (given local).
    pub absolutely_indecomposable: bool,
}

/// The endomorphism algebra with multiplication table.
pub struct EndAlgebra {
    pub p: u8,
    /// Basis as dim_M × dim_M matrices.
    pub basis: Vec<GFMatrix>,
    /// Left-multiplication matrices of the regular representation:
    /// row-convention x ↦ x·L_i represents b_i·(Σ x_j b_j).
    pub left_mults: Vec<GFMatrix>,
}

impl EndAlgebra {
    /// Build from a basis of End(M).  Structure constants are computed
    /// cell-by-cell: a product's coordinates are recovered from its values
    /// at the pivot cells of the flattened basis, so no product matrix is
    /// ever materialized.
    pub fn from_basis(p: u8, basis: Vec<GFMatrix>) -> Self {
        let e = basis.len();
        if e == 0 {
            return EndAlgebra { p, basis, left_mults: Vec::new() };
        }
        let dim = basis[0].rows();
        let mut eng = Echelon::new(p, dim * dim, e);
        for b in &basis {
            match eng.feed_row_of(&b.flatten(), 0).expect("cap") {
                Fed::Kept { .. } => {}
                Fed::Dependent { .. } => panic!("end basis not independent"),
            }
        }
        let pivot_cells: Vec<(usize, usize)> = eng
            .pivot_columns()
            .iter()
            .map(|&c| (c / dim, c % dim))
            .collect();
        // Transposes for cheap column access.
        let transposed: Vec<GFMatrix> = basis.iter().map(|b| b.transpose()).collect();
        let mut left_mults = Vec::with_capacity(e);
        for i in 0..e {
            let mut li = GFMatrix::zeros(p, e, e);
            for j in 0..e {
                // (b_i·b_j) at cell (r,c) = row_r(b_i) · col_c(b_j).
                let vals: Vec<u8> = pivot_cells
                    .iter()
                    .map(|&(r, c)| basis[i].row_dot(r, &transposed[j], c))
                    .collect();
                let coords = eng.express_from_pivot_values(&vals);
                for (k, &v) in coords.iter().enumerate() {
                    if v != 0 {
                        li.set(j, k, v);
                    }
                }
            }
            left_mults.push(li);
        }
        EndAlgebra { p, basis, left_mults }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Jacobson radical as coordinate rows over the basis: the joint
    /// kernel of the irreducible representations.
    pub fn radical(&self, rng: &mut SplitMix64) -> GFMatrix {
        let e = self.dim();
        let simples = distinct_simples(self.p, e, &self.left_mults, rng);
        // x ∈ rad ⟺ Σ x_i ρ_S(b_i) = 0 for every simple S.
        let mut cols = 0usize;
        for s in &simples {
            cols += s[0].rows() * s[0].rows();
        }
        let mut system = GFMatrix::zeros(self.p, e, cols);
        for i in 0..e {
            let mut off = 0;
            for s in &simples {
                let d = s[0].rows();
                for (r, c, v) in flat_entries(&s[i]) {
                    system.set(i, off + r * d + c, v);
                }
                off += d * d;
            }
        }
        left_kernel(&system)
    }

    /// The locality analysis; `rng` drives the internal chop.
    pub fn analyze(&self, rng: &mut SplitMix64) -> EndReport {
        let e = self.dim();
        if e == 0 {
            return EndReport {
                end_dim: 0,
                rad_dim: 0,
                distinct_simples: 0,
                local: false,
                absolutely_indecomposable: false,
            };
        }
        let simples = distinct_simples(self.p, e, &self.left_mults, rng);
        let rad = self.radical(rng);
        let rad_dim = rad.rows();
        let residue = e - rad_dim;
        let local = if simples.len() != 1 {
            false
        } else {
            // E/rad ≅ M_m(D); m = dim S / dim End(S); local ⟺ m = 1.
            let s = &simples[0];
            let d = s[0].rows();
            let endo = hom_basis_mats(self.p, d, s, d, s).len();
            debug_assert_eq!(residue % endo, 0);
            let m = d / endo;
            debug_assert_eq!(residue, m * m * endo);
            m == 1
        };
        EndReport {
            end_dim: e,
            rad_dim,
            distinct_simples: simples.len(),
            local,
            absolutely_indecomposable: local && residue == 1,
        }
    }
}

fn flat_entries(m: &GFMatrix) -> Vec<(usize, usize, u8)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for (c, v) in m.row_nonzeros(r) {
            out.push((r, c, v));
        }
    }
    out
}

/// Pairwise non-isomorphic simple modules of the algebra generated by the
/// given action matrices, each simple returned as its list of generator
/// actions.
fn distinct_simples(
    p: u8,
    dim: usize,
    mats: &[GFMatrix],
    rng: &mut SplitMix64,
) -> Vec<Vec<GFMatrix>> {
    let factors = chop_mats(p, dim, mats, rng);
    let mut reps: Vec<Vec<GFMatrix>> = Vec::new();
    'next: for f in factors {
        for r in &reps {
            if r[0].rows() == f[0].rows()
                && !hom_basis_mats(p, r[0].rows(), r, f[0].rows(), &f).is_empty()
            {
                continue 'next;
            }
        }
        reps.push(f);
    }
    reps
}

/// Analysis of End(M) given by a basis.
pub fn analyze_end(p: u8, basis: Vec<GFMatrix>, rng: &mut SplitMix64) -> (EndAlgebra, EndReport) {
    let alg = EndAlgebra::from_basis(p, basis);
    let report = alg.analyze(rng);
    (alg, report)
}
