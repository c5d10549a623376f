//! Direct sum decomposition by Fitting splitting on the endomorphism
//! algebra, with locality certificates at the leaves.

use alloc::vec::Vec;

use crate::gfp::{echelonize, left_kernel, GFMatrix};
use crate::rng::SplitMix64;
use crate::symgrp::PGroup;

use super::algebra::{analyze_end, EndReport};
use super::hom::hom_basis_mats;
use super::module::{submodule_action, Module};
use super::projective::is_projective;

/// A certified direct summand: embedding/projection pair into the parent,
/// with projectivity and absolute-indecomposability flags.
#[derive(Clone)]
pub struct SummandCert {
    pub module: Module,
    /// k × dim(parent): rows are the summand basis inside the parent.
    pub embedding: GFMatrix,
    /// dim(parent) × k with projection∘embedding = identity.
    pub projection: GFMatrix,
    pub projective: bool,
    pub absolutely_indecomposable: bool,
    pub end_report: EndReport,
}

impl SummandCert {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Re-verify the certificate: proj∘emb = id, emb∘proj idempotent, and
    /// the embedding intertwines.
    pub fn verify(&self, parent: &Module) -> bool {
        let pe = self.embedding.mat_mul(&self.projection).expect("dims");
        if !pe.is_identity() {
            return false;
        }
        let ep = self.projection.mat_mul(&self.embedding).expect("dims");
        if ep.mat_mul(&ep).expect("dims") != ep {
            return false;
        }
        parent
            .mats()
            .iter()
            .zip(self.module.mats())
            .all(|(big, small)| {
                self.embedding.mat_mul(big).expect("dims")
                    == small.mat_mul(&self.embedding).expect("dims")
            })
    }
}

const SPLIT_ATTEMPTS: usize = 512;

/// Decompose into indecomposable summands.  Each leaf is certified by the
/// locality of its endomorphism ring; `sylow` (when given) is used to set
/// the projectivity flags via the free-restriction test.
pub fn decompose(m: &Module, sylow: Option<&PGroup>, seed: u64) -> Vec<SummandCert> {
    let mut rng = SplitMix64::new(seed).fork(0x6465636f);
    let mut leaves: Vec<(GFMatrix, EndReport)> = Vec::new();
    let id = GFMatrix::identity(m.p(), m.dim());
    if m.dim() > 0 {
        // One homomorphism-space computation; the recursion transports
        // End bases onto the summands as ε·End(M)·ε.
        let ends = hom_basis_mats(m.p(), m.dim(), m.mats(), m.dim(), m.mats());
        split_rec(m.p(), m.mats().to_vec(), id, ends, &mut rng, &mut leaves);
    }
    // Assemble: stacked embeddings are a basis change of the parent.
    let mut stack = GFMatrix::zeros(m.p(), 0, m.dim());
    for (basis, _) in &leaves {
        stack = stack.vstack(basis).expect("dims");
    }
    assert_eq!(stack.rows(), m.dim(), "summand dimensions must add up");
    let sinv = stack.inverse().expect("internal direct sum");
    let sinv_t = sinv.transpose();
    let mut out = Vec::new();
    let mut offset = 0;
    for (basis, report) in leaves {
        let k = basis.rows();
        let proj = sinv_t
            .select_rows(&(offset..offset + k).collect::<Vec<_>>())
            .transpose();
        offset += k;
        let module = m.submodule(&basis).expect("invariant summand");
        let projective = match sylow {
            Some(s) => is_projective(&module, s).unwrap_or(false),
            None => false,
        };
        let cert = SummandCert {
            absolutely_indecomposable: report.absolutely_indecomposable,
            projective,
            end_report: report,
            module,
            embedding: basis,
            projection: proj,
        };
        debug_assert!(cert.verify(m));
        out.push(cert);
    }
    out
}

fn split_rec(
    p: u8,
    mats: Vec<GFMatrix>,
    basis_in_parent: GFMatrix,
    ends_raw: Vec<GFMatrix>,
    rng: &mut SplitMix64,
    out: &mut Vec<(GFMatrix, EndReport)>,
) {
    let dim = basis_in_parent.rows();
    // The transported spanning set may be dependent; thin to a basis.
    let ends = independent_subset(p, ends_raw);
    let (_, report) = analyze_end(p, ends.clone(), rng);
    if report.local || dim == 1 {
        out.push((basis_in_parent, report));
        return;
    }
    // A non-local endomorphism ring contains an element that is neither
    // nilpotent nor invertible; its stabilized power splits the module.
    let log2dim = usize::BITS - dim.leading_zeros();
    for attempt in 0..SPLIT_ATTEMPTS {
        let mut f = GFMatrix::zeros(p, dim, dim);
        if attempt < ends.len() {
            f = ends[attempt].clone();
        } else {
            for h in &ends {
                let c = rng.below(p as u64) as u8;
                if c != 0 {
                    for i in 0..dim {
                        f.axpy_row_from(i, h, i, c);
                    }
                }
            }
        }
        let mut fs = f;
        for _ in 0..=log2dim {
            fs = fs.mat_mul(&fs).expect("square");
        }
        let r = echelonize(&fs).rank;
        if r == 0 || r == dim {
            continue;
        }
        let ker = left_kernel(&fs);
        let im = row_space_basis(&fs);
        debug_assert_eq!(ker.rows() + im.rows(), dim);
        // Projections of the internal direct sum ker ⊕ im.
        let stack = ker.vstack(&im).expect("dims");
        let sinv_t = stack.inverse().expect("direct sum").transpose();
        let mut offset = 0usize;
        for part in [ker, im] {
            let k = part.rows();
            let proj = sinv_t
                .select_rows(&(offset..offset + k).collect::<Vec<_>>())
                .transpose();
            offset += k;
            let part_mats = submodule_action(p, &mats, &part).expect("Fitting part invariant");
            let part_in_parent = part.mat_mul(&basis_in_parent).expect("dims");
            // Transport the endomorphisms: h ↦ part·h·proj.
            let part_ends: Vec<GFMatrix> = ends
                .iter()
                .map(|h| {
                    part.mat_mul(h)
                        .expect("dims")
                        .mat_mul(&proj)
                        .expect("dims")
                })
                .collect();
            split_rec(p, part_mats, part_in_parent, part_ends, rng, out);
        }
        return;
    }
    panic!("decompose: splitting element not found despite non-local End");
}

/// Thin a spanning set of matrices to a linearly independent subset.
fn independent_subset(p: u8, set: Vec<GFMatrix>) -> Vec<GFMatrix> {
    if set.is_empty() {
        return set;
    }
    let cols = set[0].rows() * set[0].cols();
    let mut eng = crate::gfp::Echelon::new(p, cols, set.len());
    let mut out = Vec::new();
    for h in set {
        if let Ok(crate::gfp::Fed::Kept { .. }) = eng.feed_row_of(&h.flatten(), 0) {
            out.push(h);
        }
    }
    out
}

/// Row-space basis (the nonzero RREF rows).
pub fn row_space_basis(m: &GFMatrix) -> GFMatrix {
    let ef = echelonize(m);
    m.p();
    ef.reduced.select_rows(&(0..ef.rank).collect::<Vec<_>>())
}

/// Multiset signature of a decomposition: sorted summand dimensions.
pub fn dims_multiset(certs: &[SummandCert]) -> Vec<usize> {
    let mut dims: Vec<usize> = certs.iter().map(|c| c.dim()).collect();
    dims.sort_unstable();
    dims
}

/// Group certs into isomorphism classes (indices into `certs`).
pub fn iso_classes(certs: &[SummandCert], rng: &mut SplitMix64) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, c) in certs.iter().enumerate() {
        for class in classes.iter_mut() {
            let rep = &certs[class[0]];
            if rep.dim() == c.dim()
                && super::hom::is_isomorphic(&rep.module, &c.module, rng).is_some()
            {
                class.push(i);
                continue 'outer;
            }
        }
        classes.push(alloc::vec![i]);
    }
    classes
}
