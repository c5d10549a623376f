//! Spinning: closing seed vectors under the action, with the tree and
//! relation bookkeeping that the homomorphism machinery reuses.
//!
//! Works on a bare action (a slice of square matrices), so group modules
//! and algebra regular representations share the code path.

use alloc::vec;
use alloc::vec::Vec;

use crate::gfp::{Echelon, Fed, GFMatrix};

#[derive(Clone, Copy, Debug)]
pub enum SpinNode {
    /// The node is kept seed number `seed_no` (0-based among kept seeds).
    Seed { seed_no: usize },
    Child { parent: usize, gen: usize },
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub node: usize,
    pub gen: usize,
    /// Expression of node·gen over the basis (over kept nodes at feed
    /// time; later entries are implicitly zero).
    pub coeffs: Vec<u8>,
}

pub struct SpinResult {
    /// Raw spun vectors, one per node, spanning the closure.
    pub basis: GFMatrix,
    pub nodes: Vec<SpinNode>,
    /// Seed ownership of each node.
    pub node_seed: Vec<usize>,
    /// Product expressions of the dependent products.
    pub relations: Vec<Relation>,
    /// Induced action matrices on the spun basis, one per generator.
    pub action: Vec<GFMatrix>,
}

impl SpinResult {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn seed_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, SpinNode::Seed { .. }))
            .count()
    }
}

/// Close the row space of `seeds` under the action of `mats`.
/// Dependent seeds are skipped (they add nothing to the closure).
pub fn spin(p: u8, dim: usize, mats: &[GFMatrix], seeds: &GFMatrix) -> SpinResult {
    let mut eng = Echelon::new(p, dim, dim);
    let mut basis = GFMatrix::zeros(p, 0, dim);
    let mut nodes: Vec<SpinNode> = Vec::new();
    let mut node_seed: Vec<usize> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();

    let mut seed_no = 0usize;
    for s in 0..seeds.rows() {
        if seeds.row_is_zero(s) {
            continue;
        }
        if let Fed::Kept { .. } = eng.feed_row_of(seeds, s).expect("cap = dim") {
            basis.push_zero_row();
            basis.copy_row_from(nodes.len(), seeds, s);
            nodes.push(SpinNode::Seed { seed_no });
            node_seed.push(seed_no);
            seed_no += 1;
        }
    }

    let mut next = 0usize;
    while next < nodes.len() {
        for (g, m) in mats.iter().enumerate() {
            let prod = basis.select_rows(&[next]).mat_mul(m).expect("square action");
            match eng.feed_row_of(&prod, 0).expect("cap = dim") {
                Fed::Kept { .. } => {
                    basis.push_zero_row();
                    basis.copy_row_from(nodes.len(), &prod, 0);
                    nodes.push(SpinNode::Child { parent: next, gen: g });
                    node_seed.push(node_seed[next]);
                }
                Fed::Dependent { coeffs } => {
                    relations.push(Relation { node: next, gen: g, coeffs });
                }
            }
        }
        next += 1;
    }

    // Assemble induced action matrices on the spun basis.
    let k = nodes.len();
    let mut action = vec![GFMatrix::zeros(p, k, k); mats.len()];
    for (idx, node) in nodes.iter().enumerate() {
        if let SpinNode::Child { parent, gen } = node {
            action[*gen].set(*parent, idx, 1);
        }
    }
    for rel in &relations {
        for (j, &c) in rel.coeffs.iter().enumerate() {
            if c != 0 {
                action[rel.gen].set(rel.node, j, c);
            }
        }
    }
    SpinResult {
        basis,
        nodes,
        node_seed,
        relations,
        action,
    }
}

/// Spin from every standard basis vector, taking a new seed whenever the
/// closure so far is proper: a standard generating sequence for the whole
/// space.  The result spans all of F^dim.
pub fn spin_standard(p: u8, dim: usize, mats: &[GFMatrix]) -> SpinResult {
    let id = GFMatrix::identity(p, dim);
    // spin() skips dependent seeds, so feeding the full identity works,
    // but we must interleave: seed, then close, then next seed.  Feeding
    // all seeds first would make later seeds children of nothing.
    let mut eng = Echelon::new(p, dim, dim);
    let mut basis = GFMatrix::zeros(p, 0, dim);
    let mut nodes: Vec<SpinNode> = Vec::new();
    let mut node_seed: Vec<usize> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    let mut seed_no = 0usize;
    let mut frontier = 0usize;

    for s in 0..dim {
        if nodes.len() == dim {
            break;
        }
        match eng.feed_row_of(&id, s).expect("cap") {
            Fed::Dependent { .. } => continue,
            Fed::Kept { .. } => {
                basis.push_zero_row();
                basis.copy_row_from(nodes.len(), &id, s);
                nodes.push(SpinNode::Seed { seed_no });
                node_seed.push(seed_no);
                seed_no += 1;
            }
        }
        while frontier < nodes.len() {
            for (g, m) in mats.iter().enumerate() {
                let prod = basis.select_rows(&[frontier]).mat_mul(m).expect("square");
                match eng.feed_row_of(&prod, 0).expect("cap") {
                    Fed::Kept { .. } => {
                        basis.push_zero_row();
                        basis.copy_row_from(nodes.len(), &prod, 0);
                        nodes.push(SpinNode::Child { parent: frontier, gen: g });
                        node_seed.push(node_seed[frontier]);
                    }
                    Fed::Dependent { coeffs } => {
                        relations.push(Relation { node: frontier, gen: g, coeffs });
                    }
                }
            }
            frontier += 1;
        }
    }
    let k = nodes.len();
    debug_assert_eq!(k, dim);
    let mut action = vec![GFMatrix::zeros(p, k, k); mats.len()];
    for (idx, node) in nodes.iter().enumerate() {
        if let SpinNode::Child { parent, gen } = node {
            action[*gen].set(*parent, idx, 1);
        }
    }
    for rel in &relations {
        for (j, &c) in rel.coeffs.iter().enumerate() {
            if c != 0 {
                action[rel.gen].set(rel.node, j, c);
            }
        }
    }
    SpinResult {
        basis,
        nodes,
        node_seed,
        relations,
        action,
    }
}
