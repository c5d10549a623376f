//! Permutations and the subgroups of symmetric groups the pipeline works
//! with: Sylow p-subgroups, regular elementary abelian subgroups and their
//! normalizers, wreath embeddings, and subgroup lattices of small p-groups.

mod group;
mod perm;
mod sylow;

pub use group::{PGroup, Subgroup, SubgroupClass, SubgroupLattice, CLOSURE_CAP, LATTICE_CAP};
pub use perm::{factorial, for_each_perm, perm_rank, perm_unrank, Perm, PermRank};
pub use sylow::{
    elementary_normalizer, gl_order, p_part_of_factorial, regular_elementary,
    regular_elementary_generators, sharp_map, sylow_generators, sylow_p_subgroup,
    wreath_embedding,
};

use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymError {
    DegreeMismatch,
    NotABijection,
    BadCycleNotation,
    OrderCapExceeded,
    RankOutOfRange,
    NotInGroup,
    NotAPGroup,
}

impl fmt::Display for SymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymError::DegreeMismatch => "permutation degree mismatch",
            SymError::NotABijection => "images are not a bijection",
            SymError::BadCycleNotation => "malformed cycle notation",
            SymError::OrderCapExceeded => "group order cap exceeded",
            SymError::RankOutOfRange => "rank out of range",
            SymError::NotInGroup => "element not in group",
            SymError::NotAPGroup => "group is not a p-group",
        };
        write!(f, "{s}")
    }
}

impl core::error::Error for SymError {}
