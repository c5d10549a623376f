//! Generic module machinery over group algebras F_pG: spinning, hom
//! spaces, composition factors, direct sum decompositions with local-ring
//! certificates, Heller translates, and projective-summand stripping.

mod algebra;
mod chop;
mod fitting;
mod heller;
mod hom;
mod module;
mod projective;
mod spin;
mod words;

pub use algebra::{analyze_end, EndAlgebra, EndReport};
pub use chop::{chop, chop_mats};
pub use fitting::{decompose, dims_multiset, iso_classes, row_space_basis, SummandCert};
pub use heller::{
    element_matrices, group_algebra_radical, heller, heller_general, heller_inv,
    heller_inv_general, heller_power, rad_general, rad_p_group, regular_mod_socle, socle_p_group,
};
pub use hom::{end_basis, find_invertible_combination, hom_basis, hom_basis_mats, intertwines, is_isomorphic};
pub use module::{quotient_action, submodule_action, word_search, ModError, Module};
pub use projective::{
    head_of_projective, is_free_over_p_group, is_projective, strip_projectives, StripOutcome,
    StrippedSummand,
};
pub use spin::{spin, spin_standard, Relation, SpinNode, SpinResult};
pub use words::{is_peakword, peakword_search, stable_kernel, AlgebraElement};
