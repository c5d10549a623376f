//! Vertices via Higman's criterion, source extraction, permutation-module
//! recognition, and Dade-group data over the regular elementary abelian
//! subgroups.

mod dade;
mod higman;
mod permmod;
mod vertex;
mod witness;

pub use dade::{check_stability, dade_candidate, exponent_domain, DadeClass};
pub use higman::{rel_projective, relative_trace, PModuleCtx};
pub use permmod::{induced_trivial, is_permutation_module};
pub use vertex::{
    vertex, vertex_class, vertex_via_sylow, SourceCert, SylowSummandVertex, SylowVertexAnalysis, VertexReport,
};
pub use witness::{not_endo_permutation_witness, NotEndoPermWitness};
