//! Manifold-producing constructions: glued chains, coronas, subdivision,
//! antipodal folding and facet-pairing quotients.

mod corona;
mod fold;
mod glue;
mod quotient;
mod subdivide;

pub use corona::{corona_B, FLOOR_LABELS};
pub use fold::{antipodal_fold, central_involutions, check_involution, find_central_involution};
pub use glue::{
    antipodal_vertex_map, chain, chain_A, elongated_barrel, glue_and_flatten,
    glue_and_flatten_with_maps, induced_automorphism, opposite_top_cell, GlueSite, Glued,
};
pub use quotient::{
    check_manifold, facet_pairing_quotient, offset_for_twist, twist_table, FacetPairing, TwistRow,
};
pub use subdivide::{subdivide_C, subdivide_simplicial};
