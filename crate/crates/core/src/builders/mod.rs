//! Exact constructions of the seed complexes: barrels, dodecahedra, the
//! small fullerenes, the 600-cell and 120-cell, and polyhex quotients.

mod icosian;
mod polyhedra;
mod polyhex;

pub use icosian::{build_120cell, build_600cell, icosians, QSqrt5, Quaternion};
pub use polyhedra::{
    build_barrel, build_cube, build_dodecahedron, build_f26, build_f28_td, build_f32_d3d,
    build_icosahedron, build_layered_dodecahedron,
};
pub use polyhex::{build_klein_polyhex, build_toroidal_polyhex, polyhex_flags, PolyhexSpec};
