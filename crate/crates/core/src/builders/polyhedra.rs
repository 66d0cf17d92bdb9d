//! Polyhedral (rank 2) seed complexes.

use crate::error::{Error, Result};
use crate::kernel::{dual, IncidenceComplex};

/// Vertex cycles of the unique 26-vertex fullerene.
const F26_FACES: [&[usize]; 15] = [
    &[0, 1, 5, 4, 3, 2],
    &[0, 1, 7, 8, 6],
    &[0, 2, 9, 10, 6],
    &[2, 3, 11, 12, 9],
    &[3, 4, 13, 14, 11],
    &[4, 5, 15, 16, 13],
    &[1, 5, 15, 17, 7],
    &[7, 8, 18, 20, 19, 17],
    &[6, 8, 18, 21, 10],
    &[9, 10, 21, 22, 12],
    &[11, 12, 22, 24, 23, 14],
    &[13, 14, 23, 25, 16],
    &[15, 16, 25, 19, 17],
    &[19, 20, 24, 23, 25],
    &[18, 20, 24, 22, 21],
];

/// Vertex cycles of the tetrahedral 28-vertex fullerene (isolated hexagons).
const F28_TD_FACES: [&[usize]; 16] = [
    &[0, 1, 5, 4, 3, 2],
    &[0, 1, 7, 8, 6],
    &[0, 2, 9, 10, 6],
    &[2, 3, 11, 12, 9],
    &[3, 4, 13, 14, 11],
    &[4, 5, 15, 16, 13],
    &[1, 5, 15, 17, 7],
    &[7, 8, 18, 20, 19, 17],
    &[6, 8, 18, 21, 10],
    &[9, 10, 21, 23, 22, 12],
    &[11, 12, 22, 24, 14],
    &[13, 14, 24, 26, 25, 16],
    &[15, 16, 25, 19, 17],
    &[19, 20, 27, 26, 25],
    &[18, 20, 27, 23, 21],
    &[22, 23, 27, 26, 24],
];

/// Vertex cycles of the centrally symmetric 32-vertex fullerene whose six
/// hexagons form a ring between two blocks of six pentagons.
const F32_D3D_FACES: [&[usize]; 18] = [
    &[0, 1, 5, 4, 3, 2],
    &[0, 1, 7, 8, 9, 6],
    &[0, 2, 10, 11, 6],
    &[2, 3, 12, 14, 13, 10],
    &[3, 4, 15, 16, 12],
    &[4, 5, 17, 18, 15],
    &[1, 5, 17, 19, 7],
    &[7, 8, 20, 22, 21, 19],
    &[8, 9, 23, 24, 20],
    &[6, 9, 23, 25, 11],
    &[10, 11, 25, 26, 13],
    &[13, 14, 27, 28, 26],
    &[12, 14, 27, 30, 29, 16],
    &[15, 16, 29, 31, 18],
    &[17, 18, 31, 21, 19],
    &[21, 22, 30, 29, 31],
    &[20, 22, 30, 27, 28, 24],
    &[23, 24, 28, 26, 25],
];

fn from_const(nv: usize, faces: &[&[usize]]) -> IncidenceComplex {
    let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    IncidenceComplex::from_polygons(nv, &faces).expect("constant face list is a valid surface")
}

/// Triangulated sphere: two poles and `rings` pentagonal rings joined by
/// antiprism bands.
fn capped_antiprism_pile(rings: usize) -> IncidenceComplex {
    let north = 0;
    let south = 1 + 5 * rings;
    let r = |j: usize, k: usize| 1 + 5 * j + (k % 5);
    let mut tris = Vec::new();
    for k in 0..5 {
        tris.push(vec![north, r(0, k), r(0, k + 1)]);
        tris.push(vec![south, r(rings - 1, k + 1), r(rings - 1, k)]);
        for j in 0..rings - 1 {
            tris.push(vec![r(j, k), r(j + 1, k), r(j, k + 1)]);
            tris.push(vec![r(j, k + 1), r(j + 1, k), r(j + 1, k + 1)]);
        }
    }
    IncidenceComplex::from_polygons(south + 1, &tris).expect("antiprism pile is a valid sphere")
}

/// The icosahedron as a triangulated sphere.
pub fn build_icosahedron() -> IncidenceComplex {
    capped_antiprism_pile(2)
}

/// The regular dodecahedron, as the dual of the icosahedron.
pub fn build_dodecahedron() -> IncidenceComplex {
    dual(&build_icosahedron()).expect("icosahedron is closed")
}

/// Barrel `B_i`: two `i`-gonal caps separated by two belts of `i` pentagons.
pub fn build_barrel(i: usize) -> Result<IncidenceComplex> {
    if i < 3 {
        return Err(Error::InvalidParameter(format!("barrel needs i >= 3, got {i}")));
    }
    let t = |k: usize| k % i;
    let u = |k: usize| i + k % i;
    let w = |k: usize| 2 * i + k % i;
    let x = |k: usize| 3 * i + k % i;
    let mut faces = vec![(0..i).map(t).collect::<Vec<_>>()];
    for k in 0..i {
        faces.push(vec![t(k), t(k + 1), u(k + 1), w(k), u(k)]);
        faces.push(vec![w(k), u(k + 1), w(k + 1), x(k + 1), x(k)]);
    }
    faces.push((0..i).map(x).collect());
    IncidenceComplex::from_polygons(4 * i, &faces)
}

/// The `i`-layered dodecahedron `F_{20+10i}`: the dual of a capped pile of
/// `i + 1` pentagonal antiprisms.
pub fn build_layered_dodecahedron(i: usize) -> IncidenceComplex {
    dual(&capped_antiprism_pile(i + 2)).expect("antiprism pile is closed")
}

pub fn build_f26() -> IncidenceComplex {
    from_const(26, &F26_FACES)
}

pub fn build_f28_td() -> IncidenceComplex {
    from_const(28, &F28_TD_FACES)
}

pub fn build_f32_d3d() -> IncidenceComplex {
    from_const(32, &F32_D3D_FACES)
}

pub fn build_cube() -> IncidenceComplex {
    let faces = vec![
        vec![0, 1, 2, 3],
        vec![4, 5, 6, 7],
        vec![0, 1, 5, 4],
        vec![1, 2, 6, 5],
        vec![2, 3, 7, 6],
        vec![3, 0, 4, 7],
    ];
    IncidenceComplex::from_polygons(8, &faces).expect("cube is valid")
}
