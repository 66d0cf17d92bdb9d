//! Closed 3-manifolds from a single polyhedron by pairing its faces.
//!
//! Each face is glued to its antipodal face by the antipodal map followed by
//! a rotation of the target face. The quotient rarely has regular cells, so
//! it is built and returned as a flag system: flags of the polyhedron with a
//! fourth adjacency that crosses the glued face.

use std::collections::HashMap;

use serde::Serialize;

use crate::census::residue;
use crate::error::{Error, Result};
use crate::kernel::{oriented_face_cycles, to_flags_with_chains, FVector, FlagSystem, IncidenceComplex, Orientability};

use super::glue::{antipodal_vertex_map, induced_automorphism};

/// A perfect matching of a polyhedron's faces with rotation offsets.
///
/// The offset `r` of a pair `(f, g, r)` glues `f` to `g` by the antipodal map
/// and then `r` steps along the coherent outward orientation of `g`.
#[derive(Debug, Clone)]
pub struct FacetPairing {
    pub polyhedron: IncidenceComplex,
    pub pairs: Vec<(usize, usize, usize)>,
}

impl FacetPairing {
    /// Validates the matching and reduces offsets modulo gonality.
    pub fn new(polyhedron: IncidenceComplex, pairs: Vec<(usize, usize, usize)>) -> Result<Self> {
        if polyhedron.dim() != 2 {
            return Err(Error::InvalidParameter("facet pairing needs a polyhedron".into()));
        }
        let p = polyhedron.count(2);
        let mut seen = vec![false; p];
        let mut reduced = Vec::with_capacity(pairs.len());
        for &(f, g, r) in &pairs {
            if f >= p || g >= p || f == g {
                return Err(Error::InvalidParameter(format!("invalid face pair ({f}, {g})")));
            }
            for x in [f, g] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidParameter(format!("face {x} is paired twice")));
                }
            }
            reduced.push((f, g, r % polyhedron.gonality(g)));
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidParameter("pairing does not cover every face".into()));
        }
        Ok(FacetPairing { polyhedron, pairs: reduced })
    }

    /// Every face paired with its antipodal face, all with the same offset.
    pub fn opposite(polyhedron: IncidenceComplex, offset: usize) -> Result<Self> {
        let alpha = antipodal_vertex_map(&polyhedron)?;
        let perm = induced_automorphism(&polyhedron, &alpha)?;
        let pairs = (0..polyhedron.count(2))
            .filter(|&f| f < perm[2][f])
            .map(|f| (f, perm[2][f], offset))
            .collect();
        FacetPairing::new(polyhedron, pairs)
    }

    /// Opposite faces of a pentagon-faced polyhedron, glued with a turn of
    /// `tenths / 10` of a full rotation relative to straight translation.
    pub fn opposite_with_twist(polyhedron: IncidenceComplex, tenths: i64) -> Result<Self> {
        if (0..polyhedron.count(2)).any(|f| polyhedron.gonality(f) != 5) {
            return Err(Error::InvalidParameter("turns in tenths need pentagonal faces".into()));
        }
        let offset = offset_for_twist(tenths)?;
        FacetPairing::opposite(polyhedron, offset)
    }
}

/// Rotation offset for a twist of `tenths / 10` turn between opposite
/// pentagons. Translation takes a face onto its opposite rotated by an odd
/// number of tenths, and the antipodal map already contributes a half turn.
pub fn offset_for_twist(tenths: i64) -> Result<usize> {
    if tenths.rem_euclid(2) != 1 {
        return Err(Error::InvalidParameter(format!(
            "twist of {tenths}/10 turn does not match vertices; use an odd number of tenths"
        )));
    }
    Ok(((tenths - 5) / 2).rem_euclid(5) as usize)
}

/// Quotient flag system of a facet pairing.
pub fn facet_pairing_quotient(p: &FacetPairing) -> Result<FlagSystem> {
    let x = &p.polyhedron;
    let alpha = antipodal_vertex_map(x)?;
    let perm = induced_automorphism(x, &alpha)?;
    let cycles = oriented_face_cycles(x)?;
    let (fs, chains) = to_flags_with_chains(x)?;
    let edge_of: HashMap<[usize; 2], usize> = (0..x.count(1)).map(|e| (x.edge_vertices(e), e)).collect();
    let index: HashMap<[usize; 4], usize> = chains.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    // vertex map of each face onto its partner
    let mut glue: Vec<(usize, HashMap<usize, usize>)> = vec![(usize::MAX, HashMap::new()); x.count(2)];
    for &(f, g, r) in &p.pairs {
        for (src, dst) in [(f, g), (g, f)] {
            if perm[2][src] != dst {
                return Err(Error::InvalidParameter(format!("faces {src} and {dst} are not antipodal")));
            }
            let cyc = &cycles[dst];
            let k = cyc.len();
            let pos: HashMap<usize, usize> = cyc.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let map = x
                .face_vertices(src)
                .into_iter()
                .map(|v| (v, cyc[(pos[&alpha[v]] + r) % k]))
                .collect();
            glue[src] = (dst, map);
        }
    }
    let adj3: Vec<usize> = chains
        .iter()
        .map(|c| {
            let (dst, map) = &glue[c[2]];
            let [a, b] = x.edge_vertices(c[1]);
            let (ma, mb) = (map[&a], map[&b]);
            let e = edge_of
                .get(&[ma.min(mb), ma.max(mb)])
                .ok_or_else(|| Error::InvalidFlags("gluing does not map edges to edges".into()))?;
            index
                .get(&[map[&c[0]], *e, *dst, 0])
                .copied()
                .ok_or_else(|| Error::InvalidFlags("gluing does not map flags to flags".into()))
        })
        .collect::<Result<_>>()?;
    let mut adj: Vec<Vec<usize>> = fs.involutions().to_vec();
    adj.push(adj3);
    FlagSystem::new(adj)
}

/// Checks that a closed rank-3 flag system is a manifold: every vertex
/// figure is a sphere. Returns the Euler characteristic of each vertex figure
/// on failure.
pub fn check_manifold(fs: &FlagSystem) -> Result<()> {
    if fs.rank() != 3 || !fs.is_closed() {
        return Err(Error::NotManifold("not a closed rank-3 flag system".into()));
    }
    let (vertex, n) = fs.cell_orbits(0);
    let mut seen = vec![false; n];
    for (f, &v) in vertex.iter().enumerate() {
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        let link = residue(fs, f, 0);
        let chi = link.euler_characteristic();
        if chi != 2 {
            return Err(Error::NotManifold(format!("vertex {v} has a link with Euler characteristic {chi}")));
        }
    }
    Ok(())
}

/// Outcome of one twist in [`twist_table`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistRow {
    pub tenths: i64,
    pub offset: usize,
    pub fvector: FVector,
    pub manifold: bool,
    pub orientable: bool,
}

/// Opposite-face quotients of a pentagon-faced polyhedron for every twist of
/// 1, 3, 5, 7 and 9 tenths of a turn.
pub fn twist_table(polyhedron: &IncidenceComplex) -> Result<Vec<TwistRow>> {
    [1, 3, 5, 7, 9]
        .into_iter()
        .map(|tenths| {
            let pairing = FacetPairing::opposite_with_twist(polyhedron.clone(), tenths)?;
            let fs = facet_pairing_quotient(&pairing)?;
            Ok(TwistRow {
                tenths,
                offset: offset_for_twist(tenths)?,
                fvector: fs.f_vector(),
                manifold: check_manifold(&fs).is_ok(),
                orientable: fs.orientability() == Orientability::Orientable,
            })
        })
        .collect()
}
