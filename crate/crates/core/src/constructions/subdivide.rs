//! Subdivision of the simplicial dual followed by dualization.
//!
//! Every edge of the dual is cut into three, which truncates each tetrahedron
//! at its corners. The truncated tetrahedron is coned from a new centre into
//! four tetrahedra and four hexagonal pyramids; the two pyramids over each
//! triangle form a hexagonal bipyramid, which is split into six tetrahedra
//! around its axis. Dualizing turns the original vertices back into the old
//! cells, edge points into dodecahedra or hexagonal barrels (by the gonality
//! of the face they dualize) and centres into 28-vertex fullerenes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::kernel::{dual, IncidenceComplex};

/// The subdivided simplicial complex for a closed simplicial rank-3 input.
///
/// Vertices are numbered: input vertices, then two points per input edge
/// (the one near the smaller endpoint first), then one centre per tetrahedron.
pub fn subdivide_simplicial(s: &IncidenceComplex) -> Result<IncidenceComplex> {
    if s.dim() != 3 {
        return Err(Error::InvalidParameter("subdivision needs a rank-3 complex".into()));
    }
    let (n0, n1, n2, n3) = (s.count(0), s.count(1), s.count(2), s.count(3));
    let edge_of: HashMap<[usize; 2], usize> = (0..n1).map(|e| (s.edge_vertices(e), e)).collect();
    let near = |a: usize, b: usize| -> usize {
        let key = [a.min(b), a.max(b)];
        n0 + 2 * edge_of[&key] + usize::from(a > b)
    };
    let centre = |t: usize| n0 + 2 * n1 + t;

    let mut tets: Vec<[usize; 4]> = Vec::with_capacity(8 * n3 + 6 * n2);
    for t in 0..n3 {
        let vs = s.cell_vertices(3, t);
        let [a, b, c, d] = vs[..] else {
            return Err(Error::InvalidParameter(format!("cell {t} of the dual is not a tetrahedron")));
        };
        for (x, others) in [(a, [b, c, d]), (b, [a, c, d]), (c, [a, b, d]), (d, [a, b, c])] {
            let cut = others.map(|y| near(x, y));
            tets.push([x, cut[0], cut[1], cut[2]]);
            tets.push([centre(t), cut[0], cut[1], cut[2]]);
        }
    }
    let cofaces = s.cofaces(2);
    for tri in 0..n2 {
        let vs = s.cell_vertices(2, tri);
        let [a, b, c] = vs[..] else {
            return Err(Error::InvalidParameter(format!("face {tri} of the dual is not a triangle")));
        };
        let [t1, t2] = cofaces[tri][..] else {
            return Err(Error::NotClosed(format!("dual triangle {tri} is not in two tetrahedra")));
        };
        let hex = [near(a, b), near(b, a), near(b, c), near(c, b), near(c, a), near(a, c)];
        for k in 0..6 {
            tets.push([centre(t1), centre(t2), hex[k], hex[(k + 1) % 6]]);
        }
    }
    IncidenceComplex::from_tetrahedra(n0 + 2 * n1 + n3, &tets)
}

/// Subdivision-and-dualize step applied to a closed simple rank-3 complex.
#[allow(non_snake_case)]
pub fn subdivide_C(f: &IncidenceComplex) -> Result<IncidenceComplex> {
    if f.dim() != 3 {
        return Err(Error::InvalidParameter("subdivision needs a rank-3 complex".into()));
    }
    let fstar = dual(f)?;
    dual(&subdivide_simplicial(&fstar)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build_600cell;

    #[test]
    fn tetrahedron_count_on_600_cell() {
        let s = subdivide_simplicial(&build_600cell().unwrap()).unwrap();
        assert_eq!(s.count(3), 600 * 8 + 1200 * 6);
        assert_eq!(s.count(0), 120 + 2 * 720 + 600);
    }
}
