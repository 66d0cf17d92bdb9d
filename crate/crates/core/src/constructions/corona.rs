//! Corona growth around a simple polyhedron.
//!
//! Around `F` we stack, on each side, barrels over its faces (floor 1),
//! dodecahedra at its vertices (floor 2) and second barrels over its faces
//! (floor 3); a band of dodecahedra over its edges (floor 4) joins the two
//! sides. The output is assembled on the simplicial dual, one tetrahedron per
//! vertex listing the four cells that meet there, and then dualized.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::kernel::{dual, validate_simple_closed, CellRef, IncidenceComplex};

/// Floor labels carried by the cells of a corona, with `'` on the far side.
pub const FLOOR_LABELS: [&str; 4] = ["floor1", "floor2", "floor3", "floor4"];

struct Layout {
    p: usize,
    v: usize,
    side: usize,
}

impl Layout {
    fn core(&self, s: usize) -> usize {
        s * self.side
    }
    fn floor1(&self, s: usize, face: usize) -> usize {
        s * self.side + 1 + face
    }
    fn floor2(&self, s: usize, vertex: usize) -> usize {
        s * self.side + 1 + self.p + vertex
    }
    fn floor3(&self, s: usize, face: usize) -> usize {
        s * self.side + 1 + self.p + self.v + face
    }
    fn floor4(&self, edge: usize) -> usize {
        2 * self.side + edge
    }
}

fn tet(mut t: [usize; 4]) -> [usize; 4] {
    t.sort_unstable();
    t
}

/// Corona of a closed simple surface complex: a closed simple rank-3 complex
/// containing two copies of `F` as cells, with every cell labeled by floor.
#[allow(non_snake_case)]
pub fn corona_B(f: &IncidenceComplex) -> Result<IncidenceComplex> {
    if f.dim() != 2 {
        return Err(Error::InvalidParameter("corona needs a rank-2 complex".into()));
    }
    let report = validate_simple_closed(f);
    if !report.passed() {
        return Err(Error::NotClosed(format!("corona seed is not closed and simple: {report}")));
    }
    let (v, e, p) = (f.count(0), f.count(1), f.count(2));
    let lay = Layout { p, v, side: 1 + 2 * p + v };

    // faces around each vertex and, per face, the two face edges at each vertex
    let mut vertex_faces: Vec<Vec<usize>> = vec![Vec::new(); v];
    let mut corners: Vec<(usize, usize, [usize; 2])> = Vec::new();
    for phi in 0..p {
        let cyc = f.boundary(2, phi);
        let k = cyc.len();
        for i in 0..k {
            let (e1, e2) = (cyc[i], cyc[(i + 1) % k]);
            let [a, b] = f.edge_vertices(e1);
            let shared = if f.edge_vertices(e2).contains(&a) { a } else { b };
            vertex_faces[shared].push(phi);
            corners.push((phi, shared, [e1, e2]));
        }
    }
    let edge_faces = f.cofaces(1);

    let mut tets: Vec<[usize; 4]> = Vec::with_capacity(30 * v);
    for s in 0..2 {
        for b in 0..v {
            let [p1, p2, p3] = vertex_faces[b][..] else {
                return Err(Error::Construction(format!("vertex {b} does not lie on 3 faces")));
            };
            let fl1 = |phi| lay.floor1(s, phi);
            tets.push(tet([lay.core(s), fl1(p1), fl1(p2), fl1(p3)]));
            tets.push(tet([fl1(p1), fl1(p2), fl1(p3), lay.floor2(s, b)]));
            let star: Vec<usize> = f.cofaces(0)[b].iter().map(|&x| lay.floor4(x)).collect();
            tets.push(tet([lay.floor2(s, b), star[0], star[1], star[2]]));
        }
        for x in 0..e {
            let [b, c] = f.edge_vertices(x);
            let [phi, psi] = edge_faces[x][..] else {
                return Err(Error::Construction(format!("edge {x} does not lie on 2 faces")));
            };
            let (db, dc) = (lay.floor2(s, b), lay.floor2(s, c));
            tets.push(tet([lay.floor1(s, phi), lay.floor1(s, psi), db, dc]));
            for face in [phi, psi] {
                tets.push(tet([lay.floor1(s, face), lay.floor3(s, face), db, dc]));
                tets.push(tet([lay.floor3(s, face), db, dc, lay.floor4(x)]));
            }
        }
        for &(phi, b, [e1, e2]) in &corners {
            tets.push(tet([lay.floor3(s, phi), lay.floor2(s, b), lay.floor4(e1), lay.floor4(e2)]));
        }
    }
    for &(phi, _, [e1, e2]) in &corners {
        tets.push(tet([lay.floor3(0, phi), lay.floor3(1, phi), lay.floor4(e1), lay.floor4(e2)]));
    }

    let ncells = 2 * lay.side + e;
    let simplicial = IncidenceComplex::from_tetrahedra(ncells, &tets)
        .map_err(|err| Error::Construction(format!("corona assembly failed: {err}")))?;
    let mut out = dual(&simplicial).map_err(|err| Error::Construction(format!("corona is not closed: {err}")))?;
    let mut labels = BTreeMap::new();
    for s in 0..2 {
        let mark = if s == 0 { "" } else { "'" };
        labels.insert(CellRef::new(3, lay.core(s)), format!("F{mark}"));
        for phi in 0..p {
            labels.insert(CellRef::new(3, lay.floor1(s, phi)), format!("floor1{mark}"));
            labels.insert(CellRef::new(3, lay.floor3(s, phi)), format!("floor3{mark}"));
        }
        for b in 0..v {
            labels.insert(CellRef::new(3, lay.floor2(s, b)), format!("floor2{mark}"));
        }
    }
    for x in 0..e {
        labels.insert(CellRef::new(3, lay.floor4(x)), "floor4".to_string());
    }
    for (cell, l) in labels {
        out.set_label(cell, l);
    }
    let report = validate_simple_closed(&out);
    if !report.passed() {
        return Err(Error::Construction(format!("corona is not simple: {report}")));
    }
    Ok(out)
}
