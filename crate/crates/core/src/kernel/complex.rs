use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reference to a cell: its rank and its dense index within that rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellRef {
    pub rank: usize,
    pub id: usize,
}

impl CellRef {
    pub fn new(rank: usize, id: usize) -> Self {
        CellRef { rank, id }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-cell #{}", self.rank, self.id)
    }
}

/// A regular ranked cell complex stored as boundary lists.
///
/// Cells of rank `k` are numbered densely from zero. The boundary of an edge
/// is its two vertices in increasing order, the boundary of a 2-cell is the
/// cyclic sequence of its edges in canonical rotation (the lexicographically
/// smallest rotation or reflection), and the boundary of a higher cell is the
/// sorted set of its facets.
#[derive(Debug, Clone)]
pub struct IncidenceComplex {
    dim: usize,
    cells: Vec<Vec<Vec<usize>>>,
    labels: BTreeMap<CellRef, String>,
    cofaces: OnceLock<Vec<Vec<Vec<usize>>>>,
}

impl PartialEq for IncidenceComplex {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.cells == other.cells && self.labels == other.labels
    }
}

impl Eq for IncidenceComplex {}

/// Smallest rotation or reflection of a cyclic sequence.
pub fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    for base in [seq, rev.as_slice()] {
        for start in 0..n {
            let cand: Vec<usize> = (0..n).map(|i| base[(start + i) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

impl IncidenceComplex {
    /// Builds a complex from raw boundary lists, normalizing each boundary
    /// and checking the structural invariants.
    ///
    /// `cells[0]` only fixes the number of vertices; its entries must be empty.
    pub fn new(dim: usize, mut cells: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if cells.len() != dim + 1 {
            return Err(Error::InvalidParameter(format!(
                "expected {} ranks of cells, got {}",
                dim + 1,
                cells.len()
            )));
        }
        for (k, rank) in cells.iter_mut().enumerate() {
            for b in rank.iter_mut() {
                match k {
                    0 => {}
                    2 => *b = canonical_cycle(b),
                    _ => b.sort_unstable(),
                }
            }
        }
        let complex = IncidenceComplex {
            dim,
            cells,
            labels: BTreeMap::new(),
            cofaces: OnceLock::new(),
        };
        complex.check_structure()?;
        Ok(complex)
    }

    /// A closed or open polygonal surface from vertex cycles.
    ///
    /// Edge ids follow the sorted order of their vertex pairs.
    pub fn from_polygons(num_vertices: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (fi, f) in faces.iter().enumerate() {
            if f.len() < 3 {
                return Err(Error::malformed(2, fi, "polygon with fewer than 3 vertices"));
            }
            for i in 0..f.len() {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                if a >= num_vertices || b >= num_vertices {
                    return Err(Error::malformed(2, fi, "vertex index out of range"));
                }
                pairs.push((a.min(b), a.max(b)));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let index: HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let edges = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        let polys = faces
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|i| {
                        let (a, b) = (f[i], f[(i + 1) % f.len()]);
                        index[&(a.min(b), a.max(b))]
                    })
                    .collect()
            })
            .collect();
        IncidenceComplex::new(2, vec![vec![Vec::new(); num_vertices], edges, polys])
    }

    /// A simplicial 3-complex from its tetrahedra given as vertex quadruples.
    pub fn from_tetrahedra(num_vertices: usize, tets: &[[usize; 4]]) -> Result<Self> {
        let mut tris: Vec<[usize; 3]> = Vec::with_capacity(tets.len() * 4);
        let mut pairs: Vec<[usize; 2]> = Vec::with_capacity(tets.len() * 6);
        for (ti, t) in tets.iter().enumerate() {
            let mut s = *t;
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) || s[3] >= num_vertices {
                return Err(Error::malformed(3, ti, "tetrahedron needs 4 distinct valid vertices"));
            }
            for skip in 0..4 {
                let tri: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| s[i]).collect();
                tris.push([tri[0], tri[1], tri[2]]);
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    pairs.push([s[i], s[j]]);
                }
            }
        }
        tris.sort_unstable();
        tris.dedup();
        pairs.sort_unstable();
        pairs.dedup();
        let edge_id: HashMap<[usize; 2], usize> =
            pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let tri_id: HashMap<[usize; 3], usize> =
            tris.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let edges = pairs.iter().map(|p| p.to_vec()).collect();
        let faces = tris
            .iter()
            .map(|&[a, b, c]| vec![edge_id[&[a, b]], edge_id[&[b, c]], edge_id[&[a, c]]])
            .collect();
        let solids = tets
            .iter()
            .map(|t| {
                let mut s = *t;
                s.sort_unstable();
                (0..4)
                    .map(|skip| {
                        let tri: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| s[i]).collect();
                        tri_id[&[tri[0], tri[1], tri[2]]]
                    })
                    .collect()
            })
            .collect();
        IncidenceComplex::new(3, vec![vec![Vec::new(); num_vertices], edges, faces, solids])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn count(&self, rank: usize) -> usize {
        self.cells.get(rank).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Boundary list of a cell (empty for vertices).
    pub fn boundary(&self, rank: usize, id: usize) -> &[usize] {
        &self.cells[rank][id]
    }

    pub fn cells(&self, rank: usize) -> &[Vec<usize>] {
        &self.cells[rank]
    }

    pub fn labels(&self) -> &BTreeMap<CellRef, String> {
        &self.labels
    }

    pub fn label(&self, cell: CellRef) -> Option<&str> {
        self.labels.get(&cell).map(String::as_str)
    }

    pub fn set_label(&mut self, cell: CellRef, label: impl Into<String>) {
        self.labels.insert(cell, label.into());
    }

    pub fn with_labels(mut self, labels: BTreeMap<CellRef, String>) -> Self {
        self.labels = labels;
        self
    }

    /// Cells of rank `rank + 1` containing each cell of rank `rank`.
    pub fn cofaces(&self, rank: usize) -> &[Vec<usize>] {
        let all = self.cofaces.get_or_init(|| {
            (0..self.dim)
                .map(|k| {
                    let mut co = vec![Vec::new(); self.count(k)];
                    for (id, b) in self.cells[k + 1].iter().enumerate() {
                        for &x in b {
                            co[x].push(id);
                        }
                    }
                    co
                })
                .collect()
        });
        &all[rank]
    }

    /// Vertices of an edge.
    pub fn edge_vertices(&self, e: usize) -> [usize; 2] {
        let b = &self.cells[1][e];
        [b[0], b[1]]
    }

    /// Vertex cycle of a 2-cell, aligned with its edge cycle: vertex `i` is
    /// shared by edges `i - 1` and `i`.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        let cyc = &self.cells[2][f];
        let n = cyc.len();
        (0..n)
            .map(|i| {
                let [a, b] = self.edge_vertices(cyc[(i + n - 1) % n]);
                let [c, d] = self.edge_vertices(cyc[i]);
                if a == c || a == d {
                    a
                } else {
                    debug_assert!(b == c || b == d);
                    b
                }
            })
            .collect()
    }

    pub fn gonality(&self, f: usize) -> usize {
        self.cells[2][f].len()
    }

    /// All vertices below a cell.
    pub fn cell_vertices(&self, rank: usize, id: usize) -> Vec<usize> {
        match rank {
            0 => vec![id],
            1 => self.edge_vertices(id).to_vec(),
            2 => {
                let mut v = self.face_vertices(id);
                v.sort_unstable();
                v
            }
            _ => {
                let mut v: Vec<usize> = self.cells[rank][id]
                    .iter()
                    .flat_map(|&c| self.cell_vertices(rank - 1, c))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    /// All edges below a cell of rank >= 2.
    pub fn cell_edges(&self, rank: usize, id: usize) -> Vec<usize> {
        match rank {
            2 => {
                let mut v = self.cells[2][id].clone();
                v.sort_unstable();
                v
            }
            _ => {
                let mut v: Vec<usize> = self.cells[rank][id]
                    .iter()
                    .flat_map(|&c| self.cell_edges(rank - 1, c))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    /// Subcomplex spanned by the given top cells together with all their faces.
    ///
    /// Returns the complex and, per rank, the original ids of its cells.
    pub fn subcomplex(&self, top: &[usize]) -> (IncidenceComplex, Vec<Vec<usize>>) {
        let d = self.dim;
        let mut keep: Vec<Vec<bool>> = (0..=d).map(|k| vec![false; self.count(k)]).collect();
        for &t in top {
            keep[d][t] = true;
        }
        for k in (1..=d).rev() {
            for id in 0..self.count(k) {
                if keep[k][id] {
                    for &b in &self.cells[k][id] {
                        keep[k - 1][b] = true;
                    }
                }
            }
        }
        let origin: Vec<Vec<usize>> = keep
            .iter()
            .map(|row| (0..row.len()).filter(|&i| row[i]).collect())
            .collect();
        let remap: Vec<HashMap<usize, usize>> = origin
            .iter()
            .map(|ids| ids.iter().enumerate().map(|(n, &o)| (o, n)).collect())
            .collect();
        let cells: Vec<Vec<Vec<usize>>> = (0..=d)
            .map(|k| {
                origin[k]
                    .iter()
                    .map(|&o| {
                        if k == 0 {
                            Vec::new()
                        } else {
                            self.cells[k][o].iter().map(|b| remap[k - 1][b]).collect()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut labels = BTreeMap::new();
        for (r, l) in &self.labels {
            if let Some(&n) = remap[r.rank].get(&r.id) {
                labels.insert(CellRef::new(r.rank, n), l.clone());
            }
        }
        let sub = IncidenceComplex::new(d, cells)
            .expect("subcomplex of a valid complex is valid")
            .with_labels(labels);
        (sub, origin)
    }

    /// Copy of the complex without the listed top cells.
    pub fn without_top_cells(&self, remove: &[usize]) -> IncidenceComplex {
        let keep: Vec<usize> = (0..self.count(self.dim)).filter(|i| !remove.contains(i)).collect();
        self.subcomplex(&keep).0
    }

    /// Renumbers cells by the given per-rank permutations (`perm[k][old] = new`).
    pub fn relabeled(&self, perm: &[Vec<usize>]) -> Result<IncidenceComplex> {
        let d = self.dim;
        let mut cells: Vec<Vec<Vec<usize>>> =
            (0..=d).map(|k| vec![Vec::new(); self.count(k)]).collect();
        for k in 0..=d {
            for (old, b) in self.cells[k].iter().enumerate() {
                let mapped = if k == 0 {
                    Vec::new()
                } else {
                    b.iter().map(|&x| perm[k - 1][x]).collect()
                };
                cells[k][perm[k][old]] = mapped;
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|(r, l)| (CellRef::new(r.rank, perm[r.rank][r.id]), l.clone()))
            .collect();
        Ok(IncidenceComplex::new(d, cells)?.with_labels(labels))
    }

    /// Connected components of the vertex-edge graph.
    pub fn num_components(&self) -> usize {
        let n = self.count(0);
        let mut uf = UnionFind::new(n);
        if self.dim >= 1 {
            for e in 0..self.count(1) {
                let [a, b] = self.edge_vertices(e);
                uf.union(a, b);
            }
        }
        (0..n).filter(|&i| uf.find(i) == i).count()
    }

    fn check_structure(&self) -> Result<()> {
        for (i, b) in self.cells[0].iter().enumerate() {
            if !b.is_empty() {
                return Err(Error::malformed(0, i, "vertices have no boundary"));
            }
        }
        for k in 1..=self.dim {
            let lower = self.count(k - 1);
            for (id, b) in self.cells[k].iter().enumerate() {
                if b.iter().any(|&x| x >= lower) {
                    return Err(Error::malformed(k, id, "boundary references a missing cell"));
                }
                match k {
                    1 => {
                        if b.len() != 2 || b[0] == b[1] {
                            return Err(Error::malformed(1, id, "edge needs 2 distinct vertices"));
                        }
                    }
                    2 => self.check_polygon(id)?,
                    _ => {
                        if b.windows(2).any(|w| w[0] == w[1]) {
                            return Err(Error::malformed(k, id, "repeated facet"));
                        }
                        // each ridge of the cell must lie in exactly two of its facets
                        let mut ridge: HashMap<usize, usize> = HashMap::new();
                        for &f in b {
                            for &r in &self.cells[k - 1][f] {
                                *ridge.entry(r).or_default() += 1;
                            }
                        }
                        if let Some((r, c)) = ridge.iter().find(|(_, &c)| c != 2) {
                            return Err(Error::malformed(
                                k,
                                id,
                                format!("ridge {r} lies in {c} of its facets, expected 2"),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_polygon(&self, id: usize) -> Result<()> {
        let cyc = &self.cells[2][id];
        let n = cyc.len();
        if n < 3 {
            return Err(Error::malformed(2, id, "polygon with fewer than 3 edges"));
        }
        let mut seen_v = Vec::with_capacity(n);
        for i in 0..n {
            let [a, b] = self.edge_vertices(cyc[i]);
            let [c, d] = self.edge_vertices(cyc[(i + 1) % n]);
            let shared: Vec<usize> = [a, b].into_iter().filter(|&x| x == c || x == d).collect();
            if shared.len() != 1 {
                return Err(Error::malformed(2, id, "consecutive edges do not meet in one vertex"));
            }
            seen_v.push(shared[0]);
        }
        seen_v.sort_unstable();
        if seen_v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::malformed(2, id, "boundary is not a simple cycle"));
        }
        let mut e = cyc.clone();
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::malformed(2, id, "repeated edge in boundary"));
        }
        Ok(())
    }
}

/// Plain union-find with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns the surviving root.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        lo
    }
}
