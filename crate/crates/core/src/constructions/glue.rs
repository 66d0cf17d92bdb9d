//! Gluing two closed complexes along a top cell and flattening the seam.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::builders::{build_120cell, build_barrel};
use crate::error::{Error, Result};
use crate::kernel::{CellRef, IncidenceComplex};

/// Two complexes of equal rank, a top cell in each, and a vertex bijection
/// between the two cells.
#[derive(Debug, Clone)]
pub struct GlueSite<'a> {
    pub a: &'a IncidenceComplex,
    pub b: &'a IncidenceComplex,
    pub facet_a: usize,
    pub facet_b: usize,
    /// Pairs (vertex of `facet_a`, vertex of `facet_b`).
    pub iso: Vec<(usize, usize)>,
}

/// Output of [`glue_and_flatten_with_maps`]: the glued complex and, for every
/// input cell, the output cell it ended up in (`None` if deleted).
#[derive(Debug, Clone)]
pub struct Glued {
    pub complex: IncidenceComplex,
    pub map_a: Vec<Vec<Option<usize>>>,
    pub map_b: Vec<Vec<Option<usize>>>,
}

/// Cells of every rank in the closure of a cell, including the cell.
fn closure(x: &IncidenceComplex, c: CellRef) -> Vec<Vec<usize>> {
    let mut ids = vec![Vec::new(); c.rank + 1];
    ids[c.rank] = vec![c.id];
    for k in (1..=c.rank).rev() {
        let mut lower: Vec<usize> = ids[k].iter().flat_map(|&b| x.boundary(k, b).iter().copied()).collect();
        lower.sort_unstable();
        lower.dedup();
        ids[k - 1] = lower;
    }
    ids
}

fn sorted_vertices(x: &IncidenceComplex, k: usize, id: usize) -> Vec<usize> {
    if k == 0 {
        vec![id]
    } else {
        x.cell_vertices(k, id)
    }
}

/// Extends a vertex bijection between the closures of two cells to all ranks,
/// checking that it preserves boundaries.
fn induced_map(
    a: &IncidenceComplex,
    ca: &[Vec<usize>],
    b: &IncidenceComplex,
    cb: &[Vec<usize>],
    iso: &[(usize, usize)],
) -> Result<Vec<HashMap<usize, usize>>> {
    let vmap: HashMap<usize, usize> = iso.iter().copied().collect();
    let inverse: HashSet<usize> = iso.iter().map(|p| p.1).collect();
    let va: HashSet<usize> = ca[0].iter().copied().collect();
    let vb: HashSet<usize> = cb[0].iter().copied().collect();
    if vmap.len() != iso.len() || inverse.len() != iso.len() || va != vmap.keys().copied().collect() || vb != inverse {
        return Err(Error::NotIsomorphism("vertex map is not a bijection between the facets".into()));
    }
    let mut maps = Vec::with_capacity(ca.len());
    maps.push(vmap.clone());
    for k in 1..ca.len() {
        if ca[k].len() != cb[k].len() {
            return Err(Error::NotIsomorphism(format!("facets differ in rank-{k} counts")));
        }
        let lookup: HashMap<Vec<usize>, usize> =
            cb[k].iter().map(|&id| (sorted_vertices(b, k, id), id)).collect();
        let mut m = HashMap::new();
        for &id in &ca[k] {
            let mut image: Vec<usize> = sorted_vertices(a, k, id).iter().map(|v| vmap[v]).collect();
            image.sort_unstable();
            let target = *lookup
                .get(&image)
                .ok_or_else(|| Error::NotIsomorphism(format!("rank-{k} cell {id} has no image")))?;
            let mut expected: Vec<usize> = a.boundary(k, id).iter().map(|y| maps[k - 1][y]).collect();
            expected.sort_unstable();
            let mut actual = b.boundary(k, target).to_vec();
            actual.sort_unstable();
            if expected != actual {
                return Err(Error::NotIsomorphism(format!("rank-{k} cell {id} boundary not preserved")));
            }
            m.insert(id, target);
        }
        maps.push(m);
    }
    Ok(maps)
}

struct Workspace {
    dim: usize,
    cells: Vec<Vec<Vec<usize>>>,
    alive: Vec<Vec<bool>>,
    cof: Vec<Vec<Vec<usize>>>,
    fwd: Vec<Vec<Option<usize>>>,
}

impl Workspace {
    fn edge_ends(&self, e: usize) -> [usize; 2] {
        [self.cells[1][e][0], self.cells[1][e][1]]
    }

    fn live_cofaces(&self, k: usize, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.cof[k][x].iter().copied().filter(|&c| self.alive[k + 1][c]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Merges `c2` into `c1` (both of rank `m`) across their common facet `x`,
    /// which is deleted.
    fn merge(&mut self, m: usize, c1: usize, c2: usize, x: usize) -> Result<()> {
        let merged = match m {
            1 => {
                let ends = |e: &[usize]| if e[0] == x { e[1] } else { e[0] };
                let (p, q) = (ends(&self.cells[1][c1]), ends(&self.cells[1][c2]));
                if p == q {
                    return Err(Error::Construction(format!("merging edges at vertex {x} closes a loop")));
                }
                vec![p.min(q), p.max(q)]
            }
            2 => self.merge_cycles(c1, c2, x)?,
            _ => {
                let mut s: Vec<usize> = self.cells[m][c1]
                    .iter()
                    .chain(self.cells[m][c2].iter())
                    .copied()
                    .filter(|&y| y != x)
                    .collect();
                s.sort_unstable();
                s.dedup();
                s
            }
        };
        for &y in &self.cells[m][c2].clone() {
            if y != x {
                for c in self.cof[m - 1][y].iter_mut() {
                    if *c == c2 {
                        *c = c1;
                    }
                }
            }
        }
        self.cells[m][c1] = merged;
        self.alive[m][c2] = false;
        self.alive[m - 1][x] = false;
        self.fwd[m][c2] = Some(c1);
        if m < self.dim {
            let above = std::mem::take(&mut self.cof[m][c2]);
            for &z in &above {
                if !self.alive[m + 1][z] {
                    continue;
                }
                let b = &mut self.cells[m + 1][z];
                for y in b.iter_mut() {
                    if *y == c2 {
                        *y = c1;
                    }
                }
                if m + 1 == 2 {
                    // the merged edges are consecutive in every face through x
                    let mut out: Vec<usize> = Vec::with_capacity(b.len());
                    for &y in b.iter() {
                        if out.last() != Some(&y) {
                            out.push(y);
                        }
                    }
                    while out.len() > 1 && out.first() == out.last() {
                        out.pop();
                    }
                    *b = out;
                } else {
                    b.sort_unstable();
                    b.dedup();
                }
            }
            self.cof[m][c1].extend(above);
        }
        Ok(())
    }

    fn merge_cycles(&self, c1: usize, c2: usize, x: usize) -> Result<Vec<usize>> {
        let rotate = |c: &[usize]| -> Result<Vec<usize>> {
            let pos = c
                .iter()
                .position(|&y| y == x)
                .ok_or_else(|| Error::Construction("merged face misses the seam edge".into()))?;
            Ok((1..c.len()).map(|i| c[(pos + i) % c.len()]).collect())
        };
        let p = rotate(&self.cells[2][c1])?;
        let mut q = rotate(&self.cells[2][c2])?;
        let [u, w] = self.edge_ends(x);
        let last = self.edge_ends(*p.last().expect("faces have edges"));
        let joint = if last.contains(&w) { w } else { u };
        if !self.edge_ends(q[0]).contains(&joint) {
            q.reverse();
        }
        Ok(p.into_iter().chain(q).collect())
    }
}

/// Glues two closed complexes along the given top cells and flattens the
/// seam: both copies of the cell are removed, then for every face of the
/// cell, from rank `dim - 1` down to vertices, the two surviving cells on
/// either side are merged and the face is deleted.
pub fn glue_and_flatten(site: &GlueSite) -> Result<IncidenceComplex> {
    Ok(glue_and_flatten_with_maps(site)?.complex)
}

pub fn glue_and_flatten_with_maps(site: &GlueSite) -> Result<Glued> {
    let (a, b) = (site.a, site.b);
    let d = a.dim();
    if b.dim() != d || d < 2 {
        return Err(Error::InvalidParameter("glued complexes need equal rank >= 2".into()));
    }
    if site.facet_a >= a.count(d) || site.facet_b >= b.count(d) {
        return Err(Error::InvalidParameter("glue facet out of range".into()));
    }
    for x in [a, b] {
        if x.cofaces(d - 1).iter().any(|c| c.len() != 2) {
            return Err(Error::NotClosed("glued complexes must be closed".into()));
        }
    }
    let ca = closure(a, CellRef::new(d, site.facet_a));
    let cb = closure(b, CellRef::new(d, site.facet_b));
    let iso = induced_map(a, &ca, b, &cb, &site.iso)?;
    let inv_iso: Vec<HashMap<usize, usize>> =
        iso.iter().map(|m| m.iter().map(|(&p, &q)| (q, p)).collect()).collect();

    // B's cells either land on A's copy of the seam or get fresh ids.
    let mut map_b: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut next = a.count(k);
        let row = (0..b.count(k))
            .map(|id| match inv_iso[k].get(&id) {
                Some(&ida) => ida,
                None => {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        map_b.push(row);
    }
    let mut cells: Vec<Vec<Vec<usize>>> = (0..=d).map(|k| a.cells(k).to_vec()).collect();
    for k in 0..=d {
        for id in 0..b.count(k) {
            if inv_iso[k].contains_key(&id) {
                continue;
            }
            let bd = if k == 0 {
                Vec::new()
            } else {
                b.boundary(k, id).iter().map(|&y| map_b[k - 1][y]).collect()
            };
            cells[k].push(bd);
        }
    }
    let mut alive: Vec<Vec<bool>> = cells.iter().map(|r| vec![true; r.len()]).collect();
    alive[d][site.facet_a] = false;
    let mut cof: Vec<Vec<Vec<usize>>> = (0..d).map(|k| vec![Vec::new(); cells[k].len()]).collect();
    for k in 1..=d {
        for (id, bd) in cells[k].iter().enumerate() {
            for &y in bd {
                cof[k - 1][y].push(id);
            }
        }
    }
    let fwd = cells.iter().map(|r| vec![None; r.len()]).collect();
    let mut ws = Workspace { dim: d, cells, alive, cof, fwd };

    for r in (0..d).rev() {
        for &x in &ca[r] {
            let live = ws.live_cofaces(r, x);
            if live.len() != 2 {
                return Err(Error::Construction(format!(
                    "seam {} has {} surviving cofaces instead of 2",
                    CellRef::new(r, x),
                    live.len()
                )));
            }
            ws.merge(r + 1, live[0], live[1], x)?;
        }
    }

    let mut new_id: Vec<Vec<Option<usize>>> = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut next = 0;
        new_id.push(
            ws.alive[k]
                .iter()
                .map(|&al| {
                    al.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect(),
        );
    }
    let resolve = |k: usize, mut id: usize| -> Option<usize> {
        while !ws.alive[k][id] {
            id = ws.fwd[k][id]?;
        }
        new_id[k][id]
    };
    let out_cells: Vec<Vec<Vec<usize>>> = (0..=d)
        .map(|k| {
            (0..ws.cells[k].len())
                .filter(|&id| ws.alive[k][id])
                .map(|id| ws.cells[k][id].iter().map(|&y| new_id[k - 1][y].expect("live boundary")).collect())
                .collect()
        })
        .collect();
    let map_a: Vec<Vec<Option<usize>>> =
        (0..=d).map(|k| (0..a.count(k)).map(|id| resolve(k, id)).collect()).collect();
    let map_b_out: Vec<Vec<Option<usize>>> = (0..=d)
        .map(|k| {
            (0..b.count(k))
                .map(|id| if k == d && id == site.facet_b { None } else { resolve(k, map_b[k][id]) })
                .collect()
        })
        .collect();
    let mut labels = BTreeMap::new();
    for (src, map) in [(b, &map_b_out), (a, &map_a)] {
        for (cell, l) in src.labels() {
            if let Some(n) = map[cell.rank][cell.id] {
                labels.insert(CellRef::new(cell.rank, n), l.clone());
            }
        }
    }
    let complex = IncidenceComplex::new(d, out_cells)?.with_labels(labels);
    Ok(Glued { complex, map_a, map_b: map_b_out })
}

fn vertex_distances(x: &IncidenceComplex, from: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); x.count(0)];
    for e in 0..x.count(1) {
        let [p, q] = x.edge_vertices(e);
        adj[p].push(q);
        adj[q].push(p);
    }
    bfs(&adj, from)
}

fn bfs(adj: &[Vec<usize>], from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn unique_farthest(dist: &[usize]) -> Option<usize> {
    let max = *dist.iter().max()?;
    let mut far = dist.iter().enumerate().filter(|(_, &d)| d == max);
    let first = far.next()?.0;
    far.next().is_none().then_some(first)
}

/// Maps every vertex to the unique vertex at maximal graph distance, and
/// checks that the result is an automorphism.
pub fn antipodal_vertex_map(x: &IncidenceComplex) -> Result<Vec<usize>> {
    let map = (0..x.count(0))
        .map(|v| {
            unique_farthest(&vertex_distances(x, v))
                .ok_or_else(|| Error::InvalidParameter(format!("vertex {v} has no unique antipode")))
        })
        .collect::<Result<Vec<_>>>()?;
    induced_automorphism(x, &map)?;
    Ok(map)
}

/// Per-rank cell permutation induced by a vertex permutation, if that
/// permutation is an automorphism.
pub fn induced_automorphism(x: &IncidenceComplex, vmap: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = x.count(0);
    let mut seen = vec![false; n];
    for &v in vmap {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotIsomorphism("vertex map is not a permutation".into()));
        }
    }
    let mut perm = vec![vmap.to_vec()];
    for k in 1..=x.dim() {
        let lookup: HashMap<Vec<usize>, usize> =
            (0..x.count(k)).map(|id| (x.cell_vertices(k, id), id)).collect();
        let row = (0..x.count(k))
            .map(|id| {
                let mut image: Vec<usize> = x.cell_vertices(k, id).iter().map(|&v| vmap[v]).collect();
                image.sort_unstable();
                lookup
                    .get(&image)
                    .copied()
                    .ok_or_else(|| Error::NotIsomorphism(format!("rank-{k} cell {id} has no image")))
            })
            .collect::<Result<Vec<_>>>()?;
        for id in 0..x.count(k) {
            let mut expected: Vec<usize> = x.boundary(k, id).iter().map(|&y| perm[k - 1][y]).collect();
            expected.sort_unstable();
            let mut actual = x.boundary(k, row[id]).to_vec();
            actual.sort_unstable();
            if expected != actual {
                return Err(Error::NotIsomorphism(format!("rank-{k} cell {id} boundary not preserved")));
            }
        }
        perm.push(row);
    }
    Ok(perm)
}

/// The top cell at maximal distance from `c` in the dual graph, if unique.
pub fn opposite_top_cell(x: &IncidenceComplex, c: usize) -> Result<usize> {
    let d = x.dim();
    let mut adj = vec![Vec::new(); x.count(d)];
    for pair in x.cofaces(d - 1) {
        if let [p, q] = pair[..] {
            adj[p].push(q);
            adj[q].push(p);
        }
    }
    unique_farthest(&bfs(&adj, c)).ok_or_else(|| Error::InvalidParameter(format!("top cell {c} has no unique opposite")))
}

/// Chain of `n` copies of `seed`, each glued to the previous one at the cell
/// opposite its own gluing cell through the antipodal map.
pub fn chain(seed: &IncidenceComplex, n: usize, base: usize) -> Result<IncidenceComplex> {
    if n < 1 {
        return Err(Error::InvalidParameter("chain needs n >= 1".into()));
    }
    let d = seed.dim();
    let alpha = antipodal_vertex_map(seed)?;
    let far = opposite_top_cell(seed, base)?;
    let far_vertices = seed.cell_vertices(d, far);
    let mut image: Vec<usize> = far_vertices.iter().map(|&v| alpha[v]).collect();
    image.sort_unstable();
    if image != seed.cell_vertices(d, base) {
        return Err(Error::InvalidParameter("antipodal map does not swap the chain facets".into()));
    }
    let mut out = seed.clone();
    // where the current last copy's cells sit in `out`
    let mut last_top = far;
    let mut last_vertex: Vec<usize> = (0..seed.count(0)).collect();
    for _ in 1..n {
        let iso = far_vertices.iter().map(|&v| (last_vertex[v], alpha[v])).collect();
        let glued = glue_and_flatten_with_maps(&GlueSite {
            a: &out,
            b: seed,
            facet_a: last_top,
            facet_b: base,
            iso,
        })?;
        last_top = glued.map_b[d][far].expect("far cell survives");
        last_vertex = glued.map_b[0]
            .iter()
            .map(|m| m.unwrap_or(usize::MAX))
            .collect();
        out = glued.complex;
    }
    Ok(out)
}

/// `n` copies of the 120-cell glued in a row along opposite facets.
#[allow(non_snake_case)]
pub fn chain_A(n: usize) -> Result<IncidenceComplex> {
    if n < 1 {
        return Err(Error::InvalidParameter("chain_A needs n >= 1".into()));
    }
    chain(&build_120cell()?, n, 0)
}

/// Two barrels `B_i` glued cap to cap.
pub fn elongated_barrel(i: usize) -> Result<IncidenceComplex> {
    let b = build_barrel(i)?;
    let cap = |ring: std::ops::Range<usize>| -> Result<usize> {
        let want: Vec<usize> = ring.collect();
        (0..b.count(2))
            .find(|&f| b.cell_vertices(2, f) == want)
            .ok_or_else(|| Error::Construction("barrel cap not found".into()))
    };
    let top = cap(0..i)?;
    let bottom = cap(3 * i..4 * i)?;
    glue_and_flatten(&GlueSite {
        a: &b,
        b: &b,
        facet_a: bottom,
        facet_b: top,
        iso: (0..i).map(|k| (3 * i + k, k)).collect(),
    })
}
