use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::kernel::complex::{IncidenceComplex, UnionFind};
use crate::kernel::fvector::FVector;

/// Flags of a ranked complex with one adjacency involution per rank.
///
/// `adj[i][f]` is the flag that differs from `f` exactly in its `i`-cell.
/// A fixed point means the flag lies on the boundary of an open complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSystem {
    adj: Vec<Vec<usize>>,
}

/// Whether a connected complex admits a consistent orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

impl FlagSystem {
    /// Checks that every adjacency is an involution on the same flag set and
    /// that adjacencies of non-consecutive ranks commute.
    pub fn new(adj: Vec<Vec<usize>>) -> Result<Self> {
        if adj.is_empty() {
            return Err(Error::InvalidFlags("no adjacency involutions".into()));
        }
        let n = adj[0].len();
        for (i, a) in adj.iter().enumerate() {
            if a.len() != n {
                return Err(Error::InvalidFlags(format!("adj[{i}] has {} entries, expected {n}", a.len())));
            }
            for (f, &g) in a.iter().enumerate() {
                if g >= n || a[g] != f {
                    return Err(Error::InvalidFlags(format!("adj[{i}] is not an involution at flag {f}")));
                }
            }
        }
        for i in 0..adj.len() {
            for j in i + 2..adj.len() {
                for f in 0..n {
                    if adj[i][adj[j][f]] != adj[j][adj[i][f]] {
                        return Err(Error::InvalidFlags(format!(
                            "adj[{i}] and adj[{j}] do not commute at flag {f}"
                        )));
                    }
                }
            }
        }
        Ok(FlagSystem { adj })
    }

    /// Top rank of the complex (number of involutions minus one).
    pub fn rank(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn len(&self) -> usize {
        self.adj[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn adj(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn involutions(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// True when no involution has a fixed point.
    pub fn is_closed(&self) -> bool {
        self.adj.iter().all(|a| a.iter().enumerate().all(|(f, &g)| f != g))
    }

    /// Orbits of the subgroup generated by the listed involutions.
    ///
    /// Orbit ids are numbered by first occurrence in flag order.
    pub fn orbits(&self, generators: &[usize]) -> (Vec<usize>, usize) {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for &i in generators {
            for (f, &g) in self.adj[i].iter().enumerate() {
                uf.union(f, g);
            }
        }
        let mut id = vec![usize::MAX; n];
        let mut ids = vec![0; n];
        let mut next = 0;
        for f in 0..n {
            let r = uf.find(f);
            if id[r] == usize::MAX {
                id[r] = next;
                next += 1;
            }
            ids[f] = id[r];
        }
        (ids, next)
    }

    /// Orbits of the residue that fixes the `k`-cell, i.e. the `k`-cells.
    pub fn cell_orbits(&self, k: usize) -> (Vec<usize>, usize) {
        let gens: Vec<usize> = (0..=self.rank()).filter(|&j| j != k).collect();
        self.orbits(&gens)
    }

    pub fn num_components(&self) -> usize {
        let gens: Vec<usize> = (0..=self.rank()).collect();
        self.orbits(&gens).1
    }

    /// Cell counts from orbit counts; gonalities from `<adj0, adj1>` orbits.
    pub fn f_vector(&self) -> FVector {
        let counts: Vec<usize> = (0..=self.rank()).map(|k| self.cell_orbits(k).1).collect();
        let mut gon = Vec::new();
        if self.rank() >= 2 {
            let (face, nf) = self.cell_orbits(2);
            let (poly, np) = self.orbits(&[0, 1]);
            let mut poly_size = vec![0usize; np];
            for &p in &poly {
                poly_size[p] += 1;
            }
            let mut rep = vec![usize::MAX; nf];
            for f in 0..self.len() {
                if rep[face[f]] == usize::MAX {
                    rep[face[f]] = f;
                }
            }
            gon = rep.iter().map(|&f| poly_size[poly[f]] / 2).collect();
        }
        FVector::new(counts, gon)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Orientability of each connected component (flag graph bipartiteness).
    pub fn component_orientability(&self) -> Vec<Orientability> {
        let n = self.len();
        let mut color = vec![u8::MAX; n];
        let mut result = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            let mut ok = true;
            color[s] = 0;
            stack.push(s);
            while let Some(f) = stack.pop() {
                for a in &self.adj {
                    let g = a[f];
                    if g == f {
                        continue;
                    }
                    if color[g] == u8::MAX {
                        color[g] = 1 - color[f];
                        stack.push(g);
                    } else if color[g] == color[f] {
                        ok = false;
                    }
                }
            }
            result.push(if ok { Orientability::Orientable } else { Orientability::NonOrientable });
        }
        result
    }

    /// Orientability of the whole system; non-orientable if any component is.
    pub fn orientability(&self) -> Orientability {
        if self.component_orientability().contains(&Orientability::NonOrientable) {
            Orientability::NonOrientable
        } else {
            Orientability::Orientable
        }
    }

    /// Incidence multiplicities of each `k`-cell in `(k+1)`-cells, counted
    /// through flags so that quotients with multi-incidence are handled.
    pub fn incidence_degrees(&self, k: usize) -> Vec<usize> {
        let d = self.rank();
        let (cell, n) = self.cell_orbits(k);
        let gens: Vec<usize> = (0..=d).filter(|&j| j != k && j != k + 1).collect();
        let (inc, ni) = self.orbits(&gens);
        let mut owner = vec![usize::MAX; ni];
        let mut deg = vec![0usize; n];
        for f in 0..self.len() {
            if owner[inc[f]] == usize::MAX {
                owner[inc[f]] = cell[f];
                deg[cell[f]] += 1;
            }
        }
        deg
    }

    /// Renumbers flags: `perm[old] = new`.
    pub fn relabeled(&self, perm: &[usize]) -> FlagSystem {
        let n = self.len();
        let adj = self
            .adj
            .iter()
            .map(|a| {
                let mut out = vec![0; n];
                for f in 0..n {
                    out[perm[f]] = perm[a[f]];
                }
                out
            })
            .collect();
        FlagSystem { adj }
    }
}

/// Flags of a complex with the chain `(c_0, .., c_d)` behind each flag.
pub fn to_flags_with_chains(x: &IncidenceComplex) -> Result<(FlagSystem, Vec<[usize; 4]>)> {
    let d = x.dim();
    if d == 0 || d > 3 {
        return Err(Error::InvalidParameter(format!("flags supported for rank 1..=3, got {d}")));
    }
    let mut chains: Vec<[usize; 4]> = Vec::new();
    fn descend(x: &IncidenceComplex, rank: usize, id: usize, chain: &mut [usize; 4], out: &mut Vec<[usize; 4]>) {
        chain[rank] = id;
        if rank == 0 {
            out.push(*chain);
            return;
        }
        for &b in x.boundary(rank, id) {
            descend(x, rank - 1, b, chain, out);
        }
    }
    let mut chain = [0usize; 4];
    for top in 0..x.count(d) {
        descend(x, d, top, &mut chain, &mut chains);
    }
    let index: HashMap<[usize; 4], usize> = chains.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut adj = vec![vec![0usize; chains.len()]; d + 1];
    for (fi, c) in chains.iter().enumerate() {
        for i in 0..=d {
            let replacement = if i == d {
                let others: Vec<usize> = x.cofaces(d - 1)[c[d - 1]]
                    .iter()
                    .copied()
                    .filter(|&t| t != c[d])
                    .collect();
                match others.len() {
                    0 => None,
                    1 => Some(others[0]),
                    _ => {
                        return Err(Error::NotManifold(format!(
                            "{}-cell {} lies in more than two top cells",
                            d - 1,
                            c[d - 1]
                        )))
                    }
                }
            } else {
                let cands: Vec<usize> = x
                    .boundary(i + 1, c[i + 1])
                    .iter()
                    .copied()
                    .filter(|&y| y != c[i] && (i == 0 || x.boundary(i, y).contains(&c[i - 1])))
                    .collect();
                if cands.len() != 1 {
                    return Err(Error::NonRegular(format!(
                        "diamond property fails between {}-cell {} and {}-cell {}",
                        i + 1,
                        c[i + 1],
                        i.saturating_sub(1),
                        if i == 0 { 0 } else { c[i - 1] }
                    )));
                }
                Some(cands[0])
            };
            adj[i][fi] = match replacement {
                None => fi,
                Some(y) => {
                    let mut nc = *c;
                    nc[i] = y;
                    index[&nc]
                }
            };
        }
    }
    Ok((FlagSystem::new(adj)?, chains))
}

/// Flag system of a regular complex.
pub fn to_flags(x: &IncidenceComplex) -> Result<FlagSystem> {
    Ok(to_flags_with_chains(x)?.0)
}

/// Rebuilds a regular complex from its flags.
///
/// Fails with [`Error::NonRegular`] when some cell is incident to itself or
/// to a lower cell more than once (typical for quotients), in which case the
/// flag view must be kept.
pub fn from_flags(fs: &FlagSystem) -> Result<IncidenceComplex> {
    let d = fs.rank();
    if d == 0 || d > 3 {
        return Err(Error::InvalidParameter(format!("flags supported for rank 1..=3, got {d}")));
    }
    let orbits: Vec<(Vec<usize>, usize)> = (0..=d).map(|k| fs.cell_orbits(k)).collect();
    let mut cells: Vec<Vec<Vec<usize>>> = orbits.iter().map(|(_, n)| vec![Vec::new(); *n]).collect();
    for k in 1..=d {
        if k == 2 {
            let mut first = vec![usize::MAX; orbits[2].1];
            for f in 0..fs.len() {
                let o = orbits[2].0[f];
                if first[o] == usize::MAX {
                    first[o] = f;
                }
            }
            for (o, &start) in first.iter().enumerate() {
                let mut cyc = Vec::new();
                let mut g = start;
                loop {
                    cyc.push(orbits[1].0[g]);
                    g = fs.adj(1)[fs.adj(0)[g]];
                    if g == start || cyc.len() > fs.len() {
                        break;
                    }
                }
                cells[2][o] = cyc;
            }
        } else {
            for f in 0..fs.len() {
                let o = orbits[k].0[f];
                let b = orbits[k - 1].0[f];
                if !cells[k][o].contains(&b) {
                    cells[k][o].push(b);
                }
            }
            if k == 1 {
                for (e, b) in cells[1].iter().enumerate() {
                    if b.len() != 2 {
                        return Err(Error::NonRegular(format!("edge {e} is a loop")));
                    }
                }
            }
        }
    }
    let x = IncidenceComplex::new(d, cells).map_err(|e| Error::NonRegular(e.to_string()))?;
    let back = to_flags(&x).map_err(|e| Error::NonRegular(e.to_string()))?;
    if back.len() != fs.len() {
        return Err(Error::NonRegular(format!(
            "reconstruction has {} flags, flag system has {}: some cell meets itself through identified faces",
            back.len(),
            fs.len()
        )));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> IncidenceComplex {
        IncidenceComplex::from_polygons(4, &[vec![0, 1, 2, 3]]).unwrap()
    }

    #[test]
    fn open_square_has_boundary_flags() {
        let fs = to_flags(&square()).unwrap();
        assert_eq!(fs.len(), 8);
        assert!(!fs.is_closed());
        assert_eq!(fs.f_vector().counts, vec![4, 4, 1]);
        assert_eq!(fs.f_vector().p_other, 1);
    }

    #[test]
    fn rejects_non_involution() {
        assert!(FlagSystem::new(vec![vec![1, 2, 0]]).is_err());
        assert!(FlagSystem::new(vec![vec![1, 0], vec![0]]).is_err());
    }

    #[test]
    fn rejects_non_commuting_involutions() {
        // adj0 = (01)(23), adj2 = (02)(13) commute; (03)(12) with (01)(23) too;
        // (01)(23) against (12)(03) commute, so use (0 2)(1)(3) which does not.
        let adj0 = vec![1, 0, 3, 2];
        let adj1 = vec![0, 1, 2, 3];
        let adj2 = vec![2, 1, 0, 3];
        assert!(matches!(FlagSystem::new(vec![adj0, adj1, adj2]), Err(Error::InvalidFlags(_))));
    }

    #[test]
    fn round_trip_preserves_counts() {
        let x = square();
        let back = from_flags(&to_flags(&x).unwrap()).unwrap();
        assert_eq!(back.counts(), x.counts());
    }
}
