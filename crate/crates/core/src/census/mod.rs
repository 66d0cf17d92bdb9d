//! Cell extraction, canonical certificates and catalog-based cell censuses.

mod catalog;
mod certificate;

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

pub use catalog::{catalog, catalog_name};
pub use certificate::{
    certificate, certificate_flags, certificate_surface, flag_automorphisms, CanonicalCertificate,
    SCHEME,
};

use crate::error::{Error, Result};
use crate::kernel::{f_vector, to_flags, CellRef, FVector, FlagSystem, IncidenceComplex};

/// Name used for cells that match no catalog entry.
pub const UNKNOWN: &str = "unknown";

/// The boundary complex of a cell of rank at least 2, as a standalone
/// complex of one rank less.
pub fn extract_cell(x: &IncidenceComplex, c: CellRef) -> Result<IncidenceComplex> {
    if c.rank < 2 || c.rank > x.dim() || c.id >= x.count(c.rank) {
        return Err(Error::InvalidParameter(format!("no extractable cell {c}")));
    }
    let top = c.rank - 1;
    let mut ids: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    ids[top] = x.boundary(c.rank, c.id).to_vec();
    for k in (1..=top).rev() {
        let mut lower: Vec<usize> = ids[k].iter().flat_map(|&b| x.boundary(k, b).iter().copied()).collect();
        lower.sort_unstable();
        lower.dedup();
        ids[k - 1] = lower;
    }
    let remap: Vec<HashMap<usize, usize>> = ids
        .iter()
        .map(|v| v.iter().enumerate().map(|(n, &o)| (o, n)).collect())
        .collect();
    let cells = (0..=top)
        .map(|k| {
            ids[k]
                .iter()
                .map(|&o| {
                    if k == 0 {
                        Vec::new()
                    } else {
                        x.boundary(k, o).iter().map(|b| remap[k - 1][b]).collect()
                    }
                })
                .collect()
        })
        .collect();
    IncidenceComplex::new(top, cells)
}

/// One cell type in a census.
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub name: String,
    pub fvector: FVector,
    pub count: usize,
    #[serde(skip)]
    pub certificate: CanonicalCertificate,
}

/// Multiset of cell types of a rank-3 complex.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub entries: Vec<CensusEntry>,
    pub total: usize,
}

impl CensusReport {
    /// Number of cells with the given catalog name.
    pub fn count(&self, name: &str) -> usize {
        self.entries.iter().filter(|e| e.name == name).map(|e| e.count).sum()
    }

    pub fn unknown(&self) -> usize {
        self.count(UNKNOWN)
    }

    /// Counts by name; unknown types are merged.
    pub fn by_name(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.name.clone()).or_default() += e.count;
        }
        out
    }

    fn from_cells(cells: Vec<(CanonicalCertificate, FVector)>) -> Self {
        let total = cells.len();
        let mut groups: HashMap<CanonicalCertificate, (FVector, usize)> = HashMap::new();
        for (cert, fv) in cells {
            groups.entry(cert).or_insert((fv, 0)).1 += 1;
        }
        let mut entries: Vec<CensusEntry> = groups
            .into_iter()
            .map(|(certificate, (fvector, count))| CensusEntry {
                name: catalog_name(&certificate).unwrap_or(UNKNOWN).to_string(),
                fvector,
                count,
                certificate,
            })
            .collect();
        entries.sort_by(|a, b| {
            b.count
                .cmp(&a.count)
                .then_with(|| a.name.cmp(&b.name))
                .then_with(|| a.certificate.cmp(&b.certificate))
        });
        CensusReport { entries, total }
    }
}

impl std::fmt::Display for CensusReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for e in &self.entries {
            writeln!(f, "{:>8}  {:<12} {}", e.count, e.name, e.fvector)?;
        }
        write!(f, "{:>8}  total", self.total)
    }
}

/// Census of the top cells of a closed rank-3 complex.
pub fn census(x: &IncidenceComplex) -> Result<CensusReport> {
    if x.dim() != 3 {
        return Err(Error::InvalidParameter("census needs a rank-3 complex".into()));
    }
    let cells = (0..x.count(3))
        .into_par_iter()
        .map(|c| {
            let s = extract_cell(x, CellRef::new(3, c))?;
            Ok((certificate_surface(&s)?, f_vector(&s)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusReport::from_cells(cells))
}

/// Flag system of the residue of `flag` that omits adjacency `skip`: the
/// cell (or vertex figure) containing that flag.
pub fn residue(fs: &FlagSystem, flag: usize, skip: usize) -> FlagSystem {
    let gens: Vec<usize> = (0..=fs.rank()).filter(|&i| i != skip).collect();
    let mut index = HashMap::new();
    let mut order = vec![flag];
    index.insert(flag, 0usize);
    let mut head = 0;
    while head < order.len() {
        let f = order[head];
        head += 1;
        for &i in &gens {
            let g = fs.adj(i)[f];
            if let Entry::Vacant(e) = index.entry(g) {
                e.insert(order.len());
                order.push(g);
            }
        }
    }
    let adj = gens
        .iter()
        .map(|&i| order.iter().map(|&f| index[&fs.adj(i)[f]]).collect())
        .collect();
    FlagSystem::new(adj).expect("residue of a flag system is a flag system")
}

/// Census of the top cells of a rank-3 flag system, computed from residues.
/// Works for quotients whose cells are not embedded.
pub fn census_flags(fs: &FlagSystem) -> Result<CensusReport> {
    if fs.rank() != 3 {
        return Err(Error::InvalidParameter("census needs a rank-3 flag system".into()));
    }
    let (cell, n) = fs.cell_orbits(3);
    let mut rep = vec![usize::MAX; n];
    for (f, &c) in cell.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = f;
        }
    }
    let cells = rep
        .par_iter()
        .map(|&f| {
            let r = residue(fs, f, 3);
            let fv = r.f_vector();
            Ok((certificate_flags(&r)?, fv))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusReport::from_cells(cells))
}

/// Whether two connected complexes are isomorphic.
pub fn isomorphic(a: &IncidenceComplex, b: &IncidenceComplex) -> Result<bool> {
    if a.counts() != b.counts() {
        return Ok(false);
    }
    Ok(certificate_flags(&to_flags(a)?)? == certificate_flags(&to_flags(b)?)?)
}
