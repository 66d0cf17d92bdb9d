use std::fmt;

use serde::Serialize;

use crate::kernel::complex::{CellRef, IncidenceComplex};
use crate::kernel::flags::FlagSystem;

/// One failed incidence-count condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub cell: CellRef,
    /// Rank of the cofaces that were counted.
    pub coface_rank: usize,
    pub expected: usize,
    pub found: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} lies in {} {}-cells, expected {}",
            self.cell, self.found, self.coface_rank, self.expected
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.violations.first() {
            None => write!(f, "ok"),
            Some(first) if self.violations.len() == 1 => write!(f, "{first}"),
            Some(first) => write!(f, "{first} (and {} more)", self.violations.len() - 1),
        }
    }
}

/// How strictly incidence counts are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every count must match exactly.
    Closed,
    /// Counts may fall short (boundary-bearing intermediate complexes).
    Open,
}

/// Required number of `(k+1)`-cells around a `k`-cell in a simple complex of
/// top rank `dim`.
fn simple_degree(dim: usize, k: usize) -> usize {
    dim + 1 - k
}

/// Checks that every `k`-cell lies in exactly `dim + 1 - k` cells of rank
/// `k + 1`, and for surfaces also that every vertex lies in 3 faces.
pub fn validate_simple(x: &IncidenceComplex, mode: Mode) -> ValidationReport {
    let d = x.dim();
    let mut violations = Vec::new();
    let mut check = |cell: CellRef, coface_rank: usize, expected: usize, found: usize| {
        let bad = match mode {
            Mode::Closed => found != expected,
            Mode::Open => found > expected,
        };
        if bad {
            violations.push(Violation { cell, coface_rank, expected, found });
        }
    };
    for k in 0..d {
        let co = x.cofaces(k);
        for (id, c) in co.iter().enumerate() {
            check(CellRef::new(k, id), k + 1, simple_degree(d, k), c.len());
        }
    }
    if d == 2 {
        let mut faces_at = vec![0usize; x.count(0)];
        for f in 0..x.count(2) {
            for v in x.face_vertices(f) {
                faces_at[v] += 1;
            }
        }
        for (v, &n) in faces_at.iter().enumerate() {
            check(CellRef::new(0, v), 2, 3, n);
        }
    }
    ValidationReport { violations }
}

/// Closed-manifold simplicity check (rank 3: 4 edges per vertex, 3 faces per
/// edge, 2 cells per face; rank 2: 3-valent with every edge in 2 faces).
pub fn validate_simple_closed(x: &IncidenceComplex) -> ValidationReport {
    validate_simple(x, Mode::Closed)
}

/// Same conditions on a flag system, counting incidences with multiplicity.
pub fn validate_simple_closed_flags(fs: &FlagSystem) -> ValidationReport {
    let d = fs.rank();
    let mut violations = Vec::new();
    if !fs.is_closed() {
        for i in 0..=d {
            if let Some(f) = (0..fs.len()).find(|&f| fs.adj(i)[f] == f) {
                let (cell, _) = fs.cell_orbits(d);
                violations.push(Violation {
                    cell: CellRef::new(d, cell[f]),
                    coface_rank: d,
                    expected: 0,
                    found: 1,
                });
                break;
            }
        }
    }
    for k in 0..d {
        for (id, &deg) in fs.incidence_degrees(k).iter().enumerate() {
            let expected = simple_degree(d, k);
            if deg != expected {
                violations.push(Violation {
                    cell: CellRef::new(k, id),
                    coface_rank: k + 1,
                    expected,
                    found: deg,
                });
            }
        }
    }
    ValidationReport { violations }
}

/// Closed, simple, and every 2-face a pentagon or hexagon.
pub fn is_fullerene(x: &IncidenceComplex) -> bool {
    validate_simple_closed(x).passed() && crate::kernel::f_vector(x).p_other == 0
}

pub fn is_fullerene_flags(fs: &FlagSystem) -> bool {
    validate_simple_closed_flags(fs).passed() && fs.f_vector().p_other == 0
}
