//! Ranked cell complexes in two views: boundary lists ([`IncidenceComplex`])
//! and flags with adjacency involutions ([`FlagSystem`]).
//!
//! Constructions work on the incidence view. Quotients that identify a cell
//! with itself cannot be expressed there and live in the flag view.

mod complex;
mod dual;
mod flags;
mod fvector;
mod validate;

pub use complex::{canonical_cycle, CellRef, IncidenceComplex};
pub(crate) use complex::UnionFind;
pub use dual::dual;
pub use flags::{from_flags, to_flags, to_flags_with_chains, FlagSystem, Orientability};
pub use fvector::FVector;
pub use validate::{
    is_fullerene, is_fullerene_flags, validate_simple, validate_simple_closed,
    validate_simple_closed_flags, Mode, ValidationReport, Violation,
};

use crate::error::{Error, Result};

/// Cell counts and 2-face gonality breakdown.
pub fn f_vector(x: &IncidenceComplex) -> FVector {
    let gon = if x.dim() >= 2 {
        x.cells(2).iter().map(Vec::len).collect()
    } else {
        Vec::new()
    };
    FVector::new(x.counts(), gon)
}

pub fn euler_characteristic(x: &IncidenceComplex) -> i64 {
    f_vector(x).euler_characteristic()
}

/// Orientability of each connected component.
pub fn orientability(x: &IncidenceComplex) -> Result<Vec<Orientability>> {
    Ok(to_flags(x)?.component_orientability())
}

/// Vertex cycles of all 2-cells of a connected orientable surface, oriented
/// coherently. The orientation class is the one containing flag 0.
pub fn oriented_face_cycles(x: &IncidenceComplex) -> Result<Vec<Vec<usize>>> {
    if x.dim() != 2 {
        return Err(Error::InvalidParameter("oriented faces need a rank-2 complex".into()));
    }
    let (fs, chains) = to_flags_with_chains(x)?;
    if fs.num_components() != 1 {
        return Err(Error::InvalidParameter("surface is disconnected".into()));
    }
    let n = fs.len();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut stack = vec![0];
    while let Some(f) = stack.pop() {
        for a in fs.involutions() {
            let g = a[f];
            if g == f {
                continue;
            }
            if color[g] == u8::MAX {
                color[g] = 1 - color[f];
                stack.push(g);
            } else if color[g] == color[f] {
                return Err(Error::InvalidParameter("surface is non-orientable".into()));
            }
        }
    }
    // A flag (v, e, f) of colour 0 reads the face as "v then along e".
    let mut out = vec![Vec::new(); x.count(2)];
    for (fi, c) in chains.iter().enumerate() {
        if color[fi] != 0 || !out[c[2]].is_empty() {
            continue;
        }
        let face = x.face_vertices(c[2]);
        let [a, b] = x.edge_vertices(c[1]);
        let next = if a == c[0] { b } else { a };
        let pos = face.iter().position(|&v| v == c[0]).expect("flag vertex lies on its face");
        let k = face.len();
        let forward = face[(pos + 1) % k] == next;
        out[c[2]] = (0..k)
            .map(|i| if forward { face[(pos + i) % k] } else { face[(pos + k - i) % k] })
            .collect();
    }
    Ok(out)
}

/// A complex held in whichever view can represent it.
#[derive(Debug, Clone, PartialEq)]
pub enum Complex {
    Incidence(IncidenceComplex),
    Flags(FlagSystem),
}

impl Complex {
    pub fn rank(&self) -> usize {
        match self {
            Complex::Incidence(x) => x.dim(),
            Complex::Flags(f) => f.rank(),
        }
    }

    pub fn f_vector(&self) -> FVector {
        match self {
            Complex::Incidence(x) => f_vector(x),
            Complex::Flags(f) => f.f_vector(),
        }
    }

    pub fn flags(&self) -> Result<FlagSystem> {
        match self {
            Complex::Incidence(x) => to_flags(x),
            Complex::Flags(f) => Ok(f.clone()),
        }
    }

    pub fn incidence(&self) -> Option<&IncidenceComplex> {
        match self {
            Complex::Incidence(x) => Some(x),
            Complex::Flags(_) => None,
        }
    }

    pub fn validate_simple_closed(&self) -> ValidationReport {
        match self {
            Complex::Incidence(x) => validate_simple_closed(x),
            Complex::Flags(f) => validate_simple_closed_flags(f),
        }
    }

    pub fn is_fullerene(&self) -> bool {
        match self {
            Complex::Incidence(x) => is_fullerene(x),
            Complex::Flags(f) => is_fullerene_flags(f),
        }
    }

    /// Flag systems that happen to be regular come back as incidence complexes.
    pub fn normalized(self) -> Complex {
        match self {
            Complex::Flags(f) => match from_flags(&f) {
                Ok(x) => Complex::Incidence(x),
                Err(_) => Complex::Flags(f),
            },
            other => other,
        }
    }
}

impl From<IncidenceComplex> for Complex {
    fn from(x: IncidenceComplex) -> Self {
        Complex::Incidence(x)
    }
}

impl From<FlagSystem> for Complex {
    fn from(f: FlagSystem) -> Self {
        Complex::Flags(f)
    }
}
