//! Quotients of the hexagonal tiling by torus and Klein-bottle groups.
//!
//! Hexagons are indexed by points of the triangular lattice Z² (basis at
//! 60°), the vertices of the tiling by its triangles. All centres are kept in
//! coordinates scaled by 6 so that hexagon, edge and vertex centres are
//! integral: a hexagon `P` sits at `6P`, the edge between hexagons `P` and `Q`
//! at `3(P + Q)`, and a vertex at twice the sum of its three hexagons.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{from_flags, FlagSystem, IncidenceComplex};

type V2 = [i64; 2];

/// Lattice data of a polyhex quotient.
///
/// For a torus, `a` and `b` span the translation lattice. For a Klein bottle
/// (`twist = true`), the group is generated by the glide `x ↦ σ(x) + a`,
/// where `σ` swaps the two lattice coordinates, and the translation by `b`,
/// which must satisfy `σ(b) = -b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhexSpec {
    pub a: V2,
    pub b: V2,
    pub twist: bool,
}

impl PolyhexSpec {
    pub fn torus(a: V2, b: V2) -> Self {
        PolyhexSpec { a, b, twist: false }
    }

    pub fn klein(glide: V2, translation: V2) -> Self {
        PolyhexSpec { a: glide, b: translation, twist: true }
    }

    /// The 7-hexagon torus whose graph is the Heawood graph.
    pub fn heawood() -> Self {
        PolyhexSpec::torus([2, 1], [-1, 3])
    }

    /// The 9-hexagon Klein bottle whose dual graph is K_{3,3,3}.
    pub fn klein_k333() -> Self {
        PolyhexSpec::klein([0, 3], [3, -3])
    }

    /// Number of hexagons of the quotient.
    pub fn num_hexagons(&self) -> Result<usize> {
        self.validate()?;
        let det = self.a[0] * self.b[1] - self.a[1] * self.b[0];
        Ok(if self.twist {
            (self.b[0] * (self.a[0] + self.a[1])).unsigned_abs() as usize
        } else {
            det.unsigned_abs() as usize
        })
    }

    fn validate(&self) -> Result<()> {
        if self.twist {
            if self.b[0] != -self.b[1] || self.b[0] == 0 {
                return Err(Error::InvalidParameter(
                    "Klein translation must be a nonzero multiple of (1,-1)".into(),
                ));
            }
            if self.a[0] + self.a[1] == 0 {
                return Err(Error::InvalidParameter("glide has no translation along its axis".into()));
            }
        } else if self.a[0] * self.b[1] - self.a[1] * self.b[0] == 0 {
            return Err(Error::InvalidParameter("degenerate basis (zero determinant)".into()));
        }
        Ok(())
    }
}

fn swap(x: V2) -> V2 {
    [x[1], x[0]]
}

/// Group element `x ↦ L(x) + 6t` with `L` the identity or the swap.
#[derive(Debug, Clone, Copy)]
struct Motion {
    reflect: bool,
    t: V2,
}

impl Motion {
    fn apply(&self, x: V2) -> V2 {
        let y = if self.reflect { swap(x) } else { x };
        [y[0] + 6 * self.t[0], y[1] + 6 * self.t[1]]
    }
}

struct Quotient {
    /// Hermite basis `(p, q), (0, r)` of the translation subgroup.
    p: i64,
    q: i64,
    r: i64,
    glide: Option<V2>,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

impl Quotient {
    fn new(spec: &PolyhexSpec) -> Result<Self> {
        spec.validate()?;
        let (u, v) = if spec.twist {
            let g = [spec.a[0] + spec.a[1], spec.a[0] + spec.a[1]];
            (g, spec.b)
        } else {
            (spec.a, spec.b)
        };
        let (u, v) = if u[0] == 0 { (v, u) } else { (u, v) };
        let (g, s, t) = ext_gcd(u[0], v[0]);
        let mut row1 = [s * u[0] + t * v[0], s * u[1] + t * v[1]];
        let mut row2 = [0, (v[0] / g) * u[1] - (u[0] / g) * v[1]];
        if row1[0] < 0 {
            row1 = [-row1[0], -row1[1]];
        }
        if row2[1] < 0 {
            row2[1] = -row2[1];
        }
        debug_assert_eq!(row1[0], g.abs());
        if row1[0] == 0 || row2[1] == 0 {
            return Err(Error::InvalidParameter("degenerate lattice".into()));
        }
        let glide = spec.twist.then_some(spec.a);
        Ok(Quotient { p: row1[0], q: row1[1].rem_euclid(row2[1]), r: row2[1], glide })
    }

    /// Reduces a scaled point by the translation subgroup.
    fn reduce(&self, x: V2) -> (V2, V2) {
        let k = x[0].div_euclid(6 * self.p);
        let y = [x[0] - 6 * self.p * k, x[1] - 6 * self.q * k];
        let m = y[1].div_euclid(6 * self.r);
        let z = [y[0], y[1] - 6 * self.r * m];
        (z, [-k * self.p, -k * self.q - m * self.r])
    }

    /// Canonical representative of a scaled point and a motion reaching it.
    fn canon(&self, x: V2) -> (V2, Motion) {
        let (r0, l0) = self.reduce(x);
        let m0 = Motion { reflect: false, t: l0 };
        match self.glide {
            None => (r0, m0),
            Some(a) => {
                let s = swap(r0);
                let (r1, l1) = self.reduce([s[0] + 6 * a[0], s[1] + 6 * a[1]]);
                if r1 < r0 {
                    // σ(x + 6ℓ0) + 6a + 6ℓ1 = σx + 6(σℓ0 + a + ℓ1)
                    let sl = swap(l0);
                    (r1, Motion { reflect: true, t: [sl[0] + a[0] + l1[0], sl[1] + a[1] + l1[1]] })
                } else {
                    (r0, m0)
                }
            }
        }
    }
}

const NEIGHBOURS: [V2; 6] = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]];

/// Scaled centre of the triangle between hexagon `p` and its neighbours `k`, `k+1`.
fn corner(p: V2, k: usize) -> V2 {
    let a = NEIGHBOURS[k % 6];
    let b = NEIGHBOURS[(k + 1) % 6];
    [2 * (3 * p[0] + a[0] + b[0]), 2 * (3 * p[1] + a[1] + b[1])]
}

fn edge_centre(p: V2, k: usize) -> V2 {
    let a = NEIGHBOURS[k % 6];
    [3 * (2 * p[0] + a[0]), 3 * (2 * p[1] + a[1])]
}

/// Flag system of a polyhex quotient. Always available, even when the
/// quotient is too small to be a regular complex.
pub fn polyhex_flags(spec: &PolyhexSpec) -> Result<FlagSystem> {
    let quo = Quotient::new(spec)?;
    let mut faces: Vec<V2> = Vec::new();
    let mut seen = HashSet::new();
    for i in 0..quo.p {
        for j in 0..quo.r {
            let (rep, _) = quo.canon([6 * i, 6 * j]);
            if seen.insert(rep) {
                faces.push([rep[0] / 6, rep[1] / 6]);
            }
        }
    }
    faces.sort_unstable();
    let expected = spec.num_hexagons()?;
    if faces.len() != expected {
        return Err(Error::Construction(format!(
            "found {} hexagon classes, expected {expected}",
            faces.len()
        )));
    }
    // flag = (hexagon, edge slot k, endpoint side s); vertex is corner k-1+s
    let mut key: Vec<(V2, V2, V2)> = Vec::with_capacity(12 * faces.len());
    for &p in &faces {
        for k in 0..6 {
            for s in 0..2 {
                key.push(([6 * p[0], 6 * p[1]], edge_centre(p, k), corner(p, k + 5 + s)));
            }
        }
    }
    let index: HashMap<(V2, V2, V2), usize> = key.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let n = key.len();
    let mut adj = vec![vec![0usize; n]; 3];
    for (fi, p) in faces.iter().enumerate() {
        for k in 0..6 {
            for s in 0..2 {
                let me = 12 * fi + 2 * k + s;
                adj[0][me] = 12 * fi + 2 * k + (1 - s);
                // the other edge at the same vertex: slot k-1 (s=0) or k+1 (s=1)
                adj[1][me] = if s == 0 {
                    12 * fi + 2 * ((k + 5) % 6) + 1
                } else {
                    12 * fi + 2 * ((k + 1) % 6)
                };
                let nb = NEIGHBOURS[k];
                let other = [6 * (p[0] + nb[0]), 6 * (p[1] + nb[1])];
                let (rep, g) = quo.canon(other);
                let (_, e, v) = key[me];
                let target = (rep, g.apply(e), g.apply(v));
                adj[2][me] = *index.get(&target).ok_or_else(|| {
                    Error::Construction(format!("no flag matches {target:?} across edge"))
                })?;
            }
        }
    }
    FlagSystem::new(adj)
}

fn polyhex_complex(spec: &PolyhexSpec) -> Result<IncidenceComplex> {
    let fs = polyhex_flags(spec)?;
    let x = from_flags(&fs).map_err(|e| {
        Error::NonRegular(format!("{e}; quotient too small for the incidence view, use polyhex_flags"))
    })?;
    check_topological(&x)?;
    Ok(x)
}

/// No double edges, and two faces meet in nothing, one vertex or one edge.
fn check_topological(x: &IncidenceComplex) -> Result<()> {
    let mut pairs = HashSet::new();
    for e in 0..x.count(1) {
        if !pairs.insert(x.edge_vertices(e)) {
            return Err(Error::NonRegular(format!(
                "double edge at {:?}; quotient too small for the incidence view, use polyhex_flags",
                x.edge_vertices(e)
            )));
        }
    }
    let verts: Vec<HashSet<usize>> =
        (0..x.count(2)).map(|f| x.face_vertices(f).into_iter().collect()).collect();
    let edges: Vec<HashSet<usize>> =
        (0..x.count(2)).map(|f| x.boundary(2, f).iter().copied().collect()).collect();
    for f in 0..verts.len() {
        for g in f + 1..verts.len() {
            let common_v = verts[f].intersection(&verts[g]).count();
            let common_e = edges[f].intersection(&edges[g]).count();
            let ok = common_v == 0 || common_v == 1 && common_e == 0 || common_v == 2 && common_e == 1;
            if !ok {
                return Err(Error::NonRegular(format!(
                    "faces {f} and {g} meet in {common_v} vertices and {common_e} edges; use polyhex_flags"
                )));
            }
        }
    }
    Ok(())
}

pub fn build_toroidal_polyhex(spec: &PolyhexSpec) -> Result<IncidenceComplex> {
    if spec.twist {
        return Err(Error::InvalidParameter("toroidal polyhex needs twist = false".into()));
    }
    polyhex_complex(spec)
}

pub fn build_klein_polyhex(spec: &PolyhexSpec) -> Result<IncidenceComplex> {
    if !spec.twist {
        return Err(Error::InvalidParameter("Klein polyhex needs twist = true".into()));
    }
    polyhex_complex(spec)
}
