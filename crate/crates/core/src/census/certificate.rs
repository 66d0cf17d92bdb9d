//! Canonical certificates of connected flag systems.
//!
//! A connected flag graph is determined up to isomorphism by any single flag:
//! breadth-first numbering from that flag (visiting adjacencies in rank order)
//! yields a code, and the minimum code over all starting flags is canonical.
//! Starts are restricted to one colour class of an isomorphism-invariant
//! colour refinement, and automorphisms found along the way prune starts that
//! lie in an already explored orbit.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{to_flags, FlagSystem, IncidenceComplex, UnionFind};

/// Version tag of the certificate encoding.
pub const SCHEME: &str = "flag-bfs-min/1";

/// Order-independent byte string identifying a connected complex up to
/// isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCertificate {
    pub scheme: String,
    pub bytes: Vec<u8>,
}

impl CanonicalCertificate {
    /// Short hex digest for display.
    pub fn short_hex(&self) -> String {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(&self.bytes);
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Isomorphism-invariant colouring by iterated neighbour signatures.
fn refine(fs: &FlagSystem) -> Vec<u32> {
    let n = fs.len();
    let r = fs.rank();
    let mut color: Vec<u32> = (0..n)
        .map(|f| (0..=r).fold(0u32, |m, i| if fs.adj(i)[f] == f { m | 1 << i } else { m }))
        .collect();
    let mut classes = {
        let mut c = color.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let mut sig: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|f| {
                let mut s = Vec::with_capacity(r + 2);
                s.push(color[f]);
                s.extend((0..=r).map(|i| color[fs.adj(i)[f]]));
                (s, f)
            })
            .collect();
        sig.sort_unstable();
        let mut next = vec![0u32; n];
        let mut c = 0u32;
        for k in 0..n {
            if k > 0 && sig[k].0 != sig[k - 1].0 {
                c += 1;
            }
            next[sig[k].1] = c;
        }
        let count = c as usize + 1;
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

/// Breadth-first code from `start`. Returns `None` as soon as the code
/// exceeds `bound`.
fn code_from(fs: &FlagSystem, start: usize, bound: Option<&[u32]>) -> Option<(Vec<u32>, Vec<usize>)> {
    let n = fs.len();
    let r = fs.rank();
    let mut num = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(n * (r + 1));
    num[start] = 0;
    order.push(start);
    let mut below = bound.is_none();
    let mut head = 0;
    while head < order.len() {
        let f = order[head];
        head += 1;
        for i in 0..=r {
            let g = fs.adj(i)[f];
            if num[g] == u32::MAX {
                num[g] = order.len() as u32;
                order.push(g);
            }
            let val = num[g];
            if !below {
                let b = bound.unwrap()[code.len()];
                match val.cmp(&b) {
                    Ordering::Greater => return None,
                    Ordering::Less => below = true,
                    Ordering::Equal => {}
                }
            }
            code.push(val);
        }
    }
    Some((code, order))
}

fn encode(rank: usize, n: usize, code: &[u32]) -> CanonicalCertificate {
    let mut bytes = Vec::with_capacity(8 + 4 * code.len());
    bytes.extend_from_slice(&(rank as u32).to_le_bytes());
    bytes.extend_from_slice(&(n as u32).to_le_bytes());
    for c in code {
        bytes.extend_from_slice(&c.to_le_bytes());
    }
    CanonicalCertificate { scheme: SCHEME.to_string(), bytes }
}

/// Canonical certificate of a connected flag system.
pub fn certificate_flags(fs: &FlagSystem) -> Result<CanonicalCertificate> {
    let n = fs.len();
    if n == 0 {
        return Err(Error::InvalidParameter("empty flag system".into()));
    }
    if fs.num_components() != 1 {
        return Err(Error::InvalidParameter("certificate needs a connected complex".into()));
    }
    let color = refine(fs);
    let mut size = std::collections::HashMap::<u32, usize>::new();
    for &c in &color {
        *size.entry(c).or_default() += 1;
    }
    let target = size
        .iter()
        .min_by_key(|(&c, &s)| (s, c))
        .map(|(&c, _)| c)
        .expect("nonempty");
    let starts: Vec<usize> = (0..n).filter(|&f| color[f] == target).collect();

    let mut uf = UnionFind::new(n);
    let mut done = vec![false; n];
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    for &s in &starts {
        let root = uf.find(s);
        if done[root] {
            continue;
        }
        let bound = best.as_ref().map(|(c, _)| c.as_slice());
        if let Some((code, order)) = code_from(fs, s, bound) {
            match &best {
                Some((bc, border)) if *bc == code => {
                    // border[i] ↦ order[i] is an automorphism
                    let mut sigma = vec![0usize; n];
                    for (i, &f) in border.iter().enumerate() {
                        sigma[f] = order[i];
                    }
                    for (x, &y) in sigma.iter().enumerate() {
                        let (rx, ry) = (uf.find(x), uf.find(y));
                        if rx != ry {
                            let d = done[rx] || done[ry];
                            let nr = uf.union(rx, ry);
                            done[nr] = d;
                        }
                    }
                }
                _ => best = Some((code, order)),
            }
        }
        let root = uf.find(s);
        done[root] = true;
    }
    let (code, _) = best.expect("at least one start");
    Ok(encode(fs.rank(), n, &code))
}

/// Certificate of a closed connected surface complex.
pub fn certificate_surface(x: &IncidenceComplex) -> Result<CanonicalCertificate> {
    if x.dim() != 2 {
        return Err(Error::InvalidParameter("surface certificate needs a rank-2 complex".into()));
    }
    if x.cofaces(1).iter().any(|c| c.len() != 2) {
        return Err(Error::NotClosed("surface has boundary edges".into()));
    }
    if x.num_components() != 1 {
        return Err(Error::InvalidParameter("surface is disconnected".into()));
    }
    certificate_flags(&to_flags(x)?)
}

/// Certificate of any connected regular complex.
pub fn certificate(x: &IncidenceComplex) -> Result<CanonicalCertificate> {
    if x.dim() == 2 {
        certificate_surface(x)
    } else {
        certificate_flags(&to_flags(x)?)
    }
}

/// All flag automorphisms of a connected flag system, as permutations.
///
/// Quadratic in the number of flags; intended for polyhedra.
pub fn flag_automorphisms(fs: &FlagSystem) -> Vec<Vec<usize>> {
    let n = fs.len();
    if n == 0 {
        return Vec::new();
    }
    let (code0, order0) = code_from(fs, 0, None).expect("unbounded");
    let mut out = Vec::new();
    for s in 0..n {
        if let Some((code, order)) = code_from(fs, s, Some(&code0)) {
            if code == code0 && order.len() == n {
                let mut sigma = vec![0usize; n];
                for (i, &f) in order0.iter().enumerate() {
                    sigma[f] = order[i];
                }
                out.push(sigma);
            }
        }
    }
    out
}
