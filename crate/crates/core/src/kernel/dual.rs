use crate::error::{Error, Result};
use crate::kernel::complex::IncidenceComplex;

/// Dual complex of a closed manifold complex.
///
/// The dual of a `k`-cell is a `(dim - k)`-cell; boundaries are the duals of
/// the cofaces. Ids are inherited, so dual cell `i` of rank `dim - k` is the
/// dual of cell `i` of rank `k`.
pub fn dual(x: &IncidenceComplex) -> Result<IncidenceComplex> {
    let d = x.dim();
    if d < 2 {
        return Err(Error::InvalidParameter("dual needs a complex of rank >= 2".into()));
    }
    let mut cells: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    cells[0] = vec![Vec::new(); x.count(d)];
    for k in 1..=d {
        let src = d - k;
        let co = x.cofaces(src);
        cells[k] = if k == 2 {
            (0..x.count(src))
                .map(|c| coface_cycle(x, src, c))
                .collect::<Result<Vec<_>>>()?
        } else {
            co.to_vec()
        };
        if k == 1 {
            for (e, b) in cells[1].iter().enumerate() {
                if b.len() != 2 {
                    return Err(Error::NotClosed(format!(
                        "{}-cell {e} lies in {} top cells",
                        d - 1,
                        b.len()
                    )));
                }
            }
        }
    }
    IncidenceComplex::new(d, cells)
}

/// Cyclic order of the `(r+1)`-cells around an `r`-cell, where `r = dim - 2`:
/// consecutive ones share a top cell.
fn coface_cycle(x: &IncidenceComplex, r: usize, c: usize) -> Result<Vec<usize>> {
    let d = x.dim();
    let ring = &x.cofaces(r)[c];
    let tops = x.cofaces(r + 1);
    if ring.len() < 2 {
        return Err(Error::NotClosed(format!("{r}-cell {c} has an open neighbourhood")));
    }
    let mut cyc = vec![ring[0]];
    let mut prev_top = usize::MAX;
    loop {
        let cur = *cyc.last().unwrap();
        let t = match tops[cur].iter().find(|&&t| t != prev_top) {
            Some(&t) => t,
            None => return Err(Error::NotClosed(format!("{r}-cell {c} has an open neighbourhood"))),
        };
        let next: Vec<usize> = ring
            .iter()
            .copied()
            .filter(|&y| y != cur && tops[y].contains(&t))
            .collect();
        if next.len() != 1 {
            return Err(Error::NotClosed(format!(
                "{r}-cell {c}: top cell {t} meets its star in {} other {}-cells",
                next.len(),
                d - 1
            )));
        }
        prev_top = t;
        if next[0] == cyc[0] {
            break;
        }
        cyc.push(next[0]);
        if cyc.len() > ring.len() {
            return Err(Error::NotClosed(format!("{r}-cell {c} has a non-cyclic star")));
        }
    }
    if cyc.len() != ring.len() {
        return Err(Error::NotClosed(format!("{r}-cell {c} has a disconnected star")));
    }
    Ok(cyc)
}
