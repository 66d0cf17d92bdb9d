//! Folding a centrally symmetric complex by a fixed-point-free involution.

use std::collections::HashMap;

use crate::census::flag_automorphisms;
use crate::error::{Error, Result};
use crate::kernel::{from_flags, to_flags_with_chains, Complex, FlagSystem, IncidenceComplex};

use super::glue::induced_automorphism;

/// Per-rank cell permutations induced by every flag automorphism.
fn cell_automorphisms(x: &IncidenceComplex) -> Result<Vec<Vec<Vec<usize>>>> {
    let (fs, chains) = to_flags_with_chains(x)?;
    let d = x.dim();
    Ok(flag_automorphisms(&fs)
        .into_iter()
        .map(|sigma| {
            let mut perm: Vec<Vec<usize>> = (0..=d).map(|k| vec![usize::MAX; x.count(k)]).collect();
            for (f, &g) in sigma.iter().enumerate() {
                for k in 0..=d {
                    perm[k][chains[f][k]] = chains[g][k];
                }
            }
            perm
        })
        .collect())
}

fn is_central(perm: &[Vec<usize>]) -> bool {
    perm.iter()
        .all(|row| row.iter().enumerate().all(|(c, &img)| img != c && row[img] == c))
}

/// Fixed-point-free involutive automorphisms, as vertex permutations, found
/// by enumerating all automorphisms. Quadratic in the flag count.
pub fn central_involutions(x: &IncidenceComplex) -> Result<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<usize>> = cell_automorphisms(x)?
        .into_iter()
        .filter(|perm| is_central(perm))
        .map(|mut perm| perm.swap_remove(0))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// First fixed-point-free involution in lexicographic order, if any.
pub fn find_central_involution(x: &IncidenceComplex) -> Result<Option<Vec<usize>>> {
    Ok(central_involutions(x)?.into_iter().next())
}

/// Checks that a vertex permutation induces a fixed-point-free involutive
/// automorphism and returns the induced per-rank permutations.
pub fn check_involution(x: &IncidenceComplex, sigma: &[usize]) -> Result<Vec<Vec<usize>>> {
    let perm = induced_automorphism(x, sigma)?;
    for (k, row) in perm.iter().enumerate() {
        for (c, &img) in row.iter().enumerate() {
            if img == c {
                return Err(Error::InvalidParameter(format!("involution fixes {k}-cell {c}")));
            }
            if row[img] != c {
                return Err(Error::InvalidParameter("map is not an involution".into()));
            }
        }
    }
    Ok(perm)
}

/// Quotient of a closed complex by a fixed-point-free involution, given as a
/// vertex permutation or discovered by search when `sigma` is `None`.
///
/// The result is returned as an incidence complex when regular and as a flag
/// system otherwise.
pub fn antipodal_fold(x: &IncidenceComplex, sigma: Option<&[usize]>) -> Result<Complex> {
    let sigma = match sigma {
        Some(s) => s.to_vec(),
        None => find_central_involution(x)?
            .ok_or_else(|| Error::InvalidParameter("complex has no fixed-point-free involution".into()))?,
    };
    let perm = check_involution(x, &sigma)?;
    let (fs, chains) = to_flags_with_chains(x)?;
    let d = x.dim();
    let index: HashMap<[usize; 4], usize> = chains.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut class = vec![usize::MAX; fs.len()];
    let mut next = 0;
    for (f, c) in chains.iter().enumerate() {
        if class[f] != usize::MAX {
            continue;
        }
        let mut image = *c;
        for k in 0..=d {
            image[k] = perm[k][c[k]];
        }
        let g = *index
            .get(&image)
            .ok_or_else(|| Error::NotIsomorphism("involution does not map flags to flags".into()))?;
        class[f] = next;
        class[g] = next;
        next += 1;
    }
    let mut rep = vec![usize::MAX; next];
    for (f, &c) in class.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = f;
        }
    }
    let adj = (0..=d)
        .map(|i| rep.iter().map(|&f| class[fs.adj(i)[f]]).collect())
        .collect();
    let folded = FlagSystem::new(adj)?;
    Ok(match from_flags(&folded) {
        Ok(inc) => Complex::Incidence(inc),
        Err(_) => Complex::Flags(folded),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_barrel, build_dodecahedron};
    use crate::kernel::Orientability;

    #[test]
    fn folded_dodecahedron_is_petersen() {
        let f = antipodal_fold(&build_dodecahedron(), None).unwrap();
        let fv = f.f_vector();
        assert_eq!(fv.counts, vec![10, 15, 6]);
        assert_eq!(fv.euler_characteristic(), 1);
        assert_eq!(f.flags().unwrap().orientability(), Orientability::NonOrientable);
    }

    #[test]
    fn hexagonal_barrel_has_no_central_involution() {
        assert!(find_central_involution(&build_barrel(6).unwrap()).unwrap().is_none());
    }
}
