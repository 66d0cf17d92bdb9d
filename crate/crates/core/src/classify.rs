//! Which closed surface a 3-valent pentagon/hexagon partition lives on.
//!
//! Euler's formula forces `p5 = 6χ`, so only the sphere, torus, projective
//! plane and Klein bottle carry such partitions, with 12, 0, 6 and 0
//! pentagons respectively.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::constructions::{check_involution, find_central_involution};
use crate::error::{Error, Result};
use crate::kernel::{validate_simple_closed_flags, Complex, IncidenceComplex, Orientability};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Surface {
    Sphere,
    Torus,
    ProjectivePlane,
    KleinBottle,
}

impl Surface {
    /// Pentagon count forced on this surface.
    pub fn pentagons(self) -> usize {
        match self {
            Surface::Sphere => 12,
            Surface::ProjectivePlane => 6,
            Surface::Torus | Surface::KleinBottle => 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Surface::Sphere => "S2",
            Surface::Torus => "T2",
            Surface::ProjectivePlane => "P2",
            Surface::KleinBottle => "K2",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceClass {
    pub class: Surface,
    pub p5: usize,
    pub p6: usize,
    pub euler_characteristic: i64,
    pub orientability: Orientability,
}

/// Why a complex is not a 3-fullerene on an admissible surface.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum Rejection {
    #[error("not a surface complex (rank {0})")]
    NotSurface(usize),
    #[error("surface has boundary")]
    Open,
    #[error("surface has {0} components")]
    Disconnected(usize),
    #[error("not 3-valent: {0}")]
    NotSimple(String),
    #[error("{0} faces are neither pentagons nor hexagons")]
    WrongGonality(usize),
    /// Contradicts Euler's formula; would indicate a bug.
    #[error("inconsistent data: chi = {chi}, p5 = {p5}, {orientability:?}")]
    Inconsistent {
        chi: i64,
        p5: usize,
        orientability: Orientability,
    },
}

/// Classifies a closed connected surface complex, in either view.
pub fn classify_3fullerene(x: &Complex) -> std::result::Result<SurfaceClass, Rejection> {
    if x.rank() != 2 {
        return Err(Rejection::NotSurface(x.rank()));
    }
    let fs = x.flags().map_err(|e| Rejection::NotSimple(e.to_string()))?;
    if !fs.is_closed() {
        return Err(Rejection::Open);
    }
    let comps = fs.num_components();
    if comps != 1 {
        return Err(Rejection::Disconnected(comps));
    }
    let report = validate_simple_closed_flags(&fs);
    if !report.passed() {
        return Err(Rejection::NotSimple(report.to_string()));
    }
    let fv = fs.f_vector();
    if fv.p_other > 0 {
        return Err(Rejection::WrongGonality(fv.p_other));
    }
    let chi = fv.euler_characteristic();
    let orientability = fs.orientability();
    let class = match (chi, orientability) {
        (2, _) => Some(Surface::Sphere),
        (1, _) => Some(Surface::ProjectivePlane),
        (0, Orientability::Orientable) => Some(Surface::Torus),
        (0, Orientability::NonOrientable) => Some(Surface::KleinBottle),
        _ => None,
    };
    match class {
        Some(c) if c.pentagons() == fv.p5 && 6 * chi == fv.p5 as i64 => Ok(SurfaceClass {
            class: c,
            p5: fv.p5,
            p6: fv.p6,
            euler_characteristic: chi,
            orientability,
        }),
        _ => Err(Rejection::Inconsistent { chi, p5: fv.p5, orientability }),
    }
}

/// Whether a vertex permutation is a fixed-point-free involutive
/// automorphism. Fails if it is not an automorphism at all.
pub fn check_centrally_symmetric(x: &IncidenceComplex, sigma: &[usize]) -> Result<bool> {
    crate::constructions::induced_automorphism(x, sigma)?;
    let central = check_involution(x, sigma).is_ok();
    if central && !x.count(0).is_multiple_of(4) {
        return Err(Error::Other(format!(
            "central involution on {} vertices contradicts 4 | v",
            x.count(0)
        )));
    }
    Ok(central)
}

/// Whether any fixed-point-free involutive automorphism exists.
pub fn is_centrally_symmetric(x: &IncidenceComplex) -> Result<bool> {
    if !x.count(0).is_multiple_of(4) {
        return Ok(false);
    }
    Ok(find_central_involution(x)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_cube, build_dodecahedron};

    #[test]
    fn dodecahedron_is_spherical() {
        let c = classify_3fullerene(&build_dodecahedron().into()).unwrap();
        assert_eq!((c.class, c.p5, c.p6), (Surface::Sphere, 12, 0));
    }

    #[test]
    fn cube_is_rejected() {
        assert_eq!(classify_3fullerene(&build_cube().into()), Err(Rejection::WrongGonality(6)));
    }

    #[test]
    fn open_surface_is_rejected() {
        let open = build_dodecahedron().without_top_cells(&[0]);
        assert_eq!(classify_3fullerene(&open.into()), Err(Rejection::Open));
    }
}
