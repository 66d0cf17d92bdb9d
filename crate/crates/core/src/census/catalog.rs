use std::collections::HashMap;
use std::sync::OnceLock;

use super::certificate::{certificate_surface, CanonicalCertificate};
use crate::builders::{
    build_barrel, build_cube, build_dodecahedron, build_f26, build_f28_td, build_f32_d3d,
    build_layered_dodecahedron,
};
use crate::constructions::elongated_barrel;
use crate::kernel::IncidenceComplex;

struct Catalog {
    names: Vec<&'static str>,
    by_cert: HashMap<CanonicalCertificate, &'static str>,
}

fn entries() -> Vec<(&'static str, IncidenceComplex)> {
    let barrel = |i| build_barrel(i).expect("barrel with i >= 3");
    vec![
        ("Do", build_dodecahedron()),
        ("B_3", barrel(3)),
        ("B_4", barrel(4)),
        ("B_6", barrel(6)),
        ("B_7", barrel(7)),
        ("B_8", barrel(8)),
        ("F_26", build_f26()),
        ("F_28(T_d)", build_f28_td()),
        ("F_30", build_layered_dodecahedron(1)),
        ("F_32(D_3d)", build_f32_d3d()),
        ("F_36", elongated_barrel(6).expect("B_6 glues to itself")),
        ("F_40", build_layered_dodecahedron(2)),
        ("F_50", build_layered_dodecahedron(3)),
        ("F_60", build_layered_dodecahedron(4)),
        ("cube", build_cube()),
    ]
}

fn get() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut names = Vec::new();
        let mut by_cert = HashMap::new();
        for (name, x) in entries() {
            let cert = certificate_surface(&x).expect("catalog polyhedra are closed and connected");
            let prev = by_cert.insert(cert, name);
            assert!(prev.is_none(), "catalog entries {name} and {prev:?} coincide");
            names.push(name);
        }
        Catalog { names, by_cert }
    })
}

/// Names of the built-in catalog polyhedra.
pub fn catalog() -> &'static [&'static str] {
    &get().names
}

/// Catalog name of the polyhedron with the given certificate.
pub fn catalog_name(cert: &CanonicalCertificate) -> Option<&'static str> {
    get().by_cert.get(cert).copied()
}
