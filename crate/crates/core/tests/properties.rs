use proptest::prelude::*;

use cellforge::builders::*;
use cellforge::census::{certificate, certificate_flags, certificate_surface, isomorphic};
use cellforge::constructions::{glue_and_flatten, GlueSite};
use cellforge::io::{read_cxc, read_cxf, write_cxc, write_cxf};
use cellforge::kernel::*;

fn corpus(i: usize) -> IncidenceComplex {
    match i {
        0 => build_dodecahedron(),
        1 => build_barrel(6).unwrap(),
        2 => build_f26(),
        3 => build_f28_td(),
        4 => build_cube(),
        5 => build_toroidal_polyhex(&PolyhexSpec::heawood()).unwrap(),
        6 => build_klein_polyhex(&PolyhexSpec::klein_k333()).unwrap(),
        7 => build_layered_dodecahedron(2),
        _ => build_120cell().unwrap(),
    }
}

const CORPUS: usize = 9;

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// A corpus member together with one random permutation per rank.
fn relabeled_member() -> impl Strategy<Value = (usize, IncidenceComplex)> {
    (0..CORPUS).prop_flat_map(|i| {
        let x = corpus(i);
        let perms: Vec<_> = (0..=x.dim()).map(|k| permutation(x.count(k)).boxed()).collect();
        (Just(i), perms).prop_map(move |(i, p)| (i, x.relabeled(&p).unwrap()))
    })
}

/// The flag system of a corpus member and a permutation of its flags.
fn relabeled_flags() -> impl Strategy<Value = (FlagSystem, Vec<usize>)> {
    (0..CORPUS).prop_flat_map(|i| {
        let fs = to_flags(&corpus(i)).unwrap();
        let n = fs.len();
        (Just(fs), permutation(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificates_ignore_relabeling((i, y) in relabeled_member()) {
        prop_assert_eq!(certificate(&y).unwrap(), certificate(&corpus(i)).unwrap());
    }

    #[test]
    fn flag_certificates_ignore_relabeling((fs, perm) in relabeled_flags()) {
        prop_assert_eq!(certificate_flags(&fs.relabeled(&perm)).unwrap(), certificate_flags(&fs).unwrap());
    }

    #[test]
    fn cxc_round_trip_is_byte_identical((_, y) in relabeled_member()) {
        let text = write_cxc(&y);
        let back = read_cxc(&text).unwrap();
        prop_assert_eq!(write_cxc(&back), text);
        prop_assert_eq!(certificate(&back).unwrap(), certificate(&y).unwrap());
    }

    #[test]
    fn cxf_round_trip_is_byte_identical((_, y) in relabeled_member()) {
        let fs = to_flags(&y).unwrap();
        let text = write_cxf(&fs);
        prop_assert_eq!(write_cxf(&read_cxf(&text).unwrap()), text);
    }

    #[test]
    fn flag_systems_are_well_formed((_, y) in relabeled_member()) {
        let fs = to_flags(&y).unwrap();
        let r = fs.rank();
        for i in 0..=r {
            for f in 0..fs.len() {
                prop_assert_eq!(fs.adj(i)[fs.adj(i)[f]], f);
                prop_assert_ne!(fs.adj(i)[f], f);
            }
            for j in i + 2..=r {
                for f in 0..fs.len() {
                    prop_assert_eq!(fs.adj(i)[fs.adj(j)[f]], fs.adj(j)[fs.adj(i)[f]]);
                }
            }
        }
        prop_assert_eq!(fs.f_vector(), f_vector(&y));
    }

    #[test]
    fn surface_identities((i, y) in relabeled_member()) {
        let fv = f_vector(&y);
        if y.dim() == 2 && fv.p_other == 0 {
            prop_assert_eq!(3 * fv.get(0), 2 * fv.get(1));
            prop_assert_eq!(2 * fv.get(1), 5 * fv.p5 + 6 * fv.p6);
            prop_assert_eq!(6 * fv.euler_characteristic(), fv.p5 as i64);
        }
        prop_assert!(isomorphic(&y, &corpus(i)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dual_is_an_involution(i in 0..CORPUS) {
        let x = corpus(i);
        prop_assume!(x.dim() == 2 || i == CORPUS - 1);
        let dd = dual(&dual(&x).unwrap()).unwrap();
        prop_assert!(isomorphic(&dd, &x).unwrap());
    }

    #[test]
    fn any_pentagon_gluing_of_dodecahedra_gives_f30(
        fa in 0usize..12,
        fb in 0usize..12,
        shift in 0usize..5,
        flip in any::<bool>(),
    ) {
        let d = build_dodecahedron();
        let ca = d.face_vertices(fa);
        let cb = d.face_vertices(fb);
        let iso: Vec<(usize, usize)> = (0..5)
            .map(|k| {
                let j = if flip { (shift + 5 - k) % 5 } else { (shift + k) % 5 };
                (ca[k], cb[j])
            })
            .collect();
        let x = glue_and_flatten(&GlueSite { a: &d, b: &d, facet_a: fa, facet_b: fb, iso }).unwrap();
        prop_assert_eq!(x.count(0), 2 * 20 - 2 * 5);
        prop_assert_eq!(
            certificate_surface(&x).unwrap(),
            certificate_surface(&build_layered_dodecahedron(1)).unwrap()
        );
    }

    #[test]
    fn torus_polyhexes_have_zero_curvature(p in 1i64..6, q in 1i64..6, s in 0i64..6) {
        let spec = PolyhexSpec::torus([p, 0], [s % p, q]);
        let fs = polyhex_flags(&spec).unwrap();
        let n = (p * q) as usize;
        prop_assert_eq!(fs.f_vector().counts, vec![2 * n, 3 * n, n]);
        prop_assert_eq!(fs.euler_characteristic(), 0);
        prop_assert_eq!(fs.orientability(), Orientability::Orientable);
    }
}
