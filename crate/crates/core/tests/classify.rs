use cellforge::builders::*;
use cellforge::classify::{classify_3fullerene, Rejection, Surface};
use cellforge::constructions::{antipodal_fold, corona_B, elongated_barrel};
use cellforge::kernel::*;

fn surfaces() -> Vec<Complex> {
    let mut out: Vec<Complex> = vec![
        build_dodecahedron().into(),
        build_barrel(6).unwrap().into(),
        build_f26().into(),
        build_f28_td().into(),
        build_f32_d3d().into(),
        elongated_barrel(6).unwrap().into(),
        build_toroidal_polyhex(&PolyhexSpec::heawood()).unwrap().into(),
        build_toroidal_polyhex(&PolyhexSpec::torus([4, 0], [1, 2])).unwrap().into(),
        build_klein_polyhex(&PolyhexSpec::klein_k333()).unwrap().into(),
        antipodal_fold(&build_dodecahedron(), None).unwrap(),
        antipodal_fold(&build_f32_d3d(), None).unwrap(),
    ];
    out.extend((1..=4).map(|i| build_layered_dodecahedron(i).into()));
    out.push(polyhex_flags(&PolyhexSpec::torus([2, 0], [0, 1])).map(Complex::Flags).unwrap());
    out
}

#[test]
fn examples() {
    let cases: [(Complex, Surface, usize); 4] = [
        (build_dodecahedron().into(), Surface::Sphere, 12),
        (build_toroidal_polyhex(&PolyhexSpec::heawood()).unwrap().into(), Surface::Torus, 0),
        (build_klein_polyhex(&PolyhexSpec::klein_k333()).unwrap().into(), Surface::KleinBottle, 0),
        (antipodal_fold(&build_dodecahedron(), None).unwrap(), Surface::ProjectivePlane, 6),
    ];
    for (x, class, p5) in cases {
        let c = classify_3fullerene(&x).unwrap();
        assert_eq!((c.class, c.p5), (class, p5));
    }
}

#[test]
fn class_is_determined_by_chi_and_orientability() {
    for x in surfaces() {
        let c = classify_3fullerene(&x).unwrap();
        assert_eq!(6 * c.euler_characteristic, c.p5 as i64);
        assert_eq!(c.class.pentagons(), c.p5);
        let expected = match (c.euler_characteristic, c.orientability) {
            (2, _) => Surface::Sphere,
            (1, _) => Surface::ProjectivePlane,
            (0, Orientability::Orientable) => Surface::Torus,
            (0, _) => Surface::KleinBottle,
            (chi, _) => panic!("inadmissible chi {chi}"),
        };
        assert_eq!(c.class, expected);
    }
}

#[test]
fn rejections() {
    let wrong = |x: Complex| classify_3fullerene(&x).unwrap_err();
    assert!(matches!(wrong(build_cube().into()), Rejection::WrongGonality(_)));
    assert!(matches!(wrong(build_barrel(7).unwrap().into()), Rejection::WrongGonality(_)));
    assert!(matches!(wrong(build_dodecahedron().without_top_cells(&[3]).into()), Rejection::Open));
    let rank3 = corona_B(&build_dodecahedron()).unwrap();
    assert!(matches!(wrong(rank3.into()), Rejection::NotSurface(3)));
}
