//! Acceptance suite. Each test prints one `PASS`/`FAIL` line and fails on any
//! mismatch or when its runtime limit is exceeded.
//!
//! Run with `cargo test -p cellforge --test acceptance -- --nocapture` to see
//! the verdict lines.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use cellforge::builders::*;
use cellforge::census::*;
use cellforge::classify::{classify_3fullerene, Surface};
use cellforge::constructions::*;
use cellforge::kernel::*;

const LIMIT_120CELL: Duration = Duration::from_secs(5);
const LIMIT_CHAIN: Duration = Duration::from_secs(10);
const LIMIT_CORONA_DO: Duration = Duration::from_secs(10);
const LIMIT_SUBDIVISION: Duration = Duration::from_secs(60);
const RELABEL_TRIALS: usize = 100;
const RELABEL_SEED: u64 = 0x5eed_0120;

struct Criterion {
    id: u32,
    title: &'static str,
    started: Instant,
    limit: Option<Duration>,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: u32, title: &'static str, limit: Option<Duration>) -> Self {
        Criterion { id, title, started: Instant::now(), limit, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, observed: T, expected: T, what: &str) {
        if observed != expected {
            self.failures.push(format!("{what}: observed {observed:?}, expected {expected:?}"));
        }
    }

    fn finish(mut self) {
        let elapsed = self.started.elapsed();
        if let Some(limit) = self.limit {
            self.check(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"));
        }
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} [{:>2}] {} ({} ms)", self.id, self.title, elapsed.as_millis());
        for f in &self.failures {
            println!("         {f}");
        }
        assert!(self.failures.is_empty(), "criterion {} failed: {:?}", self.id, self.failures);
    }
}

fn census_of(items: &[(&str, usize)]) -> BTreeMap<String, usize> {
    items.iter().filter(|(_, c)| *c > 0).map(|(k, c)| (k.to_string(), *c)).collect()
}

fn identities_hold(fv: &FVector) -> bool {
    let [v, e, p, q] = [fv.get(0), fv.get(1), fv.get(2), fv.get(3)];
    e == 2 * v && p == v + q && fv.p5 == 6 * q && fv.euler_characteristic() == 0
}

#[test]
fn criterion_01_120cell() {
    let mut c = Criterion::new(1, "120-cell f-vector, pentagons, dodecahedral cells", Some(LIMIT_120CELL));
    let x = build_120cell().unwrap();
    let fv = f_vector(&x);
    c.eq(fv.counts.clone(), vec![600, 1200, 720, 120], "f-vector");
    c.eq(fv.p5, 720, "pentagons");
    c.check(validate_simple_closed(&x).passed(), "validate_simple_closed");
    let do_cert = certificate_surface(&build_dodecahedron()).unwrap();
    let matching = (0..x.count(3))
        .filter(|&q| {
            let s = extract_cell(&x, CellRef::new(3, q)).unwrap();
            certificate_surface(&s).unwrap() == do_cert
        })
        .count();
    c.eq(matching, 120, "cells certificate-equal to Do");
    c.finish();
}

#[test]
fn criterion_02_chain_a() {
    let mut c = Criterion::new(2, "A_n f-vector, census, hexagon count for n = 1..3", Some(LIMIT_CHAIN));
    for n in 1..=3usize {
        let x = chain_A(n).unwrap();
        let fv = f_vector(&x);
        let v = 560 * n + 40;
        c.eq(fv.counts.clone(), vec![v, 1120 * n + 80, 666 * n + 54, 106 * n + 14], &format!("A_{n} f-vector"));
        c.eq(fv.p6, 30 * n - 30, &format!("A_{n} hexagons"));
        c.eq(fv.p5, 6 * fv.get(3), &format!("A_{n} p5 = 6q"));
        let report = census(&x).unwrap();
        c.eq(report.by_name(), census_of(&[("Do", 94 * n + 26), ("F_30", 12 * n - 12)]), &format!("A_{n} census"));
    }
    c.finish();
}

#[test]
fn criterion_03_layered_by_gluing() {
    let mut c = Criterion::new(3, "glued dodecahedra match layered dodecahedra for i <= 4", None);
    let seed = build_dodecahedron();
    for i in 0..=4usize {
        let glued = chain(&seed, i + 1, 0).unwrap();
        let layered = build_layered_dodecahedron(i);
        c.eq(f_vector(&glued).counts, vec![20 + 10 * i, 30 + 15 * i, 12 + 5 * i], &format!("i = {i} f-vector"));
        c.check(
            certificate_surface(&glued).unwrap() == certificate_surface(&layered).unwrap(),
            format!("i = {i}: certificates differ"),
        );
    }
    c.finish();
}

#[test]
fn criterion_04_corona_of_dodecahedron() {
    let mut c = Criterion::new(4, "B(Do) is the 120-cell", Some(LIMIT_CORONA_DO));
    let b = corona_B(&build_dodecahedron()).unwrap();
    let cell = build_120cell().unwrap();
    c.check(certificate(&b).unwrap() == certificate(&cell).unwrap(), "certificates differ");
    c.finish();
}

#[test]
fn criterion_05_corona_formulas() {
    let mut c = Criterion::new(5, "B(F) f-vector and census for Do, B_6, F_26, F_28", None);
    let seeds = [
        ("Do", build_dodecahedron()),
        ("B_6", build_barrel(6).unwrap()),
        ("F_26", build_f26()),
        ("F_28(T_d)", build_f28_td()),
    ];
    for (name, f) in &seeds {
        let v = f.count(0);
        let x = corona_B(f).unwrap();
        c.eq(
            f_vector(&x).counts,
            vec![30 * v, 60 * v, 71 * v / 2 + 10, 11 * v / 2 + 10],
            &format!("B({name}) f-vector"),
        );
        let mut expected = BTreeMap::new();
        *expected.entry(name.to_string()).or_insert(0) += 2;
        *expected.entry("Do".to_string()).or_insert(0) += 7 * v / 2 + 48;
        if 2 * v > 40 {
            *expected.entry("B_6".to_string()).or_insert(0) += 2 * v - 40;
        }
        c.eq(census(&x).unwrap().by_name(), expected, &format!("B({name}) census"));
    }
    c.finish();
}

#[test]
fn criterion_06_corona_of_cube() {
    let mut c = Criterion::new(6, "B(cube) f-vector and census", None);
    let x = corona_B(&build_cube()).unwrap();
    c.eq(f_vector(&x).counts, vec![240, 480, 294, 54], "f-vector");
    c.eq(census(&x).unwrap().by_name(), census_of(&[("cube", 2), ("B_4", 24), ("Do", 28)]), "census");
    c.finish();
}

fn isolated_hexagons(s: &IncidenceComplex) -> bool {
    let hexes: Vec<usize> = (0..s.count(2)).filter(|&f| s.gonality(f) == 6).collect();
    hexes.len() == 4
        && hexes.iter().enumerate().all(|(i, &f)| {
            hexes[i + 1..].iter().all(|&g| s.boundary(2, f).iter().all(|e| !s.boundary(2, g).contains(e)))
        })
}

#[test]
fn criterion_07_subdivision() {
    let mut c = Criterion::new(7, "C_1(120-cell) counts, census, isolated hexagons", Some(LIMIT_SUBDIVISION));
    let x = subdivide_C(&build_120cell().unwrap()).unwrap();
    let fv = f_vector(&x);
    c.eq(fv.get(0), 12000, "V");
    c.eq(fv.get(2), 14160, "P");
    c.eq(census(&x).unwrap().by_name(), census_of(&[("Do", 1560), ("F_28(T_d)", 600)]), "census");
    c.check(is_fullerene(&x), "is_fullerene");
    let f28 = certificate_surface(&build_f28_td()).unwrap();
    let mut checked = 0;
    for q in 0..x.count(3) {
        let s = extract_cell(&x, CellRef::new(3, q)).unwrap();
        if s.count(0) == 28 {
            checked += 1;
            c.check(certificate_surface(&s).unwrap() == f28, format!("cell {q} is not F_28(T_d)"));
            c.check(isolated_hexagons(&s), format!("cell {q} hexagons are not 4 isolated ones"));
        }
    }
    c.eq(checked, 600, "28-vertex cells inspected");
    c.finish();
}

#[test]
#[ignore = "long-running; run with --ignored"]
fn criterion_07_deep_second_subdivision() {
    let mut c = Criterion::new(7, "C_2(120-cell) counts from C_1 census", None);
    let first = subdivide_C(&build_120cell().unwrap()).unwrap();
    let f1 = f_vector(&first);
    let c1 = census(&first).unwrap();
    let x = subdivide_C(&first).unwrap();
    let fv = f_vector(&x);
    let (v, p, q) = (f1.get(0), f1.get(2), f1.get(3));
    c.eq(fv.counts.clone(), vec![20 * v, 40 * v, 20 * v + 3 * p, q + 2 * p + v], "f-vector");
    c.eq(fv.get(0), 240000, "V");
    let mut expected = c1.by_name();
    *expected.entry("Do".into()).or_default() += 2 * f1.p5;
    *expected.entry("B_6".into()).or_default() += 2 * f1.p6;
    *expected.entry("F_28(T_d)".into()).or_default() += v;
    c.eq(census(&x).unwrap().by_name(), expected, "census");
    c.finish();
}

#[test]
fn criterion_08_quotients() {
    let mut c = Criterion::new(8, "opposite-face quotients of Do", None);
    let do_ = build_dodecahedron();
    for (tenths, counts) in [(1, vec![5, 10, 6, 1]), (3, vec![1, 6, 6, 1])] {
        let fs = facet_pairing_quotient(&FacetPairing::opposite_with_twist(do_.clone(), tenths).unwrap()).unwrap();
        let fv = fs.f_vector();
        c.eq(fv.counts.clone(), counts, &format!("{tenths}/10 f-vector"));
        c.eq(fv.euler_characteristic(), 0, &format!("{tenths}/10 chi"));
        c.check(check_manifold(&fs).is_ok(), format!("{tenths}/10 is not a manifold"));
    }
    let pinned: Vec<(i64, usize, Vec<usize>)> = vec![
        (1, 3, vec![5, 10, 6, 1]),
        (3, 4, vec![1, 6, 6, 1]),
        (5, 0, vec![10, 15, 6, 1]),
        (7, 1, vec![1, 6, 6, 1]),
        (9, 2, vec![5, 10, 6, 1]),
    ];
    let flatten = |rows: Vec<TwistRow>| -> Vec<(i64, usize, Vec<usize>)> {
        rows.into_iter().map(|r| (r.tenths, r.offset, r.fvector.counts)).collect()
    };
    let first = twist_table(&do_).unwrap();
    c.check(first.iter().all(|r| r.manifold && r.orientable), "twist table rows not orientable manifolds");
    let first = flatten(first);
    let second = flatten(twist_table(&do_).unwrap());
    c.eq(first.clone(), pinned, "twist table");
    c.eq(second, first, "twist table rerun");
    c.finish();
}

#[test]
fn criterion_09_fold() {
    let mut c = Criterion::new(9, "fold(Do) is the Petersen projective plane", None);
    let g = antipodal_fold(&build_dodecahedron(), None).unwrap();
    c.eq(g.f_vector().counts, vec![10, 15, 6], "f-vector");
    c.eq(g.flags().unwrap().orientability(), Orientability::NonOrientable, "orientability");
    match classify_3fullerene(&g) {
        Ok(s) => {
            c.eq(s.class, Surface::ProjectivePlane, "class");
            c.eq(s.p5, 6, "p5");
        }
        Err(r) => c.check(false, format!("rejected: {r}")),
    }
    c.finish();
}

fn surface_corpus() -> Vec<(String, Complex)> {
    let mut out: Vec<(String, Complex)> = vec![
        ("Do".into(), build_dodecahedron().into()),
        ("F_26".into(), build_f26().into()),
        ("F_28".into(), build_f28_td().into()),
        ("F_32".into(), build_f32_d3d().into()),
        ("F_36".into(), elongated_barrel(6).unwrap().into()),
        ("heawood".into(), build_toroidal_polyhex(&PolyhexSpec::heawood()).unwrap().into()),
        ("k333".into(), build_klein_polyhex(&PolyhexSpec::klein_k333()).unwrap().into()),
        ("torus 3x3".into(), build_toroidal_polyhex(&PolyhexSpec::torus([3, 0], [0, 3])).unwrap().into()),
        ("fold(Do)".into(), antipodal_fold(&build_dodecahedron(), None).unwrap()),
        ("fold(F_32)".into(), antipodal_fold(&build_f32_d3d(), None).unwrap()),
    ];
    for i in 5..=6 {
        out.push((format!("B_{i}"), build_barrel(i).unwrap().into()));
    }
    for i in 1..=3 {
        out.push((format!("layered {i}"), build_layered_dodecahedron(i).into()));
    }
    out
}

#[test]
fn criterion_10_classifier() {
    let mut c = Criterion::new(10, "surface classification and 6 chi = p5", None);
    let expect: [(&str, Complex, Surface, usize); 4] = [
        ("Do", build_dodecahedron().into(), Surface::Sphere, 12),
        ("heawood", build_toroidal_polyhex(&PolyhexSpec::heawood()).unwrap().into(), Surface::Torus, 0),
        ("k333", build_klein_polyhex(&PolyhexSpec::klein_k333()).unwrap().into(), Surface::KleinBottle, 0),
        ("fold(Do)", antipodal_fold(&build_dodecahedron(), None).unwrap(), Surface::ProjectivePlane, 6),
    ];
    for (name, x, class, p5) in &expect {
        match classify_3fullerene(x) {
            Ok(s) => c.eq((s.class, s.p5), (*class, *p5), name),
            Err(r) => c.check(false, format!("{name} rejected: {r}")),
        }
    }
    for (name, x) in surface_corpus() {
        let fv = x.f_vector();
        c.eq(6 * fv.euler_characteristic(), fv.p5 as i64, &format!("{name}: 6 chi vs p5"));
        c.check(classify_3fullerene(&x).is_ok(), format!("{name} rejected"));
    }
    let b7: Complex = build_barrel(7).unwrap().into();
    c.check(classify_3fullerene(&b7).is_err(), "B_7 has heptagons but was accepted");
    c.finish();
}

fn random_flag_perm(n: usize, rng: &mut StdRng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn random_cell_perms(x: &IncidenceComplex, rng: &mut StdRng) -> Vec<Vec<usize>> {
    (0..=x.dim()).map(|k| random_flag_perm(x.count(k), rng)).collect()
}

#[test]
fn criterion_11_universal_invariants() {
    let mut c = Criterion::new(11, "identities on rank-3 outputs, certificates invariant under relabeling", None);
    let f120 = build_120cell().unwrap();
    let mut outputs: Vec<(String, IncidenceComplex)> = vec![("120-cell".into(), f120.clone())];
    for n in 1..=3 {
        outputs.push((format!("A_{n}"), chain_A(n).unwrap()));
    }
    for (name, f) in [
        ("Do", build_dodecahedron()),
        ("B_6", build_barrel(6).unwrap()),
        ("F_26", build_f26()),
        ("F_28", build_f28_td()),
    ] {
        outputs.push((format!("B({name})"), corona_B(&f).unwrap()));
    }
    outputs.push(("C_1".into(), subdivide_C(&f120).unwrap()));
    outputs.push(("600-cell dual".into(), dual(&build_600cell().unwrap()).unwrap()));
    for (name, x) in &outputs {
        c.check(validate_simple_closed(x).passed(), format!("{name} not simple closed"));
        c.check(identities_hold(&f_vector(x)), format!("{name}: identities fail on {}", f_vector(x)));
    }

    let do_ = build_dodecahedron();
    let quotients: Vec<(String, FlagSystem)> = [1, 3, 5]
        .into_iter()
        .map(|t| {
            let fs = facet_pairing_quotient(&FacetPairing::opposite_with_twist(do_.clone(), t).unwrap()).unwrap();
            (format!("quotient {t}/10"), fs)
        })
        .collect();
    for (name, fs) in &quotients {
        c.eq(fs.euler_characteristic(), 0, &format!("{name} chi"));
        if validate_simple_closed_flags(fs).passed() {
            c.check(identities_hold(&fs.f_vector()), format!("{name}: identities fail"));
        }
    }

    let mut rng = StdRng::seed_from_u64(RELABEL_SEED);
    let small: Vec<(String, IncidenceComplex)> = vec![
        ("120-cell".into(), f120),
        ("A_1".into(), outputs[1].1.clone()),
        ("B(B_6)".into(), outputs[5].1.clone()),
        ("Do".into(), do_.clone()),
        ("F_28".into(), build_f28_td()),
        ("heawood".into(), build_toroidal_polyhex(&PolyhexSpec::heawood()).unwrap()),
    ];
    let base: Vec<CanonicalCertificate> = small.iter().map(|(_, x)| certificate(x).unwrap()).collect();
    let qbase: Vec<CanonicalCertificate> = quotients.iter().map(|(_, f)| certificate_flags(f).unwrap()).collect();
    let mut trials = 0;
    while trials < RELABEL_TRIALS {
        let i = trials % (small.len() + quotients.len());
        if i < small.len() {
            let (name, x) = &small[i];
            let y = x.relabeled(&random_cell_perms(x, &mut rng)).unwrap();
            c.check(certificate(&y).unwrap() == base[i], format!("trial {trials}: {name} certificate changed"));
        } else {
            let j = i - small.len();
            let (name, fs) = &quotients[j];
            let y = fs.relabeled(&random_flag_perm(fs.len(), &mut rng));
            c.check(certificate_flags(&y).unwrap() == qbase[j], format!("trial {trials}: {name} certificate changed"));
        }
        trials += 1;
    }
    c.eq(trials, RELABEL_TRIALS, "relabeling trials");
    c.finish();
}
