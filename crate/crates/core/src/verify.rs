//! End-to-end reproduction of the f-vector and census table.
//!
//! Each row builds a complex, then compares its f-vector, gonality counts and
//! cell census with closed formulas in exact integer arithmetic, and checks
//! the identities `e = 2v`, `p = v + q`, `p5 = 6q` and `χ = 0` that hold for
//! every closed simple 3-manifold complex with pentagonal and hexagonal faces.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::builders::{build_120cell, build_barrel, build_dodecahedron, build_f26, build_f28_td};
use crate::census::{catalog_name, census, certificate_surface, isomorphic, CensusReport};
use crate::constructions::{chain_A, corona_B, subdivide_C};
use crate::error::Result;
use crate::kernel::{f_vector, FVector, IncidenceComplex};

/// Seeds of the corona rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seed {
    Dodecahedron,
    B6,
    F26,
    F28,
}

impl Seed {
    pub const ALL: [Seed; 4] = [Seed::Dodecahedron, Seed::B6, Seed::F26, Seed::F28];

    fn build(self) -> IncidenceComplex {
        match self {
            Seed::Dodecahedron => build_dodecahedron(),
            Seed::B6 => build_barrel(6).expect("B_6 exists"),
            Seed::F26 => build_f26(),
            Seed::F28 => build_f28_td(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Seed::Dodecahedron => "Do",
            Seed::B6 => "B_6",
            Seed::F26 => "F_26",
            Seed::F28 => "F_28(T_d)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Row {
    Cell120,
    ChainA(usize),
    Corona(Seed),
    SubdivideOnce,
    /// Two subdivision steps; long-running.
    SubdivideTwice,
}

impl Row {
    pub fn name(&self) -> String {
        match self {
            Row::Cell120 => "120-cell".into(),
            Row::ChainA(n) => format!("A_{n}"),
            Row::Corona(s) => format!("B({})", s.name()),
            Row::SubdivideOnce => "C_1(120-cell)".into(),
            Row::SubdivideTwice => "C_2(120-cell)".into(),
        }
    }
}

/// Rows run by default.
pub fn default_rows() -> Vec<Row> {
    let mut rows = vec![Row::Cell120];
    rows.extend((1..=3).map(Row::ChainA));
    rows.extend(Seed::ALL.map(Row::Corona));
    rows.push(Row::SubdivideOnce);
    rows
}

/// Default rows plus the long-running ones.
pub fn deep_rows() -> Vec<Row> {
    let mut rows = default_rows();
    rows.push(Row::SubdivideTwice);
    rows
}

/// Expected and observed values for one row.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub name: String,
    pub expected_counts: Vec<usize>,
    pub observed_counts: Vec<usize>,
    /// (p5, p6, other) 2-face gonality counts.
    pub expected_gonality: [usize; 3],
    pub observed_gonality: [usize; 3],
    pub expected_census: BTreeMap<String, usize>,
    pub observed_census: BTreeMap<String, usize>,
    /// Named extra checks.
    pub checks: Vec<(String, bool)>,
    pub passed: bool,
    pub duration_ms: u128,
    pub error: Option<String>,
}

/// Predicted f-vector, gonality and census of a row.
struct Expectation {
    counts: Vec<usize>,
    gonality: [usize; 3],
    census: BTreeMap<String, usize>,
}

fn census_map(items: &[(&str, usize)]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for &(k, v) in items {
        if v > 0 {
            *m.entry(k.to_string()).or_default() += v;
        }
    }
    m
}

fn chain_expectation(n: usize) -> Expectation {
    let v = 560 * n + 40;
    let q = 106 * n + 14;
    let p6 = 30 * n - 30;
    Expectation {
        counts: vec![v, 2 * v, 666 * n + 54, q],
        gonality: [6 * q, p6, 0],
        census: census_map(&[("Do", 94 * n + 26), ("F_30", 12 * n - 12)]),
    }
}

/// Corona prediction from the seed's vertex count and face gonalities.
fn corona_expectation(seed: &IncidenceComplex, seed_name: &str) -> Expectation {
    let fv = f_vector(seed);
    let v = fv.counts[0];
    let mut by_gon: BTreeMap<usize, usize> = BTreeMap::new();
    for f in 0..seed.count(2) {
        *by_gon.entry(seed.gonality(f)).or_default() += 1;
    }
    let mut items: Vec<(String, usize)> = vec![(seed_name.to_string(), 2)];
    for (&i, &p) in &by_gon {
        if i == 5 {
            items.push(("Do".into(), 4 * p));
        } else {
            items.push((format!("B_{i}"), 4 * p));
        }
    }
    items.push(("Do".into(), 7 * v / 2));
    let refs: Vec<(&str, usize)> = items.iter().map(|(k, c)| (k.as_str(), *c)).collect();
    Expectation {
        counts: vec![30 * v, 60 * v, 71 * v / 2 + 10, 11 * v / 2 + 10],
        gonality: [0, 5 * fv.p6, 5 * fv.p_other],
        census: census_map(&refs),
    }
    .with_pentagons()
}

/// Subdivision prediction from the input's f-vector and census.
fn subdivision_expectation(fv: &FVector, cells: &BTreeMap<String, usize>) -> Expectation {
    let (v, p, q) = (fv.counts[0], fv.counts[2], fv.counts[3]);
    let mut census = cells.clone();
    *census.entry("Do".into()).or_default() += 2 * fv.p5;
    *census.entry("B_6".into()).or_default() += 2 * fv.p6;
    *census.entry("F_28(T_d)".into()).or_default() += v;
    census.retain(|_, c| *c > 0);
    Expectation {
        counts: vec![20 * v, 40 * v, 20 * v + 3 * p, q + 2 * p + v],
        gonality: [0, 2 * v + 3 * fv.p6, 0],
        census,
    }
    .with_pentagons()
}

impl Expectation {
    /// Fills in the pentagon count as the remainder of the 2-faces.
    fn with_pentagons(mut self) -> Self {
        self.gonality[0] = self.counts[2] - self.gonality[1] - self.gonality[2];
        self
    }

    fn as_fvector(&self) -> FVector {
        FVector { counts: self.counts.clone(), p5: self.gonality[0], p6: self.gonality[1], p_other: self.gonality[2] }
    }
}

fn identities(fv: &FVector) -> Vec<(String, bool)> {
    let [v, e, p, q] = [fv.get(0), fv.get(1), fv.get(2), fv.get(3)];
    vec![
        ("e = 2v".into(), e == 2 * v),
        ("p = v + q".into(), p == v + q),
        ("p5 = 6q".into(), fv.p5 == 6 * q),
        ("chi = 0".into(), fv.euler_characteristic() == 0),
    ]
}

fn record(name: String, exp: Expectation, x: &IncidenceComplex, report: &CensusReport, mut checks: Vec<(String, bool)>, started: Instant) -> VerificationRecord {
    let fv = f_vector(x);
    checks.extend(identities(&fv));
    checks.push(("no unknown cells".into(), report.unknown() == 0));
    let observed_census = report.by_name();
    let observed_gonality = [fv.p5, fv.p6, fv.p_other];
    let passed = fv.counts == exp.counts
        && observed_gonality == exp.gonality
        && observed_census == exp.census
        && checks.iter().all(|c| c.1);
    VerificationRecord {
        name,
        expected_counts: exp.counts,
        observed_counts: fv.counts,
        expected_gonality: exp.gonality,
        observed_gonality,
        expected_census: exp.census,
        observed_census,
        checks,
        passed,
        duration_ms: started.elapsed().as_millis(),
        error: None,
    }
}

fn run_row(row: Row) -> Result<VerificationRecord> {
    let started = Instant::now();
    let name = row.name();
    match row {
        Row::Cell120 => {
            let x = build_120cell()?;
            let exp = Expectation {
                counts: vec![600, 1200, 720, 120],
                gonality: [720, 0, 0],
                census: census_map(&[("Do", 120)]),
            };
            let c = census(&x)?;
            Ok(record(name, exp, &x, &c, Vec::new(), started))
        }
        Row::ChainA(n) => {
            let x = chain_A(n)?;
            let c = census(&x)?;
            Ok(record(name, chain_expectation(n), &x, &c, Vec::new(), started))
        }
        Row::Corona(seed) => {
            let f = seed.build();
            let seed_name = catalog_name(&certificate_surface(&f)?).unwrap_or(seed.name());
            let exp = corona_expectation(&f, seed_name);
            let x = corona_B(&f)?;
            let c = census(&x)?;
            let mut checks = Vec::new();
            if seed == Seed::Dodecahedron {
                checks.push(("isomorphic to the 120-cell".into(), isomorphic(&x, &build_120cell()?)?));
            }
            Ok(record(name, exp, &x, &c, checks, started))
        }
        Row::SubdivideOnce => {
            let f = build_120cell()?;
            let exp = subdivision_expectation(&f_vector(&f), &census(&f)?.by_name());
            let x = subdivide_C(&f)?;
            let c = census(&x)?;
            Ok(record(name, exp, &x, &c, Vec::new(), started))
        }
        Row::SubdivideTwice => {
            let f = build_120cell()?;
            let first = subdivision_expectation(&f_vector(&f), &census(&f)?.by_name());
            let exp = subdivision_expectation(&first.as_fvector(), &first.census);
            let x = subdivide_C(&subdivide_C(&f)?)?;
            let c = census(&x)?;
            Ok(record(name, exp, &x, &c, Vec::new(), started))
        }
    }
}

/// Runs the rows concurrently; failures become failing records.
pub fn verify_table(rows: &[Row]) -> Vec<VerificationRecord> {
    rows.par_iter()
        .map(|&row| {
            let started = Instant::now();
            run_row(row).unwrap_or_else(|e| VerificationRecord {
                name: row.name(),
                expected_counts: Vec::new(),
                observed_counts: Vec::new(),
                expected_gonality: [0; 3],
                observed_gonality: [0; 3],
                expected_census: BTreeMap::new(),
                observed_census: BTreeMap::new(),
                checks: Vec::new(),
                passed: false,
                duration_ms: started.elapsed().as_millis(),
                error: Some(e.to_string()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_subdivision_prediction() {
        let f = f_vector(&build_120cell().unwrap());
        let first = subdivision_expectation(&f, &census_map(&[("Do", 120)]));
        assert_eq!(first.counts, vec![12000, 24000, 14160, 2160]);
        let second = subdivision_expectation(&first.as_fvector(), &first.census);
        assert_eq!(second.counts, vec![240000, 480000, 282480, 42480]);
        assert_eq!(second.gonality[1], 27600);
        assert_eq!(second.census, census_map(&[("Do", 27480), ("F_28(T_d)", 12600), ("B_6", 2400)]));
    }
}
