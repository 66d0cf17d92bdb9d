use cellforge::io::{read_cxc, write_cxc};
use cellforge::pipeline::{run_pipeline, sha256_hex};
use cellforge::verify::{default_rows, verify_table, Row, Seed};

#[test]
fn default_table_passes() {
    let records = verify_table(&default_rows());
    assert_eq!(records.len(), 9);
    for r in &records {
        assert!(r.passed, "{} failed: {r:?}", r.name);
        assert!(r.error.is_none());
    }
    let cell = records.iter().find(|r| r.name == "120-cell").unwrap();
    assert_eq!(cell.observed_counts, vec![600, 1200, 720, 120]);
    let c1 = records.iter().find(|r| r.name == "C_1(120-cell)").unwrap();
    assert_eq!(c1.observed_census.values().sum::<usize>(), 2160);
}

#[test]
fn table_is_idempotent() {
    let rows = [Row::Corona(Seed::Dodecahedron), Row::ChainA(2)];
    let strip = |mut rs: Vec<cellforge::verify::VerificationRecord>| {
        for r in &mut rs {
            r.duration_ms = 0;
        }
        serde_json::to_string(&rs).unwrap()
    };
    assert_eq!(strip(verify_table(&rows)), strip(verify_table(&rows)));
    let b = verify_table(&[Row::Corona(Seed::Dodecahedron)]).remove(0);
    assert!(b.checks.iter().any(|(name, ok)| name.contains("120-cell") && *ok));
}

#[test]
fn corona_census_script() {
    let run = run_pipeline("build dodecahedron -> d\nconstruct B d -> b\ncensus b\n", None).unwrap();
    let report = run.steps[2].report.as_ref().unwrap();
    assert_eq!(report["total"], 120);
    assert_eq!(run.vars["b"].f_vector().counts, vec![600, 1200, 720, 120]);
}

#[test]
fn torus_classification_script() {
    let run = run_pipeline("build heawood -> h\nclassify h\n", None).unwrap();
    assert_eq!(run.steps[1].report.as_ref().unwrap()["class"], "Torus");
}

#[test]
fn unknown_intermediates_are_errors() {
    assert!(run_pipeline("build dodecahedron -> d\nconstruct B x -> b\n", None).is_err());
}

#[test]
fn manifest_hashes_match_written_files() {
    let dir = tempfile::tempdir().unwrap();
    let script = "build dodecahedron -> d\nconstruct quotient d twist=3 -> q\nexport d edge-list\n";
    let run = run_pipeline(script, Some(dir.path())).unwrap();
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["steps"].as_array().unwrap().len(), run.steps.len());
    let d = std::fs::read_to_string(dir.path().join("d.cxc")).unwrap();
    assert_eq!(manifest["steps"][0]["outputs"]["d"], sha256_hex(&d));
    assert_eq!(write_cxc(&read_cxc(&d).unwrap()), d);
    let q = std::fs::read_to_string(dir.path().join("q.cxf")).unwrap();
    assert_eq!(manifest["steps"][1]["outputs"]["q"], sha256_hex(&q));
    let edges = std::fs::read_to_string(dir.path().join("d.edges")).unwrap();
    assert_eq!(manifest["steps"][2]["outputs"]["d.edges"], sha256_hex(&edges));
    assert_eq!(edges.lines().count(), 30);
}
