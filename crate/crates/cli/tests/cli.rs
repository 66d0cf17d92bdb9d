use std::path::Path;
use std::process::{Command, Output};

fn cellforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cellforge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_and_export_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("do.cxc");
    let o = cellforge(&["build", "dodecahedron", "--out", path(&d)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("(20, 30, 12)"));
    let o = cellforge(&["export", "--in", path(&d), "--format", "edge-list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 30);
}

#[test]
fn cxc_round_trip_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.cxc");
    let b = dir.path().join("b.cxc");
    assert!(cellforge(&["build", "120cell", "--out", path(&a)]).status.success());
    let o = cellforge(&["build", "layered", "i=2"]);
    assert!(stdout(&o).starts_with("cxc 1 2\nrank 0 40\n"));
    assert!(cellforge(&["export", "--in", path(&a), "--format", "cxc", "--out", path(&b)]).status.success());
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn construct_and_census() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("b6.cxc");
    let c = dir.path().join("corona.cxc");
    assert!(cellforge(&["build", "barrel", "--param", "i=6", "--out", path(&f)]).status.success());
    let o = cellforge(&["--json", "construct", "B", "--in", path(&f), "--out", path(&c)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fvector"]["counts"], serde_json::json!([720, 1440, 862, 142]));
    let o = cellforge(&["--json", "census", "--in", path(&c)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 142);
}

#[test]
fn quotient_exports_only_as_flags() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("do.cxc");
    let q = dir.path().join("sw.cxf");
    assert!(cellforge(&["build", "dodecahedron", "--out", path(&d)]).status.success());
    let o = cellforge(&["construct", "quotient", "--in", path(&d), "--twist", "3", "--out", path(&q)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("(1, 6, 6, 1)"));
    assert_eq!(cellforge(&["export", "--in", path(&q), "--format", "cxc"]).status.code(), Some(2));
    assert_eq!(cellforge(&["export", "--in", path(&q), "--format", "cxf"]).status.code(), Some(0));
}

#[test]
fn pairing_file() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("do.cxc");
    let p = dir.path().join("bad.pairing");
    assert!(cellforge(&["build", "dodecahedron", "--out", path(&d)]).status.success());
    std::fs::write(&p, "pair 0 0 1\n").unwrap();
    let o = cellforge(&["construct", "quotient", "--in", path(&d), "--pairing", path(&p)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.cxc");
    let c = dir.path().join("c.cxc");
    assert!(cellforge(&["build", "heawood", "--out", path(&h)]).status.success());
    let o = cellforge(&["classify", "--in", path(&h)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("T2"));
    assert!(cellforge(&["build", "cube", "--out", path(&c)]).status.success());
    assert_eq!(cellforge(&["classify", "--in", path(&c)]).status.code(), Some(1));
}

#[test]
fn verify_table_passes() {
    let o = cellforge(&["verify-table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 9);
    assert!(!text.contains("FAIL"));
}

#[test]
fn pipeline_writes_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("run.txt");
    let out = dir.path().join("out");
    std::fs::write(&script, "build dodecahedron -> d\nconstruct B d -> b\ncensus b\nexport d face-list\n").unwrap();
    let o = cellforge(&["pipeline", path(&script), "--out-dir", path(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["d.cxc", "b.cxc", "d.faces", "manifest.json"] {
        assert!(out.join(f).exists(), "{f}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cellforge(&["build", "tesseract"]).status.code(), Some(2));
    assert_eq!(cellforge(&["build", "barrel", "i"]).status.code(), Some(2));
    assert_eq!(cellforge(&["census", "--in", "/nonexistent/file.cxc"]).status.code(), Some(2));
    assert_eq!(cellforge(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("do.cxc");
    assert!(cellforge(&["build", "dodecahedron", "--out", path(&d)]).status.success());
    assert_eq!(cellforge(&["export", "--in", path(&d), "--format", "edge-list", "--strict"]).status.code(), Some(2));
}
