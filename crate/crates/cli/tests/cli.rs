use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use whitney_core::gallery::GALLERY;
use whitney_core::io::read_file;

fn whitney(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitney")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn materialize(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.cx2"));
    let out = whitney(&["examples", name, "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    path
}

fn arg(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn lists_and_prints_examples() {
    let out = whitney(&["examples"]);
    let names: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(str::to_string).collect();
    assert_eq!(names, GALLERY);

    let dir = TempDir::new().unwrap();
    let x = read_file(&materialize(dir.path(), "glued-tetrahedra")).unwrap().complex;
    assert_eq!((x.vertex_count(), x.edge_count(), x.face_count()), (6, 11, 8));

    let printed = whitney(&["examples", "tetrahedron"]);
    assert_eq!(std::fs::read(dir.path().join("glued-tetrahedra.cx2")).unwrap().last(), Some(&b'\n'));
    assert!(String::from_utf8(printed.stdout).unwrap().starts_with("{\n  \"version\": 1,"));

    assert_eq!(whitney(&["examples", "klein-bottle"]).status.code(), Some(1));
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let tet = whitney(&["check", arg(&materialize(dir.path(), "tetrahedron"))]);
    assert_eq!(tet.status.code(), Some(0));
    let report = json(&tet);
    let surfaces = report["surfaces"]["surfaces"].as_array().unwrap();
    assert_eq!(surfaces.len(), 2);
    assert!(surfaces.iter().all(|s| s["stats"]["sphere"] == true));
    assert_eq!(report["fattening"]["status"], "verified");

    let torus = whitney(&["check", arg(&materialize(dir.path(), "csaszar-torus"))]);
    assert_eq!(torus.status.code(), Some(2));
    let report = json(&torus);
    assert_eq!(report["homology"]["verdict"], "Disproven");
    assert!(report["surfaces"]["surfaces"].as_array().unwrap().iter().all(|s| s["stats"]["euler_characteristic"] == 0));

    let cone = whitney(&["check", arg(&materialize(dir.path(), "cone-k5"))]);
    assert_eq!(cone.status.code(), Some(2));
    assert_eq!(json(&cone)["rotation_systems"]["count"], 0);

    let oracle = whitney(&["check", "--oracle", arg(&materialize(dir.path(), "octahedron"))]);
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(json(&oracle)["rotation_systems"]["method"], "Oracle");
}

#[test]
fn parse_failures_exit_1() {
    let dir = TempDir::new().unwrap();
    let short = dir.path().join("short.cx2");
    std::fs::write(&short, r#"{"version": 1, "vertices": ["a", "b"], "faces": [["a", "b"]]}"#).unwrap();
    let out = whitney(&["check", arg(&short)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("face 0"));

    let broken = dir.path().join("broken.cx2");
    std::fs::write(&broken, "{\n  \"version\": 1,\n  oops\n}\n").unwrap();
    let out = whitney(&["check", arg(&broken)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));

    assert_eq!(whitney(&["check", arg(&dir.path().join("missing.cx2"))]).status.code(), Some(1));
}

#[test]
fn check_is_deterministic() {
    let dir = TempDir::new().unwrap();
    for name in GALLERY {
        let path = materialize(dir.path(), name);
        let (a, b) = (whitney(&["check", arg(&path)]), whitney(&["check", arg(&path)]));
        assert_eq!(a.status.code(), b.status.code(), "{name}");
        assert_eq!(a.stdout, b.stdout, "{name}");
    }
}

#[test]
fn fatten_writes_complex_and_provenance() {
    let dir = TempDir::new().unwrap();
    let input = materialize(dir.path(), "tetrahedron");
    let output = dir.path().join("fat.cx2");
    let out = whitney(&["fatten", arg(&input), "-o", arg(&output)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "verified");

    let doc = read_file(&output).unwrap();
    let c = &doc.complex;
    assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (12, 26, 24));
    assert!(doc.rotation.is_some());
    let provenance: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("fat.cx2.prov.json")).unwrap()).unwrap();
    assert_eq!(provenance["disks"].as_array().unwrap().len(), 8);
    assert_eq!(provenance["h_faces"].as_array().unwrap().len(), 8);
    assert_eq!(provenance["rectangles"].as_array().unwrap().len(), 12);

    let check = whitney(&["check", arg(&output)]);
    assert_eq!(check.status.code(), Some(0));
    let surfaces = whitney(&["surfaces", arg(&output)]);
    assert_eq!(json(&surfaces)["surfaces"].as_array().unwrap().len(), 10);

    let glued = materialize(dir.path(), "glued-tetrahedra");
    let out = whitney(&["fatten", arg(&glued), "-o", arg(&dir.path().join("never.cx2"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!dir.path().join("never.cx2").exists());
}

#[test]
fn inspection_commands() {
    let dir = TempDir::new().unwrap();
    let book = materialize(dir.path(), "book3");
    let surfaces = json(&whitney(&["surfaces", arg(&book)]));
    let covered: usize =
        surfaces["surfaces"].as_array().unwrap().iter().map(|s| s["faces"].as_array().unwrap().len()).sum();
    assert_eq!(covered, 6);

    let links = json(&whitney(&["links", arg(&book)]));
    let u = &links["links"][0];
    assert_eq!(u["vertex"], "u");
    assert_eq!(u["edges"].as_array().unwrap().len(), 3);
    assert_eq!(u["class"], Value::Null);

    let rotsys = json(&whitney(&["rotsys", arg(&book)]));
    assert_eq!(rotsys["count"], 1);
    assert_eq!(rotsys["systems"][0]["u->v"], serde_json::json!([0, 1, 2]));

    let torus = materialize(dir.path(), "csaszar-torus");
    let homology = json(&whitney(&["homology", arg(&torus)]));
    assert_eq!(homology["h1"], "Z^2");
    let tet = materialize(dir.path(), "tetrahedron");
    let stalled = json(&whitney(&["homology", "--max-tietze", "0", arg(&tet)]));
    assert_eq!(stalled["verdict"], "Unknown");
}
