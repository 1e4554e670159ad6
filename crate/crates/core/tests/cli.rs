use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn nervelat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nervelat"))
        .args(args)
        .env_remove("NERVELAT_FACE_CAP")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = nervelat(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn torus_betti() {
    let torus = fixture("torus.cplx");
    assert_eq!(ok(&["betti", &torus]).trim(), "betti: 1 2 1");
    assert_eq!(ok(&["betti", &torus, "--field", "3"]).trim(), "betti: 1 2 1");
    let json: serde_json::Value = serde_json::from_str(&ok(&["betti", &torus, "--json"])).unwrap();
    assert_eq!(json["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn torus_is_self_dual() {
    let out = ok(&["dual", &fixture("torus.cplx")]);
    assert!(out.starts_with("isomorphic: true"), "{out}");
}

#[test]
fn pendant_edge_is_not() {
    let out = ok(&["dual", &fixture("pendant.cplx")]);
    assert!(out.starts_with("isomorphic: false"), "{out}");
}

#[test]
fn simplex_weeds_to_one_node() {
    let dot = ok(&["weed", &fixture("delta2.cplx"), "--dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("label=").count(), 1);
    assert!(!dot.contains("->"));
    assert_eq!(ok(&["weed", "--stong", &fixture("delta2.cplx")]), dot);
}

#[test]
fn torus_weeding_json() {
    let json: serde_json::Value = serde_json::from_str(&ok(&["weed", &fixture("torus.cplx"), "--json"])).unwrap();
    assert_eq!(json["labels"].as_array().unwrap().len(), 36);
}

#[test]
fn reduce_transcript() {
    let out = ok(&["reduce", &fixture("cone.cplx")]);
    assert!(out.starts_with("initial: 3x4\nstep 1: 1x3, deleted 3\n"), "{out}");
    let torus = ok(&["reduce", &fixture("torus.cplx")]);
    assert!(torus.contains("stable after 2 steps, 0 deletions"), "{torus}");
}

#[test]
fn links_match_weeding() {
    let out = ok(&["links", &fixture("boundary_triangle.cplx")]);
    assert!(out.trim_end().ends_with("matches weeding: true"), "{out}");
}

#[test]
fn lattice_code_and_nerve() {
    let cover = fixture("chain.json");
    let code = ok(&["code", &cover]);
    assert!(code.starts_with("m=3\n"));
    assert_eq!(code.lines().count(), 8);
    let json: serde_json::Value = serde_json::from_str(&ok(&["lattice", &fixture("cube.cxt"), "--json"])).unwrap();
    assert_eq!(json["concepts"].as_array().unwrap().len(), 28);
    assert_eq!(ok(&["nerve", &cover]), "m=3\n1 2 3\n");
    let report = ok(&["report", &cover]);
    assert!(report.contains("lattice size: 7"), "{report}");
}

#[test]
fn implications_on_neurons() {
    let cover = fixture("chain.json");
    let out = ok(&["implications", &cover, "--side", "objects", "--premise", "1,3", "--target", "2"]);
    assert!(out.contains("holds: true"), "{out}");
    let out = ok(&["implications", &cover, "--side", "objects", "--premise", "1", "--target", "2"]);
    assert!(out.contains("holds: false"), "{out}");
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(nervelat(&[]).status.code(), Some(2));
    assert_eq!(nervelat(&["weed"]).status.code(), Some(2));
    assert_eq!(nervelat(&["betti", &fixture("torus.cplx"), "--field", "4"]).status.code(), Some(2));
    let missing_side = nervelat(&["implications", &fixture("cube.cxt"), "--premise", "1", "--target", "2"]);
    assert_eq!(missing_side.status.code(), Some(2));
    // domain, parse, io
    assert_eq!(nervelat(&["betti", "/nonexistent/file.cplx"]).status.code(), Some(1));
    let bad = std::env::temp_dir().join("nervelat-bad-input.cplx");
    std::fs::write(&bad, "m=2\n1 5\n").unwrap();
    let out = nervelat(&["betti", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    // resource cap
    let capped = Command::new(env!("CARGO_BIN_EXE_nervelat"))
        .args(["betti", &fixture("torus.cplx")])
        .env("NERVELAT_FACE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn output_file_and_determinism() {
    let path = std::env::temp_dir().join("nervelat-torus-weeding.dot");
    ok(&["weed", &fixture("torus.cplx"), "--dot", "-o", path.to_str().unwrap()]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, ok(&["weed", &fixture("torus.cplx"), "--dot"]));
    for args in [["core", "torus.cplx"], ["lattice", "octahedron.cxt"], ["report", "covered_third.json"]] {
        let f = fixture(args[1]);
        assert_eq!(ok(&[args[0], &f]), ok(&[args[0], &f]));
    }
}
