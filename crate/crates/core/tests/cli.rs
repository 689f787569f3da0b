mod common;

use std::process::Command;

use common::fixture_path;

fn hsrep(args: &[&str]) -> (String, i32) {
    let fixtures = fixture_path("");
    let out = Command::new(env!("CARGO_BIN_EXE_hsrep"))
        .args(args)
        .current_dir(&fixtures)
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn validate_passes_and_fails() {
    let (out, code) = hsrep(&["validate", "u24.json"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("RESULT: PASS"));
    let (out, code) = hsrep(&["validate", "broken.json"]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("FAIL") && l.contains("not meet-closed")), "{out}");
    let (_, code) = hsrep(&["validate", "fano_gf2.json"]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_with_two() {
    let (out, code) = hsrep(&["validate", "missing.json"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("ERROR"));
    let (_, code) = hsrep(&["represent", "u34.json", "--flag", "u24.json"]);
    assert_eq!(code, 2);
    // a flag that is a chain of U34 but not of N134
    let (_, code) = hsrep(&["represent", "u24.json", "--flag", "f.json"]);
    assert_eq!(code, 2);
}

#[test]
fn represent_writes_complexes() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    let (out, code) = hsrep(&["represent", "u24.json", "--flag", "default", "--out", out_dir]);
    assert_eq!(code, 0, "{out}");
    let s0: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("S_0.json")).unwrap()).unwrap();
    let faces = s0["maximal_faces"].as_array().unwrap();
    assert_eq!(faces.len(), 4);
    assert!(faces.iter().all(|f| f.as_array().unwrap().len() == 4));
    assert_eq!(s0["vertices"][0], serde_json::json!({"coatom": ["1"], "sign": "+"}));
    let s1: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("S_{1}.json")).unwrap()).unwrap();
    assert_eq!(s1["vertices"].as_array().unwrap().len(), 2);
    let index: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("index.json")).unwrap()).unwrap();
    assert_eq!(index["complexes"].as_array().unwrap().len(), 6);
}

#[test]
fn represent_counts() {
    let (out, _) = hsrep(&["represent", "bool3.json"]);
    assert!(out.contains("S_0: 8 maximal faces of 3 vertices"), "{out}");
    let (out, _) = hsrep(&["represent", "u34.json", "--flag", "f.json"]);
    assert!(out.contains("S_0: 8 maximal faces of 6 vertices"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let a = hsrep(&["--json", "represent", "fano_gf2.json"]);
    let b = hsrep(&["--json", "represent", "fano_gf2.json"]);
    assert_eq!(a, b);
}

#[test]
fn verify_commands() {
    let (out, code) = hsrep(&["verify", "u24.json"]);
    assert_eq!(code, 0, "{out}");
    let (out, code) = hsrep(&["verify", "fano_gf2.json"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS S_0 homology: H~_0 = 0, H~_1 = 0, H~_2 = Z"), "{out}");
    let (out, code) = hsrep(&["verify", "u34.json", "--exact-nerve"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS nerve is a cross-polytope's for all 12 flats"), "{out}");
}

#[test]
fn homology_command() {
    let (out, code) = hsrep(&["--json", "homology", "rp2.json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dims"][1], serde_json::json!({"d": 1, "betti": 0, "torsion": [2]}));
}

#[test]
fn om_commands() {
    let (out, code) = hsrep(&["om", "covectors", "coord2.json"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("9 covectors"), "{out}");
    let (out, code) = hsrep(&["om", "embed", "u24_vec.json", "--flag", "default"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS injective"));
    assert!(out.contains("PASS Δ(M_G∖0) and S_G have equal homology"));
    let (out, code) = hsrep(&["om", "embed", "u34_vec.json"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("H~_2 = Z"));
}

#[test]
fn flags_compare() {
    let (out, code) = hsrep(&["flags", "compare", "u34.json", "f.json", "g.json"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("C_2 = {1,2}"), "{out}");
    let (out, code) = hsrep(&["flags", "compare", "bool3.json", "default", "default"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn weakmap_commands() {
    let (out, code) = hsrep(&["weakmap", "u34.json", "n134.json"]);
    assert_eq!(code, 0);
    assert!(out.contains("WEAK MAP: yes"));
    let (out, code) = hsrep(&["weakmap", "n134.json", "u34.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("WEAK MAP: no"));
    assert!(out.contains("witness {1,3,4}"));
    let (out, code) = hsrep(&["weakmap", "u34.json", "n134.json", "--search-poset-map", "--flag", "f.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("POSET MAP: NONE"));
    assert!(out.contains("obstruction: {{1,4}-, {3,4}+}"), "{out}");
    let (out, code) = hsrep(&[
        "--json",
        "weakmap",
        "u34.json",
        "n134.json",
        "--search-poset-map",
        "--flag",
        "f.json",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["search"]["found"], false);
    assert_eq!(v["search"]["map"], serde_json::Value::Null);
    assert_eq!(v["search"]["obstruction"]["face"], serde_json::json!(["{1,4}-", "{3,4}+"]));
}

#[test]
fn search_cap_is_reported() {
    let (out, code) = hsrep(&[
        "weakmap",
        "u34.json",
        "u34.json",
        "--search-poset-map",
        "--max-assignments",
        "2",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("exceeded 2 assignments"), "{out}");
}

#[test]
fn covector_weak_maps() {
    let (out, code) = hsrep(&["weakmap", "u24_vec.json", "u24_special.json"]);
    assert_eq!(code, 0, "{out}");
    let (out, code) = hsrep(&["weakmap", "u24_special.json", "u24_vec.json"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("witness covector"));
}
