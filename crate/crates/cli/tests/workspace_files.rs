use std::path::PathBuf;
use std::process::Command;

use descent_cli::{catalog_workspace, run_command, Context, Format, Workspace};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn descent(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_descent")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn catalog_fixture_matches_builtin_catalog() {
    let loaded = Workspace::load(&fixture("catalog.json")).unwrap();
    let builtin = catalog_workspace();
    assert_eq!(loaded.to_json().unwrap(), builtin.to_json().unwrap());
    assert_eq!(loaded.ring_maps.len(), 7);
    for (name, (_, _, map)) in &builtin.ring_maps {
        assert_eq!(&loaded.ring_maps[name].2, map);
    }
}

#[test]
fn load_emit_load_is_stable() {
    let once = Workspace::load(&fixture("catalog.json")).unwrap();
    let doc = once.to_document().unwrap();
    let twice = Workspace::from_document(&doc).unwrap();
    assert_eq!(twice.to_document().unwrap(), doc);
    for (name, (_, m)) in &once.modules {
        assert_eq!(&twice.modules[name].1, m);
    }
    for (name, b) in &once.bundles {
        assert_eq!(twice.bundles[name].total().len(), b.total().len());
    }
    for (name, c) in &once.categories {
        assert_eq!(&twice.categories[name], c);
    }
}

#[test]
fn nonassociative_ring_names_the_triple() {
    // Basis 1, x, y with x² = y, xy = x, y² = 0: (xx)y = 0 but x(xy) = y.
    let json = r#"{
        "rings": {"bad": {
            "generators": 3,
            "constants": [
                [[1,0,0],[0,1,0],[0,0,1]],
                [[0,1,0],[0,0,1],[0,1,0]],
                [[0,0,1],[0,1,0],[0,0,0]]
            ],
            "unit": [1,0,0]
        }}
    }"#;
    let err = Workspace::from_json(json).unwrap_err().to_string();
    assert!(err.contains("rings.bad"), "{}", err);
    assert!(err.contains("associative on the triple (1, 1, 2)"), "{}", err);
}

#[test]
fn dangling_reference_and_unknown_fields_rejected() {
    let err = Workspace::from_json(r#"{"ring_maps": {"f": {"source": "Z", "target": "Z", "matrix": [[1]]}}}"#).unwrap_err();
    assert!(err.to_string().contains("ring_maps.f: unknown ring \"Z\""), "{}", err);
    let err = Workspace::from_json(r#"{"ringz": {}}"#).unwrap_err();
    assert!(err.to_string().contains("unknown field"), "{}", err);
}

#[test]
fn graph_categories_and_diagrams_load() {
    let json = r#"{
        "categories": {"v": {"objects": ["top", "left", "right"], "edges": [["top", "left"], ["top", "right"]]}},
        "functors": {},
        "diagrams": {"s": {"kind": "sets", "category": "v",
            "values": {"top": ["p"], "left": ["q", "r"], "right": ["s"]},
            "maps": {"e0": ["q"], "e1": ["s"]}}}
    }"#;
    let ws = Workspace::from_json(json).unwrap();
    assert_eq!(ws.categories["v"].morphism_count(), 5);
    let err = Workspace::from_json(&json.replace(r#""e0": ["q"]"#, r#""e0": ["z"]"#)).unwrap_err();
    assert!(err.to_string().contains("\"z\" is not an element"), "{}", err);
}

#[test]
fn json_reports_are_byte_identical() {
    let ctx = Context::new(catalog_workspace());
    let args = vec!["count=3".to_string()];
    let a = run_command(&ctx, "selftest", &args).unwrap().render(Format::Json);
    let b = run_command(&ctx, "selftest", &args).unwrap().render(Format::Json);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let (code, out, _) = descent(&["check-beck", "phi=id", "m=Z"]);
    assert_eq!(code, 0);
    assert!(out.contains("all verdicts hold"));
    let (code, out, _) = descent(&["check-beck", "phi=z2", "m=Z"]);
    assert_eq!(code, 1);
    assert!(out.contains("equalizer  Z/2"));
    let (code, _, err) = descent(&["check-beck", "phi=nope", "m=Z"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown ring map"));
    let (code, _, _) = descent(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn amitsur_example_from_the_command_line() {
    let (code, out, _) = descent(&["amitsur", "phi=zz2", "m=Z", "s=0..3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let groups: Vec<&str> = v["groups"].as_array().unwrap().iter().map(|g| g["value"].as_str().unwrap()).collect();
    assert_eq!(groups, ["Z", "0", "0", "0"]);
}

#[test]
fn workspace_file_on_the_command_line() {
    let path = fixture("catalog.json");
    let (code, out, _) = descent(&["--workspace", path.to_str().unwrap(), "codescent-beck", "phi=two_one", "d=xyz"]);
    assert_eq!(code, 0, "{}", out);
    let (code, _, err) = descent(&["--workspace", "/nonexistent.json", "laws", "phi=id"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"));
}
