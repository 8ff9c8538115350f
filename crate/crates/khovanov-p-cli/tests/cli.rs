use std::path::{Path, PathBuf};
use std::process::Command;

fn khp(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_khp")).args(args).env_remove("KHP_WINDOW").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn write(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("khp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn weight2cup_example() {
    let (code, out, _) = khp(&["weight2cup", "--weight", "3,0,-2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({ "cups": [[-3, -2], [-1, 0], [2, 3]] }));
    let (code, out, _) = khp(&["weight2cup", "--weight", "3,0,-2"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches('\\').count(), 3);
}

#[test]
fn mult_products_and_zeros() {
    let idem = write("idem.json", r#"{"cups": [[1, 2]], "caps": [[2, 3]]}"#);
    let arrow = write("arrow.json", r#"{"cups": [[1, 2]], "caps": [[0, 1]]}"#);
    let other = write("other.json", r#"{"cups": [[-1, 0]], "caps": [[0, 1]]}"#);
    let (code, out, _) = khp(&["mult", s(&idem), s(&arrow), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({ "cups": [[1, 2]], "caps": [[0, 1]] }));
    // Mismatched middles.
    let (code, out, _) = khp(&["mult", "--mode", "kn", "-n", "1", s(&arrow), s(&idem)]);
    assert_eq!((code, out.as_str()), (0, "0\n"));
    // (2)_(0)^ · (0)_(0)^ in K_1.
    let (code, out, _) = khp(&["mult", s(&arrow), s(&other), "--trace"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("step 1: Straighten"), "{out}");
    // The product is drawn last, with its orientation dot on the baseline.
    let drawn: Vec<&str> = out.lines().rev().take(2).collect();
    assert!(drawn[1].starts_with('=') && drawn[1].contains('*'), "{out}");
    let (code, out, _) = khp(&["mult", s(&arrow), s(&other), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({ "cups": [[1, 2]], "caps": [[0, 1]] }));
}

#[test]
fn exit_codes() {
    let (code, _, _) = khp(&["hom"]);
    assert_eq!(code, 1);
    let (code, _, _) = khp(&["nonsense"]);
    assert_eq!(code, 1);
    let bad = write("bad.json", "{\"cups\": [[0, 1]], ");
    let (code, _, err) = khp(&["mult", s(&bad), s(&bad)]);
    assert_eq!(code, 1);
    assert!(err.contains("malformed JSON"));
    let (code, _, _) = khp(&["cartan", "-n", "1", "--window", "3..1"]);
    assert_eq!(code, 1);
    let (code, _, _) = khp(&["dual", "--weight", "1,2"]);
    assert_eq!(code, 1);
    // A non-orientable operand is an invariant violation and gets rendered.
    let crossed = write("crossed.json", r#"{"cups": [[0, 1]], "caps": [[0, 1]]}"#);
    let (code, _, err) = khp(&["mult", s(&crossed), s(&crossed)]);
    assert_eq!(code, 2);
    assert!(err.contains("not orientable") && err.contains("===="), "{err}");
    let (code, out, _) = khp(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("selftest"));
}

#[test]
fn cartan_band_for_rank_one() {
    let (code, out, _) = khp(&["cartan", "-n", "1", "--window", "-3..5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let m: Vec<Vec<u64>> = serde_json::from_value(v["matrix"].clone()).unwrap();
    assert_eq!(m.len(), 9);
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            assert_eq!(x, u64::from(j == i || j == i + 2), "({i},{j})");
        }
    }
}

#[test]
fn window_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_khp"))
        .args(["cartan", "-n", "1", "--format", "json"])
        .env("KHP_WINDOW", "0..2")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["weights"], serde_json::json!([[0], [1], [2]]));
}

#[test]
fn output_is_byte_stable() {
    let cmds: [&[&str]; 4] = [
        &["quiver", "-n", "2", "--block", "1", "--window", "-3..5", "--format", "dot"],
        &["ext", "-n", "2", "--window", "-4..6"],
        &["koszulity", "--weight", "2,-1", "--format", "json"],
        &["tableaux", "--length", "4"],
    ];
    for c in cmds {
        let a = khp(c);
        let b = khp(c);
        assert_eq!(a.0, 0, "{c:?}: {}", a.2);
        assert_eq!(a, b, "{c:?}");
    }
}

#[test]
fn structure_commands() {
    let (_, out, _) = khp(&["koszulity", "-n", "2", "--weight", "2,-1"]);
    assert!(out.contains("agree: false"));
    let (_, out, _) = khp(&["dual", "-n", "3", "--weight", "4,1,-2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    let (_, out, _) = khp(&["proj-structure", "--weight", "2,-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 5);
    let (_, out, _) = khp(&["ext", "--lambda", "0", "--mu", "2"]);
    assert!(out.ends_with("= 1\n"));
    let (_, out, _) = khp(&["hom", "--lambda", "2", "--mu", "0"]);
    assert_eq!(out, "1\n");
    let (code, out, _) = khp(&["theta", "--special", "0", "--weight", "", "--on", "projective"]);
    assert_eq!(code, 0, "{out}");
    let (_, out, _) = khp(&["residues", "--seq", "0,-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["stacked_orientable"], true);
    assert_eq!(v["realizable_empty_shape"], true);
    let (_, out, _) = khp(&["quiver", "-n", "1", "--window", "-2..2", "--format", "tikz"]);
    assert!(out.contains("\\draw[->]"));
}

#[test]
fn selftest_single_criterion() {
    let (code, out, _) = khp(&["selftest", "--criterion", "6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[PASS]  6"));
    let (code, _, _) = khp(&["selftest", "--criterion", "15"]);
    assert_eq!(code, 1);
}
