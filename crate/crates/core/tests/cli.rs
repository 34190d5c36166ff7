use std::process::{Command, Output};

fn qlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlie")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bracket_of_xp_with_itself() {
    let o = qlie(&["bracket", "Xp_h", "Xp_h"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn bracket_entries() {
    assert_eq!(stdout(&qlie(&["bracket", "H_h", "Xp_h"])), "2q * Xp_h\n");
    assert_eq!(stdout(&qlie(&["bracket", "Xp_h", "Xm_h", "--twist", "1/2,1/2"])), "H_h\n");
    assert_eq!(stdout(&qlie(&["bracket", "H_h", "H_h", "--twist", "-1,2"])), "(2q - 2q^-1) * H_h\n");
}

#[test]
fn table_json_matches_golden() {
    let o = qlie(&["table", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = qlie::frontend::TableDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.table().unwrap(), qlie::StructureTable::quantum_sl2());
}

#[test]
fn table_latex() {
    let o = stdout(&qlie(&["table", "--format", "latex"]));
    assert!(o.starts_with("\\begin{align*}"));
    assert!(o.contains("[H_h, X^+_h]_h &= 2q\\,X^+_h"), "{o}");
}

#[test]
fn normalize_and_multiply() {
    assert_eq!(stdout(&qlie(&["normalize", "K E"])), "K E\n");
    assert_eq!(stdout(&qlie(&["normalize", "E K"])), "q^-1 * K E\n");
    assert_eq!(stdout(&qlie(&["multiply", "K", "Kinv"])), "1\n");
    assert_eq!(stdout(&qlie(&["normalize", "--mode", "scalar", "s s"])), "2q/(q^2 + 1)\n");
}

#[test]
fn series_default_order() {
    let o = stdout(&qlie(&["series", "2q"]));
    assert!(o.ends_with("+ O(h^9)\n"), "{o}");
    assert_eq!(stdout(&qlie(&["series", "2q", "--order", "4"])), "2 + 2h + h^2 + 1/3 h^3 + 1/12 h^4 + O(h^5)\n");
}

#[test]
fn casimir_check_passes() {
    let o = qlie(&["casimir-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn rep_check_builtin_and_file() {
    assert_eq!(qlie(&["rep-check", "--builtin2"]).status.code(), Some(0));
    let doc = stdout(&qlie(&["rep-check", "--builtin2", "--emit"]));
    let dir = tempdir();
    let good = dir.join("rep.json");
    std::fs::write(&good, &doc).unwrap();
    assert_eq!(qlie(&["rep-check", "--file", good.to_str().unwrap()]).status.code(), Some(0));

    let mut v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    v["pi"]["H_h"][1][1] = "q^-1".into();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let o = qlie(&["rep-check", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[Xp_h, Xm_h]"));
}

#[test]
fn verify_all_passes() {
    let o = qlie(&["verify", "--suite", "all", "--seed", "7", "--cases", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn corrupting_any_golden_constant_fails_verify() {
    let doc = stdout(&qlie(&["table", "--format", "json"]));
    let dir = tempdir();
    let path = dir.join("golden.json");
    std::fs::write(&path, &doc).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(qlie(&["verify", "--suite", "closure", "--cases", "5", "--expect", p]).status.code(), Some(0));

    let v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut bad = v.clone();
                let old = bad["entries"][i][j][k].as_str().unwrap().to_string();
                bad["entries"][i][j][k] = format!("{old} + 1").into();
                std::fs::write(&path, bad.to_string()).unwrap();
                let o = qlie(&["verify", "--suite", "all", "--cases", "2", "--expect", p]);
                assert_eq!(o.status.code(), Some(1), "entry [{i}][{j}][{k}] corrupted to {old} + 1");
            }
        }
    }
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["normalize", "E / F"][..],
        &["bracket", "Xp_h", "E"],
        &["table", "--twist", "1,1"],
        &["rep-check"],
        &["rep-check", "--file", "/nonexistent/rep.json"],
        &["verify", "--suite", "bogus"],
        &["series", "1/(q - 1)"],
        &["ad", "G", "E"],
        &[],
    ] {
        let o = qlie(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(qlie(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_json_report() {
    let o = qlie(&["verify", "--suite", "rep", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qlie-cli-{}-{:?}", std::process::id(), std::thread::current().id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
