//! End-to-end runs of the `ivpoly` binary.

use std::process::Command;

fn ivpoly(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ivpoly"))
        .args(args)
        .env("IVP_THREADS", "2")
        .output()
        .expect("spawn ivpoly");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn sources(n_max: usize) -> Vec<Vec<String>> {
    let args = |s: String| s.split_whitespace().map(String::from).collect();
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(args(format!("--family complete --n {n}")));
        out.push(args(format!("--family complete --n {n} --include-origin")));
        for i in 1..=n {
            out.push(args(format!("--family fixed --n {n} --i {i}")));
            if i < n {
                out.push(args(format!("--family pyramidal --n {n} --i {i}")));
            }
        }
        if n >= 2 {
            out.push(args(format!("--family root --n {n}")));
        }
    }
    out
}

#[test]
fn built_vertex_lists_reproduce_face_counts() {
    let dir = tempfile::tempdir().unwrap();
    for (k, src) in sources(6).iter().enumerate() {
        let src: Vec<&str> = src.iter().map(String::as_str).collect();
        let path = dir.path().join(format!("p{k}.txt"));
        let path_s = path.to_str().unwrap();
        let mut args = vec!["--output", path_s, "build"];
        args.extend(&src);
        let (code, _, err) = ivpoly(&args);
        assert_eq!(code, 0, "{src:?}: {err}");

        let mut direct = vec!["fvector"];
        direct.extend(&src);
        let (c1, from_family, _) = ivpoly(&direct);
        let (c2, from_file, _) = ivpoly(&["fvector", "--file", path_s]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(from_family, from_file, "{src:?}");
    }
}

#[test]
fn output_is_deterministic_across_runs() {
    for args in [
        &[
            "--format",
            "json",
            "ehrhart",
            "--family",
            "pyramidal",
            "--n",
            "5",
            "--i",
            "2",
        ][..],
        &[
            "--format",
            "csv",
            "verify",
            "--claims",
            "thm1.3,prop4.4",
            "--n-max",
            "5",
        ],
        &["facets", "--family", "root", "--n", "4"],
        &["graph", "--family", "fixed", "--n", "6", "--i", "3"],
    ] {
        let first = ivpoly(args);
        let second = ivpoly(args);
        assert_eq!(first.0, 0, "{args:?}: {}", first.2);
        assert_eq!(first.1, second.1, "{args:?}");
    }
}

#[test]
fn default_verify_passes() {
    let (code, out, err) = ivpoly(&["verify"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains(" fail 0 "), "{out}");
    assert!(out
        .lines()
        .all(|l| !l.contains(" fail ") || l.starts_with("total")));
}

#[test]
fn formats() {
    let (code, json, _) = ivpoly(&[
        "--format", "json", "fvector", "--family", "root", "--n", "4",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["d"], 3);
    assert_eq!(v["f"], serde_json::json!([1, 7, 12, 7, 1]));

    let (_, text, _) = ivpoly(&["fvector", "--family", "root", "--n", "4"]);
    assert_eq!(text.trim(), "(1,7,12,7,1)");

    let (code, csv, _) = ivpoly(&[
        "--format", "csv", "verify", "--claims", "thm1.1", "--n-max", "3",
    ]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("claim_id,n,i,status,computed,expected"));
    assert!(lines.all(|l| l.starts_with("thm1.1,") && l.contains(",pass,")));

    let (_, vol, _) = ivpoly(&["volume", "--family", "pyramidal", "--n", "4", "--i", "1"]);
    assert_eq!(vol.trim(), "4");
    let (_, cnt, _) = ivpoly(&[
        "count",
        "--family",
        "complete",
        "--n",
        "3",
        "--include-origin",
        "--t",
        "1",
    ]);
    assert_eq!(cnt.trim(), "7");
}

#[test]
fn output_file_receives_the_body() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dim.txt");
    let path_s = path.to_str().unwrap();
    let (code, out, _) = ivpoly(&["--output", path_s, "dim", "--family", "root", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let (_, direct, _) = ivpoly(&["dim", "--family", "root", "--n", "5"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

#[test]
fn exit_codes() {
    assert_eq!(ivpoly(&["--help"]).0, 0);
    for bad in [
        &["bogus"][..],
        &["dim", "--family", "complete", "--n", "0"],
        &["verify", "--claims", "nope"],
        &["count", "--file", "/nonexistent/vertices.txt", "--t", "1"],
        &["conjecture", "--i", "1", "--n-range", "x..y"],
    ] {
        let (code, _, err) = ivpoly(bad);
        assert_eq!(code, 2, "{bad:?}");
        assert!(err.starts_with("error"), "{bad:?}: {err}");
    }
    let dir = tempfile::tempdir().unwrap();
    let bad_dir = dir.path().join("missing").join("out.txt");
    let (code, _, err) = ivpoly(&[
        "--output",
        bad_dir.to_str().unwrap(),
        "dim",
        "--family",
        "root",
        "--n",
        "3",
    ]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn malformed_vertex_file_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\n1 0 0\n1 x 0\n").unwrap();
    let (code, _, err) = ivpoly(&["dim", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}
