use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn tzmrd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tzmrd")).args(args).output().expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen_example(dir: &Path) -> std::path::PathBuf {
    let params = dir.join("params.json");
    let out = tzmrd(&[
        "gen",
        "--q",
        "5",
        "--n",
        "2",
        "--k",
        "2",
        "--modulus",
        "[2,0,0,0,1]",
        "--gamma",
        "[3,2,1,1]",
        "--xi",
        "[4,2,4,0]",
        "--out",
        path(&params),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    params
}

#[test]
fn selftest_passes() {
    let out = tzmrd(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "PASS mu\nPASS G\nPASS H\nPASS GH^T\n");
}

#[test]
fn gen_writes_expected_mu() {
    let dir = tempfile::tempdir().unwrap();
    let params = gen_example(dir.path());
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(params).unwrap()).unwrap();
    assert_eq!(json["mu"], serde_json::json!([[1, 2, 1, 0], [2, 1, 0, 2], [1, 0, 2, 4], [0, 2, 4, 2]]));
    assert_eq!(json["q"], 5);
}

#[test]
fn encode_corrupt_decode() {
    let dir = tempfile::tempdir().unwrap();
    let params = gen_example(dir.path());
    let msg = dir.path().join("msg.txt");
    // Messages in F_25 = {a + b α^2}; four symbols each.
    fs::write(&msg, "[1,0,0,0],[0,0,1,0],[3,0,4,0],[0,0,0,0]\n[0,0,0,0],[0,0,0,0],[0,0,0,0],[2,0,2,0]\n").unwrap();
    let cw = dir.path().join("cw.txt");
    let out = tzmrd(&["encode", "--params", path(&params), "--msg", path(&msg), "--out", path(&cw)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let codewords = fs::read_to_string(&cw).unwrap();
    assert_eq!(codewords.lines().count(), 2);

    // Add the rank-one subfield error (1, 0, 0, 0) to the first coordinate.
    let first = codewords.lines().next().unwrap();
    let mut elems: Vec<Vec<u32>> = first
        .split("],[")
        .map(|e| e.trim_matches(|c| c == '[' || c == ']').split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    elems[0][0] = (elems[0][0] + 1) % 5;
    let corrupted = elems
        .iter()
        .map(|e| format!("[{}]", e.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(",");
    let rx = dir.path().join("rx.txt");
    fs::write(&rx, format!("{corrupted}\n{}\n", codewords.lines().nth(1).unwrap())).unwrap();

    let res = dir.path().join("res.txt");
    let out = tzmrd(&["decode", "--params", path(&params), "--in", path(&rx), "--out", path(&res)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(&res).unwrap(), codewords);
}

#[test]
fn decode_failure_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let params = gen_example(dir.path());
    let rx = dir.path().join("rx.txt");
    // A full-rank word far from every codeword.
    fs::write(&rx, "[1,0,0,0],[0,1,0,0],[0,0,1,1],[2,0,0,1]\n").unwrap();
    let res = dir.path().join("res.txt");
    let out = tzmrd(&["decode", "--params", path(&params), "--in", path(&rx), "--out", path(&res)]);
    // With n = k = 2 only the trace-augmented branch can succeed, and this
    // word is not within rank one of the code.
    assert_eq!(fs::read_to_string(&res).unwrap(), "FAIL NoRankFound\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_parameters_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = tzmrd(&["gen", "--q", "4", "--n", "2", "--k", "1", "--out", path(&dir.path().join("p.json"))]);
    assert_eq!(out.status.code(), Some(2));
    let out = tzmrd(&[
        "gen",
        "--q",
        "5",
        "--n",
        "2",
        "--k",
        "2",
        "--gamma",
        "[2,0,0,0]",
        "--xi",
        "[1,0,0,0]",
        "--out",
        path(&dir.path().join("p.json")),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let params = gen_example(dir.path());
    let out = tzmrd(&["mindist", "--params", path(&params), "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exit_3() {
    let out = tzmrd(&["mindist", "--params", "/nonexistent/params.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn simulate_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let params = gen_example(dir.path());
    let run = || {
        let out = tzmrd(&[
            "simulate",
            "--params",
            path(&params),
            "--t",
            "1",
            "--subfield-only",
            "--trials",
            "50",
            "--seed",
            "9",
        ]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["report"].clone()
    };
    let a = run();
    assert_eq!(a, run());
    assert_eq!(a["successes"], 50);
}

#[test]
fn mindist_and_bench() {
    let dir = tempfile::tempdir().unwrap();
    let out = tzmrd(&["gen", "--q", "3", "--n", "2", "--k", "1", "--out", path(&dir.path().join("p.json"))]);
    assert!(out.status.success());
    let out = tzmrd(&["mindist", "--params", path(&dir.path().join("p.json"))]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "4");
    let out = tzmrd(&["bench", "--q", "3", "--sizes", "2,3", "--reps", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("log-log slope"));
}
