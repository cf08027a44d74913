use std::io::Write;
use std::process::{Command, Stdio};

fn zforce(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zforce"))
        .args(args)
        .env("ZFORCE_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn pipeline_from_gen() {
    let (code, g6, _) = zforce(&["gen", "petersen"], "");
    assert_eq!(code, 0);
    let (code, out, _) = zforce(&["-q", "exact", "-"], &g6);
    assert_eq!((code, out.trim()), (0, "5"));
    let (code, out, _) = zforce(&["-q", "expect", "-"], &g6);
    assert_eq!((code, out.trim()), (0, "81/14"));
}

#[test]
fn exit_codes() {
    assert_eq!(zforce(&["closure", "--g6", "C~", "--set", "0"], "").0, 3);
    assert_eq!(zforce(&["exact", "--g6", "C~", "--budget", "1"], "").0, 4);
    assert_eq!(zforce(&["nosuch"], "").0, 2);
    assert_eq!(zforce(&["exact", "--g6", "??"], "").0, 2);
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_zforce"))
        .args(["gen", "petersen"])
        .env("ZFORCE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_under_seed() {
    let (_, g6, _) = zforce(&["gen", "regular", "16", "3", "--seed", "5", "--connected"], "");
    let args = [
        "heuristic",
        "-",
        "--method",
        "random",
        "--trials",
        "300",
        "--seed",
        "11",
    ];
    let a = zforce(&args, &g6);
    let b = zforce(&args, &g6);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn verify_records_follow_input_order() {
    let (_, stream, _) = zforce(
        &["gen", "gnp", "9", "0.4", "--count", "600", "--seed", "8", "--connected"],
        "",
    );
    let (code, out, _) = zforce(&["verify", "-", "--hunt-one-third"], &stream);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 601);
    for (i, rec) in lines[..600].iter().enumerate() {
        assert_eq!(rec["line"], i + 1);
    }
    assert_eq!(lines[600]["summary"]["graphs"], 600);
}
