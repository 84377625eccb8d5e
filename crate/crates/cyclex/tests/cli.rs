//! Black-box checks against the compiled binary: output shapes and exit
//! codes.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn census_json_shape() {
    let doc = json_out(&["census", "--q", "3", "--e", "12", "--exact", "--json"]);
    assert_eq!(doc["lower_bound"], 32);
    assert_eq!(doc["distinct_generators"], 32);
    assert_eq!(doc["exact_count"], 44);
    assert_eq!(doc["branch"]["kind"], "char-divides");
    assert_eq!(doc["branch"]["s"], 1);
    assert_eq!(doc["s_set"], serde_json::json!(["x^2 + 1"]));
    assert_eq!(doc["k_values"], serde_json::json!([6, 12, 3]));
    assert_eq!(doc["char_power"], 3);
}

#[test]
fn census_sweep_table() {
    let doc = json_out(&["census", "--q", "2", "--sweep", "6", "--json"]);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5]["e"], 6);
    assert_eq!(rows[5]["exact_count"], 4);
    assert_eq!(rows[0]["exact_count"], 2); // 1 and x+1 both have order 1
}

#[test]
fn order_text_and_json() {
    let out = run(&["order", "--q", "2", "--poly", "x+1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("order = 1"), "{text}");

    let doc = json_out(&["order", "--q", "3", "--poly", "(x^2+1)^3", "--json"]);
    assert_eq!(doc["order"], 12);
    assert_eq!(doc["method"], "via-power");
    assert_eq!(doc["witness"][0]["factor"], "x^2 + 1");
    assert_eq!(doc["witness"][0]["lifted_order"], 12);

    let doc = json_out(&["order", "--q", "2", "--poly", "x^4+x+1", "--brute", "--json"]);
    assert_eq!(doc["order"], 15);
    assert_eq!(doc["method"], "brute");
}

#[test]
fn factor_json_shape() {
    let doc = json_out(&["factor", "--q", "3", "--e", "4", "--json"]);
    let factors = doc["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 3);
    let orders: Vec<u64> = factors.iter().map(|f| f["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![2, 1, 4]);
    assert_eq!(doc["coprime_part"], 4);
    assert_eq!(doc["char_power"], 1);
}

#[test]
fn bch_and_rs_json() {
    let doc = json_out(&["bch", "--q", "2", "--m", "4", "--a", "5", "--delta", "3", "--json"]);
    assert_eq!(doc["length"], 15);
    assert_eq!(doc["dimension"], 9);
    assert_eq!(doc["exponent"], 15);
    assert_eq!(doc["generator"], "x^6 + x^4 + x^3 + x^2 + 1");
    assert_eq!(doc["corollary_applies"], true);
    assert_eq!(doc["defining_leaders"], serde_json::json!([3, 5]));

    let doc = json_out(&["rs", "--q", "7", "--delta", "3", "--json"]);
    assert_eq!(doc["length"], 6);
    assert_eq!(doc["exponent"], 6);
    assert_eq!(doc["generator"], "x^2 + 2x + 6");
    assert_eq!(doc["a"], 0);
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"), "{text}");

    let doc = json_out(&["selftest", "--json"]);
    assert_eq!(doc["failed"], 0);
    assert!(doc["passed"].as_u64().unwrap() >= 9);
}

#[test]
fn exit_codes() {
    // domain errors exit 1
    let out = run(&["census", "--q", "12", "--e", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a prime power"));

    let out = run(&["order", "--q", "2", "--poly", "x^2+"]);
    assert_eq!(out.status.code(), Some(1));

    // usage errors exit 2
    let out = run(&["order", "--q", "2", "--nosuchflag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["census", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2)); // needs --e or --sweep

    // success exits 0
    let out = run(&["factor", "--q", "2", "--e", "15"]);
    assert_eq!(out.status.code(), Some(0));
}

#[cfg(unix)]
#[test]
fn broken_pipe_dies_quietly() {
    use std::os::unix::process::ExitStatusExt;
    use std::process::Stdio;

    // Factoring x^8191 - 1 computes for a while before its first write, so
    // the pipe below is reliably closed by the time any output appears --
    // like `cyclex factor ... | head -1` after head exits. The JSON form
    // also overflows the 64K pipe buffer, so even a late close leaves the
    // child blocked mid-write rather than exited.
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclex"))
        .args(["--json", "factor", "--q", "2", "--e", "8191"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    drop(child.stdout.take());
    let status = child.wait().unwrap();
    assert_eq!(status.signal(), Some(libc::SIGPIPE), "expected a quiet SIGPIPE death, got {status:?}");
}

#[test]
fn non_prime_ground_field() {
    let doc = json_out(&["factor", "--q", "4", "--e", "5", "--json"]);
    let factors = doc["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 3);
    assert_eq!(factors[1]["poly"], "x^2 + ax + 1");

    // custom base modulus for F_9 = F_3[a]/(x^2 + x + 2)
    let doc = json_out(&[
        "order",
        "--q",
        "9",
        "--base-modulus",
        "x^2+x+2",
        "--poly",
        "x + a",
        "--json",
    ]);
    assert_eq!(doc["order"], 8); // -a generates F_9* for this modulus
}
