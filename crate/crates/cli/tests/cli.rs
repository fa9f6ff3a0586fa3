use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pcgroup"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(id: &str, p: &str) -> String {
    let o = run(&["catalog", "--build", id, "--prime", p], None);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn catalog_build_piped_into_analyze() {
    let text = build("eabcls5", "5");
    let o = run(&["analyze", "--json"], Some(&text));
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], 5);
    assert_eq!(v["order"], 78125);
    assert_eq!(v["series"]["zeta"][1], 25);
    assert_eq!(v["series"]["gamma"][1], 3125);
    assert_eq!(v["equal"], false);
    assert!(v["k_size"].as_u64().unwrap() < 3125);
}

#[test]
fn quadform_without_zero() {
    let o = run(
        &["quadform", "--a", "2", "--b", "0", "--c", "-1", "--p", "5"],
        None,
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("no nontrivial zero"));

    let o = run(
        &["quadform", "--a", "1", "--b", "0", "--c", "-1", "--p", "5"],
        None,
    );
    assert!(stdout(&o).contains("nontrivial zero (λ, μ) = (1, 1)"));

    let o = run(
        &[
            "quadform",
            "--a",
            "1",
            "--b",
            "0",
            "--c",
            "1",
            "--p",
            "7",
            "--represents",
            "3",
        ],
        None,
    );
    assert!(stdout(&o).contains("represents 3"));
}

#[test]
fn quadform_rejects_even_modulus() {
    let o = run(
        &["quadform", "--a", "1", "--b", "0", "--c", "1", "--p", "2"],
        None,
    );
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn verify_abelian_is_out_of_scope() {
    let o = run(&["verify", "-"], Some("prime 5\ngens 3\n"));
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("out of scope"));
}

#[test]
fn verify_matches_catalog_group() {
    let o = run(
        &[
            "verify",
            "--catalog",
            "lastlem-KneqG",
            "--prime",
            "5",
            "--json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcome"]["status"], "match");
    assert_eq!(v["branch"]["clause"], 2);
    assert_eq!(v["truth"], false);
}

#[test]
fn verify_without_enumeration_is_unchecked() {
    let o = run(
        &[
            "verify",
            "--catalog",
            "nab-KeqG",
            "--prime",
            "5",
            "--no-brute-force",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("outcome        unchecked"));
}

#[test]
fn exit_codes_for_bad_input() {
    let o = run(&["validate"], Some("prime 4\ngens 2\n"));
    assert_eq!(o.status.code(), Some(65));
    let o = run(
        &["analyze"],
        Some("prime 5\ngens 3\npow 1 : 2^1\ncomm 2 1 : 3^1\n"),
    );
    assert_eq!(o.status.code(), Some(65));
    let o = run(
        &["validate"],
        Some("prime 5\ngens 3\npow 1 : 2^1\ncomm 2 1 : 3^1\n"),
    );
    assert_eq!(o.status.code(), Some(65));
    assert!(stdout(&o).contains("g1^p g1"));
    let o = run(&["frobnicate"], None);
    assert_eq!(o.status.code(), Some(64));
    let o = run(&["catalog", "--build", "heisenberg", "--prime", "2"], None);
    assert_eq!(o.status.code(), Some(64));
    let o = run(&["analyze", "/nonexistent/file.pc"], None);
    assert_eq!(o.status.code(), Some(66));
    let o = run(&["--help"], None);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_is_identical_across_thread_counts() {
    let args = [
        "analyze",
        "--catalog",
        "nab-KneqG",
        "--prime",
        "5",
        "--json",
    ];
    let one = run(&args, None);
    let mut more = args.to_vec();
    more.extend(["--threads", "4"]);
    let four = run(&more, None);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn catalog_output_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("pcgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("heis.pc");
    let path_s = path.to_str().unwrap();
    let o = run(
        &[
            "catalog",
            "--build",
            "heisenberg",
            "--prime",
            "7",
            "-o",
            path_s,
        ],
        None,
    );
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let o = run(&["validate", path_s], None);
    assert!(stdout(&o).starts_with("consistent: 3 generators, order 7^3 = 343"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn quotient_by_lower_central_term() {
    let o = run(
        &[
            "quotient",
            "--catalog",
            "eabcls5",
            "--prime",
            "5",
            "--gamma",
            "5",
            "--json",
        ],
        None,
    );
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 15625);
    assert_eq!(v["class"], 4);
    assert_eq!(v["series"]["zeta"][1], 25);
}

#[test]
fn quotient_by_normal_closure_of_elements() {
    // Heisenberg modulo its centre is elementary abelian
    let o = run(
        &[
            "quotient",
            "--catalog",
            "heisenberg",
            "--prime",
            "5",
            "--normal-closure",
            "0,0,1",
            "--json",
        ],
        None,
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 25);
    assert_eq!(v["class"], 1);
    let o = run(
        &[
            "quotient",
            "--catalog",
            "heisenberg",
            "--prime",
            "5",
            "--normal-closure",
            "0,7,1",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn kset_reports_non_commutators() {
    let o = run(
        &[
            "kset",
            "--catalog",
            "lastlem-KneqG",
            "--prime",
            "5",
            "--json",
            "--witness-limit",
            "3",
        ],
        None,
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gamma2_order"], 625);
    assert_eq!(v["equal"], false);
    let count = v["witness_count"].as_u64().unwrap();
    assert_eq!(v["k_size"].as_u64().unwrap() + count, 625);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
}

#[test]
fn conjecture_modes() {
    let o = run(
        &[
            "conjecture",
            "--catalog",
            "heisenberg",
            "--prime",
            "3",
            "--json",
        ],
        None,
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mode"], "central-only");
    assert_eq!(v["subgroups_checked"], 2);
    let o = run(
        &[
            "conjecture",
            "--catalog",
            "heisenberg",
            "--prime",
            "3",
            "--all-normal",
            "--json",
        ],
        None,
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mode"], "all-normal");
    assert_eq!(v["subgroups_checked"], 7);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn catalog_list_names_every_entry() {
    let o = run(&["catalog", "--list", "--json"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert!(ids.contains(&"eabcls4-nu-KeqG"));
    assert_eq!(
        v.as_array()
            .unwrap()
            .iter()
            .filter(|e| e["order_p7"] == true)
            .count(),
        9
    );
}
