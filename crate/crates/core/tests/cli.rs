//! End-to-end tests of the `starter-forge` binary against golden outputs.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use starter_forge::document::PartitionDocument;
use starter_forge::TwoPartition;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_starter-forge"));
    cmd.env_remove("STARTER_FORGE_MAX_EXHAUSTIVE");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str, actual: &str) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn partition(doc: &str) -> TwoPartition {
    PartitionDocument::parse(doc).unwrap().partition().unwrap()
}

fn part(n: u32, pairs: &[(i64, i64)]) -> TwoPartition {
    TwoPartition::new(n, pairs).unwrap()
}

#[test]
fn product_of_order_three_with_itself() {
    let o = run(&[
        "product",
        "fixture:z3",
        "fixture:z3",
        "--nucleus",
        "from-cover",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(partition(&text), part(9, &[(1, 2), (4, 8), (7, 5), (3, 6)]));
    golden("product_z3_z3.json", &text);
}

#[test]
fn product_of_order_five_with_order_three() {
    let o = run(&[
        "product",
        "fixture:s5",
        "fixture:z3",
        "--nucleus",
        "from-cover",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(
        partition(&text),
        part(
            15,
            &[(1, 4), (2, 3), (6, 14), (7, 13), (11, 9), (12, 8), (5, 10)]
        )
    );
    golden("product_s5_z3.json", &text);
    let standard = run(&["product", "fixture:s5", "fixture:z3"]);
    assert_eq!(partition(&stdout(&standard)), partition(&text));
}

#[test]
fn order_187_product_passes_check() {
    let o = run(&[
        "product",
        "fixture:s17",
        "fixture:r11",
        "--nucleus",
        "cardioidal",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let check = run_with_stdin(
        &["check", "-", "--require", "starter,strong,skolem"],
        &o.stdout,
    );
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
    assert!(stdout(&check).contains("\"order\": 187"));
}

#[test]
fn order_three_left_factor_needs_orientation() {
    let o = run(&["product", "fixture:z3", "fixture:r11"]);
    assert_eq!(o.status.code(), Some(2));
    let lo = run(&[
        "product",
        "fixture:z3",
        "fixture:r11",
        "--orientation",
        "lo-first",
    ]);
    let hi = run(&[
        "product",
        "fixture:z3",
        "fixture:r11",
        "--orientation",
        "hi-first",
    ]);
    assert_eq!(lo.status.code(), Some(0));
    assert!(partition(&stdout(&lo)).is_cardioidal());
    assert!(!partition(&stdout(&hi)).is_cardioidal());
}

#[test]
fn check_reports() {
    let o = run(&["check", "fixture:s17"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["\"skolem\": true", "\"strong\": true", "\"skew\": false"] {
        assert!(text.contains(line), "{line}");
    }
    golden("check_s17.json", &text);

    let o = run(&["check", "fixture:q9", "--require", "starter"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("\"starter\": false") && text.contains("\"skew\": true"));
    golden("check_q9.json", &text);

    let o = run(&[
        "check",
        "--order",
        "7",
        "--pairs",
        "2,3 4,6 5,1",
        "--require",
        "starter,strong,skew",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_two() {
    let o = run_with_stdin(&["check", "-"], b"{\"order\": 5, \"pairs\": [[1,4] [2,3]]}");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column"));
    let o = run_with_stdin(&["check", "-"], b"{\"order\": 5, \"pairs\": [[1,4],[4,3]]}");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "--order", "5", "--pairs", "1,4 2-3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "fixture:z3", "--require", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_commands() {
    let o = run(&[
        "search",
        "--order",
        "11",
        "--require",
        "starter,skolem",
        "--mode",
        "count",
    ]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "10\n"));

    let o = run(&[
        "search",
        "--order",
        "13",
        "--require",
        "starter,skolem",
        "--mode",
        "first",
    ]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), ""));

    let o = run(&[
        "search",
        "--order",
        "9",
        "--require",
        "starter,strong",
        "--mode",
        "count",
    ]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "0\n"));

    let o = run(&["search", "--order", "11", "--require", "starter,skolem"]);
    assert_eq!(o.status.code(), Some(0));
    golden("search_11_skolem.jsonl", &stdout(&o));
    let docs = PartitionDocument::parse_stream(&stdout(&o)).unwrap();
    assert_eq!(docs.len(), 10);

    let mut merged = String::new();
    for i in 0..3 {
        let shard = format!("{i}/3");
        let o = run(&[
            "search",
            "--order",
            "11",
            "--require",
            "starter,skolem",
            "--shard",
            &shard,
        ]);
        merged.push_str(&stdout(&o));
    }
    let mut lines: Vec<&str> = merged.lines().collect();
    lines.sort();
    let mut whole: Vec<&str> = Vec::new();
    let full = run(&["search", "--order", "11", "--require", "starter,skolem"]);
    let full_text = stdout(&full);
    whole.extend(full_text.lines());
    whole.sort();
    assert_eq!(lines, whole);
}

#[test]
fn search_infeasible_exits_three() {
    let o = run(&[
        "search",
        "--order",
        "15",
        "--require",
        "strong",
        "--mode",
        "count",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = bin()
        .args([
            "search",
            "--order",
            "15",
            "--require",
            "canonical",
            "--mode",
            "count",
        ])
        .env("STARTER_FORGE_MAX_EXHAUSTIVE", "15")
        .output()
        .unwrap();
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "1\n"));
    let o = run(&[
        "search",
        "--order",
        "9",
        "--require",
        "skolem",
        "--strategy",
        "backtrack",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn convert_round_trip() {
    let o = run(&["convert", "seq-to-starter", "1 1 5 2 4 2 3 5 4 3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(
        partition(&text),
        part(11, &[(1, 2), (4, 6), (7, 10), (5, 9), (3, 8)])
    );
    golden("convert_t11.json", &text);
    let back = run_with_stdin(&["convert", "starter-to-seq", "-"], text.as_bytes());
    assert_eq!(
        (back.status.code(), stdout(&back).as_str()),
        (Some(0), "1 1 5 2 4 2 3 5 4 3\n")
    );

    let o = run(&["convert", "starter-to-seq", "fixture:t11"]);
    assert_eq!(stdout(&o), "1 1 5 2 4 2 3 5 4 3\n");

    let canonical = run(&["gen", "canonical", "--order", "7"]);
    let o = run_with_stdin(&["convert", "starter-to-seq", "-"], &canonical.stdout);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["convert", "seq-to-starter", "1 1 2 2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn generators() {
    let o = run(&["gen", "cardioidal", "--order", "11", "--offset", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(
        partition(&text),
        part(11, &[(1, 2), (7, 9), (3, 6), (4, 8), (5, 10)])
    );
    golden("gen_cardioidal_11.json", &text);

    let o = run(&["gen", "cardioidal", "--order", "7"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["gen", "canonical", "--order", "5"]);
    assert_eq!(partition(&stdout(&o)), part(5, &[(1, 4), (2, 3)]));
    golden("gen_canonical_5.json", &stdout(&o));
}

#[test]
fn composite_generation() {
    let o = run(&[
        "gen",
        "composite",
        "--factor",
        "fixture:r11",
        "--factor",
        "fixture:r11@cardioidal",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let w = partition(&stdout(&o));
    assert_eq!(w.order(), 121);
    assert!(w.is_starter() && w.is_skew() && w.is_skolem() && !w.is_cardioidal());

    let o = run(&[
        "gen",
        "composite",
        "--factor",
        "fixture:z3",
        "--factor",
        "fixture:z3@starter=fixture:s5",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn product_is_deterministic() {
    let args = [
        "product",
        "fixture:t7",
        "fixture:s5",
        "--variant",
        "starred",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
