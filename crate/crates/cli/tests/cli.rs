use std::io::Write;
use std::process::{Command, Output, Stdio};

use totdom::io::{decode_graph6, encode_graph6};
use totdom::oracles::enumerate_labeled_graphs;

fn totdom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_totdom"))
        .args(args)
        .env_remove("TOTDOM_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

fn constructed(args: &[&str], stdin: &str) -> String {
    let o = totdom(args, stdin);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).lines().next().unwrap().to_string()
}

fn graph6_corpus(max_n: usize) -> String {
    let mut text = String::new();
    for n in 1..=max_n {
        for g in enumerate_labeled_graphs(n).unwrap() {
            text.push_str(&encode_graph6(&g).unwrap());
            text.push('\n');
        }
    }
    text
}

#[test]
fn construct_sizes() {
    let crown = constructed(&["construct", "crown", "3"], "");
    assert_eq!(decode_graph6(&crown).unwrap().n(), 6);
    let lk6 = constructed(&["construct", "line-complete", "6"], "");
    assert_eq!(decode_graph6(&lk6).unwrap().n(), 15);
    let cover = constructed(&["construct", "double-cover"], &lk6);
    let cover = decode_graph6(&cover).unwrap();
    assert_eq!((cover.n(), cover.edge_count()), (30, 120));
    let k2 = constructed(&["construct", "complete", "2"], "");
    let product = constructed(&["construct", "product"], &format!("{k2}\n{k2}\n"));
    assert_eq!(decode_graph6(&product).unwrap().edge_count(), 2);
    let o = totdom(&["construct", "crown", "3"], "");
    assert_eq!(last_line(&o), "summary n=6 m=6");
}

#[test]
fn construct_formats() {
    let o = totdom(&["construct", "complete", "2", "--format", "dot"], "");
    assert_eq!(stdout(&o).matches("--").count(), 1);
    let o = totdom(&["construct", "crown", "3", "--format", "edge-list"], "");
    let o = totdom(&["compute", "--format", "edge-list"], &stdout(&o));
    assert_eq!(last_line(&o), "summary gamma_t=4 grundy=4 uniform k=4");
}

#[test]
fn compute_reports() {
    let crown = constructed(&["construct", "crown", "3"], "");
    let o = totdom(&["compute"], &crown);
    assert!(o.status.success());
    assert_eq!(last_line(&o), "summary gamma_t=4 grundy=4 uniform k=4");

    let lk9 = constructed(&["construct", "line-complete", "9"], "");
    let o = totdom(&["compute"], &lk9);
    assert!(o.status.success());
    let last = last_line(&o);
    assert!(last.ends_with("not-uniform"), "{last}");
    let grundy: usize = last.split(' ').find_map(|t| t.strip_prefix("grundy=")).unwrap().parse().unwrap();
    assert!(grundy >= 7);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str], input: &str| totdom(args, input).status.code().unwrap();
    assert_eq!(code(&["compute"], "B_\n"), 3);
    assert_eq!(code(&["compute"], "not graph6\n"), 2);
    assert_eq!(code(&["compute", "--format", "edge-list"], "2 1\n0 0\n"), 2);
    let lk9 = constructed(&["construct", "line-complete", "9"], "");
    assert_eq!(code(&["compute", "--time-limit", "0"], &lk9), 4);
    assert_eq!(code(&["compute", "--memo-cap-mib", "0"], &lk9), 5);
    assert_eq!(code(&["compute", "--max-n", "10"], &lk9), 5);
    assert_eq!(code(&["construct", "complete", "513"], ""), 5);
    let o = totdom(&["compute"], "B_\n");
    assert_eq!(last_line(&o), "summary error=undefined");
}

#[test]
fn scan_two_uniform_are_complete_multipartite() {
    let input = graph6_corpus(4);
    let o = totdom(&["scan", "--k", "2"], &input);
    assert!(o.status.success());
    let text = stdout(&o);
    let (summary, records) = text.trim_end().rsplit_once('\n').map(|(a, b)| (b, a)).unwrap();
    let matched: Vec<&str> = records.lines().collect();
    let expected: Vec<String> = input
        .lines()
        .filter(|l| {
            let g = decode_graph6(l).unwrap();
            !g.has_isolated_vertex() && g.edge_count() > 0 && g.complete_multipartite_parts().is_some()
        })
        .map(String::from)
        .collect();
    assert_eq!(matched, expected);
    assert_eq!(matched.len(), 19);
    assert_eq!(summary, "summary read=75 matched=19 malformed=0 undefined=29 skipped=0 errors=0");
}

#[test]
fn scan_output_independent_of_workers() {
    let mut input = graph6_corpus(5);
    input.insert_str(input.len() / 2, "garbage\n");
    let runs: Vec<Vec<u8>> = ["1", "2", "4", "7"]
        .iter()
        .map(|p| totdom(&["scan", "--parallel", p], &input).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let o = totdom(&["scan"], &input);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed"));
}

#[test]
fn scan_finds_no_odd_uniform_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.g6");
    std::fs::write(&path, graph6_corpus(6)).unwrap();
    for k in ["1", "3", "5"] {
        let o = totdom(&["scan", path.to_str().unwrap(), "--k", k], "");
        assert!(last_line(&o).contains(" matched=0 "), "{}", last_line(&o));
    }
}

#[test]
fn scan_empty_input() {
    let o = totdom(&["scan"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "summary read=0 matched=0 malformed=0 undefined=0 skipped=0 errors=0\n");
}

#[test]
fn verify_quick_passes() {
    let o = totdom(&["verify-paper", "--level", "quick"], "");
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS criterion")).count(), 13);
    assert_eq!(last_line(&o), "summary level=quick checks=13 passed=13 failed=0");
}

#[test]
fn verify_detects_tampering() {
    for what in ["crown", "line-complete", "double-cover"] {
        let o = totdom(&["verify-paper", "--tamper", what], "");
        assert_eq!(o.status.code(), Some(1), "{what}");
        assert!(stdout(&o).contains("FAIL criterion"));
        assert!(last_line(&o).starts_with("summary level=quick"));
    }
}
