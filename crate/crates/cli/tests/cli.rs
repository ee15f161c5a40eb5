use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperfect"))
        .args(args)
        .env_remove("HYPERFECT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn khg(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn complete_hypergraph_is_in_every_class() {
    let k5 = run(&[
        "generate",
        "clique-hypergraph",
        "--r",
        "3",
        "--input",
        path(&khg("2 5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")),
    ]);
    assert!(k5.status.success());
    let f = khg(&stdout(&k5));
    let o = run(&["--format", "json", "classify", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["omega"], 5);
    for (name, c) in v["classes"].as_object().unwrap() {
        if name != "voloshin" {
            assert_eq!(c["verdict"], true, "{name}");
        }
    }
}

#[test]
fn three_edges_on_four_vertices_are_not_clique_friendly() {
    let f = khg("3 4\n0 1 2\n0 1 3\n0 2 3\n");
    let v = json(&run(&["--format", "json", "classify", path(&f)]));
    let cf = &v["classes"]["clique_friendly"];
    assert_eq!(cf["verdict"], false);
    assert_eq!(cf["witness"]["edges"], 3);
    assert_eq!(v["classes"]["c_omega"]["verdict"], false);
}

#[test]
fn cocycles_are_recognized() {
    let petersen = khg("2 10\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n");
    let co = run(&["generate", "cocycle", "--input", path(&petersen)]);
    assert!(co.status.success());
    let f = khg(&stdout(&co));
    let v = json(&run(&["--format", "json", "classify", path(&f)]));
    assert_eq!(v["n"], 10);
    assert_eq!(v["classes"]["cocycle"]["verdict"], true);

    let c5 = khg(&stdout(&run(&["generate", "cycle", "--n", "5"])));
    let f = khg(&stdout(&run(&["generate", "cocycle", "--input", path(&c5)])));
    let v = json(&run(&["--format", "json", "classify", path(&f)]));
    assert_eq!(v["classes"]["h_perfect"]["verdict"], true);
    assert_eq!(v["classes"]["doubly"]["verdict"], true);
}

#[test]
fn parse_errors_exit_two() {
    let f = khg("3 4\n0 1 9\n");
    let o = run(&["classify", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["classify", "/nonexistent.khg"]).status.code(), Some(1));
}

#[test]
fn strict_exits_three_on_indeterminate() {
    let f = khg("3 5\n0 1 3\n0 2 3\n0 2 4\n1 2 4\n1 3 4\n");
    let o = run(&["--budget", "1", "--strict", "classify", path(&f)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("indeterminate"));
    assert_eq!(run(&["--budget", "1", "classify", path(&f)]).status.code(), Some(0));
}

#[test]
fn generators() {
    let t = stdout(&run(&["generate", "turan", "--n", "6"]));
    assert!(t.starts_with("3 6\n"));
    assert_eq!(t.lines().count(), 1 + 14);
    let p = stdout(&run(&["generate", "pre-odd-hole", "--sectors", "2,2,2,1"]));
    assert!(p.starts_with("2 8\n"));
    let c = stdout(&run(&["generate", "cone", "--input", path(&khg("2 3\n0 1\n1 2\n"))]));
    assert_eq!(c, "3 4\n0 1 3\n1 2 3\n");
    let b = stdout(&run(&["generate", "intersecting-b", "--n", "11"]));
    assert_eq!(b.lines().count(), 1 + 25);
    let s = stdout(&run(&["generate", "switching", "--a", "0,2"]));
    assert!(s.starts_with("2 24\n"));
    assert_eq!(run(&["generate", "turan"]).status.code(), Some(1));
    assert_eq!(
        run(&["generate", "pre-odd-hole", "--sectors", "2,2,2"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_passes_and_is_stable_across_workers() {
    let one = run(&["--jobs", "1", "--format", "json", "verify", "berge-equiv", "--n", "5"]);
    assert_eq!(one.status.code(), Some(0));
    let four = run(&["--jobs", "4", "--format", "json", "verify", "berge-equiv", "--n", "5"]);
    assert_eq!(one.stdout, four.stdout);
    let v = json(&one);
    assert_eq!(v[0]["counterexamples"].as_array().unwrap().len(), 0);
    assert!(stdout(&run(&["verify", "tetra"])).starts_with("PASS tetra"));
    assert_eq!(run(&["verify", "no-such-check"]).status.code(), Some(1));
}

#[test]
fn verify_reports_counterexamples() {
    let o = run(&["verify", "fig2-search"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL fig2-search"));
}

#[test]
fn enumerate_counts() {
    let iso = stdout(&run(&["enumerate", "--k", "3", "--n", "5", "--iso"]));
    assert_eq!(iso.matches("# instance").count(), 34);
    let all = json(&run(&["--format", "json", "enumerate", "--k", "3", "--n", "4"]));
    assert_eq!(all.as_array().unwrap().len(), 16);
}

#[test]
fn ramsey_table() {
    let o = stdout(&run(&["ramsey", "--s", "2", "--k", "3"]));
    assert!(o.starts_with("R_2(3) = 6"));
    let unknown = stdout(&run(&["ramsey", "--s", "3", "--k", "3"]));
    assert!(unknown.contains("unknown"));
    let external = stdout(&run(&["ramsey", "--s", "3", "--k", "3", "--external"]));
    assert!(external.contains("= 17"));
}
