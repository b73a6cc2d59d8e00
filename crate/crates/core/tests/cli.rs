//! Golden tests for the `skein` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use skein::{RatFunc, YoungDiagram};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const KINK: &str = "TANGLE src=1\nCUP 2\nX+ 1\nCAP 2\nEND dst=1\n";
const TREFOIL: &str = "# closure of the positive 2-braid cubed\nTANGLE src=0\nCUP 1\nCUP 2\nX+ 2\nX+ 2\nX+ 2\nCAP 2\nCAP 1\nEND dst=0\n";

#[test]
fn reduce_kink() {
    let p = fixture("kink.t", KINK);
    let o = run(&["reduce", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "\"a^1\" * {b1-t1}\n");
}

#[test]
fn reduce_with_coefficients() {
    let text = format!("\"s^1\" * {KINK}\"-s^1\" * {KINK}");
    let p = fixture("cancel.t", &text);
    let o = run(&["reduce", p.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn kpoly_is_deterministic_and_mirrors() {
    let p = fixture("trefoil.t", TREFOIL);
    let a = run(&["kpoly", p.to_str().unwrap()]);
    let b = run(&["--no-cache", "kpoly", p.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let right: RatFunc = stdout(&a).trim().parse().unwrap();
    let m = fixture("mirror.t", &TREFOIL.replace("X+", "X-"));
    let left: RatFunc = stdout(&run(&["kpoly", m.to_str().unwrap()])).trim().parse().unwrap();
    assert_eq!(left, right.invert_a().invert_s());
}

#[test]
fn young_and_bmw_values() {
    let c2 = YoungDiagram::new(vec![2]).unwrap().c_lambda();
    assert_eq!(stdout(&run(&["young", "clambda", "2"])), format!("{c2}\n"));
    assert_eq!(stdout(&run(&["bmw", "dim", "3"])), "15\n");
    let up = stdout(&run(&["young", "updown", "3"]));
    assert_eq!(up.lines().filter(|l| l.starts_with('(')).count(), 7);
    assert!(up.contains("m(2,1) = 2\n"));
    let q = stdout(&run(&["bmw", "qdim", "1"]));
    assert_eq!(q, format!("{}\n", RatFunc::delta()));
}

#[test]
fn verify_prints_a_table() {
    let o = run(&["bmw", "verify", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS ") || l.starts_with("epsilon = ")));
    assert!(out.ends_with("epsilon = -1\n"));
}

#[test]
fn handlebody_commands() {
    assert_eq!(
        stdout(&run(&["hb", "example-s4"])),
        format!("{}\n", RatFunc::delta().inverse().unwrap())
    );
    let gens = stdout(&run(&["hb", "gens", "2", "2"]));
    assert_eq!(gens.lines().count(), 400);
    let p = fixture(
        "hb.txt",
        "\"1\" g=2 labels=0,0,2,2 boxes=0,0,0,0\n\"a^1\" g=2 labels=1,1,2,0 boxes=0,0,2,0\n",
    );
    let o = run(&["hb", "reduce", p.to_str().unwrap(), "--cut", "1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "\"1\" [g=1 edges=0 labels=0 boxes=0 stub=2] (x) [g=1 edges=1,3 labels=0,2 boxes=0,0 stub=2]\n"
    );
    let d = run(&["hb", "reduce", p.to_str().unwrap(), "--cut", "1", "--defect"]);
    assert!(d.status.success());
    assert_eq!(stdout(&d).lines().count(), 1);
}

#[test]
fn json_output_parses() {
    let o = run(&["--json", "bmw", "dim", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 3);
    let o = run(&["--json", "hb", "example-s4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["steps"].as_array().unwrap().iter().all(|s| s["ok"] == true));
}

#[test]
fn exit_codes_and_error_lines() {
    let bad = fixture("bad.t", "TANGLE src=0\nCUP 7\nEND dst=2\n");
    let o = run(&["reduce", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error[E_PARSE]"));

    let o = run(&["bmw", "dim", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[E_BOUND]"));
    assert!(run(&["--max-n", "5", "bmw", "dim", "5"]).status.success());

    let o = run(&["hb", "gens", "2", "9"]);
    assert_eq!(o.status.code(), Some(1));

    let p = fixture("g2.txt", "\"1\" g=2 labels=0,0,0,0 boxes=0,0,0,0\n");
    let o = run(&["hb", "reduce", p.to_str().unwrap(), "--cut", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[E_CUT]"));

    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["young", "clambda", "2,x"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "/nonexistent/file"]).status.code(), Some(1));
}
