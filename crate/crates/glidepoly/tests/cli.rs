//! End-to-end checks of the binary: exit codes, determinism, and the JSON
//! interchange format.

use std::process::{Command, Output};

use glidepoly::basis::glide_poly;
use glidepoly::{PolyZB, WeakComposition};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glidepoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn kpoly_glide_expansion_matches_printed_example() {
    let out = run(&["kpoly", "13524", "--expand=glide"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("1 * G(0,1,2,0,0)"));
    assert!(text.contains("1 * b^3 * G(2,2,2,0,0)"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["lr", "132", "213", "--json"]);
    let b = run(&["lr", "132", "213", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_round_trips_through_the_library() {
    let out = run(&["glide", "0,1,0,2", "--json"]);
    assert!(out.status.success());
    let p = PolyZB::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(p, glide_poly(&WeakComposition::new(vec![0, 1, 0, 2])));
}

#[test]
fn beta_specialization_flag() {
    let sym = run(&["glide", "0,1", "--beta=0"]);
    assert_eq!(String::from_utf8(sym.stdout).unwrap().trim(), "x2 + x1");
    let minus = run(&["kpoly", "132", "--beta=-1"]);
    assert_eq!(String::from_utf8(minus.stdout).unwrap().trim(), "x2 + x1 - x1*x2");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["kpoly", "10x"]).status.code(), Some(2));
    assert_eq!(run(&["glide", "1,-2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["kpoly", "132", "--beta=pi"]).status.code(), Some(2));
}

#[test]
fn verify_succeeds_on_a_correct_build() {
    let out = run(&["verify", "--level=2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.contains(": pass")).count() >= 8);
    assert!(text.contains("all suites passed"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("glidepoly-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("slide.txt");
    let out = run(&["slide", "0,2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.trim(), "x2^2 + x1*x2 + x1^2");
    std::fs::remove_dir_all(&dir).ok();
}
