use std::io::Write;
use std::process::{Command, Output};

fn birev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birev")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn aleshin_is_bireversible() {
    let o = birev(&["bireversible", "--automaton", "bundled:aleshin"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn element_order() {
    let o = birev(&["order", "--automaton", "bundled:delta_d", "--word", "a", "--max", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
    let o = birev(&["order", "--automaton", "bundled:aleshin", "--word", "a", "--max", "10"]);
    assert_eq!(stdout(&o).trim(), "> 10");
}

#[test]
fn empty_file_is_input_error() {
    let f = tempfile::NamedTempFile::new().unwrap();
    let o = birev(&["validate", "--automaton", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[empty_input]"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn input_errors_carry_codes() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "alphabet: 0 1\nstates: a\na 0 -> 1 a\n").unwrap();
    let o = birev(&["validate", "--automaton", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[missing_transition]"), "{}", stderr(&o));

    let o = birev(&["trivial", "--automaton", "bundled:aleshin", "--word", "zz"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[unknown_symbol]"));

    let o = birev(&["validate", "--automaton", "bundled:nothing"]);
    assert_eq!(o.status.code(), Some(2));

    let o = birev(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn file_round_trip() {
    let text = stdout(&birev(&["dual", "-a", "bundled:bellaterra"]));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    assert_eq!(stdout(&birev(&["validate", "-a", path])), "ok: 2 states, 3 letters, directed\n");
    let back = stdout(&birev(&["dual", "-a", path]));
    let mut g = tempfile::NamedTempFile::new().unwrap();
    g.write_all(back.as_bytes()).unwrap();
    let o = birev(&["iso", "-a", g.path().to_str().unwrap(), "--other", "bundled:bellaterra", "--fix-alphabet"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5, "{}", stdout(&o));
}

#[test]
fn squares_file_loads() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "squares:\na x y b\n").unwrap();
    let o = birev(&["validate", "-a", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "an incomplete complex is rejected: {}", stdout(&o));
    let o = birev(&["validate", "-a", "bundled:delta_s"]);
    assert!(stdout(&o).contains("signed"));
}

#[test]
fn formats() {
    let dot = stdout(&birev(&["dual", "-a", "bundled:aleshin", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    let tsv = stdout(&birev(&["inverse", "-a", "bundled:aleshin", "--format", "tsv"]));
    assert_eq!(tsv.lines().count(), 7);
    assert_eq!(tsv.lines().next(), Some("from\tinput\toutput\tto"));
}

#[test]
fn group_commands() {
    assert_eq!(stdout(&birev(&["trivial", "-a", "bundled:bellaterra", "--word", "a a"])), "true\n");
    assert_eq!(stdout(&birev(&["trivial", "-a", "bundled:bellaterra", "--word", "a b"])), "false\n");
    let act = birev(&["act", "-a", "bundled:aleshin", "--word", "a", "--on", "0 0"]);
    assert_eq!(act.status.code(), Some(0));
    assert_eq!(stdout(&act).split_whitespace().count(), 2);
    let t = stdout(&birev(&["transitive", "-a", "bundled:delta_d", "--max-level", "3"]));
    assert!(t.ends_with("transitive: true\n"));
    let g = stdout(&birev(&["group-order", "-a", "bundled:delta_s"]));
    assert!(g.starts_with("InfiniteCertified"));
    let g = stdout(&birev(&["group-order", "-a", "bundled:delta_d", "--max-elements", "500"]));
    assert!(!g.starts_with("Finite"));
}

#[test]
fn complex_commands() {
    let t = stdout(&birev(&["tiling", "-a", "bundled:aleshin"]));
    assert!(t.contains("commute: true"));
    assert_eq!(t.lines().next().unwrap().split_whitespace().count(), 7);
    let nf = birev(&["pi1-trivial", "-a", "bundled:aleshin", "--word", "a 0 b^-1 1^-1"]);
    assert_eq!(nf.status.code(), Some(0));
    let p = stdout(&birev(&["presentation", "-a", "bundled:delta_d"]));
    assert!(p.starts_with("generators:"));
    let e = stdout(&birev(&["endo", "-a", "bundled:aleshin"]));
    assert!(e.contains("relators_respected: true"));
}

#[test]
fn coset_commands() {
    let o = birev(&["quotient", "-p", "bundled:ex72", "--relator", "a1^2 a2^-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "generators: a b\nrelators:\na^3\nb^2\n(a b)^2\n").unwrap();
    let t = stdout(&birev(&["tc", "-p", f.path().to_str().unwrap()]));
    assert!(t.contains("index: 6") && t.contains("verified: true"), "{t}");
    let o = birev(&["quotient", "-p", f.path().to_str().unwrap(), "--relator", "q"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumeration() {
    let o = stdout(&birev(&["enumerate", "--states", "2", "--letters", "2", "--policy", "iso"]));
    assert!(o.contains("bireversible=12") && o.contains("non_finite=0"), "{o}");
    let o = birev(&["enumerate", "--states", "4", "--letters", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[size_too_large]"));
}

#[test]
fn reproduce_exit_codes() {
    let o = birev(&["reproduce", "delta_d_orbits"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass: true"));
    let again = birev(&["reproduce", "delta_d_orbits"]);
    assert_eq!(o.stdout, again.stdout);
    let o = birev(&["reproduce", "nonexistent"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[unknown_experiment]"));
    let list = stdout(&birev(&["reproduce", "list"]));
    assert!(list.lines().any(|l| l.starts_with("pm_delta_d\t")));
}
