use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcolor")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn chromatic_outputs() {
    let k2 = fixture("k2.json");
    assert_eq!(stdout(&["chromatic", &k2, "--eval", "3"]), "6");
    assert_eq!(stdout(&["chromatic", &k2, "--qsym"]), "2*M[1,1]");
    assert_eq!(stdout(&["chromatic", &k2]), "x^2 - x");
    assert_eq!(stdout(&["chromatic", &fixture("chain.json"), "--poly"]), "1/2*x^2 - 1/2*x");
}

#[test]
fn geometry_outputs() {
    let k2 = fixture("k2.json");
    assert_eq!(stdout(&["hilbert", &k2, "--n", "2"]), "6");
    assert_eq!(stdout(&["ehrhart", &k2]), "2*M[1,1]");
    assert_eq!(stdout(&["hilbert", &fixture("four_generators.json"), "--n", "4"]), "100");
}

#[test]
fn convert_matches_between_species() {
    let a = stdout(&["convert", &fixture("k2.json")]);
    let b = stdout(&["convert", &fixture("u12.json"), "--to", "coloring-problem"]);
    assert_eq!(a, b);
    assert!(a.starts_with(r#"{"elements":["a","b"]"#));
}

#[test]
fn convert_writes_file() {
    let dir = std::env::temp_dir().join(format!("hopfcolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("chain-c.json");
    stdout(&["convert", &fixture("chain.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(stdout(&["chromatic", out.to_str().unwrap(), "--qsym"]), "M[1,1]");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn flags_lists_each_stable_flag() {
    let text = stdout(&["flags", &fixture("k2.json")]);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.starts_with("[1,1]")));
    assert!(stdout(&["flags", &fixture("four_generators.json")]).contains("[2,2]  {} < {a,d} < {a,b,c,d}"));
}

#[test]
fn check_exit_codes() {
    assert!(stdout(&["check", &fixture("four_generators.json"), "--paranoid"]).starts_with("valid"));
    let bad = run(&["check", &fixture("bad.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("axiom 2"));

    let dir = std::env::temp_dir().join(format!("hopfcolor-cli-check-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"type\": ").unwrap();
    assert_eq!(run(&["check", broken.to_str().unwrap()]).status.code(), Some(2));
    let big = dir.join("big.json");
    let labels: Vec<String> = (0..9).map(|i| format!("\"v{i}\"")).collect();
    std::fs::write(&big, format!(r#"{{"type":"graph","elements":[{}],"edges":[]}}"#, labels.join(","))).unwrap();
    assert_eq!(run(&["chromatic", big.to_str().unwrap()]).status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn suites_from_the_command_line() {
    let out = stdout(&["axioms", "--species", "poset", "--trials", "30", "--seed", "5"]);
    assert!(out.contains("all laws hold"), "{out}");
    let out = stdout(&["theorems", "--trials", "10", "--seed", "5", "--size", "3"]);
    assert!(out.contains("all laws hold"), "{out}");
    assert_eq!(run(&["axioms", "--species", "M", "--size", "6"]).status.code(), Some(3));
    assert_eq!(run(&["axioms", "--species", "tree"]).status.code(), Some(2));
}
