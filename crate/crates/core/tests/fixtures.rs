use hopfcolor::io::{parse_raw_problem, parse_structure, parse_structure_with, render_structure};
use hopfcolor::problem::{validate, ClosureCheck, Violation};
use hopfcolor::{Error, HopfMonoid};

fn read(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

const ALL: [&str; 5] = ["k2.json", "u12.json", "chain.json", "four_generators.json", "bad.json"];

#[test]
fn closure_checks_agree_on_fixtures() {
    for name in ALL {
        let text = read(name);
        let fast = parse_structure_with(&text, ClosureCheck::Covers).map(|x| x.phi());
        let slow = parse_structure_with(&text, ClosureCheck::Paranoid).map(|x| x.phi());
        assert_eq!(fast.is_ok(), slow.is_ok(), "{name}");
        if let Ok(c) = fast {
            assert!(c.validate(ClosureCheck::Paranoid).is_empty());
            assert!(c.validate(ClosureCheck::Covers).is_empty());
        }
    }
}

#[test]
fn bad_fixture_names_the_missing_full_set() {
    let raw = parse_raw_problem(&read("bad.json")).unwrap();
    let violations = validate(&raw, ClosureCheck::Covers);
    assert_eq!(violations, vec![Violation::FullSetAbsent]);
    assert!(violations[0].to_string().contains("axiom 2"));
    assert!(matches!(parse_structure(&read("bad.json")), Err(Error::InvalidProblem(_))));
}

#[test]
fn fixtures_round_trip() {
    for name in &ALL[..4] {
        let x = parse_structure(&read(name)).unwrap();
        let text = render_structure(&x);
        assert_eq!(parse_structure(&text).unwrap(), x, "{name}");
    }
}

#[test]
fn stable_pieces_of_fixtures() {
    let chain = parse_structure(&read("chain.json")).unwrap();
    assert!(!chain.is_stable());
    let a = chain.ground().subset_of(&["a"]).unwrap();
    assert!(chain.restrict(a).unwrap().is_stable());
    let b = chain.ground().subset_of(&["b"]).unwrap();
    assert!(chain.restrict(b).is_none());
}
