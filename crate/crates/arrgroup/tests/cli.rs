use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_arrgroup"));
    c.env_remove("ARRGROUP_FIXTURES");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arrgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn arvola_presentation_of_the_didactic_fixture() {
    let o = run(&["pi1", "complement", "fixtures/didactic.wd", "--mode", "arvola"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for fam in ["[a4^a3, a2, a1]", "[a3, a1]", "[a4, a3]", "[a3, a2^a1]"] {
        assert!(s.contains(fam), "{}", s);
    }
    assert!(s.contains("abelianization: Z^4"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["info", "fixtures/didactic.wd"]).status.code(), Some(0));
    assert_eq!(run(&["info", "does-not-exist.wd"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    // Randell needs a real diagram: domain error.
    let o = run(&["pi1", "complement", "fixtures/didactic.wd", "--mode", "randell"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("arvola or inclusion"));

    let garbage = tmp("garbage.wd");
    std::fs::write(&garbage, "{ \"n\": ").unwrap();
    assert_eq!(run(&["info", garbage.to_str().unwrap()]).status.code(), Some(2));

    let invalid = tmp("invalid.wd");
    std::fs::write(
        &invalid,
        r#"{"n": 2, "initial_order": [1, 2], "events": [{"t": "1", "virtual": {"pos": 5, "sign": 1}}]}"#,
    )
    .unwrap();
    assert_eq!(run(&["info", invalid.to_str().unwrap()]).status.code(), Some(1));

    let parallel = tmp("parallel.arr");
    std::fs::write(
        &parallel,
        r#"{"field": {"d": 1}, "infinity": 0, "lines": [[[0,0],[0,0],[1,0]], [[1,0],[0,0],[0,0]], [[2,0],[0,0],[0,0]]]}"#,
    )
    .unwrap();
    assert_eq!(run(&["info", parallel.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn verify_passes_on_every_fixture() {
    for f in [
        "didactic.wd",
        "maclane.wd",
        "didactic.arr",
        "maclane.arr",
        "two-lines.arr",
        "node.arr",
        "generic3.arr",
        "near-pencil.arr",
    ] {
        let o = run(&["verify", &format!("fixtures/{}", f)]);
        assert_eq!(o.status.code(), Some(0), "{}: {}", f, stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["wiring", "fixtures/maclane.arr"][..],
        &["inclusion", "fixtures/maclane.wd"],
        &["pi1", "boundary", "fixtures/didactic.arr", "--format", "json"],
    ] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)), "{:?}", args);
    }
}

#[test]
fn wiring_output_is_a_valid_diagram_file() {
    let out = tmp("didactic-computed.wd");
    let o = run(&["wiring", "fixtures/didactic.arr", "--shear", "0,-1/100", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let computed: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let reference: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string("fixtures/didactic.wd").unwrap()).unwrap();
    let kinds = |v: &serde_json::Value| {
        v["events"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e.get("actual").or(e.get("virtual")).cloned())
            .collect::<Vec<_>>()
    };
    assert_eq!(kinds(&computed), kinds(&reference));
    assert_eq!(run(&["verify", out.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn svg_glyphs() {
    let svg = tmp("didactic.svg");
    assert_eq!(run(&["wiring", "fixtures/didactic.wd", "--svg", svg.to_str().unwrap()]).status.code(), Some(0));
    let s = std::fs::read_to_string(&svg).unwrap();
    assert!(s.starts_with("<svg") || s.starts_with("<?xml"));
    assert_eq!(s.matches("class=\"strand\"").count(), 4);
    assert_eq!(s.matches("class=\"crossing ").count(), 12);
    assert_eq!(s.matches("class=\"crossing actual\"").count(), 4);

    let svg = tmp("maclane.svg");
    run(&["wiring", "fixtures/maclane.wd", "--svg", svg.to_str().unwrap()]);
    let s = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(s.matches("class=\"strand\"").count(), 7);

    let svg = tmp("single.svg");
    run(&["wiring", "fixtures/two-lines.arr", "--svg", svg.to_str().unwrap()]);
    let s = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(s.matches("class=\"strand\"").count(), 1);
    assert_eq!(s.matches("class=\"crossing ").count(), 0);
}

#[test]
fn fixture_dir_override() {
    let dir = tmp("fixtures-override");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy("fixtures/two-lines.arr", dir.join("only.arr")).unwrap();
    let o = bin().env("ARRGROUP_FIXTURES", &dir).args(["info", "only.arr"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("n = 1"));
}

#[test]
fn simplify_round_trip_through_pi1_output() {
    let pres = tmp("boundary.txt");
    let o = run(&["pi1", "boundary", "fixtures/didactic.wd"]);
    std::fs::write(&pres, stdout(&o)).unwrap();
    let o = run(&["simplify", pres.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Z^10"), "{}", stdout(&o));

    let z2 = tmp("z2.json");
    std::fs::write(&z2, r#"{"generators": ["a1", "a2"], "relators": ["a1 a1", "a2^-1 a1"]}"#).unwrap();
    let o = run(&["simplify", z2.to_str().unwrap(), "--eliminate", "a2=a1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Z/2") && !s.contains("a2"), "{}", s);
}

#[test]
fn inclusion_table_columns() {
    let s = stdout(&run(&["inclusion", "fixtures/didactic.wd"]));
    let mut lines = s.lines();
    assert_eq!(lines.next().unwrap(), "pair\tdelta_l\tmu\tdelta_r\tdelta\timage\timage_eliminated\tkernel");
    let row14 = s.lines().find(|l| l.starts_with("e1,4\t")).unwrap();
    assert_eq!(row14.split('\t').nth(2), Some("a3^-1"));
    assert!(s.contains("kernel also contains a0 a1 a2 a3 a4"));
}
