use std::fs;
use std::process::{Command, Output};

use lg_orbit_core::toric::is_selfdual;
use lg_orbit_lab::{dualize_text, load_model_or_preset, parse_model, presets, write_model};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lg-orbit-lab"))
        .args(args)
        .env("LG_ORBIT_LAB_SEED", "7")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_coincidence_has_six_passing_cases() {
    let o = lab(&["verify", "coincidence", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("PASS coincidence/n="))
            .count(),
        6
    );
}

#[test]
fn verify_duality_passes() {
    let o = lab(&["verify", "duality"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let o = lab(&["verify", "everything"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupted_model_fails_verify_all() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.model");
    fs::write(
        &bad,
        "name broken\nvars x y\ndiv\n  1 0\n  0 1 7\npotential x + y\n",
    )
    .unwrap();
    let o = lab(&["verify", "all", "--model", bad.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 5"), "{}", err);
}

#[test]
fn extra_model_adds_cases() {
    let o = lab(&["verify", "duality", "--model", "preset:p1xp1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("model/P1xP1/chow"));
}

#[test]
fn empty_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.model");
    fs::write(&empty, "").unwrap();
    assert!(parse_model("").is_err());
    let o = lab(&["dualize", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn dualize_p2_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dual.model");
    let o = lab(&["dualize", "preset:p2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    let dual = parse_model(&text).unwrap().model;
    let p1xp1 = load_model_or_preset("preset:p1xp1").unwrap().model;
    assert_eq!(dual.div_row_set(), p1xp1.div_row_set());
    let p2 = load_model_or_preset("preset:p2").unwrap().model;
    assert_eq!(
        dual.monomial_set(),
        p2.div_row_set()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    );
}

#[test]
fn selfdual_dual_keeps_row_sets() {
    let m = load_model_or_preset("preset:tp1-selfdual").unwrap();
    assert!(is_selfdual(&m.model));
    let d = parse_model(&dualize_text(&m).unwrap()).unwrap().model;
    assert_eq!(d.div_row_set(), m.model.div_row_set());
    assert_eq!(d.monomial_set(), m.model.monomial_set());
}

#[test]
fn every_preset_parses_and_round_trips() {
    for name in presets::names() {
        let m = presets::model(name);
        let text = write_model(&m.model, m.offsets.as_deref());
        let back = parse_model(&text).unwrap();
        assert_eq!(back, m, "{}", name);
    }
}

#[test]
fn polytope_figures() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("p2.svg");
    let csv = dir.path().join("p2.csv");
    let o = lab(&[
        "polytope",
        "preset:p2",
        "--svg",
        svg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "kind,x,y\nvertex,0,0\nvertex,1,0\nvertex,0,1\n"
    );
    let first = fs::read_to_string(&svg).unwrap();
    assert!(first.starts_with("<svg"));
    lab(&["polytope", "preset:p2", "--svg", svg.to_str().unwrap()]);
    assert_eq!(fs::read_to_string(&svg).unwrap(), first);

    let sq = lab(&["polytope", "preset:p1xp1"]);
    assert_eq!(
        stdout(&sq)
            .lines()
            .filter(|l| l.starts_with("vertex"))
            .count(),
        4
    );
}

#[test]
fn three_column_div_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p3.model");
    fs::write(
        &p,
        "name P3\nvars x y z\ndiv\n 1 0 0\n 0 1 0\n 0 0 1\n -1 -1 -1\npotential x + y + z\noffsets 0 0 0 1\n",
    )
    .unwrap();
    let o = lab(&["polytope", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr)
        .to_lowercase()
        .contains("rank"));
}

#[test]
fn family_commands() {
    let o = lab(&["family", "potential-01", "--t", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("2*x\n"));

    let o = lab(&["family", "tp1-orbit", "--t", "symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("deformation/transition") && !out.contains("FAIL"));

    let o = lab(&["family", "f2-f0", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for ch in ["U:", "U':", "V:", "V':"] {
        assert!(out.lines().any(|l| l.starts_with(ch)), "{}", ch);
    }

    assert_eq!(lab(&["family", "f3-f1"]).status.code(), Some(2));
}
