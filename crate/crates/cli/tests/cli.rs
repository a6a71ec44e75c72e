use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nanoword::kei::fixture;
use nanoword::presets::datum;
use nanoword_cli::keifile;
use serde_json::Value;
use tempfile::TempDir;

const TREFOIL: &str = "# trefoil\n@preset alpha_star\n@letters A:a+ B:b+ C:a+\n@phrase ABCABC\n";
const UNKNOT: &str = "@preset alpha_star\n@phrase -\n";

fn nanoword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nanoword")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn trefoil_invariants() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "trefoil.nw", TREFOIL);
    let out = nanoword(&["invariants", s(&t), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["bracket"], "-t^5 - t^-3 + t^-7");
    assert_eq!(v["writhe"], 3);
    assert_eq!(v["colorings"]["counts"]["dihedral3"], 9);

    let text = stdout(&nanoword(&["invariants", s(&t)]));
    assert!(text.contains(&format!("bracket: {}", v["bracket"].as_str().unwrap())));
    assert!(text.contains(&format!("jones: {}", v["jones"].as_str().unwrap())));
    assert!(text.contains("dihedral3: 9"));
}

#[test]
fn alpha_0_invariants_go_through_alpha_1() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "trefoil.nw", TREFOIL);
    let out = nanoword(&["project", s(&t), "--to", "alpha_0"]);
    assert_eq!(out.status.code(), Some(0));
    let zero = file(&dir, "zero.nw", &stdout(&out));
    let v = json(&nanoword(&["--json", "invariants", s(&zero)]));
    assert_eq!(v["data"], "alpha_0");
    // a -> 1, b -> -1
    let one = file(&dir, "one.nw", "@preset alpha_1\n@letters A:1 B:-1 C:1\n@phrase ABCABC\n");
    let w = json(&nanoword(&["--json", "invariants", s(&one)]));
    assert_eq!(v["bracket"], w["bracket"]);
    assert_eq!(v["jones"], w["jones"]);
}

#[test]
fn projection_round_trips_through_json() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "trefoil.nw", TREFOIL);
    let text = stdout(&nanoword(&["project", s(&t), "--to", "alpha_1"]));
    assert!(text.contains("@preset alpha_1"));
    let js = nanoword(&["--json", "project", s(&t), "--to", "alpha_1"]);
    let as_json = file(&dir, "one.json", &stdout(&js));
    let as_text = file(&dir, "one.nw", &text);
    let a = json(&nanoword(&["--json", "invariants", s(&as_json)]));
    let b = json(&nanoword(&["--json", "invariants", s(&as_text)]));
    assert_eq!(a, b);
    assert_eq!(a["bracket"], "-t^5 - t^-3 + t^-7");
}

#[test]
fn encode_matches_the_hand_written_trefoil() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "trefoil.gauss", "@gausscode U1+ O2+ U3+ O1+ U2+ O3+\n");
    let out = nanoword(&["encode", s(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let encoded = file(&dir, "encoded.nw", &stdout(&out));
    let t = file(&dir, "trefoil.nw", TREFOIL);
    let res = json(&nanoword(&["--json", "equiv", s(&encoded), s(&t)]));
    assert_eq!(res["result"], "equivalent");
}

#[test]
fn equiv_outcomes() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "trefoil.nw", TREFOIL);
    let u = file(&dir, "unknot.nw", UNKNOT);

    let same = nanoword(&["equiv", s(&t), s(&t)]);
    assert_eq!(same.status.code(), Some(0));
    assert!(stdout(&same).starts_with("equivalent"));

    let differ = nanoword(&["--json", "equiv", s(&t), s(&u)]);
    assert_eq!(differ.status.code(), Some(0));
    let v = json(&differ);
    assert_eq!(v["result"], "inequivalent");
    assert!(!v["distinguished_by"].as_array().unwrap().is_empty());

    let kink = file(&dir, "kink.nw", "@preset alpha_star\n@letters A:a+\n@phrase AA\n");
    let v = json(&nanoword(&["--json", "equiv", s(&kink), s(&u)]));
    assert_eq!(v["result"], "equivalent");
    assert_eq!(v["path"].as_array().unwrap().len(), 1);
}

#[test]
fn reduce_removes_a_kink() {
    let dir = TempDir::new().unwrap();
    let k = file(&dir, "kink.nw", "@preset alpha_star\n@letters A:a+ B:b-\n@phrase ABAB\n");
    let out = nanoword(&["reduce", s(&k)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("letters: 2 -> 0"), "{}", stdout(&out));
}

#[test]
fn kei_colorings() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "trefoil.nw", TREFOIL);
    let out = nanoword(&["--json", "kei", s(&t), "--datum", "link", "--hat", "--color", "dihedral3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["colorings"]["count"], 9);
    assert_eq!(v["generators"], 7);
    assert_eq!(v["relations"], 7);

    let d = datum("link").unwrap();
    let k = fixture("dihedral3", d.quotient_names().to_vec(), d.quotient_tau()).unwrap();
    let kf = file(&dir, "d3.kei", &keifile::write(&k));
    let from_file = json(&nanoword(&["--json", "kei", s(&t), "--datum", "link", "--hat", "--kei-file", s(&kf)]));
    assert_eq!(from_file["colorings"]["count"], 9);

    let text = stdout(&nanoword(&["kei", s(&t), "--datum", "link", "--hat", "--color", "dihedral3"]));
    assert!(text.contains("colorings by dihedral3: 9"));
}

#[test]
fn chord_svg_endpoints_follow_the_word() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "trefoil.nw", TREFOIL);
    let svg_path = dir.path().join("t.svg");
    let out = nanoword(&["chord", s(&t), "--out", s(&svg_path)]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\"") && svg.trim_end().ends_with("</svg>"));
    // every tag opened on a line is closed on it
    for line in svg.lines().filter(|l| l.trim_start().starts_with("<line") || l.trim_start().starts_with("<circle")) {
        assert!(line.trim_end().ends_with("/>"), "{line}");
    }
    assert_eq!(svg.matches("class=\"chord\"").count(), 3);
    assert_eq!(svg.matches("class=\"point\"").count(), 6);
    let word = "ABCABC";
    for letter in ['A', 'B', 'C'] {
        let first = word.find(letter).unwrap() + 1;
        let second = word.rfind(letter).unwrap() + 1;
        let tag = format!("data-letter=\"{letter}\" data-from=\"1:{first}\" data-to=\"1:{second}\"");
        assert!(svg.contains(&tag), "missing {tag}");
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(nanoword(&["bogus"]).status.code(), Some(2));
    assert_eq!(nanoword(&["project", "x.nw", "--to", "alpha_9"]).status.code(), Some(2));

    let bad = file(&dir, "bad.nw", "@preset alpha_star\n@letters A:a+\n@phrase AB\n");
    let out = nanoword(&["validate", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("`B`"));
    let v = json(&nanoword(&["--json", "validate", s(&bad)]));
    assert_eq!(v["valid"], false);
    assert_eq!(v["issues"].as_array().unwrap().len(), 2);

    let missing = dir.path().join("missing.nw");
    let out = nanoword(&["--json", "invariants", s(&missing)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().contains("missing.nw"));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let garbage = file(&dir, "garbage.nw", "@preset nowhere\n@phrase A\n");
    assert_eq!(nanoword(&["invariants", s(&garbage)]).status.code(), Some(1));
}
