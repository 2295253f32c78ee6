use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use superlie::algebra::serial::to_json;
use superlie::families::KTag;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_superdecomp"));
    c.env_remove("SUPERDECOMP_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn construct(dir: &TempDir, family: &str, params: &str, name: &str) -> PathBuf {
    let out = path(dir, name);
    let o = run(&["construct", "--family", family, "--params", params, "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn named(dir: &TempDir, name: &str) -> PathBuf {
    let out = path(dir, &format!("{name}.json"));
    let o = run(&["construct", "--named", name, "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn construct_reports_dimensions() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "su22.json");
    let o = run(&["construct", "--family", "su", "--params", "2,2", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dims"], serde_json::json!([7, 8]));
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    let (g, real) = superlie::algebra::serial::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.d0(), g.d1()), (7, 8));
    assert!(real.is_some());

    let o = run(&["construct", "--family", "c", "--params", "2", "--out", s(&path(&dir, "c2.json"))]);
    assert_eq!(json(&o)["dims"], serde_json::json!([4, 4]));
}

#[test]
fn construct_rejects_bad_parameters() {
    let dir = TempDir::new().unwrap();
    for (f, p) in [("su", "1,2"), ("su", "2"), ("nope", "1")] {
        let o = run(&["construct", "--family", f, "--params", p, "--out", s(&path(&dir, "x.json"))]);
        assert_eq!(o.status.code(), Some(2), "{f} {p}");
        assert!(!o.stderr.is_empty());
    }
    assert!(!path(&dir, "x.json").exists());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["decompose"]).status.code(), Some(2));
    assert_eq!(run(&["check", "killing", "/nonexistent/file.json"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(run(&["check", "jacobi", s(&bad)]).status.code(), Some(2));
}

#[test]
fn checks() {
    let dir = TempDir::new().unwrap();
    let psu = construct(&dir, "psu", "2", "psu22.json");
    let v = json(&run(&["check", "killing", s(&psu)]));
    assert_eq!((v["rank"].as_u64(), v["vanishes"].as_bool()), (Some(0), Some(true)));

    let su21 = construct(&dir, "su", "2,1", "su21.json");
    let v = json(&run(&["check", "killing", s(&su21)]));
    assert_eq!(v["rank"].as_u64(), Some(8));
    assert_eq!(json(&run(&["check", "jacobi", s(&su21)]))["ok"], true);

    let q2 = construct(&dir, "q", "2", "q2.json");
    let v = json(&run(&["check", "center", s(&q2)]));
    assert_eq!((v["center_dim"].as_u64(), v["even_part_center_dim"].as_u64()), (Some(1), Some(1)));

    let u21 = construct(&dir, "u", "2,1", "u21.json");
    let o = run(&["check", "eq-square", s(&u21), "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(
        (v["samples"].as_u64(), v["satisfied"].as_u64(), v["nonvanishing"].as_u64()),
        (Some(200), Some(200), Some(200))
    );
    assert_eq!(v["seed"], 5);

    // no realization to square in
    assert_eq!(run(&["check", "eq-square", s(&psu)]).status.code(), Some(2));
}

#[test]
fn broken_jacobi_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = construct(&dir, "su", "2,1", "su21.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("realization");
    let terms = v["brackets"][0]["terms"].as_array_mut().unwrap();
    terms[0]["num"] = Value::String("7".into());
    std::fs::write(&f, v.to_string()).unwrap();
    let o = run(&["check", "jacobi", s(&f)]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(json(&o)["ok"], false);
}

#[test]
fn decompose_reports() {
    let dir = TempDir::new().unwrap();
    let glued = named(&dir, "glued-su22-q2");
    let report = path(&dir, "r.json");
    let o = run(&["decompose", s(&glued), "--report", s(&report), "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["kernel_dim"], 1);
    assert_eq!(v["seed"], 4);

    let hat = named(&dir, "hatTsu2");
    let v = json(&run(&["decompose", s(&hat)]));
    let kinds: Vec<&str> = v["summands"].as_array().unwrap().iter().map(|s| s["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["Ja"]);
}

#[test]
fn decompose_rejects_even_only() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "even-only.json");
    std::fs::write(&f, to_json(&KTag::Su(3).build().unwrap(), None)).unwrap();
    let o = run(&["decompose", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd-generation precondition"));
    assert!(o.stdout.is_empty());
}

#[test]
fn unitarity_of_pq2() {
    let dir = TempDir::new().unwrap();
    let f = construct(&dir, "pq", "2", "pq2.json");
    let v = json(&run(&["unitarity", s(&f)]));
    let item = v["items"].as_array().unwrap().iter().find(|i| i["item"] == "v").unwrap().clone();
    assert_eq!(item["condition"], "even_center");
    assert_eq!(item["verdict"], "fail");
    assert_eq!(v["overall"], "obstruction found");
}

#[test]
fn spinrep_check() {
    let o = run(&["spinrep", "--dim", "3", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["car"]["ok"], true);
    let spectrum: Vec<(String, u64)> = v["number_spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["eigenvalue"].as_str().unwrap().to_string(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(spectrum, [("0".into(), 1), ("1".into(), 3), ("2".into(), 3), ("3".into(), 1)]);
    assert_eq!(v["representation"]["faithful"], true);
    assert_eq!(v["representation"]["unitary"], true);

    let v = json(&run(&["spinrep", "--dim", "1"]));
    assert_eq!(v["space"]["dim"], 2);
}

#[test]
fn tangent_rep_check() {
    let o = run(&["tangent-rep", "--k", "su2", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["representation"]["faithful"], true);
    assert_eq!(v["representation"]["unitary"], true);
    assert_eq!(v["representation"]["homomorphism"], true);
}

#[test]
fn seed_from_environment_and_determinism() {
    let dir = TempDir::new().unwrap();
    let f = named(&dir, "glued-su22-q2");
    let a = bin().args(["decompose", s(&f)]).env("SUPERDECOMP_SEED", "11").output().unwrap();
    let b = bin().args(["decompose", s(&f)]).env("SUPERDECOMP_SEED", "11").output().unwrap();
    assert_eq!(json(&a)["seed"], 11);
    assert_eq!(a.stdout, b.stdout);
    let c = bin().args(["decompose", s(&f), "--seed", "2"]).env("SUPERDECOMP_SEED", "11").output().unwrap();
    assert_eq!(json(&c)["seed"], 2);
}
