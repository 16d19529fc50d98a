use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leftsimple::cli::SemigroupFile;
use leftsimple::factory;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leftsimple")).args(args).env_remove("LEFTSIMPLE_MAX_ORDER").output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golden_reports() {
    for (args, golden) in [
        (vec!["check", "l2z2.txt"], "l2z2.check.golden"),
        (vec!["subset", "l2z2.txt", "H"], "l2z2.subset-H.golden"),
        (vec!["enumerate", "klein.json"], "klein.enumerate.golden"),
    ] {
        let file = fixture(args[1]);
        let mut full = vec!["--golden", args[0], path(&file)];
        full.extend(&args[2..]);
        let out = run(&full);
        assert!(out.status.success());
        let expected = std::fs::read_to_string(fixture(golden)).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{golden}");
    }
}

#[test]
fn check_reports_structure() {
    let v = json(&run(&["check", path(&fixture("semilattice.txt"))]));
    assert_eq!(v["results"]["left_simple"], false);
    assert!(v["elapsed_ms"].is_u64());
    let v = json(&run(&["--golden", "check", path(&fixture("klein.json"))]));
    assert_eq!(v["results"]["is_group"], true);
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn subset_reports_witness() {
    let v = json(&run(&["subset", path(&fixture("l2z2.txt")), "A"]));
    let r = &v["results"];
    assert_eq!(r["is_right_unitary"], true);
    assert_eq!(r["is_left_unitary"], false);
    assert_eq!(r["witnesses"]["left_unitary"], serde_json::json!(["a0", "b0"]));
    assert!(r.get("quotient").is_none());

    let v = json(&run(&["subset", path(&fixture("l2z2.txt")), "Full"]));
    assert_eq!(v["results"]["quotient"]["order"], 1);
}

#[test]
fn error_exit_codes() {
    let out = run(&["check", path(&fixture("corrupted.txt"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not associative"));
    assert!(out.stdout.is_empty());

    let out = run(&["check", path(&fixture("malformed.txt"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 4, column 3"));

    let out = run(&["subset", path(&fixture("l2z2.txt")), "Nope"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["check", path(&fixture("missing.txt"))]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["series", path(&fixture("semilattice.txt")), "compose"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not left simple"));

    let out = run(&["series", path(&fixture("l2z2.txt")), "validate", "A"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(run(&["--help"]).status.success());
}

#[test]
fn order_bound_from_environment() {
    let file = fixture("l2z2.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_leftsimple"))
        .args(["enumerate", path(&file)])
        .env("LEFTSIMPLE_MAX_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("exceeds"));
    assert!(run(&["enumerate", path(&file)]).status.success());

    let out = Command::new(env!("CARGO_BIN_EXE_leftsimple"))
        .args(["certify", "--max-order", "8"])
        .env("LEFTSIMPLE_MAX_ORDER", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

fn l2z6_file() -> PathBuf {
    let s = factory::by_name("L2xZ6").unwrap();
    let mut f = SemigroupFile::from_semigroup(&s);
    let pick = |ks: &[usize]| s.set(&ks.iter().flat_map(|&k| [k, 6 + k]).collect::<Vec<_>>());
    f.add_subset("Even", &s, &pick(&[0, 2, 4]));
    f.add_subset("Half", &s, &pick(&[0, 3]));
    f.add_subset("Zero", &s, &pick(&[0]));
    let p = scratch("l2z6.txt");
    std::fs::write(&p, f.to_text()).unwrap();
    p
}

#[test]
fn series_commands() {
    let file = l2z6_file();
    let v = json(&run(&["series", path(&file), "validate", "Even,Zero"]));
    assert_eq!(v["results"]["series"]["factors"], serde_json::json!(["Z2", "Z3"]));

    let v = json(&run(&["series", path(&file), "refine", "Even,Zero", "Half,Zero"]));
    assert_eq!(v["results"]["isomorphic"], true);
    assert_eq!(v["results"]["first_refinement"]["length"], 4);

    let v = json(&run(&["series", path(&file), "compose"]));
    assert_eq!(v["results"]["count"], 2);
    for s in v["results"]["series"].as_array().unwrap() {
        let mut f: Vec<&str> = s["factors"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
        f.sort();
        assert_eq!(f, ["Z2", "Z3"]);
    }

    let v = json(&run(&["series", path(&file), "jordan-holder"]));
    assert_eq!(v["results"]["factors"], serde_json::json!(["Z2", "Z3"]));

    let l3 = scratch("l3.txt");
    std::fs::write(&l3, SemigroupFile::from_semigroup(&factory::left_zero(3).unwrap()).to_text()).unwrap();
    let v = json(&run(&["series", path(&l3), "jordan-holder"]));
    assert_eq!((v["results"]["series_count"].as_u64(), v["results"]["length"].as_u64()), (Some(1), Some(0)));
}

#[test]
fn enumerate_examples() {
    for (name, count) in [("L2", 1), ("Z4", 3), ("L2xZ4", 3)] {
        let p = scratch(&format!("{name}.txt"));
        std::fs::write(&p, SemigroupFile::from_semigroup(&factory::by_name(name).unwrap()).to_text()).unwrap();
        let v = json(&run(&["enumerate", path(&p)]));
        assert_eq!(v["results"]["count"], count, "{name}");
    }
}

#[test]
fn generate_round_trips() {
    let out = scratch("gen-l2z4.txt");
    assert!(run(&["generate", "left-group", "2", "Z4", "-o", path(&out)]).status.success());
    let v = json(&run(&["check", path(&out)]));
    assert_eq!(v["results"]["order"], 8);
    assert_eq!(v["results"]["left_simple"], true);

    let out = scratch("gen-double.json");
    assert!(run(&["generate", "double", "Z2", "--json", "-o", path(&out)]).status.success());
    let v = json(&run(&["check", path(&out)]));
    assert_eq!((v["results"]["order"].as_u64(), v["results"]["is_group"].as_bool()), (Some(4), Some(true)));

    let out = scratch("gen-ru.txt");
    assert!(run(&["generate", "left-group", "2", "S3", "--with-ru", "-o", path(&out)]).status.success());
    let f = SemigroupFile::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(f.subsets.len(), 3);
    let v = json(&run(&["subset", path(&out), "R2"]));
    assert_eq!(v["results"]["quotient"]["structure"], "Z2");

    let bad = run(&["generate", "left-group", "2", "Z99", "-o", path(&scratch("never.txt"))]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn certify_small_corpora() {
    let v = json(&run(&["--golden", "certify", "--max-order", "1"]));
    assert_eq!(v["results"]["summary"]["members"], 1);
    assert_eq!(v["results"]["members"][0]["name"], "L1xZ1");
    assert_eq!(v["results"]["summary"]["passed"], true);

    let a = run(&["--golden", "certify", "--max-order", "6"]);
    let b = run(&["--golden", "certify", "--max-order", "6"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
