use std::path::PathBuf;
use std::process::{Command, Output};

use ksbim::bimodule::{BimoduleMorphism, MorphismJson};
use ksbim::homspace::HomRankJson;
use ksbim::laurent::{LaurentJson, LaurentPoly};
use ksbim::root_datum::RootDatum;
use serde_json::Value;

fn ksbim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ksbim"))
        .args(args)
        .env_remove("KSBIM_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = ksbim(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).expect("exactly one JSON document")
}

#[test]
fn documented_examples() {
    let v = json(&["rootdatum", "info", "--type", "A2", "--output", "json"]);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["positive_roots"], 3);
    assert_eq!(v["weyl_order"], 6);
    assert_eq!(stdout(&ksbim(&["hom", "predict", "--type", "A2", "--seq-x", "1,2", "--seq-y", "2,1"])), "predicted 3\n");
    assert_eq!(stdout(&ksbim(&["demazure", "--type", "A1", "--word", "1", "--monomial", "1"])), "x + x^-1\n");
    let o = ksbim(&["character", "--type", "A1", "--highest-weight", "2", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn every_subcommand_emits_one_json_document() {
    let cases: &[&[&str]] = &[
        &["rootdatum", "info", "--type", "B2"],
        &["demazure", "--type", "A2", "--word", "1,2", "--monomial", "1,-2"],
        &["demazure", "--type", "A2", "--word", "", "--poly", "x1 - x2^-1"],
        &["character", "--type", "B2", "--highest-weight", "1,1"],
        &["induction", "--type", "A1", "--poly", "x^3", "--method", "weyl"],
        &["steinberg", "--type", "B2"],
        &["bs", "basis", "--type", "A2", "--seq", "1,2,1"],
        &["bs", "rightmul", "--type", "A2", "--seq", "1,2", "--poly", "x1"],
        &["bs", "generators", "--type", "B2", "--s", "2"],
        &["hom", "predict", "--type", "A1", "--seq-x", "1,1", "--seq-y", "1"],
        &["hom", "verify", "--type", "A1", "--seq-x", "1,1", "--seq-y", "1", "--trials", "2"],
        &["hom", "twisted", "--type", "B2", "--w", "e"],
    ];
    for args in cases {
        let mut a = args.to_vec();
        a.extend(["--output", "json"]);
        let v = json(&a);
        assert!(v.is_object(), "{args:?}");
    }
}

#[test]
fn json_outputs_round_trip() {
    let d = RootDatum::from_type("A2").unwrap();
    let v = json(&["bs", "generators", "--type", "A2", "--s", "2", "--output", "json"]);
    for gen in ["unit", "counit", "mult", "comult"] {
        let m: MorphismJson = serde_json::from_value(v[gen].clone()).unwrap();
        let f = BimoduleMorphism::from_json(&d, &m).unwrap();
        assert_eq!(f.to_json(), m);
        assert!(ksbim::bimodule::is_bimodule_map(&d, &f).unwrap());
    }
    let v = json(&["demazure", "--type", "A2", "--word", "2", "--monomial", "0,3", "--output", "json"]);
    let p: LaurentJson = serde_json::from_value(v["result"].clone()).unwrap();
    let p = LaurentPoly::from_json(&p, 2).unwrap();
    assert_eq!(p.len(), 4);
    let v = json(&["hom", "verify", "--type", "A2", "--seq-x", "1", "--seq-y", "2", "--output", "json"]);
    let r: HomRankJson = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&r).unwrap(), v);
    assert_eq!(r.predicted, 1);
    assert!(r.agreed);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["hom", "verify", "--type", "A2", "--seq-x", "1,2", "--seq-y", "2,1", "--seed", "42", "--output", "json"];
    assert_eq!(ksbim(&args).stdout, ksbim(&args).stdout);
}

#[test]
fn seed_from_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_ksbim"));
        c.args(["hom", "verify", "--type", "A1", "--seq-x", "1", "--seq-y", "1", "--trials", "1", "--output", "json"]);
        c.args(extra);
        c.env_remove("KSBIM_SEED");
        if let Some(s) = env {
            c.env("KSBIM_SEED", s);
        }
        let v: Value = serde_json::from_slice(&c.output().unwrap().stdout).unwrap();
        v["trials"][0]["seed"].as_u64().unwrap()
    };
    assert_eq!(run(None, &[]), 0);
    assert_eq!(run(Some("17"), &[]), 17);
    assert_eq!(run(Some("17"), &["--seed", "5"]), 5);
}

#[test]
fn cartan_file_input() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bare = dir.join("g2_bare.json");
    std::fs::write(&bare, "[[2,-1],[-3,2]]").unwrap();
    let wrapped = dir.join("a1a1.json");
    std::fs::write(&wrapped, r#"{"cartan": [[2,0],[0,2]]}"#).unwrap();
    let v = json(&["rootdatum", "info", "--cartan", bare.to_str().unwrap(), "--output", "json"]);
    assert_eq!(v["weyl_order"], 12);
    let v = json(&["rootdatum", "info", "--cartan", wrapped.to_str().unwrap(), "--output", "json"]);
    assert_eq!(v["weyl_order"], 4);

    let affine = dir.join("affine.json");
    std::fs::write(&affine, "[[2,-2],[-2,2]]").unwrap();
    let o = ksbim(&["rootdatum", "info", "--cartan", affine.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("root_datum::NotFiniteType"));

    let garbage = dir.join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    let o = ksbim(&["rootdatum", "info", "--cartan", garbage.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cli::CartanFile"));
}

#[test]
fn domain_errors_exit_one_with_codes() {
    let cases: &[(&[&str], &str)] = &[
        (&["character", "--type", "A2", "--highest-weight", "1,-1"], "demazure::NotDominant"),
        (&["demazure", "--type", "A2", "--word", "3", "--monomial", "1,0"], "root_datum::IndexOutOfRange"),
        (&["demazure", "--type", "A2", "--word", "1", "--monomial", "1"], "root_datum::RankMismatch"),
        (&["rootdatum", "info", "--type", "Z9"], "root_datum::UnknownType"),
        (&["induction", "--type", "A1", "--poly", "x^^2"], "laurent::Parse"),
        (&["hom", "verify", "--type", "A1", "--seq-x", "1,1,1,1", "--seq-y", "1,1,1"], "homspace::BudgetExceeded"),
        (&["hom", "verify", "--type", "A1", "--seq-x", "1", "--seq-y", "1", "--budget", "1"], "homspace::BudgetExceeded"),
        (&["bs", "generators", "--type", "A1", "--s", "2"], "root_datum::IndexOutOfRange"),
    ];
    for (args, code) in cases {
        let o = ksbim(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).contains(code), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate", "--type", "A1"][..],
        &["rootdatum", "info", "--type", "A1", "--bogus"],
        &["rootdatum", "info"],
        &["demazure", "--type", "A1", "--word", "x", "--monomial", "1"],
        &["hom", "predict", "--type", "A1", "--seq-x", "1"],
        &["rootdatum", "info", "--type", "A1", "--output", "yaml"],
        &["bs", "basis", "--type", "A1", "--seq", "0,1"],
        &["bs", "generators", "--type", "A1", "--s", "0"],
    ] {
        assert_eq!(ksbim(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(ksbim(&["--help"]).status.code(), Some(0));
}
