use std::process::Command;

use descent_cli::{run, CommandResult};
use serde_json::Value;

fn call(args: &str) -> (CommandResult, Value) {
    let result = run(args.split_whitespace());
    let value = if result.stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&result.stdout).expect("valid JSON")
    };
    (result, value)
}

fn assert_envelope(v: &Value, command: &str, ty: &str) {
    assert_eq!(v["command"], command);
    assert_eq!(v["type"], ty);
    assert_eq!(v["schema_version"], 1);
}

fn rows(v: &Value) -> Vec<Vec<i64>> {
    serde_json::from_value(v["rows"].clone()).unwrap()
}

#[test]
fn verify_g2_shows_the_same_lattice_three_ways() {
    let (r, v) = call("verify --type G2");
    assert_eq!(r.exit_code, 0);
    assert_envelope(&v, "verify", "G2");
    assert_eq!(v["agree"], true);
    for m in ["recursive", "direct", "closed_form"] {
        assert_eq!(
            rows(&v["lattices"][m]["lattice"]),
            vec![vec![6, 0], vec![0, 2]]
        );
        assert_eq!(v["lattices"][m]["index_in_root_lattice"], 12);
    }
}

#[test]
fn omega_one_of_a2_does_not_descend() {
    let (r, v) = call("descends --type A2 --lambda 1,0");
    assert_eq!(r.exit_code, 1);
    assert_envelope(&v, "descends", "A2");
    assert_eq!(v["member"], false);
    assert_eq!(v["in_root_lattice"], false);
    assert_eq!(v["lambda_alpha"], Value::Null);
}

#[test]
fn descent_with_parabolic_and_alpha_input() {
    // 2 omega_1 of C2 with P the maximal parabolic at node 2.
    let (r, v) = call("descends --type C2 --lambda 2,0 --parabolic 2");
    assert_eq!(r.exit_code, 0, "{}", r.stdout);
    assert_eq!(v["ample"], true);
    assert_eq!(v["descends"], true);
    assert_eq!(v["parabolic"], serde_json::json!([2]));

    // 6 alpha_1 + 2 alpha_2 of G2 lies in L(G2) but is not dominant.
    let (r, v) = call("descends --type G2 --lambda 6,2 --alpha");
    assert_eq!(r.exit_code, 1);
    assert_eq!(v["member"], true);
    assert_eq!(v["lambda_omega"], serde_json::json!([6, -2]));
    // 2 theta = 6 alpha_1 + 4 alpha_2 is 2 omega_2.
    let (r, v) = call("descends --type G2 --lambda 0,2 --parabolic 1");
    assert_eq!(r.exit_code, 0);
    assert_eq!(v["lambda_alpha"], serde_json::json!([6, 4]));
}

#[test]
fn e8_lattice_is_sixty_times_the_identity() {
    let (r, v) = call("lattice --type E8");
    assert_eq!(r.exit_code, 0);
    assert_envelope(&v, "lattice", "E8");
    let expected: Vec<Vec<i64>> = (0..8)
        .map(|i| (0..8).map(|j| if i == j { 60 } else { 0 }).collect())
        .collect();
    assert_eq!(rows(&v["lattice"]), expected);
    assert_eq!(v["index_in_root_lattice"], 167_961_600_000_000i64);
    let (_, v) = call("lattice --type E8 --method closed");
    assert_eq!(v["method"], "closed_form");
    assert_eq!(rows(&v["lattice"]), expected);
}

#[test]
fn verify_all_agrees() {
    let (r, v) = call("verify --all");
    assert_eq!(r.exit_code, 0);
    assert_envelope(&v, "verify", "all");
    assert_eq!(v["types_checked"], 31);
    assert!(v["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["agree"] == true));
}

#[test]
fn subsystems_lists() {
    let (r, v) = call("subsystems --type E8 --maximal");
    assert_eq!(r.exit_code, 0);
    assert_envelope(&v, "subsystems", "E8");
    assert_eq!(v["count"], 5);
    let mut types: Vec<String> = v["subsystems"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            let t: Vec<String> = serde_json::from_value(s["types"].clone()).unwrap();
            t.join("+")
        })
        .collect();
    types.sort();
    assert_eq!(types, ["A1+E7", "A2+E6", "A4+A4", "A8", "D8"]);

    let (_, v) = call("subsystems --type G2");
    assert_eq!(v["count"], 3);
    assert_eq!(v["maximal"], false);
}

#[test]
fn torsion_examples() {
    let r = run(["torsion", "--type", "G2", "--sub", "3,0;0,1"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(r.exit_code, 0);
    assert_envelope(&v, "torsion", "G2");
    assert_eq!(v["torsion"]["invariant_factors"], serde_json::json!([3]));
    assert_eq!(v["index"], 3);

    // Lambda/Q for D4 is Z/2 x Z/2.
    let r = run([
        "torsion",
        "--type",
        "D4",
        "--sub",
        "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1",
    ]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["torsion"]["invariant_factors"], serde_json::json!([2, 2]));

    // A rank-one sublattice leaves a free part.
    let r = run([
        "torsion",
        "--type",
        "A2",
        "--sub",
        "2,0",
        "--ambient",
        "root",
    ]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["free_rank"], 1);
    assert_eq!(v["index"], "infinite");
    assert_eq!(v["torsion"]["invariant_factors"], serde_json::json!([2]));
}

#[test]
fn multiplicities() {
    let (r, v) = call("multiplicity --type A2 --lambda 1,1 --mu 0,0");
    assert_eq!(r.exit_code, 0);
    assert_envelope(&v, "multiplicity", "A2");
    assert_eq!(v["multiplicity"], 2);
    assert_eq!(v["dimension"], 8);
    let (_, v) = call("multiplicity --type F4 --lambda 1,0,0,0 --mu 0,0,0,0");
    assert_eq!(v["multiplicity"], 4);
    let r = run(["multiplicity", "--type", "A1", "--lambda", "3", "--mu=-3"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["multiplicity"], 1);
}

#[test]
fn system_rendering() {
    let (r, v) = call("system --type G2");
    assert_eq!(r.exit_code, 0);
    assert_envelope(&v, "system", "G2");
    assert_eq!(v["highest_root"], serde_json::json!([3, 2]));
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        "lattice --type E9",
        "lattice --type Q3",
        "lattice --type A2 --method fast",
        "lattice --type A2 --bogus",
        "descends --type A2 --lambda 1,x",
        "descends --type A2 --lambda 1,0,0",
        "descends --type A2 --lambda 1,1 --parabolic 3",
        "verify",
        "verify --type A2 --all",
        "torsion --type A2 --sub 1,0,0",
        "multiplicity --type A5 --lambda 1,0,0,0,0 --mu 0,0,0,0,0",
        "multiplicity --type A2 --lambda -1,0 --mu 0,0",
        "lattice --type A9",
        "",
        "frobnicate",
    ] {
        let r = run(args.split_whitespace());
        assert_eq!(r.exit_code, 2, "{args}: {r:?}");
        assert!(r.stdout.is_empty(), "{args}");
        assert_eq!(
            r.stderr.trim_end().lines().count(),
            1,
            "{args}: {}",
            r.stderr
        );
        assert!(r.stderr.starts_with("error:"), "{args}: {}", r.stderr);
    }
}

#[test]
fn help_and_version_succeed() {
    let r = run(["--help"]);
    assert_eq!(r.exit_code, 0);
    assert!(r.stdout.contains("descends"));
    let r = run(["--version"]);
    assert_eq!(r.exit_code, 0);
    assert!(r.stdout.starts_with("descent "));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        "verify --type F4",
        "subsystems --type B4",
        "descends --type E6 --lambda 6,0,0,0,0,6",
    ] {
        let a = run(args.split_whitespace());
        let b = run(args.split_whitespace());
        assert_eq!(a, b, "{args}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_descent");
    let out = Command::new(bin)
        .args(["descends", "--type", "A2", "--lambda", "1,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["member"], false);
    let out = Command::new(bin)
        .args(["lattice", "--type", "E9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let out = Command::new(bin)
        .args(["verify", "--type", "G2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
