mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::{corpus, rng, settings};
use serde_json::Value;
use stablemon::cli::{input_json, parse_inputs, Input};
use stablemon::moncat::random::{random_morphism, random_object};
use stablemon::paircat::{functor_f, functor_f_morphism};
use stablemon::singcat::functor_t;
use stablemon::FieldSpec;

fn run(args: &[&str], stdin: &str) -> (Value, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stablemon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or(Value::String(text));
    (value, out.status.code().unwrap())
}

fn round_trip(input: &Input) {
    let text = input_json(input).to_string();
    let back = parse_inputs(&text, FieldSpec::Rationals, None).unwrap();
    assert_eq!(back, vec![input.clone()], "{text}");
}

#[test]
fn envelopes_round_trip() {
    for x in corpus(40, 100, 3) {
        round_trip(&Input::Mon(x.clone()));
        round_trip(&Input::Pair(functor_f(&x)));
        round_trip(&Input::Module(functor_t(&x)));
    }
    let ws = settings();
    let mut r = rng(41);
    for i in 0..30 {
        let w = &ws[i % ws.len()];
        let x = random_object(&mut r, w, 2);
        let y = random_object(&mut r, w, 2);
        let m = random_morphism(&mut r, &x, &y).unwrap();
        round_trip(&Input::PairMorphism(functor_f_morphism(&m)));
        round_trip(&Input::MonMorphism(m));
    }
}

#[test]
fn exit_codes() {
    let (v, code) = run(&["validate"], r#"{"omega":"x^2","f":"[[x, 1],[0, x]]"}"#);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["exponents"], serde_json::json!([0, 2]));

    let (v, code) = run(&["validate"], r#"{"omega":"x","f":"[[x, -1],[0, x]]"}"#);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "invalid-input");

    let (_, code) = run(&["validate"], r#"{"omega":"x","f":"[[x, -1],[0, x]"}"#);
    assert_eq!(code, 2);
    let (_, code) = run(&["validate"], "{");
    assert_eq!(code, 2);
    let (_, code) = run(&["validate", "--seed", "nope"], "");
    assert_eq!(code, 2);
    let (_, code) = run(&["no-such-command"], "");
    assert_eq!(code, 1);
    let (_, code) = run(&["axioms", "--trials", "0"], "");
    assert_eq!(code, 1);
}

#[test]
fn stable_hom_over_each_kind() {
    let mon = r#"[{"omega":"x^4","f":"[[x^2]]"},{"omega":"x^4","f":"[[x^2]]"}]"#;
    let (v, code) = run(&["stable-hom"], mon);
    assert_eq!((v["payload"]["dimension"].as_u64(), code), (Some(2), 0));
    let pair = r#"[{"omega":"x^4","rho1":"[[x]]","rho0":"[[x^3]]"},{"omega":"x^4","rho1":"[[x^2]]","rho0":"[[x^2]]"}]"#;
    let (v, _) = run(&["stable-hom"], pair);
    assert_eq!(v["payload"]["dimension"].as_u64(), Some(1));
    let module = r#"[{"n":4,"exponents":[2]},{"n":4,"exponents":[2,3]}]"#;
    let (v, _) = run(&["stable-hom"], module);
    assert_eq!(v["payload"]["dimension"].as_u64(), Some(3));
}

#[test]
fn omega_flag_and_fields() {
    let (v, code) = run(&["sigma", "--omega", "x^3", "--field", "fp:7"], r#"{"f":"[[x, 1],[0, x^2]]"}"#);
    assert_eq!(code, 0);
    assert_eq!(v["payload"], "[[x^2, 6],[0, x]]");
    let (v, _) = run(&["density-preimage"], r#"{"n":3,"exponents":[1,3]}"#);
    assert_eq!(v["payload"]["omega"], "x^3");
    assert_eq!(v["payload"]["f"], "[[x, 0],[0, x^3]]");
}

#[test]
fn null_homotopy_with_witness() {
    let m = r#"{"omega":"x^2","source":"[[x]]","target":"[[x]]","psi1":"[[x]]","psi0":"[[x]]"}"#;
    let (v, code) = run(&["is-nullhomotopic"], m);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["nullHomotopic"], true);
    let id = r#"{"omega":"x^2","source":"[[x]]","target":"[[x]]","psi1":"[[1]]","psi0":"[[1]]"}"#;
    let (v, _) = run(&["is-nullhomotopic"], id);
    assert_eq!(v["payload"]["nullHomotopic"], false);
}

#[test]
fn demo_is_a_table() {
    let (v, code) = run(&["demo", "--n", "4"], "");
    assert_eq!(code, 0);
    let text = v.as_str().unwrap();
    assert!(text.contains("matrix: [[1,1,1],[1,2,1],[1,1,1]]"), "{text}");
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["check-t", "--seed", "5", "--trials", "5", "--omega", "x^3"];
    assert_eq!(run(&args, ""), run(&args, ""));
    let args = ["axioms", "--seed", "5", "--trials", "5", "--field", "fp:7"];
    assert_eq!(run(&args, ""), run(&args, ""));
}

#[test]
fn axiom_run_from_the_command_line() {
    let (v, code) = run(&["axioms", "--trials", "500", "--seed", "7"], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["violations"], serde_json::json!([]));
    assert_eq!(v["payload"]["trials"], 500);
}
