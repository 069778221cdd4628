use std::process::Command;

use homlie_cli::{parse_laurent, parse_rational, parse_scalar};
use homlie_core::{LaurentPoly, ParamPoly, Scalar};
use num_rational::BigRational;
use proptest::prelude::*;

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(((-4i64..=4), (1i64..=3), (0i64..=2), (0i64..=2)), 1..4).prop_map(|terms| {
        ParamPoly::from_terms(terms.into_iter().map(|(n, d, i, j)| ((i, j), BigRational::new(n.into(), d.into()))))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (param_poly(), param_poly(), (-2i64..=2), (-2i64..=2)).prop_filter_map("nonzero denominator", |(n, d, i, j)| {
        Scalar::from_parts(n, d).ok().map(|s| s * Scalar::monomial(1, i, j))
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-4i64..=4), scalar()), 0..4).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_round_trip(s in scalar()) {
        prop_assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn laurent_polys_round_trip(f in laurent()) {
        prop_assert_eq!(parse_laurent(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn printing_is_canonical(f in laurent()) {
        let printed = f.to_string();
        prop_assert_eq!(parse_laurent(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn rationals_round_trip(n in -50i64..=50, d in 1i64..=20) {
        let r = BigRational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&Scalar::from_rational(r.clone()).to_string()).unwrap(), r);
    }
}

fn homlie(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_homlie")).args(args).env_remove("HOMLIE_WINDOW").output().unwrap()
}

#[test]
fn verify_json_is_deterministic() {
    let first = homlie(&["verify", "all", "--window", "2", "--json", "-"]);
    let second = homlie(&["verify", "all", "--window", "2", "--json", "-"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text[text.find('{').unwrap()..]).unwrap();
    assert_eq!(json["suite"], "all");
    assert_eq!(json["window"], 2);
    assert!(json["entries"].as_array().unwrap().iter().all(|e| e["status"] != "fail"));
}

#[test]
fn exit_codes() {
    assert_eq!(homlie(&["verify", "witt", "--window", "0"]).status.code(), Some(0));
    let failing = homlie(&["verify", "witt", "--window", "1", "--perturb", "witt:d_1,d_0:d_1:1"]);
    assert_eq!(failing.status.code(), Some(1));
    let usage = homlie(&["bracket", "--tau", "p*t", "--sigma", "q*t", "-a", "t^", "-b", "t"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8(usage.stderr).unwrap().contains("position"));
}

#[test]
fn window_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_homlie"))
        .args(["table", "witt", "--specialize", "1", "1"])
        .env("HOMLIE_WINDOW", "1")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[d_-1, d_1] = (-2)*d_0"), "{text}");
    assert!(!text.contains("d_2"));
}

#[test]
fn bracket_command() {
    let out = homlie(&["bracket", "--tau", "p*t", "--sigma", "q*t", "-a", "-t^2", "-b", "-t", "--basis", "d"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(p^-2*q)*d_3"), "{text}");
    let zero = homlie(&["bracket", "--tau", "p*t", "--sigma", "q*t", "-a", "t", "-b", "t"]);
    assert_eq!(String::from_utf8(zero.stdout).unwrap().trim(), "0");
}
