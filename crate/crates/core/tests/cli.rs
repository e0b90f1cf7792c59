use clap::Parser;

use catalan_cf::cli::{run, Cli, Exit};

fn invoke(args: &[&str]) -> (Exit, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("catalan-cf").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let exit = run(&cli, &mut out, &mut err).unwrap();
    (exit, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (exit, out, err) = invoke(args);
    assert_eq!(exit, Exit::Success, "{err}");
    out
}

#[test]
fn series_eq1_ends_with_cubic_group() {
    let out = stdout(&["series", "--weights", "eq1", "--order", "3"]);
    assert_eq!(out, "1 + z + 2*z^2 + z^3*(4 + q)\n");
}

#[test]
fn series_presets() {
    assert_eq!(
        stdout(&["series", "--weights", "eq2", "--order", "2"]),
        "1 + z*q + z^2*(q^2 + q^3)\n"
    );
    assert_eq!(
        stdout(&["series", "--weights", "multivariate", "--order", "2"]),
        "1 + v1 + v1*v2 + v1^2\n"
    );
    assert_eq!(
        stdout(&["series", "--weights", "k=2", "--order", "2", "--depth", "5"]),
        "1 + z + z^2*(1 + q)\n"
    );
}

#[test]
fn series_json_records() {
    let out = stdout(&["series", "--weights", "multivariate", "--order", "1", "--json"]);
    assert_eq!(
        out.trim(),
        r#"[{"z":0,"q":0,"v":[],"coeff":"1"},{"z":1,"q":0,"v":[1],"coeff":"1"}]"#
    );
}

#[test]
fn map_between_encodings() {
    assert_eq!(stdout(&["map", "--from", "tree", "--to", "perm", "((()))"]), "1 2 3\n");
    assert_eq!(stdout(&["map", "--from", "perm", "--to", "tree", "3,2,1"]), "()()()\n");
    assert_eq!(stdout(&["map", "--from", "path", "--to", "tree", "RURRUU"]), "()(())\n");
    assert_eq!(stdout(&["map", "--from", "tree", "--to", "path", "(()())"]), "EENENN\n");
    assert_eq!(stdout(&["map", "--from", "tree", "--to", "tree", ""]), "\n");
    let json = stdout(&["map", "--from", "perm", "--to", "path", "231", "--json"]);
    assert_eq!(json.trim(), r#"{"from":"perm","input":"231","output":"EENNEN","to":"path"}"#);
}

#[test]
fn map_rejects_bad_input_as_usage_error() {
    let (exit, out, err) = invoke(&["map", "--from", "perm", "--to", "tree", "132"]);
    assert_eq!(exit, Exit::Usage);
    assert!(out.is_empty());
    assert!(err.contains("132 pattern at positions (1, 2, 3)"), "{err}");
    let (exit, _, err) = invoke(&["map", "--from", "tree", "--to", "perm", "(()"]);
    assert_eq!(exit, Exit::Usage);
    assert!(err.contains("position 3"), "{err}");
    let (exit, _, _) = invoke(&["map", "--from", "path", "--to", "tree", "NE"]);
    assert_eq!(exit.code(), 2);
}

#[test]
fn count_reports_pattern_and_132_status() {
    assert_eq!(
        stdout(&["count", "--perm", "123", "--k", "3"]),
        "increasing patterns of length 3: 1\n132: avoided\n"
    );
    assert_eq!(
        stdout(&["count", "--perm", "1 3 2", "--k", "2"]),
        "increasing patterns of length 2: 2\n132: contained at positions (1, 2, 3)\n"
    );
    let json = stdout(&["count", "--perm", "2,1,3", "--k", "2", "--json"]);
    assert_eq!(
        json.trim(),
        r#"{"avoids_132":true,"count":"2","k":2,"perm":"2 1 3","witness":null}"#
    );
}

#[test]
fn enumerate_lists_trees() {
    assert_eq!(stdout(&["enumerate", "--edges", "3"]), "()()()\n()(())\n(())()\n(()())\n((()))\n");
    let stats = stdout(&["enumerate", "--edges", "3", "--stats"]);
    let last = stats.lines().last().unwrap();
    assert_eq!(last, "((()))\tprofile=(1,1,1)\tlevel_sum=6\tarea=0\tperm=1 2 3");
    let json = stdout(&["enumerate", "--edges", "2", "--json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 2);
    assert_eq!(parsed[1]["tree"], "(())");
}

#[test]
fn verify_theorem5_passes() {
    let out = stdout(&["verify", "--check", "theorem5", "--max-edges", "6", "--k", "3"]);
    assert!(out.ends_with("theorem5: ok through n=6\n"), "{out}");
    let json = stdout(&["verify", "--check", "lemma2", "--max-edges", "3", "--json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["status"], "ok");
    assert_eq!(parsed["report"]["sizes"][3]["checked"], 5);
}

#[test]
fn every_check_runs_independently() {
    for check in ["theorem1", "lemma2", "theorem3", "lemma3", "lemma4", "theorem5", "corollary6", "bijections"] {
        let (exit, _, err) = invoke(&["verify", "--check", check, "--max-edges", "4"]);
        assert_eq!(exit, Exit::Success, "{check}: {err}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["series", "--weights", "k=4", "--order", "7"][..],
        &["enumerate", "--edges", "5", "--stats", "--json"][..],
        &["verify", "--check", "corollary6", "--max-edges", "5"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn usage_errors_are_rejected_by_the_parser() {
    for args in [
        &["catalan-cf", "series", "--weights", "k=0", "--order", "3"][..],
        &["catalan-cf", "series", "--weights", "eq1", "--order", "3", "--depth", "0"][..],
        &["catalan-cf", "count", "--perm", "12", "--k", "0"][..],
        &["catalan-cf", "verify", "--check", "theorem9", "--max-edges", "3"][..],
    ] {
        let e = Cli::try_parse_from(args).unwrap_err();
        assert_eq!(e.exit_code(), 2, "{args:?}");
    }
}
