use std::process::{Command, Output};

fn rba(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rba"))
        .args(args)
        .output()
        .expect("failed to run rba")
}

fn stdout(args: &[&str]) -> String {
    let out = rba(args);
    assert!(
        out.status.success(),
        "rba {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn exit_code(args: &[&str]) -> i32 {
    rba(args).status.code().unwrap()
}

#[test]
fn eval_product_of_brackets() {
    assert_eq!(
        stdout(&["eval", "P(1)*P(1)", "--weight", "symbolic"]),
        "lambda*P(1) + 2*P(P(1))"
    );
    assert_eq!(stdout(&["eval", "P(1)*P(1)", "--weight", "0"]), "2*P(P(1))");
    assert_eq!(
        stdout(&["eval", "P(1)*P(1)", "--weight", "-1"]),
        "-P(1) + 2*P(P(1))"
    );
}

#[test]
fn eval_concatenation_and_zero() {
    assert_eq!(stdout(&["eval", "x*y"]), "x*y");
    assert_eq!(stdout(&["eval", "x - x"]), "0");
}

#[test]
fn coproduct_of_primitives_and_brackets() {
    assert_eq!(stdout(&["cop", "x"]), "x (x) 1 + 1 (x) x");
    assert_eq!(stdout(&["cop", "P(1)"]), "P(1) (x) 1 + 1 (x) P(1)");
    assert_eq!(stdout(&["cop", "1"]), "1 (x) 1");
}

#[test]
fn coproduct_with_weight_terms() {
    let out = stdout(&["cop", "P(1)*x*P(1)", "--alphabet", "x"]);
    assert!(out.contains("lambda*P(1) (x) x"));
    assert!(out.contains("lambda*x (x) P(1)"));
    let at_zero = stdout(&["cop", "P(1)*x*P(1)", "--weight", "0"]);
    assert!(!at_zero.contains("lambda"));
}

#[test]
fn antipode_at_weight_zero() {
    assert_eq!(stdout(&["S", "x", "--weight", "0"]), "-x");
    assert_eq!(stdout(&["S", "P(1)", "--weight", "0"]), "-P(1)");
    assert_eq!(stdout(&["antipode", "x*y", "--weight", "0"]), "y*x");
}

#[test]
fn antipode_refuses_nonzero_weight() {
    let out = rba(&["S", "x", "--weight", "symbolic"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weight 0"));
    assert_eq!(exit_code(&["S", "x", "--weight", "1"]), 2);
    assert_eq!(
        exit_code(&["check", "--law", "antipode", "--alphabet", "x"]),
        2
    );
}

#[test]
fn enumeration_counts() {
    assert_eq!(
        stdout(&["enum", "--alphabet", "x", "--max-degree", "2", "--count"]),
        "0:1 1:2 2:5"
    );
    assert_eq!(
        stdout(&["enum", "--alphabet", "x", "--max-degree", "5", "--count"]),
        "0:1 1:2 2:5 3:14 4:42 5:132"
    );
    assert_eq!(
        stdout(&["enum", "--alphabet", "x", "--max-degree", "0"]),
        "1"
    );
    assert_eq!(
        stdout(&["enum", "--alphabet", "x", "--max-degree", "1"]),
        "1\nP(1)\nx"
    );
}

#[test]
fn checks_pass_and_report() {
    for law in ["rb", "assoc", "unit", "coassoc", "counit", "bialgebra"] {
        let out = stdout(&[
            "check",
            "--law",
            law,
            "--alphabet",
            "x,y",
            "--max-degree",
            "2",
        ]);
        assert!(out.ends_with("PASS"), "{law}: {out}");
    }
    for law in ["antipode", "grading"] {
        let out = stdout(&[
            "check",
            "--law",
            law,
            "--alphabet",
            "x",
            "--max-degree",
            "3",
            "--weight",
            "0",
        ]);
        assert!(out.ends_with("PASS"), "{law}: {out}");
    }
}

#[test]
fn counterexample_exits_zero_and_names_violations() {
    let out = stdout(&["check", "--law", "counterexample"]);
    assert!(out.contains("lambda*P(1) (x) x"));
    assert!(out.contains("lambda*x (x) P(1)"));
    assert!(out.contains("violations: none"));
    assert!(out.ends_with("PASS"));
}

#[test]
fn json_output() {
    assert_eq!(
        stdout(&["eval", "x", "--output", "json"]),
        r#"{"terms":[{"word":[{"atom":"x"}],"coeff":{"0":[1,1]}}]}"#
    );
    let cop = stdout(&["cop", "x", "--output", "json"]);
    assert!(cop.starts_with(r#"{"terms":[{"left":[{"atom":"x"}],"right":[]"#));
    assert_eq!(
        stdout(&[
            "enum",
            "--alphabet",
            "x",
            "--max-degree",
            "1",
            "--count",
            "--output",
            "json"
        ]),
        r#"{"counts":{"0":1,"1":2}}"#
    );
    let check = stdout(&[
        "check",
        "--law",
        "rb",
        "--alphabet",
        "x",
        "--max-degree",
        "1",
        "--output",
        "json",
    ]);
    assert!(check.ends_with(r#""all_passed":true}"#));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(exit_code(&["eval", "P("]), 2);
    assert_eq!(exit_code(&["eval", "q", "--alphabet", "x"]), 2);
    assert_eq!(exit_code(&["eval", "cop(x)"]), 2);
    assert_eq!(exit_code(&["eval", "x", "--weight", "heavy"]), 2);
    assert_eq!(exit_code(&["check", "--law", "rb"]), 2);
    assert_eq!(
        exit_code(&["check", "--law", "nonsense", "--alphabet", "x"]),
        2
    );
    assert_eq!(exit_code(&["enum"]), 2);
    assert_eq!(exit_code(&["enum", "--alphabet", "P"]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
}

#[test]
fn syntax_error_reports_offset() {
    let out = rba(&["eval", "P("]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 2"));
}

#[test]
fn output_is_deterministic() {
    let args = ["cop", "P(x)*y*P(P(1))", "--alphabet", "x,y"];
    let first = stdout(&args);
    for _ in 0..3 {
        assert_eq!(stdout(&args), first);
    }
}
