//! Parsing, canonical printing and JSON export.

mod json;
mod parse;
mod print;

pub use json::{
    coeff_from_json, coeff_to_json, export_lincomb, export_report, export_tensor2, import_lincomb,
    import_tensor2, lincomb_from_value, lincomb_to_value, report_to_value, tensor2_from_value,
    tensor2_to_value, word_from_json, word_to_json,
};
pub use parse::{
    evaluate, parse, parse_lincomb, parse_with_alphabet, Evaluator, Expr, ExprKind, Operator, Value,
};
pub use print::{print_coeff, print_lincomb, print_tensor2, print_word};

use std::fmt::Write;

use crate::coalgebra::Tensor2;
use crate::hopf::CounterexampleReport;

/// Human-readable rendering of the grading counterexample.
pub fn print_report(r: &CounterexampleReport) -> String {
    let mut out = String::new();
    let verdict = |bad: bool| if bad { "VIOLATED" } else { "ok" };
    let degrees: Vec<String> = r.product_degrees.iter().map(usize::to_string).collect();
    // Writing to a String cannot fail.
    let _ = writeln!(out, "weight: {}", r.mode);
    let _ = writeln!(out, "P(1)*P(1) = {}", print_lincomb(&r.product));
    let _ = writeln!(
        out,
        "  support degrees {{{}}}, graded product requires {{{}}}: {}",
        degrees.join(", "),
        r.product_expected_degree,
        verdict(r.product_violated())
    );
    let _ = writeln!(out, "cop({}) = {}", r.word, print_tensor2(&r.coproduct));
    let _ = writeln!(
        out,
        "  slot degrees must sum to {}: {}",
        r.coproduct_expected_degree,
        verdict(!r.cograding_violations.is_empty())
    );
    for v in &r.cograding_violations {
        let term = Tensor2::term((v.left.clone(), v.right.clone()), v.coeff.clone());
        let _ = writeln!(
            out,
            "    {}  (degree sum {})",
            print_tensor2(&term),
            v.degree_sum
        );
    }
    let _ = write!(
        out,
        "violations: {}",
        if r.is_empty() { "none" } else { "found" }
    );
    out
}
