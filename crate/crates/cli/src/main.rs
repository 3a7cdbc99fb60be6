//! `rba`: evaluate, expand coproducts, compute antipodes, enumerate the word
//! basis and run law suites for the free Rota-Baxter algebra.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value as Json};

use rota_baxter::hopf::counterexample_weight_nonzero;
use rota_baxter::suites::{self, Law, SuiteReport};
use rota_baxter::textio::{self, Evaluator, Expr, Operator, Value};
use rota_baxter::words::words_by_degree;
use rota_baxter::{Error, Letter, LinComb, WeightMode};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "rba", version, about = "Free Rota-Baxter algebra calculator")]
struct Cli {
    /// Comma-separated letters, e.g. `x,y`. Required by `check` and `enum`;
    /// when given to other commands, undeclared letters are rejected.
    #[arg(long, global = true, value_delimiter = ',')]
    alphabet: Option<Vec<String>>,

    /// Weight: `symbolic` or a rational such as `0`, `-1`, `1/2`.
    #[arg(long, global = true, default_value = "symbolic", allow_hyphen_values = true, value_parser = parse_weight)]
    weight: WeightMode,

    /// Largest total degree enumerated by `check` and `enum`.
    #[arg(long = "max-degree", global = true, default_value_t = 3)]
    max_degree: usize,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the coproduct of an expression.
    Cop {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the antipode of an expression (weight 0 only).
    #[command(name = "S", alias = "antipode")]
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run an exhaustive law suite.
    Check {
        #[arg(long, value_parser = parse_law)]
        law: Law,
    },
    /// List basis words up to --max-degree.
    #[command(name = "enum")]
    Enumerate {
        /// Print the number of words per degree instead of the words.
        #[arg(long)]
        count: bool,
    },
}

fn parse_weight(s: &str) -> Result<WeightMode, String> {
    if s == "symbolic" {
        return Ok(WeightMode::Symbolic);
    }
    s.parse::<BigRational>()
        .map(WeightMode::Numeric)
        .map_err(|_| format!("expected `symbolic` or a rational, got `{s}`"))
}

fn parse_law(s: &str) -> Result<Law, String> {
    s.parse()
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("rba: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

struct Rendered {
    text: String,
    code: u8,
}

fn ok(text: String) -> Result<Rendered, Failure> {
    Ok(Rendered { text, code: 0 })
}

fn alphabet(cli: &Cli) -> Result<Option<BTreeSet<Letter>>, Failure> {
    let Some(names) = &cli.alphabet else {
        return Ok(None);
    };
    let letters = names
        .iter()
        .map(|n| Letter::new(n.trim()))
        .collect::<Result<BTreeSet<_>, _>>()?;
    if letters.is_empty() {
        return Err(Error::EmptyAlphabet.into());
    }
    Ok(Some(letters))
}

fn required_alphabet(cli: &Cli, what: &str) -> Result<BTreeSet<Letter>, Failure> {
    alphabet(cli)?.ok_or_else(|| usage(format!("{what} needs --alphabet")))
}

fn parse_expr(cli: &Cli, text: &str) -> Result<Expr, Failure> {
    let alphabet = alphabet(cli)?;
    Ok(textio::parse_with_alphabet(text, alphabet.as_ref())?)
}

fn element(value: Value) -> Result<LinComb, Failure> {
    value
        .into_element()
        .ok_or_else(|| usage("expected an algebra element, got a tensor"))
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    let json = cli.output == Output::Json;
    match &cli.command {
        Command::Eval { expr } => {
            let parsed = parse_expr(cli, expr)?;
            for (op, keyword, cmd) in [
                (Operator::Coproduct, "cop", "rba cop"),
                (Operator::Antipode, "S", "rba S"),
                (Operator::Counit, "eps", "rba cop"),
            ] {
                if parsed.uses_operator(op) {
                    return Err(usage(format!(
                        "eval does not accept `{keyword}`; use `{cmd}`"
                    )));
                }
            }
            let value = element(Evaluator::new(cli.weight.clone()).eval(&parsed)?)?;
            ok(if json {
                textio::export_lincomb(&value)
            } else {
                textio::print_lincomb(&value)
            })
        }
        Command::Cop { expr } => {
            let parsed = parse_expr(cli, expr)?;
            let eval = Evaluator::new(cli.weight.clone());
            let value = element(eval.eval(&parsed)?)?;
            let t = rota_baxter::coproduct(&value, &cli.weight);
            ok(if json {
                textio::export_tensor2(&t)
            } else {
                textio::print_tensor2(&t)
            })
        }
        Command::Antipode { expr } => {
            if !cli.weight.is_zero_weight() {
                return Err(Error::WeightNotZero(cli.weight.clone()).into());
            }
            let parsed = parse_expr(cli, expr)?;
            let eval = Evaluator::new(cli.weight.clone());
            let value = element(eval.eval(&parsed)?)?;
            let s = rota_baxter::Antipode::new(&cli.weight)?;
            let image = s.apply(&value);
            ok(if json {
                textio::export_lincomb(&image)
            } else {
                textio::print_lincomb(&image)
            })
        }
        Command::Check { law } => check(cli, *law, json),
        Command::Enumerate { count } => {
            let letters = required_alphabet(cli, "enum")?;
            let by_degree = words_by_degree(&letters, cli.max_degree);
            let text = match (count, json) {
                (true, false) => by_degree
                    .iter()
                    .enumerate()
                    .map(|(d, ws)| format!("{d}:{}", ws.len()))
                    .collect::<Vec<_>>()
                    .join(" "),
                (true, true) => {
                    let counts: serde_json::Map<String, Json> = by_degree
                        .iter()
                        .enumerate()
                        .map(|(d, ws)| (d.to_string(), json!(ws.len())))
                        .collect();
                    json!({ "counts": counts }).to_string()
                }
                (false, false) => by_degree
                    .iter()
                    .flatten()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n"),
                (false, true) => {
                    let words: Vec<Json> = by_degree
                        .iter()
                        .flatten()
                        .map(textio::word_to_json)
                        .collect();
                    json!({ "words": words }).to_string()
                }
            };
            ok(text)
        }
    }
}

fn suite_to_json(r: &SuiteReport) -> Json {
    let checks: Vec<Json> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "cases": c.cases,
                "passed": c.passed,
                "first_failure": c.first_failure,
            })
        })
        .collect();
    json!({ "law": r.law.name(), "checks": checks, "all_passed": r.all_passed() })
}

fn check(cli: &Cli, law: Law, json: bool) -> Result<Rendered, Failure> {
    let (report, text) = if law == Law::Counterexample {
        let report = suites::run(law, &BTreeSet::new(), 0, &cli.weight)?;
        let symbolic = counterexample_weight_nonzero(&WeightMode::Symbolic);
        let zero = counterexample_weight_nonzero(&WeightMode::zero());
        let text = if json {
            let mut value = suite_to_json(&report);
            value["reports"] = json!([
                textio::report_to_value(&symbolic),
                textio::report_to_value(&zero)
            ]);
            value.to_string()
        } else {
            format!(
                "{}\n\n{}\n\n{report}",
                textio::print_report(&symbolic),
                textio::print_report(&zero)
            )
        };
        (report, text)
    } else {
        let letters = required_alphabet(cli, "check")?;
        let report = suites::run(law, &letters, cli.max_degree, &cli.weight)?;
        let text = if json {
            suite_to_json(&report).to_string()
        } else {
            report.to_string()
        };
        (report, text)
    };
    Ok(Rendered {
        text,
        code: if report.all_passed() {
            0
        } else {
            EXIT_CHECK_FAILED
        },
    })
}
