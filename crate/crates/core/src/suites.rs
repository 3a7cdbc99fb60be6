//! Exhaustive law suites over enumerated basis words.
//!
//! Every law is (multi)linear, so checking it on all basis words (pairs,
//! triples) up to a degree bound checks it on the whole span. Bounds on pairs
//! and triples apply to the sum of the degrees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{check_rota_baxter, diamond, diamond_basis, LinComb};
use crate::coalgebra::{check_bialgebra_compat, check_coassociativity, check_counit_laws};
use crate::coeffs::WeightMode;
use crate::error::{Error, Result};
use crate::hopf::{
    antihomomorphism_holds, antipode_identities_hold, check_graded_coproduct, check_graded_product,
    counterexample_weight_nonzero, Antipode,
};
use crate::words::{words_by_degree, Letter, Rbw};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    RotaBaxter,
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Bialgebra,
    Antipode,
    Grading,
    Counterexample,
}

impl Law {
    pub const ALL: [Law; 9] = [
        Law::RotaBaxter,
        Law::Associativity,
        Law::Unit,
        Law::Coassociativity,
        Law::Counit,
        Law::Bialgebra,
        Law::Antipode,
        Law::Grading,
        Law::Counterexample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::RotaBaxter => "rb",
            Law::Associativity => "assoc",
            Law::Unit => "unit",
            Law::Coassociativity => "coassoc",
            Law::Counit => "counit",
            Law::Bialgebra => "bialgebra",
            Law::Antipode => "antipode",
            Law::Grading => "grading",
            Law::Counterexample => "counterexample",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

/// Pass count for one identity over a family of cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn all_passed(&self) -> bool {
        self.passed == self.cases
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} passed", self.name, self.passed, self.cases)?;
        if let Some(first) = &self.first_failure {
            write!(f, "; first failure: {first}")?;
        }
        Ok(())
    }
}

fn tally<T, I, F, D>(name: &str, cases: I, mut check: F, describe: D) -> CheckOutcome
where
    I: IntoIterator<Item = T>,
    F: FnMut(&T) -> bool,
    D: Fn(&T) -> String,
{
    let mut outcome = CheckOutcome {
        name: name.to_owned(),
        cases: 0,
        passed: 0,
        first_failure: None,
    };
    for case in cases {
        outcome.cases += 1;
        if check(&case) {
            outcome.passed += 1;
        } else if outcome.first_failure.is_none() {
            outcome.first_failure = Some(describe(&case));
        }
    }
    outcome
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub law: Law,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::all_passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "law {}:", self.law)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        write!(f, "{}", if self.all_passed() { "PASS" } else { "FAIL" })
    }
}

/// Basis words grouped by degree, with pair and triple enumeration.
#[derive(Clone, Debug)]
pub struct Basis {
    by_degree: Vec<Vec<Rbw>>,
}

impl Basis {
    pub fn new(alphabet: &BTreeSet<Letter>, max_degree: usize) -> Self {
        Self {
            by_degree: words_by_degree(alphabet, max_degree),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn of_degree(&self, n: usize) -> &[Rbw] {
        self.by_degree.get(n).map_or(&[], Vec::as_slice)
    }

    /// Words of degree at most `max`.
    pub fn words(&self, max: usize) -> impl Iterator<Item = &Rbw> + '_ {
        self.by_degree.iter().take(max + 1).flatten()
    }

    /// Pairs with `deg(u) + deg(v) <= max`.
    pub fn pairs(&self, max: usize) -> Vec<(Rbw, Rbw)> {
        let mut out = Vec::new();
        for u in self.words(max) {
            for v in self.words(max - u.total_degree()) {
                out.push((u.clone(), v.clone()));
            }
        }
        out
    }

    /// Triples with `deg(u) + deg(v) + deg(w) <= max`.
    pub fn triples(&self, max: usize) -> Vec<(Rbw, Rbw, Rbw)> {
        let mut out = Vec::new();
        for (u, v) in self.pairs(max) {
            for w in self.words(max - u.total_degree() - v.total_degree()) {
                out.push((u.clone(), v.clone(), w.clone()));
            }
        }
        out
    }
}

fn pair_text(p: &(Rbw, Rbw)) -> String {
    format!("u = {}, v = {}", p.0, p.1)
}

fn basis(w: &Rbw) -> LinComb {
    LinComb::basis(w.clone())
}

pub fn rota_baxter(b: &Basis, max: usize, mode: &WeightMode) -> CheckOutcome {
    tally(
        "P(u)P(v) = P(uP(v)) + P(P(u)v) + lambda P(uv)",
        b.pairs(max),
        |(u, v)| check_rota_baxter(&basis(u), &basis(v), mode),
        pair_text,
    )
}

pub fn associativity(b: &Basis, max: usize, mode: &WeightMode) -> CheckOutcome {
    tally(
        "(u v) w = u (v w)",
        b.triples(max),
        |(u, v, w)| {
            let left = diamond(&diamond_basis(u, v, mode), &basis(w), mode);
            let right = diamond(&basis(u), &diamond_basis(v, w, mode), mode);
            left == right
        },
        |(u, v, w)| format!("u = {u}, v = {v}, w = {w}"),
    )
}

pub fn unit(b: &Basis, max: usize, mode: &WeightMode) -> CheckOutcome {
    tally(
        "1 w = w 1 = w",
        b.words(max).cloned(),
        |w| {
            let one = Rbw::one();
            diamond_basis(&one, w, mode) == basis(w) && diamond_basis(w, &one, mode) == basis(w)
        },
        |w| format!("w = {w}"),
    )
}

pub fn coassociativity(b: &Basis, max: usize, mode: &WeightMode) -> CheckOutcome {
    tally(
        "(cop x id) cop = (id x cop) cop",
        b.words(max).cloned(),
        |w| check_coassociativity(w, mode),
        |w| format!("w = {w}"),
    )
}

pub fn counit_laws(b: &Basis, max: usize, mode: &WeightMode) -> CheckOutcome {
    tally(
        "(eps x id) cop = id = (id x eps) cop",
        b.words(max).cloned(),
        |w| check_counit_laws(w, mode),
        |w| format!("w = {w}"),
    )
}

pub fn bialgebra(b: &Basis, max: usize, mode: &WeightMode) -> CheckOutcome {
    tally(
        "cop(u v) = cop(u) cop(v), eps(u v) = eps(u) eps(v)",
        b.pairs(max),
        |(u, v)| check_bialgebra_compat(u, v, mode),
        pair_text,
    )
}

pub fn antipode_identities(b: &Basis, max: usize, s: &Antipode) -> CheckOutcome {
    tally(
        "S * id = id * S = u eps",
        b.words(max).cloned(),
        |w| antipode_identities_hold(s, w),
        |w| format!("w = {w}"),
    )
}

pub fn antihomomorphism(b: &Basis, max: usize, s: &Antipode) -> CheckOutcome {
    tally(
        "S(u v) = S(v) S(u)",
        b.pairs(max),
        |(u, v)| antihomomorphism_holds(s, u, v),
        pair_text,
    )
}

/// Weight-zero grading checks plus the connectedness witness.
pub fn grading(b: &Basis, max: usize, mode: &WeightMode) -> Result<Vec<CheckOutcome>> {
    // Fails fast with WeightNotZero outside weight zero.
    check_graded_product(&Rbw::one(), &Rbw::one(), mode)?;
    let product = tally(
        "deg(u v) = deg(u) + deg(v)",
        b.pairs(max),
        |(u, v)| check_graded_product(u, v, mode).unwrap_or(false),
        pair_text,
    );
    let coproduct = tally(
        "cop(H_n) in sum of H_p (x) H_q, p + q = n",
        b.words(max).cloned(),
        |w| check_graded_coproduct(w, mode).unwrap_or(false),
        |w| format!("w = {w}"),
    );
    let connected = tally(
        "exactly one word of degree 0",
        [b.of_degree(0).to_vec()],
        |zero| zero.len() == 1 && zero[0].is_one(),
        |zero| format!("degree-0 words: {zero:?}"),
    );
    Ok(vec![product, coproduct, connected])
}

/// Violations must be present at symbolic weight and absent at weight zero.
pub fn counterexample() -> Vec<CheckOutcome> {
    let symbolic = counterexample_weight_nonzero(&WeightMode::Symbolic);
    let zero = counterexample_weight_nonzero(&WeightMode::zero());
    vec![
        tally(
            "P(1)P(1) = 2 P(P(1)) + lambda P(1)",
            [&symbolic],
            |r| r.product_matches_expected,
            |r| format!("got {:?}", r.product),
        ),
        tally(
            "product grading violated at symbolic weight",
            [&symbolic],
            |r| r.product_violated(),
            |r| format!("degrees {:?}", r.product_degrees),
        ),
        tally(
            "coproduct grading violated at symbolic weight",
            [&symbolic],
            |r| r.cograding_violations.len() == 2,
            |r| format!("violations {:?}", r.cograding_violations),
        ),
        tally(
            "no violations at weight 0",
            [&zero],
            |r| r.is_empty(),
            |r| format!("violations {:?}", r.cograding_violations),
        ),
    ]
}

/// Runs one law over all words on `alphabet` within `max_degree`.
pub fn run(
    law: Law,
    alphabet: &BTreeSet<Letter>,
    max_degree: usize,
    mode: &WeightMode,
) -> Result<SuiteReport> {
    let checks = if law == Law::Counterexample {
        counterexample()
    } else {
        if alphabet.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let b = Basis::new(alphabet, max_degree);
        match law {
            Law::RotaBaxter => vec![rota_baxter(&b, max_degree, mode)],
            Law::Associativity => vec![associativity(&b, max_degree, mode)],
            Law::Unit => vec![unit(&b, max_degree, mode)],
            Law::Coassociativity => vec![coassociativity(&b, max_degree, mode)],
            Law::Counit => vec![counit_laws(&b, max_degree, mode)],
            Law::Bialgebra => vec![bialgebra(&b, max_degree, mode)],
            Law::Antipode => {
                let s = Arc::new(Antipode::new(mode)?);
                vec![
                    antipode_identities(&b, max_degree, &s),
                    antihomomorphism(&b, max_degree, &s),
                ]
            }
            Law::Grading => grading(&b, max_degree, mode)?,
            Law::Counterexample => unreachable!(),
        }
    };
    Ok(SuiteReport { law, checks })
}
