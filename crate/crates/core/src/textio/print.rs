//! Canonical text output.
//!
//! Terms of an element are ordered by total degree, then by printed word.
//! Tensor terms are ordered by total degree, then by left-slot degree
//! (descending), then by the printed slots.

use std::fmt::{self, Write};

use num_traits::Signed;

use crate::algebra::LinComb;
use crate::coalgebra::Tensor2;
use crate::coeffs::Coeff;
use crate::words::Rbw;

pub fn print_word(w: &Rbw) -> String {
    w.to_string()
}

pub fn print_coeff(c: &Coeff) -> String {
    c.to_string()
}

pub fn print_lincomb(a: &LinComb) -> String {
    let mut terms: Vec<((usize, String), &Coeff)> = a
        .iter()
        .map(|(w, c)| ((w.total_degree(), w.to_string()), c))
        .collect();
    terms.sort_by(|x, y| x.0.cmp(&y.0));
    join_terms(terms.into_iter().map(|((_, body), c)| (body, c)))
}

pub fn print_tensor2(t: &Tensor2) -> String {
    let mut terms: Vec<_> = t
        .iter()
        .map(|((a, b), c)| {
            let (da, db) = (a.total_degree(), b.total_degree());
            (
                (da + db, std::cmp::Reverse(da), a.to_string(), b.to_string()),
                c,
            )
        })
        .collect();
    terms.sort_by(|x, y| x.0.cmp(&y.0));
    join_terms(
        terms
            .into_iter()
            .map(|((_, _, a, b), c)| (format!("{a} (x) {b}"), c)),
    )
}

/// Joins `(body, coeff)` terms with ` + ` / ` - `. A body of `1` is the unit
/// word and collapses into its coefficient.
fn join_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a Coeff)>,
{
    let mut out = String::new();
    for (i, (body, c)) in terms.into_iter().enumerate() {
        let negative = is_negative_monomial(c);
        let magnitude = if negative { -c } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        write_term(&mut out, &magnitude, &body, i == 0 || negative).expect("writing to a String");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn is_negative_monomial(c: &Coeff) -> bool {
    let mut terms = c.terms();
    matches!((terms.next(), terms.next()), (Some((_, r)), None) if r.is_negative())
}

fn write_term(out: &mut String, c: &Coeff, body: &str, bare: bool) -> fmt::Result {
    if body == "1" {
        return if bare || c.terms().count() == 1 {
            write!(out, "{c}")
        } else {
            write!(out, "({c})")
        };
    }
    if !c.is_one() {
        write!(out, "{}*", Factor(c))?;
    }
    out.push_str(body);
    Ok(())
}

struct Factor<'a>(&'a Coeff);

impl fmt::Display for Factor<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_factor(f)
    }
}
