//! Structured (JSON) export and import.
//!
//! Schema:
//!
//! ```text
//! word     := [item, ...]                         empty array is the word 1
//! item     := {"atom": "<letter>"} | {"bracket": word}
//! coeff    := {"<exponent>": [numerator, denominator], ...}
//! element  := {"terms": [{"word": word, "coeff": coeff}, ...]}
//! tensor   := {"terms": [{"left": word, "right": word, "coeff": coeff}, ...]}
//! ```
//!
//! Numerators and denominators are JSON integers, or decimal strings when
//! they do not fit in 64 bits. Terms appear in canonical print order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::LinComb;
use crate::coalgebra::Tensor2;
use crate::coeffs::Coeff;
use crate::error::{Error, Result};
use crate::hopf::CounterexampleReport;
use crate::textio::print::{print_lincomb, print_tensor2};
use crate::words::{canonical_key, Item, Letter, Rbw};

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Json(format!("non-integer number {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::Json(format!("bad integer string {s:?}"))),
        other => Err(Error::Json(format!("expected integer, found {other}"))),
    }
}

pub fn word_to_json(w: &Rbw) -> Value {
    Value::Array(
        w.items()
            .iter()
            .map(|item| match item {
                Item::Atom(l) => json!({ "atom": l.name() }),
                Item::Bracket(inner) => json!({ "bracket": word_to_json(inner) }),
            })
            .collect(),
    )
}

pub fn word_from_json(v: &Value) -> Result<Rbw> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("word must be an array, found {v}")))?;
    let items = items
        .iter()
        .map(|item| {
            let obj = item.as_object().filter(|o| o.len() == 1).ok_or_else(|| {
                Error::Json(format!("item must be a one-key object, found {item}"))
            })?;
            if let Some(name) = obj.get("atom") {
                let name = name
                    .as_str()
                    .ok_or_else(|| Error::Json("atom must be a string".into()))?;
                Ok(Item::Atom(Letter::new(name)?))
            } else if let Some(inner) = obj.get("bracket") {
                Ok(Item::Bracket(word_from_json(inner)?))
            } else {
                Err(Error::Json(format!("unknown item {item}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Rbw::new(items)
}

pub fn coeff_to_json(c: &Coeff) -> Value {
    let mut map = Map::new();
    for (exp, r) in c.terms() {
        map.insert(
            exp.to_string(),
            json!([int_to_json(r.numer()), int_to_json(r.denom())]),
        );
    }
    Value::Object(map)
}

pub fn coeff_from_json(v: &Value) -> Result<Coeff> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json(format!("coefficient must be an object, found {v}")))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (key, pair) in obj {
        let exp: u32 = key
            .parse()
            .map_err(|_| Error::Json(format!("bad exponent {key:?}")))?;
        let [num, den] = pair.as_array().map(Vec::as_slice).unwrap_or_default() else {
            return Err(Error::Json(format!(
                "expected [numerator, denominator], found {pair}"
            )));
        };
        let den = int_from_json(den)?;
        if den.is_zero() {
            return Err(Error::Json("zero denominator".into()));
        }
        terms.push((exp, BigRational::new(int_from_json(num)?, den)));
    }
    Ok(Coeff::from_terms(terms))
}

fn terms_array(v: &Value) -> Result<&Vec<Value>> {
    v.get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("expected an object with a `terms` array".into()))
}

fn field<'a>(term: &'a Value, name: &str) -> Result<&'a Value> {
    term.get(name)
        .ok_or_else(|| Error::Json(format!("term is missing `{name}`")))
}

pub fn lincomb_to_value(a: &LinComb) -> Value {
    let mut terms: Vec<_> = a.iter().collect();
    terms.sort_by_cached_key(|(w, _)| canonical_key(w));
    let terms: Vec<Value> = terms
        .into_iter()
        .map(|(w, c)| json!({ "word": word_to_json(w), "coeff": coeff_to_json(c) }))
        .collect();
    json!({ "terms": terms })
}

pub fn lincomb_from_value(v: &Value) -> Result<LinComb> {
    terms_array(v)?
        .iter()
        .map(|t| {
            Ok((
                word_from_json(field(t, "word")?)?,
                coeff_from_json(field(t, "coeff")?)?,
            ))
        })
        .collect()
}

pub fn tensor2_to_value(t: &Tensor2) -> Value {
    let mut terms: Vec<_> = t.iter().collect();
    terms.sort_by_cached_key(|((a, b), _)| {
        let (ka, kb) = (canonical_key(a), canonical_key(b));
        (ka.0 + kb.0, std::cmp::Reverse(ka.0), ka.1, kb.1)
    });
    let terms: Vec<Value> = terms
        .into_iter()
        .map(|((a, b), c)| {
            json!({ "left": word_to_json(a), "right": word_to_json(b), "coeff": coeff_to_json(c) })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn tensor2_from_value(v: &Value) -> Result<Tensor2> {
    terms_array(v)?
        .iter()
        .map(|t| {
            let left = word_from_json(field(t, "left")?)?;
            let right = word_from_json(field(t, "right")?)?;
            Ok(((left, right), coeff_from_json(field(t, "coeff")?)?))
        })
        .collect()
}

pub fn report_to_value(r: &CounterexampleReport) -> Value {
    let violations: Vec<Value> = r
        .cograding_violations
        .iter()
        .map(|v| {
            json!({
                "left": word_to_json(&v.left),
                "right": word_to_json(&v.right),
                "coeff": coeff_to_json(&v.coeff),
                "degree_sum": v.degree_sum,
                "text": print_tensor2(&Tensor2::term((v.left.clone(), v.right.clone()), v.coeff.clone())),
            })
        })
        .collect();
    json!({
        "weight": r.mode.to_string(),
        "product": {
            "text": print_lincomb(&r.product),
            "value": lincomb_to_value(&r.product),
            "matches_expected": r.product_matches_expected,
            "degrees": r.product_degrees.iter().collect::<Vec<_>>(),
            "expected_degree": r.product_expected_degree,
            "violated": r.product_violated(),
        },
        "coproduct": {
            "word": word_to_json(&r.word),
            "text": print_tensor2(&r.coproduct),
            "value": tensor2_to_value(&r.coproduct),
            "expected_degree": r.coproduct_expected_degree,
            "violations": violations,
        },
        "empty": r.is_empty(),
    })
}

pub fn export_lincomb(a: &LinComb) -> String {
    lincomb_to_value(a).to_string()
}

pub fn export_tensor2(t: &Tensor2) -> String {
    tensor2_to_value(t).to_string()
}

pub fn export_report(r: &CounterexampleReport) -> String {
    report_to_value(r).to_string()
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

pub fn import_lincomb(text: &str) -> Result<LinComb> {
    lincomb_from_value(&parse_json(text)?)
}

pub fn import_tensor2(text: &str) -> Result<Tensor2> {
    tensor2_from_value(&parse_json(text)?)
}
