//! Grading, convolution and the antipode.
//!
//! At weight zero the total degree makes the bialgebra graded and connected,
//! so the antipode exists and is computed by recursion on degree. At nonzero
//! weight the grading breaks; [`counterexample_weight_nonzero`] reproduces
//! the failure on `P(1)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::algebra::{diamond, diamond_basis, rb_operator, LinComb};
use crate::coalgebra::{coproduct_basis, counit, multiply_slots, reduced_coproduct, Tensor2};
use crate::coeffs::{Coeff, WeightMode};
use crate::error::{Error, Result};
use crate::words::{Item, Letter, Rbw};

/// Degree-`n` part of `a`.
pub fn graded_component(a: &LinComb, n: usize) -> LinComb {
    a.filter(|w| w.total_degree() == n)
}

/// `Some(n)` when every support word has degree `n`; `None` for zero or
/// mixed degrees.
pub fn is_homogeneous(a: &LinComb) -> Option<usize> {
    let degrees = support_degrees(a);
    match degrees.len() {
        1 => degrees.into_iter().next(),
        _ => None,
    }
}

pub fn support_degrees(a: &LinComb) -> BTreeSet<usize> {
    a.keys().map(Rbw::total_degree).collect()
}

type Rule = dyn Fn(&Rbw) -> LinComb + Send + Sync;

/// A linear endomorphism given by its values on basis words.
#[derive(Clone)]
pub struct LinearMap {
    rule: Arc<Rule>,
}

impl LinearMap {
    pub fn from_fn<F>(rule: F) -> Self
    where
        F: Fn(&Rbw) -> LinComb + Send + Sync + 'static,
    {
        Self {
            rule: Arc::new(rule),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|w| LinComb::basis(w.clone()))
    }

    /// `u∘ε`, the unit for convolution.
    pub fn unit_counit() -> Self {
        Self::from_fn(|w| LinComb::scalar(counit(&LinComb::basis(w.clone()))))
    }

    /// The operator `P`.
    pub fn rb_operator() -> Self {
        Self::from_fn(|w| LinComb::basis(Rbw::bracket(w.clone())))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &LinearMap) -> LinearMap {
        let (first, second) = (self.clone(), other.clone());
        Self::from_fn(move |w| second.apply(&first.apply_word(w)))
    }

    pub fn apply_word(&self, w: &Rbw) -> LinComb {
        (self.rule)(w)
    }

    pub fn apply(&self, a: &LinComb) -> LinComb {
        a.flat_map(|w| self.apply_word(w))
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LinearMap")
    }
}

/// `f ∗ g = μ (f ⊗ g) Δ`, evaluated lazily per input word.
pub fn convolution(f: &LinearMap, g: &LinearMap, mode: &WeightMode) -> LinearMap {
    let (f, g, mode) = (f.clone(), g.clone(), mode.clone());
    LinearMap::from_fn(move |w| {
        let delta = coproduct_basis(w, &mode);
        multiply_slots(&delta, |a| f.apply_word(a), |b| g.apply_word(b), &mode)
    })
}

fn require_zero_weight(mode: &WeightMode) -> Result<()> {
    if mode.is_zero_weight() {
        Ok(())
    } else {
        Err(Error::WeightNotZero(mode.clone()))
    }
}

/// The antipode at weight zero, memoized on basis words.
///
/// `S(1) = 1` and `S(w) = -w - Σ S(w') ⋄ w''` over the reduced coproduct of
/// `w`, whose slots all have degree strictly below `deg(w)`.
#[derive(Debug, Default)]
pub struct Antipode {
    memo: RwLock<HashMap<Rbw, LinComb>>,
}

impl Antipode {
    /// Fails with [`Error::WeightNotZero`] unless `mode` is weight zero.
    pub fn new(mode: &WeightMode) -> Result<Self> {
        require_zero_weight(mode)?;
        Ok(Self::default())
    }

    pub fn apply_word(&self, w: &Rbw) -> LinComb {
        if let Some(hit) = self.memo.read().expect("antipode memo poisoned").get(w) {
            return hit.clone();
        }
        let value = self.compute(w);
        self.memo
            .write()
            .expect("antipode memo poisoned")
            .insert(w.clone(), value.clone());
        value
    }

    fn compute(&self, w: &Rbw) -> LinComb {
        if w.is_one() {
            return LinComb::one();
        }
        let mode = WeightMode::zero();
        let reduced = reduced_coproduct(w, &mode).expect("w is not the empty word");
        let mut out = LinComb::term(w.clone(), Coeff::integer(-1));
        for ((left, right), c) in &reduced {
            let term = diamond(
                &self.apply_word(left),
                &LinComb::basis(right.clone()),
                &mode,
            );
            out.add_scaled(&-c, &term);
        }
        out
    }

    /// Linear extension. Coefficients are evaluated at weight zero first.
    pub fn apply(&self, a: &LinComb) -> LinComb {
        a.specialize(&WeightMode::zero())
            .flat_map(|w| self.apply_word(w))
    }

    pub fn to_linear_map(self: &Arc<Self>) -> LinearMap {
        let s = Arc::clone(self);
        LinearMap::from_fn(move |w| s.apply_word(w))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("antipode memo poisoned").len()
    }
}

/// One-shot antipode of a word.
pub fn antipode(w: &Rbw, mode: &WeightMode) -> Result<LinComb> {
    Ok(Antipode::new(mode)?.apply_word(w))
}

/// `S ∗ id = id ∗ S = uε` on `w`.
pub fn check_antipode(w: &Rbw, mode: &WeightMode) -> Result<bool> {
    let s = Antipode::new(mode)?;
    Ok(antipode_identities_hold(&s, w))
}

pub fn antipode_identities_hold(s: &Antipode, w: &Rbw) -> bool {
    let mode = WeightMode::zero();
    let delta = coproduct_basis(w, &mode);
    let basis = |v: &Rbw| LinComb::basis(v.clone());
    let expected = LinComb::scalar(counit(&basis(w)));
    let left = multiply_slots(&delta, |a| s.apply_word(a), basis, &mode);
    let right = multiply_slots(&delta, basis, |b| s.apply_word(b), &mode);
    left == expected && right == expected
}

/// `S(u ⋄ v) = S(v) ⋄ S(u)`.
pub fn antihomomorphism_holds(s: &Antipode, u: &Rbw, v: &Rbw) -> bool {
    let mode = WeightMode::zero();
    let lhs = s.apply(&diamond_basis(u, v, &mode));
    let rhs = diamond(&s.apply_word(v), &s.apply_word(u), &mode);
    lhs == rhs
}

/// `u ⋄ v` is homogeneous of degree `deg(u) + deg(v)` (or zero).
pub fn product_is_graded(u: &Rbw, v: &Rbw, mode: &WeightMode) -> bool {
    let n = u.total_degree() + v.total_degree();
    diamond_basis(u, v, mode)
        .keys()
        .all(|w| w.total_degree() == n)
}

/// Every support pair of `Δ(w)` has slot degrees summing to `deg(w)`.
pub fn coproduct_is_graded(w: &Rbw, mode: &WeightMode) -> bool {
    cograding_violations(&coproduct_basis(w, mode), w.total_degree()).is_empty()
}

pub fn check_graded_product(u: &Rbw, v: &Rbw, mode: &WeightMode) -> Result<bool> {
    require_zero_weight(mode)?;
    Ok(product_is_graded(u, v, mode))
}

pub fn check_graded_coproduct(w: &Rbw, mode: &WeightMode) -> Result<bool> {
    require_zero_weight(mode)?;
    Ok(coproduct_is_graded(w, mode))
}

/// A tensor term whose slot degrees do not add up to the expected degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CogradingViolation {
    pub left: Rbw,
    pub right: Rbw,
    pub coeff: Coeff,
    pub degree_sum: usize,
}

fn cograding_violations(t: &Tensor2, expected: usize) -> Vec<CogradingViolation> {
    t.iter()
        .filter(|((a, b), _)| a.total_degree() + b.total_degree() != expected)
        .map(|((a, b), c)| CogradingViolation {
            left: a.clone(),
            right: b.clone(),
            coeff: c.clone(),
            degree_sum: a.total_degree() + b.total_degree(),
        })
        .collect()
}

/// Grading failures at `w = P(1)`: the square `w ⋄ w` and the coproduct of
/// `w x w`.
#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub mode: WeightMode,
    /// `P(1) ⋄ P(1)`.
    pub product: LinComb,
    /// Whether the square equals `2 P(P(1)) + λ P(1)` under this mode.
    pub product_matches_expected: bool,
    pub product_degrees: BTreeSet<usize>,
    pub product_expected_degree: usize,
    /// The word `P(1) x P(1)`.
    pub word: Rbw,
    pub coproduct: Tensor2,
    pub coproduct_expected_degree: usize,
    pub cograding_violations: Vec<CogradingViolation>,
}

impl CounterexampleReport {
    pub fn product_violated(&self) -> bool {
        self.product_degrees
            .iter()
            .any(|&d| d != self.product_expected_degree)
    }

    /// No violation of either kind.
    pub fn is_empty(&self) -> bool {
        !self.product_violated() && self.cograding_violations.is_empty()
    }
}

pub fn counterexample_weight_nonzero(mode: &WeightMode) -> CounterexampleReport {
    let one = Rbw::one();
    let p1 = Rbw::bracket(one.clone());
    let p1_lc = LinComb::basis(p1.clone());
    let product = diamond(&p1_lc, &p1_lc, mode);
    let mut expected = LinComb::term(Rbw::bracket(p1.clone()), Coeff::integer(2));
    expected.add_term(p1.clone(), mode.lambda());

    let x = Letter::new("x").expect("valid letter");
    let word = Rbw::new(vec![
        Item::Bracket(one.clone()),
        Item::Atom(x),
        Item::Bracket(one),
    ])
    .expect("alternating");
    let coproduct = coproduct_basis(&word, mode);
    let coproduct_expected_degree = word.total_degree();

    CounterexampleReport {
        mode: mode.clone(),
        product_matches_expected: product == expected,
        product_degrees: support_degrees(&product),
        product_expected_degree: 2 * p1.total_degree(),
        cograding_violations: cograding_violations(&coproduct, coproduct_expected_degree),
        product,
        word,
        coproduct,
        coproduct_expected_degree,
    }
}

/// `P ∘ f`.
pub fn bracket_after(f: &LinearMap) -> LinearMap {
    let f = f.clone();
    LinearMap::from_fn(move |w| rb_operator(&f.apply_word(w)))
}
