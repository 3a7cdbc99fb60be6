//! Coproduct, counit and the coalgebra and bialgebra laws.
//!
//! Letters are primitive. A bracket splits as
//! `Δ(⌊w⌋) = ⌊w⌋ ⊗ 1 + (id ⊗ P) Δ(w)`, and a general word is the diamond
//! product of the coproducts of its factors.

use crate::algebra::{diamond, diamond_basis, LinComb};
use crate::coeffs::{Coeff, WeightMode};
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::words::{Item, Rbw};

pub type Tensor2 = Combination<(Rbw, Rbw)>;
pub type Tensor3 = Combination<(Rbw, Rbw, Rbw)>;

/// `a ⊗ b` for algebra elements.
pub fn tensor(a: &LinComb, b: &LinComb) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (u, cu) in a {
        for (v, cv) in b {
            out.add_term((u.clone(), v.clone()), cu * cv);
        }
    }
    out
}

pub fn pure_tensor(a: &Rbw, b: &Rbw) -> Tensor2 {
    Tensor2::basis((a.clone(), b.clone()))
}

/// Componentwise product `(a⊗b) ⋄ (c⊗d) = (a⋄c) ⊗ (b⋄d)`.
pub fn tensor2_diamond(s: &Tensor2, t: &Tensor2, mode: &WeightMode) -> Tensor2 {
    let s = s.specialize(mode);
    let t = t.specialize(mode);
    let mut out = Tensor2::zero();
    for ((a, b), cs) in &s {
        for ((c, d), ct) in &t {
            let left = diamond_basis(a, c, mode);
            let right = diamond_basis(b, d, mode);
            out.add_scaled(&(cs * ct), &tensor(&left, &right));
        }
    }
    out
}

/// `Δ` on a basis word, by recursion on its diamond factorization.
pub fn coproduct_basis(w: &Rbw, mode: &WeightMode) -> Tensor2 {
    match w.items() {
        [] => pure_tensor(&Rbw::one(), &Rbw::one()),
        [item] => coproduct_item(item, mode),
        items => items
            .iter()
            .map(|item| coproduct_item(item, mode))
            .reduce(|acc, next| tensor2_diamond(&acc, &next, mode))
            .expect("at least two factors"),
    }
}

fn coproduct_item(item: &Item, mode: &WeightMode) -> Tensor2 {
    let w = Rbw::from_items_unchecked(vec![item.clone()]);
    match item {
        Item::Atom(_) => pure_tensor(&w, &Rbw::one()) + pure_tensor(&Rbw::one(), &w),
        Item::Bracket(inner) => {
            let mut out = pure_tensor(&w, &Rbw::one());
            out += &right_bracket(&coproduct_basis(inner, mode));
            out
        }
    }
}

/// `(id ⊗ P)`.
fn right_bracket(t: &Tensor2) -> Tensor2 {
    t.map_keys(|(a, b)| (a.clone(), Rbw::bracket(b.clone())))
}

/// Linear extension of [`coproduct_basis`].
pub fn coproduct(a: &LinComb, mode: &WeightMode) -> Tensor2 {
    a.specialize(mode).flat_map(|w| coproduct_basis(w, mode))
}

/// `ε`: the coefficient of the empty word.
pub fn counit(a: &LinComb) -> Coeff {
    a.coeff(&Rbw::one())
}

/// `Δ(w) - w⊗1 - 1⊗w`.
pub fn reduced_coproduct(w: &Rbw, mode: &WeightMode) -> Result<Tensor2> {
    if w.is_one() {
        return Err(Error::EmptyWord);
    }
    let mut out = coproduct_basis(w, mode);
    out.add_term((w.clone(), Rbw::one()), Coeff::integer(-1));
    out.add_term((Rbw::one(), w.clone()), Coeff::integer(-1));
    Ok(out)
}

/// `(Δ ⊗ id)`.
pub fn coproduct_left(t: &Tensor2, mode: &WeightMode) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t {
        let split =
            coproduct_basis(a, mode).map_keys(|(a1, a2)| (a1.clone(), a2.clone(), b.clone()));
        out.add_scaled(c, &split);
    }
    out
}

/// `(id ⊗ Δ)`.
pub fn coproduct_right(t: &Tensor2, mode: &WeightMode) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t {
        let split =
            coproduct_basis(b, mode).map_keys(|(b1, b2)| (a.clone(), b1.clone(), b2.clone()));
        out.add_scaled(c, &split);
    }
    out
}

/// `(ε ⊗ id)`: keeps terms whose left slot is `1`.
pub fn counit_left(t: &Tensor2) -> LinComb {
    Combination::from_terms(
        t.iter()
            .filter(|((a, _), _)| a.is_one())
            .map(|((_, b), c)| (b.clone(), c.clone())),
    )
}

/// `(id ⊗ ε)`: keeps terms whose right slot is `1`.
pub fn counit_right(t: &Tensor2) -> LinComb {
    Combination::from_terms(
        t.iter()
            .filter(|((_, b), _)| b.is_one())
            .map(|((a, _), c)| (a.clone(), c.clone())),
    )
}

/// Swaps the two tensor slots.
pub fn flip(t: &Tensor2) -> Tensor2 {
    t.map_keys(|(a, b)| (b.clone(), a.clone()))
}

/// `(Δ⊗id)Δ(w) = (id⊗Δ)Δ(w)`.
pub fn check_coassociativity(w: &Rbw, mode: &WeightMode) -> bool {
    let delta = coproduct_basis(w, mode);
    coproduct_left(&delta, mode) == coproduct_right(&delta, mode)
}

/// `(ε⊗id)Δ(w) = w = (id⊗ε)Δ(w)`.
pub fn check_counit_laws(w: &Rbw, mode: &WeightMode) -> bool {
    let delta = coproduct_basis(w, mode);
    let expected = LinComb::basis(w.clone());
    counit_left(&delta) == expected && counit_right(&delta) == expected
}

/// `Δ(u⋄v) = Δ(u)⋄Δ(v)` and `ε(u⋄v) = ε(u)ε(v)`.
pub fn check_bialgebra_compat(u: &Rbw, v: &Rbw, mode: &WeightMode) -> bool {
    let product = diamond_basis(u, v, mode);
    let lhs = coproduct(&product, mode);
    let rhs = tensor2_diamond(&coproduct_basis(u, mode), &coproduct_basis(v, mode), mode);
    let eps_u = counit(&LinComb::basis(u.clone()));
    let eps_v = counit(&LinComb::basis(v.clone()));
    lhs == rhs && counit(&product) == &eps_u * &eps_v
}

/// `μ(f ⊗ g)`: applies `f` and `g` slotwise and multiplies the results.
pub fn multiply_slots<F, G>(t: &Tensor2, mut f: F, mut g: G, mode: &WeightMode) -> LinComb
where
    F: FnMut(&Rbw) -> LinComb,
    G: FnMut(&Rbw) -> LinComb,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        out.add_scaled(c, &diamond(&f(a), &g(b), mode));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate_words, Letter};

    fn letter(n: &str) -> Letter {
        Letter::new(n).unwrap()
    }

    fn w(n: &str) -> Rbw {
        Rbw::letter(letter(n))
    }

    fn p(inner: Rbw) -> Rbw {
        Rbw::bracket(inner)
    }

    fn t(a: &Rbw, b: &Rbw) -> Tensor2 {
        pure_tensor(a, b)
    }

    const SYM: WeightMode = WeightMode::Symbolic;

    /// Subsequence of letters selected by `mask`.
    fn subword(letters: &[&str], mask: impl Fn(usize) -> bool) -> Rbw {
        let picked: Vec<&str> = letters
            .iter()
            .enumerate()
            .filter(|(i, _)| mask(*i))
            .map(|(_, l)| *l)
            .collect();
        Rbw::from_letters(picked).unwrap()
    }

    /// Sum over all ways to deal the letters into two ordered piles.
    fn shuffle_oracle(letters: &[&str]) -> Tensor2 {
        let m = letters.len();
        let mut out = Tensor2::zero();
        for mask in 0u32..(1 << m) {
            let left = subword(letters, |i| mask & (1 << i) != 0);
            let right = subword(letters, |i| mask & (1 << i) == 0);
            out.add_term((left, right), Coeff::one());
        }
        out
    }

    /// Same, with three piles.
    fn triple_oracle(letters: &[&str]) -> Tensor3 {
        let m = letters.len() as u32;
        let mut out = Tensor3::zero();
        for code in 0..3u32.pow(m) {
            let pile = |i: usize| (code / 3u32.pow(i as u32)) % 3;
            let key = (
                subword(letters, |i| pile(i) == 0),
                subword(letters, |i| pile(i) == 1),
                subword(letters, |i| pile(i) == 2),
            );
            out.add_term(key, Coeff::one());
        }
        out
    }

    #[test]
    fn tensor2_diamond_examples() {
        let one = Rbw::one();
        let (x, y) = (w("x"), w("y"));
        assert_eq!(tensor2_diamond(&t(&x, &one), &t(&one, &y), &SYM), t(&x, &y));

        let dx = t(&x, &one) + t(&one, &x);
        let dy = t(&y, &one) + t(&one, &y);
        let xy = Rbw::from_letters(["x", "y"]).unwrap();
        let expected = t(&xy, &one) + t(&x, &y) + t(&y, &x) + t(&one, &xy);
        assert_eq!(tensor2_diamond(&dx, &dy, &SYM), expected);

        let p1 = p(one.clone());
        let mut expected = Tensor2::term((p(p1.clone()), one.clone()), Coeff::integer(2));
        expected.add_term((p1.clone(), one.clone()), Coeff::lambda());
        assert_eq!(
            tensor2_diamond(&t(&p1, &one), &t(&p1, &one), &SYM),
            expected
        );
    }

    #[test]
    fn coproduct_basis_examples() {
        let one = Rbw::one();
        assert_eq!(coproduct_basis(&one, &SYM), t(&one, &one));
        let p1 = p(one.clone());
        assert_eq!(coproduct_basis(&p1, &SYM), t(&p1, &one) + t(&one, &p1));
        let px = p(w("x"));
        assert_eq!(
            coproduct_basis(&px, &SYM),
            t(&px, &one) + t(&w("x"), &p1) + t(&one, &px)
        );
        let x1x2 = Rbw::from_letters(["x1", "x2"]).unwrap();
        let d = coproduct_basis(&x1x2, &SYM);
        assert_eq!(d.len(), 4);
        assert_eq!(d, shuffle_oracle(&["x1", "x2"]));
    }

    #[test]
    fn coproduct_linear_examples() {
        let one = Rbw::one();
        assert_eq!(
            coproduct(&LinComb::scalar(Coeff::lambda()), &SYM),
            Tensor2::term((one.clone(), one.clone()), Coeff::lambda())
        );
        let xy = LinComb::from_terms([(w("x"), Coeff::one()), (w("y"), Coeff::one())]);
        let expected = t(&w("x"), &one) + t(&one, &w("x")) + t(&w("y"), &one) + t(&one, &w("y"));
        assert_eq!(coproduct(&xy, &SYM), expected);
        assert!(coproduct(&LinComb::zero(), &SYM).is_zero());
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&LinComb::one()), Coeff::one());
        assert_eq!(
            counit(&LinComb::term(w("x"), Coeff::integer(5))),
            Coeff::zero()
        );
        let a = LinComb::from_terms([
            (Rbw::one(), Coeff::lambda()),
            (p(Rbw::one()), Coeff::integer(3)),
        ]);
        assert_eq!(counit(&a), Coeff::lambda());
    }

    #[test]
    fn reduced_coproduct_examples() {
        assert!(reduced_coproduct(&w("x"), &SYM).unwrap().is_zero());
        assert!(reduced_coproduct(&p(Rbw::one()), &SYM).unwrap().is_zero());
        assert_eq!(
            reduced_coproduct(&p(w("x")), &SYM).unwrap(),
            t(&w("x"), &p(Rbw::one()))
        );
        assert_eq!(reduced_coproduct(&Rbw::one(), &SYM), Err(Error::EmptyWord));
    }

    #[test]
    fn coassociativity_examples() {
        assert!(check_coassociativity(&Rbw::one(), &SYM));
        let x123 = Rbw::from_letters(["x1", "x2", "x3"]).unwrap();
        assert!(check_coassociativity(&x123, &SYM));
        let delta = coproduct_basis(&x123, &SYM);
        assert_eq!(
            coproduct_left(&delta, &SYM),
            triple_oracle(&["x1", "x2", "x3"])
        );
        assert!(check_coassociativity(&p(p(Rbw::one())), &SYM));
    }

    #[test]
    fn counit_law_examples() {
        let p1 = p(Rbw::one());
        assert!(check_counit_laws(&Rbw::one(), &SYM));
        assert!(check_counit_laws(&p1, &SYM));
        let wxw = Rbw::new(vec![
            Item::Bracket(Rbw::one()),
            Item::Atom(letter("x")),
            Item::Bracket(Rbw::one()),
        ])
        .unwrap();
        assert!(check_counit_laws(&wxw, &SYM));
    }

    #[test]
    fn bialgebra_examples() {
        let p1 = p(Rbw::one());
        assert!(check_bialgebra_compat(&w("x"), &w("y"), &SYM));
        assert!(check_bialgebra_compat(&p1, &p1, &SYM));
        assert!(check_bialgebra_compat(&Rbw::one(), &p(w("x")), &SYM));
    }

    #[test]
    fn shuffle_formula_up_to_length_six() {
        let names = ["a", "b", "c", "d", "e", "f"];
        for m in 0..=6 {
            let word = Rbw::from_letters(names[..m].iter().copied()).unwrap();
            assert_eq!(
                coproduct_basis(&word, &SYM),
                shuffle_oracle(&names[..m]),
                "m = {m}"
            );
        }
        // Repeated letters collapse terms: Δ(xx) = xx⊗1 + 2x⊗x + 1⊗xx.
        let xx = Rbw::from_letters(["x", "x"]).unwrap();
        assert_eq!(coproduct_basis(&xx, &SYM), shuffle_oracle(&["x", "x"]));
        assert_eq!(
            coproduct_basis(&xx, &SYM).coeff(&(w("x"), w("x"))),
            Coeff::integer(2)
        );
    }

    #[test]
    fn not_cocommutative() {
        let d = coproduct_basis(&p(w("x")), &SYM);
        assert_ne!(flip(&d), d);
    }

    #[test]
    fn slot_degrees_at_weight_zero() {
        let alphabet = [letter("x")].into_iter().collect();
        for word in enumerate_words(&alphabet, 4) {
            let n = word.total_degree();
            for (a, b) in coproduct_basis(&word, &WeightMode::zero()).keys() {
                assert_eq!(a.total_degree() + b.total_degree(), n, "{word}");
            }
            if !word.is_one() {
                for (a, b) in reduced_coproduct(&word, &WeightMode::zero())
                    .unwrap()
                    .keys()
                {
                    assert!(!a.is_one() && !b.is_one(), "{word}");
                }
            }
        }
    }
}
