//! The free Rota-Baxter algebra: linear combinations of words with the
//! diamond product and the bracket operator `P`.

use std::collections::BTreeSet;

use crate::coeffs::{Coeff, WeightMode};
use crate::combination::Combination;
use crate::words::{Item, Letter, Rbw};

/// An element of the free Rota-Baxter algebra.
pub type LinComb = Combination<Rbw>;

impl Combination<Rbw> {
    /// The unit `1`.
    pub fn one() -> Self {
        Self::basis(Rbw::one())
    }

    pub fn scalar(c: Coeff) -> Self {
        Self::term(Rbw::one(), c)
    }

    pub fn letter(letter: Letter) -> Self {
        Self::basis(Rbw::letter(letter))
    }

    /// Letters occurring anywhere in the support.
    pub fn letters(&self) -> BTreeSet<Letter> {
        self.keys().flat_map(Rbw::letters).collect()
    }
}

pub fn add(a: &LinComb, b: &LinComb) -> LinComb {
    a + b
}

pub fn scale(c: &Coeff, a: &LinComb) -> LinComb {
    a.scale(c)
}

/// `P`: the linear extension of `w ↦ ⌊w⌋`.
pub fn rb_operator(a: &LinComb) -> LinComb {
    a.map_keys(|w| Rbw::bracket(w.clone()))
}

/// Product of two basis words.
///
/// Words concatenate unless the last item of `u` and the first item of `v`
/// are both brackets; then the boundary pair is expanded by the Rota-Baxter
/// relation and each resulting bracket is spliced back between the outer
/// items.
pub fn diamond_basis(u: &Rbw, v: &Rbw, mode: &WeightMode) -> LinComb {
    if let Some(uv) = u.concat(v) {
        return LinComb::basis(uv);
    }
    let (Some(Item::Bracket(a)), Some(Item::Bracket(b))) = (u.last(), v.first()) else {
        unreachable!("concat only fails on a bracket-bracket boundary");
    };
    let head = &u.items()[..u.width() - 1];
    let tail = &v.items()[1..];
    bracket_product(a, b, mode).map_keys(|boundary| {
        let mut items = Vec::with_capacity(head.len() + 1 + tail.len());
        items.extend_from_slice(head);
        items.extend_from_slice(boundary.items());
        items.extend_from_slice(tail);
        // head ends in a letter (or is empty) and tail starts with one.
        Rbw::from_items_unchecked(items)
    })
}

/// `⌊a⌋ ⋄ ⌊b⌋ = ⌊a ⋄ ⌊b⌋⌋ + ⌊⌊a⌋ ⋄ b⌋ + λ⌊a ⋄ b⌋`.
fn bracket_product(a: &Rbw, b: &Rbw, mode: &WeightMode) -> LinComb {
    let pa = Rbw::bracket(a.clone());
    let pb = Rbw::bracket(b.clone());
    let mut inner = diamond_basis(a, &pb, mode);
    inner += &diamond_basis(&pa, b, mode);
    let lambda = mode.lambda();
    if !lambda.is_zero() {
        inner.add_scaled(&lambda, &diamond_basis(a, b, mode));
    }
    rb_operator(&inner)
}

/// Bilinear extension of [`diamond_basis`]. Under a numeric weight the
/// input coefficients are specialized first.
pub fn diamond(a: &LinComb, b: &LinComb, mode: &WeightMode) -> LinComb {
    let a = a.specialize(mode);
    let b = b.specialize(mode);
    let mut out = LinComb::zero();
    for (u, cu) in &a {
        for (v, cv) in &b {
            out.add_scaled(&(cu * cv), &diamond_basis(u, v, mode));
        }
    }
    out
}

/// Diamond product of a sequence, folded left to right. The empty product
/// is `1`.
pub fn diamond_all<'a, I>(factors: I, mode: &WeightMode) -> LinComb
where
    I: IntoIterator<Item = &'a LinComb>,
{
    factors
        .into_iter()
        .fold(LinComb::one(), |acc, f| diamond(&acc, f, mode))
}

/// Whether `P(u)P(v) = P(uP(v)) + P(P(u)v) + λP(uv)` holds exactly.
pub fn check_rota_baxter(u: &LinComb, v: &LinComb, mode: &WeightMode) -> bool {
    let pu = rb_operator(u);
    let pv = rb_operator(v);
    let lhs = diamond(&pu, &pv, mode);
    let mut rhs = rb_operator(&diamond(u, &pv, mode));
    rhs += &rb_operator(&diamond(&pu, v, mode));
    rhs.add_scaled(&mode.lambda(), &rb_operator(&diamond(u, v, mode)));
    lhs == rhs.specialize(mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_words;

    fn letter(n: &str) -> Letter {
        Letter::new(n).unwrap()
    }

    fn w(n: &str) -> Rbw {
        Rbw::letter(letter(n))
    }

    fn p(inner: Rbw) -> Rbw {
        Rbw::bracket(inner)
    }

    fn word(items: Vec<Item>) -> Rbw {
        Rbw::new(items).unwrap()
    }

    fn lc(terms: Vec<(Rbw, Coeff)>) -> LinComb {
        LinComb::from_terms(terms)
    }

    #[test]
    fn module_examples() {
        let x = LinComb::basis(w("x"));
        let minus_x = LinComb::term(w("x"), Coeff::integer(-1));
        assert!(add(&x, &minus_x).is_zero());
        assert_eq!(
            scale(&Coeff::lambda(), &LinComb::one()),
            LinComb::scalar(Coeff::lambda())
        );
        let y2 = LinComb::term(w("y"), Coeff::integer(2));
        let sum = add(&x, &y2);
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coeff(&w("x")), Coeff::one());
        assert_eq!(sum.coeff(&w("y")), Coeff::integer(2));
    }

    #[test]
    fn rb_operator_examples() {
        assert_eq!(rb_operator(&LinComb::one()), LinComb::basis(p(Rbw::one())));
        assert_eq!(
            rb_operator(&LinComb::term(w("x"), Coeff::integer(2))),
            LinComb::term(p(w("x")), Coeff::integer(2))
        );
        assert!(rb_operator(&LinComb::zero()).is_zero());
    }

    #[test]
    fn diamond_basis_examples() {
        let p1 = p(Rbw::one());
        let expected = lc(vec![
            (p(p1.clone()), Coeff::integer(2)),
            (p1.clone(), Coeff::lambda()),
        ]);
        assert_eq!(diamond_basis(&p1, &p1, &WeightMode::Symbolic), expected);

        let xy = Rbw::from_letters(["x", "y"]).unwrap();
        assert_eq!(
            diamond_basis(&w("x"), &w("y"), &WeightMode::Symbolic),
            LinComb::basis(xy.clone())
        );

        let expected = lc(vec![
            (
                p(word(vec![Item::Atom(letter("x")), Item::Bracket(w("y"))])),
                Coeff::one(),
            ),
            (
                p(word(vec![Item::Bracket(w("x")), Item::Atom(letter("y"))])),
                Coeff::one(),
            ),
            (p(xy), Coeff::lambda()),
        ]);
        assert_eq!(
            diamond_basis(&p(w("x")), &p(w("y")), &WeightMode::Symbolic),
            expected
        );
    }

    #[test]
    fn splice_at_bracket_boundary() {
        // x⌊1⌋ ⋄ ⌊1⌋y, expanded by hand: x(⌊1⌋⋄⌊1⌋)y = 2x⌊⌊1⌋⌋y + λx⌊1⌋y.
        let x = Item::Atom(letter("x"));
        let y = Item::Atom(letter("y"));
        let b1 = Item::Bracket(Rbw::one());
        let left = word(vec![x.clone(), b1.clone()]);
        let right = word(vec![b1.clone(), y.clone()]);
        let expected = lc(vec![
            (
                word(vec![x.clone(), Item::Bracket(p(Rbw::one())), y.clone()]),
                Coeff::integer(2),
            ),
            (word(vec![x, b1, y]), Coeff::lambda()),
        ]);
        assert_eq!(
            diamond_basis(&left, &right, &WeightMode::Symbolic),
            expected
        );
    }

    #[test]
    fn diamond_examples() {
        let a = lc(vec![
            (w("x"), Coeff::integer(3)),
            (p(w("y")), Coeff::lambda()),
        ]);
        assert_eq!(diamond(&a, &LinComb::one(), &WeightMode::Symbolic), a);
        let xy = lc(vec![(w("x"), Coeff::one()), (w("y"), Coeff::one())]);
        let z = LinComb::basis(w("z"));
        let expected = lc(vec![
            (Rbw::from_letters(["x", "z"]).unwrap(), Coeff::one()),
            (Rbw::from_letters(["y", "z"]).unwrap(), Coeff::one()),
        ]);
        assert_eq!(diamond(&xy, &z, &WeightMode::Symbolic), expected);

        let p1 = LinComb::basis(p(Rbw::one()));
        assert_eq!(
            diamond(&p1, &p1, &WeightMode::zero()),
            LinComb::term(p(p(Rbw::one())), Coeff::integer(2))
        );
    }

    #[test]
    fn rota_baxter_examples() {
        let mode = WeightMode::Symbolic;
        assert!(check_rota_baxter(&LinComb::one(), &LinComb::one(), &mode));
        assert!(check_rota_baxter(
            &LinComb::basis(w("x")),
            &LinComb::basis(w("y")),
            &mode
        ));
        assert!(check_rota_baxter(
            &LinComb::zero(),
            &LinComb::basis(w("y")),
            &mode
        ));
    }

    #[test]
    fn factorization_folds_back_to_the_word() {
        let alphabet = [letter("x"), letter("y")].into_iter().collect();
        for word in enumerate_words(&alphabet, 5) {
            let factors: Vec<LinComb> = word
                .diamond_factorization()
                .into_iter()
                .map(|item| LinComb::basis(Rbw::from_items_unchecked(vec![item])))
                .collect();
            assert_eq!(
                diamond_all(&factors, &WeightMode::Symbolic),
                LinComb::basis(word.clone()),
                "{word}"
            );
        }
    }

    #[test]
    fn products_stay_alternating_and_specialize() {
        let alphabet = [letter("x"), letter("y")].into_iter().collect();
        let words = enumerate_words(&alphabet, 3);
        let numeric = WeightMode::Numeric(num_rational::BigRational::from_integer((-2).into()));
        for u in &words {
            for v in &words {
                if u.total_degree() + v.total_degree() > 3 {
                    continue;
                }
                let prod = diamond_basis(u, v, &WeightMode::Symbolic);
                for word in prod.keys() {
                    assert!(Rbw::new(word.diamond_factorization()).is_ok(), "{word}");
                }
                for m in [WeightMode::zero(), numeric.clone()] {
                    assert_eq!(prod.specialize(&m), diamond_basis(u, v, &m), "{u} {v} {m}");
                }
                let at_zero = diamond_basis(u, v, &WeightMode::zero());
                for word in at_zero.keys() {
                    assert_eq!(word.total_degree(), u.total_degree() + v.total_degree());
                }
            }
        }
    }
}
