//! Sparse formal linear combinations over `Coeff`.
//!
//! `Combination<K>` is the common carrier for algebra elements (`K = Rbw`),
//! tensors of two (`K = (Rbw, Rbw)`) and of three words.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::coeffs::{Coeff, WeightMode};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Coeff::one())
    }

    pub fn term(key: K, coeff: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (K, Coeff)>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Coeff> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Coeff> {
        self.terms.keys()
    }

    /// Adds `coeff * key`, removing the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, scale: &Coeff, other: &Self) {
        if scale.is_zero() {
            return;
        }
        let unit = scale.is_one();
        for (k, c) in &other.terms {
            let c = if unit { c.clone() } else { scale * c };
            self.add_term(k.clone(), c);
        }
    }

    pub fn scale(&self, scale: &Coeff) -> Self {
        let mut out = Self::zero();
        out.add_scaled(scale, self);
        out
    }

    /// Specializes every coefficient; terms that vanish are dropped.
    pub fn specialize(&self, mode: &WeightMode) -> Self {
        match mode {
            WeightMode::Symbolic => self.clone(),
            WeightMode::Numeric(_) => Self::from_terms(
                self.terms
                    .iter()
                    .map(|(k, c)| (k.clone(), c.specialize(mode))),
            ),
        }
    }

    /// Linear map on keys: each basis key is sent to a combination.
    pub fn flat_map<L, F>(&self, mut f: F) -> Combination<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Combination<L>,
    {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Relabels keys; colliding images are summed.
    pub fn map_keys<L, F>(&self, mut f: F) -> Combination<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> L,
    {
        Combination::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter<F>(&self, mut pred: F) -> Self
    where
        F: FnMut(&K) -> bool,
    {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<K: Ord> IntoIterator for Combination<K> {
    type Item = (K, Coeff);
    type IntoIter = btree_map::IntoIter<K, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, K, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coeff)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;

    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;

    fn add(mut self, rhs: Combination<K>) -> Combination<K> {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;

    fn neg(self) -> Combination<K> {
        Combination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;

    fn neg(self) -> Combination<K> {
        -&self
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;

    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_scaled(&Coeff::integer(-1), rhs);
        out
    }
}

impl<K: Ord + Clone> Sub for Combination<K> {
    type Output = Combination<K>;

    fn sub(self, rhs: Combination<K>) -> Combination<K> {
        &self - &rhs
    }
}
