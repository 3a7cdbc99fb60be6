//! Rota-Baxter words: alternating sequences of letters and bracketed
//! subwords. These are the basis of the free Rota-Baxter algebra.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Identifiers the expression grammar reserves; they cannot name letters.
pub const RESERVED: [&str; 5] = ["lambda", "P", "S", "cop", "eps"];

/// An alphabet symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(name: &str) -> Result<Self> {
        if is_identifier(name) && !RESERVED.contains(&name) {
            Ok(Letter(name.into()))
        } else {
            Err(Error::InvalidLetter(name.to_owned()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One factor of a word: a letter or a bracketed word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Atom(Letter),
    Bracket(Rbw),
}

impl Item {
    pub fn is_bracket(&self) -> bool {
        matches!(self, Item::Bracket(_))
    }

    pub fn degree(&self) -> usize {
        match self {
            Item::Atom(_) => 1,
            Item::Bracket(inner) => 1 + inner.total_degree(),
        }
    }
}

/// A Rota-Baxter word. The empty item sequence is the unit word `1`.
///
/// Items are stored one letter at a time, so the item sequence is exactly
/// the diamond factorization of the word.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rbw {
    items: Arc<[Item]>,
}

/// Block of the standard decomposition: a maximal letter run or a single
/// bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StdBlock {
    LetterRun(Vec<Letter>),
    BracketBlock(Rbw),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    /// Bracket occurrences at every nesting level.
    pub deg_p: usize,
    /// Letter occurrences at every nesting level.
    pub deg_x: usize,
    pub total: usize,
}

impl Rbw {
    /// Validates alternation. Inner words of brackets are already `Rbw`s and
    /// therefore valid.
    pub fn new(items: Vec<Item>) -> Result<Self> {
        if let Some(position) = items
            .windows(2)
            .position(|pair| pair[0].is_bracket() && pair[1].is_bracket())
        {
            return Err(Error::AdjacentBrackets { position });
        }
        Ok(Self::from_items_unchecked(items))
    }

    pub(crate) fn from_items_unchecked(items: Vec<Item>) -> Self {
        Rbw {
            items: items.into(),
        }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn letter(letter: Letter) -> Self {
        Self::from_items_unchecked(vec![Item::Atom(letter)])
    }

    /// `⌊w⌋`.
    pub fn bracket(inner: Rbw) -> Self {
        Self::from_items_unchecked(vec![Item::Bracket(inner)])
    }

    /// Word from letter names, e.g. `["x", "y"]` is `xy`.
    pub fn from_letters<'a, I>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let items = names
            .into_iter()
            .map(|n| Letter::new(n).map(Item::Atom))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_items_unchecked(items))
    }

    pub fn is_one(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn first(&self) -> Option<&Item> {
        self.items.first()
    }

    pub fn last(&self) -> Option<&Item> {
        self.items.last()
    }

    /// Concatenation, or `None` when it would put two brackets side by side.
    pub fn concat(&self, other: &Rbw) -> Option<Rbw> {
        if self.is_one() {
            return Some(other.clone());
        }
        if other.is_one() {
            return Some(self.clone());
        }
        if self.last().is_some_and(Item::is_bracket) && other.first().is_some_and(Item::is_bracket)
        {
            return None;
        }
        let mut items = Vec::with_capacity(self.items.len() + other.items.len());
        items.extend_from_slice(&self.items);
        items.extend_from_slice(&other.items);
        Some(Self::from_items_unchecked(items))
    }

    /// Maximal bracket nesting.
    pub fn depth(&self) -> usize {
        self.items
            .iter()
            .map(|item| match item {
                Item::Atom(_) => 0,
                Item::Bracket(inner) => 1 + inner.depth(),
            })
            .max()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        let mut deg = Degree {
            deg_p: 0,
            deg_x: 0,
            total: 0,
        };
        for item in self.items.iter() {
            match item {
                Item::Atom(_) => deg.deg_x += 1,
                Item::Bracket(inner) => {
                    let d = inner.degree();
                    deg.deg_p += 1 + d.deg_p;
                    deg.deg_x += d.deg_x;
                }
            }
        }
        deg.total = deg.deg_p + deg.deg_x;
        deg
    }

    pub fn total_degree(&self) -> usize {
        self.items.iter().map(Item::degree).sum()
    }

    pub fn standard_decomposition(&self) -> Result<Vec<StdBlock>> {
        if self.is_one() {
            return Err(Error::EmptyWord);
        }
        let mut blocks = Vec::new();
        let mut run: Vec<Letter> = Vec::new();
        for item in self.items.iter() {
            match item {
                Item::Atom(l) => run.push(l.clone()),
                Item::Bracket(inner) => {
                    if !run.is_empty() {
                        blocks.push(StdBlock::LetterRun(std::mem::take(&mut run)));
                    }
                    blocks.push(StdBlock::BracketBlock(inner.clone()));
                }
            }
        }
        if !run.is_empty() {
            blocks.push(StdBlock::LetterRun(run));
        }
        Ok(blocks)
    }

    /// Number of blocks in the standard decomposition.
    pub fn breadth(&self) -> Result<usize> {
        self.standard_decomposition().map(|b| b.len())
    }

    /// The unique alternating sequence of letters and brackets whose diamond
    /// product is this word. Empty for `1`.
    pub fn diamond_factorization(&self) -> Vec<Item> {
        self.items.to_vec()
    }

    pub fn width(&self) -> usize {
        self.items.len()
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        for item in self.items.iter() {
            match item {
                Item::Atom(l) => {
                    out.insert(l.clone());
                }
                Item::Bracket(inner) => inner.collect_letters(out),
            }
        }
    }
}

impl fmt::Display for Rbw {
    /// Canonical text: items joined by `*`, brackets as `P(...)`, the empty
    /// word as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match item {
                Item::Atom(l) => f.write_str(l.name())?,
                Item::Bracket(inner) => write!(f, "P({inner})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Rbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sort key for canonical output: total degree, then printed form.
pub fn canonical_key(w: &Rbw) -> (usize, String) {
    (w.total_degree(), w.to_string())
}

/// Every word over `alphabet` of total degree at most `max_total_degree`,
/// in canonical order.
pub fn enumerate_words(alphabet: &BTreeSet<Letter>, max_total_degree: usize) -> Vec<Rbw> {
    let by_degree = words_by_degree(alphabet, max_total_degree);
    by_degree.into_iter().flatten().collect()
}

/// `result[n]` holds the words of total degree exactly `n`, canonically
/// sorted.
pub fn words_by_degree(alphabet: &BTreeSet<Letter>, max_total_degree: usize) -> Vec<Vec<Rbw>> {
    let mut by_degree: Vec<Vec<Rbw>> = Vec::with_capacity(max_total_degree + 1);
    for n in 0..=max_total_degree {
        // Items of degree d: letters (d = 1) and brackets around degree d-1 words.
        let items_of = |d: usize, words: &[Vec<Rbw>]| -> Vec<Item> {
            let mut items = Vec::new();
            if d == 1 {
                items.extend(alphabet.iter().cloned().map(Item::Atom));
            }
            if d >= 1 {
                items.extend(words[d - 1].iter().cloned().map(Item::Bracket));
            }
            items
        };
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        extend_sequences(n, &mut prefix, &by_degree, &items_of, &mut out);
        out.sort_by_cached_key(canonical_key);
        by_degree.push(out);
    }
    by_degree
}

fn extend_sequences<F>(
    remaining: usize,
    prefix: &mut Vec<Item>,
    words: &[Vec<Rbw>],
    items_of: &F,
    out: &mut Vec<Rbw>,
) where
    F: Fn(usize, &[Vec<Rbw>]) -> Vec<Item>,
{
    if remaining == 0 {
        out.push(Rbw::from_items_unchecked(prefix.clone()));
        return;
    }
    let after_bracket = prefix.last().is_some_and(Item::is_bracket);
    for d in 1..=remaining {
        for item in items_of(d, words) {
            if after_bracket && item.is_bracket() {
                continue;
            }
            prefix.push(item);
            extend_sequences(remaining - d, prefix, words, items_of, out);
            prefix.pop();
        }
    }
}
