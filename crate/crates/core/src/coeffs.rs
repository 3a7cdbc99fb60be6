//! Scalars: univariate polynomials in the formal weight `lambda` with exact
//! rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `lambda` over the rationals, stored sparsely.
///
/// The map never holds a zero coefficient, so the zero polynomial is the
/// empty map and structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coeff {
    terms: BTreeMap<u32, BigRational>,
}

impl Coeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The formal weight itself.
    pub fn lambda() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(value: BigRational) -> Self {
        Self::monomial(value, 0)
    }

    pub fn integer(value: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn monomial(value: BigRational, exponent: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(exponent, value);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, BigRational)>,
    {
        let mut out = Self::zero();
        for (exp, value) in terms {
            out.add_term(exp, value);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial has no `lambda` dependence.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Constant term (the value at `lambda = 0`).
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&0)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn add_term(&mut self, exp: u32, value: BigRational) {
        if value.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += value;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, value);
            }
        }
    }

    /// Evaluates at `lambda = value`.
    pub fn evaluate(&self, value: &BigRational) -> BigRational {
        // Horner over the sparse exponents, highest first.
        let mut acc = BigRational::zero();
        let mut prev: Option<u32> = None;
        for (&exp, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= pow(value, p - exp);
            }
            acc += c;
            prev = Some(exp);
        }
        if let Some(p) = prev {
            acc *= pow(value, p);
        }
        acc
    }

    /// Applies a weight mode: symbolic leaves the value alone, numeric
    /// evaluates to a constant.
    pub fn specialize(&self, mode: &WeightMode) -> Coeff {
        match mode {
            WeightMode::Symbolic => self.clone(),
            WeightMode::Numeric(v) => {
                if self.is_constant() {
                    self.clone()
                } else {
                    Coeff::constant(self.evaluate(v))
                }
            }
        }
    }

    pub(crate) fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.len() > 1 {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

fn pow(base: &BigRational, exp: u32) -> BigRational {
    num_traits::pow(base.clone(), exp as usize)
}

impl From<i64> for Coeff {
    fn from(value: i64) -> Self {
        Coeff::integer(value)
    }
}

impl From<BigRational> for Coeff {
    fn from(value: BigRational) -> Self {
        Coeff::constant(value)
    }
}

impl Add for &Coeff {
    type Output = Coeff;

    fn add(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Coeff {
    type Output = Coeff;

    fn add(mut self, rhs: Coeff) -> Coeff {
        for (exp, c) in rhs.terms {
            self.add_term(exp, c);
        }
        self
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        for (&exp, c) in &rhs.terms {
            self.add_term(exp, c.clone());
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;

    fn neg(self) -> Coeff {
        Coeff {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;

    fn neg(self) -> Coeff {
        -&self
    }
}

impl Sub for &Coeff {
    type Output = Coeff;

    fn sub(self, rhs: &Coeff) -> Coeff {
        self + &(-rhs)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;

    fn mul(self, rhs: &Coeff) -> Coeff {
        let mut out = Coeff::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for Coeff {
    type Output = Coeff;

    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

/// Writes a rational as `n` or `n/d`.
pub(crate) fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coeff {
    /// Ascending powers: `3 + 2*lambda - 1/2*lambda^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&exp, c)) in self.terms.iter().enumerate() {
            let magnitude = if i == 0 {
                c.clone()
            } else if c.is_negative() {
                f.write_str(" - ")?;
                -c
            } else {
                f.write_str(" + ")?;
                c.clone()
            };
            if exp == 0 {
                fmt_rational(&magnitude, f)?;
                continue;
            }
            if magnitude == -BigRational::one() {
                f.write_str("-")?;
            } else if !magnitude.is_one() {
                fmt_rational(&magnitude, f)?;
                f.write_str("*")?;
            }
            f.write_str("lambda")?;
            if exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How the weight `lambda` is treated during computation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum WeightMode {
    #[default]
    Symbolic,
    Numeric(BigRational),
}

impl WeightMode {
    pub fn zero() -> Self {
        WeightMode::Numeric(BigRational::zero())
    }

    pub fn is_zero_weight(&self) -> bool {
        matches!(self, WeightMode::Numeric(v) if v.is_zero())
    }

    /// The scalar standing in for `lambda` under this mode.
    pub fn lambda(&self) -> Coeff {
        match self {
            WeightMode::Symbolic => Coeff::lambda(),
            WeightMode::Numeric(v) => Coeff::constant(v.clone()),
        }
    }
}

impl fmt::Display for WeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightMode::Symbolic => f.write_str("symbolic"),
            WeightMode::Numeric(v) => fmt_rational(v, f),
        }
    }
}
