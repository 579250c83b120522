//! Exact sparse multivariate polynomials with integer coefficients.
//!
//! Variables come in seven families: the doubly indexed tableau families
//! `x[k,c]`, `y[l,c]`, `f[k,c]`, the singly indexed specializations `xs[k]`,
//! `ys[l]`, the shift parameters `a[s]`, and the lone interpolation variable
//! `t`.  Monomials are kept sorted in graded lexicographic order, so every
//! polynomial has a single canonical form and equality is literal equality
//! of the underlying maps.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers,
//! and evaluation produces arbitrary-precision rationals.

use crate::error::{Error, Result};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::BigInt;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Variable families, ordered: `x < y < xs < ys < a < f < t`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    X,
    Y,
    Xs,
    Ys,
    A,
    F,
    T,
}

/// A single variable: a family plus up to two integer indices.
///
/// `X`, `Y`, `F` use both indices (rank, content); `Xs`, `Ys`, `A` use only
/// the first; `T` uses neither.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    pub family: Family,
    pub i: i64,
    pub j: i64,
}

/// `x[k,c]`
pub fn x(k: usize, c: i64) -> Variable {
    Variable { family: Family::X, i: k as i64, j: c }
}

/// `y[l,c]`
pub fn y(l: usize, c: i64) -> Variable {
    Variable { family: Family::Y, i: l as i64, j: c }
}

/// `xs[k]`
pub fn xs(k: usize) -> Variable {
    Variable { family: Family::Xs, i: k as i64, j: 0 }
}

/// `ys[l]`
pub fn ys(l: usize) -> Variable {
    Variable { family: Family::Ys, i: l as i64, j: 0 }
}

/// `a[s]`
pub fn a(s: i64) -> Variable {
    Variable { family: Family::A, i: s, j: 0 }
}

/// `f[k,c]`
pub fn f(k: usize, c: i64) -> Variable {
    Variable { family: Family::F, i: k as i64, j: c }
}

/// `t`
pub fn t() -> Variable {
    Variable { family: Family::T, i: 0, j: 0 }
}

impl fmt::Display for Variable {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(out, "x[{},{}]", self.i, self.j),
            Family::Y => write!(out, "y[{},{}]", self.i, self.j),
            Family::Xs => write!(out, "xs[{}]", self.i),
            Family::Ys => write!(out, "ys[{}]", self.i),
            Family::A => write!(out, "a[{}]", self.i),
            Family::F => write!(out, "f[{},{}]", self.i, self.j),
            Family::T => write!(out, "t"),
        }
    }
}

/// A power product of variables.  Factors are sorted by variable and carry
/// strictly positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: Variable) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs, merging
    /// duplicates and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map: BTreeMap<Variable, u64> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e as u64;
            }
        }
        Monomial {
            factors: map.into_iter().map(|(v, e)| (v, e as u32)).collect(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => {
                    factors.push(self.factors[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(other.factors[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((self.factors[i].0, self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial { factors }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order: higher total degree wins; on equal
    /// degree, the monomial with the larger exponent on the earliest
    /// differing variable wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.factors.get(i), other.factors.get(j)) {
                    (None, None) => return Ordering::Equal,
                    // The side that still has factors has positive exponent
                    // on a variable where the other side has zero.
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        // Earlier variable present only on one side: that
                        // side has the larger exponent there.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            ord => return ord,
                        },
                    },
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(out, "1");
        }
        for (idx, (v, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(out, "*")?;
            }
            write!(out, "{v}")?;
            if *e > 1 {
                write!(out, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial: a map from monomials to nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::from_big(Monomial::one(), BigInt::from(c))
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::from_big(Monomial::var(v), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        Polynomial::from_big(m, BigInt::from(c))
    }

    fn from_big(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order (the display order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * m` in place.
    pub fn add_monomial(&mut self, m: Monomial, c: i64) {
        self.add_term(m, BigInt::from(c));
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The set of families that actually occur.
    pub fn families_used(&self) -> BTreeSet<Family> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v.family))
            .collect()
    }

    /// The set of variables that actually occur.
    pub fn variables_used(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Replaces each variable `v` with `subst(v)` where the closure returns
    /// `Some`; variables mapped to `None` are kept.
    pub fn substitute_with(&self, subst: impl Fn(&Variable) -> Option<Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::from_big(Monomial::one(), c.clone());
            for &(v, e) in m.factors() {
                let factor = match subst(&v) {
                    Some(p) => p.pow(e),
                    None => Polynomial::from_big(
                        Monomial::from_pairs([(v, e)]),
                        BigInt::one(),
                    ),
                };
                term = &term * &factor;
            }
            out += &term;
        }
        out
    }

    /// Renames every variable, re-sorting monomials afterwards.
    pub fn map_variables(&self, rename: impl Fn(&Variable) -> Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let renamed =
                Monomial::from_pairs(m.factors().iter().map(|&(v, e)| (rename(&v), e)));
            out.add_term(renamed, c.clone());
        }
        out
    }

    /// The content shift: `x[k,c] -> x[k,c+t]`, `y[l,c] -> y[l,c+t]`,
    /// `a[s] -> a[s+t]`; every other family is fixed.
    pub fn tau_shift(&self, t: i64) -> Polynomial {
        self.map_variables(|v| match v.family {
            Family::X | Family::Y => Variable { family: v.family, i: v.i, j: v.j + t },
            Family::A => Variable { family: Family::A, i: v.i + t, j: 0 },
            _ => *v,
        })
    }

    /// Evaluates exactly over the rationals.  Every variable that occurs
    /// must be assigned.
    pub fn eval_rational(
        &self,
        assign: impl Fn(&Variable) -> Option<BigRational>,
    ) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for &(v, e) in m.factors() {
                let val = assign(&v).ok_or(Error::UnassignedVariable(v))?;
                for _ in 0..e {
                    term *= &val;
                }
            }
            total += term;
        }
        Ok(total)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl MulAssign<&Polynomial> for Polynomial {
    fn mul_assign(&mut self, rhs: &Polynomial) {
        let product = &*self * rhs;
        *self = product;
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_binop_by_value {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop_by_value!(Add, add);
forward_binop_by_value!(Sub, sub);
forward_binop_by_value!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: terms in descending monomial order, joined with
    /// ` + ` / ` - `; unit coefficients are elided except on the constant
    /// term.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(out, "-")?;
                }
            } else if negative {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(out, "{abs}")?;
            } else if abs.is_one() {
                write!(out, "{m}")?;
            } else {
                write!(out, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact determinant of a square polynomial matrix, by cofactor expansion
/// along the last row with memoization over column subsets.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare);
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    if n > 24 {
        return Err(Error::TooLarge {
            estimate: 1u128 << n,
            limit: 1u128 << 24,
        });
    }
    // minors[s] = det of the submatrix on rows 0..popcount(s) and the
    // column set s; subsets are filled in increasing mask order, so every
    // strict submask is ready before it is needed.
    let mut minors: Vec<Option<Polynomial>> = vec![None; 1 << n];
    minors[0] = Some(Polynomial::one());
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = &matrix[k - 1];
        let mut acc = Polynomial::zero();
        let mut pos = 0usize;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let sub = minors[mask & !(1 << col)]
                .as_ref()
                .expect("submask computed earlier");
            let term = row[col].clone() * sub;
            if (k - 1 + pos).is_multiple_of(2) {
                acc += &term;
            } else {
                acc -= &term;
            }
            pos += 1;
        }
        minors[mask] = Some(acc);
    }
    Ok(minors[(1 << n) - 1].take().expect("full mask computed"))
}
