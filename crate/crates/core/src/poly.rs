//! Exact sparse polynomials over the rationals in the two alphabets
//! `X = x1..xn` and `Y = y1..yn`.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to a nonzero [`BigRational`].
//! The map is ordered by the canonical term order, so iteration (reversed)
//! is also the printing order:
//!
//! 1. total degree, larger first;
//! 2. then the x-block, comparing `x_n` first down to `x_1`;
//! 3. then the y-block in the same way.
//!
//! With this order `x2 − x1` and `x2^2/2 − x1^2/2` print exactly like that.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{parse_err, usage, Error, Result};
use crate::perm;

/// Which alphabet a variable (or an operator) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            other => parse_err(format!("unknown axis {other:?}, expected x or y")),
        }
    }
}

/// A single variable `x_i` or `y_i`; `index` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    pub axis: Axis,
    pub index: usize,
}

impl Var {
    pub fn x(index: usize) -> Var {
        Var {
            axis: Axis::X,
            index,
        }
    }

    pub fn y(index: usize) -> Var {
        Var {
            axis: Axis::Y,
            index,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    y: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            x: vec![0; nvars],
            y: vec![0; nvars],
        }
    }

    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Result<Monomial> {
        if x.len() != y.len() || x.is_empty() {
            return usage(format!(
                "monomial exponent vectors must have equal nonzero length, got {} and {}",
                x.len(),
                y.len()
            ));
        }
        Ok(Monomial { x, y })
    }

    pub fn nvars(&self) -> usize {
        self.x.len()
    }

    pub fn xexp(&self) -> &[u32] {
        &self.x
    }

    pub fn yexp(&self) -> &[u32] {
        &self.y
    }

    pub fn exp(&self, var: Var) -> u32 {
        match var.axis {
            Axis::X => self.x[var.index],
            Axis::Y => self.y[var.index],
        }
    }

    fn exp_mut(&mut self, var: Var) -> &mut u32 {
        match var.axis {
            Axis::X => &mut self.x[var.index],
            Axis::Y => &mut self.y[var.index],
        }
    }

    pub fn degree_x(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn degree_y(&self) -> u32 {
        self.y.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.degree_x() + self.degree_y()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }

    /// Applies the operator `op(∂X;∂Y)` to this monomial: returns the
    /// falling-factorial scalar and the quotient monomial, or `None` when
    /// some exponent of `op` exceeds ours.
    fn differentiate_by(&self, op: &Monomial) -> Option<(BigInt, Monomial)> {
        let mut scalar = BigInt::one();
        let mut rest = self.clone();
        let pairs = rest
            .x
            .iter_mut()
            .zip(&op.x)
            .chain(rest.y.iter_mut().zip(&op.y));
        for (e, &d) in pairs {
            if d > *e {
                return None;
            }
            for k in 0..d {
                scalar *= *e - k;
            }
            *e -= d;
        }
        Some((scalar, rest))
    }

    fn permuted(&self, sigma: &[usize]) -> Monomial {
        let mut out = Monomial::one(self.nvars());
        for (i, &s) in sigma.iter().enumerate() {
            out.x[s] = self.x[i];
            out.y[s] = self.y[i];
        }
        out
    }

    fn swapped(&self) -> Monomial {
        Monomial {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.iter().rev().cmp(other.x.iter().rev()))
            .then_with(|| self.y.iter().rev().cmp(other.y.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, exps) in [('x', &self.x), ('y', &self.y)] {
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{name}{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Exact sparse polynomial in `x1..xn, y1..yn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn check_nvars(a: usize, b: usize) -> Result<()> {
    if a != b {
        return usage(format!(
            "polynomials live in different rings: {a} vs {b} variables"
        ));
    }
    Ok(())
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Polynomial {
        Polynomial::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Polynomial {
        Polynomial::from_term(Monomial::one(nvars), c)
    }

    pub fn from_term(m: Monomial, c: BigRational) -> Polynomial {
        let mut p = Polynomial::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(nvars: usize, v: Var) -> Polynomial {
        let mut m = Monomial::one(nvars);
        *m.exp_mut(v) = 1;
        Polynomial::from_term(m, BigRational::one())
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, combining
    /// like terms.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Result<Polynomial> {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            check_nvars(nvars, m.nvars())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in canonical printing order (largest first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The set of `(x-degree, y-degree)` pairs carried by the terms.
    pub fn bidegrees(&self) -> BTreeSet<(u32, u32)> {
        self.terms
            .keys()
            .map(|m| (m.degree_x(), m.degree_y()))
            .collect()
    }

    /// `Some(bidegree)` if every term shares it; `None` for zero or mixed.
    pub fn bihomogeneous_degree(&self) -> Option<(u32, u32)> {
        let degs = self.bidegrees();
        if degs.len() == 1 {
            degs.into_iter().next()
        } else {
            None
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_nvars(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_nvars(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_nvars(self.nvars, other.nvars)?;
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn partial(&self, var: Var) -> Result<Polynomial> {
        if var.index >= self.nvars {
            return usage(format!(
                "variable index {} out of range for {} variables",
                var.index + 1,
                self.nvars
            ));
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            *d.exp_mut(var) -= 1;
            out.add_term(d, c * BigRational::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// `op(∂X;∂Y)` applied to `self`.
    pub fn apply_diff_operator(&self, op: &Polynomial) -> Result<Polynomial> {
        check_nvars(self.nvars, op.nvars)?;
        let mut out = Polynomial::zero(self.nvars);
        for (mo, co) in &op.terms {
            for (mp, cp) in &self.terms {
                if let Some((scalar, rest)) = mp.differentiate_by(mo) {
                    out.add_term(rest, co * cp * BigRational::from_integer(scalar));
                }
            }
        }
        Ok(out)
    }

    /// Diagonal action `σP(X;Y) = P(x_σ(1),..,x_σ(n); y_σ(1),..,y_σ(n))`,
    /// with `sigma` in 0-based one-line notation. Satisfies
    /// `σ(τP) = (σ∘τ)P`.
    pub fn diagonal_action(&self, sigma: &[usize]) -> Result<Polynomial> {
        if sigma.len() != self.nvars || !perm::is_permutation(sigma) {
            return usage(format!(
                "{sigma:?} is not a permutation of {} letters",
                self.nvars
            ));
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(sigma), c.clone()))
                .collect(),
        })
    }

    /// Exchanges the roles of the two alphabets: `P(X;Y) ↦ P(Y;X)`.
    pub fn swap_axes(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swapped(), c.clone()))
                .collect(),
        }
    }

    /// Parses the canonical text form. Both `-` and `−` are accepted as
    /// minus signs.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        if nvars == 0 {
            return usage("polynomials need at least one variable");
        }
        let text = s.replace('−', "-");
        let text = text.trim();
        if text.is_empty() {
            return parse_err("empty polynomial");
        }
        let mut out = Polynomial::zero(nvars);
        let mut negative = false;
        let mut current = String::new();
        let mut pending = false;
        for ch in text.chars() {
            if ch == '+' || ch == '-' {
                if pending {
                    let (m, c) = parse_term(&current, nvars)?;
                    out.add_term(m, if negative { -c } else { c });
                } else if !current.trim().is_empty() {
                    return parse_err(format!("malformed polynomial {s:?}"));
                }
                negative = ch == '-';
                current.clear();
                pending = false;
            } else {
                if !ch.is_whitespace() {
                    pending = true;
                }
                current.push(ch);
            }
        }
        if !pending {
            return parse_err(format!("dangling sign in {s:?}"));
        }
        let (m, c) = parse_term(&current, nvars)?;
        out.add_term(m, if negative { -c } else { c });
        Ok(out)
    }
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

fn parse_term(term: &str, nvars: usize) -> Result<(Monomial, BigRational)> {
    let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    let (body, den) = match term.split_once('/') {
        Some((b, d)) => (
            b,
            d.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?,
        ),
        None => (term.as_str(), BigInt::one()),
    };
    if den.is_zero() || den.is_negative() {
        return parse_err(format!("bad denominator in {term:?}"));
    }
    let mut num = BigInt::one();
    let mut mono = Monomial::one(nvars);
    for factor in body.split('*') {
        let mut chars = factor.chars();
        match chars.next() {
            Some(axis @ ('x' | 'y')) => {
                let rest = chars.as_str();
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (parse_u32(i, "variable index")?, parse_u32(e, "exponent")?),
                    None => (parse_u32(rest, "variable index")?, 1),
                };
                if idx == 0 || idx as usize > nvars {
                    return parse_err(format!("variable {factor:?} outside 1..{nvars}"));
                }
                let var = Var {
                    axis: if axis == 'x' { Axis::X } else { Axis::Y },
                    index: idx as usize - 1,
                };
                *mono.exp_mut(var) += exp;
            }
            Some(c) if c.is_ascii_digit() => {
                num *= factor
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
            }
            _ => return parse_err(format!("bad factor {factor:?} in term {term:?}")),
        }
    }
    Ok((mono, BigRational::new(num, den)))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("−")?,
                (0, false) => {}
                (_, true) => f.write_str(" − ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let num = c.numer().abs();
            let den = c.denom();
            if m.is_one() {
                write!(f, "{num}")?;
            } else if num.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{num}*{m}")?;
            }
            if !den.is_one() {
                write!(f, "/{den}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// Operator impls panic on mismatched rings; use the `checked_*` methods
// when the inputs are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
