//! Lattice cells, lattice diagrams and their determinants.
//!
//! Cells are ordered column first: `(p1,q1) < (p2,q2)` iff `q1 < q2`, or
//! `q1 == q2` and `p1 < p2`. A [`LatticeDiagram`] always stores its cells
//! sorted in this order; [`normalize`] sorts an arbitrary cell list and
//! reports the sign of the sorting permutation.
//!
//! `Δ_L(X;Y) = det ‖ x_i^{p_j} y_i^{q_j} / (p_j! q_j!) ‖`. Every matrix entry
//! is a single monomial, so the Leibniz expansion produces exactly one
//! monomial per permutation and never builds intermediate sums.
//!
//! # Bounded complements
//!
//! The complement of a diagram in the positive quadrant is infinite.
//! [`complement_cells`] takes an explicit box. For the homogeneous rule the
//! box `0..=max_p × 0..=max_q` is enough: a selected complement cell outside
//! that box sits in a column (or above a row) made entirely of holes, so
//! lifting it lands on another hole. Either that hole is selected too, and the
//! argument repeats one row higher, or it is not, and the lifted cell collides
//! with it. A finite selection always ends with a collision, i.e. `ε = 0`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{parse_err, usage, Error, Result};
use crate::partition::Partition;
use crate::perm;
use crate::poly::{Monomial, Polynomial};

/// Largest diagram whose determinant is expanded by default.
pub const DEFAULT_DELTA_CAP: usize = 9;

/// Lattice cell in row `p`, column `q` (both 0-based). Negative coordinates
/// are representable; they only appear after moving cells and force `Δ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub p: i64,
    pub q: i64,
}

impl Cell {
    pub const fn new(p: i64, q: i64) -> Cell {
        Cell { p, q }
    }

    pub fn is_valid(&self) -> bool {
        self.p >= 0 && self.q >= 0
    }

    pub fn transposed(&self) -> Cell {
        Cell::new(self.q, self.p)
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.q, self.p).cmp(&(other.q, other.p))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

pub fn lex_compare(a: Cell, b: Cell) -> std::cmp::Ordering {
    a.cmp(&b)
}

/// Sorts `cells` into lex order. The sign is that of the sorting
/// permutation, or `+1` when two cells coincide.
pub fn normalize(cells: Vec<Cell>) -> (LatticeDiagram, i64) {
    let mut sorted = cells.clone();
    sorted.sort();
    let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
    let sign = if repeated || perm::inversions(&cells).is_multiple_of(2) {
        1
    } else {
        -1
    };
    (LatticeDiagram { cells: sorted }, sign)
}

/// `ε` on an arbitrary cell list: all cells valid and pairwise distinct.
pub fn cells_epsilon(cells: &[Cell]) -> bool {
    if cells.iter().any(|c| !c.is_valid()) {
        return false;
    }
    let mut sorted = cells.to_vec();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeDiagram {
    cells: Vec<Cell>,
}

impl LatticeDiagram {
    /// Builds a diagram from cells that must already be in lex order.
    pub fn from_sorted(cells: Vec<Cell>) -> Result<LatticeDiagram> {
        if cells.windows(2).any(|w| w[0] > w[1]) {
            return usage("cells are not in lexicographic order");
        }
        Ok(LatticeDiagram { cells })
    }

    /// Sorts the cells, discarding the sign.
    pub fn from_cells(cells: Vec<Cell>) -> LatticeDiagram {
        normalize(cells).0
    }

    pub fn empty() -> LatticeDiagram {
        LatticeDiagram { cells: vec![] }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn epsilon(&self) -> bool {
        cells_epsilon(&self.cells)
    }

    /// `(|p|, |q|)`.
    pub fn bidegree(&self) -> (i64, i64) {
        (
            self.cells.iter().map(|c| c.p).sum(),
            self.cells.iter().map(|c| c.q).sum(),
        )
    }

    pub fn max_p(&self) -> Option<i64> {
        self.cells.iter().map(|c| c.p).max()
    }

    pub fn max_q(&self) -> Option<i64> {
        self.cells.iter().map(|c| c.q).max()
    }

    /// Parses `p,q;p,q;...`, returning the sorted diagram and the sign of the
    /// reordering.
    pub fn parse_signed(s: &str) -> Result<(LatticeDiagram, i64)> {
        let s = s.trim();
        if s.is_empty() {
            return parse_err("empty diagram");
        }
        let mut cells = Vec::new();
        for pair in s.split(';') {
            let (p, q) = pair
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("cell {pair:?} is not of the form p,q")))?;
            let coord = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {t:?} in {pair:?}")))
            };
            cells.push(Cell::new(coord(p)?, coord(q)?));
        }
        Ok(normalize(cells))
    }
}

impl FromStr for LatticeDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<LatticeDiagram> {
        Ok(LatticeDiagram::parse_signed(s)?.0)
    }
}

impl fmt::Display for LatticeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for LatticeDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn epsilon(l: &LatticeDiagram) -> bool {
    l.epsilon()
}

/// Ferrers diagram `((i,j) : 0 ≤ i < k, 0 ≤ j < μ_{i+1})`, lex sorted.
pub fn ferrers(mu: &Partition) -> LatticeDiagram {
    let cells = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| Cell::new(i as i64, j as i64)))
        .collect();
    LatticeDiagram::from_cells(cells)
}

/// Cells of the box `0..=row_bound × 0..=col_bound` not in `l`, lex sorted.
pub fn complement_cells(l: &LatticeDiagram, row_bound: i64, col_bound: i64) -> Vec<Cell> {
    let mut out = Vec::new();
    for q in 0..=col_bound {
        for p in 0..=row_bound {
            let c = Cell::new(p, q);
            if l.cells.binary_search(&c).is_err() {
                out.push(c);
            }
        }
    }
    out
}

/// Transposes every cell and re-sorts. `Δ_{Lᵗ}(X;Y) = sign · Δ_L(Y;X)`.
pub fn transpose(l: &LatticeDiagram) -> (LatticeDiagram, i64) {
    normalize(l.cells.iter().map(Cell::transposed).collect())
}

fn factorial(n: i64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn delta(l: &LatticeDiagram) -> Result<Polynomial> {
    delta_with_cap(l, DEFAULT_DELTA_CAP)
}

/// Expands `Δ_L` by the Leibniz formula, refusing diagrams with more than
/// `cap` cells.
pub fn delta_with_cap(l: &LatticeDiagram, cap: usize) -> Result<Polynomial> {
    let n = l.len();
    if n == 0 {
        return usage("the determinant of an empty diagram is not defined");
    }
    if n > cap {
        return Err(Error::Resource(format!(
            "diagram has {n} cells, determinant expansion is capped at {cap}"
        )));
    }
    if !l.epsilon() {
        return Ok(Polynomial::zero(n));
    }
    let norm: BigInt = l
        .cells
        .iter()
        .map(|c| factorial(c.p) * factorial(c.q))
        .product();
    let unit = BigRational::new(BigInt::one(), norm);
    let neg_unit = -unit.clone();
    let mut terms = Vec::new();
    for (sigma, sign) in perm::signed_permutations(n) {
        let mut x = vec![0u32; n];
        let mut y = vec![0u32; n];
        for (j, &row) in sigma.iter().enumerate() {
            x[row] = l.cells[j].p as u32;
            y[row] = l.cells[j].q as u32;
        }
        let c = if sign > 0 {
            unit.clone()
        } else {
            neg_unit.clone()
        };
        terms.push((Monomial::new(x, y)?, c));
    }
    Polynomial::from_terms(n, terms)
}

/// Formal integer combination of lattice diagrams. Only diagrams with
/// `ε = 1` are kept; like diagrams are combined immediately.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedDiagramSum {
    terms: BTreeMap<LatticeDiagram, i64>,
}

impl SignedDiagramSum {
    pub fn new() -> SignedDiagramSum {
        SignedDiagramSum::default()
    }

    pub fn add(&mut self, d: LatticeDiagram, coeff: i64) {
        if coeff == 0 || !d.epsilon() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// Adds an unsorted cell list, folding the sorting sign into the
    /// coefficient.
    pub fn add_cells(&mut self, cells: Vec<Cell>, coeff: i64) {
        if !cells_epsilon(&cells) {
            return;
        }
        let (d, sign) = normalize(cells);
        self.add(d, sign * coeff);
    }

    pub fn merge(&mut self, other: &SignedDiagramSum) {
        for (d, &c) in &other.terms {
            self.add(d.clone(), c);
        }
    }

    pub fn scaled(&self, factor: i64) -> SignedDiagramSum {
        let mut out = SignedDiagramSum::new();
        for (d, &c) in &self.terms {
            out.add(d.clone(), c * factor);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeDiagram, i64)> {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    pub fn coefficient(&self, d: &LatticeDiagram) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(d, c)| serde_json::json!({ "coeff": c, "diagram": d.to_string() }))
                .collect(),
        )
    }
}

impl fmt::Display for SignedDiagramSum {
    /// One `<coeff> * [p,q;...]` line per diagram; the empty sum prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{c:+} * [{d}]")?;
        }
        Ok(())
    }
}

impl FromStr for SignedDiagramSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignedDiagramSum> {
        let mut out = SignedDiagramSum::new();
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (coeff, rest) = line
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("bad sum line {line:?}")))?;
            let coeff: i64 = coeff
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in {line:?}")))?;
            let body = rest
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("diagram not bracketed in {line:?}")))?;
            let (d, sign) = LatticeDiagram::parse_signed(body)?;
            out.add(d, sign * coeff);
        }
        Ok(out)
    }
}
