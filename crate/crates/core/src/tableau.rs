//! Column tableau families, column-strict Young tableaux and the
//! parenthesization involution Ψ.
//!
//! A [`ColumnTableauFamily`] is a tuple of strictly increasing columns with
//! entries in `1..=n`. Entry `(i, j)` is row `i`, column `j`, both 0-based,
//! with each column read bottom (`i = 0`) to top. The shape is the
//! composition of column lengths.
//!
//! For a partition `λ` with conjugate `λ′` of length `ℓ`, the orbit shapes
//! are `α = σ(λ′+δ) − δ` for `σ ∈ S_ℓ`, `δ = (ℓ−1, …, 1, 0)`, i.e.
//! `α_i = λ′_{σ(i)} + i − σ(i)`. Ψ acts on the union of the families of all
//! orbit shapes. Its fixed points are exactly the column-strict tableaux of
//! shape `λ`; every other tableau is paired with one whose shape sits at
//! `σ·(j, j+1)`, so the two carry opposite signs.
//!
//! Ψ looks for the first "violating" pair of horizontally adjacent cells,
//! scanning rows bottom to top and each row right to left. The pair
//! `(i, j), (i, j+1)` violates when `T(i,j) > T(i,j+1)`, or when column `j`
//! has at most `i` entries while column `j+1` has more. The two-column move
//! is then applied to the stored columns `j` and `j+1` (0-based).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{parse_err, usage, Error, Result};
use crate::partition::{Composition, Partition};
use crate::perm;

pub type Column = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnTableauFamily {
    columns: Vec<Column>,
    max_entry: usize,
}

fn check_column(col: &[usize], n: usize) -> Result<()> {
    if col.iter().any(|&e| e == 0 || e > n) {
        return usage(format!("column {col:?} has entries outside 1..={n}"));
    }
    if col.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invariant(format!(
            "column {col:?} is not strictly increasing"
        )));
    }
    Ok(())
}

impl ColumnTableauFamily {
    pub fn new(columns: Vec<Column>, max_entry: usize) -> Result<ColumnTableauFamily> {
        for col in &columns {
            check_column(col, max_entry)?;
        }
        Ok(ColumnTableauFamily { columns, max_entry })
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn max_entry(&self) -> usize {
        self.max_entry
    }

    pub fn shape(&self) -> Composition {
        Composition(self.columns.iter().map(|c| c.len() as i64).collect())
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.columns.get(col).and_then(|c| c.get(row)).copied()
    }

    /// `|T^{-1}(i)|` for `i = 1..=n`, indexed from 0.
    pub fn content(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_entry];
        for &e in self.columns.iter().flatten() {
            out[e - 1] += 1;
        }
        out
    }

    /// All entries sorted increasingly.
    pub fn word(&self) -> Vec<usize> {
        self.columns.iter().flatten().copied().sorted().collect()
    }

    /// Parses `7,8,10|3,9|4,5,6,8`; `_` is an empty column. The largest
    /// entry is taken as `n` unless `max_entry` is given.
    pub fn parse(s: &str, max_entry: Option<usize>) -> Result<ColumnTableauFamily> {
        let s = s.trim();
        if s.is_empty() {
            return parse_err("empty tableau");
        }
        let mut columns = Vec::new();
        for chunk in s.split('|') {
            let chunk = chunk.trim();
            if chunk == "_" || chunk.is_empty() {
                columns.push(vec![]);
                continue;
            }
            let col = chunk
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            columns.push(col);
        }
        let largest = columns.iter().flatten().copied().max().unwrap_or(0);
        let n = max_entry.unwrap_or(largest.max(1));
        if largest > n {
            return parse_err(format!("entry {largest} exceeds the maximum {n}"));
        }
        ColumnTableauFamily::new(columns, n).map_err(Error::into_parse)
    }

    /// Direct test: partition shape, weakly increasing rows.
    pub fn is_column_strict(&self) -> bool {
        self.shape().is_partition_shape()
            && self
                .columns
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(right, left)| left <= right))
    }

    /// Same question answered by pairing: no adjacent column pair has an
    /// unpaired right parenthesis.
    pub fn is_column_strict_by_pairing(&self) -> bool {
        self.shape().is_partition_shape()
            && self.columns.windows(2).all(|w| {
                word_pair(&w[0], &w[1])
                    .map(|wp| wp.unpaired_rights() == 0)
                    .unwrap_or(false)
            })
    }

    /// First violating adjacent pair in the scan order of Ψ, as `(row, j)`.
    pub fn first_violation(&self) -> Option<(usize, usize)> {
        let height = self.columns.iter().map(Vec::len).max().unwrap_or(0);
        for i in 0..height {
            for j in (0..self.columns.len().saturating_sub(1)).rev() {
                let (left, right) = (&self.columns[j], &self.columns[j + 1]);
                let Some(&r) = right.get(i) else { continue };
                match left.get(i) {
                    None => return Some((i, j)),
                    Some(&l) if l > r => return Some((i, j)),
                    _ => {}
                }
            }
        }
        None
    }
}

impl fmt::Display for ColumnTableauFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, col) in self.columns.iter().enumerate() {
            if j > 0 {
                f.write_str("|")?;
            }
            if col.is_empty() {
                f.write_str("_")?;
            } else {
                write!(f, "{}", col.iter().join(","))?;
            }
        }
        Ok(())
    }
}

impl FromStr for ColumnTableauFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ColumnTableauFamily::parse(s, None)
    }
}

impl Serialize for ColumnTableauFamily {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All `k`-subsets of `1..=n` as increasing columns, in lex order.
pub fn strict_columns(k: usize, n: usize) -> Vec<Column> {
    (1..=n).combinations(k).collect()
}

/// `CT_α`: every tuple of strict columns of the given lengths. Empty when
/// some part is negative.
pub fn enumerate_column_families(alpha: &Composition, n: usize) -> Vec<ColumnTableauFamily> {
    if alpha.has_negative() {
        return vec![];
    }
    let per_column: Vec<Vec<Column>> = alpha
        .parts()
        .iter()
        .map(|&a| strict_columns(a as usize, n))
        .collect();
    if per_column.is_empty() {
        return vec![ColumnTableauFamily {
            columns: vec![],
            max_entry: n,
        }];
    }
    per_column
        .into_iter()
        .multi_cartesian_product()
        .map(|columns| ColumnTableauFamily {
            columns,
            max_entry: n,
        })
        .collect()
}

/// Column-strict Young tableaux of shape `λ` with entries in `1..=n`, in
/// lex order of the column reading word.
pub fn enumerate_cs_tableaux(lambda: &Partition, n: usize) -> Vec<ColumnTableauFamily> {
    let heights = lambda.conjugate();
    let mut out = Vec::new();
    let mut current: Vec<Column> = Vec::new();
    fill_columns(heights.parts(), n, &mut current, &mut out);
    out
}

fn fill_columns(
    heights: &[usize],
    n: usize,
    current: &mut Vec<Column>,
    out: &mut Vec<ColumnTableauFamily>,
) {
    let j = current.len();
    if j == heights.len() {
        out.push(ColumnTableauFamily {
            columns: current.clone(),
            max_entry: n,
        });
        return;
    }
    for col in strict_columns(heights[j], n) {
        let fits = match current.last() {
            Some(prev) => col.iter().zip(prev).all(|(r, l)| l <= r),
            None => true,
        };
        if fits {
            current.push(col);
            fill_columns(heights, n, current, out);
            current.pop();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Paren {
    /// Entry from the left column.
    Left,
    /// Entry from the right column.
    Right,
}

impl Paren {
    fn symbol(self) -> char {
        match self {
            Paren::Left => '(',
            Paren::Right => ')',
        }
    }
}

/// Merged word of two adjacent columns with its parenthesis structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordPair {
    pub word: Vec<usize>,
    pub parens: Vec<Paren>,
    /// `partner[k]` is the position matched with `k`, if any.
    pub partner: Vec<Option<usize>>,
}

impl WordPair {
    pub fn unpaired(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.word.len()).filter(|&k| self.partner[k].is_none())
    }

    pub fn unpaired_rights(&self) -> usize {
        self.unpaired()
            .filter(|&k| self.parens[k] == Paren::Right)
            .count()
    }

    pub fn unpaired_lefts(&self) -> usize {
        self.unpaired()
            .filter(|&k| self.parens[k] == Paren::Left)
            .count()
    }

    pub fn word_string(&self) -> String {
        self.word.iter().join(" ")
    }

    pub fn paren_string(&self) -> String {
        self.parens.iter().map(|p| p.symbol()).join(" ")
    }

    fn from_marks(word: Vec<usize>, parens: Vec<Paren>) -> WordPair {
        let mut partner = vec![None; word.len()];
        let mut open = Vec::new();
        for (k, p) in parens.iter().enumerate() {
            match p {
                Paren::Left => open.push(k),
                Paren::Right => {
                    if let Some(o) = open.pop() {
                        partner[o] = Some(k);
                        partner[k] = Some(o);
                    }
                }
            }
        }
        WordPair {
            word,
            parens,
            partner,
        }
    }

    /// Splits the word back into the two columns.
    pub fn columns(&self) -> (Column, Column) {
        let pick = |side| {
            self.word
                .iter()
                .zip(&self.parens)
                .filter(|(_, &p)| p == side)
                .map(|(&e, _)| e)
                .collect()
        };
        (pick(Paren::Left), pick(Paren::Right))
    }
}

/// Merges two strict columns into a weakly increasing word; a value in both
/// columns is read from the left column first.
pub fn word_pair(a: &[usize], b: &[usize]) -> Result<WordPair> {
    for col in [a, b] {
        if col.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invariant(format!(
                "column {col:?} is not strictly increasing"
            )));
        }
    }
    let mut merged: Vec<(usize, Paren)> = a
        .iter()
        .map(|&e| (e, Paren::Left))
        .chain(b.iter().map(|&e| (e, Paren::Right)))
        .collect();
    merged.sort_by_key(|&(e, p)| (e, p == Paren::Right));
    let (word, parens) = merged.into_iter().unzip();
    Ok(WordPair::from_marks(word, parens))
}

/// The two-column step of Ψ. With `r` unpaired right and `l` unpaired left
/// parentheses:
///
/// * `l ≥ r > 0`: the `l − r + 1` leftmost unpaired `(` become `)`;
/// * `r > l`: the `r − l − 1` rightmost unpaired `)` become `(`.
///
/// The merged word is unchanged and the lengths go from `(a, b)` to
/// `(b − 1, a + 1)`.
pub fn two_column_move(a: &[usize], b: &[usize]) -> Result<(Column, Column)> {
    let wp = word_pair(a, b)?;
    Ok(two_column_move_pair(&wp)?.columns())
}

pub fn two_column_move_pair(wp: &WordPair) -> Result<WordPair> {
    let r = wp.unpaired_rights();
    let l = wp.unpaired_lefts();
    if r == 0 {
        return usage("two-column move needs an unpaired right parenthesis");
    }
    let mut parens = wp.parens.clone();
    if l >= r {
        let lefts: Vec<usize> = wp
            .unpaired()
            .filter(|&k| wp.parens[k] == Paren::Left)
            .collect();
        for &k in lefts.iter().take(l - r + 1) {
            parens[k] = Paren::Right;
        }
    } else {
        let rights: Vec<usize> = wp
            .unpaired()
            .filter(|&k| wp.parens[k] == Paren::Right)
            .collect();
        for &k in rights.iter().rev().take(r - l - 1) {
            parens[k] = Paren::Left;
        }
    }
    Ok(WordPair::from_marks(wp.word.clone(), parens))
}

/// One member of the Jacobi-Trudi orbit of `λ′`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitShape {
    /// One-line notation, 0-based.
    pub sigma: Vec<usize>,
    pub alpha: Composition,
    pub sign: i64,
}

/// The shapes `σ(λ′+δ_ℓ) − δ_ℓ` for all `σ ∈ S_ℓ`.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeOrbit {
    pub lambda: Partition,
    pub lambda_conj: Partition,
    pub ell: usize,
    pub shapes: Vec<OrbitShape>,
    #[serde(skip)]
    index: HashMap<Composition, usize>,
}

impl ShapeOrbit {
    pub fn new(lambda: &Partition) -> ShapeOrbit {
        let lambda_conj = lambda.conjugate();
        let ell = lambda_conj.len();
        let conj = lambda_conj.parts();
        let shapes: Vec<OrbitShape> = perm::signed_permutations(ell)
            .into_iter()
            .map(|(sigma, sign)| {
                let alpha = (0..ell)
                    .map(|i| conj[sigma[i]] as i64 + i as i64 - sigma[i] as i64)
                    .collect();
                OrbitShape {
                    sigma,
                    alpha: Composition(alpha),
                    sign,
                }
            })
            .collect();
        let index = shapes
            .iter()
            .enumerate()
            .map(|(k, s)| (s.alpha.clone(), k))
            .collect();
        ShapeOrbit {
            lambda: lambda.clone(),
            lambda_conj,
            ell,
            shapes,
            index,
        }
    }

    pub fn lookup(&self, alpha: &Composition) -> Option<&OrbitShape> {
        self.index.get(alpha).map(|&k| &self.shapes[k])
    }

    /// Every tableau of every orbit family with entries in `1..=n`: the set
    /// on which Ψ acts.
    pub fn families(&self, n: usize) -> Vec<(ColumnTableauFamily, i64)> {
        self.shapes
            .iter()
            .flat_map(|s| {
                enumerate_column_families(&s.alpha, n)
                    .into_iter()
                    .map(move |t| (t, s.sign))
            })
            .collect()
    }
}

/// Result of one application of Ψ, with the data needed to explain it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiOutcome {
    Fixed,
    Moved {
        /// The violating cells were `(row, j)` and `(row, j + 1)`.
        row: usize,
        j: usize,
        before: WordPair,
        after: WordPair,
        image: ColumnTableauFamily,
    },
}

impl PsiOutcome {
    pub fn image<'a>(&'a self, t: &'a ColumnTableauFamily) -> &'a ColumnTableauFamily {
        match self {
            PsiOutcome::Fixed => t,
            PsiOutcome::Moved { image, .. } => image,
        }
    }
}

pub fn psi_explained(t: &ColumnTableauFamily, orbit: &ShapeOrbit) -> Result<PsiOutcome> {
    if orbit.lookup(&t.shape()).is_none() {
        return usage(format!(
            "shape ({}) is not in the orbit of λ′ = ({})",
            t.shape(),
            orbit.lambda_conj
        ));
    }
    let Some((row, j)) = t.first_violation() else {
        return Ok(PsiOutcome::Fixed);
    };
    let before = word_pair(&t.columns[j], &t.columns[j + 1])?;
    let after = two_column_move_pair(&before)?;
    let (a, b) = after.columns();
    let mut columns = t.columns.clone();
    columns[j] = a;
    columns[j + 1] = b;
    let image = ColumnTableauFamily {
        columns,
        max_entry: t.max_entry,
    };
    if orbit.lookup(&image.shape()).is_none() {
        return Err(Error::Invariant(format!(
            "Ψ({t}) = {image} left the orbit of λ′ = ({})",
            orbit.lambda_conj
        )));
    }
    Ok(PsiOutcome::Moved {
        row,
        j,
        before,
        after,
        image,
    })
}

pub fn psi(t: &ColumnTableauFamily, orbit: &ShapeOrbit) -> Result<ColumnTableauFamily> {
    Ok(psi_explained(t, orbit)?.image(t).clone())
}
