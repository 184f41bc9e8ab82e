//! Bigraded dimensions of the span of all partial derivatives of `Δ_L`.
//!
//! The piece of bidegree `(a,b)` is spanned by `∂^α_X ∂^β_Y Δ_L` with
//! `|α| = |p|−a`, `|β| = |q|−b`. Its dimension is the rank of the coefficient
//! matrix of those derivatives in the monomial basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::diagram::{delta_with_cap, LatticeDiagram, DEFAULT_DELTA_CAP};
use crate::error::{usage, Error, Result};
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertCaps {
    pub max_cells: usize,
    /// Bound on `|p|` and on `|q|` separately.
    pub max_degree: i64,
}

impl Default for HilbertCaps {
    fn default() -> Self {
        HilbertCaps {
            max_cells: 6,
            max_degree: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    /// Every bidegree `(a,b)` with `a ≤ |p|`, `b ≤ |q|`, zeros included.
    pub dims: BTreeMap<(u32, u32), usize>,
    pub total: usize,
}

impl HilbertTable {
    pub fn get(&self, a: u32, b: u32) -> usize {
        self.dims.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn top(&self) -> (u32, u32) {
        self.dims
            .keys()
            .copied()
            .fold((0, 0), |(x, y), (a, b)| (x.max(a), y.max(b)))
    }

    /// The table with x- and y-degrees exchanged.
    pub fn swapped(&self) -> HilbertTable {
        HilbertTable {
            dims: self.dims.iter().map(|(&(a, b), &d)| ((b, a), d)).collect(),
            total: self.total,
        }
    }

    /// Tab-separated grid: one row per x-degree, one column per y-degree.
    pub fn to_tsv(&self) -> String {
        let (ta, tb) = self.top();
        let mut out = String::from("a\\b");
        for b in 0..=tb {
            write!(out, "\t{b}").unwrap();
        }
        out.push('\n');
        for a in 0..=ta {
            write!(out, "{a}").unwrap();
            for b in 0..=tb {
                write!(out, "\t{}", self.get(a, b)).unwrap();
            }
            out.push('\n');
        }
        writeln!(out, "total\t{}", self.total).unwrap();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dims: Vec<_> = self
            .dims
            .iter()
            .map(|(&(a, b), &d)| json!({ "x_degree": a, "y_degree": b, "dim": d }))
            .collect();
        json!({ "dims": dims, "total": self.total })
    }
}

/// Exponent vectors of total degree `d` in `n` variables.
fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..n)
        .combinations_with_replacement(d as usize)
        .map(|idx| {
            let mut e = vec![0u32; n];
            for i in idx {
                e[i] += 1;
            }
            e
        })
        .collect()
}

/// Rank of a list of polynomials over the rationals.
pub fn rank(polys: &[Polynomial]) -> usize {
    let basis: BTreeSet<&Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m))
        .collect();
    let column: BTreeMap<&Monomial, usize> =
        basis.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let width = column.len();
    let rows: Vec<Vec<BigInt>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let scale = p
                .terms()
                .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
            let mut row = vec![BigInt::zero(); width];
            for (m, c) in p.terms() {
                row[column[m]] = (c * BigRational::from_integer(scale.clone())).to_integer();
            }
            row
        })
        .collect();
    bareiss_rank(rows, width)
}

/// Fraction-free elimination; every division is exact.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>, width: usize) -> usize {
    let height = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..width {
        if r == height {
            break;
        }
        let Some(pivot) = (r..height).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..height {
            for j in col + 1..width {
                let v = (&m[r][col] * &m[i][j] - &m[i][col] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        r += 1;
    }
    r
}

/// All derivatives of `f` of x-order `da` and y-order `db`.
fn derivatives(f: &Polynomial, da: u32, db: u32) -> Result<Vec<Polynomial>> {
    let n = f.nvars();
    let xs = exponent_vectors(n, da);
    let ys = exponent_vectors(n, db);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            let op =
                Polynomial::from_term(Monomial::new(x.clone(), y.clone())?, BigRational::one());
            out.push(f.apply_diff_operator(&op)?);
        }
    }
    Ok(out)
}

pub fn hilbert(l: &LatticeDiagram) -> Result<HilbertTable> {
    hilbert_with_caps(l, HilbertCaps::default())
}

pub fn hilbert_with_caps(l: &LatticeDiagram, caps: HilbertCaps) -> Result<HilbertTable> {
    if l.is_empty() {
        return usage("the Hilbert table needs a nonempty diagram");
    }
    if !l.epsilon() {
        return usage(format!("diagram [{l}] has repeated or negative cells"));
    }
    let (p, q) = l.bidegree();
    if l.len() > caps.max_cells || p > caps.max_degree || q > caps.max_degree {
        return Err(Error::Resource(format!(
            "diagram [{l}] exceeds the caps of {} cells and degree {}",
            caps.max_cells, caps.max_degree
        )));
    }
    let f = delta_with_cap(l, DEFAULT_DELTA_CAP.min(caps.max_cells))?;
    let (p, q) = (p as u32, q as u32);
    let mut dims = BTreeMap::new();
    for a in 0..=p {
        for b in 0..=q {
            dims.insert((a, b), rank(&derivatives(&f, p - a, q - b)?));
        }
    }
    let total = dims.values().sum();
    Ok(HilbertTable { dims, total })
}

pub fn total_dimension(l: &LatticeDiagram) -> Result<usize> {
    Ok(hilbert(l)?.total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{delta, ferrers, transpose};
    use crate::partition::Partition;
    use crate::poly::{rat, Var};

    fn ferrers_of(s: &str) -> LatticeDiagram {
        ferrers(&s.parse::<Partition>().unwrap())
    }

    #[test]
    fn small_tables() {
        let t = hilbert(&"0,0".parse().unwrap()).unwrap();
        assert_eq!(t.total, 1);
        let t = hilbert(&ferrers_of("1,1")).unwrap();
        assert_eq!((t.get(1, 0), t.get(0, 0), t.total), (1, 1, 2));
        assert_eq!(total_dimension(&ferrers_of("2")).unwrap(), 2);
        assert_eq!(total_dimension(&ferrers_of("2,1")).unwrap(), 6);
        assert_eq!(total_dimension(&ferrers_of("1,1,1")).unwrap(), 6);
    }

    #[test]
    fn corners_are_one() {
        for s in ["2,1", "3", "1,1,1", "2,2"] {
            let l = ferrers_of(s);
            let t = hilbert(&l).unwrap();
            let (p, q) = l.bidegree();
            assert_eq!(t.get(p as u32, q as u32), 1, "{s}");
            assert_eq!(t.get(0, 0), 1, "{s}");
        }
    }

    #[test]
    fn transpose_swaps_table() {
        for s in ["0,0;2,0;0,1", "0,0;1,1", "1,0;0,2;2,1"] {
            let l: LatticeDiagram = s.parse().unwrap();
            let (lt, _) = transpose(&l);
            assert_eq!(hilbert(&lt).unwrap(), hilbert(&l).unwrap().swapped());
        }
    }

    #[test]
    fn span_is_closed_under_derivatives() {
        let l = ferrers_of("2,1");
        let f = delta(&l).unwrap();
        for (da, db) in [(0, 0), (0, 1)] {
            let lower = derivatives(&f, da + 1, db).unwrap();
            let base = rank(&lower);
            for g in derivatives(&f, da, db).unwrap() {
                let mut extended = lower.clone();
                extended.push(g.partial(Var::x(0)).unwrap());
                assert_eq!(rank(&extended), base);
            }
        }
    }

    #[test]
    fn rank_handles_fractions() {
        let a = Polynomial::parse("x1^2/2 + x2/3", 2).unwrap();
        let b = a.scale(&rat(6));
        let c = Polynomial::parse("x1", 2).unwrap();
        assert_eq!(rank(&[a.clone(), b]), 1);
        assert_eq!(rank(&[a, c, Polynomial::zero(2)]), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn caps_and_bad_input() {
        let l = ferrers_of("2,1");
        let tight = HilbertCaps {
            max_cells: 2,
            max_degree: 10,
        };
        assert!(matches!(
            hilbert_with_caps(&l, tight),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            hilbert(&LatticeDiagram::empty()),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn tsv_layout() {
        let t = hilbert(&ferrers_of("1,1")).unwrap();
        assert_eq!(t.to_tsv(), "a\\b\t0\n0\t1\n1\t1\ntotal\t2\n");
    }
}
