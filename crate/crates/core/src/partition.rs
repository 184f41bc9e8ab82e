use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{parse_err, usage, Error, Result};

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (of 0) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return usage(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return usage(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// The single-row partition `(k)`.
    pub fn row(k: usize) -> Partition {
        Partition(if k == 0 { vec![] } else { vec![k] })
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: usize) -> Partition {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ′_i = #{j : λ_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                rec(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All nonempty partitions of weight `1..=max_weight`.
    pub fn all_up_to(max_weight: usize) -> Vec<Partition> {
        (1..=max_weight).flat_map(Partition::all_of).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `4,2,1`.
    fn from_str(s: &str) -> Result<Partition> {
        let parts = parse_list::<usize>(s)?;
        Partition::new(parts).map_err(Error::into_parse)
    }
}

/// Sequence of integers indexing a product `e_α = e_α1 ⋯ e_αℓ`. Negative
/// entries are allowed; they arise in the Jacobi-Trudi expansion and make the
/// corresponding term vanish.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition(pub Vec<i64>);

impl Composition {
    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&a| a < 0)
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// True when the parts are nonnegative and weakly decreasing.
    pub fn is_partition_shape(&self) -> bool {
        !self.has_negative() && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Compositions of `k` into positive parts.
    pub fn all_positive_of(k: usize) -> Vec<Composition> {
        if k == 0 {
            return vec![Composition(vec![])];
        }
        let mut out = Vec::new();
        for first in 1..=k {
            for rest in Composition::all_positive_of(k - first) {
                let mut v = vec![first as i64];
                v.extend(rest.0);
                out.push(Composition(v));
            }
        }
        out
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Composition {
        Composition(p.0.iter().map(|&x| x as i64).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        Ok(Composition(parse_list::<i64>(s)?))
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return parse_err("empty list");
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad list entry {t:?} in {s:?}")))
        })
        .collect()
}
