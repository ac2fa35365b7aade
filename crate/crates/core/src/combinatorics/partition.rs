use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::AlgebraError;

/// An integer partition: a weakly decreasing list of positive parts.
///
/// Ordered by size, then reverse-lexicographically, so `(4) < (3,1) < (2,2)
/// < (2,1,1) < (1,1,1,1)`. This is the order of [`partitions_of`] and of
/// every sorted listing in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Hook length and content of a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HookContent {
    pub cell: Cell,
    pub hook: usize,
    pub content: i64,
}

impl Partition {
    /// Validates `parts` as weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, AlgebraError> {
        if parts.contains(&0) {
            return Err(AlgebraError::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::InvalidPartition(format!(
                "{parts:?} is not decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|mu|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(mu)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Union of the parts of two partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }

    /// Removes one occurrence of `part`, if present.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Adds a part.
    pub fn with_part(&self, part: usize) -> Partition {
        self.union(&Partition { parts: vec![part] })
    }

    /// Drops the largest part.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(p, m)| BigUint::from(p).pow(m as u32) * factorial(m))
            .product()
    }

    /// `|Aut(mu)| = prod_i m_i!`
    pub fn aut(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m))
            .product()
    }

    /// `kappa_mu = sum_i mu_i (mu_i - 2i + 1)`
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let (p, i) = (p as i64, i as i64 + 1);
                p * (p - 2 * i + 1)
            })
            .sum()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell { row: r + 1, col: c }))
    }

    /// Hook length and content of every cell, row-major.
    pub fn hooks_contents(&self) -> Vec<HookContent> {
        let conj = self.conjugate();
        self.cells()
            .map(|cell| {
                let arm = self.parts[cell.row - 1] - cell.col;
                let leg = conj.parts[cell.col - 1] - cell.row;
                HookContent {
                    cell,
                    hook: arm + leg + 1,
                    content: cell.col as i64 - cell.row as i64,
                }
            })
            .collect()
    }

    /// Dimension of the irreducible representation, `|mu|! / prod h(x)`.
    pub fn dim(&self) -> BigUint {
        let hooks: BigUint = self
            .hooks_contents()
            .iter()
            .map(|h| BigUint::from(h.hook))
            .product();
        factorial(self.size()) / hooks
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = AlgebraError;

    /// Parses `[3,1,1]`; the brackets are optional and `[]` is empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| AlgebraError::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, sorted.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
