//! Partition types `(u, λ)`: a nonnegative integer together with a 2×r array
//! of nonnegative integer columns, each column containing a positive entry.
//! Two arrays are identified up to column permutation and swapping the two
//! entries within a column; values here are always kept in canonical form.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Canonical representative of a partition type.
///
/// Canonical form: within each column the larger entry is on top (`a >= b`),
/// and columns are sorted in non-increasing lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartitionType {
    u: usize,
    columns: Vec<(usize, usize)>,
}

impl PartitionType {
    /// Canonicalizes `(u, raw_columns)`. Rejects all-zero columns.
    pub fn new(u: usize, raw_columns: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut columns: Vec<(usize, usize)> = Vec::new();
        for (a, b) in raw_columns {
            if a + b == 0 {
                return Err(Error::ZeroColumn);
            }
            columns.push(if a >= b { (a, b) } else { (b, a) });
        }
        columns.sort_unstable_by(|x, y| y.cmp(x));
        Ok(PartitionType { u, columns })
    }

    /// The empty type `(0, [])`, the index of the unit of the ring.
    pub fn unit() -> Self {
        PartitionType {
            u: 0,
            columns: Vec::new(),
        }
    }

    /// `(u, [])`, the index of `x_0^u`.
    pub fn x0_power(u: usize) -> Self {
        PartitionType {
            u,
            columns: Vec::new(),
        }
    }

    /// `(0, [(a, b)])`, the index of a single power-sum generator.
    pub fn single_column(a: usize, b: usize) -> Result<Self> {
        Self::new(0, [(a, b)])
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    /// `u + Σ (a_i + b_i)`.
    pub fn degree(&self) -> usize {
        self.u + self.columns.iter().map(|&(a, b)| a + b).sum::<usize>()
    }

    /// Index of the product of the corresponding power sums: `u`-parts add,
    /// column multisets merge.
    pub fn concat(&self, other: &Self) -> Self {
        let mut columns = self.columns.clone();
        columns.extend_from_slice(&other.columns);
        columns.sort_unstable_by(|x, y| y.cmp(x));
        PartitionType {
            u: self.u + other.u,
            columns,
        }
    }
}

impl Ord for PartitionType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.u.cmp(&other.u))
            .then_with(|| self.columns.cmp(&other.columns))
    }
}

impl PartialOrd for PartitionType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.u)?;
        for &(a, b) in &self.columns {
            write!(f, " {a}/{b}")?;
        }
        write!(f, ")")
    }
}
