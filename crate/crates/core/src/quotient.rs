//! Block quotients of symmetric matrices and equitable partitions.
//!
//! For a partition of the rows/columns into blocks, the quotient entry
//! `b[i][j]` is the sum of the `(i, j)` block divided by the size of block
//! `i`. When every row of every block has the same sum the partition is
//! equitable and the eigenvalues of `B` are eigenvalues of the full matrix.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eigen::{self, Spectrum};
use crate::error::{Error, Result};
use crate::matrix::DenseSymMatrix;

/// Default tolerance for block row-sum constancy.
pub const DEFAULT_EQUITABLE_TOL: f64 = 1e-9;

/// Ordered list of disjoint, nonempty vertex blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Checks that `blocks` are nonempty, disjoint and cover `0..order`.
    pub fn new(blocks: Vec<Vec<usize>>, order: usize) -> Result<Self> {
        let mut seen = vec![false; order];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= order {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for order {order}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(Self { blocks })
    }

    /// Each vertex in its own block.
    pub fn singletons(order: usize) -> Self {
        Self {
            blocks: (0..order).map(|v| vec![v]).collect(),
        }
    }

    /// Consecutive blocks of the given sizes: `[0, s0)`, `[s0, s0+s1)`, ...
    pub fn contiguous(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let mut blocks = Vec::with_capacity(sizes.len());
        for &s in sizes {
            blocks.push((start..start + s).collect());
            start += s;
        }
        Self::new(blocks, start)
    }

    /// The two sides of a join `G1 + G2` with `|G1| = n1`, `|G2| = n2`.
    pub fn join_sides(n1: usize, n2: usize) -> Result<Self> {
        Self::contiguous(&[n1, n2])
    }

    /// Path | hubs for `generalized_fan(m, n)`.
    pub fn fan_canonical(m: usize, n: usize) -> Result<Self> {
        Self::contiguous(&[n, m])
    }

    /// First path | first hubs | second hubs | second path for `nc_graph(m, n)`.
    pub fn nc_canonical(m: usize, n: usize) -> Result<Self> {
        Self::contiguous(&[n, m, m, n])
    }

    /// Parses `"0,1;2,3,4"` (blocks separated by `;`, vertices by `,`).
    pub fn parse(s: &str, order: usize) -> Result<Self> {
        s.parse::<RawPartition>()?.validate(order)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn check_order(&self, m: &DenseSymMatrix) -> Result<()> {
        if self.order() != m.order() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices, matrix has order {}",
                self.order(),
                m.order()
            )));
        }
        Ok(())
    }
}

/// Parsed but not yet validated against an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPartition(pub Vec<Vec<usize>>);

impl RawPartition {
    pub fn validate(self, order: usize) -> Result<Partition> {
        Partition::new(self.0, order)
    }
}

impl FromStr for RawPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(';')
            .map(|block| {
                block
                    .split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad vertex '{v}' in partition")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()
            .map(RawPartition)
    }
}

/// Square (generally non-symmetric) block-average matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Rows must have equal length matching `block_sizes`.
    pub fn from_rows(rows: &[Vec<f64>], block_sizes: Vec<usize>) -> Result<Self> {
        let order = rows.len();
        if block_sizes.len() != order || rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidMatrix(
                "quotient rows and block sizes disagree".into(),
            ));
        }
        Ok(Self {
            order,
            entries: rows.concat(),
            block_sizes,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.order.max(1))
            .map(<[f64]>::to_vec)
            .take(self.order)
            .collect()
    }

    /// `S^{1/2} B S^{-1/2}` with `S = diag(block sizes)`, entry by entry and
    /// without forcing symmetry.
    pub fn symmetrized_raw(&self) -> Vec<Vec<f64>> {
        let root: Vec<f64> = self
            .block_sizes
            .iter()
            .map(|&s| (s as f64).sqrt())
            .collect();
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| root[i] * self.get(i, j) / root[j])
                    .collect()
            })
            .collect()
    }

    /// Largest `|S_ij - S_ji|` of [`Self::symmetrized_raw`].
    pub fn symmetrization_defect(&self) -> f64 {
        let s = self.symmetrized_raw();
        let mut worst: f64 = 0.0;
        for (i, row) in s.iter().enumerate() {
            for (j, &x) in row.iter().enumerate().skip(i + 1) {
                worst = worst.max((x - s[j][i]).abs());
            }
        }
        worst
    }

    /// Symmetrized quotient with the two triangles averaged.
    pub fn symmetrized(&self) -> DenseSymMatrix {
        let s = self.symmetrized_raw();
        DenseSymMatrix::from_upper_fn(self.order, |i, j| 0.5 * (s[i][j] + s[j][i]))
    }
}

/// Block sums divided by the row-block size.
pub fn quotient_matrix(m: &DenseSymMatrix, p: &Partition) -> Result<QuotientMatrix> {
    p.check_order(m)?;
    let t = p.len();
    let mut entries = vec![0.0; t * t];
    for (bi, rows) in p.blocks().iter().enumerate() {
        for (bj, cols) in p.blocks().iter().enumerate() {
            let sum: f64 = rows
                .iter()
                .flat_map(|&r| cols.iter().map(move |&c| m.get(r, c)))
                .sum();
            entries[bi * t + bj] = sum / rows.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        order: t,
        entries,
        block_sizes: p.block_sizes(),
    })
}

/// Largest spread (max - min) of row sums within any block pair.
pub fn equitable_spread(m: &DenseSymMatrix, p: &Partition) -> Result<f64> {
    p.check_order(m)?;
    let mut worst: f64 = 0.0;
    for rows in p.blocks() {
        for cols in p.blocks() {
            let sums = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m.get(r, c)).sum::<f64>());
            let (lo, hi) = sums.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
                (lo.min(s), hi.max(s))
            });
            worst = worst.max(hi - lo);
        }
    }
    Ok(worst)
}

/// Whether every block row sum is constant within `tol`.
pub fn is_equitable(m: &DenseSymMatrix, p: &Partition, tol: f64) -> bool {
    equitable_spread(m, p).is_ok_and(|s| s <= tol)
}

/// Eigenvalues of the quotient of `m` by an equitable partition `p`.
///
/// Uses the similarity `S^{1/2} B S^{-1/2}`, which is symmetric when `m` is
/// symmetric and `p` equitable, so the Jacobi solver applies.
pub fn quotient_eigenvalues(m: &DenseSymMatrix, p: &Partition) -> Result<Spectrum> {
    let values = quotient_eigenvalue_list(m, p, DEFAULT_EQUITABLE_TOL)?;
    Ok(Spectrum::from_values(&values, eigen::DEFAULT_GROUPING_TOL))
}

/// Ungrouped ascending quotient eigenvalues; rejects partitions whose row-sum
/// spread exceeds `equitable_tol`.
pub fn quotient_eigenvalue_list(
    m: &DenseSymMatrix,
    p: &Partition,
    equitable_tol: f64,
) -> Result<Vec<f64>> {
    let spread = equitable_spread(m, p)?;
    if spread > equitable_tol {
        return Err(Error::NotEquitable {
            spread,
            tol: equitable_tol,
        });
    }
    let b = quotient_matrix(m, p)?;
    eigen::eigenvalues(&b.symmetrized())
}
