//! Cyclic Jacobi eigenvalues for dense symmetric matrices, and grouping of
//! eigenvalues into `(value, multiplicity)` pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DenseSymMatrix;

/// Relative off-diagonal Frobenius norm at which iteration stops.
pub const DEFAULT_CONVERGENCE_TOL: f64 = 1e-12;
/// Gap below which neighbouring eigenvalues count as one.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-6;
pub const MAX_SWEEPS: usize = 100;

/// All eigenvalues of `m` in ascending order.
///
/// Runs row-cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops
/// below `convergence_tol` times the Frobenius norm of `m`. Fails with
/// [`Error::NoConvergence`] after [`MAX_SWEEPS`] sweeps.
pub fn symmetric_eigenvalues(m: &DenseSymMatrix, convergence_tol: f64) -> Result<Vec<f64>> {
    if convergence_tol.is_nan() || convergence_tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "convergence tol must be > 0 (got {convergence_tol})"
        )));
    }
    let n = m.order();
    let mut a = m.entries().to_vec();
    let target = convergence_tol * m.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
                target,
            });
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// [`symmetric_eigenvalues`] with [`DEFAULT_CONVERGENCE_TOL`].
pub fn eigenvalues(m: &DenseSymMatrix) -> Result<Vec<f64>> {
    symmetric_eigenvalues(m, DEFAULT_CONVERGENCE_TOL)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    sum.sqrt()
}

// Annihilates a[p][q] with a plane rotation, A <- J^T A J.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// Eigenvalue multiset as ascending `(value, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
    grouping_tol: f64,
}

impl Spectrum {
    /// Sorts `values` and groups them with [`group_multiplicities`].
    pub fn from_values(values: &[f64], grouping_tol: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        group_multiplicities(&sorted, grouping_tol)
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn grouping_tol(&self) -> f64 {
        self.grouping_tol
    }

    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.pairs.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Ascending list with each value repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
            .collect()
    }

    /// Multiplicity of the group within `tol` of `value` (0 if none).
    pub fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.pairs
            .iter()
            .filter(|(v, _)| (v - value).abs() <= tol)
            .map(|&(_, k)| k)
            .sum()
    }
}

/// Groups an ascending list: a value joins the current group when it lies
/// within `grouping_tol` of the previous value. Each group is represented by
/// its arithmetic mean.
pub fn group_multiplicities(values: &[f64], grouping_tol: f64) -> Spectrum {
    debug_assert!(
        values.windows(2).all(|w| w[0] <= w[1]),
        "input must be sorted"
    );
    let mut pairs = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] - values[i - 1] > grouping_tol {
            let group = &values[start..i];
            let mean = group.iter().sum::<f64>() / group.len() as f64;
            pairs.push((mean, group.len()));
            start = i;
        }
    }
    Spectrum {
        pairs,
        grouping_tol,
    }
}
