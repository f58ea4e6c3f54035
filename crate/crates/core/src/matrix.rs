//! Dense symmetric matrices attached to a graph: adjacency, Laplacian,
//! distance, transmission, distance (signless) Laplacian and the generalized
//! distance matrix `t Tr + (1 - t) D`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense real symmetric matrix, row-major.
///
/// Symmetry is exact: every constructor either mirrors the upper triangle or
/// rejects asymmetric input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseSymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseSymMatrix {
    /// Builds the matrix from `f(i, j)` evaluated on `i <= j` only.
    pub fn from_upper_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; order * order];
        for i in 0..order {
            for j in i..order {
                let x = f(i, j);
                entries[i * order + j] = x;
                entries[j * order + i] = x;
            }
        }
        Self { order, entries }
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self::from_upper_fn(diag.len(), |i, j| if i == j { diag[i] } else { 0.0 })
    }

    /// Validates squareness, finiteness and exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        if let Some(x) = entries.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidMatrix(format!("non-finite entry {x}")));
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::InvalidMatrix(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        (0..self.order).map(|i| self.row(i))
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `P M P^T` where vertex `perm[k]` of the input becomes vertex `k`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        Self::from_upper_fn(self.order, |i, j| self.get(perm[i], perm[j]))
    }

    /// Entrywise `a * self + b * other`.
    pub fn linear_combination(&self, a: f64, other: &Self, b: f64) -> Self {
        assert_eq!(self.order, other.order);
        Self::from_upper_fn(self.order, |i, j| a * self.get(i, j) + b * other.get(i, j))
    }
}

impl fmt::Display for DenseSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Which graph matrix to build.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    Distance,
    Transmission,
    DistanceLaplacian,
    DistanceSignlessLaplacian,
    /// `t Tr + (1 - t) D` with `0 < t < 1`.
    GeneralizedDistance(f64),
}

impl MatrixKind {
    pub fn build(self, g: &Graph) -> Result<DenseSymMatrix> {
        match self {
            Self::Adjacency => Ok(adjacency_matrix(g)),
            Self::Laplacian => Ok(laplacian_matrix(g)),
            Self::Distance => distance_matrix(g),
            Self::Transmission => transmission_matrix(g),
            Self::DistanceLaplacian => distance_laplacian(g),
            Self::DistanceSignlessLaplacian => distance_signless_laplacian(g),
            Self::GeneralizedDistance(t) => generalized_distance(g, t),
        }
    }

    /// Laplacian-type matrices are positive semidefinite with zero row sums.
    pub fn is_laplacian_type(self) -> bool {
        matches!(self, Self::Laplacian | Self::DistanceLaplacian)
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Adjacency => f.write_str("adjacency"),
            Self::Laplacian => f.write_str("laplacian"),
            Self::Distance => f.write_str("distance"),
            Self::Transmission => f.write_str("transmission"),
            Self::DistanceLaplacian => f.write_str("distance-laplacian"),
            Self::DistanceSignlessLaplacian => f.write_str("distance-signless-laplacian"),
            Self::GeneralizedDistance(t) => write!(f, "generalized-distance:{t}"),
        }
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    /// Accepts the `Display` names; the generalized distance matrix is
    /// written `generalized-distance:<t>`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if let Some(t) = lower.strip_prefix("generalized-distance:") {
            let t: f64 = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad t in '{s}'")))?;
            check_t(t)?;
            return Ok(Self::GeneralizedDistance(t));
        }
        Ok(match lower.as_str() {
            "adjacency" | "a" => Self::Adjacency,
            "laplacian" | "l" => Self::Laplacian,
            "distance" | "d" => Self::Distance,
            "transmission" | "tr" => Self::Transmission,
            "distance-laplacian" | "dl" => Self::DistanceLaplacian,
            "distance-signless-laplacian" | "dq" => Self::DistanceSignlessLaplacian,
            _ => return Err(Error::Parse(format!("unknown matrix kind '{s}'"))),
        })
    }
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "generalized distance needs 0 < t < 1 (got {t})"
        )))
    }
}

pub fn adjacency_matrix(g: &Graph) -> DenseSymMatrix {
    DenseSymMatrix::from_upper_fn(g.order(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// `Deg - A`: degrees on the diagonal, `-1` for each edge.
pub fn laplacian_matrix(g: &Graph) -> DenseSymMatrix {
    let deg = g.degree_sequence();
    DenseSymMatrix::from_upper_fn(g.order(), |i, j| {
        if i == j {
            deg[i] as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    })
}

/// All-pairs hop distances as integers; fails on disconnected graphs.
pub fn distance_table(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.order())
        .map(|s| {
            g.bfs_distances(s)
                .into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or(Error::Disconnected)
        })
        .collect()
}

pub fn distance_matrix(g: &Graph) -> Result<DenseSymMatrix> {
    let table = distance_table(g)?;
    Ok(DenseSymMatrix::from_upper_fn(g.order(), |i, j| {
        table[i][j] as f64
    }))
}

/// Transmission of each vertex: the sum of its distances to all others.
pub fn transmission_vector(g: &Graph) -> Result<Vec<usize>> {
    Ok(distance_table(g)?
        .iter()
        .map(|row| row.iter().sum())
        .collect())
}

pub fn transmission_matrix(g: &Graph) -> Result<DenseSymMatrix> {
    let tr: Vec<f64> = transmission_vector(g)?
        .into_iter()
        .map(|x| x as f64)
        .collect();
    Ok(DenseSymMatrix::from_diagonal(&tr))
}

fn transmission_and_distance(g: &Graph) -> Result<(Vec<f64>, Vec<Vec<usize>>)> {
    let table = distance_table(g)?;
    let tr = table
        .iter()
        .map(|row| row.iter().sum::<usize>() as f64)
        .collect();
    Ok((tr, table))
}

/// `Tr - D`.
pub fn distance_laplacian(g: &Graph) -> Result<DenseSymMatrix> {
    let (tr, d) = transmission_and_distance(g)?;
    Ok(DenseSymMatrix::from_upper_fn(g.order(), |i, j| {
        if i == j {
            tr[i]
        } else {
            -(d[i][j] as f64)
        }
    }))
}

/// `Tr + D`.
pub fn distance_signless_laplacian(g: &Graph) -> Result<DenseSymMatrix> {
    let (tr, d) = transmission_and_distance(g)?;
    Ok(DenseSymMatrix::from_upper_fn(g.order(), |i, j| {
        if i == j {
            tr[i]
        } else {
            d[i][j] as f64
        }
    }))
}

/// `t Tr + (1 - t) D` for `0 < t < 1`.
pub fn generalized_distance(g: &Graph, t: f64) -> Result<DenseSymMatrix> {
    check_t(t)?;
    let (tr, d) = transmission_and_distance(g)?;
    Ok(DenseSymMatrix::from_upper_fn(g.order(), |i, j| {
        if i == j {
            t * tr[i]
        } else {
            (1.0 - t) * d[i][j] as f64
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generalized_fan, join, nc_graph, null_graph, path_graph};

    fn rows(m: &DenseSymMatrix) -> Vec<Vec<f64>> {
        m.rows().map(<[f64]>::to_vec).collect()
    }

    #[test]
    fn small_matrices() {
        let p2 = path_graph(2).unwrap();
        assert_eq!(
            rows(&adjacency_matrix(&p2)),
            vec![vec![0.0, 1.0], vec![1.0, 0.0]]
        );
        assert_eq!(
            rows(&laplacian_matrix(&p2)),
            vec![vec![1.0, -1.0], vec![-1.0, 1.0]]
        );
        assert_eq!(
            rows(&distance_laplacian(&p2).unwrap()),
            vec![vec![1.0, -1.0], vec![-1.0, 1.0]]
        );
        assert_eq!(
            rows(&distance_signless_laplacian(&p2).unwrap()),
            vec![vec![1.0, 1.0], vec![1.0, 1.0]]
        );
        assert_eq!(
            rows(&generalized_distance(&p2, 0.5).unwrap()),
            vec![vec![0.5, 0.5], vec![0.5, 0.5]]
        );

        let p3 = path_graph(3).unwrap();
        assert_eq!(
            rows(&distance_matrix(&p3).unwrap()),
            vec![
                vec![0.0, 1.0, 2.0],
                vec![1.0, 0.0, 1.0],
                vec![2.0, 1.0, 0.0]
            ]
        );
        assert_eq!(transmission_vector(&p3).unwrap(), vec![3, 2, 3]);
        assert_eq!(
            laplacian_matrix(&null_graph(4).unwrap()),
            DenseSymMatrix::zeros(4)
        );
    }

    #[test]
    fn fan_22_adjacency_is_k4_minus_edge() {
        let a = adjacency_matrix(&generalized_fan(2, 2).unwrap());
        let ones: f64 = a.entries().iter().sum();
        assert_eq!(ones, 10.0);
        assert_eq!(a.get(2, 3), 0.0);
        let deg = generalized_fan(2, 2).unwrap().degree_sequence();
        for (s, d) in a.row_sums().iter().zip(deg) {
            assert_eq!(*s, d as f64);
        }
    }

    #[test]
    fn traces() {
        assert_eq!(
            laplacian_matrix(&generalized_fan(3, 4).unwrap()).trace(),
            30.0
        );
        let nc = nc_graph(2, 2).unwrap();
        assert_eq!(
            transmission_vector(&nc).unwrap(),
            vec![13, 13, 12, 12, 12, 12, 13, 13]
        );
        assert_eq!(distance_laplacian(&nc).unwrap().trace(), 100.0);
    }

    #[test]
    fn nc_distance_blocks() {
        let (m, n) = (3, 4);
        let d = distance_matrix(&nc_graph(m, n).unwrap()).unwrap();
        let (h1, h2, p2) = (n, n + m, n + 2 * m);
        for i in 0..m {
            for j in 0..m {
                let want = if i == j { 1.0 } else { 3.0 };
                assert_eq!(d.get(h1 + i, h2 + j), want);
            }
            for j in 0..n {
                assert_eq!(d.get(h1 + i, p2 + j), 2.0);
                assert_eq!(d.get(j, h2 + i), 2.0);
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(d.get(i, p2 + j), 3.0);
            }
        }
    }

    #[test]
    fn disconnected_and_bad_t() {
        let g = null_graph(2).unwrap();
        assert_eq!(distance_matrix(&g), Err(Error::Disconnected));
        assert_eq!(distance_laplacian(&g), Err(Error::Disconnected));
        assert!(transmission_vector(&g).is_err());
        let k2 = path_graph(2).unwrap();
        assert!(generalized_distance(&k2, 0.0).is_err());
        assert!(generalized_distance(&k2, 1.0).is_err());
        assert!("generalized-distance:1.5".parse::<MatrixKind>().is_err());
    }

    #[test]
    fn identities_on_family_graphs() {
        let mut graphs = Vec::new();
        for m in 1..5 {
            for n in 1..5 {
                graphs.push(generalized_fan(m, n).unwrap());
                if m >= 2 && n >= 2 {
                    graphs.push(nc_graph(m, n).unwrap());
                }
            }
        }
        for g in &graphs {
            let l = laplacian_matrix(g);
            let dl = distance_laplacian(g).unwrap();
            let dq = distance_signless_laplacian(g).unwrap();
            let d = distance_matrix(g).unwrap();
            let tr = transmission_matrix(g).unwrap();
            assert!(l.row_sums().iter().all(|&s| s == 0.0));
            assert!(dl.row_sums().iter().all(|&s| s == 0.0));
            assert_eq!(
                dq.linear_combination(1.0, &dl, -1.0),
                d.linear_combination(2.0, &d, 0.0)
            );
            for t in [0.1, 0.25, 0.5, 0.9] {
                let dt = generalized_distance(g, t).unwrap();
                let want = tr.linear_combination(t, &d, 1.0 - t);
                assert_eq!(dt, want);
            }
            let k = g.order();
            for i in 0..k {
                assert_eq!(d.get(i, i), 0.0);
                for j in 0..k {
                    for l in 0..k {
                        assert!(d.get(i, l) <= d.get(i, j) + d.get(j, l));
                    }
                }
            }
        }
    }

    #[test]
    fn join_diameter_at_most_two() {
        let g = join(&path_graph(5).unwrap(), &null_graph(3).unwrap()).unwrap();
        let d = distance_matrix(&g).unwrap();
        assert!(d
            .entries()
            .iter()
            .all(|&x| x == 0.0 || x == 1.0 || x == 2.0));
    }

    #[test]
    fn from_rows_validation() {
        assert!(DenseSymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).is_ok());
        assert!(DenseSymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]).is_err());
        assert!(DenseSymMatrix::from_rows(&[vec![1.0, 2.0]]).is_err());
        assert!(DenseSymMatrix::from_rows(&[vec![f64::NAN]]).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in [
            MatrixKind::Adjacency,
            MatrixKind::Laplacian,
            MatrixKind::Distance,
            MatrixKind::Transmission,
            MatrixKind::DistanceLaplacian,
            MatrixKind::DistanceSignlessLaplacian,
            MatrixKind::GeneralizedDistance(0.25),
        ] {
            assert_eq!(kind.to_string().parse::<MatrixKind>().unwrap(), kind);
        }
    }
}
