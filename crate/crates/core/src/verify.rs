//! Cross-checks of every closed form against the Jacobi solver.
//!
//! A [`VerificationReport`] records, for one `(family, m, n, kind)` case, the
//! closed-form multiset, the numeric spectrum, their sorted max deviation,
//! the trace residual, positive semidefiniteness and whether the canonical
//! equitable quotient's eigenvalues lie in the numeric spectrum.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closed_form::{
    fan_distance_laplacian_spectrum, fan_laplacian_spectrum, join_distance_laplacian_spectrum,
    join_laplacian_spectrum, nc_distance_laplacian_spectrum, nc_laplacian_spectrum,
    ClosedFormSpectrum,
};
use crate::eigen::{self, Spectrum};
use crate::error::{Error, Result};
use crate::graph::{join, Family, Graph};
use crate::matrix::{distance_laplacian, laplacian_matrix, MatrixKind};
use crate::quotient::{quotient_eigenvalue_list, Partition, DEFAULT_EQUITABLE_TOL};
use crate::tables::laplacian_table_errata;

pub const DEFAULT_TOL: f64 = 1e-8;
/// Smallest eigenvalue allowed for a positive semidefinite matrix.
pub const PSD_TOL: f64 = 1e-9;
/// Largest `m` or `n` accepted by [`sweep`].
pub const MAX_SWEEP_PARAM: usize = 40;
/// Edge probability of the random graphs used for join checks.
pub const JOIN_EDGE_PROBABILITY: f64 = 0.5;

/// Matrix kinds that have closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormKind {
    Laplacian,
    DistanceLaplacian,
}

impl ClosedFormKind {
    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            Self::Laplacian => MatrixKind::Laplacian,
            Self::DistanceLaplacian => MatrixKind::DistanceLaplacian,
        }
    }
}

impl TryFrom<MatrixKind> for ClosedFormKind {
    type Error = Error;

    fn try_from(kind: MatrixKind) -> Result<Self> {
        match kind {
            MatrixKind::Laplacian => Ok(Self::Laplacian),
            MatrixKind::DistanceLaplacian => Ok(Self::DistanceLaplacian),
            other => Err(Error::InvalidParameter(format!(
                "no closed-form spectrum for the {other} matrix"
            ))),
        }
    }
}

impl fmt::Display for ClosedFormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix_kind().fmt(f)
    }
}

/// A family paired with a closed-form kind; sweeps run in [`Self::ALL`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormCase {
    FanLaplacian,
    NcLaplacian,
    FanDistanceLaplacian,
    NcDistanceLaplacian,
}

impl ClosedFormCase {
    pub const ALL: [Self; 4] = [
        Self::FanLaplacian,
        Self::NcLaplacian,
        Self::FanDistanceLaplacian,
        Self::NcDistanceLaplacian,
    ];

    pub fn family(self) -> Family {
        match self {
            Self::FanLaplacian | Self::FanDistanceLaplacian => Family::Fan,
            Self::NcLaplacian | Self::NcDistanceLaplacian => Family::Nc,
        }
    }

    pub fn kind(self) -> ClosedFormKind {
        match self {
            Self::FanLaplacian | Self::NcLaplacian => ClosedFormKind::Laplacian,
            Self::FanDistanceLaplacian | Self::NcDistanceLaplacian => {
                ClosedFormKind::DistanceLaplacian
            }
        }
    }
}

impl fmt::Display for ClosedFormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.family(), self.kind())
    }
}

impl FromStr for ClosedFormCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown closed-form case '{s}'")))
    }
}

/// Closed-form spectrum for a family and kind.
pub fn closed_form_for(
    family: Family,
    kind: ClosedFormKind,
    m: usize,
    n: usize,
) -> Result<ClosedFormSpectrum> {
    match (family, kind) {
        (Family::Fan, ClosedFormKind::Laplacian) => fan_laplacian_spectrum(m, n),
        (Family::Nc, ClosedFormKind::Laplacian) => nc_laplacian_spectrum(m, n),
        (Family::Fan, ClosedFormKind::DistanceLaplacian) => fan_distance_laplacian_spectrum(m, n),
        (Family::Nc, ClosedFormKind::DistanceLaplacian) => nc_distance_laplacian_spectrum(m, n),
    }
}

/// Canonical equitable partition of a family graph.
pub fn canonical_partition(family: Family, m: usize, n: usize) -> Result<Partition> {
    match family {
        Family::Fan => Partition::fan_canonical(m, n),
        Family::Nc => Partition::nc_canonical(m, n),
    }
}

/// Max `|a_i - b_i|` after sorting both multisets ascending. Multisets of
/// different size are an error.
pub fn compare_spectra(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::CardinalityMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    Ok(a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max))
}

/// Whether every value of `sub` lies within `tol` of some value of `full`.
pub fn contained_in(sub: &[f64], full: &[f64], tol: f64) -> bool {
    sub.iter()
        .all(|x| full.iter().any(|y| (x - y).abs() <= tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseId {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub kind: ClosedFormKind,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} n={} {}", self.family, self.m, self.n, self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case: CaseId,
    pub closed_form: ClosedFormSpectrum,
    pub numeric: Spectrum,
    /// `None` when the multisets could not be compared (see `failure`).
    pub max_abs_deviation: Option<f64>,
    pub trace_residual: f64,
    pub min_eigenvalue: Option<f64>,
    pub psd_ok: bool,
    pub quotient_eigenvalues: Vec<f64>,
    pub quotient_containment_ok: bool,
    pub errata_flags: Vec<String>,
    pub failure: Option<String>,
    pub tol: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// One line: status, case, deviation, trace residual and flags.
    pub fn summary_line(&self) -> String {
        let dev = self
            .max_abs_deviation
            .map_or_else(|| "n/a".to_owned(), |d| format!("{d:.3e}"));
        let mut line = format!(
            "{} {} max_dev={} trace_res={:.3e} psd={} quotient={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.case,
            dev,
            self.trace_residual,
            ok(self.psd_ok),
            ok(self.quotient_containment_ok),
        );
        if !self.errata_flags.is_empty() {
            line.push_str(&format!(" errata={}", self.errata_flags.len()));
        }
        if let Some(f) = &self.failure {
            line.push_str(&format!(" failure=\"{f}\""));
        }
        line
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "bad"
    }
}

/// Verifies one case. Invalid parameters are an error; everything else,
/// including solver failure, is recorded in the report.
pub fn verify_case(
    family: Family,
    m: usize,
    n: usize,
    kind: ClosedFormKind,
    tol: f64,
) -> Result<VerificationReport> {
    let closed_form = closed_form_for(family, kind, m, n)?;
    let graph = family.build(m, n)?;
    let matrix = kind.matrix_kind().build(&graph)?;
    let partition = canonical_partition(family, m, n)?;

    let mut errata_flags = closed_form.errata_notes.clone();
    if (family, kind) == (Family::Fan, ClosedFormKind::Laplacian) {
        errata_flags.extend(laplacian_table_errata(m, n)?);
    }
    let trace_residual = (closed_form.sum() - matrix.trace()).abs();

    let mut failure = None;
    let numeric_values = match eigen::eigenvalues(&matrix) {
        Ok(v) => v,
        Err(e) => {
            failure = Some(e.to_string());
            Vec::new()
        }
    };
    let max_abs_deviation = if failure.is_some() {
        None
    } else {
        match compare_spectra(&closed_form.expanded(), &numeric_values) {
            Ok(d) => Some(d),
            Err(e) => {
                failure = Some(e.to_string());
                None
            }
        }
    };
    let min_eigenvalue = numeric_values.first().copied();
    let psd_ok = min_eigenvalue.is_some_and(|x| x >= -PSD_TOL);

    let quotient_eigenvalues =
        match quotient_eigenvalue_list(&matrix, &partition, DEFAULT_EQUITABLE_TOL) {
            Ok(q) => q,
            Err(e) => {
                failure.get_or_insert_with(|| format!("quotient: {e}"));
                Vec::new()
            }
        };
    let quotient_containment_ok = !quotient_eigenvalues.is_empty()
        && contained_in(&quotient_eigenvalues, &numeric_values, tol);

    let pass = max_abs_deviation.is_some_and(|d| d < tol)
        && trace_residual < tol
        && psd_ok
        && quotient_containment_ok;
    Ok(VerificationReport {
        case: CaseId { family, m, n, kind },
        closed_form,
        numeric: Spectrum::from_values(&numeric_values, eigen::DEFAULT_GROUPING_TOL),
        max_abs_deviation,
        trace_residual,
        min_eigenvalue,
        psd_ok,
        quotient_eigenvalues,
        quotient_containment_ok,
        errata_flags,
        failure,
        tol,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub reports: Vec<VerificationReport>,
    /// Cells outside a family's domain (NC needs `m, n >= 2`).
    pub skipped: usize,
}

impl SweepOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| !r.pass).count()
    }
}

/// Runs every `(m, n, kind)` cell, ordered by `m`, then `n`, then
/// [`ClosedFormCase::ALL`] order. Failing cells do not stop the sweep.
pub fn sweep(
    m_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
    kinds: &[ClosedFormCase],
    tol: f64,
) -> Result<SweepOutcome> {
    for (name, r) in [("m", &m_range), ("n", &n_range)] {
        if r.is_empty() || *r.start() == 0 || *r.end() > MAX_SWEEP_PARAM {
            return Err(Error::InvalidParameter(format!(
                "{name} range {}..={} must be nonempty within 1..={MAX_SWEEP_PARAM}",
                r.start(),
                r.end()
            )));
        }
    }
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();

    let mut reports = Vec::new();
    let mut skipped = 0;
    for m in m_range {
        for n in n_range.clone() {
            for &k in &kinds {
                if k.family().validate(m, n).is_err() {
                    skipped += 1;
                    continue;
                }
                reports.push(verify_case(k.family(), m, n, k.kind(), tol)?);
            }
        }
    }
    Ok(SweepOutcome { reports, skipped })
}

/// `G(order, p)` random graph.
pub fn random_graph(order: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in (u + 1)..order {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, edges).expect("generated edges are simple")
}

/// One random pair `(G1, G2)` checked against both join spectrum maps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JoinCheck {
    pub seed: u64,
    pub n1: usize,
    pub n2: usize,
    pub edges1: Vec<(usize, usize)>,
    pub edges2: Vec<(usize, usize)>,
    pub components1: usize,
    pub components2: usize,
    pub laplacian_deviation: f64,
    pub distance_laplacian_deviation: f64,
    pub pass: bool,
}

/// Checks one seeded random pair with orders in `1..=max_order`.
pub fn check_random_join(seed: u64, max_order: usize, tol: f64) -> Result<JoinCheck> {
    if max_order == 0 {
        return Err(Error::InvalidParameter("max_order must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n1 = rng.random_range(1..=max_order);
    let n2 = rng.random_range(1..=max_order);
    let g1 = random_graph(n1, JOIN_EDGE_PROBABILITY, &mut rng);
    let g2 = random_graph(n2, JOIN_EDGE_PROBABILITY, &mut rng);
    let joined = join(&g1, &g2)?;

    let spec1 = eigen::eigenvalues(&laplacian_matrix(&g1))?;
    let spec2 = eigen::eigenvalues(&laplacian_matrix(&g2))?;

    let closed_l = join_laplacian_spectrum(&spec1, &spec2)?;
    let numeric_l = eigen::eigenvalues(&laplacian_matrix(&joined))?;
    let laplacian_deviation = compare_spectra(&closed_l.expanded(), &numeric_l)?;

    let closed_dl = join_distance_laplacian_spectrum(&spec1, &spec2)?;
    let numeric_dl = eigen::eigenvalues(&distance_laplacian(&joined)?)?;
    let distance_laplacian_deviation = compare_spectra(&closed_dl.expanded(), &numeric_dl)?;

    Ok(JoinCheck {
        seed,
        n1,
        n2,
        edges1: g1.edges().to_vec(),
        edges2: g2.edges().to_vec(),
        components1: g1.component_count(),
        components2: g2.component_count(),
        laplacian_deviation,
        distance_laplacian_deviation,
        pass: laplacian_deviation < tol && distance_laplacian_deviation < tol,
    })
}

/// `count` pairs with seeds `base_seed, base_seed + 1, ...`.
pub fn check_random_joins(
    count: usize,
    max_order: usize,
    base_seed: u64,
    tol: f64,
) -> Result<Vec<JoinCheck>> {
    (0..count as u64)
        .map(|i| check_random_join(base_seed + i, max_order, tol))
        .collect()
}
