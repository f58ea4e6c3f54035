//! Closed-form Laplacian and distance Laplacian spectra for paths, joins,
//! generalized fans `F_{m,n}` and the doubled fans `NC(F_{m,n})`.
//!
//! Three of the published statements for these families are internally
//! inconsistent. The functions here return the corrected multisets (each
//! checked against the Jacobi solver and the matrix trace) and record what
//! was changed in [`ClosedFormSpectrum::errata_notes`]; the uncorrected
//! versions live in [`crate::errata`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Family;
use crate::quotient::QuotientMatrix;

/// Largest `|value|` accepted as the zero eigenvalue of a Laplacian spectrum.
pub const ZERO_TOL: f64 = 1e-8;

pub const NOTE_NC_LAPLACIAN_QUADRATIC: &str = "nc-laplacian: the stated root pair (m+n)/2 ± sqrt(m^2+2(m+2)n+n^2-4m+4+1)/2 \
     sums to m+n, but the quotient characteristic polynomial factors as x(x-(m+n))(x^2-(m+n+2)x+2m); \
     roots of x^2-(m+n+2)x+2m used instead";
pub const NOTE_FAN_DISTANCE_LAPLACIAN: &str = "fan-distance-laplacian: the stated multiset (n+m with multiplicity m-1, \
     m+2n-2+2cos(pi j/n) for 0<=j<=n-1, plus 0 and m+n) has m+n+1 entries; the join rule gives n+2m with \
     multiplicity m-1 and j ranging over 1..n-1";
pub const NOTE_NC_DISTANCE_LAPLACIAN: &str = "nc-distance-laplacian: the stated hub pair 3n+5m-4, 3n+5m-2 disagrees \
     with the eigenvector derivation, which gives 3n+5m and 3n+5m-4; the derived pair matches the trace and is used";

/// Which formula produced a [`ClosedFormSpectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormSource {
    PathLaplacian,
    JoinLaplacian,
    FanLaplacian,
    NcLaplacian,
    JoinDistanceLaplacian,
    FanDistanceLaplacian,
    NcDistanceLaplacian,
}

/// Eigenvalue multiset given by a formula, as `(value, multiplicity)` terms
/// in formula order. Terms may repeat a value (e.g. `n = m + 2` for `F_{2,2}`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormSpectrum {
    pub source: ClosedFormSource,
    pub pairs: Vec<(f64, usize)>,
    pub errata_notes: Vec<String>,
}

impl ClosedFormSpectrum {
    fn new(source: ClosedFormSource) -> Self {
        Self {
            source,
            pairs: Vec::new(),
            errata_notes: Vec::new(),
        }
    }

    fn push(&mut self, value: f64, multiplicity: usize) {
        if multiplicity > 0 {
            self.pairs.push((value, multiplicity));
        }
    }

    fn note(mut self, note: &str) -> Self {
        self.errata_notes.push(note.to_owned());
        self
    }

    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.pairs.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Ascending, each value repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .pairs
            .iter()
            .flat_map(|&(x, k)| std::iter::repeat_n(x, k))
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn sum(&self) -> f64 {
        self.pairs.iter().map(|&(x, k)| x * k as f64).sum()
    }
}

fn check_fan(m: usize, n: usize) -> Result<()> {
    Family::Fan.validate(m, n)
}

fn check_nc(m: usize, n: usize) -> Result<()> {
    Family::Nc.validate(m, n)
}

/// `2 - 2cos(pi j / n)`, the `j`-th Laplacian eigenvalue of `P_n`.
pub fn path_eigenvalue(j: usize, n: usize) -> f64 {
    2.0 - 2.0 * (PI * j as f64 / n as f64).cos()
}

fn nonzero_path_eigenvalues(n: usize) -> impl Iterator<Item = f64> {
    (1..n).map(move |j| path_eigenvalue(j, n))
}

/// `{2 - 2cos(pi j/n) : j = 0..n-1}`.
pub fn path_laplacian_spectrum(n: usize) -> Result<ClosedFormSpectrum> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let mut s = ClosedFormSpectrum::new(ClosedFormSource::PathLaplacian);
    for j in 0..n {
        s.push(path_eigenvalue(j, n), 1);
    }
    Ok(s)
}

// Removes the entry closest to zero (one copy of the trivial eigenvalue).
fn drop_zero(spectrum: &[f64]) -> Result<Vec<f64>> {
    let (idx, smallest) = spectrum
        .iter()
        .map(|x| x.abs())
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or(Error::MissingZeroEigenvalue {
            smallest: f64::INFINITY,
        })?;
    if smallest > ZERO_TOL {
        return Err(Error::MissingZeroEigenvalue { smallest });
    }
    let mut rest = spectrum.to_vec();
    rest.remove(idx);
    Ok(rest)
}

/// Laplacian spectrum of `G1 + G2` from the full Laplacian spectra of `G1`
/// (order `spec1.len()`) and `G2`: `{0, n1+n2}`, the nontrivial `lambda + n2`
/// and the nontrivial `mu + n1`.
pub fn join_laplacian_spectrum(spec1: &[f64], spec2: &[f64]) -> Result<ClosedFormSpectrum> {
    let (n1, n2) = (spec1.len() as f64, spec2.len() as f64);
    let rest1 = drop_zero(spec1)?;
    let rest2 = drop_zero(spec2)?;
    let mut s = ClosedFormSpectrum::new(ClosedFormSource::JoinLaplacian);
    s.push(0.0, 1);
    s.push(n1 + n2, 1);
    for l in rest1 {
        s.push(l + n2, 1);
    }
    for l in rest2 {
        s.push(l + n1, 1);
    }
    Ok(s)
}

/// Distance Laplacian spectrum of `G1 + G2` from the Laplacian spectra:
/// `{0, n1+n2}`, `n2 + 2n1 - lambda` and `n1 + 2n2 - mu` over the nontrivial
/// eigenvalues.
pub fn join_distance_laplacian_spectrum(
    spec1: &[f64],
    spec2: &[f64],
) -> Result<ClosedFormSpectrum> {
    let (n1, n2) = (spec1.len() as f64, spec2.len() as f64);
    let rest1 = drop_zero(spec1)?;
    let rest2 = drop_zero(spec2)?;
    let mut s = ClosedFormSpectrum::new(ClosedFormSource::JoinDistanceLaplacian);
    s.push(0.0, 1);
    s.push(n1 + n2, 1);
    for l in rest1 {
        s.push(n2 + 2.0 * n1 - l, 1);
    }
    for l in rest2 {
        s.push(n1 + 2.0 * n2 - l, 1);
    }
    Ok(s)
}

/// Laplacian spectrum of `F_{m,n}`: `0`, `m+n`, `n` (x `m-1`) and
/// `m + 2 - 2cos(pi j/n)` for `j = 1..n-1`. `m = 1` is the ordinary fan.
pub fn fan_laplacian_spectrum(m: usize, n: usize) -> Result<ClosedFormSpectrum> {
    check_fan(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    let mut s = ClosedFormSpectrum::new(ClosedFormSource::FanLaplacian);
    s.push(0.0, 1);
    s.push(mf + nf, 1);
    s.push(nf, m - 1);
    for l in nonzero_path_eigenvalues(n) {
        s.push(mf + l, 1);
    }
    Ok(s)
}

/// Roots of `x^2 - (m+n+2)x + 2m`, ascending.
pub fn nc_laplacian_quadratic_roots(m: usize, n: usize) -> (f64, f64) {
    let (mf, nf) = (m as f64, n as f64);
    let b = mf + nf + 2.0;
    let c = 2.0 * mf;
    stable_quadratic_roots(b, c)
}

/// Roots of `x^2 - (9(m+n)-4)x + (18m^2 + 44mn + 18n^2 - 12m - 24n)`, i.e.
/// `(9(n+m) - 4)/2 ± sqrt(A)/2` with `A = 9m^2 - 14mn + 9n^2 - 24m + 24n + 16`.
pub fn nc_distance_laplacian_quadratic_roots(m: usize, n: usize) -> (f64, f64) {
    let (mf, nf) = (m as f64, n as f64);
    let b = 9.0 * (mf + nf) - 4.0;
    let c = 18.0 * mf * mf + 44.0 * mf * nf + 18.0 * nf * nf - 12.0 * mf - 24.0 * nf;
    stable_quadratic_roots(b, c)
}

/// The radicand `A` of the distance Laplacian quotient quadratic.
pub fn nc_distance_laplacian_discriminant(m: usize, n: usize) -> f64 {
    let (mf, nf) = (m as f64, n as f64);
    24.0 * nf + 9.0 * nf * nf - 14.0 * nf * mf - 24.0 * mf + 9.0 * mf * mf + 16.0
}

// Roots of x^2 - b x + c with b > 0 and a nonnegative discriminant.
fn stable_quadratic_roots(b: f64, c: f64) -> (f64, f64) {
    let disc = (b * b - 4.0 * c).max(0.0);
    let big = 0.5 * (b + disc.sqrt());
    let small = if big == 0.0 { 0.0 } else { c / big };
    (small, big)
}

/// Laplacian spectrum of `NC(F_{m,n})`, `m, n >= 2`.
pub fn nc_laplacian_spectrum(m: usize, n: usize) -> Result<ClosedFormSpectrum> {
    check_nc(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    let mut s = ClosedFormSpectrum::new(ClosedFormSource::NcLaplacian);
    for l in nonzero_path_eigenvalues(n) {
        s.push(l + mf, 2);
    }
    s.push(nf, m - 1);
    s.push(nf + 2.0, m - 1);
    s.push(0.0, 1);
    s.push(mf + nf, 1);
    let (lo, hi) = nc_laplacian_quadratic_roots(m, n);
    s.push(lo, 1);
    s.push(hi, 1);
    Ok(s.note(NOTE_NC_LAPLACIAN_QUADRATIC))
}

/// Distance Laplacian spectrum of `F_{m,n}`: `0`, `m+n`, `n+2m` (x `m-1`)
/// and `m + 2n - 2 + 2cos(pi j/n)` for `j = 1..n-1`.
pub fn fan_distance_laplacian_spectrum(m: usize, n: usize) -> Result<ClosedFormSpectrum> {
    check_fan(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    let mut s = ClosedFormSpectrum::new(ClosedFormSource::FanDistanceLaplacian);
    s.push(nf + 2.0 * mf, m - 1);
    for l in nonzero_path_eigenvalues(n) {
        s.push(mf + 2.0 * nf - l, 1);
    }
    s.push(0.0, 1);
    s.push(mf + nf, 1);
    Ok(s.note(NOTE_FAN_DISTANCE_LAPLACIAN))
}

/// Distance Laplacian spectrum of `NC(F_{m,n})`, `m, n >= 2`.
pub fn nc_distance_laplacian_spectrum(m: usize, n: usize) -> Result<ClosedFormSpectrum> {
    check_nc(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    let mut s = ClosedFormSpectrum::new(ClosedFormSource::NcDistanceLaplacian);
    for l in nonzero_path_eigenvalues(n) {
        s.push(5.0 * nf + 3.0 * mf - l, 2);
    }
    s.push(3.0 * nf + 5.0 * mf, m - 1);
    s.push(3.0 * nf + 5.0 * mf - 4.0, m - 1);
    s.push(0.0, 1);
    s.push(3.0 * (nf + mf), 1);
    let (lo, hi) = nc_distance_laplacian_quadratic_roots(m, n);
    s.push(lo, 1);
    s.push(hi, 1);
    Ok(s.note(NOTE_NC_DISTANCE_LAPLACIAN))
}

/// The 4x4 equitable quotient of `L(NC(F_{m,n}))` over
/// path | hubs | hubs | path, as integers.
pub fn nc_laplacian_quotient_int(m: usize, n: usize) -> Result<Vec<Vec<i128>>> {
    check_nc(m, n)?;
    let (m, n) = (m as i128, n as i128);
    Ok(vec![
        vec![m, -m, 0, 0],
        vec![-n, n + 1, -1, 0],
        vec![0, -1, n + 1, -n],
        vec![0, 0, -m, m],
    ])
}

/// The 4x4 equitable quotient of `D^L(NC(F_{m,n}))`, as integers.
pub fn nc_distance_laplacian_quotient_int(m: usize, n: usize) -> Result<Vec<Vec<i128>>> {
    check_nc(m, n)?;
    let (m, n) = (m as i128, n as i128);
    let s = 3 * (n + m);
    Ok(vec![
        vec![s, -m, -2 * m, -3 * n],
        vec![-n, s - 2, -(3 * m - 2), -2 * n],
        vec![-2 * n, -(3 * m - 2), s - 2, -n],
        vec![-3 * n, -2 * m, -m, s],
    ])
}

fn to_quotient(rows: Vec<Vec<i128>>, m: usize, n: usize) -> Result<QuotientMatrix> {
    let rows: Vec<Vec<f64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect();
    QuotientMatrix::from_rows(&rows, vec![n, m, m, n])
}

pub fn nc_laplacian_quotient(m: usize, n: usize) -> Result<QuotientMatrix> {
    to_quotient(nc_laplacian_quotient_int(m, n)?, m, n)
}

pub fn nc_distance_laplacian_quotient(m: usize, n: usize) -> Result<QuotientMatrix> {
    to_quotient(nc_distance_laplacian_quotient_int(m, n)?, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn assert_multiset(got: &ClosedFormSpectrum, want: &[f64], tol: f64) {
        let mut want = want.to_vec();
        want.sort_by(f64::total_cmp);
        let got = got.expanded();
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn path() {
        assert_multiset(&path_laplacian_spectrum(2).unwrap(), &[0.0, 2.0], 1e-15);
        assert_multiset(
            &path_laplacian_spectrum(4).unwrap(),
            &[0.0, 2.0 - SQRT_2, 2.0, 2.0 + SQRT_2],
            1e-14,
        );
        for n in 1..20 {
            let s = path_laplacian_spectrum(n).unwrap();
            assert!((s.sum() - 2.0 * (n as f64 - 1.0)).abs() < 1e-12);
        }
        assert!(path_laplacian_spectrum(0).is_err());
    }

    #[test]
    fn join_small() {
        let k2 = join_laplacian_spectrum(&[0.0], &[0.0]).unwrap();
        assert_multiset(&k2, &[0.0, 2.0], 1e-15);
        let k2 = join_distance_laplacian_spectrum(&[0.0], &[0.0]).unwrap();
        assert_multiset(&k2, &[0.0, 2.0], 1e-15);
        assert!(matches!(
            join_laplacian_spectrum(&[1.0], &[0.0]),
            Err(Error::MissingZeroEigenvalue { .. })
        ));
        assert!(join_distance_laplacian_spectrum(&[], &[0.0]).is_err());
    }

    #[test]
    fn join_reproduces_fan() {
        for (m, n) in [(3, 4), (1, 5), (2, 2)] {
            let null = vec![0.0; m];
            let path = path_laplacian_spectrum(n).unwrap().expanded();
            let via_join = join_laplacian_spectrum(&null, &path).unwrap();
            assert_eq!(via_join.len(), m + n);
            let direct = fan_laplacian_spectrum(m, n).unwrap().expanded();
            for (a, b) in via_join.expanded().iter().zip(&direct) {
                assert!((a - b).abs() < 1e-12);
            }
            let via_join = join_distance_laplacian_spectrum(&null, &path)
                .unwrap()
                .expanded();
            let direct = fan_distance_laplacian_spectrum(m, n).unwrap().expanded();
            for (a, b) in via_join.iter().zip(&direct) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn fan_laplacian_values() {
        assert_multiset(
            &fan_laplacian_spectrum(1, 4).unwrap(),
            &[0.0, 5.0, 3.0 - SQRT_2, 3.0, 3.0 + SQRT_2],
            1e-12,
        );
        assert_multiset(
            &fan_laplacian_spectrum(3, 4).unwrap(),
            &[0.0, 7.0, 4.0, 4.0, 5.0 - SQRT_2, 5.0, 5.0 + SQRT_2],
            1e-12,
        );
        let f22 = fan_laplacian_spectrum(2, 2).unwrap();
        assert_multiset(&f22, &[0.0, 2.0, 4.0, 4.0], 1e-12);
        assert!((f22.sum() - 10.0).abs() < 1e-12);
        assert!(fan_laplacian_spectrum(0, 2).is_err());
    }

    #[test]
    fn nc_laplacian_values() {
        let s5 = 5f64.sqrt();
        let s = nc_laplacian_spectrum(2, 2).unwrap();
        assert_multiset(
            &s,
            &[0.0, 3.0 - s5, 2.0, 4.0, 4.0, 4.0, 4.0, 3.0 + s5],
            1e-12,
        );
        assert!((s.sum() - 24.0).abs() < 1e-12);
        assert_eq!(s.errata_notes.len(), 1);
        let (lo, hi) = nc_laplacian_quadratic_roots(3, 4);
        let r = 57f64.sqrt();
        assert!((lo - (9.0 - r) / 2.0).abs() < 1e-13 && (hi - (9.0 + r) / 2.0).abs() < 1e-13);
        for m in 2..8 {
            for n in 2..8 {
                assert_eq!(nc_laplacian_spectrum(m, n).unwrap().len(), 2 * (m + n));
                let (lo, hi) = nc_laplacian_quadratic_roots(m, n);
                let b = (m + n + 2) as f64;
                for x in [lo, hi] {
                    assert!((x * x - b * x + 2.0 * m as f64).abs() < 1e-10);
                }
            }
        }
        assert!(nc_laplacian_spectrum(1, 3).is_err());
    }

    #[test]
    fn fan_distance_laplacian_values() {
        let s = fan_distance_laplacian_spectrum(3, 4).unwrap();
        assert_multiset(
            &s,
            &[0.0, 7.0, 10.0, 10.0, 9.0 - SQRT_2, 9.0, 9.0 + SQRT_2],
            1e-12,
        );
        assert!((s.sum() - 54.0).abs() < 1e-12);
        // F_{1,2} = K_3
        assert_multiset(
            &fan_distance_laplacian_spectrum(1, 2).unwrap(),
            &[0.0, 3.0, 3.0],
            1e-12,
        );
        for m in 1..6 {
            for n in 1..6 {
                assert_eq!(fan_distance_laplacian_spectrum(m, n).unwrap().len(), m + n);
            }
        }
    }

    #[test]
    fn nc_distance_laplacian_values() {
        let r = 2.0 * SQRT_2;
        let s = nc_distance_laplacian_spectrum(2, 2).unwrap();
        assert_multiset(
            &s,
            &[0.0, 12.0, 12.0, 16.0 - r, 14.0, 14.0, 16.0, 16.0 + r],
            1e-12,
        );
        assert!((s.sum() - 100.0).abs() < 1e-12);
        let (lo, hi) = nc_distance_laplacian_quadratic_roots(2, 2);
        // printed quartic at m = n = 2: x^4 - 44x^3 + 632x^2 - 2976x
        assert!((12.0 + lo + hi - 44.0).abs() < 1e-12);
        assert!((12.0 * lo * hi - 2976.0).abs() < 1e-9);
        for (m, n) in [(2, 5), (7, 3), (4, 4)] {
            let a = nc_distance_laplacian_discriminant(m, n);
            let c = 9.0 * (m + n) as f64 - 4.0;
            let (lo, hi) = nc_distance_laplacian_quadratic_roots(m, n);
            assert!((lo - (c - a.sqrt()) / 2.0).abs() < 1e-10);
            assert!((hi - (c + a.sqrt()) / 2.0).abs() < 1e-10);
        }
    }

    #[test]
    fn printed_quotients() {
        assert_eq!(
            nc_laplacian_quotient(3, 4).unwrap().rows(),
            vec![
                vec![3.0, -3.0, 0.0, 0.0],
                vec![-4.0, 5.0, -1.0, 0.0],
                vec![0.0, -1.0, 5.0, -4.0],
                vec![0.0, 0.0, -3.0, 3.0],
            ]
        );
        assert_eq!(
            nc_distance_laplacian_quotient(2, 2).unwrap().rows(),
            vec![
                vec![12.0, -2.0, -4.0, -6.0],
                vec![-2.0, 10.0, -4.0, -4.0],
                vec![-4.0, -4.0, 10.0, -2.0],
                vec![-6.0, -4.0, -2.0, 12.0],
            ]
        );
    }

    #[test]
    fn serializes_with_source_and_notes() {
        let s = nc_distance_laplacian_spectrum(2, 3).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"nc-distance-laplacian\""));
        let back: ClosedFormSpectrum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
