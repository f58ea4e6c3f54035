//! The published (uncorrected) forms of the inconsistent results, kept so
//! tests and the CLI can demonstrate exactly where they fail.

use std::f64::consts::PI;

use crate::closed_form::{nc_distance_laplacian_quotient_int, nc_laplacian_quotient_int};
use crate::error::Result;
use crate::graph::Family;
use crate::poly::{charpoly, IntPoly};

/// Quartic printed for the NC Laplacian quotient:
/// `x^4 + (-2m-2n-2)x^3 + (m^2+2mn+n^2+4m+2n)x^2 + (-2m^2-2mn)x`.
pub fn printed_nc_laplacian_charpoly(m: usize, n: usize) -> IntPoly {
    let (m, n) = (m as i128, n as i128);
    IntPoly::new(vec![
        0,
        -2 * m * m - 2 * m * n,
        m * m + 2 * m * n + n * n + 4 * m + 2 * n,
        -2 * m - 2 * n - 2,
        1,
    ])
}

/// `x (x - (m+n)) (x^2 - (m+n+2)x + 2m)` expanded.
pub fn factored_nc_laplacian_charpoly(m: usize, n: usize) -> IntPoly {
    let (m, n) = (m as i128, n as i128);
    let quad = IntPoly::new(vec![2 * m, -(m + n + 2), 1]);
    &(&IntPoly::linear(0) * &IntPoly::linear(m + n)) * &quad
}

/// Quartic printed for the NC distance Laplacian quotient.
pub fn printed_nc_distance_laplacian_charpoly(m: usize, n: usize) -> IntPoly {
    let (m, n) = (m as i128, n as i128);
    IntPoly::new(vec![
        0,
        -54 * m * m * m - 186 * m * m * n - 186 * m * n * n - 54 * n * n * n
            + 36 * m * m
            + 108 * m * n
            + 72 * n * n,
        45 * m * m + 98 * m * n + 45 * n * n - 24 * m - 36 * n,
        -12 * m - 12 * n + 4,
        1,
    ])
}

/// `x (x - 3(m+n)) (x^2 - (9(m+n)-4)x + 18m^2+44mn+18n^2-12m-24n)` expanded.
pub fn factored_nc_distance_laplacian_charpoly(m: usize, n: usize) -> IntPoly {
    let (m, n) = (m as i128, n as i128);
    let quad = IntPoly::new(vec![
        18 * m * m + 44 * m * n + 18 * n * n - 12 * m - 24 * n,
        -(9 * (m + n) - 4),
        1,
    ]);
    &(&IntPoly::linear(0) * &IntPoly::linear(3 * (m + n))) * &quad
}

/// Characteristic polynomial of the NC Laplacian quotient, computed exactly
/// from the matrix.
pub fn nc_laplacian_quotient_charpoly(m: usize, n: usize) -> Result<IntPoly> {
    Ok(charpoly(&nc_laplacian_quotient_int(m, n)?))
}

pub fn nc_distance_laplacian_quotient_charpoly(m: usize, n: usize) -> Result<IntPoly> {
    Ok(charpoly(&nc_distance_laplacian_quotient_int(m, n)?))
}

/// Sum of the stated NC Laplacian root pair `(m+n)/2 ± r`, which is `m+n`
/// whatever `r` is. The quotient quadratic needs `m+n+2`.
pub fn printed_nc_laplacian_pair_sum(m: usize, n: usize) -> usize {
    m + n
}

/// The fan distance Laplacian multiset as stated: `n+m` (x `m-1`),
/// `m+2n-2+2cos(pi j/n)` for `0 <= j <= n-1`, and `0`, `m+n`. It has
/// `m+n+1` entries.
pub fn printed_fan_distance_laplacian_multiset(m: usize, n: usize) -> Result<Vec<f64>> {
    Family::Fan.validate(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    let mut v = vec![nf + mf; m - 1];
    v.extend((0..n).map(|j| mf + 2.0 * nf - 2.0 + 2.0 * (PI * j as f64 / nf).cos()));
    v.extend([0.0, mf + nf]);
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// The NC distance Laplacian multiset as stated, with the hub pair
/// `3n+5m-4`, `3n+5m-2`.
pub fn printed_nc_distance_laplacian_multiset(m: usize, n: usize) -> Result<Vec<f64>> {
    Family::Nc.validate(m, n)?;
    let (mf, nf) = (m as f64, n as f64);
    let mut v = Vec::new();
    for j in 1..n {
        let l = 2.0 - 2.0 * (PI * j as f64 / nf).cos();
        v.extend([5.0 * nf + 3.0 * mf - l; 2]);
    }
    v.extend(std::iter::repeat_n(3.0 * nf + 5.0 * mf - 4.0, m - 1));
    v.extend(std::iter::repeat_n(3.0 * nf + 5.0 * mf - 2.0, m - 1));
    let c = 4.5 * (nf + mf) - 2.0;
    let a = crate::closed_form::nc_distance_laplacian_discriminant(m, n).sqrt();
    v.extend([c - 0.5 * a, c + 0.5 * a, 3.0 * (nf + mf), 0.0]);
    v.sort_by(f64::total_cmp);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_quartic_identities() {
        for m in 2..=12 {
            for n in 2..=12 {
                let exact = nc_laplacian_quotient_charpoly(m, n).unwrap();
                assert_eq!(printed_nc_laplacian_charpoly(m, n), exact);
                assert_eq!(factored_nc_laplacian_charpoly(m, n), exact);
                // x^3 coefficient is minus the root sum: 0 + (m+n) + (m+n+2)
                assert_ne!(
                    printed_nc_laplacian_pair_sum(m, n) as i128,
                    -exact.coeff(3) - (m + n) as i128
                );
            }
        }
    }

    #[test]
    fn distance_laplacian_quartic_identities() {
        let at22 = printed_nc_distance_laplacian_charpoly(2, 2);
        assert_eq!(at22.coeffs(), &[0, -2976, 632, -44, 1]);
        for m in 2..=12 {
            for n in 2..=12 {
                let exact = nc_distance_laplacian_quotient_charpoly(m, n).unwrap();
                assert_eq!(printed_nc_distance_laplacian_charpoly(m, n), exact);
                assert_eq!(factored_nc_distance_laplacian_charpoly(m, n), exact);
            }
        }
    }

    #[test]
    fn printed_multisets() {
        assert_eq!(
            printed_fan_distance_laplacian_multiset(3, 4).unwrap().len(),
            8
        );
        let nc = printed_nc_distance_laplacian_multiset(2, 2).unwrap();
        assert_eq!(nc.len(), 8);
        // trace of D^L(NC(F_{2,2})) is 100; the stated hub pair misses it by 2(m-1)
        assert!((nc.iter().sum::<f64>() - 98.0).abs() < 1e-9);
    }
}
