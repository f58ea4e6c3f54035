//! Exact integer polynomials and characteristic polynomials of small integer
//! matrices.

use std::fmt;
use std::ops::Mul;

/// Integer polynomial, coefficients in ascending degree. Trailing zeros are
/// trimmed so equal polynomials compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<i128>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: i128) -> Self {
        Self::new(vec![-root, 1])
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> i128 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Horner evaluation in floating point.
    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    /// `sum |c_k| |x|^k`, the natural magnitude for judging a residual at `x`.
    pub fn eval_scale(&self, x: f64) -> f64 {
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x.abs() + (c as f64).abs())
    }

    /// Coefficient-wise difference, exact.
    pub fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![0i128; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `det(xI - A)` of a square integer matrix via Faddeev-LeVerrier; every
/// division is exact over the integers.
pub fn charpoly(a: &[Vec<i128>]) -> IntPoly {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum();
            }
            next[i][i] += coeffs[n - k + 1];
        }
        m = next;
        let trace: i128 = (0..n)
            .map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>())
            .sum();
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -trace / k as i128;
    }
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_display() {
        let p = &IntPoly::linear(2) * &IntPoly::linear(-3);
        assert_eq!(p.coeffs(), &[-6, 1, 1]);
        assert_eq!(p.to_string(), "x^2 + x - 6");
        assert_eq!(p.eval(2.0), 0.0);
        assert_eq!(p.eval_scale(1.0), 8.0);
        assert_eq!(IntPoly::new(vec![0, 0]).degree(), None);
    }

    #[test]
    fn charpoly_small() {
        // [[2,1],[1,2]] -> x^2 - 4x + 3
        assert_eq!(charpoly(&[vec![2, 1], vec![1, 2]]).coeffs(), &[3, -4, 1]);
        let tri = vec![vec![1, 5, 7], vec![0, 2, 9], vec![0, 0, 3]];
        let want = &(&IntPoly::linear(1) * &IntPoly::linear(2)) * &IntPoly::linear(3);
        assert_eq!(charpoly(&tri), want);
        assert_eq!(charpoly(&[]).coeffs(), &[1]);
    }
}
