//! Exact determinants of small rational matrices.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant by rational Gaussian elimination with row pivoting.
/// Exact over the rationals; the empty matrix has determinant 1.
pub(crate) fn det_rational(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    let mut m: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return BigRational::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &pivot;
            for k in col..n {
                let delta = &factor * &m[col][k];
                m[row][k] -= delta;
            }
        }
    }
    det
}
