use super::{LinalgError, Matrix};
use crate::scalar::Scalar;

/// Exact determinant by Bareiss fraction-free elimination. Every division
/// is exact, so intermediate entries stay integral and bounded by minors.
pub fn determinant<T: Scalar>(a: &Matrix<T>) -> Result<T, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(i, k);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        let pivot = m[(k, k)].clone();
        for i in k + 1..n {
            let lead = m[(i, k)].clone();
            for j in k + 1..n {
                let v = m[(i, j)].clone() * pivot.clone() - lead.clone() * m[(k, j)].clone();
                m[(i, j)] = v / prev.clone();
            }
            m[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let d = m[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Rank over the rationals, by fraction-free row echelon reduction.
pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    let mut prev = T::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(p, r);
        let pivot = m[(r, c)].clone();
        for i in r + 1..rows {
            let lead = m[(i, c)].clone();
            for j in c + 1..cols {
                let v = m[(i, j)].clone() * pivot.clone() - lead.clone() * m[(r, j)].clone();
                m[(i, j)] = v / prev.clone();
            }
            m[(i, c)] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}
