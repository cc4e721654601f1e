use num_bigint::BigInt;
use serde::Serialize;

use super::Matrix;
use crate::scalar::{json_int, Scalar};

/// `u * a * v == diag(diag)` with `u`, `v` unimodular and the nonzero
/// diagonal entries forming a positive divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm<T: Scalar = BigInt> {
    #[serde(with = "json_int::vec")]
    pub diag: Vec<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: Scalar> SmithForm<T> {
    /// The `rows x cols` matrix carrying `diag` on its main diagonal.
    pub fn diagonal_matrix(&self) -> Matrix<T> {
        Matrix::from_fn(self.u.rows(), self.v.rows(), |i, j| {
            if i == j {
                self.diag[i].clone()
            } else {
                T::zero()
            }
        })
    }

    /// Diagonal entries other than 0 and 1: the torsion coefficients.
    pub fn torsion(&self) -> Vec<T> {
        self.diag[..self.rank].iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// Checks `u * a * v == diag`, the divisibility chain and the sign/zero pattern.
    pub fn verify(&self, a: &Matrix<T>) -> bool {
        let Ok(ua) = self.u.checked_mul(a) else { return false };
        let Ok(uav) = ua.checked_mul(&self.v) else { return false };
        if uav != self.diagonal_matrix() {
            return false;
        }
        let (nonzero, zero) = self.diag.split_at(self.rank);
        nonzero.iter().all(|d| d.is_positive())
            && zero.iter().all(T::is_zero)
            && nonzero.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

/// Smith normal form by gcd-driven row and column reduction. The pivot is
/// always the entry of least nonzero absolute value in the active block.
pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut b = a.clone();
    let mut u = Matrix::<T>::identity(rows);
    let mut v = Matrix::<T>::identity(cols);
    let mut t = 0;

    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&b, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        move_to_pivot(&mut b, &mut u, &mut v, t, pi, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !b[(i, t)].is_zero() {
                    let q = b[(i, t)].clone() / b[(t, t)].clone();
                    b.add_row_multiple(i, t, &-q.clone());
                    u.add_row_multiple(i, t, &-q);
                    clean &= b[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !b[(t, j)].is_zero() {
                    let q = b[(t, j)].clone() / b[(t, t)].clone();
                    b.add_col_multiple(j, t, &-q.clone());
                    v.add_col_multiple(j, t, &-q);
                    clean &= b[(t, j)].is_zero();
                }
            }
            if !clean {
                // A remainder smaller than the pivot survived; promote it.
                let line = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_abs_entry(&b, line).expect("pivot is nonzero");
                move_to_pivot(&mut b, &mut u, &mut v, t, pi, pj);
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !b[(i, j)].is_multiple_of(&b[(t, t)])));
            match offender {
                Some(i) => {
                    b.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if b[(t, t)].is_negative() {
            b.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let diag = (0..rows.min(cols)).map(|i| b[(i, i)].clone()).collect();
    SmithForm { diag, u, v, rank: t }
}

fn min_abs_entry<T: Scalar>(
    b: &Matrix<T>,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    cells
        .filter(|&(i, j)| !b[(i, j)].is_zero())
        .min_by(|&x, &y| b[x].abs().cmp(&b[y].abs()))
}

fn move_to_pivot<T: Scalar>(
    b: &mut Matrix<T>,
    u: &mut Matrix<T>,
    v: &mut Matrix<T>,
    t: usize,
    i: usize,
    j: usize,
) {
    b.swap_rows(t, i);
    u.swap_rows(t, i);
    b.swap_cols(t, j);
    v.swap_cols(t, j);
}

/// A lattice basis of `{x in Z^cols : a x = 0}`, read off the trailing
/// columns of the Smith column transform.
pub fn integral_kernel<T: Scalar>(a: &Matrix<T>) -> Vec<Vec<T>> {
    let snf = smith_normal_form(a);
    (snf.rank..a.cols()).map(|j| snf.v.column(j)).collect()
}
