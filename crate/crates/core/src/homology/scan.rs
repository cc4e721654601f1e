use rayon::prelude::*;
use serde::Serialize;

use super::symplectic::{transvection_power, HomologyClass, SymplecticBasis};
use super::word::{word_to_matrix, TwistWord};
use super::HomologyError;
use crate::linalg::{rank, Matrix};
use crate::Window;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedClassRow {
    pub n: i64,
    /// Rank of the lattice of classes fixed by `f · T_c^n`.
    pub fixed_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedClassScan {
    pub genus: usize,
    pub window: Window,
    pub rows: Vec<FixedClassRow>,
    /// `{n : fixed_rank > 0}`.
    pub exceptional: Vec<i64>,
    /// Every exceptional `n` lies in the inner window.
    pub confined: bool,
}

/// For each `n` in the window, the rank of the fixed lattice of
/// `word_to_matrix(f) · T_c^n`.
pub fn fixed_class_coset_scan(f: &TwistWord, c: &HomologyClass, w: &Window) -> Result<FixedClassScan, HomologyError> {
    let basis = SymplecticBasis::new(c.genus())?;
    basis.check(c)?;
    let genus = basis.genus;
    let base = word_to_matrix(f, genus)?;
    transvection_power(c, 0)?;
    let ident = Matrix::identity(2 * genus);
    let rows: Vec<FixedClassRow> = w
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let m = base.compose(&transvection_power(c, n).expect("validated above"));
            let shifted = m.matrix().checked_sub(&ident).expect("square");
            FixedClassRow { n, fixed_rank: 2 * genus - rank(&shifted) }
        })
        .collect();
    let exceptional: Vec<i64> = rows.iter().filter(|r| r.fixed_rank > 0).map(|r| r.n).collect();
    let confined = exceptional.iter().all(|&n| w.in_inner(n));
    Ok(FixedClassScan { genus, window: *w, rows, exceptional, confined })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_is_exceptional_everywhere() {
        let e1 = HomologyClass::from_i64(&[1, 0]);
        let w = Window::symmetric(10).unwrap();
        let scan = fixed_class_coset_scan(&TwistWord::empty(), &e1, &w).unwrap();
        assert_eq!(scan.exceptional.len(), 21);
        assert!(!scan.confined);
    }

    #[test]
    fn hyperbolic_word_has_finite_exceptions() {
        let f = TwistWord::from_i64(&[(&[1, 0], -1), (&[0, 1], 1)]).unwrap();
        let e1 = HomologyClass::from_i64(&[1, 0]);
        let scan = fixed_class_coset_scan(&f, &e1, &Window::symmetric(50).unwrap()).unwrap();
        assert!(scan.confined);
        assert!(scan.exceptional.len() <= 1, "{:?}", scan.exceptional);
    }

    #[test]
    fn empty_window() {
        let scan = fixed_class_coset_scan(&TwistWord::empty(), &HomologyClass::from_i64(&[1, 0]), &Window::empty()).unwrap();
        assert!(scan.rows.is_empty() && scan.exceptional.is_empty() && scan.confined);
    }
}
