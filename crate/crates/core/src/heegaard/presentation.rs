use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::{HeegaardData, HeegaardError};
use crate::homology::{transvection_power, HomologyClass, SymplecticBasis, SymplecticMap};
use crate::linalg::{determinant, rank_mod_p, smith_normal_form, LinalgError, Matrix};
use crate::scalar::json_int;
use crate::{IntMatrix, Side};

/// The matrix `A(f)` together with the gluing it was built from; the
/// gluing is needed to move a left twist across to the A-rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    genus: usize,
    matrix: IntMatrix,
    gluing: SymplecticMap,
}

impl PresentationMatrix {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn gluing(&self) -> &SymplecticMap {
        &self.gluing
    }

    pub fn det(&self) -> BigInt {
        determinant(&self.matrix).expect("presentation matrices are square")
    }
}

impl Serialize for PresentationMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.matrix.serialize(ser)
    }
}

/// Rows `f^{-1}(a_i)` then `b_j`, in the symplectic basis.
pub fn presentation_matrix(h: &HeegaardData) -> PresentationMatrix {
    let g = h.genus();
    let pull = h.gluing().inverse();
    let rows: Vec<Vec<BigInt>> = h
        .a_system()
        .classes()
        .iter()
        .map(|a| pull.apply(a).0)
        .chain(h.b_system().classes().iter().map(|b| b.0.clone()))
        .collect();
    PresentationMatrix {
        genus: g,
        matrix: Matrix::from_rows(rows).expect("2g rows of length 2g"),
        gluing: h.gluing().clone(),
    }
}

/// `|H_1|`: finite with the given order, or infinite (positive `b_1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1Order {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for H1Order {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            H1Order::Finite(n) => json_int::serialize(n, ser),
            H1Order::Infinite => ser.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub b1: usize,
    #[serde(with = "json_int::vec")]
    pub torsion: Vec<BigInt>,
    pub order: H1Order,
}

/// `b_1 = 2g - rank`, torsion from the Smith form, `|H_1| = |det|` when finite.
pub fn invariants(a: &PresentationMatrix) -> Invariants {
    let snf = smith_normal_form(&a.matrix);
    let b1 = a.matrix.rows() - snf.rank;
    let order = if b1 == 0 { H1Order::Finite(a.det().abs()) } else { H1Order::Infinite };
    Invariants { b1, torsion: snf.torsion(), order }
}

/// Kernel dimension of `A` over `F_p`.
pub fn b1_mod_p(a: &PresentationMatrix, p: u64) -> Result<usize, LinalgError> {
    Ok(a.matrix.rows() - rank_mod_p(&a.matrix, p)?)
}

/// Presentation matrix after regluing by `f ∘ T_c^n` (right) or `T_c^n ∘ f`
/// (left), without rebuilding.
///
/// Right: each A-row `r` becomes `r - n <r, c> c`. Left: the same with `c`
/// replaced by `f^{-1}(c)`. B-rows never move.
pub fn twist_update(
    a: &PresentationMatrix,
    c: &HomologyClass,
    n: i64,
    side: Side,
) -> Result<PresentationMatrix, HeegaardError> {
    let basis = SymplecticBasis::new(a.genus)?;
    basis.check(c)?;
    let t = transvection_power(c, n)?;
    let (gluing, moved) = match side {
        Side::Right => (a.gluing.compose(&t), c.clone()),
        Side::Left => (t.compose(&a.gluing), a.gluing.inverse().apply(c)),
    };
    let mut matrix = a.matrix.clone();
    if n != 0 {
        let n = BigInt::from(n);
        for i in 0..a.genus {
            let row = HomologyClass(matrix.row(i).to_vec());
            let k = basis.pairing(&row, &moved) * &n;
            if k.is_zero() {
                continue;
            }
            for (x, m) in matrix.row_mut(i).iter_mut().zip(&moved.0) {
                *x -= &k * m;
            }
        }
    }
    Ok(PresentationMatrix { genus: a.genus, matrix, gluing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heegaard::{lens_space, DiskSystem};
    use crate::homology::TwistWord;

    #[test]
    fn sphere_and_connected_sums() {
        let s3 = presentation_matrix(&HeegaardData::standard(1, TwistWord::empty()).unwrap());
        assert_eq!(*s3.matrix(), Matrix::from_i64_rows(&[[1, 0], [0, 1]]));
        assert_eq!(invariants(&s3).order, H1Order::Finite(BigInt::from(1)));
        for g in 1..=4 {
            let a = DiskSystem::standard_a(g);
            let h = HeegaardData::new(a.clone(), a, TwistWord::empty()).unwrap();
            let inv = invariants(&presentation_matrix(&h));
            assert_eq!(inv.b1, g);
            assert_eq!(inv.order, H1Order::Infinite);
        }
    }

    #[test]
    fn lens_family_from_twist_powers() {
        // A = B = {e1}, gluing T_{e2}^p: rows (1, -p) and (1, 0)
        let e1 = DiskSystem::standard_a(1);
        for p in 0..8i64 {
            let w = TwistWord::from_i64(&[(&[0, 1], p)]).unwrap();
            let a = presentation_matrix(&HeegaardData::new(e1.clone(), e1.clone(), w).unwrap());
            assert_eq!(a.det().abs(), BigInt::from(p));
            let inv = invariants(&a);
            if p == 0 {
                assert_eq!((inv.b1, inv.order), (1, H1Order::Infinite));
            } else {
                assert_eq!(inv.order, H1Order::Finite(BigInt::from(p)));
            }
        }
        assert_eq!(b1_mod_p(&presentation_matrix(&lens_space(5, 2).unwrap()), 5).unwrap(), 1);
    }

    #[test]
    fn mod_p_examples() {
        let id = presentation_matrix(&HeegaardData::standard(2, TwistWord::empty()).unwrap());
        assert_eq!(b1_mod_p(&id, 3).unwrap(), 0);
        assert!(b1_mod_p(&id, 4).is_err());
    }

    #[test]
    fn trivial_updates() {
        let h = lens_space(7, 3).unwrap();
        let a = presentation_matrix(&h);
        let c = HomologyClass::from_i64(&[1, 0]);
        assert_eq!(twist_update(&a, &c, 0, Side::Right).unwrap().matrix(), a.matrix());
        // the pulled-back row is (3, 7); twisting about it changes nothing
        let r = HomologyClass(a.matrix().row(0).to_vec());
        assert_eq!(twist_update(&a, &r, 5, Side::Right).unwrap().matrix(), a.matrix());
    }
}
