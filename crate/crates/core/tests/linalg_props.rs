use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use twistlab::linalg::{determinant, integral_kernel, rank, rank_mod_p, smith_normal_form, Matrix};
use twistlab::IntMatrix;

/// Laplace expansion along the first row; independent of elimination.
fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
            .collect();
        let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
}

fn rect() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn big(rows: &[Vec<i64>]) -> IntMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
}

#[test]
fn cofactor_oracle_fixture() {
    // frozen from the cofactor oracle
    assert_eq!(cofactor_det(&[vec![2, 4], vec![6, 8]]), BigInt::from(-8));
    assert_eq!(determinant(&big(&[vec![2, 4], vec![6, 8]])).unwrap(), BigInt::from(-8));
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor_expansion(m in square(6)) {
        prop_assert_eq!(determinant(&big(&m)).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (1usize..=5).prop_flat_map(|n| {
        let s = prop::collection::vec(prop::collection::vec(-9i64..=9, n), n);
        (s.clone(), s)
    })) {
        let (a, b) = (big(&a), big(&b));
        prop_assert_eq!(determinant(&(&a * &b)).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn fixed_width_scalars_agree_with_bigint(m in square(5)) {
        let small = Matrix::<i64>::from_rows(m.clone()).unwrap();
        prop_assert_eq!(BigInt::from(determinant(&small).unwrap()), determinant(&big(&m)).unwrap());
        prop_assert_eq!(rank(&small), rank(&big(&m)));
    }

    #[test]
    fn smith_form_reconstructs(m in rect()) {
        let a = big(&m);
        let s = smith_normal_form(&a);
        prop_assert!(s.verify(&a));
        prop_assert_eq!(s.rank, rank(&a));
        prop_assert!(determinant(&s.u).unwrap().abs().is_one());
        prop_assert!(determinant(&s.v).unwrap().abs().is_one());
        if a.is_square() {
            let det = determinant(&a).unwrap();
            if !det.is_zero() {
                let prod: BigInt = s.diag.iter().product();
                prop_assert_eq!(prod, det.abs());
            }
        }
    }

    #[test]
    fn kernel_basis_is_annihilated(m in rect()) {
        let a = big(&m);
        let basis = integral_kernel(&a);
        prop_assert_eq!(basis.len() + rank(&a), a.cols());
        for k in &basis {
            prop_assert!(a.mul_vec(k).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn modular_rank_bounded_by_rational_rank(m in rect(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
        let a = big(&m);
        let s = smith_normal_form(&a);
        let r = rank_mod_p(&a, p).unwrap();
        prop_assert!(r <= s.rank);
        let pb = BigInt::from(p);
        if s.diag[..s.rank].iter().all(|d| !(d % &pb).is_zero()) {
            prop_assert_eq!(r, s.rank);
        }
    }
}
