use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use twistlab::homology::{
    characteristic_polynomial, chain_curve_classes, fixed_classes, sl2_word, stretch_lower_bound, transvection,
    transvection_power, word_to_matrix, HomologyClass, SymplecticBasis, SymplecticMap, TwistLetter, TwistWord,
};
use twistlab::linalg::Matrix;
use twistlab::IntMatrix;

fn primitive_class(genus: usize) -> impl Strategy<Value = HomologyClass> {
    prop::collection::vec(-4i64..=4, 2 * genus)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| {
            let g = v.iter().fold(0i64, |a, &b| a.gcd(&b));
            HomologyClass::from_i64(&v.iter().map(|x| x / g).collect::<Vec<_>>())
        })
}

fn twist_word(genus: usize, max_len: usize) -> impl Strategy<Value = TwistWord> {
    prop::collection::vec((primitive_class(genus), -3i64..=3), 0..=max_len).prop_map(|ls| {
        TwistWord::new(ls.into_iter().map(|(class, power)| TwistLetter { class, power }).collect()).unwrap()
    })
}

fn genus_and_word() -> impl Strategy<Value = (usize, TwistWord)> {
    (1usize..=3).prop_flat_map(|g| (Just(g), twist_word(g, 8)))
}

fn form_preserved(m: &IntMatrix) -> bool {
    let j = SymplecticBasis::new(m.rows() / 2).unwrap().form();
    &(&m.transpose() * &j) * m == j
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_words_are_symplectic((g, w) in genus_and_word()) {
        let m = word_to_matrix(&w, g).unwrap();
        prop_assert!(form_preserved(m.matrix()));
        // the canonical form evaluates to the same matrix
        prop_assert_eq!(word_to_matrix(&w.canonical(), g).unwrap(), m.clone());
        prop_assert_eq!(word_to_matrix(&w.inverse(), g).unwrap(), m.inverse());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn power_matches_closed_form(c in (1usize..=3).prop_flat_map(primitive_class), n in -50i64..=50) {
        let g = c.genus();
        let basis = SymplecticBasis::new(g).unwrap();
        // repeated multiplication oracle
        let t = transvection(&c).unwrap();
        let step = if n < 0 { t.inverse() } else { t };
        let mut acc = SymplecticMap::identity(g);
        for _ in 0..n.abs() {
            acc = acc.compose(&step);
        }
        prop_assert_eq!(&acc, &transvection_power(&c, n).unwrap());
        for i in 0..2 * g {
            let x = HomologyClass::basis(g, i);
            let k = basis.pairing(&x, &c) * n;
            prop_assert_eq!(acc.apply(&x), x.add_scaled(&c, &k));
        }
    }

    #[test]
    fn conjugation_covariance((g, w, c) in (1usize..=3).prop_flat_map(|g| (Just(g), twist_word(g, 8), primitive_class(g)))) {
        let m = word_to_matrix(&w, g).unwrap();
        let lhs = m.compose(&transvection(&c).unwrap()).compose(&m.inverse());
        let mc = m.apply(&c);
        prop_assert!(mc.is_primitive());
        prop_assert_eq!(lhs, transvection(&mc).unwrap());
    }

    #[test]
    fn twist_fixed_lattice(c in (1usize..=3).prop_flat_map(primitive_class)) {
        let g = c.genus();
        let basis = SymplecticBasis::new(g).unwrap();
        let fixed = fixed_classes(&transvection(&c).unwrap());
        prop_assert_eq!(fixed.len(), 2 * g - 1);
        for x in &fixed {
            prop_assert!(basis.pairing(x, &c).is_zero());
        }
    }

    #[test]
    fn stretch_reciprocity((g, w) in genus_and_word()) {
        let m = word_to_matrix(&w, g).unwrap();
        let a = stretch_lower_bound(&m).value();
        let b = stretch_lower_bound(&m.inverse()).value();
        prop_assert!(a >= 1.0 - 1e-9);
        prop_assert!((a - b).abs() <= 1e-6, "{} vs {}", a, b);
    }

    #[test]
    fn stretch_within_trace_and_norm_bounds((g, w) in genus_and_word()) {
        // |tr M^k| / 2g <= rho^k <= ||M^k||_inf
        let m = word_to_matrix(&w, g).unwrap();
        let bound = stretch_lower_bound(&m);
        let k = 24u32;
        let mk = m.matrix().pow(k as u64).unwrap();
        let trace: BigInt = (0..2 * g).map(|i| mk[(i, i)].clone()).sum();
        let norm = (0..2 * g)
            .map(|i| mk.row(i).iter().map(|x| x.abs()).sum::<BigInt>())
            .max()
            .unwrap();
        let root = |x: &BigInt| x.to_f64().unwrap().powf(1.0 / k as f64);
        let lower = root(&(trace.abs() / BigInt::from(2 * g)));
        let upper = root(&norm);
        prop_assert!(bound.lower.to_f64().unwrap() <= upper * (1.0 + 1e-9));
        prop_assert!(bound.upper.to_f64().unwrap() >= lower * (1.0 - 1e-9));
    }

    #[test]
    fn cayley_hamilton((g, w) in genus_and_word()) {
        let m = word_to_matrix(&w, g).unwrap();
        let p = characteristic_polynomial(m.matrix());
        let n = 2 * g;
        let mut acc = Matrix::<BigInt>::zeros(n, n);
        for coeff in p.iter().rev() {
            acc = &acc * m.matrix();
            for i in 0..n {
                acc[(i, i)] += coeff;
            }
        }
        prop_assert!(acc.is_zero());
        // symplectic characteristic polynomials are palindromic
        let mut rev = p.clone();
        rev.reverse();
        prop_assert_eq!(rev, p);
    }

    #[test]
    fn chain_generates_sl2(a in -30i64..=30, b in -30i64..=30, k in -5i64..=5) {
        // build a random SL(2, Z) element from a coprime column
        prop_assume!(a != 0 || b != 0);
        let g = a.gcd(&b);
        let (p, q) = (a / g, b / g);
        let e = p.extended_gcd(&q);
        // p * x + q * y = 1, so [[p, -y], [q, x]] has determinant 1
        let (x, y) = (e.x + k * q, e.y - k * p);
        let m = Matrix::from_i64_rows(&[[p, -y], [q, x]]);
        let w = sl2_word(&m).unwrap();
        let chain = chain_curve_classes(1).unwrap();
        prop_assert!(w.letters().iter().all(|l| chain.contains(&l.class)));
        prop_assert_eq!(word_to_matrix(&w, 1).unwrap().into_matrix(), m);
    }
}

#[test]
fn transvection_of_e1_at_genus_one() {
    // <e2, e1> = -1 under J = [[0, 1], [-1, 0]], so T_{e1}(e2) = e2 - e1
    let e1 = HomologyClass::from_i64(&[1, 0]);
    let e2 = HomologyClass::from_i64(&[0, 1]);
    let basis = SymplecticBasis::new(1).unwrap();
    assert_eq!(basis.pairing(&e2, &e1), BigInt::from(-1));
    assert_eq!(transvection(&e1).unwrap().apply(&e2), e2.add_scaled(&e1, &BigInt::from(-1)));
}

#[test]
fn hyperbolic_matrix_has_no_fixed_class() {
    let m = SymplecticMap::new(Matrix::from_i64_rows(&[[2, 1], [1, 1]])).unwrap();
    let shifted = m.matrix().checked_sub(&Matrix::identity(2)).unwrap();
    assert_eq!(twistlab::linalg::determinant(&shifted).unwrap(), BigInt::from(-1));
    assert!(fixed_classes(&m).is_empty());
    let b = stretch_lower_bound(&m);
    assert!((b.value() - 2.618034).abs() < 1e-6);
}
