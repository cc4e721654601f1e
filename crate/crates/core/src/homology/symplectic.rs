use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::HomologyError;
use crate::linalg::{integral_kernel, Matrix};
use crate::scalar::json_int;
use crate::IntMatrix;

/// Integer vector in the symplectic basis `a_1..a_g, b_1..b_g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass(pub Vec<BigInt>);

impl HomologyClass {
    pub fn from_i64(v: &[i64]) -> Self {
        HomologyClass(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(genus: usize) -> Self {
        HomologyClass(vec![BigInt::zero(); 2 * genus])
    }

    /// The `i`-th basis vector (0-based) in dimension `2 * genus`.
    pub fn basis(genus: usize, i: usize) -> Self {
        let mut v = vec![BigInt::zero(); 2 * genus];
        v[i] = BigInt::one();
        HomologyClass(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// gcd of the entries is 1.
    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Representative of `±c` whose first nonzero entry is positive.
    pub fn sign_normalized(&self) -> Self {
        match self.0.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        HomologyClass(self.0.iter().map(|x| -x).collect())
    }

    pub fn add_scaled(&self, other: &Self, k: &BigInt) -> Self {
        HomologyClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b * k).collect())
    }

    pub fn genus(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Debug for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for HomologyClass {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        json_int::vec::serialize(&self.0, ser)
    }
}

impl<'de> Deserialize<'de> for HomologyClass {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        json_int::vec::deserialize(de).map(HomologyClass)
    }
}

/// The standard symplectic lattice `Z^{2g}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub genus: usize,
}

impl SymplecticBasis {
    pub fn new(genus: usize) -> Result<Self, HomologyError> {
        if genus == 0 {
            return Err(HomologyError::ZeroGenus);
        }
        Ok(SymplecticBasis { genus })
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    /// `J = [[0, I], [-I, 0]]`.
    pub fn form(&self) -> IntMatrix {
        let g = self.genus;
        Matrix::from_fn(2 * g, 2 * g, |i, j| {
            if j == i + g {
                BigInt::one()
            } else if i == j + g {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// `<x, y> = x^T J y = sum_i x_i y_{g+i} - x_{g+i} y_i`.
    pub fn pairing(&self, x: &HomologyClass, y: &HomologyClass) -> BigInt {
        let g = self.genus;
        (0..g).fold(BigInt::zero(), |acc, i| acc + &x.0[i] * &y.0[g + i] - &x.0[g + i] * &y.0[i])
    }

    pub fn check(&self, c: &HomologyClass) -> Result<(), HomologyError> {
        if c.len() != self.dim() {
            return Err(HomologyError::Length { expected: self.dim(), found: c.len() });
        }
        Ok(())
    }
}

/// A matrix `M` with `M^T J M = J`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMap {
    genus: usize,
    matrix: IntMatrix,
}

impl SymplecticMap {
    pub fn new(matrix: IntMatrix) -> Result<Self, HomologyError> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            return Err(HomologyError::NotSymplectic);
        }
        let basis = SymplecticBasis::new(matrix.rows() / 2)?;
        let j = basis.form();
        if &(&matrix.transpose() * &j) * &matrix != j {
            return Err(HomologyError::NotSymplectic);
        }
        Ok(SymplecticMap { genus: basis.genus, matrix })
    }

    pub(crate) fn new_unchecked(genus: usize, matrix: IntMatrix) -> Self {
        debug_assert!(Self::new(matrix.clone()).is_ok());
        SymplecticMap { genus, matrix }
    }

    pub fn identity(genus: usize) -> Self {
        SymplecticMap { genus, matrix: Matrix::identity(2 * genus) }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn basis(&self) -> SymplecticBasis {
        SymplecticBasis { genus: self.genus }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SymplecticMap) -> SymplecticMap {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        SymplecticMap { genus: self.genus, matrix: &self.matrix * &other.matrix }
    }

    /// `M^-1 = -J M^T J`.
    pub fn inverse(&self) -> SymplecticMap {
        let j = self.basis().form();
        SymplecticMap { genus: self.genus, matrix: (&(&j * &self.matrix.transpose()) * &j).neg() }
    }

    pub fn power(&self, n: i64) -> SymplecticMap {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        SymplecticMap { genus: self.genus, matrix: base.matrix.pow(n.unsigned_abs()).expect("square") }
    }

    pub fn apply(&self, x: &HomologyClass) -> HomologyClass {
        HomologyClass(self.matrix.mul_vec(&x.0).expect("dimension checked by caller"))
    }
}

/// `T_c^n` in closed form: `x -> x + n <x, c> c`, i.e. `I + n c (J c)^T`.
pub fn transvection_power(c: &HomologyClass, n: i64) -> Result<SymplecticMap, HomologyError> {
    if !c.len().is_multiple_of(2) || c.is_empty() {
        return Err(HomologyError::Length { expected: 2 * c.genus().max(1), found: c.len() });
    }
    let basis = SymplecticBasis::new(c.genus())?;
    if !c.is_zero() && !c.is_primitive() {
        return Err(HomologyError::NotPrimitive(c.to_string()));
    }
    let g = basis.genus;
    // (J c)_j = c_{g+j} for j < g, -c_{j-g} otherwise
    let jc: Vec<BigInt> = (0..2 * g).map(|j| if j < g { c.0[g + j].clone() } else { -&c.0[j - g] }).collect();
    let n = BigInt::from(n);
    let m = Matrix::from_fn(2 * g, 2 * g, |i, j| {
        let t = &n * &c.0[i] * &jc[j];
        if i == j {
            t + 1
        } else {
            t
        }
    });
    Ok(SymplecticMap::new_unchecked(g, m))
}

/// The twist about a class that is primitive (or zero, giving the identity).
pub fn transvection(c: &HomologyClass) -> Result<SymplecticMap, HomologyError> {
    transvection_power(c, 1)
}

/// Classes of a chain of `2g + 1` curves: `a_1, b_1, a_2 - a_1, b_2, ...,
/// a_g - a_{g-1}, b_g, a_g`. Consecutive classes pair to ±1 and all others
/// to 0. At genus 1 this is `(e_1, e_2, e_1)`.
pub fn chain_curve_classes(genus: usize) -> Result<Vec<HomologyClass>, HomologyError> {
    SymplecticBasis::new(genus)?;
    let a = |i: usize| HomologyClass::basis(genus, i);
    let b = |i: usize| HomologyClass::basis(genus, genus + i);
    let mut out = vec![a(0), b(0)];
    for i in 1..genus {
        out.push(a(i).add_scaled(&a(i - 1), &-BigInt::one()));
        out.push(b(i));
    }
    out.push(a(genus - 1));
    Ok(out)
}

/// Lattice basis of the classes fixed by `m`; empty means no nonzero
/// integral class is invariant.
pub fn fixed_classes(m: &SymplecticMap) -> Vec<HomologyClass> {
    let shifted = m.matrix().checked_sub(&Matrix::identity(2 * m.genus())).expect("square");
    integral_kernel(&shifted).into_iter().map(HomologyClass).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_is_unimodular_and_squares_to_minus_identity() {
        for g in 1..=3 {
            let j = SymplecticBasis::new(g).unwrap().form();
            assert_eq!(&j * &j, Matrix::<BigInt>::identity(2 * g).neg());
            assert_eq!(j.transpose(), j.neg());
        }
    }

    #[test]
    fn genus_one_transvection_sign() {
        let b = SymplecticBasis::new(1).unwrap();
        let (e1, e2) = (HomologyClass::from_i64(&[1, 0]), HomologyClass::from_i64(&[0, 1]));
        assert_eq!(b.pairing(&e1, &e2), BigInt::from(1));
        // T_{e1}(e2) = e2 + <e2, e1> e1 = e2 - e1
        let t = transvection(&e1).unwrap();
        assert_eq!(t.apply(&e2), HomologyClass::from_i64(&[-1, 1]));
        assert_eq!(t.apply(&e1), e1);
        assert_eq!(*t.matrix(), Matrix::from_i64_rows(&[[1, -1], [0, 1]]));
    }

    #[test]
    fn zero_class_gives_identity_and_multiples_are_rejected() {
        assert_eq!(transvection(&HomologyClass::zero(2)).unwrap(), SymplecticMap::identity(2));
        assert!(matches!(transvection(&HomologyClass::from_i64(&[2, 0])), Err(HomologyError::NotPrimitive(_))));
        assert!(transvection(&HomologyClass::from_i64(&[1, 0, 0])).is_err());
    }

    #[test]
    fn rejects_non_symplectic_matrices() {
        assert_eq!(
            SymplecticMap::new(Matrix::from_i64_rows(&[[2, 0], [0, 1]])),
            Err(HomologyError::NotSymplectic)
        );
        assert!(SymplecticMap::new(Matrix::from_i64_rows(&[[2, 1], [1, 1]])).is_ok());
        assert!(SymplecticMap::new(Matrix::identity(3)).is_err());
    }

    #[test]
    fn chain_pairings() {
        for g in 1..=4 {
            let b = SymplecticBasis::new(g).unwrap();
            let cs = chain_curve_classes(g).unwrap();
            assert_eq!(cs.len(), 2 * g + 1);
            for i in 0..cs.len() {
                assert!(cs[i].is_primitive());
                for j in 0..cs.len() {
                    let p = b.pairing(&cs[i], &cs[j]).abs();
                    let expected = if i.abs_diff(j) == 1 { 1 } else { 0 };
                    assert_eq!(p, BigInt::from(expected), "g={g} ({i},{j})");
                }
            }
        }
        assert_eq!(
            chain_curve_classes(1).unwrap(),
            vec![HomologyClass::from_i64(&[1, 0]), HomologyClass::from_i64(&[0, 1]), HomologyClass::from_i64(&[1, 0])]
        );
    }

    #[test]
    fn fixed_class_examples() {
        assert_eq!(fixed_classes(&SymplecticMap::identity(2)).len(), 4);
        let hyperbolic = SymplecticMap::new(Matrix::from_i64_rows(&[[2, 1], [1, 1]])).unwrap();
        assert!(fixed_classes(&hyperbolic).is_empty());
        let c = HomologyClass::from_i64(&[1, 2, 0, -1]);
        let basis = SymplecticBasis::new(2).unwrap();
        let fixed = fixed_classes(&transvection(&c).unwrap());
        assert_eq!(fixed.len(), 3);
        assert!(fixed.iter().all(|x| basis.pairing(x, &c).is_zero()));
    }
}
