use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::presentation::{presentation_matrix, twist_update};
use super::{HeegaardData, HeegaardError};
use crate::homology::HomologyClass;
use crate::scalar::json_int;
use crate::Side;

/// Integer polynomial, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> IntPolynomial {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// The integer polynomial of degree `<= k` taking `values[i]` at `n = i`.
    /// `None` if no integer-coefficient polynomial fits.
    pub fn interpolate(values: &[BigInt]) -> Option<IntPolynomial> {
        // forward differences give p(n) = sum_k D^k p(0) binom(n, k)
        let mut diffs = values.to_vec();
        let mut heads = Vec::with_capacity(values.len());
        for _ in 0..values.len() {
            heads.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let mut acc = vec![BigRational::zero(); values.len()];
        // falling factorial n (n-1) ... (n-k+1) / k!, in monomial coefficients
        let mut basis = vec![BigRational::one()];
        for (k, head) in heads.iter().enumerate() {
            for (a, b) in acc.iter_mut().zip(&basis) {
                *a += b * head;
            }
            let kk = BigInt::from(k as i64);
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &kk;
            }
            let denom = BigInt::from(k as i64 + 1);
            basis = next.into_iter().map(|b| b / &denom).collect();
        }
        acc.into_iter()
            .map(|a| a.is_integer().then(|| a.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// All integer roots, ascending. The zero polynomial has every integer
    /// as a root and is reported as `None`.
    pub fn integer_roots(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        if self.is_constant() {
            return Some(Vec::new());
        }
        // every real root of p and of its derivatives lies in [-bound, bound]
        let lead = self.leading().abs();
        let max = self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default();
        let bound = Integer::div_ceil(&max, &lead) + 1;
        let mut roots: Vec<BigInt> = monotone_pieces(self, &bound)
            .windows(2)
            .filter_map(|w| root_on_monotone(self, &w[0], &w[1]))
            .collect();
        roots.sort();
        roots.dedup();
        Some(roots)
    }
}

/// Sorted integers `-bound = x_0 < ... < x_k = bound` with `p` monotone on
/// each `[x_i, x_{i+1}]`.
fn monotone_pieces(p: &IntPolynomial, bound: &BigInt) -> Vec<BigInt> {
    let mut points = vec![-bound.clone(), bound.clone()];
    if p.degree().unwrap_or(0) >= 2 {
        let d = p.derivative();
        for w in monotone_pieces(&d, bound).windows(2) {
            // d is monotone here, so it changes sign at most once
            let (lo, hi) = (&w[0], &w[1]);
            let (slo, shi) = (d.eval(lo).signum(), d.eval(hi).signum());
            if slo.is_zero() {
                points.push(lo.clone());
            }
            if shi.is_zero() {
                points.push(hi.clone());
            }
            if !slo.is_zero() && !shi.is_zero() && slo != shi {
                let (mut a, mut b) = (lo.clone(), hi.clone());
                while &b - &a > BigInt::one() {
                    let mid: BigInt = (&a + &b) >> 1;
                    let s = d.eval(&mid).signum();
                    if s.is_zero() {
                        a = mid.clone();
                        b = mid;
                        break;
                    }
                    if s == slo {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                points.push(a);
                points.push(b);
            }
        }
    }
    points.sort();
    points.dedup();
    points
}

fn root_on_monotone(p: &IntPolynomial, lo: &BigInt, hi: &BigInt) -> Option<BigInt> {
    let (vlo, vhi) = (p.eval(lo), p.eval(hi));
    if vlo.is_zero() {
        return Some(lo.clone());
    }
    if vhi.is_zero() {
        return Some(hi.clone());
    }
    if vlo.signum() == vhi.signum() {
        return None;
    }
    let (mut a, mut b) = (lo.clone(), hi.clone());
    while &b - &a > BigInt::one() {
        let mid: BigInt = (&a + &b) >> 1;
        let v = p.eval(&mid);
        if v.is_zero() {
            return Some(mid);
        }
        if v.signum() == vlo.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    None
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        json_int::vec::serialize(&self.coeffs, ser)
    }
}

/// `n -> det A(f T_c^n)` (or `det A(T_c^n f)`), interpolated from the
/// determinants at `n = 0, ..., g`.
pub fn det_polynomial(h: &HeegaardData, c: &HomologyClass, side: Side) -> Result<IntPolynomial, HeegaardError> {
    let base = presentation_matrix(h);
    let values = (0..=h.genus() as i64)
        .map(|n| twist_update(&base, c, n, side).map(|a| a.det()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPolynomial::interpolate(&values).expect("determinants of integer-linear rows are integer polynomials"))
}
