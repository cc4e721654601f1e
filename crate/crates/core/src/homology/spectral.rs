use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::symplectic::SymplecticMap;
use crate::linalg::Matrix;
use crate::IntMatrix;

/// Certified enclosure `lower <= rho(M) <= upper` of the spectral radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralBound {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl SpectralBound {
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    /// Midpoint of the enclosure as a float.
    pub fn value(&self) -> f64 {
        let mid = (&self.lower + &self.upper) / BigInt::from(2);
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

impl Serialize for SpectralBound {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("SpectralBound", 3)?;
        st.serialize_field("value", &self.value())?;
        st.serialize_field("lower", &self.lower.to_f64())?;
        st.serialize_field("upper", &self.upper.to_f64())?;
        st.end()
    }
}

/// Coefficients of `det(xI - M)`, constant term first (monic).
/// Faddeev-LeVerrier; every division is exact over Z.
pub fn characteristic_polynomial(m: &IntMatrix) -> Vec<BigInt> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = Matrix::<BigInt>::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        mk = m * &mk;
        for i in 0..n {
            mk[(i, i)] += &coeffs[n - k + 1];
        }
        let am = m * &mk;
        let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
        let kk = BigInt::from(k);
        debug_assert!((&trace % &kk).is_zero());
        coeffs[n - k] = -(trace / kk);
    }
    coeffs
}

/// Schur-Cohn: whether every root of `p` lies in the open disk `|z| < r`.
///
/// Runs on the integer polynomial `b^n p(a z / b)` for `r = a / b`, dividing
/// out the content at each reduction step.
pub fn roots_within(p: &[BigInt], r: &BigRational) -> bool {
    let (a, b) = (r.numer(), r.denom());
    let n = p.len().saturating_sub(1);
    let mut a_pow = BigInt::one();
    let scaled = p
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let v = c * &a_pow * Pow::pow(b, (n - i) as u32);
            a_pow *= a;
            v
        })
        .collect();
    all_roots_in_unit_disk(scaled)
}

fn all_roots_in_unit_disk(mut p: Vec<BigInt>) -> bool {
    loop {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        let n = match p.len() {
            0 => return false,
            len => len - 1,
        };
        if n == 0 {
            return true;
        }
        let (a0, an) = (p[0].clone(), p[n].clone());
        if a0.abs() >= an.abs() {
            return false;
        }
        // (a_n p(z) - a_0 p*(z)) / z, leading coefficient a_n^2 - a_0^2 > 0
        let mut q: Vec<BigInt> = (1..=n).map(|j| &an * &p[j] - &a0 * &p[n - j]).collect();
        let content = q.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !content.is_one() {
            for x in &mut q {
                *x /= &content;
            }
        }
        p = q;
    }
}

/// Spectral radius of `M` (a lower bound for the stretch factor of any
/// mapping class acting by `M`), enclosed to width at most `1e-9`.
pub fn stretch_lower_bound(m: &SymplecticMap) -> SpectralBound {
    let p = characteristic_polynomial(m.matrix());
    // Cauchy bound for a monic polynomial
    let cauchy = p.iter().take(p.len() - 1).map(|a| a.abs()).max().unwrap_or_default() + 1;
    let mut lo = BigRational::zero();
    let mut hi = BigRational::from_integer(cauchy);
    let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    let two = BigInt::from(2);
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        if roots_within(&p, &mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // eigenvalues of a symplectic matrix come in pairs (l, 1/l)
    let one = BigRational::one();
    if hi >= one && lo < one {
        lo = one;
    }
    SpectralBound { lower: lo, upper: hi }
}
