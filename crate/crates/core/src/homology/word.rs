use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::symplectic::{transvection_power, HomologyClass, SymplecticBasis, SymplecticMap};
use super::HomologyError;
use crate::IntMatrix;

/// One factor `T_c^power` of a twist word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistLetter {
    pub class: HomologyClass,
    pub power: i64,
}

/// Ordered product of twist powers, evaluated left to right as matrices:
/// `[(c1, n1), (c2, n2)]` means `T_{c1}^{n1} · T_{c2}^{n2}`, so the last
/// letter acts first on homology.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistWord {
    letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn new(letters: Vec<TwistLetter>) -> Result<Self, HomologyError> {
        let w = TwistWord { letters };
        w.validate()?;
        Ok(w)
    }

    pub fn empty() -> Self {
        TwistWord::default()
    }

    pub fn letter(class: HomologyClass, power: i64) -> Result<Self, HomologyError> {
        Self::new(vec![TwistLetter { class, power }])
    }

    pub fn from_i64(letters: &[(&[i64], i64)]) -> Result<Self, HomologyError> {
        Self::new(
            letters
                .iter()
                .map(|(c, n)| TwistLetter { class: HomologyClass::from_i64(c), power: *n })
                .collect(),
        )
    }

    /// Every class primitive and all of one even length.
    pub fn validate(&self) -> Result<(), HomologyError> {
        let mut len = None;
        for l in &self.letters {
            if !l.class.is_primitive() {
                return Err(HomologyError::NotPrimitive(l.class.to_string()));
            }
            match len {
                None if l.class.len() % 2 != 0 => {
                    return Err(HomologyError::Length { expected: l.class.len() + 1, found: l.class.len() })
                }
                None => len = Some(l.class.len()),
                Some(k) if k != l.class.len() => {
                    return Err(HomologyError::Length { expected: k, found: l.class.len() })
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Genus read off the first letter; `None` for the empty word.
    pub fn genus(&self) -> Option<usize> {
        self.letters.first().map(|l| l.class.genus())
    }

    pub fn concat(&self, other: &TwistWord) -> TwistWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        TwistWord { letters }
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| TwistLetter { class: l.class.clone(), power: -l.power })
                .collect(),
        }
    }

    pub fn push(&mut self, class: HomologyClass, power: i64) {
        self.letters.push(TwistLetter { class, power });
    }

    /// Normal form in the free product of the cyclic groups `<T_c>`:
    /// classes sign-normalized (`T_{-c} = T_c`), adjacent equal classes
    /// merged, zero powers dropped.
    pub fn canonical(&self) -> TwistWord {
        let mut out: Vec<TwistLetter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if l.power == 0 {
                continue;
            }
            let class = l.class.sign_normalized();
            match out.last_mut() {
                Some(last) if last.class == class => {
                    last.power += l.power;
                    if last.power == 0 {
                        out.pop();
                    }
                }
                _ => out.push(TwistLetter { class, power: l.power }),
            }
        }
        TwistWord { letters: out }
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "T{}^{}", l.class, l.power)?;
        }
        Ok(())
    }
}

/// Ordered product of the transvection powers; the empty word gives the
/// identity of `Sp(2g, Z)`.
pub fn word_to_matrix(w: &TwistWord, genus: usize) -> Result<SymplecticMap, HomologyError> {
    let basis = SymplecticBasis::new(genus)?;
    w.validate()?;
    let mut acc = SymplecticMap::identity(genus);
    for l in w.letters() {
        basis.check(&l.class)?;
        acc = acc.compose(&transvection_power(&l.class, l.power)?);
    }
    Ok(acc)
}

/// Writes a matrix of `SL(2, Z)` as a word in `T_{e1}` and `T_{e2}`.
///
/// Euclid on the first column. `T_{e1}^{-k}` adds `k` times row 2 to row 1
/// and `T_{e2}^k` adds `k` times row 1 to row 2. The leftover `±[[1, b], [0, 1]]`
/// uses `-I = (T_{e1} T_{e2} T_{e1})^2`.
pub fn sl2_word(m: &IntMatrix) -> Result<TwistWord, HomologyError> {
    let map = SymplecticMap::new(m.clone())?;
    if map.genus() != 1 {
        return Err(HomologyError::Length { expected: 2, found: m.rows() });
    }
    let e1 = HomologyClass::from_i64(&[1, 0]);
    let e2 = HomologyClass::from_i64(&[0, 1]);
    let small = |x: &BigInt| x.to_i64().expect("Euclid quotients of an SL(2, Z) column are bounded by its entries");
    let mut r = m.to_rows();
    let mut word = TwistWord::empty();
    // Record E_1^{-1} E_2^{-1} ... where E_k ... E_1 M reaches upper triangular.
    while !r[1][0].is_zero() {
        if r[0][0].is_zero() || r[0][0].abs() > r[1][0].abs() {
            // a zero top entry is first replaced by the bottom one
            let k = if r[0][0].is_zero() { -BigInt::one() } else { r[0][0].div_floor(&r[1][0]) };
            let (top, bottom) = r.split_at_mut(1);
            for (x, y) in top[0].iter_mut().zip(&bottom[0]) {
                *x -= y * &k;
            }
            word.push(e1.clone(), -small(&k));
        } else {
            let k = r[1][0].div_floor(&r[0][0]);
            let (top, bottom) = r.split_at_mut(1);
            for (y, x) in bottom[0].iter_mut().zip(&top[0]) {
                *y -= x * &k;
            }
            word.push(e2.clone(), small(&k));
        }
    }
    let eps = r[0][0].clone();
    debug_assert!(eps.abs().is_one() && r[1][1] == eps);
    if eps.is_negative() {
        for _ in 0..2 {
            word.push(e1.clone(), 1);
            word.push(e2.clone(), 1);
            word.push(e1.clone(), 1);
        }
    }
    let b = &r[0][1] * &eps;
    word.push(e1, -small(&b));
    Ok(word.canonical())
}
