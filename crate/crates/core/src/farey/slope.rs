use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FareyError;

/// Primitive `(p, q)` up to sign, normalized to `q > 0` or `(1, 0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    pub fn new(p: i64, q: i64) -> Result<Self, FareyError> {
        if p.gcd(&q) != 1 {
            return Err(FareyError::NotPrimitive(p, q));
        }
        Ok(Self::normalize(p, q))
    }

    fn normalize(p: i64, q: i64) -> Self {
        if q < 0 || (q == 0 && p < 0) {
            Slope { p: -p, q: -q }
        } else {
            Slope { p, q }
        }
    }

    /// Slope from a wide vector; fails if it does not fit in `i64`.
    pub(crate) fn from_wide(p: i128, q: i128) -> Result<Self, FareyError> {
        let p = i64::try_from(p).map_err(|_| FareyError::Overflow)?;
        let q = i64::try_from(q).map_err(|_| FareyError::Overflow)?;
        Self::new(p, q)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn wide(&self) -> (i128, i128) {
        (self.p as i128, self.q as i128)
    }

    /// `max(|p|, q)`.
    pub fn height(&self) -> i64 {
        self.p.abs().max(self.q)
    }
}

/// `det(u, v) = u_p v_q - u_q v_p`, sign depending on representatives.
pub(crate) fn det(u: &Slope, v: &Slope) -> i128 {
    let (a, b) = (u.wide(), v.wide());
    a.0 * b.1 - a.1 * b.0
}

/// `|p_u q_v - q_u p_v|`.
pub fn intersection_number(u: &Slope, v: &Slope) -> u128 {
    det(u, v).unsigned_abs()
}

/// `D_c^n(v) = v + n <v, c> c`.
pub fn twist(c: &Slope, n: i64, v: &Slope) -> Result<Slope, FareyError> {
    let k = -det(c, v) * n as i128;
    let (vp, vq) = v.wide();
    let (cp, cq) = c.wide();
    Slope::from_wide(vp + k * cp, vq + k * cq)
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    /// `"p/q"`, or a bare integer `"p"` for `p/1`.
    fn from_str(s: &str) -> Result<Self, FareyError> {
        let bad = || FareyError::Parse(s.to_string());
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn canonical_sign() {
        assert_eq!(s(-2, -3), s(2, 3));
        assert_eq!(s(-1, 0), Slope::INFINITY);
        assert_eq!(s(3, -1), s(-3, 1));
        assert!(Slope::new(2, 4).is_err());
        assert!(Slope::new(0, 0).is_err());
    }

    #[test]
    fn intersections() {
        assert_eq!(intersection_number(&s(2, 1), &s(2, 1)), 0);
        assert_eq!(intersection_number(&Slope::INFINITY, &Slope::ZERO), 1);
        assert_eq!(intersection_number(&s(2, 1), &s(1, 2)), 3);
    }

    #[test]
    fn twist_examples() {
        let c = Slope::INFINITY;
        let v = Slope::ZERO;
        for n in -5..=5 {
            let t = twist(&c, n, &v).unwrap();
            assert_eq!(t, s(-n, 1));
            assert_eq!(intersection_number(&t, &v), n.unsigned_abs() as u128);
            assert_eq!(twist(&c, n, &c).unwrap(), c);
        }
        assert_eq!(twist(&s(2, 3), 0, &s(5, 7)).unwrap(), s(5, 7));
        assert!(twist(&s(1, 1), i64::MIN, &Slope::ZERO).is_err());
    }

    #[test]
    fn parse_and_json() {
        assert_eq!("3/-4".parse::<Slope>().unwrap(), s(-3, 4));
        assert_eq!(" 5 ".parse::<Slope>().unwrap(), s(5, 1));
        assert_eq!("1/0".parse::<Slope>().unwrap(), Slope::INFINITY);
        assert!("2/4".parse::<Slope>().is_err());
        assert!("x/1".parse::<Slope>().is_err());
        assert_eq!(serde_json::to_string(&s(-3, 4)).unwrap(), r#""-3/4""#);
        assert_eq!(serde_json::from_str::<Slope>(r#""7/2""#).unwrap(), s(7, 2));
    }
}
