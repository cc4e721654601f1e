use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::poly::{det_polynomial, IntPolynomial};
use super::presentation::{b1_mod_p, invariants, presentation_matrix, twist_update, PresentationMatrix};
use super::{HeegaardData, HeegaardError};
use crate::homology::HomologyClass;
use crate::linalg::{is_prime, LinalgError};
use crate::scalar::json_int;
use crate::{Side, Window};

/// Consecutive `n` handled by one worker, each shard restarting from the
/// closed-form update at its first `n`.
/// A scanned row and, per prime dividing `n`, whether `A` agreed mod `p`.
type RowWithCongruences = (ScanRow, Vec<(u64, bool)>);

const SHARD: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: i64,
    #[serde(with = "json_int")]
    pub det: BigInt,
    pub b1_z: usize,
    #[serde(with = "json_int::vec")]
    pub torsion: Vec<BigInt>,
    /// Kernel dimension over `F_p`, keyed by `p`.
    pub b1_fp: BTreeMap<u64, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityVerdict {
    pub p: u64,
    /// Nonzero multiples of `p` in the window.
    pub multiples_checked: usize,
    /// `A(f T_c^{kp}) ≡ A(f) (mod p)` entrywise at every multiple.
    pub entries_congruent: bool,
    /// `b_1` over `F_p` agrees at `n` and `n + p` throughout the window.
    pub b1_periodic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub genus: usize,
    pub side: Side,
    pub twist_class: HomologyClass,
    pub window: Window,
    pub primes: Vec<u64>,
    #[serde(with = "json_int")]
    pub base_det: BigInt,
    pub det_polynomial: IntPolynomial,
    /// The polynomial vanishes identically: every `n` is a zero and no
    /// finiteness is claimed.
    pub constant_zero: bool,
    #[serde(with = "json_int::vec")]
    pub roots_in_window: Vec<BigInt>,
    pub zero_set: Vec<i64>,
    pub zero_set_matches_roots: bool,
    /// At most `g` zeros when the polynomial is not identically zero.
    pub zeros_bounded_by_genus: bool,
    pub periodicity: Vec<PeriodicityVerdict>,
    /// Least `n* >= 0` with `|det| >= |det A(f)|` for every `|n| > n*` in
    /// the window; absent when only the window edge would do.
    pub growth_threshold: Option<i64>,
    /// `|det|` equals the torsion product whenever `b_1 = 0`, and `b_1 = 0`
    /// exactly when `det != 0`.
    pub consistent: bool,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    /// Every verdict the scan asserts, by name.
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        let mut out = vec![
            ("zero_set_matches_roots".to_string(), self.zero_set_matches_roots),
            ("zeros_bounded_by_genus".to_string(), self.zeros_bounded_by_genus),
            ("consistent".to_string(), self.consistent),
        ];
        for v in &self.periodicity {
            out.push((format!("entries_congruent_mod_{}", v.p), v.entries_congruent));
            out.push((format!("b1_periodic_mod_{}", v.p), v.b1_periodic));
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts().iter().all(|(_, ok)| *ok)
    }

    /// Columns `n, det, b1_Z, torsion, b1_F<p>...`; torsion entries are
    /// joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,det,b1_Z,torsion");
        for p in &self.primes {
            out.push_str(&format!(",b1_F{p}"));
        }
        out.push('\n');
        for r in &self.rows {
            let torsion: Vec<String> = r.torsion.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{},{},{},{}", r.n, r.det, r.b1_z, torsion.join(";")));
            for p in &self.primes {
                out.push_str(&format!(",{}", r.b1_fp[p]));
            }
            out.push('\n');
        }
        out
    }
}

fn congruent_mod(a: &PresentationMatrix, b: &PresentationMatrix, p: u64) -> bool {
    let p = BigInt::from(p);
    a.matrix().entries().zip(b.matrix().entries()).all(|(x, y)| ((x - y) % &p).is_zero())
}

/// Scans the twist coset `f T_c^n` (or `T_c^n f`) over the window.
pub fn coset_scan(
    h: &HeegaardData,
    c: &HomologyClass,
    w: &Window,
    primes: &[u64],
    side: Side,
) -> Result<ScanReport, HeegaardError> {
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(LinalgError::NotPrime(p).into());
    }
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();

    let base = presentation_matrix(h);
    let base_det = base.det();
    let poly = det_polynomial(h, c, side)?;
    twist_update(&base, c, 0, side)?;

    let ns: Vec<i64> = w.iter().collect();
    let shards: Vec<Vec<RowWithCongruences>> = ns
        .par_chunks(SHARD)
        .map(|chunk| {
            let mut a = twist_update(&base, c, chunk[0], side).expect("validated above");
            let mut out = Vec::with_capacity(chunk.len());
            for (k, &n) in chunk.iter().enumerate() {
                if k > 0 {
                    a = twist_update(&a, c, 1, side).expect("validated above");
                }
                let inv = invariants(&a);
                let b1_fp = primes.iter().map(|&p| (p, b1_mod_p(&a, p).expect("prime"))).collect();
                let congruences = primes
                    .iter()
                    .filter(|&&p| n != 0 && n.rem_euclid(p as i64) == 0)
                    .map(|&p| (p, congruent_mod(&a, &base, p)))
                    .collect();
                let row = ScanRow { n, det: a.det(), b1_z: inv.b1, torsion: inv.torsion, b1_fp };
                out.push((row, congruences));
            }
            out
        })
        .collect();

    let mut rows = Vec::with_capacity(ns.len());
    let mut congruent: BTreeMap<u64, (usize, bool)> = primes.iter().map(|&p| (p, (0, true))).collect();
    for (row, cs) in shards.into_iter().flatten() {
        for (p, ok) in cs {
            let e = congruent.get_mut(&p).expect("known prime");
            e.0 += 1;
            e.1 &= ok;
        }
        rows.push(row);
    }

    let zero_set: Vec<i64> = rows.iter().filter(|r| r.det.is_zero()).map(|r| r.n).collect();
    let constant_zero = poly.is_zero();
    let roots_in_window: Vec<BigInt> = match poly.integer_roots() {
        Some(roots) => roots.into_iter().filter(|r| w.iter().any(|n| BigInt::from(n) == *r)).collect(),
        None => ns.iter().map(|&n| BigInt::from(n)).collect(),
    };
    let zero_set_matches_roots =
        zero_set.len() == roots_in_window.len() && zero_set.iter().zip(&roots_in_window).all(|(n, r)| BigInt::from(*n) == *r);
    let zeros_bounded_by_genus = constant_zero || zero_set.len() <= h.genus();

    let periodicity = primes
        .iter()
        .map(|&p| {
            let step = p as usize;
            let b1_periodic = rows.windows(step + 1).all(|win| win[0].b1_fp[&p] == win[step].b1_fp[&p]);
            let (multiples_checked, entries_congruent) = congruent[&p];
            PeriodicityVerdict { p, multiples_checked, entries_congruent, b1_periodic }
        })
        .collect();

    let floor = base_det.abs();
    let worst = rows.iter().filter(|r| r.det.abs() < floor).map(|r| r.n.abs()).max();
    let growth_threshold = match worst {
        None => Some(0),
        Some(m) if m >= w.radius() => None,
        Some(m) => Some(m),
    };

    let consistent = rows.iter().all(|r| {
        let product = r.torsion.iter().fold(BigInt::one(), |acc, t| acc * t);
        (r.b1_z == 0) == !r.det.is_zero() && (r.b1_z != 0 || r.det.abs() == product)
    });

    Ok(ScanReport {
        genus: h.genus(),
        side,
        twist_class: c.clone(),
        window: *w,
        primes,
        base_det,
        det_polynomial: poly,
        constant_zero,
        roots_in_window,
        zero_set,
        zero_set_matches_roots,
        zeros_bounded_by_genus,
        periodicity,
        growth_threshold,
        consistent,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heegaard::lens_space;
    use crate::homology::TwistWord;

    #[test]
    fn empty_window_gives_empty_report() {
        let h = HeegaardData::standard(1, TwistWord::empty()).unwrap();
        let r = coset_scan(&h, &HomologyClass::from_i64(&[1, 0]), &Window::empty(), &[2], Side::Right).unwrap();
        assert!(r.rows.is_empty() && r.zero_set.is_empty() && r.all_hold());
    }

    #[test]
    fn sphere_cosets() {
        // right twists about e2: rows (1, -n), (0, 1), det constantly 1
        let h = HeegaardData::standard(1, TwistWord::empty()).unwrap();
        let c = HomologyClass::from_i64(&[0, 1]);
        let r = coset_scan(&h, &c, &Window::symmetric(20).unwrap(), &[2, 3], Side::Right).unwrap();
        assert!(r.all_hold(), "{:?}", r.verdicts());
        assert_eq!(r.det_polynomial.degree(), Some(0));
        let e1 = HomologyClass::from_i64(&[1, 0]);
        let r = coset_scan(&h, &e1, &Window::symmetric(20).unwrap(), &[2, 3], Side::Left).unwrap();
        assert!(r.all_hold(), "{:?}", r.verdicts());
    }

    #[test]
    fn lens_coset_zero_and_growth() {
        let h = lens_space(5, 2).unwrap();
        let c = HomologyClass::from_i64(&[0, 1]);
        let r = coset_scan(&h, &c, &Window::symmetric(30).unwrap(), &[2, 3, 5], Side::Right).unwrap();
        assert!(r.all_hold(), "{:?}", r.verdicts());
        assert!(r.zero_set.len() <= 1);
        assert!(r.growth_threshold.is_some());
        let csv = r.to_csv();
        assert!(csv.starts_with("n,det,b1_Z,torsion,b1_F2,b1_F3,b1_F5\n"));
        assert_eq!(csv.lines().count(), 62);
        assert!(coset_scan(&h, &c, &Window::symmetric(3).unwrap(), &[4], Side::Right).is_err());
    }
}
