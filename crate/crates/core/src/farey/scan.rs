use rayon::prelude::*;
use serde::Serialize;

use super::annular::twisting_coefficient;
use super::distance::distance;
use super::slope::{twist, Slope};
use super::FareyError;
use crate::Window;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceRow {
    pub n: i64,
    /// `D_c^n(b)`.
    pub slope: Slope,
    /// `d(a, D_c^n(b))`.
    pub distance: usize,
    /// `t_c(D_c^n(b))`; absent when `b = c`.
    pub twisting: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceScan {
    pub a: Slope,
    pub b: Slope,
    pub c: Slope,
    pub window: Window,
    pub base_distance: usize,
    /// `d(a, c) + d(c, b)`.
    pub upper_bound: usize,
    /// `{n : d(a, D_c^n b) < d(a, b)}`.
    pub exceptional: Vec<i64>,
    pub bound_holds: bool,
    /// All exceptions lie in the inner window.
    pub confined: bool,
    pub rows: Vec<DistanceRow>,
}

impl DistanceScan {
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        vec![("upper_bound".to_string(), self.bound_holds), ("confined".to_string(), self.confined)]
    }

    /// Columns `n, slope, distance, twisting`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,slope,distance,twisting\n");
        for r in &self.rows {
            let t = r.twisting.map(|t| t.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{},{}\n", r.n, r.slope, r.distance, t));
        }
        out
    }
}

/// Distances from `a` along the twist orbit `D_c^n(b)`.
pub fn twist_coset_distance_scan(a: &Slope, b: &Slope, c: &Slope, w: &Window) -> Result<DistanceScan, FareyError> {
    let ns: Vec<i64> = w.iter().collect();
    let rows = ns
        .par_iter()
        .map(|&n| {
            let slope = twist(c, n, b)?;
            let twisting = if b == c { None } else { Some(twisting_coefficient(c, &slope)?) };
            Ok(DistanceRow { n, slope, distance: distance(a, &slope), twisting })
        })
        .collect::<Result<Vec<_>, FareyError>>()?;
    let base_distance = distance(a, b);
    let upper_bound = distance(a, c) + distance(c, b);
    let exceptional: Vec<i64> = rows.iter().filter(|r| r.distance < base_distance).map(|r| r.n).collect();
    let bound_holds = rows.iter().all(|r| r.distance <= upper_bound);
    let confined = exceptional.iter().all(|&n| w.in_inner(n));
    Ok(DistanceScan { a: *a, b: *b, c: *c, window: *w, base_distance, upper_bound, exceptional, bound_holds, confined, rows })
}
