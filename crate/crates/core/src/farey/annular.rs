use num_integer::Integer;

use super::slope::{det, Slope};
use super::FareyError;

/// The partner `d` of `c` with `det(c, d) = +1`, taken with
/// `0 <= d_q < c_q` (and `d = (0, 1)` for `c = 1/0`). Returned as a raw
/// vector since its sign matters.
pub fn dual_slope(c: &Slope) -> (i64, i64) {
    let (p, q) = (c.p(), c.q());
    if q == 0 {
        return (0, 1);
    }
    // p x + q y = 1, so d = (-y, x) has p x - q (-y) = 1
    let e = p.extended_gcd(&q);
    let (x, y) = (e.x * e.gcd, e.y * e.gcd);
    let k = Integer::div_floor(&x, &q);
    (-y - k * p, x - k * q)
}

/// `t_c(v) = floor(det(d, v) / det(c, v))`: writing `v = α c + β d`, this is
/// `floor(-α / β)`, which the twist `D_c` raises by exactly one.
pub fn twisting_coefficient(c: &Slope, v: &Slope) -> Result<i64, FareyError> {
    let cv = det(c, v);
    if cv == 0 {
        return Err(FareyError::CoreCurve(*c));
    }
    let (dp, dq) = dual_slope(c);
    let (vp, vq) = v.wide();
    let dv = dp as i128 * vq - dq as i128 * vp;
    i64::try_from(Integer::div_floor(&dv, &cv)).map_err(|_| FareyError::Overflow)
}

/// `1 + |t_c(u) - t_c(v)|`.
pub fn annular_distance(c: &Slope, u: &Slope, v: &Slope) -> Result<u64, FareyError> {
    let (tu, tv) = (twisting_coefficient(c, u)?, twisting_coefficient(c, v)?);
    Ok(1 + tu.abs_diff(tv))
}
