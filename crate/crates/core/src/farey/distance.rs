use num_integer::Integer;
use serde::Serialize;

use super::slope::Slope;

/// A path of Farey-adjacent slopes, endpoints included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GeodesicPath {
    pub vertices: Vec<Slope>,
}

impl GeodesicPath {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

type Vec2 = (i128, i128);

/// `γ ∈ SL(2, Z)` with `γ u = (1, 0)`, as rows.
fn to_infinity(u: &Slope) -> [[i128; 2]; 2] {
    let (p, q) = u.wide();
    let e = p.extended_gcd(&q);
    let (s, t) = (e.x * e.gcd, e.y * e.gcd);
    [[s, t], [-q, p]]
}

fn apply(m: &[[i128; 2]; 2], v: Vec2) -> Vec2 {
    (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
}

fn invert(m: &[[i128; 2]; 2]) -> [[i128; 2]; 2] {
    [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
}

/// Partial quotients and convergents `c_{-1} = ∞, c_0, ..., c_n = a/b`.
fn convergents(a: i128, b: i128) -> (Vec<i128>, Vec<Vec2>) {
    let (mut x, mut y) = (a, b);
    let mut quotients = Vec::new();
    let mut conv = vec![(1, 0)];
    let (mut p2, mut q2, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    while y != 0 {
        let k = Integer::div_floor(&x, &y);
        quotients.push(k);
        let (p, q) = (k * p1 + p2, k * q1 + q2);
        conv.push((p, q));
        (p2, q2, p1, q1) = (p1, q1, p, q);
        (x, y) = (y, x - k * y);
    }
    (quotients, conv)
}

/// Vertex indices of a shortest path `∞ = c_{-1} -> c_n`: consecutive
/// convergents are adjacent, and `c_{k-2}, c_k` are adjacent exactly when
/// the `k`-th quotient is 1. Every geodesic from `∞` stays in this ladder.
fn ladder_path(quotients: &[i128]) -> Vec<usize> {
    // vertex i is convergent c_{i-1}
    let m = quotients.len() + 1;
    let mut dist = vec![0usize; m];
    let mut prev = vec![0usize; m];
    for i in 1..m {
        dist[i] = dist[i - 1] + 1;
        prev[i] = i - 1;
        // quotient a_k with k = i - 1 >= 1 links c_{k-2} (vertex i - 2)
        if i >= 2 && quotients[i - 1] == 1 && dist[i - 2] + 1 < dist[i] {
            dist[i] = dist[i - 2] + 1;
            prev[i] = i - 2;
        }
    }
    let mut path = vec![m - 1];
    while *path.last().unwrap() != 0 {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

fn ladder(u: &Slope, v: &Slope) -> ([[i128; 2]; 2], Vec<Vec2>, Vec<usize>) {
    let g = to_infinity(u);
    let (a, b) = apply(&g, v.wide());
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    let (quotients, conv) = convergents(a, b);
    let path = ladder_path(&quotients);
    (g, conv, path)
}

/// Exact Farey-graph distance.
pub fn distance(u: &Slope, v: &Slope) -> usize {
    if u == v {
        return 0;
    }
    let (_, _, path) = ladder(u, v);
    path.len() - 1
}

/// A shortest path from `u` to `v` through the convergents of `v` seen
/// from `u`; ties prefer the later convergent, so the output is deterministic.
pub fn geodesic(u: &Slope, v: &Slope) -> GeodesicPath {
    if u == v {
        return GeodesicPath { vertices: vec![*u] };
    }
    let (g, conv, path) = ladder(u, v);
    let back = invert(&g);
    let vertices = path
        .into_iter()
        .map(|i| {
            let (p, q) = apply(&back, conv[i]);
            Slope::from_wide(p, q).expect("images of convergents stay small")
        })
        .collect();
    GeodesicPath { vertices }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::intersection_number;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn small_distances() {
        assert_eq!(distance(&s(3, 5), &s(3, 5)), 0);
        assert_eq!(distance(&Slope::INFINITY, &Slope::ZERO), 1);
        assert_eq!(distance(&Slope::INFINITY, &s(1, 2)), 2);
        assert_eq!(geodesic(&Slope::INFINITY, &s(1, 2)).vertices.len(), 3);
        assert_eq!(geodesic(&s(2, 7), &s(2, 7)).vertices, vec![s(2, 7)]);
        assert_eq!(geodesic(&s(1, 2), &s(1, 3)).vertices, vec![s(1, 2), s(1, 3)]);
    }

    #[test]
    fn paths_are_adjacent_and_end_correctly() {
        for (u, v) in [(s(3, 7), s(-5, 12)), (s(1, 0), s(13, 21)), (s(-4, 9), s(4, 9))] {
            let path = geodesic(&u, &v);
            assert_eq!(path.vertices.first(), Some(&u));
            assert_eq!(path.vertices.last(), Some(&v));
            assert_eq!(path.len(), distance(&u, &v));
            for w in path.vertices.windows(2) {
                assert_eq!(intersection_number(&w[0], &w[1]), 1);
            }
        }
    }
}
