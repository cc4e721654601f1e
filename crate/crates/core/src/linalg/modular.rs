use super::{LinalgError, Matrix};
use crate::scalar::Scalar;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut e, mut acc) = (a as u128, p - 2, 1u128);
    let m = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Rank of `a` over the prime field of order `p`.
pub fn rank_mod_p<T: Scalar>(a: &Matrix<T>, p: u64) -> Result<usize, LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let modulus = T::from_u64(p).ok_or(LinalgError::NotPrime(p))?;
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|x| x.mod_floor(&modulus).to_u64().expect("residue fits u64"))
                .collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = inverse_mod(m[r][c], p) as u128;
        for x in &mut m[r][c..cols] {
            *x = (*x as u128 * inv % p as u128) as u64;
        }
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r][c..cols];
        for row in tail {
            let f = row[c] as u128;
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..cols].iter_mut().zip(pivot_row) {
                let sub = f * y as u128 % p as u128;
                *x = ((*x as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        r += 1;
    }
    Ok(r)
}
