//! Exact rank of integer matrices.
//!
//! Over the rationals the rank is computed with fraction-free (Bareiss)
//! elimination on big integers; over a prime field with ordinary elimination
//! on residues.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::FieldSpec;

/// Rank of `rows` (a dense row-major integer matrix) over `field`.
pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rational => rank_bareiss(rows),
        FieldSpec::Prime(p) => rank_mod_p(rows, p),
    }
}

fn rank_bareiss(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                // Exact by Sylvester's identity.
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p128 = p as i128;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| (v as i128).rem_euclid(p128) as u64).collect())
        .collect();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (a, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let pinv = inv(m[rank][col]);
        for r in rank + 1..nrows {
            if m[r][col] == 0 {
                continue;
            }
            let factor = mul(m[r][col], pinv);
            for c in col..ncols {
                let sub = mul(factor, m[rank][c]);
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}
