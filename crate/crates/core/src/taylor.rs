//! Betti numbers by minimizing the Taylor resolution.
//!
//! The Taylor complex has a basis element `e_s` for every nonempty subset `s`
//! of the generators, in multidegree `lcm(s)`, with
//! `d(e_s) = sum_j ± (m_s / m_{s\j}) e_{s\j}`. Its constant entries are
//! exactly those between basis elements of equal multidegree, so the
//! minimization splits into one cancellation problem per multidegree:
//! repeatedly pick an invertible entry, cancel the pair it connects and
//! correct the remaining block by the Schur complement. The surviving basis
//! elements are the minimal Betti numbers.

use std::collections::{BTreeMap, HashMap};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::with_field;

/// Generator count above which the `2^r` Taylor complex is refused.
pub const MAX_TAYLOR_GENERATORS: usize = 12;

pub fn taylor_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    with_field!(field, |f| taylor_betti_in(ideal, &f))
}

fn taylor_betti_in<F: Field>(ideal: &MonomialIdeal, field: &F) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::Domain("Taylor complex of the zero ideal".into()));
    }
    let r = ideal.num_gens();
    if r > MAX_TAYLOR_GENERATORS {
        return Err(Error::GuardExceeded {
            what: "Taylor complex generators",
            limit: MAX_TAYLOR_GENERATORS,
            got: r,
        });
    }
    let gens = ideal.gens();
    let mut lcms: Vec<Monomial> = vec![Monomial::one(ideal.nvars()); 1 << r];
    // Group basis elements by multidegree, then by homological index.
    let mut strands: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    for s in 1u32..(1 << r) {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        lcms[s as usize] = if rest == 0 {
            gens[low].clone()
        } else {
            lcms[rest as usize].lcm(&gens[low])
        };
        let i = s.count_ones() as usize - 1;
        let strand = strands.entry(lcms[s as usize].exps().to_vec()).or_default();
        if strand.len() <= i {
            strand.resize(i + 1, Vec::new());
        }
        strand[i].push(s);
    }

    let mut entries = BTreeMap::new();
    for (degree, levels) in strands {
        for (i, rank) in minimize_strand(field, &levels).into_iter().enumerate() {
            if rank > 0 {
                entries.insert((i, degree.clone()), rank);
            }
        }
    }
    Ok(BettiTable::from_multigraded(entries))
}

/// Differential `V_i -> V_{i-1}` of one strand as a dense matrix.
fn strand_differential<F: Field>(field: &F, domain: &[u32], codomain: &[u32]) -> Vec<Vec<F::Elem>> {
    let index: HashMap<u32, usize> = codomain.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let mut m = vec![vec![field.zero(); domain.len()]; codomain.len()];
    for (c, &s) in domain.iter().enumerate() {
        let mut pos = 0;
        for j in 0..32 {
            if s >> j & 1 == 1 {
                if let Some(&row) = index.get(&(s & !(1 << j))) {
                    m[row][c] = field.from_i64(if pos % 2 == 0 { 1 } else { -1 });
                }
                pos += 1;
            }
        }
    }
    m
}

/// Cancel invertible entries until every differential vanishes; returns the
/// surviving dimension at each homological index.
fn minimize_strand<F: Field>(field: &F, levels: &[Vec<u32>]) -> Vec<usize> {
    let mut dims: Vec<usize> = levels.iter().map(Vec::len).collect();
    // maps[i] : V_i -> V_{i-1} for i >= 1, stored as rows x cols.
    let mut maps: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); levels.len()];
    for i in 1..levels.len() {
        maps[i] = strand_differential(field, &levels[i], &levels[i - 1]);
    }
    loop {
        let pivot = (1..maps.len()).find_map(|i| {
            maps[i].iter().enumerate().find_map(|(r, row)| {
                row.iter()
                    .position(|v| !field.is_zero(v))
                    .map(|c| (i, r, c))
            })
        });
        let Some((i, r, c)) = pivot else { break };

        let m = &mut maps[i];
        let inv = field.inv(&m[r][c]);
        let pivot_row: Vec<F::Elem> = m[r].iter().map(|v| field.mul(v, &inv)).collect();
        for (rr, row) in m.iter_mut().enumerate() {
            if rr == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (cc, v) in row.iter_mut().enumerate() {
                if cc != c && !field.is_zero(&pivot_row[cc]) {
                    *v = field.sub(v, &field.mul(&factor, &pivot_row[cc]));
                }
            }
        }
        m.remove(r);
        for row in m.iter_mut() {
            row.remove(c);
        }
        // V_i loses basis element c, V_{i-1} loses r.
        if i + 1 < maps.len() {
            maps[i + 1].remove(c);
        }
        if i >= 2 {
            for row in maps[i - 1].iter_mut() {
                row.remove(r);
            }
        }
        dims[i] -= 1;
        dims[i - 1] -= 1;
    }
    dims
}
