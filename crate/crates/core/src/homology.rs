//! Multigraded Betti numbers of monomial ideals from simplicial homology.
//!
//! For a multidegree `b`, the upper Koszul complex `K^b(I)` is the simplicial
//! complex of variable subsets `s` of the support of `b` with `x^b / x^s` in
//! `I`, and `beta_{i,b}(I) = dim H~_{i-1}(K^b(I))`. Nonzero Betti numbers only
//! occur at degrees in the lcm lattice of the generators, so those are the
//! only degrees evaluated.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg;
use crate::monomial::{Monomial, MonomialIdeal};

/// Generator count above which the lcm lattice is refused.
pub const MAX_LATTICE_GENERATORS: usize = 20;

/// A simplicial complex on vertices `0..n`, held by its facets as bitmasks.
///
/// The void complex has no facets; the complex `{∅}` has the single empty
/// facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex generated by `faces`; non-maximal entries are dropped.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        faces.dedup();
        let mut facets: Vec<u64> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f & g == f) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { n, facets }
    }

    /// Full simplex on the given vertex mask.
    pub fn simplex(n: usize, vertices: u64) -> Self {
        SimplicialComplex {
            n,
            facets: vec![vertices],
        }
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// All faces, including the empty face unless the complex is void.
    pub fn faces(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            // Enumerate submasks of f.
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out
    }
}

/// All least common multiples of nonempty subsets of the generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<BTreeSet<Vec<u32>>> {
    if ideal.is_zero() {
        return Err(Error::Domain("lcm lattice of the zero ideal".into()));
    }
    if ideal.num_gens() > MAX_LATTICE_GENERATORS {
        return Err(Error::GuardExceeded {
            what: "lcm lattice generators",
            limit: MAX_LATTICE_GENERATORS,
            got: ideal.num_gens(),
        });
    }
    let mut lattice: BTreeSet<Vec<u32>> = BTreeSet::new();
    for g in ideal.gens() {
        let joined: Vec<Vec<u32>> = lattice
            .iter()
            .map(|l| Monomial::new(l.clone()).lcm(g).exps().to_vec())
            .collect();
        lattice.insert(g.exps().to_vec());
        lattice.extend(joined);
    }
    Ok(lattice)
}

/// The upper Koszul simplicial complex of `ideal` at multidegree `b`.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &[u32]) -> SimplicialComplex {
    let n = ideal.nvars();
    let support: u64 = b
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |m, (i, _)| m | (1 << i));
    let mut faces = Vec::new();
    let mut s = support;
    loop {
        let quotient: Vec<u32> = b
            .iter()
            .enumerate()
            .map(|(i, &e)| if s >> i & 1 == 1 { e - 1 } else { e })
            .collect();
        if ideal.contains(&Monomial::new(quotient)) {
            faces.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & support;
    }
    SimplicialComplex::from_faces(n, faces)
}

/// Reduced homology dimensions over `field`; entry `j` is `dim H~_{j-1}`.
/// The void complex yields an empty vector.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    let faces = complex.faces();
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] = faces with s vertices (dimension s - 1).
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in &faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // ranks[s] = rank of the boundary from faces of size s to size s - 1.
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows = &by_size[s - 1];
        let cols = &by_size[s];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let row_index: HashMap<u64, usize> =
            rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            let mut pos = 0;
            for v in 0..64 {
                if face >> v & 1 == 1 {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    m[row_index[&(face & !(1 << v))]][c] = sign;
                    pos += 1;
                }
            }
        }
        ranks[s] = linalg::rank(&m, field);
    }
    (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// Multigraded Betti numbers of the ideal at one multidegree:
/// entry `i` is `beta_{i,b}(I)`.
pub fn betti_at(ideal: &MonomialIdeal, b: &[u32], field: FieldSpec) -> Vec<usize> {
    reduced_homology_dims(&upper_koszul(ideal, b), field)
}

/// Complete multigraded Betti table of a nonzero monomial ideal.
pub fn betti_multigraded(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal)?;
    let mut entries = BTreeMap::new();
    for b in lattice {
        for (i, r) in betti_at(ideal, &b, field).into_iter().enumerate() {
            if r > 0 {
                entries.insert((i, b.clone()), r);
            }
        }
    }
    Ok(BettiTable::from_multigraded(entries))
}

/// Castelnuovo-Mumford regularity of a nonzero monomial ideal. The unit
/// ideal has regularity 0.
pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec) -> Result<i64> {
    if ideal.is_zero() {
        return Err(Error::Domain("regularity of the zero ideal".into()));
    }
    if ideal.is_unit() {
        return Ok(0);
    }
    betti_multigraded(ideal, field)?
        .regularity()
        .ok_or_else(|| Error::Internal("empty Betti table for a nonzero ideal".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, exps).unwrap()
    }

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn lattice_examples() {
        let l = lcm_lattice(&MonomialIdeal::maximal(2)).unwrap();
        assert_eq!(l, [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect());
        assert_eq!(
            lcm_lattice(&ideal(1, &[&[2]])).unwrap(),
            [vec![2]].into_iter().collect()
        );
        // (x^2, xy, y^2): direct enumeration over the seven nonempty subsets.
        let l = lcm_lattice(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        let expected: BTreeSet<Vec<u32>> = [
            vec![2, 0],
            vec![1, 1],
            vec![0, 2],
            vec![2, 1],
            vec![1, 2],
            vec![2, 2],
        ]
        .into_iter()
        .collect();
        assert_eq!(l, expected);
        assert!(lcm_lattice(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn lattice_guard() {
        let n = 21;
        let gens: Vec<Monomial> = (0..n).map(|i| Monomial::var(n, i)).collect();
        let i = MonomialIdeal::new(n, gens).unwrap();
        assert!(matches!(lcm_lattice(&i), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn upper_koszul_examples() {
        // (x, y) at xy: xy, y, x are in I, 1 is not.
        let k = upper_koszul(&MonomialIdeal::maximal(2), &[1, 1]);
        assert_eq!(k.facets(), &[0b01, 0b10]);
        // (x) at x: only the empty face.
        let k = upper_koszul(&ideal(1, &[&[1]]), &[1]);
        assert_eq!(k.facets(), &[0]);
        assert!(!k.is_void());
        // x^b not in I: void.
        let k = upper_koszul(&ideal(2, &[&[2, 0]]), &[1, 1]);
        assert!(k.is_void());
    }

    #[test]
    fn homology_examples() {
        let two_points = SimplicialComplex::from_faces(3, [0b001, 0b010]);
        assert_eq!(reduced_homology_dims(&two_points, Q), vec![0, 1]);
        let simplex = SimplicialComplex::simplex(3, 0b111);
        assert!(reduced_homology_dims(&simplex, Q).iter().all(|&d| d == 0));
        let hollow = SimplicialComplex::from_faces(3, [0b011, 0b110, 0b101]);
        assert_eq!(reduced_homology_dims(&hollow, Q), vec![0, 0, 1]);
        let empty_face = SimplicialComplex::from_faces(2, [0]);
        assert_eq!(reduced_homology_dims(&empty_face, Q), vec![1]);
        assert!(reduced_homology_dims(&SimplicialComplex::void(2), Q).is_empty());
    }

    #[test]
    fn betti_examples() {
        let t = betti_multigraded(&MonomialIdeal::maximal(2), Q).unwrap();
        assert_eq!(t.multigraded_rank(0, &[1, 0]), 1);
        assert_eq!(t.multigraded_rank(0, &[0, 1]), 1);
        assert_eq!(t.multigraded_rank(1, &[1, 1]), 1);
        assert_eq!(t.totals(), vec![2, 1]);

        let t = betti_multigraded(&ideal(2, &[&[2, 0], &[0, 3]]), Q).unwrap();
        assert_eq!(t.rank(0, 2), 1);
        assert_eq!(t.rank(0, 3), 1);
        assert_eq!(t.multigraded_rank(1, &[2, 3]), 1);
        assert_eq!(t.regularity(), Some(4));

        let t = betti_multigraded(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]), Q).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(t.regularity(), Some(2));
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&MonomialIdeal::maximal(3), Q).unwrap(), 1);
        assert_eq!(
            regularity(&ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]), Q).unwrap(),
            7
        );
        assert_eq!(
            regularity(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]), Q).unwrap(),
            2
        );
        assert_eq!(regularity(&MonomialIdeal::unit(2), Q).unwrap(), 0);
        assert!(regularity(&MonomialIdeal::zero(2), Q).is_err());
    }
}
