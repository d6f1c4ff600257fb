//! Graded free resolutions by Schreyer's algorithm, and their minimization.
//!
//! A resolution is built level by level. Level `k` holds a Gröbner basis
//! `G_k` of a submodule of `F_{k-1}` (with `F_{-1} = S`); the S-pair
//! reductions among `G_k` give a Gröbner basis of its syzygies for the order
//! induced on `F_k` by the leading terms of `G_k`. Keeping only syzygies with
//! minimal leading terms per component and ordering each level by leading
//! monomial (lex descending) makes the construction stop after at most
//! `n + 1` levels.
//!
//! The induced order on `F_k` compares `x^a e_i` with `x^b e_j` through the
//! images `x^a lt(g_i)` and `x^b lt(g_j)` in `F_{k-1}`, breaking ties by the
//! smaller index. Unrolled to level zero it is: the ring order on
//! `a + offset_i`, then the chain of component indices, each compared
//! smaller-first.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::buchberger;
use crate::ideal::PolyIdeal;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial, TermOrder};

#[derive(Debug, Clone)]
struct ModTerm<E> {
    coeff: E,
    mono: Monomial,
    comp: usize,
}

/// Element of a free module, terms sorted descending by the module order.
type ModElem<E> = Vec<ModTerm<E>>;

/// Induced monomial order on a free module.
#[derive(Debug, Clone)]
struct ModuleOrder {
    ring: TermOrder,
    offsets: Vec<Monomial>,
    chains: Vec<Vec<u32>>,
}

impl ModuleOrder {
    fn base(ring: TermOrder, nvars: usize) -> Self {
        ModuleOrder {
            ring,
            offsets: vec![Monomial::one(nvars)],
            chains: vec![vec![0]],
        }
    }

    /// Order on the free module whose basis maps to `gens`.
    fn induced<E>(&self, gens: &[ModElem<E>]) -> Self {
        let mut offsets = Vec::with_capacity(gens.len());
        let mut chains = Vec::with_capacity(gens.len());
        for (j, g) in gens.iter().enumerate() {
            let lt = &g[0];
            offsets.push(lt.mono.mul(&self.offsets[lt.comp]));
            let mut chain = self.chains[lt.comp].clone();
            chain.push(j as u32);
            chains.push(chain);
        }
        ModuleOrder {
            ring: self.ring,
            offsets,
            chains,
        }
    }

    fn cmp(&self, a: &Monomial, i: usize, b: &Monomial, j: usize) -> Ordering {
        self.ring
            .cmp_shifted(a.exps(), self.offsets[i].exps(), b.exps(), self.offsets[j].exps())
            .then_with(|| {
                for (x, y) in self.chains[i].iter().zip(&self.chains[j]) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
    }
}

/// `p - c * m * g` in a free module.
fn sub_mul<F: Field>(
    field: &F,
    order: &ModuleOrder,
    p: &[ModTerm<F::Elem>],
    c: &F::Elem,
    m: &Monomial,
    g: &[ModTerm<F::Elem>],
) -> ModElem<F::Elem> {
    let neg = field.neg(c);
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut pi = p.iter().cloned().peekable();
    let mut gi = g
        .iter()
        .map(|t| ModTerm {
            coeff: field.mul(&t.coeff, &neg),
            mono: t.mono.mul(m),
            comp: t.comp,
        })
        .peekable();
    loop {
        let ord = match (pi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(a), Some(b)) => order.cmp(&a.mono, a.comp, &b.mono, b.comp),
        };
        match ord {
            Ordering::Greater => out.push(pi.next().unwrap()),
            Ordering::Less => out.push(gi.next().unwrap()),
            Ordering::Equal => {
                let mut a = pi.next().unwrap();
                let b = gi.next().unwrap();
                a.coeff = field.add(&a.coeff, &b.coeff);
                if !field.is_zero(&a.coeff) {
                    out.push(a);
                }
            }
        }
    }
    out
}

fn normalize<F: Field>(field: &F, order: &ModuleOrder, mut terms: ModElem<F::Elem>) -> ModElem<F::Elem> {
    terms.sort_by(|a, b| order.cmp(&b.mono, b.comp, &a.mono, a.comp));
    let mut out: ModElem<F::Elem> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.comp == t.comp && last.mono == t.mono => {
                last.coeff = field.add(&last.coeff, &t.coeff);
            }
            _ => out.push(t),
        }
    }
    out.retain(|t| !field.is_zero(&t.coeff));
    if let Some(lc) = out.first().map(|t| t.coeff.clone()) {
        if !field.is_one(&lc) {
            let inv = field.inv(&lc);
            for t in &mut out {
                t.coeff = field.mul(&t.coeff, &inv);
            }
        }
    }
    out
}

/// Syzygies of a module Gröbner basis `gens` (in a module ordered by
/// `order`), expressed in the free module ordered by `induced`. Only the
/// syzygies with minimal leading terms in each component are produced; they
/// form a Gröbner basis of the syzygy module.
fn syzygies_of<F: Field>(
    field: &F,
    order: &ModuleOrder,
    induced: &ModuleOrder,
    gens: &[ModElem<F::Elem>],
) -> Result<Vec<ModElem<F::Elem>>> {
    let mut out = Vec::new();
    for i in 0..gens.len() {
        let lt_i = &gens[i][0];
        let mut candidates: Vec<(Monomial, usize)> = (i + 1..gens.len())
            .filter(|&j| gens[j][0].comp == lt_i.comp)
            .map(|j| {
                let l = lt_i.mono.lcm(&gens[j][0].mono);
                (l.div(&lt_i.mono).unwrap(), j)
            })
            .collect();
        candidates.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (m, j) in candidates {
            if !kept.iter().any(|(k, _)| k.divides(&m)) {
                kept.push((m, j));
            }
        }
        for (a, j) in kept {
            let lt_j = &gens[j][0];
            let l = lt_i.mono.mul(&a);
            let b = l.div(&lt_j.mono).unwrap();
            let ci = field.inv(&lt_i.coeff);
            let cj = field.inv(&lt_j.coeff);
            // svec = ci a g_i - cj b g_j
            let mut svec = sub_mul(field, order, &[], &field.neg(&ci), &a, &gens[i]);
            svec = sub_mul(field, order, &svec, &cj, &b, &gens[j]);
            let mut terms = vec![
                ModTerm {
                    coeff: ci,
                    mono: a,
                    comp: i,
                },
                ModTerm {
                    coeff: field.neg(&cj),
                    mono: b,
                    comp: j,
                },
            ];
            while let Some(lt) = svec.first().cloned() {
                let divisor = gens
                    .iter()
                    .position(|g| g[0].comp == lt.comp && g[0].mono.divides(&lt.mono))
                    .ok_or_else(|| {
                        Error::Internal("S-vector with nonzero remainder: not a Gröbner basis".into())
                    })?;
                let g = &gens[divisor];
                let q = lt.mono.div(&g[0].mono).unwrap();
                let qc = field.div(&lt.coeff, &g[0].coeff);
                svec = sub_mul(field, order, &svec, &qc, &q, g);
                terms.push(ModTerm {
                    coeff: field.neg(&qc),
                    mono: q,
                    comp: divisor,
                });
            }
            let syz = normalize(field, induced, terms);
            if syz.is_empty() {
                return Err(Error::Internal("zero syzygy".into()));
            }
            out.push(syz);
        }
    }
    Ok(out)
}

/// Order a level so that within a component leading monomials are lex
/// descending; this bounds the length of the Schreyer resolution.
fn sort_level<E>(level: &mut [ModElem<E>]) {
    level.sort_by(|a, b| {
        a[0].comp
            .cmp(&b[0].comp)
            .then_with(|| b[0].mono.exps().cmp(a[0].mono.exps()))
    });
}

/// One differential of a resolution: a matrix of homogeneous polynomials
/// (rows index the target basis, columns the source basis) with the degrees
/// of both bases.
#[derive(Debug, Clone)]
pub struct Step<F: Field> {
    pub row_degrees: Vec<u32>,
    pub col_degrees: Vec<u32>,
    pub matrix: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> Step<F> {
    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial<F> {
        &self.matrix[r][c]
    }

    fn remove_row(&mut self, r: usize) {
        self.row_degrees.remove(r);
        self.matrix.remove(r);
    }

    fn remove_col(&mut self, c: usize) {
        self.col_degrees.remove(c);
        for row in &mut self.matrix {
            row.remove(c);
        }
    }
}

/// Graded free resolution `... -> F_1 -> F_0 -> I -> 0` of an ideal.
/// `steps[0]` is the `1 x rank F_0` generator row; `steps[k]` maps `F_k` to
/// `F_{k-1}`.
#[derive(Debug, Clone)]
pub struct Resolution<F: Field> {
    ring: PolyRing<F>,
    steps: Vec<Step<F>>,
    minimal: bool,
}

impl<F: Field> Resolution<F> {
    /// Wrap explicit differentials, checking them with [`Resolution::verify`].
    pub fn from_steps(ring: &PolyRing<F>, steps: Vec<Step<F>>) -> Result<Self> {
        let res = Resolution {
            ring: ring.clone(),
            steps,
            minimal: false,
        };
        res.verify()?;
        Ok(res)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn steps(&self) -> &[Step<F>] {
        &self.steps
    }

    pub fn is_marked_minimal(&self) -> bool {
        self.minimal
    }

    /// Ranks of `F_0, F_1, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(Step::ncols).collect()
    }

    /// Number of free modules.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut graded = BTreeMap::new();
        for (k, step) in self.steps.iter().enumerate() {
            for &d in &step.col_degrees {
                *graded.entry((k, d)).or_insert(0) += 1;
            }
        }
        BettiTable::from_graded(graded)
    }

    /// Coefficients (index = degree) of the numerator of the Hilbert series
    /// of `S/I`: `1 - sum_d beta_{0,d} s^d + sum_d beta_{1,d} s^d - ...`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let mut coeffs: BTreeMap<u32, i64> = BTreeMap::new();
        coeffs.insert(0, 1);
        for (k, step) in self.steps.iter().enumerate() {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            for &d in &step.col_degrees {
                *coeffs.entry(d).or_insert(0) += sign;
            }
        }
        let top = coeffs
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(&d, _)| d as usize + 1)
            .max()
            .unwrap_or(0);
        (0..top as u32).map(|d| coeffs.get(&d).copied().unwrap_or(0)).collect()
    }

    /// Check that consecutive maps compose to zero, every entry has the
    /// degree its basis degrees dictate, the length is within the syzygy
    /// bound, and a resolution marked minimal has no constant entries.
    pub fn verify(&self) -> Result<()> {
        let ring = &self.ring;
        if self.steps.len() > ring.nvars() + 1 {
            return Err(Error::Internal(format!(
                "resolution has {} modules in {} variables",
                self.steps.len(),
                ring.nvars()
            )));
        }
        for (k, step) in self.steps.iter().enumerate() {
            for r in 0..step.nrows() {
                for c in 0..step.ncols() {
                    let e = &step.matrix[r][c];
                    if e.is_zero() {
                        continue;
                    }
                    let expected = step.col_degrees[c] as i64 - step.row_degrees[r] as i64;
                    let ok = ring.is_homogeneous(e)
                        && ring.degree(e).map(|d| d as i64) == Some(expected);
                    if !ok {
                        return Err(Error::Internal(format!(
                            "step {k} entry ({r}, {c}) = {} has the wrong degree (expected {expected})",
                            ring.render(e)
                        )));
                    }
                    if self.minimal && k > 0 && e.is_constant() {
                        return Err(Error::Internal(format!(
                            "minimal resolution has a constant entry at step {k} ({r}, {c})"
                        )));
                    }
                }
            }
            if k > 0 {
                let prev = &self.steps[k - 1];
                if prev.col_degrees != step.row_degrees {
                    return Err(Error::Internal(format!("basis degrees disagree at step {k}")));
                }
                for r in 0..prev.nrows() {
                    for c in 0..step.ncols() {
                        let mut acc = Polynomial::zero();
                        for m in 0..prev.ncols() {
                            if prev.matrix[r][m].is_zero() || step.matrix[m][c].is_zero() {
                                continue;
                            }
                            acc = ring.add(&acc, &ring.mul(&prev.matrix[r][m], &step.matrix[m][c]));
                        }
                        if !acc.is_zero() {
                            return Err(Error::Internal(format!(
                                "steps {} and {k} do not compose to zero",
                                k - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Cancel constant entries of the differentials (Gaussian elimination on
    /// the complex) until none remain.
    pub fn minimize(&self) -> Resolution<F> {
        let ring = &self.ring;
        let field = ring.field();
        let mut steps = self.steps.clone();
        loop {
            let pivot = (1..steps.len()).find_map(|k| {
                let s = &steps[k];
                (0..s.nrows()).find_map(|r| {
                    (0..s.ncols())
                        .find(|&c| s.matrix[r][c].is_constant())
                        .map(|c| (k, r, c))
                })
            });
            let Some((k, r, c)) = pivot else { break };
            {
                let m = &mut steps[k].matrix;
                let u = m[r][c].leading_coeff().unwrap().clone();
                let uinv = field.inv(&u);
                let pivot_row: Vec<Polynomial<F>> =
                    m[r].iter().map(|p| ring.scale(p, &uinv)).collect();
                for rr in 0..m.len() {
                    if rr == r || m[rr][c].is_zero() {
                        continue;
                    }
                    let factor = m[rr][c].clone();
                    for cc in 0..pivot_row.len() {
                        if cc == c || pivot_row[cc].is_zero() {
                            continue;
                        }
                        let update = ring.mul(&factor, &pivot_row[cc]);
                        m[rr][cc] = ring.sub(&m[rr][cc], &update);
                    }
                }
            }
            steps[k].remove_row(r);
            steps[k].remove_col(c);
            if k + 1 < steps.len() {
                steps[k + 1].remove_row(c);
            }
            steps[k - 1].remove_col(r);
            if let Some(first_empty) = steps.iter().position(|s| s.ncols() == 0) {
                steps.truncate(first_empty);
            }
        }
        Resolution {
            ring: self.ring.clone(),
            steps,
            minimal: true,
        }
    }
}

/// First syzygies of the polynomials `gens`, which must form a Gröbner
/// basis of the ideal they generate. Each syzygy is returned as its vector
/// of coefficients, one polynomial per generator.
pub fn schreyer_syzygies<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
) -> Result<Vec<Vec<Polynomial<F>>>> {
    let field = ring.field();
    let base = ModuleOrder::base(ring.order(), ring.nvars());
    let level: Vec<ModElem<F::Elem>> = gens.iter().map(|g| poly_to_elem(g)).collect();
    if level.iter().any(Vec::is_empty) {
        return Err(Error::Domain("zero polynomial in a Gröbner basis".into()));
    }
    let induced = base.induced(&level);
    let syz = syzygies_of(field, &base, &induced, &level)?;
    Ok(syz
        .iter()
        .map(|s| elem_to_column(ring, s, gens.len()))
        .collect())
}

fn poly_to_elem<F: Field>(p: &Polynomial<F>) -> ModElem<F::Elem> {
    p.terms()
        .iter()
        .map(|(c, m)| ModTerm {
            coeff: c.clone(),
            mono: m.clone(),
            comp: 0,
        })
        .collect()
}

fn elem_to_column<F: Field>(ring: &PolyRing<F>, e: &[ModTerm<F::Elem>], rows: usize) -> Vec<Polynomial<F>> {
    let mut buckets: Vec<Vec<(F::Elem, Monomial)>> = vec![Vec::new(); rows];
    for t in e {
        buckets[t.comp].push((t.coeff.clone(), t.mono.clone()));
    }
    buckets.into_iter().map(|b| ring.poly(b)).collect()
}

/// A graded free resolution of a homogeneous ideal, generally not minimal.
/// `max_steps` caps the number of free modules.
pub fn free_resolution<F: Field>(ideal: &PolyIdeal<F>, max_steps: usize) -> Result<Resolution<F>> {
    ideal.require_homogeneous()?;
    if ideal.is_zero() {
        return Err(Error::Domain("resolution of the zero ideal".into()));
    }
    let ring = ideal.ring().clone();
    let field = ring.field();
    let gb = buchberger(&ring, ideal.gens());

    let mut order = ModuleOrder::base(ring.order(), ring.nvars());
    let mut degrees: Vec<u32> = vec![0];
    let mut level: Vec<ModElem<F::Elem>> = gb.iter().map(|g| poly_to_elem(g)).collect();
    sort_level(&mut level);
    let mut steps = Vec::new();
    while !level.is_empty() {
        if steps.len() >= max_steps {
            return Err(Error::GuardExceeded {
                what: "resolution steps",
                limit: max_steps,
                got: steps.len() + 1,
            });
        }
        let col_degrees: Vec<u32> = level
            .iter()
            .map(|g| ring.monomial_degree(&g[0].mono) + degrees[g[0].comp])
            .collect();
        let columns: Vec<Vec<Polynomial<F>>> = level
            .iter()
            .map(|g| elem_to_column(&ring, g, degrees.len()))
            .collect();
        let matrix = (0..degrees.len())
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect();
        steps.push(Step {
            row_degrees: degrees.clone(),
            col_degrees: col_degrees.clone(),
            matrix,
        });

        let induced = order.induced(&level);
        let mut next = syzygies_of(field, &order, &induced, &level)?;
        sort_level(&mut next);
        level = next;
        order = induced;
        degrees = col_degrees;
    }
    Ok(Resolution {
        ring,
        steps,
        minimal: false,
    })
}

/// The minimal graded free resolution of a homogeneous ideal.
pub fn minimal_resolution<F: Field>(ideal: &PolyIdeal<F>) -> Result<Resolution<F>> {
    let cap = ideal.ring().nvars() + 1;
    Ok(free_resolution(ideal, cap)?.minimize())
}

/// Graded Betti table of the minimal resolution of a homogeneous ideal.
pub fn graded_betti<F: Field>(ideal: &PolyIdeal<F>) -> Result<BettiTable> {
    Ok(minimal_resolution(ideal)?.betti_table())
}

/// Regularity of a nonzero homogeneous ideal; 0 for the unit ideal.
pub fn regularity_poly<F: Field>(ideal: &PolyIdeal<F>) -> Result<i64> {
    let table = graded_betti(ideal)?;
    table
        .regularity()
        .ok_or_else(|| Error::Internal("empty Betti table for a nonzero ideal".into()))
}

/// Hilbert series numerator of `S/I` from the minimal resolution.
pub fn hilbert_numerator<F: Field>(ideal: &PolyIdeal<F>) -> Result<Vec<i64>> {
    Ok(minimal_resolution(ideal)?.hilbert_numerator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::default_var_names;

    fn ring(n: usize) -> PolyRing<Rationals> {
        PolyRing::new(default_var_names(n), TermOrder::DegRevLex, Rationals)
    }

    fn ideal(r: &PolyRing<Rationals>, gens: &[&[(i64, Vec<u32>)]]) -> PolyIdeal<Rationals> {
        PolyIdeal::new(r, gens.iter().map(|t| r.from_int_terms(t)).collect())
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(2);
        let syz = schreyer_syzygies(&r, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(syz.len(), 1);
        // Up to a scalar: (y, -x).
        let s = &syz[0];
        let scaled: Vec<Polynomial<Rationals>> = if s[0] == r.var(1) {
            s.clone()
        } else {
            s.iter().map(|p| r.neg(p)).collect()
        };
        assert_eq!(scaled, vec![r.var(1), r.neg(&r.var(0))]);
    }

    #[test]
    fn complete_intersection_syzygy() {
        let r = ring(4);
        let t3 = r.from_int_terms(&[(1, vec![0, 0, 0, 3])]);
        let z3 = r.from_int_terms(&[(1, vec![0, 0, 3, 0])]);
        let gens = vec![t3, z3];
        let syz = schreyer_syzygies(&r, &gens).unwrap();
        assert_eq!(syz.len(), 1);
        // Each entry has degree 3 against generators of degree 3.
        let deg: Vec<u32> = syz[0].iter().map(|p| r.degree(p).unwrap() + 3).collect();
        assert_eq!(deg, vec![6, 6]);
        let composed = r.add(&r.mul(&syz[0][0], &gens[0]), &r.mul(&syz[0][1], &gens[1]));
        assert!(composed.is_zero());
    }

    #[test]
    fn koszul_ranks() {
        let r = ring(2);
        let res = free_resolution(&PolyIdeal::maximal(&r), 3).unwrap();
        assert_eq!(res.ranks(), vec![2, 1]);
        res.verify().unwrap();
        let r = ring(3);
        let res = minimal_resolution(&PolyIdeal::maximal(&r)).unwrap();
        assert_eq!(res.ranks(), vec![3, 3, 1]);
        res.verify().unwrap();
    }

    #[test]
    fn regularity_examples() {
        let r = ring(4);
        let ci = ideal(&r, &[&[(1, vec![2, 0, 0, 0])], &[(1, vec![0, 3, 0, 0])]]);
        assert_eq!(regularity_poly(&ci).unwrap(), 4);
        let g = ideal(&r, &[&[(1, vec![2, 0, 0, 1]), (-1, vec![0, 2, 1, 0])]]);
        assert_eq!(regularity_poly(&g).unwrap(), 3);
        assert!(regularity_poly(&PolyIdeal::zero(&r)).is_err());
        assert_eq!(regularity_poly(&PolyIdeal::unit(&r)).unwrap(), 0);
    }

    #[test]
    fn family_k_regularity() {
        // K = (t^3, z^3, x^2 t - y^2 z)
        let r = ring(4);
        let k = ideal(
            &r,
            &[
                &[(1, vec![0, 0, 0, 3])],
                &[(1, vec![0, 0, 3, 0])],
                &[(1, vec![2, 0, 0, 1]), (-1, vec![0, 2, 1, 0])],
            ],
        );
        let res = free_resolution(&k, 5).unwrap();
        res.verify().unwrap();
        let min = res.minimize();
        min.verify().unwrap();
        assert_eq!(min.betti_table().regularity(), Some(8));
        assert_eq!(res.hilbert_numerator(), min.hilbert_numerator());
    }

    /// Taylor resolution of a monomial ideal as explicit differentials.
    fn taylor_resolution(r: &PolyRing<Rationals>, gens: &[Vec<u32>]) -> Resolution<Rationals> {
        let k = gens.len();
        let lcm = |s: u32| {
            (0..k)
                .filter(|j| s >> j & 1 == 1)
                .fold(Monomial::one(r.nvars()), |acc, j| acc.lcm(&Monomial::new(gens[j].clone())))
        };
        let subsets = |size: u32| -> Vec<u32> { (1u32..1 << k).filter(|s| s.count_ones() == size).collect() };
        let mut steps = vec![Step {
            row_degrees: vec![0],
            col_degrees: subsets(1).iter().map(|&s| lcm(s).degree()).collect(),
            matrix: vec![subsets(1).iter().map(|&s| r.monomial(lcm(s))).collect()],
        }];
        for size in 2..=k as u32 {
            let rows = subsets(size - 1);
            let cols = subsets(size);
            let matrix = rows
                .iter()
                .map(|&t| {
                    cols.iter()
                        .map(|&s| {
                            if s & t != t {
                                return Polynomial::zero();
                            }
                            let j = (s & !t).trailing_zeros();
                            let pos = (s & ((1 << j) - 1)).count_ones();
                            let c = if pos % 2 == 0 { 1 } else { -1 };
                            let m = lcm(s).div(&lcm(t)).unwrap();
                            r.scale(&r.monomial(m), &r.field().from_i64(c))
                        })
                        .collect()
                })
                .collect();
            steps.push(Step {
                row_degrees: rows.iter().map(|&t| lcm(t).degree()).collect(),
                col_degrees: cols.iter().map(|&s| lcm(s).degree()).collect(),
                matrix,
            });
        }
        Resolution::from_steps(r, steps).unwrap()
    }

    #[test]
    fn minimization_of_taylor_resolutions() {
        let r = ring(2);
        // (x^2, xy): already minimal.
        let t = taylor_resolution(&r, &[vec![2, 0], vec![1, 1]]);
        assert_eq!(t.minimize().ranks(), vec![2, 1]);
        // (x^2, xy, y^2): e_{13} -> e_{123} is a unit; one cancellation.
        let t = taylor_resolution(&r, &[vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(t.ranks(), vec![3, 3, 1]);
        let min = t.minimize();
        assert_eq!(min.ranks(), vec![3, 2]);
        min.verify().unwrap();
        assert_eq!(min.hilbert_numerator(), t.hilbert_numerator());
    }

    #[test]
    fn minimal_resolution_ranks() {
        let r = ring(2);
        let i = ideal(&r, &[&[(1, vec![2, 0])], &[(1, vec![1, 1])], &[(1, vec![0, 2])]]);
        let min = minimal_resolution(&i).unwrap();
        assert_eq!(min.ranks(), vec![3, 2]);
        min.verify().unwrap();
    }

    #[test]
    fn hilbert_numerators() {
        let r = ring(2);
        let x = ideal(&r, &[&[(1, vec![1, 0])]]);
        assert_eq!(hilbert_numerator(&x).unwrap(), vec![1, -1]);
        assert_eq!(hilbert_numerator(&PolyIdeal::maximal(&r)).unwrap(), vec![1, -2, 1]);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = ring(2);
        let i = ideal(&r, &[&[(1, vec![2, 0]), (1, vec![0, 1])]]);
        assert!(matches!(free_resolution(&i, 3), Err(Error::NotHomogeneous(_))));
    }
}
