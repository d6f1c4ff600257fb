//! Buchberger's algorithm and the division algorithm.

use std::collections::HashSet;

use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Remainder of `f` on division by `basis`. Each step reduces the leading
/// term of the running polynomial by the first basis element whose leading
/// monomial divides it, so the result is deterministic in the basis order.
pub fn normal_form<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
) -> Polynomial<F> {
    let field = ring.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((c, m)) = p.leading_term().cloned() {
        let divisor = basis.iter().find(|g| {
            g.leading_monomial().is_some_and(|lm| lm.divides(&m))
        });
        match divisor {
            Some(g) => {
                let (gc, gm) = g.leading_term().expect("nonzero divisor");
                let q = m.div(gm).expect("leading monomial divides");
                p = ring.sub_mul_term(&p, &field.div(&c, gc), &q, g);
            }
            None => {
                rem.push((c, m));
                p = p.into_tail();
            }
        }
    }
    Polynomial::from_sorted(rem)
}

pub fn s_polynomial<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Polynomial<F> {
    let field = ring.field();
    let (fc, fm) = f.leading_term().expect("nonzero");
    let (gc, gm) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = ring.mul_term(f, &field.inv(fc), &l.div(fm).unwrap());
    let b = ring.mul_term(g, &field.inv(gc), &l.div(gm).unwrap());
    ring.sub(&a, &b)
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted ascending
/// by leading monomial. Pairs are taken lowest lcm degree first; the coprime
/// and chain criteria discard pairs that cannot contribute.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let insert = |p: Polynomial<F>,
                      basis: &mut Vec<Polynomial<F>>,
                      lms: &mut Vec<Monomial>,
                      pending: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        lms.push(p.leading_monomial().unwrap().clone());
        basis.push(ring.monic(&p));
        for i in 0..k {
            pending.insert((i, k));
        }
    };

    for g in gens {
        let g = normal_form(ring, g, &basis);
        if !g.is_zero() {
            insert(g, &mut basis, &mut lms, &mut pending);
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = lms[a.0].lcm(&lms[a.1]);
        let lb = lms[b.0].lcm(&lms[b.1]);
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| ring.cmp_monomials(&la, &lb))
            .then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !pending.contains(&pair_key(i, k))
                && !pending.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let h = normal_form(ring, &s, &basis);
        if !h.is_zero() {
            insert(h, &mut basis, &mut lms, &mut pending);
        }
    }
    reduce_basis(ring, basis)
}

/// Turn a Gröbner basis into the reduced one: drop elements whose leading
/// monomial is divisible by another's, tail-reduce, make monic, sort.
pub fn reduce_basis<F: Field>(ring: &PolyRing<F>, mut basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    basis.retain(|p| !p.is_zero());
    basis.sort_by(|a, b| {
        ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(ring.monic(&normal_form(ring, &minimal[k], &others)));
    }
    reduced
}

/// Does every S-polynomial of `basis` reduce to zero?
pub fn is_groebner_basis<F: Field>(ring: &PolyRing<F>, basis: &[Polynomial<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(ring, &basis[i], &basis[j]);
            if !normal_form(ring, &s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A reduced Gröbner basis together with its ring.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    polys: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            polys: buchberger(ring, gens),
        }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<Polynomial<F>> {
        self.polys
    }

    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(&self.ring, f, &self.polys)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(Polynomial::is_constant)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::default_var_names;
    use crate::poly::TermOrder;

    fn ring(n: usize) -> PolyRing<Rationals> {
        PolyRing::new(default_var_names(n), TermOrder::DegRevLex, Rationals)
    }

    /// x^m t - y^m z in k[x, y, z, t].
    fn binomial(r: &PolyRing<Rationals>, m: u32) -> Polynomial<Rationals> {
        r.from_int_terms(&[(1, vec![m, 0, 0, 1]), (-1, vec![0, m, 1, 0])])
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2);
        let x = r.var(0);
        let y = r.var(1);
        assert!(normal_form(&r, &r.mul(&x, &x), &[x.clone()]).is_zero());
        assert_eq!(normal_form(&r, &r.add(&x, &y), &[x.clone()]), y);

        let r4 = ring(4);
        let g = binomial(&r4, 2);
        let t3 = r4.from_int_terms(&[(1, vec![0, 0, 0, 3])]);
        let z3 = r4.from_int_terms(&[(1, vec![0, 0, 3, 0])]);
        assert_eq!(normal_form(&r4, &g, &[t3, z3]), g);
    }

    #[test]
    fn linear_elimination() {
        let r = ring(2);
        let gens = [
            r.from_int_terms(&[(1, vec![1, 0]), (-1, vec![0, 1])]),
            r.from_int_terms(&[(1, vec![1, 0]), (1, vec![0, 1])]),
        ];
        let gb = buchberger(&r, &gens);
        assert_eq!(gb, vec![r.var(1), r.var(0)]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(3);
        let gens = [
            r.from_int_terms(&[(1, vec![2, 1, 0])]),
            r.from_int_terms(&[(1, vec![1, 2, 0])]),
            r.from_int_terms(&[(1, vec![2, 2, 0])]),
            r.from_int_terms(&[(1, vec![0, 0, 3])]),
        ];
        let gb = buchberger(&r, &gens);
        assert_eq!(gb.len(), 3);
        assert!(gb.iter().all(Polynomial::is_monomial));
    }

    #[test]
    fn binomial_family_basis_is_closed() {
        let r = ring(4);
        let gens = [
            r.from_int_terms(&[(1, vec![0, 0, 0, 3])]),
            r.from_int_terms(&[(1, vec![0, 0, 3, 0])]),
            binomial(&r, 2),
        ];
        let gb = buchberger(&r, &gens);
        assert!(is_groebner_basis(&r, &gb));
        for g in &gens {
            assert!(normal_form(&r, g, &gb).is_zero());
        }
        assert_eq!(buchberger(&r, &gb), gb);
    }

    #[test]
    fn unit_ideal() {
        let r = ring(2);
        let gens = [
            r.from_int_terms(&[(1, vec![1, 0]), (-1, vec![0, 0])]),
            r.var(0),
        ];
        assert_eq!(buchberger(&r, &gens), vec![r.one()]);
    }

    #[test]
    fn prime_field_basis() {
        let r = PolyRing::new(default_var_names(2), TermOrder::Lex, PrimeField::new(5).unwrap());
        // x^2 - y, x*y - 1 over F_5
        let gens = [
            r.from_int_terms(&[(1, vec![2, 0]), (-1, vec![0, 1])]),
            r.from_int_terms(&[(1, vec![1, 1]), (-1, vec![0, 0])]),
        ];
        let gb = buchberger(&r, &gens);
        assert!(is_groebner_basis(&r, &gb));
        // lex basis: x - y^2, y^3 - 1
        assert_eq!(r.render(&gb[0]), "y^3 - 1");
        assert_eq!(r.render(&gb[1]), "x - y^2");
    }
}
