//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::monomial::Monomial;

/// Monomial order on exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Block order: the first `eliminated` variables compared by degrevlex
    /// first, ties broken by degrevlex on the remaining variables.
    Elimination { eliminated: usize },
}

impl TermOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.cmp_by(a.len(), |i| a[i], |i| b[i])
    }

    /// Compare `a + da` with `b + db` without materializing the products.
    pub fn cmp_shifted(&self, a: &[u32], da: &[u32], b: &[u32], db: &[u32]) -> Ordering {
        self.cmp_by(a.len(), |i| a[i] + da[i], |i| b[i] + db[i])
    }

    fn cmp_by(&self, n: usize, fa: impl Fn(usize) -> u32, fb: impl Fn(usize) -> u32) -> Ordering {
        match *self {
            TermOrder::DegRevLex => degrevlex(0, n, &fa, &fb),
            TermOrder::Lex => (0..n)
                .map(|i| fa(i).cmp(&fb(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            TermOrder::Elimination { eliminated } => {
                let k = eliminated.min(n);
                degrevlex(0, k, &fa, &fb).then_with(|| degrevlex(k, n, &fa, &fb))
            }
        }
    }
}

fn degrevlex(
    lo: usize,
    hi: usize,
    fa: &impl Fn(usize) -> u32,
    fb: &impl Fn(usize) -> u32,
) -> Ordering {
    let da: u32 = (lo..hi).map(fa).sum();
    let db: u32 = (lo..hi).map(fb).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        let (x, y) = (fa(i), fb(i));
        if x != y {
            // Smaller exponent in the last differing variable is larger.
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

/// Field-independent description of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub vars: Vec<String>,
    pub field: FieldSpec,
    pub order: TermOrder,
}

impl RingSpec {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: TermOrder) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidConfig(format!("duplicate variable `{v}`")));
            }
        }
        if let TermOrder::Elimination { eliminated } = order {
            if eliminated > vars.len() {
                return Err(Error::InvalidConfig(
                    "elimination block larger than the variable set".into(),
                ));
            }
        }
        Ok(RingSpec { vars, field, order })
    }
}

/// A polynomial: nonzero terms sorted strictly descending by the ring's
/// order. The ordering is maintained by [`PolyRing`], which owns the order.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    terms: Vec<(F::Elem, Monomial)>,
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.terms.iter().map(|(c, m)| (c, m.exps())))
            .finish()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(F::Elem, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Is this a nonzero constant?
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Wrap terms already sorted strictly descending with nonzero
    /// coefficients.
    pub(crate) fn from_sorted(terms: Vec<(F::Elem, Monomial)>) -> Self {
        Polynomial { terms }
    }

    /// Drop the leading term.
    pub(crate) fn into_tail(mut self) -> Self {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }
}

/// A polynomial ring: variable names, monomial order, coefficient field and
/// grading weights.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    names: Vec<String>,
    order: TermOrder,
    field: F,
    weights: Vec<u32>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(names: Vec<String>, order: TermOrder, field: F) -> Self {
        let weights = vec![1; names.len()];
        PolyRing {
            names,
            order,
            field,
            weights,
        }
    }

    pub fn from_spec(spec: &RingSpec, field: F) -> Self {
        PolyRing::new(spec.vars.clone(), spec.order, field)
    }

    /// Same ring with per-variable degrees replaced.
    pub fn with_weights(mut self, weights: Vec<u32>) -> Self {
        assert_eq!(weights.len(), self.names.len());
        self.weights = weights;
        self
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: TermOrder) -> Self {
        PolyRing {
            order,
            ..self.clone()
        }
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec {
            vars: self.names.clone(),
            field: self.field.spec(),
            order: self.order,
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a.exps(), b.exps())
    }

    /// Sort, combine like terms and drop zeros.
    pub fn poly(&self, mut terms: Vec<(F::Elem, Monomial)>) -> Polynomial<F> {
        terms.sort_by(|a, b| self.cmp_monomials(&b.1, &a.1));
        let mut out: Vec<(F::Elem, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn from_int_terms(&self, terms: &[(i64, Vec<u32>)]) -> Polynomial<F> {
        self.poly(
            terms
                .iter()
                .map(|(c, e)| (self.field.from_i64(*c), Monomial::new(e.clone())))
                .collect(),
        )
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.poly(vec![(c, Monomial::one(self.nvars()))])
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F> {
        Polynomial {
            terms: vec![(self.field.one(), m)],
        }
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.nvars(), i))
    }

    /// Weighted degree of a monomial.
    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.exps().iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// Weighted degree of the leading term; `None` for zero.
    pub fn degree(&self, p: &Polynomial<F>) -> Option<u32> {
        p.terms.iter().map(|(_, m)| self.monomial_degree(m)).max()
    }

    pub fn is_homogeneous(&self, p: &Polynomial<F>) -> bool {
        let mut degs = p.terms.iter().map(|(_, m)| self.monomial_degree(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn merge(
        &self,
        a: &[(F::Elem, Monomial)],
        b: impl Iterator<Item = (F::Elem, Monomial)>,
    ) -> Polynomial<F> {
        let mut out = Vec::with_capacity(a.len());
        let mut ai = a.iter().peekable();
        let mut bi = b.peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(ai.next().unwrap().clone()),
                (None, Some(_)) => out.push(bi.next().unwrap()),
                (Some((_, ma)), Some((_, mb))) => match self.cmp_monomials(ma, mb) {
                    Ordering::Greater => out.push(ai.next().unwrap().clone()),
                    Ordering::Less => out.push(bi.next().unwrap()),
                    Ordering::Equal => {
                        let (ca, m) = ai.next().unwrap();
                        let (cb, _) = bi.next().unwrap();
                        let c = self.field.add(ca, &cb);
                        if !self.field.is_zero(&c) {
                            out.push((c, m.clone()));
                        }
                    }
                },
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.merge(&a.terms, b.terms.iter().cloned())
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.merge(
            &a.terms,
            b.terms.iter().map(|(c, m)| (self.field.neg(c), m.clone())),
        )
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(c, m)| (self.field.neg(c), m.clone()))
                .collect(),
        }
    }

    /// `c * m * p`; monomial multiplication preserves term order.
    pub fn mul_term(&self, p: &Polynomial<F>, c: &F::Elem, m: &Monomial) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(pc, pm)| (self.field.mul(pc, c), pm.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        self.mul_term(p, c, &Monomial::one(self.nvars()))
    }

    /// `p - c * m * g`.
    pub fn sub_mul_term(
        &self,
        p: &Polynomial<F>,
        c: &F::Elem,
        m: &Monomial,
        g: &Polynomial<F>,
    ) -> Polynomial<F> {
        let neg = self.field.neg(c);
        self.merge(
            &p.terms,
            g.terms
                .iter()
                .map(|(gc, gm)| (self.field.mul(gc, &neg), gm.mul(m))),
        )
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero();
        for (c, m) in &b.terms {
            acc = self.merge(
                &acc.terms,
                a.terms.iter().map(|(ac, am)| (self.field.mul(ac, c), am.mul(m))),
            );
        }
        acc
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self, p: &Polynomial<F>) -> Polynomial<F> {
        match p.leading_coeff() {
            None => Polynomial::zero(),
            Some(c) if self.field.is_one(c) => p.clone(),
            Some(c) => self.scale(p, &self.field.inv(c)),
        }
    }

    /// Exact quotient `f / g`, or `None` if `g` does not divide `f`.
    pub fn divide_exact(&self, f: &Polynomial<F>, g: &Polynomial<F>) -> Option<Polynomial<F>> {
        let (gc, gm) = g.leading_term()?;
        let ginv = self.field.inv(gc);
        let mut rem = f.clone();
        let mut quotient = Vec::new();
        while let Some((c, m)) = rem.leading_term() {
            let q = m.div(gm)?;
            let qc = self.field.mul(c, &ginv);
            rem = self.sub_mul_term(&rem, &qc, &q, g);
            quotient.push((qc, q));
        }
        Some(self.poly(quotient))
    }

    /// Re-sort a polynomial from another ring with the same variables.
    pub fn convert(&self, p: &Polynomial<F>) -> Polynomial<F> {
        self.poly(p.terms.clone())
    }

    /// Map a polynomial into this ring by sending variable `i` of the source
    /// to variable `map[i]` here.
    pub fn embed(&self, p: &Polynomial<F>, map: &[usize]) -> Polynomial<F> {
        let n = self.nvars();
        self.poly(
            p.terms
                .iter()
                .map(|(c, m)| {
                    let mut e = vec![0; n];
                    for (i, &x) in m.exps().iter().enumerate() {
                        e[map[i]] += x;
                    }
                    (c.clone(), Monomial::new(e))
                })
                .collect(),
        )
    }

    /// Render with integer-style coefficients: `2*x^2*y - z`, `0` for zero.
    pub fn render(&self, p: &Polynomial<F>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (c, m)) in p.terms.iter().enumerate() {
            let negative = self.field.is_negative(c);
            let abs = if negative { self.field.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.render(&self.names);
            if m.is_one() {
                out.push_str(&self.field.render(&abs));
            } else if self.field.is_one(&abs) {
                out.push_str(&mono);
            } else {
                out.push_str(&self.field.render(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}
