//! Ideal arithmetic for homogeneous polynomial ideals.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poly::{PolyRing, Polynomial, TermOrder};

/// Rounds of `I : J` attempted before saturation gives up.
pub const SATURATION_ROUNDS: usize = 50;

/// A polynomial ideal given by generators. Zero generators are dropped.
#[derive(Debug, Clone)]
pub struct PolyIdeal<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> PolyIdeal<F> {
    pub fn new(ring: &PolyRing<F>, gens: Vec<Polynomial<F>>) -> Self {
        PolyIdeal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    pub fn zero(ring: &PolyRing<F>) -> Self {
        PolyIdeal::new(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing<F>) -> Self {
        PolyIdeal::new(ring, vec![ring.one()])
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &PolyRing<F>) -> Self {
        PolyIdeal::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn from_monomial_ideal(ring: &PolyRing<F>, ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.nvars() != ring.nvars() {
            return Err(Error::AmbientMismatch {
                left: ring.nvars(),
                right: ideal.nvars(),
            });
        }
        Ok(PolyIdeal::new(
            ring,
            ideal.gens().iter().map(|m| ring.monomial(m.clone())).collect(),
        ))
    }

    /// The monomial ideal with the same generators, if every generator is a
    /// term.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.gens.iter().all(Polynomial::is_monomial) {
            return None;
        }
        MonomialIdeal::new(
            self.ring.nvars(),
            self.gens
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect(),
        )
        .ok()
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| self.ring.is_homogeneous(g))
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        match self.gens.iter().find(|g| !self.ring.is_homogeneous(g)) {
            Some(g) => Err(Error::NotHomogeneous(self.ring.render(g))),
            None => Ok(()),
        }
    }

    pub fn groebner(&self) -> GroebnerBasis<F> {
        GroebnerBasis::compute(&self.ring, &self.gens)
    }

    /// The ideal generated by its own reduced Gröbner basis.
    pub fn reduced(&self) -> Self {
        PolyIdeal::new(&self.ring, self.groebner().into_polys())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.groebner().contains(f)
    }

    /// Is `other` a subset of `self`?
    pub fn contains_ideal(&self, other: &PolyIdeal<F>) -> bool {
        let gb = self.groebner();
        other.gens.iter().all(|g| gb.contains(g))
    }

    /// Equality as ideals, by mutual membership.
    pub fn same_ideal(&self, other: &PolyIdeal<F>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn sum(&self, other: &PolyIdeal<F>) -> Self {
        PolyIdeal::new(
            &self.ring,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        )
    }

    pub fn product(&self, other: &PolyIdeal<F>) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(self.ring.mul(a, b));
            }
        }
        PolyIdeal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `w` from `w I + (1 - w) J`, where `w` is an
    /// extra variable of degree zero placed first in a block order.
    pub fn intersect(&self, other: &PolyIdeal<F>) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(PolyIdeal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let mut names = vec![fresh_name(self.ring.names())];
        names.extend(self.ring.names().iter().cloned());
        let mut weights = vec![0];
        weights.extend_from_slice(self.ring.weights());
        let big = PolyRing::new(
            names,
            TermOrder::Elimination { eliminated: 1 },
            self.ring.field().clone(),
        )
        .with_weights(weights);
        let shift: Vec<usize> = (1..=n).collect();
        let w = big.var(0);
        let one_minus_w = big.sub(&big.one(), &w);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(big.mul(&w, &big.embed(f, &shift)));
        }
        for g in &other.gens {
            gens.push(big.mul(&one_minus_w, &big.embed(g, &shift)));
        }
        let gb = GroebnerBasis::compute(&big, &gens);
        let kept: Vec<Polynomial<F>> = gb
            .polys()
            .iter()
            .filter(|p| p.terms().iter().all(|(_, m)| m.exps()[0] == 0))
            .map(|p| {
                let terms = p
                    .terms()
                    .iter()
                    .map(|(c, m)| {
                        let e = m.exps()[1..].to_vec();
                        (c.clone(), Monomial::new(e))
                    })
                    .collect();
                self.ring.poly(terms)
            })
            .collect();
        let result = PolyIdeal::new(&self.ring, kept).reduced();
        if self.is_homogeneous() && other.is_homogeneous() {
            result.require_homogeneous()?;
        }
        Ok(result)
    }

    /// `I : f`, as the generators of `I ∩ (f)` divided by `f`.
    pub fn colon_poly(&self, f: &Polynomial<F>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Domain("colon by the zero polynomial".into()));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = PolyIdeal::new(&self.ring, vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let q = self.ring.divide_exact(g, f).ok_or_else(|| {
                Error::Internal(format!(
                    "{} is not divisible by {}",
                    self.ring.render(g),
                    self.ring.render(f)
                ))
            })?;
            gens.push(q);
        }
        Ok(PolyIdeal::new(&self.ring, gens).reduced())
    }

    /// `I : J`, intersecting the colons by each generator of `J`. The colon
    /// by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &PolyIdeal<F>) -> Result<Self> {
        let mut acc: Option<PolyIdeal<F>> = None;
        for g in &other.gens {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| PolyIdeal::unit(&self.ring)))
    }

    /// `I : J^∞`, iterating the colon until the ideal stops growing.
    pub fn saturation(&self, other: &PolyIdeal<F>) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("saturation by the zero ideal".into()));
        }
        let mut current = self.reduced();
        for _ in 0..SATURATION_ROUNDS {
            let next = current.colon(other)?;
            // I ⊆ I : J always, so equality reduces to one containment.
            if current.contains_ideal(&next) {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::GuardExceeded {
            what: "saturation rounds",
            limit: SATURATION_ROUNDS,
            got: SATURATION_ROUNDS + 1,
        })
    }

    /// `(g_1, ..., g_k)` in the ring's notation.
    pub fn render(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.render(g)).collect();
        format!("({})", parts.join(", "))
    }
}

fn fresh_name(names: &[String]) -> String {
    let mut candidate = "w".to_string();
    while names.contains(&candidate) {
        candidate.push('_');
    }
    candidate
}
