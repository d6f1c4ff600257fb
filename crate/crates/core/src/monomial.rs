//! Monomials and monomial ideals with canonical minimal generators.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest variable count accepted by the exhaustive height search.
pub const MAX_HEIGHT_VARS: usize = 16;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` in an `n`-variable ring.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self / gcd(self, other)`: exponents truncated at zero.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support as a bitmask (at most 64 variables).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Permute variables: variable `i` becomes variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial { exps }
    }

    /// `x^e` factors joined by `*`, exponent 1 elided, unit rendered `1`.
    pub fn render(&self, names: &[String]) -> String {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Canonical generator order: degree, then exponent vectors
    /// lexicographically.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

/// Variable names used when none are declared: `x, y, z, t` for up to four
/// variables, `x1, ..., xn` beyond.
pub fn default_var_names(n: usize) -> Vec<String> {
    const SMALL: [&str; 4] = ["x", "y", "z", "t"];
    if n <= SMALL.len() {
        SMALL[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// A monomial ideal held by its canonical minimal generating set.
///
/// The zero ideal has no generators; the unit ideal has the single generator
/// `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn check_ambient(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { left: a, right: b })
    }
}

/// Canonical minimal generating set of the ideal spanned by `monomials`.
pub fn minimalize(monomials: Vec<Monomial>, n: usize) -> Result<MonomialIdeal> {
    if let Some(m) = monomials.iter().find(|m| m.nvars() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: m.nvars(),
        });
    }
    Ok(MonomialIdeal::from_raw(n, monomials))
}

impl MonomialIdeal {
    fn from_raw(n: usize, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort_by(|a, b| a.canonical_cmp(b));
        monomials.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(monomials.len());
        // Any divisor of m precedes m in canonical order.
        for m in monomials {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { n, gens }
    }

    pub fn new(n: usize, monomials: Vec<Monomial>) -> Result<Self> {
        minimalize(monomials, n)
    }

    /// Build from exponent vectors.
    pub fn from_exponents(n: usize, exps: &[&[u32]]) -> Result<Self> {
        minimalize(exps.iter().map(|e| Monomial::new(e.to_vec())).collect(), n)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(n: usize) -> Self {
        MonomialIdeal::from_raw(n, (0..n).map(|i| Monomial::var(n, i)).collect())
    }

    pub fn principal(m: Monomial) -> Self {
        let n = m.nvars();
        MonomialIdeal { n, gens: vec![m] }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Largest generator degree (0 for the zero ideal).
    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Is every generator of `other` in `self`?
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ambient(self.n, other.n)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal::from_raw(self.n, out))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ambient(self.n, other.n)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::from_raw(self.n, out))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ambient(self.n, other.n)?;
        let out = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_raw(self.n, out))
    }

    /// `I : q` for a single monomial.
    pub fn colon_monomial(&self, q: &Monomial) -> Result<MonomialIdeal> {
        check_ambient(self.n, q.nvars())?;
        let out = self.gens.iter().map(|g| g.saturating_div(q)).collect();
        Ok(MonomialIdeal::from_raw(self.n, out))
    }

    /// `I : Q`. The colon by the zero ideal is the unit ideal.
    pub fn colon(&self, q: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ambient(self.n, q.n)?;
        let mut acc = MonomialIdeal::unit(self.n);
        for g in &q.gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn lcm_of_generators(&self) -> Result<Monomial> {
        if self.is_zero() {
            return Err(Error::Domain("lcm of the zero ideal".into()));
        }
        Ok(self
            .gens
            .iter()
            .skip(1)
            .fold(self.gens[0].clone(), |acc, g| acc.lcm(g)))
    }

    /// Smallest number of variables meeting the support of every generator.
    pub fn height(&self) -> Result<usize> {
        if !self.is_proper_nonzero() {
            return Err(Error::Domain(
                "height is defined for nonzero proper ideals".into(),
            ));
        }
        if self.n > MAX_HEIGHT_VARS {
            return Err(Error::GuardExceeded {
                what: "height variable count",
                limit: MAX_HEIGHT_VARS,
                got: self.n,
            });
        }
        let supports: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        for size in 1..=self.n {
            if covers_with(size, self.n, &supports) {
                return Ok(size);
            }
        }
        // Every generator is a non-unit, so all variables form a cover.
        Err(Error::Internal("no vertex cover found".into()))
    }

    /// Minimal monomial generators with pairwise disjoint supports.
    pub fn is_complete_intersection(&self) -> bool {
        if !self.is_proper_nonzero() {
            return false;
        }
        let mut seen = 0u64;
        for g in &self.gens {
            let s = g.support_mask();
            if seen & s != 0 {
                return false;
            }
            seen |= s;
        }
        true
    }

    /// `sum deg f_i - r + 1` for a complete intersection with `r` generators.
    pub fn ci_regularity(&self) -> Result<i64> {
        if !self.is_complete_intersection() {
            return Err(Error::Domain("not a monomial complete intersection".into()));
        }
        let total: i64 = self.gens.iter().map(|g| g.degree() as i64).sum();
        Ok(total - self.gens.len() as i64 + 1)
    }

    /// `deg F - ht(I) + 1` with `F` the lcm of the generators.
    pub fn ht_regularity_bound(&self) -> Result<i64> {
        let ht = self.height()?;
        let lcm = self.lcm_of_generators()?;
        Ok(lcm.degree() as i64 - ht as i64 + 1)
    }

    /// Relabel variables: variable `i` becomes variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> MonomialIdeal {
        MonomialIdeal::from_raw(self.n, self.gens.iter().map(|g| g.permuted(perm)).collect())
    }

    /// `(g_1, ..., g_k)` using the given variable names; zero ideal is `(0)`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_var_names(self.n)))
    }
}

/// Intersection of several ideals, folded pairwise. Empty input gives the
/// unit ideal of `n` variables.
pub fn intersect_many(n: usize, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    ideals
        .iter()
        .try_fold(MonomialIdeal::unit(n), |acc, i| acc.intersect(i))
}

/// Product of several ideals. Empty input gives the unit ideal.
pub fn product_many(n: usize, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    ideals
        .iter()
        .try_fold(MonomialIdeal::unit(n), |acc, i| acc.product(i))
}

fn covers_with(size: usize, n: usize, supports: &[u64]) -> bool {
    // Enumerate subsets of {0..n} of the given size in lexicographic order.
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
        if supports.iter().all(|s| s & mask != 0) {
            return true;
        }
        let mut k = size;
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            if idx[k] < n - size + k {
                idx[k] += 1;
                for j in k + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
