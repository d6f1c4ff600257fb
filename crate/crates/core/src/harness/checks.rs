//! Individual regularity checks on monomial ideals.
//!
//! Every check computes a left-hand value and a bound. Asserted checks are
//! backed by proofs, so a failure means an engine bug; exploratory checks only
//! record what they see.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::regularity;
use crate::monomial::{default_var_names, intersect_many, product_many, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Asserted,
    Exploratory,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub kind: CheckKind,
    pub trial: usize,
    pub seed: u64,
    pub inputs: Vec<String>,
    pub lhs: i64,
    pub bound: i64,
    pub holds: bool,
    /// Set on exploratory checks that found a counterexample.
    pub notable: bool,
    /// Secondary quantities (other sides of multi-part checks).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, i64>,
    pub elapsed_ms: f64,
}

impl CheckReport {
    fn new(id: &str, kind: CheckKind, inputs: &[&MonomialIdeal], lhs: i64, bound: i64) -> Self {
        let names = inputs
            .first()
            .map(|i| default_var_names(i.nvars()))
            .unwrap_or_default();
        let holds = lhs <= bound;
        CheckReport {
            check_id: id.to_string(),
            kind,
            trial: 0,
            seed: 0,
            inputs: inputs.iter().map(|i| i.render(&names)).collect(),
            lhs,
            bound,
            holds,
            notable: kind == CheckKind::Exploratory && !holds,
            extra: BTreeMap::new(),
            elapsed_ms: 0.0,
        }
    }

    fn extra(mut self, key: &str, value: i64) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }

    /// A failed asserted check.
    pub fn is_failure(&self) -> bool {
        self.kind == CheckKind::Asserted && !self.holds
    }
}

/// Regularity with the unit ideal counted as 0.
fn reg(ideal: &MonomialIdeal, field: FieldSpec) -> Result<i64> {
    regularity(ideal, field)
}

fn require_ci(what: &str, ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_complete_intersection() {
        Ok(())
    } else {
        let names = default_var_names(ideal.nvars());
        Err(Error::Domain(format!(
            "{what} = {} is not a monomial complete intersection",
            ideal.render(&names)
        )))
    }
}

fn require_proper(what: &str, ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_proper_nonzero() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be proper and nonzero")))
    }
}

/// `reg(IJ) <= reg(I) + reg(J)` for complete intersections.
pub fn check_product(i: &MonomialIdeal, j: &MonomialIdeal, field: FieldSpec) -> Result<CheckReport> {
    let start = Instant::now();
    require_ci("I", i)?;
    require_ci("J", j)?;
    let lhs = reg(&i.product(j)?, field)?;
    let bound = i.ci_regularity()? + j.ci_regularity()?;
    Ok(CheckReport::new("product", CheckKind::Asserted, &[i, j], lhs, bound).timed(start))
}

/// `reg(I_1 ∩ ... ∩ I_d) <= sum reg(I_j)` for complete intersections.
pub fn check_intersection(ideals: &[MonomialIdeal], field: FieldSpec) -> Result<CheckReport> {
    let start = Instant::now();
    let first = ideals
        .first()
        .ok_or_else(|| Error::Domain("intersection of no ideals".into()))?;
    let mut bound = 0;
    for (k, i) in ideals.iter().enumerate() {
        require_ci(&format!("I_{}", k + 1), i)?;
        bound += i.ci_regularity()?;
    }
    let lhs = reg(&intersect_many(first.nvars(), ideals)?, field)?;
    let id = format!("intersection_{}", ideals.len());
    let refs: Vec<&MonomialIdeal> = ideals.iter().collect();
    Ok(CheckReport::new(&id, CheckKind::Asserted, &refs, lhs, bound).timed(start))
}

/// `L = f_1 (J : Q_1) + ... + f_r (J : Q_r)`, with `f_i` the generators of `I`.
pub fn mixed_ideal(i: &MonomialIdeal, j: &MonomialIdeal, qs: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    if qs.len() != i.num_gens() {
        return Err(Error::LengthMismatch {
            expected: i.num_gens(),
            got: qs.len(),
        });
    }
    let mut l = MonomialIdeal::zero(i.nvars());
    for (f, q) in i.gens().iter().zip(qs) {
        let part = MonomialIdeal::principal(f.clone()).product(&j.colon(q)?)?;
        l = l.sum(&part)?;
    }
    Ok(l)
}

/// `reg(L) <= reg(I) + reg(J)` for the ideal of [`mixed_ideal`].
pub fn check_mixed(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    qs: &[MonomialIdeal],
    field: FieldSpec,
) -> Result<CheckReport> {
    let start = Instant::now();
    require_ci("I", i)?;
    require_ci("J", j)?;
    let l = mixed_ideal(i, j, qs)?;
    let lhs = reg(&l, field)?;
    let bound = i.ci_regularity()? + j.ci_regularity()?;
    let mut inputs = vec![i, j];
    inputs.extend(qs);
    Ok(CheckReport::new("mixed", CheckKind::Asserted, &inputs, lhs, bound).timed(start))
}

/// `reg(I : Q) <= reg(I)` for a complete intersection `I`.
pub fn check_colon(i: &MonomialIdeal, q: &MonomialIdeal, field: FieldSpec) -> Result<CheckReport> {
    let start = Instant::now();
    require_ci("I", i)?;
    let lhs = reg(&i.colon(q)?, field)?;
    let bound = i.ci_regularity()?;
    Ok(CheckReport::new("colon", CheckKind::Asserted, &[i, q], lhs, bound).timed(start))
}

/// `reg(I) <= deg lcm(gens) - ht(I) + 1`.
pub fn check_ht_bound(i: &MonomialIdeal, field: FieldSpec) -> Result<CheckReport> {
    let start = Instant::now();
    require_proper("I", i)?;
    let lhs = reg(i, field)?;
    let bound = i.ht_regularity_bound()?;
    Ok(CheckReport::new("ht_bound", CheckKind::Asserted, &[i], lhs, bound)
        .extra("height", i.height()? as i64)
        .timed(start))
}

/// Both d-fold bounds: with `s = sum reg(I_j) + sum ht(I_j) - d + 1`,
/// `reg(prod I_j) <= s - ht(prod I_j)` and `reg(∩ I_j) <= s - ht(∩ I_j)`.
/// The report carries the product form in `lhs`/`bound` and the
/// intersection form in `extra`.
pub fn check_d_fold_bounds(ideals: &[MonomialIdeal], field: FieldSpec) -> Result<CheckReport> {
    let start = Instant::now();
    let first = ideals
        .first()
        .ok_or_else(|| Error::Domain("d-fold bound of no ideals".into()))?;
    let n = first.nvars();
    let d = ideals.len() as i64;
    let mut s = 1 - d;
    for (k, i) in ideals.iter().enumerate() {
        require_ci(&format!("I_{}", k + 1), i)?;
        s += i.ci_regularity()? + i.height()? as i64;
    }
    let product = product_many(n, ideals)?;
    let meet = intersect_many(n, ideals)?;
    let lhs = reg(&product, field)?;
    let bound = s - product.height()? as i64;
    let meet_lhs = reg(&meet, field)?;
    let meet_bound = s - meet.height()? as i64;
    let refs: Vec<&MonomialIdeal> = ideals.iter().collect();
    let mut report = CheckReport::new("d_fold", CheckKind::Asserted, &refs, lhs, bound)
        .extra("intersection_lhs", meet_lhs)
        .extra("intersection_bound", meet_bound)
        .timed(start);
    report.holds = lhs <= bound && meet_lhs <= meet_bound;
    Ok(report)
}

/// `reg(I + J) <= max{reg I, reg J, reg(I ∩ J) - 1}`, and
/// `reg(I ∩ J) = reg(I + J) + 1` whenever `reg(I + J) > max{reg I, reg J}`
/// or `reg(I ∩ J) > max{reg I, reg J} + 1`.
pub fn check_sum_lemma(i: &MonomialIdeal, j: &MonomialIdeal, field: FieldSpec) -> Result<CheckReport> {
    let start = Instant::now();
    require_proper("I", i)?;
    require_proper("J", j)?;
    let ri = reg(i, field)?;
    let rj = reg(j, field)?;
    let rsum = reg(&i.sum(j)?, field)?;
    let rmeet = reg(&i.intersect(j)?, field)?;
    let top = ri.max(rj);
    let bound = top.max(rmeet - 1);
    let conditional = rsum > top || rmeet > top + 1;
    let mut report = CheckReport::new("sum_lemma", CheckKind::Asserted, &[i, j], rsum, bound)
        .extra("reg_i", ri)
        .extra("reg_j", rj)
        .extra("reg_intersection", rmeet)
        .timed(start);
    if conditional {
        report.holds = report.holds && rmeet == rsum + 1;
        report = report.extra("conditional", 1);
    }
    Ok(report)
}

/// `(f_i (J : Q_i)) : f_r = f_i (J : f_r Q_i)` for every `i < r`. The report
/// counts mismatching indices in `lhs` against a bound of 0.
pub fn check_colon_identity(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    qs: &[MonomialIdeal],
) -> Result<CheckReport> {
    let start = Instant::now();
    require_ci("I", i)?;
    let r = i.num_gens();
    if qs.len() != r {
        return Err(Error::LengthMismatch {
            expected: r,
            got: qs.len(),
        });
    }
    let fr = MonomialIdeal::principal(i.gens()[r - 1].clone());
    let mut mismatches = 0;
    for (f, q) in i.gens()[..r - 1].iter().zip(qs) {
        let fi = MonomialIdeal::principal(f.clone());
        let lhs = fi.product(&j.colon(q)?)?.colon(&fr)?;
        let rhs = fi.product(&j.colon(&fr.product(q)?)?)?;
        if lhs != rhs {
            mismatches += 1;
        }
    }
    let mut inputs = vec![i, j];
    inputs.extend(qs);
    Ok(CheckReport::new("colon_identity", CheckKind::Asserted, &inputs, mismatches, 0).timed(start))
}

/// Records `reg(IJ : Q)` against `reg(I) + reg(J)`; never asserted.
pub fn explore_product_colon(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    q: &MonomialIdeal,
    field: FieldSpec,
) -> Result<CheckReport> {
    let start = Instant::now();
    require_ci("I", i)?;
    require_ci("J", j)?;
    let lhs = reg(&i.product(j)?.colon(q)?, field)?;
    let bound = i.ci_regularity()? + j.ci_regularity()?;
    Ok(CheckReport::new("product_colon", CheckKind::Exploratory, &[i, j, q], lhs, bound).timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    const Q: FieldSpec = FieldSpec::Rational;

    fn ideal(n: usize, exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, exps).unwrap()
    }

    #[test]
    fn product_examples() {
        let r = check_product(&ideal(2, &[&[2, 0]]), &ideal(2, &[&[0, 3]]), Q).unwrap();
        assert_eq!((r.lhs, r.bound, r.holds), (5, 5, true));
        let m = MonomialIdeal::maximal(2);
        let r = check_product(&m, &m, Q).unwrap();
        assert_eq!((r.lhs, r.bound), (2, 2));
        let not_ci = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(check_product(&not_ci, &m, Q).is_err());
    }

    #[test]
    fn intersection_examples() {
        let vars: Vec<MonomialIdeal> =
            (0..3).map(|k| MonomialIdeal::principal(Monomial::var(3, k))).collect();
        let r = check_intersection(&vars, Q).unwrap();
        assert_eq!((r.lhs, r.bound), (3, 3));
        assert_eq!(r.check_id, "intersection_3");
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let r = check_intersection(std::slice::from_ref(&i), Q).unwrap();
        assert_eq!(r.lhs, r.bound);
    }

    #[test]
    fn mixed_reductions() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 0]]);
        let j = ideal(3, &[&[1, 0, 0], &[0, 0, 2]]);
        let units = vec![MonomialIdeal::unit(3); 2];
        assert_eq!(mixed_ideal(&i, &j, &units).unwrap(), i.product(&j).unwrap());
        let principals: Vec<MonomialIdeal> =
            i.gens().iter().map(|f| MonomialIdeal::principal(f.clone())).collect();
        assert_eq!(mixed_ideal(&i, &j, &principals).unwrap(), i.intersect(&j).unwrap());
        assert!(check_mixed(&i, &j, &principals, Q).unwrap().holds);
        assert!(matches!(
            check_mixed(&i, &j, &units[..1], Q),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let r = check_colon(&i, &MonomialIdeal::unit(2), Q).unwrap();
        assert_eq!((r.lhs, r.bound), (4, 4));
        let r = check_colon(&i, &ideal(2, &[&[1, 0]]), Q).unwrap();
        assert_eq!((r.lhs, r.bound), (3, 4));
        // Q inside I: the colon is the unit ideal.
        let r = check_colon(&i, &ideal(2, &[&[2, 0]]).product(&ideal(2, &[&[0, 3]])).unwrap(), Q)
            .unwrap();
        assert_eq!(r.lhs, 0);
    }

    #[test]
    fn ht_bound_examples() {
        let ci = ideal(3, &[&[2, 0, 0], &[0, 3, 1]]);
        let r = check_ht_bound(&ci, Q).unwrap();
        assert_eq!(r.lhs, r.bound);
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let r = check_ht_bound(&tri, Q).unwrap();
        assert_eq!((r.lhs, r.bound), (2, 2));
        assert!(check_ht_bound(&MonomialIdeal::unit(2), Q).is_err());
    }

    #[test]
    fn d_fold_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0]]);
        let r = check_d_fold_bounds(std::slice::from_ref(&i), Q).unwrap();
        assert_eq!(r.lhs, r.bound);
        // Coprime supports: the slack is ht(I) + ht(J) - ht(IJ) - 1.
        let i = ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let j = ideal(4, &[&[0, 0, 2, 0], &[0, 0, 0, 1]]);
        let r = check_d_fold_bounds(&[i.clone(), j.clone()], Q).unwrap();
        let ht_ij = i.product(&j).unwrap().height().unwrap() as i64;
        assert_eq!(r.bound - r.lhs, 2 + 2 - ht_ij - 1);
        assert!(r.holds);
    }

    #[test]
    fn sum_lemma_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        let r = check_sum_lemma(&x, &y, Q).unwrap();
        assert_eq!((r.lhs, r.bound, r.holds), (1, 1, true));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let r = check_sum_lemma(&i, &i, Q).unwrap();
        assert_eq!(r.lhs, 2);
        assert_eq!(r.extra["reg_intersection"], 2);
    }

    #[test]
    fn colon_identity_examples() {
        let i = ideal(2, &[&[1, 0], &[0, 2]]);
        let j = ideal(2, &[&[0, 1]]);
        let r = check_colon_identity(&i, &j, &[MonomialIdeal::unit(2), MonomialIdeal::unit(2)])
            .unwrap();
        assert!(r.holds);
        let r = check_colon_identity(&i, &j, &[j.clone(), j.clone()]).unwrap();
        assert_eq!(r.lhs, 0);
    }

    #[test]
    fn explorer_never_fails() {
        let i = ideal(2, &[&[2, 0]]);
        let j = ideal(2, &[&[0, 1]]);
        let r = explore_product_colon(&i, &j, &MonomialIdeal::unit(2), Q).unwrap();
        assert!(r.holds);
        assert!(!r.is_failure());
        let r = explore_product_colon(&i, &j, &ideal(2, &[&[1, 0]]), Q).unwrap();
        assert_eq!(r.kind, CheckKind::Exploratory);
        let r = explore_product_colon(&i, &j, &i.product(&j).unwrap(), Q).unwrap();
        assert_eq!(r.lhs, 0);
    }
}
