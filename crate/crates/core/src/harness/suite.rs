//! Seeded suites of checks, run in parallel and reported in trial order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::MonomialIdeal;

use super::checks::*;
use super::random::*;
use super::seed::{rng_from_seed, trial_seed};

/// Check ids accepted by [`run_suite`], in reporting order.
pub const CHECK_IDS: [&str; 10] = [
    "product",
    "intersection_2",
    "intersection_3",
    "mixed",
    "colon",
    "ht_bound",
    "sum_lemma",
    "colon_identity",
    "d_fold",
    "product_colon",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub master_seed: u64,
    pub field: FieldSpec,
    pub limits: SizeLimits,
    /// Trials per check id; ids left out are skipped.
    pub trials: BTreeMap<String, usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            master_seed: 0,
            field: FieldSpec::Rational,
            limits: SizeLimits::default(),
            trials: BTreeMap::new(),
        }
    }
}

impl SuiteConfig {
    /// Every check with its standard trial count.
    pub fn standard(master_seed: u64) -> Self {
        let counts = [
            ("product", 200),
            ("intersection_2", 200),
            ("intersection_3", 200),
            ("mixed", 200),
            ("colon", 200),
            ("ht_bound", 500),
            ("sum_lemma", 200),
            ("colon_identity", 100),
            ("d_fold", 100),
            ("product_colon", 200),
        ];
        SuiteConfig {
            master_seed,
            trials: counts.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            ..SuiteConfig::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: SuiteConfig =
            serde_json::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        self.limits.validate()?;
        if let FieldSpec::Prime(p) = self.field {
            FieldSpec::prime(p)?;
        }
        for id in self.trials.keys() {
            if !CHECK_IDS.contains(&id.as_str()) {
                return Err(Error::InvalidConfig(format!(
                    "unknown check id {id:?}; expected one of {}",
                    CHECK_IDS.join(", ")
                )));
            }
        }
        Ok(())
    }
}

/// Trial counts of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check_id: String,
    pub kind: CheckKind,
    pub trials: usize,
    pub failures: usize,
    pub notable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub master_seed: u64,
    pub field: FieldSpec,
    pub summary: Vec<CheckSummary>,
    pub reports: Vec<CheckReport>,
}

impl SuiteReport {
    /// True iff no asserted check failed.
    pub fn success(&self) -> bool {
        self.reports.iter().all(|r| !r.is_failure())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| r.is_failure())
    }

    /// The report with every timing field zeroed.
    pub fn without_timing(&self) -> SuiteReport {
        let mut out = self.clone();
        for r in &mut out.reports {
            r.elapsed_ms = 0.0;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// One row per trial: `check_id,trial,seed,lhs,bound,holds,notable`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check_id,trial,seed,lhs,bound,holds,notable\n");
        for r in &self.reports {
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.check_id, r.trial, r.seed, r.lhs, r.bound, r.holds, r.notable
            )
            .unwrap();
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite seed={} field={}\n", self.master_seed, self.field);
        for s in &self.summary {
            let kind = match s.kind {
                CheckKind::Asserted => "asserted",
                CheckKind::Exploratory => "exploratory",
            };
            writeln!(
                out,
                "  {:<16} {:<11} trials {:>4}  failures {:>3}  notable {:>3}",
                s.check_id, kind, s.trials, s.failures, s.notable
            )
            .unwrap();
        }
        for r in self.failures() {
            writeln!(
                out,
                "  FAIL {} trial {} seed {}: {} > {} on {}",
                r.check_id,
                r.trial,
                r.seed,
                r.lhs,
                r.bound,
                r.inputs.join(", ")
            )
            .unwrap();
        }
        writeln!(out, "result: {}", if self.success() { "ok" } else { "FAILED" }).unwrap();
        out
    }
}

fn ci(rng: &mut ChaCha8Rng, limits: &SizeLimits, max_r: usize) -> Result<MonomialIdeal> {
    let r = rng.gen_range(1..=max_r.min(limits.nvars));
    random_ci(rng, limits.nvars, r, limits.max_deg)
}

fn qs(rng: &mut ChaCha8Rng, limits: &SizeLimits, count: usize, max_gens: usize) -> Vec<MonomialIdeal> {
    (0..count)
        .map(|_| random_q(rng, limits.nvars, max_gens, limits.max_deg))
        .collect()
}

/// Draw the inputs of one trial of `check_id` from `seed` and run it.
pub fn run_trial(check_id: &str, seed: u64, limits: &SizeLimits, field: FieldSpec) -> Result<CheckReport> {
    let rng = &mut rng_from_seed(seed);
    let l = limits;
    let n = l.nvars;
    // Sizes keep every lcm lattice within the homology engine's guard.
    let small = l.max_ci_gens.min(2);
    match check_id {
        "product" => check_product(&ci(rng, l, l.max_ci_gens)?, &ci(rng, l, l.max_ci_gens)?, field),
        "intersection_2" => {
            let ideals = [ci(rng, l, l.max_ci_gens)?, ci(rng, l, l.max_ci_gens)?];
            check_intersection(&ideals, field)
        }
        "intersection_3" => {
            let ideals = [ci(rng, l, small)?, ci(rng, l, small)?, ci(rng, l, small)?];
            check_intersection(&ideals, field)
        }
        "mixed" => {
            let i = ci(rng, l, small)?;
            let j = ci(rng, l, l.max_ci_gens)?;
            let q = qs(rng, l, i.num_gens(), l.max_q_gens.min(2));
            check_mixed(&i, &j, &q, field)
        }
        "colon" => {
            let i = ci(rng, l, l.max_ci_gens)?;
            let q = random_q(rng, n, l.max_q_gens, l.max_deg);
            check_colon(&i, &q, field)
        }
        "ht_bound" => check_ht_bound(&random_monomial_ideal(rng, n, l.max_gens, l.max_deg), field),
        "sum_lemma" => {
            let i = random_monomial_ideal(rng, n, l.max_gens, l.max_deg);
            let j = random_monomial_ideal(rng, n, l.max_gens, l.max_deg);
            check_sum_lemma(&i, &j, field)
        }
        "colon_identity" => {
            let i = ci(rng, l, l.max_ci_gens)?;
            let j = random_monomial_ideal(rng, n, l.max_gens, l.max_deg);
            let q = qs(rng, l, i.num_gens(), l.max_q_gens);
            check_colon_identity(&i, &j, &q)
        }
        "d_fold" => {
            let d = rng.gen_range(1..=3);
            let max_r = if d == 3 { small } else { l.max_ci_gens };
            let ideals = (0..d).map(|_| ci(rng, l, max_r)).collect::<Result<Vec<_>>>()?;
            check_d_fold_bounds(&ideals, field)
        }
        "product_colon" => {
            let i = ci(rng, l, small)?;
            let j = ci(rng, l, l.max_ci_gens)?;
            let q = random_q(rng, n, l.max_q_gens.min(2), l.max_deg);
            explore_product_colon(&i, &j, &q, field)
        }
        other => Err(Error::InvalidConfig(format!("unknown check id {other:?}"))),
    }
}

/// Run every configured check. Trials run in parallel; the report lists them
/// by check (in [`CHECK_IDS`] order) and trial index.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let mut tasks = Vec::new();
    for id in CHECK_IDS {
        if let Some(&count) = config.trials.get(id) {
            for trial in 0..count {
                tasks.push((id, trial, trial_seed(config.master_seed, id, trial)));
            }
        }
    }
    let reports: Vec<CheckReport> = tasks
        .par_iter()
        .map(|&(id, trial, seed)| {
            let mut report = run_trial(id, seed, &config.limits, config.field).map_err(|e| {
                Error::Internal(format!("{id} trial {trial} (seed {seed}): {e}"))
            })?;
            report.check_id = id.to_string();
            report.trial = trial;
            report.seed = seed;
            Ok(report)
        })
        .collect::<Result<_>>()?;

    let mut summary: Vec<CheckSummary> = Vec::new();
    for r in &reports {
        if summary.last().is_none_or(|s| s.check_id != r.check_id) {
            summary.push(CheckSummary {
                check_id: r.check_id.clone(),
                kind: r.kind,
                trials: 0,
                failures: 0,
                notable: 0,
            });
        }
        let s = summary.last_mut().unwrap();
        s.trials += 1;
        s.failures += r.is_failure() as usize;
        s.notable += r.notable as usize;
    }
    Ok(SuiteReport {
        master_seed: config.master_seed,
        field: config.field,
        summary,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config() {
        let config = SuiteConfig::from_json("{}").unwrap();
        let report = run_suite(&config).unwrap();
        assert!(report.reports.is_empty());
        assert!(report.success());
        assert_eq!(report.to_csv(), "check_id,trial,seed,lhs,bound,holds,notable\n");
    }

    #[test]
    fn config_validation() {
        assert!(SuiteConfig::from_json(r#"{"trials": {"nope": 3}}"#).is_err());
        assert!(SuiteConfig::from_json(r#"{"field": "p:4"}"#).is_err());
        assert!(SuiteConfig::from_json(r#"{"limits": {"nvars": 0}}"#).is_err());
        assert!(SuiteConfig::from_json(r#"{"seed": 1}"#).is_err());
        let c = SuiteConfig::from_json(r#"{"master_seed": 5, "trials": {"product": 2}}"#).unwrap();
        assert_eq!(c.limits, SizeLimits::default());
    }

    #[test]
    fn small_suite_is_deterministic() {
        let mut config = SuiteConfig::default();
        config.master_seed = 42;
        for id in CHECK_IDS {
            config.trials.insert(id.to_string(), 3);
        }
        let a = run_suite(&config).unwrap();
        let b = run_suite(&config).unwrap();
        assert!(a.success(), "{}", a.render_text());
        assert_eq!(a.reports.len(), 30);
        assert_eq!(a.without_timing(), b.without_timing());
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.summary.len(), CHECK_IDS.len());
    }
}
