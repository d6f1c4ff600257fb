//! Seeded randomized checks of regularity inequalities on monomial ideals,
//! and the binomial family verifier.

pub mod checks;
pub mod family;
pub mod random;
pub mod seed;
pub mod suite;

pub use checks::{
    check_colon, check_colon_identity, check_d_fold_bounds, check_ht_bound, check_intersection,
    check_mixed, check_product, check_sum_lemma, explore_product_colon, mixed_ideal, CheckKind,
    CheckReport,
};
pub use family::{family, FamilyPrediction, FamilyReport};
pub use random::{random_monomial_ci, SizeLimits};
pub use seed::trial_seed;
pub use suite::{run_suite, run_trial, CheckSummary, SuiteConfig, SuiteReport, CHECK_IDS};
