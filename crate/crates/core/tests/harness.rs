use cmreg_core::harness::{run_suite, run_trial, trial_seed, CheckKind, SuiteConfig, CHECK_IDS};

fn small_config(seed: u64) -> SuiteConfig {
    let mut config = SuiteConfig::standard(seed);
    for v in config.trials.values_mut() {
        *v = 8;
    }
    config
}

#[test]
fn reports_replay_from_their_seed() {
    let config = small_config(11);
    let report = run_suite(&config).unwrap();
    for r in report.reports.iter().step_by(7) {
        assert_eq!(r.seed, trial_seed(11, &r.check_id, r.trial));
        let again = run_trial(&r.check_id, r.seed, &config.limits, config.field).unwrap();
        assert_eq!((again.lhs, again.bound, again.holds), (r.lhs, r.bound, r.holds));
    }
}

#[test]
fn json_is_identical_apart_from_timing() {
    let config = small_config(3);
    let a = run_suite(&config).unwrap().without_timing();
    let b = run_suite(&config).unwrap().without_timing();
    assert_eq!(a.to_json().to_string(), b.to_json().to_string());
    assert_eq!(a.to_csv(), b.to_csv());
}

#[test]
fn report_order_and_kinds() {
    let report = run_suite(&small_config(5)).unwrap();
    let ids: Vec<&str> = report.summary.iter().map(|s| s.check_id.as_str()).collect();
    assert_eq!(ids, CHECK_IDS.to_vec());
    for r in &report.reports {
        let exploratory = r.check_id == "product_colon";
        assert_eq!(r.kind == CheckKind::Exploratory, exploratory);
        if !exploratory {
            assert!(!r.notable);
        }
    }
    let trials: Vec<usize> = report
        .reports
        .iter()
        .filter(|r| r.check_id == "colon")
        .map(|r| r.trial)
        .collect();
    assert_eq!(trials, (0..8).collect::<Vec<_>>());
}

#[test]
fn config_round_trips_through_json() {
    let config = SuiteConfig::standard(99);
    let text = serde_json::to_string(&config).unwrap();
    assert_eq!(SuiteConfig::from_json(&text).unwrap(), config);
}

#[test]
fn different_seeds_draw_different_instances() {
    let a = run_suite(&small_config(1)).unwrap();
    let b = run_suite(&small_config(2)).unwrap();
    let inputs = |r: &cmreg_core::harness::SuiteReport| -> Vec<Vec<String>> {
        r.reports.iter().map(|x| x.inputs.clone()).collect()
    };
    assert_ne!(inputs(&a), inputs(&b));
}
