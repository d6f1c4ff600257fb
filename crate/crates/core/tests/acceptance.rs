//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cmreg_core::harness::random::{random_ci, random_linear_ideal, random_monomial_ideal};
use cmreg_core::harness::seed::rng_from_seed;
use cmreg_core::harness::{family, run_suite, SuiteConfig};
use cmreg_core::homology::{betti_multigraded, regularity};
use cmreg_core::ideal::PolyIdeal;
use cmreg_core::monomial::{intersect_many, product_many};
use cmreg_core::resolution::free_resolution;
use cmreg_core::taylor::taylor_betti;
use cmreg_core::{default_var_names, FieldSpec, PolyRing, Rationals, TermOrder};
use rand::Rng;

const Q: FieldSpec = FieldSpec::Rational;
const PAIRS: [(u32, u32); 4] = [(2, 3), (3, 2), (2, 4), (2, 2)];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family_values() -> Outcome {
    let expected = [
        // (m, n, reg(I∩(g)), reg(K), reg(IJ), reg(I), reg(J), reg((g)), bounds)
        (2, 3, 9, 8, 11, 5, 5, 3, (8, 10)),
        (3, 2, 8, 7, 9, 3, 5, 4, (7, 8)),
        (2, 4, 12, 11, 15, 7, 6, 3, (10, 13)),
        (2, 2, 6, 5, 7, 3, 4, 3, (6, 7)),
    ];
    let mut slowest = Duration::ZERO;
    for (m, n, meet, k, ij, i, j, g, (b_meet, b_ij)) in expected {
        let start = Instant::now();
        let r = family(m, n, Q).map_err(|e| format!("({m},{n}): {e}"))?;
        slowest = slowest.max(start.elapsed());
        let c = &r.computed;
        let got = (c.reg_i_cap_g, c.reg_k, c.reg_ij, c.reg_i, c.reg_j, c.reg_g);
        ensure(got == (meet, k, ij, i, j, g), || format!("({m},{n}): got {got:?}"))?;
        ensure((r.bound_i_cap_g, r.bound_ij) == (b_meet, b_ij), || {
            format!("({m},{n}): bounds {} {}", r.bound_i_cap_g, r.bound_ij)
        })?;
        let violation = (m, n) != (2, 2);
        ensure(r.violation_i_cap_g == violation && r.violation_ij == violation, || {
            format!("({m},{n}): violation flags {} {}", r.violation_i_cap_g, r.violation_ij)
        })?;
        ensure(r.matches_predictions(), || format!("({m},{n}): {}", r.render_text()))?;
        ensure(start.elapsed() < Duration::from_secs(300), || format!("({m},{n}) too slow"))?;
    }
    Ok(format!("4 pairs, slowest {:.2}s", slowest.as_secs_f64()))
}

fn saturation_identity() -> Outcome {
    for (m, n) in PAIRS {
        let r = family(m, n, Q).map_err(|e| e.to_string())?;
        ensure(r.saturation_identity, || format!("({m},{n}) differs"))?;
    }
    Ok("4 pairs".into())
}

fn inequality_suites() -> Outcome {
    let config = SuiteConfig::standard(2024);
    let start = Instant::now();
    let a = run_suite(&config).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(a.success(), || a.render_text())?;
    for (id, want) in [
        ("product", 200),
        ("intersection_2", 200),
        ("intersection_3", 200),
        ("mixed", 200),
        ("ht_bound", 500),
        ("colon", 200),
        ("sum_lemma", 200),
        ("colon_identity", 100),
        ("d_fold", 100),
    ] {
        let got = a.summary.iter().find(|s| s.check_id == id).map_or(0, |s| s.trials);
        ensure(got == want, || format!("{id}: {got} trials, want {want}"))?;
    }
    let b = run_suite(&config).map_err(|e| e.to_string())?;
    ensure(a.without_timing() == b.without_timing(), || "reruns differ".into())?;
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    let notable: usize = a.summary.iter().map(|s| s.notable).sum();
    Ok(format!(
        "{} trials in {:.1}s, explorer notable {notable}",
        a.reports.len(),
        elapsed.as_secs_f64()
    ))
}

fn ci_closed_form() -> Outcome {
    let mut rng = rng_from_seed(4);
    for k in 0..100 {
        let n = rng.gen_range(1..=6);
        let r = rng.gen_range(1..=n.min(4));
        let i = random_ci(&mut rng, n, r, 4).map_err(|e| e.to_string())?;
        let deg: i64 = i.gens().iter().map(|g| g.degree() as i64).sum();
        let reg = regularity(&i, Q).map_err(|e| e.to_string())?;
        ensure(reg == deg - r as i64 + 1, || format!("instance {k}: reg {reg}, sum deg {deg}, r {r}"))?;
    }
    Ok("100 instances".into())
}

fn oracle_equivalence() -> Outcome {
    let mut rng = rng_from_seed(5);
    for k in 0..100 {
        let n = rng.gen_range(1..=5);
        let i = random_monomial_ideal(&mut rng, n, 5, 4);
        let h = betti_multigraded(&i, Q).map_err(|e| e.to_string())?;
        let t = taylor_betti(&i, Q).map_err(|e| e.to_string())?;
        ensure(h.multigraded() == t.multigraded(), || format!("taylor instance {k}"))?;
    }
    for k in 0..50 {
        let n = rng.gen_range(1..=4);
        let i = random_monomial_ideal(&mut rng, n, 4, 3);
        let ring = PolyRing::new(default_var_names(n), TermOrder::DegRevLex, Rationals);
        let p = PolyIdeal::from_monomial_ideal(&ring, &i).map_err(|e| e.to_string())?;
        let res = free_resolution(&p, n + 1).map_err(|e| e.to_string())?.minimize();
        let h = betti_multigraded(&i, Q).map_err(|e| e.to_string())?;
        ensure(res.betti_table().graded_eq(&h), || format!("resolution instance {k}"))?;
        ensure(res.betti_table().regularity() == h.regularity(), || format!("reg instance {k}"))?;
    }
    Ok("100 Taylor, 50 resolution".into())
}

fn linear_forms() -> Outcome {
    let mut rng = rng_from_seed(6);
    let n = 4;
    for k in 0..60 {
        let d = 1 + k % 3;
        let ideals: Vec<_> = (0..d).map(|_| random_linear_ideal(&mut rng, n)).collect();
        let p = product_many(n, &ideals).map_err(|e| e.to_string())?;
        let reg_p = regularity(&p, Q).map_err(|e| e.to_string())?;
        ensure(reg_p == d as i64, || format!("product {k}: reg {reg_p}, d {d}"))?;
        let m = intersect_many(n, &ideals).map_err(|e| e.to_string())?;
        let reg_m = regularity(&m, Q).map_err(|e| e.to_string())?;
        ensure(reg_m <= d as i64, || format!("intersection {k}: reg {reg_m}, d {d}"))?;
    }
    Ok("60 products and intersections".into())
}

fn resolution_hygiene() -> Outcome {
    let mut rng = rng_from_seed(7);
    for k in 0..50 {
        let n = rng.gen_range(2..=4);
        let ring = PolyRing::new(default_var_names(n), TermOrder::DegRevLex, Rationals);
        let ideal = if k % 2 == 0 {
            let i = random_monomial_ideal(&mut rng, n, 4, 3);
            PolyIdeal::from_monomial_ideal(&ring, &i).map_err(|e| e.to_string())?
        } else {
            // Homogeneous binomials a - b with deg a = deg b.
            let count = rng.gen_range(1..=3);
            let gens = (0..count)
                .map(|_| {
                    let d = rng.gen_range(1..=3);
                    let a = cmreg_core::harness::random::random_monomial(&mut rng, n, d);
                    let b = cmreg_core::harness::random::random_monomial(&mut rng, n, d);
                    let c = rng.gen_range(1..=3);
                    ring.from_int_terms(&[(1, a.exps().to_vec()), (-c, b.exps().to_vec())])
                })
                .collect();
            PolyIdeal::new(&ring, gens)
        };
        if ideal.is_zero() {
            continue;
        }
        let label = ideal.render();
        let full = free_resolution(&ideal, n + 1).map_err(|e| format!("{label}: {e}"))?;
        full.verify().map_err(|e| format!("{label}: {e}"))?;
        let min = full.minimize();
        min.verify().map_err(|e| format!("{label} minimized: {e}"))?;
        ensure(min.hilbert_numerator() == full.hilbert_numerator(), || {
            format!("{label}: hilbert numerator changed")
        })?;
    }
    Ok("50 instances".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("family golden values", family_values),
        ("saturation identity", saturation_identity),
        ("inequality suites", inequality_suites),
        ("complete intersection closed form", ci_closed_form),
        ("oracle equivalence", oracle_equivalence),
        ("linear forms", linear_forms),
        ("resolution hygiene", resolution_hygiene),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("criterion {} {name}: PASS ({note}; {secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
