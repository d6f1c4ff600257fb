//! Benchmark inputs shared by the criterion targets.

use cmreg_core::harness::random::random_monomial_ideal;
use cmreg_core::harness::seed::rng_from_seed;
use cmreg_core::MonomialIdeal;

/// `count` random monomial ideals drawn from a fixed seed.
pub fn sample_ideals(count: usize, n: usize, max_gens: usize, max_deg: u32) -> Vec<MonomialIdeal> {
    let mut rng = rng_from_seed(0xbe9c);
    (0..count)
        .map(|_| random_monomial_ideal(&mut rng, n, max_gens, max_deg))
        .collect()
}
