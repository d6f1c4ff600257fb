//! Per-trial seed derivation.
//!
//! `trial_seed(master, id, trial) = mix(mix(master ^ fnv1a(id)) ^ trial)`,
//! where `mix` is the SplitMix64 finalizer and `fnv1a` the 64-bit FNV-1a hash
//! of the check id's bytes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

pub fn trial_seed(master: u64, check_id: &str, trial: usize) -> u64 {
    splitmix64(splitmix64(master ^ fnv1a(check_id)) ^ trial as u64)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        // Reference outputs of SplitMix64 and FNV-1a.
        assert_eq!(splitmix64(0), 0xe220_a839_7b1d_cdaf);
        assert_eq!(fnv1a(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a("a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn seeds_separate_checks_and_trials() {
        let a = trial_seed(7, "product", 0);
        assert_eq!(a, trial_seed(7, "product", 0));
        assert_ne!(a, trial_seed(7, "product", 1));
        assert_ne!(a, trial_seed(7, "colon", 0));
        assert_ne!(a, trial_seed(8, "product", 0));
    }
}
