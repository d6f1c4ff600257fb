//! Seeded generators of monomial ideals.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

use super::seed::rng_from_seed;

/// Size limits for random instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SizeLimits {
    /// Variables in the ambient ring.
    pub nvars: usize,
    /// Largest exponent in a complete intersection, largest generator
    /// degree elsewhere.
    pub max_deg: u32,
    /// Generators of a random complete intersection.
    pub max_ci_gens: usize,
    /// Generators of an arbitrary random ideal.
    pub max_gens: usize,
    /// Generators of a random colon ideal `Q`.
    pub max_q_gens: usize,
}

impl Default for SizeLimits {
    fn default() -> Self {
        SizeLimits {
            nvars: 6,
            max_deg: 4,
            max_ci_gens: 3,
            max_gens: 4,
            max_q_gens: 3,
        }
    }
}

impl SizeLimits {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(1..=8).contains(&self.nvars) {
            return bad(format!("nvars must be in 1..=8, got {}", self.nvars));
        }
        if !(1..=8).contains(&self.max_deg) {
            return bad(format!("max_deg must be in 1..=8, got {}", self.max_deg));
        }
        if self.max_ci_gens == 0 || self.max_ci_gens > self.nvars.min(4) {
            return bad(format!(
                "max_ci_gens must be in 1..={}, got {}",
                self.nvars.min(4),
                self.max_ci_gens
            ));
        }
        if !(1..=6).contains(&self.max_gens) {
            return bad(format!("max_gens must be in 1..=6, got {}", self.max_gens));
        }
        if !(1..=4).contains(&self.max_q_gens) {
            return bad(format!("max_q_gens must be in 1..=4, got {}", self.max_q_gens));
        }
        Ok(())
    }
}

/// A monomial complete intersection with `r` generators in `n` variables,
/// exponents in `[1, max_deg]`.
pub fn random_monomial_ci(n: usize, r: usize, max_deg: u32, seed: u64) -> Result<MonomialIdeal> {
    random_ci(&mut rng_from_seed(seed), n, r, max_deg)
}

pub fn random_ci<R: Rng>(rng: &mut R, n: usize, r: usize, max_deg: u32) -> Result<MonomialIdeal> {
    if r == 0 || r > n {
        return Err(Error::Domain(format!(
            "a complete intersection in {n} variables has 1..={n} generators, got {r}"
        )));
    }
    if max_deg == 0 {
        return Err(Error::Domain("max_deg must be positive".into()));
    }
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let used = rng.gen_range(r..=n);
    // One variable per block, then the rest of the used ones at random;
    // supports stay small so degrees stay moderate.
    let mut exps = vec![vec![0u32; n]; r];
    for (k, &v) in vars[..used].iter().enumerate() {
        let block = if k < r { k } else { rng.gen_range(0..r) };
        exps[block][v] = rng.gen_range(1..=max_deg);
    }
    MonomialIdeal::new(n, exps.into_iter().map(Monomial::new).collect())
}

/// A random monomial of the given degree.
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A proper nonzero monomial ideal with at most `max_gens` generators of
/// degree in `[1, max_deg]`.
pub fn random_monomial_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    max_gens: usize,
    max_deg: u32,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg.max(1));
            random_monomial(rng, n, d)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("monomials share the ambient ring")
}

/// A colon ideal: the unit ideal one time in eight, otherwise a random
/// monomial ideal with at most `max_gens` generators.
pub fn random_q<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    if rng.gen_ratio(1, 8) {
        MonomialIdeal::unit(n)
    } else {
        random_monomial_ideal(rng, n, max_gens, max_deg)
    }
}

/// An ideal generated by a nonempty random set of variables.
pub fn random_linear_ideal<R: Rng>(rng: &mut R, n: usize) -> MonomialIdeal {
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let k = rng.gen_range(1..=n);
    MonomialIdeal::new(n, vars[..k].iter().map(|&v| Monomial::var(n, v)).collect())
        .expect("variables share the ambient ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ci_shape() {
        for seed in 0..50 {
            let i = random_monomial_ci(4, 3, 3, seed).unwrap();
            assert_eq!(i.num_gens(), 3);
            assert!(i.is_complete_intersection());
            assert!(i.gens().iter().all(|g| g.exps().iter().all(|&e| e <= 3)));
        }
        let i = random_monomial_ci(2, 2, 5, 11).unwrap();
        assert!(i.gens().iter().all(|g| g.support().len() == 1));
    }

    #[test]
    fn ci_deterministic() {
        assert_eq!(
            random_monomial_ci(5, 2, 4, 99).unwrap(),
            random_monomial_ci(5, 2, 4, 99).unwrap()
        );
    }

    #[test]
    fn ci_rejects_too_many_generators() {
        assert!(random_monomial_ci(2, 3, 2, 0).is_err());
        assert!(random_monomial_ci(2, 0, 2, 0).is_err());
    }

    #[test]
    fn limits_validation() {
        assert!(SizeLimits::default().validate().is_ok());
        let bad = SizeLimits {
            max_ci_gens: 7,
            ..SizeLimits::default()
        };
        assert!(bad.validate().is_err());
    }
}
