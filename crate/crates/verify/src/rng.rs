//! The named deterministic generator used for all random verification data.

use exact_arith::{rat, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Name recorded in output headers so runs are reproducible.
pub const GENERATOR_NAME: &str = "chacha8(p,q uniform in [1,20])";

/// A fresh stream of the named generator.
pub fn generator(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One random positive rational p/q with p, q uniform on [1, 20].
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p = rng.gen_range(1..=20);
    let q = rng.gen_range(1..=20);
    rat(p, q)
}

/// `count` random rationals from the stream seeded with `seed`.
pub fn random_rationals(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = generator(seed);
    (0..count).map(|_| random_rational(&mut rng)).collect()
}
