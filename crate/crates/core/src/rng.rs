//! Seeded randomness. Every random choice in the crate flows from an explicit
//! `u64` seed through these helpers, so identical seeds give identical output.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{Field, Scalar};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent child seed for stream `tag` (splitmix64 finalizer).
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform element of `GF(p)`, or an integer in `[-bound, bound]` over `Q`.
pub fn random_scalar(field: Field, rng: &mut SeededRng, bound: i64) -> Scalar {
    match field {
        Field::Prime(m) => Scalar::residue(field, rng.gen_range(0..m.get())),
        Field::Rational => Scalar::from_i64(field, rng.gen_range(-bound..=bound)),
    }
}

/// As [`random_scalar`] but never zero.
pub fn random_nonzero(field: Field, rng: &mut SeededRng, bound: i64) -> Scalar {
    loop {
        let s = random_scalar(field, rng, bound);
        if !s.is_zero() {
            return s;
        }
    }
}
