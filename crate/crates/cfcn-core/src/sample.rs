//! Seeded sampling helpers.
//!
//! All randomness in this crate flows through a ChaCha8 stream seeded from
//! a caller-supplied `u64`, so every routine is a pure function of its
//! inputs. The draws below avoid modulo bias (rejection sampling) and use
//! the full 53-bit mantissa for unit-interval floats.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for restart number `attempt` of a retry chain, with `attempt == 0`
/// giving back the base seed unchanged.
pub(crate) fn restart_seed(seed: u64, attempt: u32) -> u64 {
    seed.wrapping_add(0x9E37_79B9_7F4A_7C15_u64.wrapping_mul(attempt as u64))
}

/// Uniform draw from `0..bound` without modulo bias.
pub(crate) fn uniform_u32(rng: &mut ChaCha8Rng, bound: u32) -> u32 {
    debug_assert!(bound > 0);
    let b = bound as u64;
    // 2^64 mod b; draws at or above 2^64 - tail would skew the low residues.
    let tail = 0u64.wrapping_sub(b) % b;
    loop {
        let x = rng.next_u64();
        if tail == 0 || x < 0u64.wrapping_sub(tail) {
            return (x % b) as u32;
        }
    }
}

/// Uniform f64 in `[0, 1)` from the top 53 bits of one draw.
pub(crate) fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
