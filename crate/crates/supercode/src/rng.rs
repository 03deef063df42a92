//! Seed derivation for reproducible experiments.
//!
//! All randomness in the crate flows from a single 64-bit master seed.
//! Independent streams are derived as `stream(seed, index)`: the pair is
//! expanded through SplitMix64 into a 32-byte ChaCha20 key, so any stream can
//! be regenerated in isolation (columns of an ensemble draw from stream
//! `column_index`, Monte-Carlo trials from stream `trial_index`, and so on).
//! Draws inside a stream always happen in position order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mix a master seed with a stream index into a single u64.
pub fn mix(seed: u64, index: u64) -> u64 {
    let mut st = seed ^ index.wrapping_mul(0xA24B_AED4_963E_E407);
    splitmix64(&mut st)
}

/// Deterministic ChaCha20 stream for (seed, index).
pub fn stream(seed: u64, index: u64) -> ChaCha20Rng {
    let mut st = seed ^ index.wrapping_mul(0xA24B_AED4_963E_E407);
    let mut key = [0u8; 32];
    for chunk in key.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut st).to_le_bytes());
    }
    ChaCha20Rng::from_seed(key)
}
