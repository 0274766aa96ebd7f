//! Deterministic random number streams.
//!
//! All stochastic code in this crate draws from [`RngStream`], a thin layer
//! over the ChaCha8 counter-based generator. Every variate is produced by a
//! fixed, documented transform of raw 64-bit generator output, so a given
//! seed yields bit-identical draws on every platform and thread schedule.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded stream of uniform and Gaussian variates.
#[derive(Debug, Clone)]
pub struct RngStream {
    inner: ChaCha8Rng,
}

impl RngStream {
    /// Stream seeded directly from a 64-bit value.
    pub fn from_seed(seed: u64) -> RngStream {
        RngStream {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Stream for one unit of work, derived from a master seed and two
    /// indices (for the benchmark: model id and replication index). The
    /// derivation chains SplitMix64 so distinct index pairs give
    /// well-separated seeds.
    pub fn derived(master: u64, lane: u64, index: u64) -> RngStream {
        RngStream::from_seed(derive_seed(master, lane, index))
    }

    /// Uniform variate on `[0, 1)` built from the top 53 bits of one
    /// 64-bit draw: `(bits >> 11) * 2^-53`.
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform variate on `[lo, hi)`, as `lo + (hi - lo) * uniform()`.
    pub fn uniform_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Bernoulli trial with success probability `p`, true when
    /// `uniform() < p`. Consumes exactly one draw.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.uniform() < p
    }

    /// Random sign, `+1.0` when `uniform() < 1/2` and `-1.0` otherwise.
    pub fn random_sign(&mut self) -> f64 {
        if self.uniform() < 0.5 {
            1.0
        } else {
            -1.0
        }
    }

    /// Standard normal variate via the Box-Muller transform. Each call to
    /// the underlying pair generator consumes two uniforms; this
    /// convenience wrapper discards the second member of the pair.
    pub fn standard_normal(&mut self) -> f64 {
        self.normal_pair().0
    }

    /// Fills `out` with independent standard normal variates using the
    /// Box-Muller transform: with `u1` in `(0, 1]` and `u2` in `[0, 1)`,
    ///
    /// ```text
    /// r = sqrt(-2 ln u1),  z1 = r cos(2 pi u2),  z2 = r sin(2 pi u2).
    /// ```
    ///
    /// Pairs are consumed in order; an odd-length slice discards the final
    /// `z2`, so the number of raw draws depends only on `out.len()`.
    pub fn fill_standard_normal(&mut self, out: &mut [f64]) {
        let mut i = 0;
        while i < out.len() {
            let (z1, z2) = self.normal_pair();
            out[i] = z1;
            if i + 1 < out.len() {
                out[i + 1] = z2;
            }
            i += 2;
        }
    }

    fn normal_pair(&mut self) -> (f64, f64) {
        // 1 - uniform() lies in (0, 1], keeping the logarithm finite.
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        (r * theta.cos(), r * theta.sin())
    }
}

/// SplitMix64 step: the standard finalizer with odd-constant multiplies.
fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic seed for one unit of work: SplitMix64 applied to the
/// master seed, then re-mixed with each index in turn.
pub fn derive_seed(master: u64, lane: u64, index: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master) ^ lane) ^ index)
}
