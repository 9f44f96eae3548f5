//! Deterministic test support: a tiny seeded generator so sweeps reproduce
//! exactly across runs and platforms.

use crate::field::FieldCtx;
use crate::poly::Poly;

/// SplitMix64; enough randomness for test sampling, fully deterministic.
#[derive(Clone, Debug)]
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> SplitMix {
        SplitMix { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, bound); bound must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Random polynomial with degree < deg_bound (possibly lower after trimming).
pub fn random_poly(ctx: &FieldCtx, rng: &mut SplitMix, deg_bound: usize) -> Poly {
    let len = deg_bound.max(1);
    Poly::new((0..len).map(|_| ctx.elem(rng.below(ctx.q()))).collect())
}
