//! Reproducible random monomial ideals for cross-validation runs.
//!
//! The generator is a fixed splitmix64 stream so a (seed, count,
//! max_exponent) triple always yields the same ideals, bit for bit.

use crate::ideal::{DegreeVector, MonomialIdeal};

/// splitmix64: tiny, well-studied, and stable across platforms.
#[derive(Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..n (n ≥ 1), by rejection.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n >= 1);
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }
}

/// Generate `count` random monomial ideals with exponents in
/// 0..=max_exponent.  Candidate generator sets are minimalized; ideals with
/// fewer than two minimal generators, or containing the monomial 1, are
/// rejected and redrawn.
pub fn generate_corpus(seed: u64, count: usize, max_exponent: u32) -> Vec<MonomialIdeal> {
    assert!(count >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 3 + rng.below(5) as usize; // 3..=7 candidate generators
        let gens: Vec<DegreeVector> = (0..n)
            .map(|_| {
                DegreeVector::new(
                    rng.below(max_exponent as u64 + 1) as u32,
                    rng.below(max_exponent as u64 + 1) as u32,
                    rng.below(max_exponent as u64 + 1) as u32,
                )
            })
            .collect();
        let Ok(ideal) = MonomialIdeal::new(gens) else {
            continue;
        };
        if ideal.gens().len() < 2 || ideal.contains(&DegreeVector::new(0, 0, 0)) {
            continue;
        }
        out.push(ideal);
    }
    out
}
