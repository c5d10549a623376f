//! Seeded deterministic randomness for the Monte Carlo pipelines.
//!
//! All randomized algorithms in this crate draw from [`SplitMix64`] seeded
//! with an explicit `u64`, so every run is reproducible independently of
//! platform or thread count.

/// SplitMix64 generator (Steele–Lea–Flood).  Passes BigCrush, one u64 of
/// state, and trivially seedable; that is all the module algorithms need.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Derive an independent stream, mixing a stage tag into the seed.
    pub fn fork(&self, tag: u64) -> Self {
        let mut f = SplitMix64 {
            state: self.state ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15),
        };
        f.next_u64();
        SplitMix64 { state: f.next_u64() }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (bound > 0), by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// A non-zero residue vector of the given length over GF(p), rejecting
    /// the zero vector.
    pub fn nonzero_vector(&mut self, p: u8, len: usize) -> alloc::vec::Vec<u8> {
        use alloc::vec::Vec;
        loop {
            let v: Vec<u8> = (0..len).map(|_| self.below(p as u64) as u8).collect();
            if v.iter().any(|&x| x != 0) {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = SplitMix64::new(0);
        let mut b = SplitMix64::new(0);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::new(1);
        assert_ne!(a.next_u64(), c.next_u64());
    }

    #[test]
    fn below_is_in_range() {
        let mut r = SplitMix64::new(7);
        for _ in 0..1000 {
            assert!(r.below(3) < 3);
        }
    }
}
