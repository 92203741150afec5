use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of `0..64`, stored as a bitmask.
///
/// Used for filters (subsets of an algebra's universe) and for sets of
/// frame points (elements of a complex algebra).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet64(pub u64);

pub const MAX_BITS: usize = 64;

impl BitSet64 {
    pub const EMPTY: BitSet64 = BitSet64(0);

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> BitSet64 {
        assert!(n <= MAX_BITS, "bitset width {n} exceeds {MAX_BITS}");
        if n == MAX_BITS {
            BitSet64(u64::MAX)
        } else {
            BitSet64((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> BitSet64 {
        BitSet64(1u64 << i)
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> BitSet64 {
        BitSet64(it.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn union(self, o: BitSet64) -> BitSet64 {
        BitSet64(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: BitSet64) -> BitSet64 {
        BitSet64(self.0 & o.0)
    }

    /// Complement relative to `{0, …, n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> BitSet64 {
        BitSet64(!self.0 & BitSet64::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, o: BitSet64) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for BitSet64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for BitSet64 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for BitSet64 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&i| i >= MAX_BITS) {
            return Err(serde::de::Error::custom(format!("index {bad} out of range")));
        }
        Ok(BitSet64::from_indices(v))
    }
}
