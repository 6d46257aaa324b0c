//! Fixed-width sets of small indices.

use std::fmt;

/// Largest carrier size representable by [`BitSet`].
pub const MAX_BITS: usize = 64;

/// A set of indices in `0..64`, stored as one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet(pub u64);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> BitSet {
        debug_assert!(n <= MAX_BITS);
        if n == MAX_BITS {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> BitSet {
        BitSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> BitSet {
        let mut s = BitSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
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
    pub fn with(self, i: usize) -> BitSet {
        BitSet(self.0 | (1u64 << i))
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
    pub fn union(self, o: BitSet) -> BitSet {
        BitSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: BitSet) -> BitSet {
        BitSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: BitSet) -> BitSet {
        BitSet(self.0 & !o.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> BitSet {
        BitSet(!self.0 & BitSet::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, o: BitSet) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn intersects(self, o: BitSet) -> bool {
        self.0 & o.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl IntoIterator for BitSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> BitSet {
        BitSet::from_indices(it)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = BitSet::from_indices([1, 3, 5]);
        let b = BitSet::from_indices([3, 4]);
        assert_eq!(a.intersection(b), BitSet::singleton(3));
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), vec![1, 5]);
        assert!(BitSet::singleton(3).is_subset(a));
        assert_eq!(a.complement(6), BitSet::from_indices([0, 2, 4]));
        assert_eq!(BitSet::full(64).len(), 64);
        assert_eq!(BitSet::EMPTY.first(), None);
    }
}
