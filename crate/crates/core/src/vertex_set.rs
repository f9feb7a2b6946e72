//! Compact vertex subsets backed by a 64-bit mask.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of `0..n` for `n <= 64`, iterated in ascending order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1 << v)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Renders the set in the compact label form used by the structure
    /// dumps: 1-based labels concatenated (`{0,2}` becomes `13`). Graphs with
    /// ten or more vertices would make that ambiguous, so there the labels are
    /// braced and comma separated instead.
    pub fn label(self, n: usize) -> String {
        if n <= 9 {
            self.iter().map(|v| char::from(b'1' + v as u8)).collect()
        } else {
            let inner: Vec<String> = self.iter().map(|v| (v + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterates every subset of `0..n` with exactly `size` elements, in
/// increasing order of the underlying mask.
pub fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    // Gosper's hack.
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut cur = if size == 0 || size > n {
        None
    } else {
        Some(if size == 64 { u64::MAX } else { (1u64 << size) - 1 })
    };
    let mut empty_pending = size == 0;
    std::iter::from_fn(move || {
        if empty_pending {
            empty_pending = false;
            return Some(VertexSet::EMPTY);
        }
        let c = cur?;
        if n < 64 && c >= limit {
            cur = None;
            return None;
        }
        let lowest = c & c.wrapping_neg();
        let ripple = c.wrapping_add(lowest);
        cur = if ripple == 0 || lowest == 0 {
            None
        } else {
            Some((((ripple ^ c) >> 2) / lowest) | ripple)
        };
        Some(VertexSet(c))
    })
}

/// Every nonempty subset of `0..n`, ordered by mask value.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n < 64);
    (1..(1u64 << n)).map(VertexSet)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: VertexSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(2) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.first(), Some(0));
        assert!(VertexSet::from_bits(0b101).is_subset(s));
        assert_eq!(s.without(0).with(1).iter().collect::<Vec<_>>(), vec![1, 2, 5]);
        assert_eq!(VertexSet::full(3).bits(), 0b111);
    }

    #[test]
    fn labels() {
        let s: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(s.label(5), "13");
        let t: VertexSet = [0, 9, 11].into_iter().collect();
        assert_eq!(t.label(12), "{1,10,12}");
    }

    #[test]
    fn subsets_by_size() {
        let all: Vec<_> = subsets_of_size(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|s| s.len() == 2 && s.is_subset(VertexSet::full(5))));
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(4, 4).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(nonempty_subsets(4).count(), 15);
    }
}
