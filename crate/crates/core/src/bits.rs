//! Helpers for `u128` vertex sets.

pub type VertexSet = u128;

#[inline]
pub fn singleton(v: usize) -> VertexSet {
    1u128 << v
}

#[inline]
pub fn full(n: usize) -> VertexSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[inline]
pub fn contains(set: VertexSet, v: usize) -> bool {
    set >> v & 1 == 1
}

#[inline]
pub fn len(set: VertexSet) -> usize {
    set.count_ones() as usize
}

/// Iterates the members of a set in increasing order.
#[inline]
pub fn iter(set: VertexSet) -> Members {
    Members(set)
}

#[derive(Clone, Copy, Debug)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = len(self.0);
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

pub fn from_slice(vs: &[usize]) -> VertexSet {
    vs.iter().fold(0, |acc, &v| acc | singleton(v))
}
