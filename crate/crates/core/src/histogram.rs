//! Statistic distributions over finite structure streams.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigUint;

/// Exact counts of statistic values.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    counts: BTreeMap<usize, u64>,
}

impl Histogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: usize) {
        self.add_many(value, 1);
    }

    pub fn add_many(&mut self, value: usize, count: u64) {
        if count > 0 {
            *self.counts.entry(value).or_insert(0) += count;
        }
    }

    pub fn count(&self, value: usize) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    /// Adds every count of `other` into `self`; merging is order independent.
    pub fn merge(&mut self, other: &Histogram) {
        for (v, c) in other.iter() {
            self.add_many(v, c);
        }
    }

    /// Relabels the keys. Panics if two keys collapse onto one, since a
    /// relabelling used for row comparison must be injective.
    pub fn reindex(&self, mut f: impl FnMut(usize) -> usize) -> Histogram {
        let mut out = Histogram::new();
        for (v, c) in self.iter() {
            let key = f(v);
            assert!(out.count(key) == 0, "reindex map is not injective at {key}");
            out.add_many(key, c);
        }
        out
    }

    /// Dense counts for keys `0..len`.
    pub fn to_row(&self, len: usize) -> Vec<u64> {
        (0..len).map(|k| self.count(k)).collect()
    }

    /// True iff the histogram is exactly `row` read as `k -> row[k]`
    /// (no keys outside the row, zero row entries may be absent).
    pub fn equals_row(&self, row: &[BigUint]) -> bool {
        if self.counts.keys().any(|&k| k >= row.len()) {
            return false;
        }
        row.iter()
            .enumerate()
            .all(|(k, expected)| BigUint::from(self.count(k)) == *expected)
    }
}

impl FromIterator<usize> for Histogram {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut h = Histogram::new();
        for v in iter {
            h.add(v);
        }
        h
    }
}

/// Histogram of `stat` over every element of `stream`.
pub fn distribution<T, I, F>(stream: I, mut stat: F) -> Histogram
where
    I: IntoIterator<Item = T>,
    F: FnMut(&T) -> usize,
{
    stream.into_iter().map(|item| stat(&item)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn empty_stream_gives_empty_histogram() {
        let h = distribution(core::iter::empty::<u8>(), |_| 0);
        assert!(h.is_empty());
        assert_eq!(h.total(), 0);
    }

    #[test]
    fn row_comparison_rejects_extra_keys() {
        let h: Histogram = vec![0, 1, 1, 3].into_iter().collect();
        let row: Vec<BigUint> = [1u32, 2, 0].iter().map(|&v| v.into()).collect();
        assert!(!h.equals_row(&row));
        let row: Vec<BigUint> = [1u32, 2, 0, 1].iter().map(|&v| v.into()).collect();
        assert!(h.equals_row(&row));
    }

    #[test]
    fn merge_is_order_independent() {
        let a: Histogram = vec![0, 2, 2].into_iter().collect();
        let b: Histogram = vec![1, 2].into_iter().collect();
        let mut ab = a.clone();
        ab.merge(&b);
        let mut ba = b.clone();
        ba.merge(&a);
        assert_eq!(ab, ba);
        assert_eq!(ab.count(2), 3);
    }
}
