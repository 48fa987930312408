//! Fixed-width bit rows backing graph adjacency and candidate sets.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn set_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub(crate) fn clear_bit(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

#[inline]
pub(crate) fn test_bit(row: &[u64], i: usize) -> bool {
    (row[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
}

/// Mask with the lowest `n` bits set, spread over `words_for(n)` words.
pub(crate) fn full_mask(n: usize) -> Vec<u64> {
    let words = words_for(n);
    let mut row = vec![0u64; words];
    for (idx, word) in row.iter_mut().enumerate() {
        let lo = idx * WORD_BITS;
        if lo + WORD_BITS <= n {
            *word = u64::MAX;
        } else if lo < n {
            *word = (1u64 << (n - lo)) - 1;
        }
    }
    row
}

#[inline]
pub(crate) fn popcount(row: &[u64]) -> u64 {
    let mut total = 0u64;
    for &w in row {
        total += w.count_ones() as u64;
    }
    total
}

#[inline]
pub(crate) fn and_popcount(a: &[u64], b: &[u64]) -> u64 {
    debug_assert_eq!(a.len(), b.len());
    let mut total = 0u64;
    for i in 0..a.len() {
        total += (a[i] & b[i]).count_ones() as u64;
    }
    total
}

#[inline]
pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    debug_assert!(dst.len() == a.len() && a.len() == b.len());
    for i in 0..dst.len() {
        dst[i] = a[i] & b[i];
    }
}

/// Indices of set bits, ascending.
pub(crate) fn iter_bits(row: &[u64]) -> BitIter<'_> {
    BitIter {
        row,
        word_idx: 0,
        current: if row.is_empty() { 0 } else { row[0] },
    }
}

pub(crate) struct BitIter<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}
