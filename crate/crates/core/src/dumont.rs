//! Dumont permutations of the first kind, the (2413, 3142)-avoiding class
//! and its block decomposition.

use alloc::vec::Vec;
use core::ops::Range;

use crate::perm::{occurs, Permutation};
use crate::{Error, Result};

/// The two forbidden patterns 2413 and 3142.
pub const FORBIDDEN: [[usize; 4]; 2] = [[2, 4, 1, 3], [3, 1, 4, 2]];

/// Even length, every even entry followed by a descent, every odd entry
/// followed by an ascent or at the end.
pub fn is_dumont_first_kind(p: &Permutation) -> bool {
    let v = p.values();
    if !v.len().is_multiple_of(2) {
        return false;
    }
    (0..v.len()).all(|i| {
        let next = v.get(i + 1);
        if v[i].is_multiple_of(2) {
            next.is_some_and(|&w| v[i] > w)
        } else {
            next.is_none_or(|&w| v[i] < w)
        }
    })
}

pub fn avoids_forbidden(p: &Permutation) -> bool {
    FORBIDDEN.iter().all(|f| !occurs(p.values(), f, false))
}

/// Member of the (2413, 3142)-avoiding Dumont class.
pub fn in_class(p: &Permutation) -> bool {
    is_dumont_first_kind(p) && avoids_forbidden(p)
}

fn check_even(len: usize) -> Result<usize> {
    if !len.is_multiple_of(2) {
        return Err(Error::domain(alloc::format!(
            "Dumont permutations have even length, got {len}"
        )));
    }
    Ok(len)
}

fn backtrack(len: usize, avoiding: bool) -> Vec<Permutation> {
    fn go(
        len: usize,
        avoiding: bool,
        cur: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        if cur.len() == len {
            out.push(Permutation::from_vec_unchecked(cur.clone()));
            return;
        }
        let last_slot = cur.len() + 1 == len;
        for v in 1..=len {
            if used[v] {
                continue;
            }
            if let Some(&prev) = cur.last() {
                let ok = if prev % 2 == 0 { v < prev } else { v > prev };
                if !ok {
                    continue;
                }
            }
            if last_slot && v % 2 == 0 {
                continue;
            }
            cur.push(v);
            // Earlier prefixes already avoid, so only occurrences ending
            // here can be new.
            if !(avoiding && FORBIDDEN.iter().any(|f| occurs(cur, f, true))) {
                used[v] = true;
                go(len, avoiding, cur, used, out);
                used[v] = false;
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(
        len,
        avoiding,
        &mut Vec::with_capacity(len),
        &mut alloc::vec![false; len + 1],
        &mut out,
    );
    out
}

/// All Dumont permutations of the first kind of length `len`, in
/// lexicographic order.
pub fn enumerate_dumont(len: usize) -> Result<Vec<Permutation>> {
    Ok(backtrack(check_even(len)?, false))
}

/// The (2413, 3142)-avoiding members of [`enumerate_dumont`], with pattern
/// checks applied as each entry is placed.
pub fn enumerate_dumont_avoiding(len: usize) -> Result<Vec<Permutation>> {
    Ok(backtrack(check_even(len)?, true))
}

/// Not decomposable: no proper even prefix consists of the largest values.
pub fn is_primitive(p: &Permutation) -> bool {
    let v = p.values();
    let m = v.len();
    let mut min = usize::MAX;
    for (i, &x) in v.iter().enumerate().take(m.saturating_sub(1)) {
        min = min.min(x);
        let l = i + 1;
        if l % 2 == 0 && min == m - l + 1 {
            return false;
        }
    }
    true
}

/// Which block comes first in a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirstBlock {
    /// π starts with its largest entry.
    Top,
    A(usize),
    B(usize),
}

/// Index ranges of the blocks of π, read left to right as
/// `... B_2 A_2 B_1 A_1 B_0 (2k) A_0 (2k-1)`.
///
/// `b_blocks[0]` may be empty; every other block is a maximal nonempty run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub k: usize,
    pub top: usize,
    pub a_blocks: Vec<Range<usize>>,
    pub b_blocks: Vec<Range<usize>>,
}

impl BlockDecomposition {
    pub fn first_block(&self) -> FirstBlock {
        if self.top == 0 {
            return FirstBlock::Top;
        }
        let a = self
            .a_blocks
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, r)| r.start == 0);
        match a {
            Some((i, _)) => FirstBlock::A(i),
            None => FirstBlock::B(
                self.b_blocks
                    .iter()
                    .position(|r| r.start == 0 && !r.is_empty())
                    .expect("some block starts π"),
            ),
        }
    }

    /// Checks the structural properties against `p`, naming the first one
    /// that fails.
    pub fn check(&self, p: &Permutation) -> core::result::Result<(), &'static str> {
        let v = p.values();
        let k2 = 2 * self.k;
        let entries = |r: &Range<usize>| &v[r.clone()];
        if v[self.top] != k2 || v.last() != Some(&(k2 - 1)) {
            return Err("2k and 2k-1 are not where expected");
        }
        let mut order: Vec<Range<usize>> = Vec::new();
        for i in (1..self.a_blocks.len().max(self.b_blocks.len())).rev() {
            order.extend(self.b_blocks.get(i).cloned());
            order.extend(self.a_blocks.get(i).cloned());
        }
        order.push(self.b_blocks[0].clone());
        order.push(self.top..self.top + 1);
        order.push(self.a_blocks[0].clone());
        order.push(v.len() - 1..v.len());
        let mut at = 0;
        for r in &order {
            if r.start != at {
                return Err("blocks do not reassemble π");
            }
            at = r.end;
        }
        if at != v.len() {
            return Err("blocks do not reassemble π");
        }
        if self
            .a_blocks
            .iter()
            .any(|r| entries(r).iter().any(|&x| x >= k2 - 1))
        {
            return Err("an A block has an entry not below 2k-1");
        }
        if self
            .b_blocks
            .iter()
            .any(|r| entries(r).iter().any(|&x| x <= k2))
        {
            return Err("a B block has an entry not above 2k");
        }
        let all_above = |hi: &[usize], lo: &[usize]| {
            hi.iter()
                .min()
                .zip(lo.iter().max())
                .is_none_or(|(a, b)| a > b)
        };
        for w in self.a_blocks.windows(2) {
            if !all_above(entries(&w[0]), entries(&w[1])) {
                return Err("A blocks are not decreasing from right to left");
            }
        }
        for w in self.b_blocks.windows(2) {
            if !all_above(entries(&w[1]), entries(&w[0])) {
                return Err("B blocks are not increasing from right to left");
            }
        }
        if self
            .a_blocks
            .iter()
            .chain(&self.b_blocks)
            .any(|r| r.len() % 2 != 0)
        {
            return Err("a block has odd size");
        }
        Ok(())
    }
}

/// Splits a class member around `2k` (where `2k - 1` is its last entry)
/// into maximal runs of entries below and above `2k`.
pub fn block_decompose(p: &Permutation) -> Result<BlockDecomposition> {
    if p.is_empty() || !in_class(p) {
        return Err(Error::domain(alloc::format!(
            "{p} is not a (2413, 3142)-avoiding Dumont permutation"
        )));
    }
    let d = decompose_unchecked(p);
    d.check(p).map_err(Error::domain)?;
    Ok(d)
}

pub(crate) fn decompose_unchecked(p: &Permutation) -> BlockDecomposition {
    let v = p.values();
    let last = v.len() - 1;
    let k2 = v[last] + 1;
    let top = v.iter().position(|&x| x == k2).expect("2k present");
    let mut a_blocks = alloc::vec![top + 1..last];
    let mut b_blocks = Vec::new();
    // Walk left from 2k collecting alternating runs, large first.
    let mut end = top;
    let mut large = true;
    while end > 0 || b_blocks.is_empty() {
        let mut start = end;
        while start > 0 && (v[start - 1] > k2) == large {
            start -= 1;
        }
        if large {
            b_blocks.push(start..end);
        } else {
            a_blocks.push(start..end);
        }
        end = start;
        large = !large;
    }
    BlockDecomposition {
        k: k2 / 2,
        top,
        a_blocks,
        b_blocks,
    }
}
