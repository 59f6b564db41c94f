//! Canonical three-voter profiles.
//!
//! Voter 0 holds the identity order; voters 1 and 2 hold an unordered pair of
//! distinct non-identity orders, emitted with the lexicographically smaller
//! order first. Pairs are streamed in lexicographic order, so the stream of
//! `m` alternatives has exactly `C(m! - 1, 2)` items and every position in it
//! can be addressed directly.

use super::{PreferenceOrder, Profile};
use crate::error::{Error, Result};

/// Largest `m` for which [`count_canonical`] fits in a `u64`.
pub const MAX_COUNTABLE_M: usize = 12;

fn factorial(m: usize) -> Option<u64> {
    (1..=m as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// `C(m! - 1, 2)`. Supported for `1 <= m <= 12`, i.e. while `(m! - 1)^2`
/// fits in a `u64`; larger `m` returns [`Error::Overflow`].
pub fn count_canonical(m: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::argument("m must be at least 1"));
    }
    let overflow = || Error::Overflow(format!("C({m}! - 1, 2) does not fit in 64 bits"));
    let orders = factorial(m).ok_or_else(overflow)? - 1;
    if orders < 2 {
        return Ok(0);
    }
    let product = orders.checked_mul(orders - 1).ok_or_else(overflow)?;
    Ok(product / 2)
}

/// Streams every canonical profile over `m` alternatives.
pub fn enumerate_canonical(m: usize) -> Result<CanonicalProfiles> {
    CanonicalProfiles::new(m)
}

/// Advances `perm` to its lexicographic successor; false when it was the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// The permutation of `0..m` with lexicographic rank `rank`.
fn unrank_permutation(m: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(m);
    for k in (0..m).rev() {
        let f = factorial(k).expect("m is bounded by MAX_COUNTABLE_M");
        let digit = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(digit));
    }
    out
}

/// Splits a pair index into `(i, j)` with `i < j < orders`, ordered by `i` then `j`.
fn unrank_pair(orders: u64, index: u64) -> (u64, u64) {
    let n = orders as u128;
    // Number of pairs whose first element is below `i`.
    let start = |i: u128| i * (2 * n - i - 1) / 2;
    let k = index as u128;
    let (mut lo, mut hi) = (0u128, n - 1);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if start(mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let i = lo;
    let j = i + 1 + (k - start(i));
    (i as u64, j as u64)
}

/// Lazy cursor over a half-open range of the canonical stream.
///
/// Cursors are cheap and independent; split a run across threads by
/// creating one with [`CanonicalProfiles::range`] per worker.
#[derive(Debug, Clone)]
pub struct CanonicalProfiles {
    m: usize,
    total: u64,
    next_index: u64,
    end: u64,
    second: Vec<usize>,
    third: Vec<usize>,
}

impl CanonicalProfiles {
    pub fn new(m: usize) -> Result<Self> {
        let total = count_canonical(m)?;
        Self::range(m, 0, total)
    }

    /// Items with stream index in `[lo, hi)`; `hi` is clamped to the stream length.
    pub fn range(m: usize, lo: u64, hi: u64) -> Result<Self> {
        let total = count_canonical(m)?;
        let end = hi.min(total);
        if lo > end {
            return Err(Error::argument(format!(
                "range start {lo} exceeds end {end}"
            )));
        }
        let mut cursor = CanonicalProfiles {
            m,
            total,
            next_index: lo,
            end,
            second: Vec::new(),
            third: Vec::new(),
        };
        if lo < end {
            let (second, third) = cursor.pair_at(lo);
            cursor.second = second;
            cursor.third = third;
        }
        Ok(cursor)
    }

    pub fn num_alternatives(&self) -> usize {
        self.m
    }

    /// Length of the full, unrestricted stream.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Stream index of the next item.
    pub fn position(&self) -> u64 {
        self.next_index
    }

    /// Items left in this cursor's range.
    pub fn remaining(&self) -> u64 {
        self.end - self.next_index
    }

    fn pair_at(&self, index: u64) -> (Vec<usize>, Vec<usize>) {
        let orders = factorial(self.m).expect("bounded m") - 1;
        let (i, j) = unrank_pair(orders, index);
        // Rank 0 is the identity, which is never paired.
        (
            unrank_permutation(self.m, i + 1),
            unrank_permutation(self.m, j + 1),
        )
    }

    /// Random access to the profile at stream index `index`.
    pub fn get(&self, index: u64) -> Option<Profile> {
        (index < self.total).then(|| {
            let (second, third) = self.pair_at(index);
            self.build(second, third)
        })
    }

    fn build(&self, second: Vec<usize>, third: Vec<usize>) -> Profile {
        Profile::from_parts_unchecked(
            self.m,
            vec![
                PreferenceOrder::identity(self.m),
                PreferenceOrder::from_permutation_unchecked(second),
                PreferenceOrder::from_permutation_unchecked(third),
            ],
        )
    }

    fn advance(&mut self) {
        if !next_permutation(&mut self.third) {
            next_permutation(&mut self.second);
            self.third.clone_from(&self.second);
            next_permutation(&mut self.third);
        }
    }
}

impl Iterator for CanonicalProfiles {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.next_index >= self.end {
            return None;
        }
        let profile = self.build(self.second.clone(), self.third.clone());
        self.next_index += 1;
        if self.next_index < self.end {
            self.advance();
        }
        Some(profile)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining() as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for CanonicalProfiles {}
