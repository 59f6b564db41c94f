//! Preference profiles: strict rankings of `m` alternatives by `n` voters.
//!
//! Alternatives and voters are 0-based internally. The text format in
//! [`text`] is 1-based.

mod enumerate;
mod text;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub use enumerate::{count_canonical, enumerate_canonical, CanonicalProfiles, MAX_COUNTABLE_M};
pub use text::{parse_profile, parse_profiles, serialize_profile, serialize_profiles, ParseMode};

/// Position of an alternative in one voter's ranking; 0 is the favourite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(pub usize);

impl Rank {
    pub fn value(self) -> usize {
        self.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A strict linear order over `0..m`, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreferenceOrder {
    ranking: Vec<usize>,
}

impl PreferenceOrder {
    /// Builds an order, checking that `ranking` is a permutation of `0..ranking.len()`.
    pub fn new(ranking: Vec<usize>) -> Result<Self> {
        let m = ranking.len();
        let mut seen = vec![false; m];
        for &a in &ranking {
            if a >= m {
                return Err(Error::argument(format!(
                    "alternative {a} out of range for m = {m}"
                )));
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::argument(format!("alternative {a} appears twice")));
            }
        }
        Ok(PreferenceOrder { ranking })
    }

    pub(crate) fn from_permutation_unchecked(ranking: Vec<usize>) -> Self {
        debug_assert!(PreferenceOrder::new(ranking.clone()).is_ok());
        PreferenceOrder { ranking }
    }

    pub fn identity(m: usize) -> Self {
        PreferenceOrder {
            ranking: (0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn is_identity(&self) -> bool {
        self.ranking.iter().enumerate().all(|(i, &a)| i == a)
    }

    /// `positions()[a]` is the rank of alternative `a`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.ranking.len()];
        for (i, &a) in self.ranking.iter().enumerate() {
            pos[a] = i;
        }
        pos
    }

    pub fn rank_of(&self, alt: usize) -> Option<Rank> {
        self.ranking.iter().position(|&a| a == alt).map(Rank)
    }

    pub fn prefers(&self, a: usize, b: usize) -> bool {
        match (self.rank_of(a), self.rank_of(b)) {
            (Some(ra), Some(rb)) => ra < rb,
            _ => false,
        }
    }
}

impl fmt::Display for PreferenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.ranking.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "{}", a + 1)?;
        }
        Ok(())
    }
}

/// `n` voters' preference orders over `m` alternatives.
///
/// Profiles built with [`Profile::new`] have pairwise distinct orders.
/// [`Profile::new_lenient`] admits repeated orders and records that it did.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    m: usize,
    orders: Vec<PreferenceOrder>,
    has_duplicates: bool,
}

impl Profile {
    /// Strict constructor: rejects repeated orders.
    pub fn new(m: usize, orders: Vec<PreferenceOrder>) -> Result<Self> {
        let p = Profile::new_lenient(m, orders)?;
        if p.has_duplicates {
            return Err(Error::argument("profile contains duplicate preference orders"));
        }
        Ok(p)
    }

    /// Lenient constructor: repeated orders are allowed and flagged.
    pub fn new_lenient(m: usize, orders: Vec<PreferenceOrder>) -> Result<Self> {
        if m == 0 {
            return Err(Error::argument("a profile needs at least one alternative"));
        }
        if orders.is_empty() {
            return Err(Error::argument("a profile needs at least one voter"));
        }
        if let Some((i, o)) = orders.iter().enumerate().find(|(_, o)| o.len() != m) {
            return Err(Error::argument(format!(
                "voter {i} ranks {} alternatives, expected {m}",
                o.len()
            )));
        }
        let has_duplicates = {
            let mut seen = HashSet::with_capacity(orders.len());
            !orders.iter().all(|o| seen.insert(o))
        };
        Ok(Profile {
            m,
            orders,
            has_duplicates,
        })
    }

    /// Convenience constructor from raw 0-based rankings (lenient).
    pub fn from_rankings<I, R>(m: usize, rankings: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: Into<Vec<usize>>,
    {
        let orders = rankings
            .into_iter()
            .map(|r| PreferenceOrder::new(r.into()))
            .collect::<Result<Vec<_>>>()?;
        Profile::new_lenient(m, orders)
    }

    pub(crate) fn from_parts_unchecked(m: usize, orders: Vec<PreferenceOrder>) -> Self {
        Profile {
            m,
            orders,
            has_duplicates: false,
        }
    }

    pub fn num_alternatives(&self) -> usize {
        self.m
    }

    pub fn num_voters(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[PreferenceOrder] {
        &self.orders
    }

    pub fn order(&self, voter: usize) -> Option<&PreferenceOrder> {
        self.orders.get(voter)
    }

    /// True when the profile was admitted by the lenient constructor with repeated orders.
    pub fn has_duplicates(&self) -> bool {
        self.has_duplicates
    }

    /// Number of alternatives `voter` strictly prefers to `alt`.
    pub fn rank(&self, voter: usize, alt: usize) -> Result<Rank> {
        let order = self.orders.get(voter).ok_or_else(|| {
            Error::argument(format!(
                "voter {voter} out of range (n = {})",
                self.orders.len()
            ))
        })?;
        if alt >= self.m {
            return Err(Error::argument(format!(
                "alternative {alt} out of range (m = {})",
                self.m
            )));
        }
        Ok(order.rank_of(alt).expect("order is a permutation of 0..m"))
    }

    /// Relabels alternatives so voter 0 ranks them `0 > 1 > ... > m-1`, then
    /// sorts the remaining voters lexicographically.
    pub fn canonicalize(&self) -> Profile {
        let relabel = self.orders[0].positions();
        let mut rest: Vec<PreferenceOrder> = self.orders[1..]
            .iter()
            .map(|o| {
                PreferenceOrder::from_permutation_unchecked(
                    o.ranking.iter().map(|&a| relabel[a]).collect(),
                )
            })
            .collect();
        rest.sort();
        let mut orders = Vec::with_capacity(self.orders.len());
        orders.push(PreferenceOrder::identity(self.m));
        orders.extend(rest);
        Profile {
            m: self.m,
            orders,
            has_duplicates: self.has_duplicates,
        }
    }

    /// Keeps only the alternatives in `keep`, renumbered `0..keep.len()` in
    /// ascending original order. Relative orders are preserved. The result
    /// may contain repeated orders, which are flagged as in the lenient
    /// constructor.
    pub fn restrict(&self, keep: &[usize]) -> Result<Profile> {
        let renumber = restriction_map(self.m, keep)?;
        let k = renumber.iter().filter(|r| r.is_some()).count();
        let orders = self
            .orders
            .iter()
            .map(|o| {
                PreferenceOrder::from_permutation_unchecked(
                    o.ranking.iter().filter_map(|&a| renumber[a]).collect(),
                )
            })
            .collect();
        Profile::new_lenient(k, orders)
    }
}

/// Maps original alternative ids to their index in the sorted, deduplicated `keep` set.
pub(crate) fn restriction_map(m: usize, keep: &[usize]) -> Result<Vec<Option<usize>>> {
    if keep.is_empty() {
        return Err(Error::argument("restriction needs a non-empty set of alternatives"));
    }
    let mut mask = vec![false; m];
    for &a in keep {
        if a >= m {
            return Err(Error::argument(format!(
                "alternative {a} out of range (m = {m})"
            )));
        }
        mask[a] = true;
    }
    let mut next = 0;
    Ok(mask
        .into_iter()
        .map(|kept| {
            kept.then(|| {
                next += 1;
                next - 1
            })
        })
        .collect())
}
