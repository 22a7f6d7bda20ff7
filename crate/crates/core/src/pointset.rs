//! Point universes and bit-mask point sets.
//!
//! A [`PointSet`] is a single `u64` mask over the indices of a [`Universe`],
//! so a universe holds at most [`MAX_POINTS`] points. Sets carry no universe
//! reference; naming and validation go through the universe that owns them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

use thiserror::Error;

/// Width of the membership mask.
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("universe has {0} points; at most {MAX_POINTS} are supported")]
    TooLarge(usize),
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("set {0:#x} has members outside a universe of {1} points")]
    OutsideUniverse(u64, usize),
}

/// Subset of a universe, stored as a membership mask.
///
/// `Ord` is the canonical order used for every family of sets in the crate:
/// by cardinality first, then lexicographically on the ascending list of
/// member indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        PointSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(PointSet::EMPTY, |acc, i| acc.with(i))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < MAX_POINTS && (self.0 >> i) & 1 == 1
    }

    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        PointSet(self.0 | (1u64 << i))
    }

    #[must_use]
    pub const fn without(self, i: usize) -> Self {
        PointSet(self.0 & !(1u64 << i))
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    /// `X ∖ self` inside a universe of `n` points.
    #[must_use]
    pub const fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    /// Smallest member index.
    pub fn first(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self`, starting with `self` and ending with `∅`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Ascending member indices.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Equal cardinality: the set holding the least element of the
            // symmetric difference comes first.
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: Self) -> Self {
        PointSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for PointSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: Self) -> Self {
        PointSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for PointSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: Self) -> Self {
        PointSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        PointSet::from_indices(iter)
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let current = self.next?;
        self.next = (current != 0).then(|| (current - 1) & self.mask);
        Some(PointSet(current))
    }
}

/// Union of a sequence of sets.
pub fn union_all<I: IntoIterator<Item = PointSet>>(sets: I) -> PointSet {
    sets.into_iter().fold(PointSet::EMPTY, |acc, s| acc | s)
}

/// Ordered list of distinct point labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self, UniverseError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_POINTS {
            return Err(UniverseError::TooLarge(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(UniverseError::DuplicateLabel(name.clone()));
            }
        }
        Ok(Universe { names, index })
    }

    /// Universe labelled `0, 1, .., n-1`.
    pub fn numbered(n: usize) -> Result<Self, UniverseError> {
        Universe::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, UniverseError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| UniverseError::UnknownPoint(label.to_string()))
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn check(&self, set: PointSet) -> Result<PointSet, UniverseError> {
        if set.is_subset(self.full()) {
            Ok(set)
        } else {
            Err(UniverseError::OutsideUniverse(set.bits(), self.len()))
        }
    }

    pub fn set_of<I, S>(&self, labels: I) -> Result<PointSet, UniverseError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().try_fold(PointSet::EMPTY, |acc, l| {
            Ok(acc.with(self.index_of(l.as_ref())?))
        })
    }

    /// Member labels sorted ascending.
    pub fn labels(&self, set: PointSet) -> Vec<&str> {
        let mut out: Vec<&str> = set.iter().map(|i| self.name(i)).collect();
        out.sort_unstable();
        out
    }

    /// Canonical text form, e.g. `{a,b}`; the empty set prints as `{}`.
    pub fn format_set(&self, set: PointSet) -> String {
        format!("{{{}}}", self.labels(set).join(","))
    }

    pub fn format_family<'a, I: IntoIterator<Item = &'a PointSet>>(&self, sets: I) -> String {
        let parts: Vec<String> = sets.into_iter().map(|s| self.format_set(*s)).collect();
        format!("[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}
