//! Covers, exact minimum subcovers, FIP and the compactness predicates.
//!
//! On a finite space every cover is finite, so all five compactness notions
//! hold. The predicates still exist so the implication chains can be stated
//! uniformly with the symbolic models; the `*_oracle` functions enumerate
//! covering subfamilies and extract subcovers explicitly.

use serde::Serialize;
use thiserror::Error;

use crate::aura::AuraSpace;
use crate::generalized::{gen_family, GeneralizedClass, GeneralizedError};
use crate::pointset::{union_all, PointSet};

/// Oracle modes refuse universes larger than this.
pub const ORACLE_MAX_POINTS: usize = 4;
/// Oracle modes refuse open families with more members than this.
pub const ORACLE_MAX_MEMBERS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("members do not cover the target; {0:?} is left uncovered")]
    NotACover(PointSet),
    #[error("family member {0:?} is not 𝔞-closed")]
    NotAClosedFamily(PointSet),
    #[error(
        "oracle mode is limited to {ORACLE_MAX_POINTS} points and {ORACLE_MAX_MEMBERS} open sets"
    )]
    OracleTooLarge,
    #[error(transparent)]
    Generalized(#[from] GeneralizedError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub target: PointSet,
    pub members: Vec<PointSet>,
}

impl Cover {
    pub fn new(target: PointSet, members: Vec<PointSet>) -> Self {
        Cover { target, members }
    }

    pub fn is_cover(&self) -> bool {
        self.target
            .is_subset(union_all(self.members.iter().copied()))
    }

    /// Indices of a minimum-cardinality sub-list that still covers the
    /// target, ordered canonically by member. Ties between minimum covers go
    /// to the lexicographically least canonical member list (equal members
    /// ordered by index).
    pub fn minimal_subcover_indices(&self) -> Result<Vec<usize>, CoverError> {
        let covered = union_all(self.members.iter().copied());
        if !self.target.is_subset(covered) {
            return Err(CoverError::NotACover(self.target - covered));
        }
        let mut order: Vec<usize> = (0..self.members.len()).collect();
        order.sort_by_key(|&i| (self.members[i], i));
        let sorted: Vec<PointSet> = order.iter().map(|&i| self.members[i]).collect();
        let mut search = SubcoverSearch::new(self.target, &sorted);
        search.run();
        let best = search.best.expect("a cover always has a subcover");
        Ok(best.into_iter().map(|k| order[k]).collect())
    }

    /// Members of [`Cover::minimal_subcover_indices`], in canonical order.
    pub fn minimal_subcover(&self) -> Result<Vec<PointSet>, CoverError> {
        Ok(self
            .minimal_subcover_indices()?
            .into_iter()
            .map(|i| self.members[i])
            .collect())
    }
}

struct SubcoverSearch<'a> {
    target: PointSet,
    members: &'a [PointSet],
    /// `suffix[i]` = union of members `i..`, restricted to the target.
    suffix: Vec<PointSet>,
    limit: usize,
    best: Option<Vec<usize>>,
    chosen: Vec<usize>,
}

impl<'a> SubcoverSearch<'a> {
    fn new(target: PointSet, members: &'a [PointSet]) -> Self {
        let mut suffix = vec![PointSet::EMPTY; members.len() + 1];
        for i in (0..members.len()).rev() {
            suffix[i] = suffix[i + 1] | (members[i] & target);
        }
        let limit = greedy_size(target, members);
        SubcoverSearch {
            target,
            members,
            suffix,
            limit,
            best: None,
            chosen: Vec::new(),
        }
    }

    fn run(&mut self) {
        self.descend(0, self.target);
    }

    fn descend(&mut self, i: usize, uncovered: PointSet) {
        if uncovered.is_empty() {
            if self
                .best
                .as_ref()
                .is_none_or(|b| self.chosen.len() < b.len())
            {
                self.limit = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        if !uncovered.is_subset(self.suffix[i]) {
            return;
        }
        // One more member is needed; with a best of equal size in hand we
        // only want strictly smaller covers.
        let budget = if self.best.is_some() {
            self.limit - 1
        } else {
            self.limit
        };
        if self.chosen.len() + lower_bound(uncovered, &self.members[i..]) > budget {
            return;
        }
        let m = self.members[i];
        if m.intersects(uncovered) {
            self.chosen.push(i);
            self.descend(i + 1, uncovered - m);
            self.chosen.pop();
        }
        self.descend(i + 1, uncovered);
    }
}

fn greedy_size(target: PointSet, members: &[PointSet]) -> usize {
    let mut uncovered = target;
    let mut size = 0;
    while !uncovered.is_empty() {
        let best = members
            .iter()
            .max_by_key(|m| (**m & uncovered).len())
            .expect("target is covered");
        uncovered = uncovered - *best;
        size += 1;
    }
    size
}

fn lower_bound(uncovered: PointSet, remaining: &[PointSet]) -> usize {
    let widest = remaining
        .iter()
        .map(|m| (*m & uncovered).len())
        .max()
        .unwrap_or(0);
    if widest == 0 {
        usize::MAX / 2
    } else {
        uncovered.len().div_ceil(widest)
    }
}

/// Result of a brute-force compactness oracle run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleOutcome {
    pub holds: bool,
    pub covers_checked: usize,
    pub largest_minimal_subcover: usize,
}

/// Checks every subfamily of `family ∖ {∅}` that covers `a` and extracts a
/// finite subcover from it.
pub fn compactness_oracle(a: PointSet, family: &[PointSet]) -> Result<OracleOutcome, CoverError> {
    let members: Vec<PointSet> = family.iter().copied().filter(|m| !m.is_empty()).collect();
    if members.len() > ORACLE_MAX_MEMBERS {
        return Err(CoverError::OracleTooLarge);
    }
    let mut outcome = OracleOutcome {
        holds: true,
        covers_checked: 0,
        largest_minimal_subcover: 0,
    };
    for mask in 0u32..(1u32 << members.len()) {
        let sub: Vec<PointSet> = (0..members.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        let cover = Cover::new(a, sub);
        if !cover.is_cover() {
            continue;
        }
        outcome.covers_checked += 1;
        match cover.minimal_subcover() {
            Ok(found) if Cover::new(a, found.clone()).is_cover() => {
                outcome.largest_minimal_subcover =
                    outcome.largest_minimal_subcover.max(found.len());
            }
            _ => outcome.holds = false,
        }
    }
    Ok(outcome)
}

/// Always true: a finite space has only finitely many 𝔞-open sets.
pub fn is_a_compact(_s: &AuraSpace, _a: PointSet) -> bool {
    true
}

pub fn is_a_compact_oracle(s: &AuraSpace, a: PointSet) -> Result<OracleOutcome, CoverError> {
    if s.len() > ORACLE_MAX_POINTS {
        return Err(CoverError::OracleTooLarge);
    }
    compactness_oracle(a, s.tau_a().opens())
}

pub fn is_countably_a_compact(_s: &AuraSpace, _a: PointSet) -> bool {
    true
}

pub fn is_a_lindelof(_s: &AuraSpace, _a: PointSet) -> bool {
    true
}

/// Vacuous on a finite space: there are no infinite subsets.
pub fn is_a_limit_point_compact(_s: &AuraSpace) -> bool {
    true
}

/// `τ`-compactness; finite spaces are compact.
pub fn is_tau_compact(_s: &AuraSpace, _a: PointSet) -> bool {
    true
}

pub fn gen_compactness(
    s: &AuraSpace,
    _a: PointSet,
    class: GeneralizedClass,
) -> Result<bool, CoverError> {
    // materializing the family enforces the size limit
    gen_family(s, class)?;
    Ok(true)
}

pub fn gen_compactness_oracle(
    s: &AuraSpace,
    a: PointSet,
    class: GeneralizedClass,
) -> Result<OracleOutcome, CoverError> {
    if s.len() > ORACLE_MAX_POINTS {
        return Err(CoverError::OracleTooLarge);
    }
    compactness_oracle(a, &gen_family(s, class)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FipOutcome {
    pub fip_holds: bool,
    pub intersection_nonempty: bool,
}

/// FIP of a family of 𝔞-closed sets and nonemptiness of its intersection.
///
/// FIP quantifies over nonempty sub-lists; the intersection of the empty
/// family is `X`.
pub fn fip_has_nonempty_intersection(
    s: &AuraSpace,
    family: &[PointSet],
) -> Result<FipOutcome, CoverError> {
    if let Some(&bad) = family.iter().find(|&&f| !s.is_a_closed(f)) {
        return Err(CoverError::NotAClosedFamily(bad));
    }
    let meet = family.iter().fold(s.full(), |acc, &f| acc & f);
    // intersections only shrink as sub-lists grow, so the whole list is the
    // hardest finite sub-list
    Ok(FipOutcome {
        fip_holds: family.is_empty() || !meet.is_empty(),
        intersection_nonempty: !meet.is_empty(),
    })
}
