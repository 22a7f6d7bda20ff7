//! Labeled enumeration of small topologies and aura spaces.
//!
//! Topologies on `n` points correspond to preorders: the minimal open set of
//! `x` is its up-set. The enumeration walks every candidate row family
//! `x ↦ m(x) ∋ x` and keeps the transitive ones.

use std::sync::Arc;

use crate::aura::AuraSpace;
use crate::finite_space::FiniteTopSpace;
use crate::pointset::{PointSet, Universe};

use super::SearchError;

/// Largest size for which full enumeration is offered.
pub const MAX_ENUMERATION_SIZE: usize = 5;

/// Number of labeled topologies on `n` points, `n = 0..=5`.
pub const TOPOLOGY_COUNTS: [usize; 6] = [1, 1, 4, 29, 355, 6942];

/// Every labeled topology on `{0, …, n-1}` exactly once, ordered by the
/// canonical order of their open-set lists.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteTopSpace>, SearchError> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(SearchError::SizeOutOfRange {
            size: n,
            max: MAX_ENUMERATION_SIZE,
        });
    }
    let universe = Arc::new(Universe::numbered(n).expect("n is small"));
    let mut rows = vec![PointSet::EMPTY; n];
    let mut found = Vec::new();
    fill_rows(n, 0, &mut rows, &mut found);
    let mut spaces: Vec<FiniteTopSpace> = found
        .into_iter()
        .map(|minimal| FiniteTopSpace::from_minimal_opens(universe.clone(), minimal))
        .collect();
    spaces.sort_by(|a, b| a.topology().opens().cmp(b.topology().opens()));
    Ok(spaces)
}

fn fill_rows(n: usize, x: usize, rows: &mut Vec<PointSet>, found: &mut Vec<Vec<PointSet>>) {
    if x == n {
        let transitive = (0..n).all(|p| rows[p].iter().all(|q| rows[q].is_subset(rows[p])));
        if transitive {
            found.push(rows.clone());
        }
        return;
    }
    let others = PointSet::full(n).without(x);
    for extra in others.subsets() {
        rows[x] = extra.with(x);
        fill_rows(n, x + 1, rows, found);
    }
}

/// The open sets containing `x`, in canonical order.
fn aura_choices(space: &FiniteTopSpace) -> Vec<Vec<PointSet>> {
    (0..space.len())
        .map(|x| {
            space
                .topology()
                .opens()
                .iter()
                .copied()
                .filter(|u| u.contains(x))
                .collect()
        })
        .collect()
}

/// Size of the fiber of scope functions over `space`.
pub fn aura_count(space: &FiniteTopSpace) -> usize {
    aura_choices(space).iter().map(Vec::len).product()
}

/// Every scope function over `space`, read as a mixed-radix counter with
/// point 0 most significant and each digit running through the open sets
/// containing that point in canonical order.
pub fn enumerate_auras(space: &FiniteTopSpace) -> AuraFiber {
    let choices = aura_choices(space);
    let total = choices.iter().map(Vec::len).product();
    AuraFiber {
        space: Arc::new(space.clone()),
        choices,
        next: 0,
        total,
    }
}

pub struct AuraFiber {
    space: Arc<FiniteTopSpace>,
    choices: Vec<Vec<PointSet>>,
    next: usize,
    total: usize,
}

impl AuraFiber {
    /// The `index`-th scope function of the fiber.
    pub fn get(&self, index: usize) -> Option<AuraSpace> {
        if index >= self.total {
            return None;
        }
        let mut code = index;
        let mut aura = vec![PointSet::EMPTY; self.choices.len()];
        for (x, options) in self.choices.iter().enumerate().rev() {
            aura[x] = options[code % options.len()];
            code /= options.len();
        }
        Some(AuraSpace::from_parts(self.space.clone(), aura))
    }

    pub fn total(&self) -> usize {
        self.total
    }
}

impl Iterator for AuraFiber {
    type Item = AuraSpace;

    fn next(&mut self) -> Option<AuraSpace> {
        let item = self.get(self.next)?;
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.total - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AuraFiber {}

/// Every aura space on `n` points, topology-major.
pub fn enumerate_spaces(n: usize) -> Result<impl Iterator<Item = AuraSpace>, SearchError> {
    Ok(enumerate_topologies(n)?
        .into_iter()
        .flat_map(|t| enumerate_auras(&t)))
}
