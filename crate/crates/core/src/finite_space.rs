//! Finite topological spaces and the classical closure/interior operators.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::pointset::{PointSet, Universe, UniverseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the whole space is not open")]
    MissingWhole,
    #[error("not closed under union: {0:?} ∪ {1:?} is missing")]
    NotClosedUnderUnion(PointSet, PointSet),
    #[error("not closed under intersection: {0:?} ∩ {1:?} is missing")]
    NotClosedUnderIntersection(PointSet, PointSet),
    #[error(transparent)]
    Universe(#[from] UniverseError),
}

/// A finite topology over a universe.
///
/// Stored as the minimal open neighbourhood of every point; the family of
/// all open sets is materialized on first request and kept in canonical
/// order (see [`PointSet`]'s `Ord`). Membership and inclusion tests never
/// materialize it.
#[derive(Clone)]
pub struct TopologyFamily {
    universe: Arc<Universe>,
    minimal: Vec<PointSet>,
    opens: OnceLock<Vec<PointSet>>,
}

impl PartialEq for TopologyFamily {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.minimal == other.minimal
    }
}

impl Eq for TopologyFamily {}

impl TopologyFamily {
    /// Validates the topology axioms. Unions are checked before
    /// intersections; the witness is the first offending pair in canonical
    /// order.
    pub fn validate<I>(universe: Arc<Universe>, family: I) -> Result<Self, TopologyError>
    where
        I: IntoIterator<Item = PointSet>,
    {
        let mut opens = Vec::new();
        for set in family {
            opens.push(universe.check(set)?);
        }
        opens.sort_unstable();
        opens.dedup();
        let member = |set: PointSet| opens.binary_search(&set).is_ok();
        if !member(PointSet::EMPTY) {
            return Err(TopologyError::MissingEmpty);
        }
        if !member(universe.full()) {
            return Err(TopologyError::MissingWhole);
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if !member(u | v) {
                    return Err(TopologyError::NotClosedUnderUnion(u, v));
                }
            }
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if !member(u & v) {
                    return Err(TopologyError::NotClosedUnderIntersection(u, v));
                }
            }
        }
        let minimal = (0..universe.len())
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(universe.full(), |acc, &u| acc & u)
            })
            .collect();
        Ok(TopologyFamily {
            universe,
            minimal,
            opens: OnceLock::from(opens),
        })
    }

    /// The topology whose minimal open neighbourhoods are `minimal`, one per
    /// point. The caller guarantees `x ∈ minimal[x]` and `y ∈ minimal[x] ⇒
    /// minimal[y] ⊆ minimal[x]`.
    pub fn from_minimal_opens(universe: Arc<Universe>, minimal: &[PointSet]) -> Self {
        assert_eq!(minimal.len(), universe.len(), "one neighbourhood per point");
        TopologyFamily {
            universe,
            minimal: minimal.to_vec(),
            opens: OnceLock::new(),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Every open set, in canonical order. Exponential in the number of
    /// points for fine topologies.
    pub fn opens(&self) -> &[PointSet] {
        self.opens.get_or_init(|| all_unions(&self.minimal))
    }

    pub fn len(&self) -> usize {
        self.opens().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, set: PointSet) -> bool {
        set.is_subset(self.universe.full()) && set.iter().all(|x| self.minimal[x].is_subset(set))
    }

    pub fn is_subfamily_of(&self, other: &TopologyFamily) -> bool {
        self.universe.len() == other.universe.len()
            && self.minimal.iter().all(|&u| other.contains(u))
    }

    /// Intersection of all members containing `x`.
    pub fn minimal_open(&self, x: usize) -> PointSet {
        self.minimal[x]
    }

    pub fn minimal_opens(&self) -> &[PointSet] {
        &self.minimal
    }
}

/// All unions of `generators`, `∅` included, sorted canonically.
fn all_unions(generators: &[PointSet]) -> Vec<PointSet> {
    let mut seen: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
    let mut opens = vec![PointSet::EMPTY];
    let mut generators = generators.to_vec();
    generators.sort_unstable();
    generators.dedup();
    for g in generators {
        let snapshot = opens.len();
        for k in 0..snapshot {
            let u = opens[k] | g;
            if seen.insert(u) {
                opens.push(u);
            }
        }
    }
    opens.sort_unstable();
    opens
}

impl fmt::Debug for TopologyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.format_family(self.opens()))
    }
}

/// A validated finite topological space `(X, τ)`.
///
/// The minimal open neighbourhood of every point is cached; all operators
/// below are computed from it.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteTopSpace {
    topology: TopologyFamily,
}

impl FiniteTopSpace {
    pub fn validate<I>(universe: Arc<Universe>, family: I) -> Result<Self, TopologyError>
    where
        I: IntoIterator<Item = PointSet>,
    {
        Ok(FiniteTopSpace::from_family(TopologyFamily::validate(
            universe, family,
        )?))
    }

    pub fn from_family(topology: TopologyFamily) -> Self {
        FiniteTopSpace { topology }
    }

    /// Builds the space whose minimal open neighbourhoods are `minimal`.
    /// The caller guarantees `x ∈ minimal[x]` and `y ∈ minimal[x] ⇒
    /// minimal[y] ⊆ minimal[x]`.
    pub(crate) fn from_minimal_opens(universe: Arc<Universe>, minimal: Vec<PointSet>) -> Self {
        FiniteTopSpace {
            topology: TopologyFamily::from_minimal_opens(universe, &minimal),
        }
    }

    /// Smallest topology containing `subbasis`.
    pub fn generate<I>(universe: Arc<Universe>, subbasis: I) -> Result<Self, TopologyError>
    where
        I: IntoIterator<Item = PointSet>,
    {
        let mut generators = Vec::new();
        for s in subbasis {
            generators.push(universe.check(s)?);
        }
        // In a finite space the minimal neighbourhood of x is the intersection
        // of the subbasic sets containing x; every open set is a union of those.
        let minimal = (0..universe.len())
            .map(|x| {
                generators
                    .iter()
                    .filter(|g| g.contains(x))
                    .fold(universe.full(), |acc, &g| acc & g)
            })
            .collect();
        Ok(FiniteTopSpace::from_minimal_opens(universe, minimal))
    }

    pub fn discrete(universe: Arc<Universe>) -> Self {
        let minimal = (0..universe.len()).map(PointSet::singleton).collect();
        FiniteTopSpace::from_minimal_opens(universe, minimal)
    }

    pub fn indiscrete(universe: Arc<Universe>) -> Self {
        let minimal = vec![universe.full(); universe.len()];
        FiniteTopSpace::from_minimal_opens(universe, minimal)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.topology.universe
    }

    pub fn len(&self) -> usize {
        self.topology.minimal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topology.minimal.is_empty()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn topology(&self) -> &TopologyFamily {
        &self.topology
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.topology.contains(set)
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.topology.contains(set.complement(self.len()))
    }

    pub fn minimal_open(&self, x: usize) -> PointSet {
        self.topology.minimal[x]
    }

    pub fn minimal_opens(&self) -> &[PointSet] {
        &self.topology.minimal
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.topology.minimal[x].intersects(a))
            .collect()
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: PointSet) -> PointSet {
        a.iter()
            .filter(|&x| self.topology.minimal[x].is_subset(a))
            .collect()
    }

    /// True iff `X` admits no partition into two nonempty disjoint opens.
    pub fn is_connected(&self) -> bool {
        crate::graph::components(&self.topology.minimal, self.full()).len() <= 1
    }
}

impl fmt::Debug for FiniteTopSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {:?}", self.universe().names(), self.topology)
    }
}
