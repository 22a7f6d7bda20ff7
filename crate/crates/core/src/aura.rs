//! Scope functions and the operators they induce.
//!
//! A scope function assigns each point `x` an open set `𝔞(x) ∋ x`. From it
//! come the aura closure `cl_𝔞(A) = {x : 𝔞(x) ∩ A ≠ ∅}`, the aura interior
//! `int_𝔞(A) = {x ∈ A : 𝔞(x) ⊆ A}`, the derived set
//! `d_𝔞(A) = {x : 𝔞(x) ∩ (A ∖ {x}) ≠ ∅}` and the topology `τ_𝔞` of sets `A`
//! with `𝔞(x) ⊆ A` for every `x ∈ A`.
//!
//! Every [`AuraSpace`] caches the 𝔞-hull `h(x)` of each point, the least
//! 𝔞-open set containing `x`. `τ_𝔞` is materialized as all unions of hulls.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::finite_space::{FiniteTopSpace, TopologyFamily};
use crate::graph;
use crate::pointset::{PointSet, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuraError {
    #[error("scope function has {got} entries for a universe of {expected} points")]
    WrongLength { expected: usize, got: usize },
    #[error("the aura of point #{0} is not an open set")]
    OpenSetNotInTopology(usize),
    #[error("point #{0} does not lie in its own aura")]
    PointNotInOwnAura(usize),
}

/// Per-point assignment `x ↦ 𝔞(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScopeFunction(Vec<PointSet>);

impl ScopeFunction {
    pub fn new(assignment: Vec<PointSet>) -> Self {
        ScopeFunction(assignment)
    }

    pub fn trivial(n: usize) -> Self {
        ScopeFunction(vec![PointSet::full(n); n])
    }

    pub fn discrete(n: usize) -> Self {
        ScopeFunction((0..n).map(PointSet::singleton).collect())
    }

    pub fn as_slice(&self) -> &[PointSet] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuraClassification {
    pub transitive: bool,
    pub symmetric: bool,
    pub trivial: bool,
    pub discrete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeparationAxioms {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map has {got} images for a source of {expected} points")]
    NotTotal { expected: usize, got: usize },
    #[error("image {image} of point #{point} is outside a target of {target} points")]
    OutOfRange {
        point: usize,
        image: usize,
        target: usize,
    },
    #[error("map is {source_len} → {target_len}, spaces are {src} → {dst}")]
    SizeMismatch {
        source_len: usize,
        target_len: usize,
        src: usize,
        dst: usize,
    },
}

/// A total function between two finite universes, by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    target_len: usize,
    images: Vec<usize>,
}

impl FiniteMap {
    pub fn new(images: Vec<usize>, source_len: usize, target_len: usize) -> Result<Self, MapError> {
        if images.len() != source_len {
            return Err(MapError::NotTotal {
                expected: source_len,
                got: images.len(),
            });
        }
        if let Some((point, &image)) = images.iter().enumerate().find(|(_, &y)| y >= target_len) {
            return Err(MapError::OutOfRange {
                point,
                image,
                target: target_len,
            });
        }
        Ok(FiniteMap { target_len, images })
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap {
            target_len: n,
            images: (0..n).collect(),
        }
    }

    pub fn constant(source_len: usize, target_len: usize, value: usize) -> Result<Self, MapError> {
        FiniteMap::new(vec![value; source_len], source_len, target_len)
    }

    pub fn source_len(&self) -> usize {
        self.images.len()
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        a.iter().map(|x| self.images[x]).collect()
    }

    pub fn preimage(&self, v: PointSet) -> PointSet {
        (0..self.images.len())
            .filter(|&x| v.contains(self.images[x]))
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(PointSet::full(self.images.len())) == PointSet::full(self.target_len)
    }

    /// Every map from a universe of `source_len` points into one of
    /// `target_len` points, in lexicographic order of the image vector.
    pub fn all(source_len: usize, target_len: usize) -> impl Iterator<Item = FiniteMap> {
        let total = if source_len == 0 {
            1
        } else if target_len == 0 {
            0
        } else {
            target_len.pow(source_len as u32)
        };
        (0..total).map(move |mut code| {
            let mut images = vec![0; source_len];
            for slot in images.iter_mut().rev() {
                *slot = code % target_len.max(1);
                code /= target_len.max(1);
            }
            FiniteMap { target_len, images }
        })
    }
}

/// `(X, τ, 𝔞)` with a validated scope function.
#[derive(Clone, PartialEq, Eq)]
pub struct AuraSpace {
    space: Arc<FiniteTopSpace>,
    aura: Vec<PointSet>,
    hulls: Vec<PointSet>,
}

impl AuraSpace {
    pub fn new(space: Arc<FiniteTopSpace>, aura: ScopeFunction) -> Result<Self, AuraError> {
        let aura = aura.0;
        if aura.len() != space.len() {
            return Err(AuraError::WrongLength {
                expected: space.len(),
                got: aura.len(),
            });
        }
        for (x, &ax) in aura.iter().enumerate() {
            if !ax.contains(x) {
                return Err(AuraError::PointNotInOwnAura(x));
            }
            if !space.is_open(ax) {
                return Err(AuraError::OpenSetNotInTopology(x));
            }
        }
        Ok(AuraSpace::from_parts(space, aura))
    }

    /// Skips validation; used where the construction guarantees it.
    pub(crate) fn from_parts(space: Arc<FiniteTopSpace>, aura: Vec<PointSet>) -> Self {
        let hulls = (0..aura.len())
            .map(|x| graph::reach(&aura, PointSet::singleton(x)))
            .collect();
        AuraSpace { space, aura, hulls }
    }

    pub fn space(&self) -> &Arc<FiniteTopSpace> {
        &self.space
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.space.universe()
    }

    pub fn len(&self) -> usize {
        self.aura.len()
    }

    pub fn is_empty(&self) -> bool {
        self.aura.is_empty()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.aura.len())
    }

    pub fn aura(&self, x: usize) -> PointSet {
        self.aura[x]
    }

    pub fn auras(&self) -> &[PointSet] {
        &self.aura
    }

    /// Least 𝔞-open set containing `x`.
    pub fn hull(&self, x: usize) -> PointSet {
        self.hulls[x]
    }

    pub fn hulls(&self) -> &[PointSet] {
        &self.hulls
    }

    /// Least 𝔞-open superset of `a`.
    pub fn hull_of(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |acc, x| acc | self.hulls[x])
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.aura[x].intersects(a))
            .collect()
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.aura[x].is_subset(a)).collect()
    }

    pub fn derived_set(&self, a: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.aura[x].intersects(a.without(x)))
            .collect()
    }

    pub fn is_a_open(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.aura[x].is_subset(a))
    }

    pub fn is_a_closed(&self, a: PointSet) -> bool {
        self.is_a_open(a.complement(self.len()))
    }

    pub fn tau_a(&self) -> TopologyFamily {
        TopologyFamily::from_minimal_opens(self.universe().clone(), &self.hulls)
    }

    /// `(X, τ_𝔞)` as a space in its own right.
    pub fn tau_a_space(&self) -> FiniteTopSpace {
        FiniteTopSpace::from_minimal_opens(self.universe().clone(), self.hulls.clone())
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.len()).all(|x| {
            self.aura[x]
                .iter()
                .all(|y| self.aura[y].is_subset(self.aura[x]))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|x| self.aura[x].iter().all(|y| self.aura[y].contains(x)))
    }

    pub fn classify(&self) -> AuraClassification {
        let full = self.full();
        AuraClassification {
            transitive: self.is_transitive(),
            symmetric: self.is_symmetric(),
            trivial: self.aura.iter().all(|&a| a == full),
            discrete: self
                .aura
                .iter()
                .enumerate()
                .all(|(x, &a)| a == PointSet::singleton(x)),
        }
    }

    /// `cl_𝔞(cl_𝔞(A)) = cl_𝔞(A)` for every `A`. Additivity reduces this to
    /// singletons.
    pub fn is_closure_idempotent(&self) -> bool {
        (0..self.len()).all(|x| {
            let c = self.closure(PointSet::singleton(x));
            self.closure(c) == c
        })
    }

    /// Separation axioms of `(X, τ_𝔞)`, read off the hulls.
    pub fn separation_axioms(&self) -> SeparationAxioms {
        let n = self.len();
        let mut ax = SeparationAxioms {
            t0: true,
            t1: true,
            t2: true,
        };
        for x in 0..n {
            for y in (x + 1)..n {
                let y_near_x = self.hulls[x].contains(y);
                let x_near_y = self.hulls[y].contains(x);
                if y_near_x && x_near_y {
                    ax.t0 = false;
                }
                if y_near_x || x_near_y {
                    ax.t1 = false;
                }
                if self.hulls[x].intersects(self.hulls[y]) {
                    ax.t2 = false;
                }
            }
        }
        ax
    }

    /// Single-line text descriptor used in reports and law failures.
    pub fn describe(&self) -> String {
        let u = self.universe();
        let points: Vec<&str> = u.names().iter().map(String::as_str).collect();
        let aura: Vec<String> = (0..self.len())
            .map(|x| format!("{}:{}", u.name(x), u.format_set(self.aura[x])))
            .collect();
        format!(
            "points=[{}] opens={} aura=[{}]",
            points.join(","),
            u.format_family(self.space.topology().opens()),
            aura.join(" ")
        )
    }
}

impl fmt::Debug for AuraSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// True iff the preimage of every 𝔟-open set is 𝔞-open.
///
/// Between finite Alexandrov topologies this is monotonicity on hulls:
/// `f(h_𝔞(x)) ⊆ h_𝔟(f(x))` for every `x`.
pub fn is_a_continuous(f: &FiniteMap, src: &AuraSpace, dst: &AuraSpace) -> Result<bool, MapError> {
    if f.source_len() != src.len() || f.target_len() != dst.len() {
        return Err(MapError::SizeMismatch {
            source_len: f.source_len(),
            target_len: f.target_len(),
            src: src.len(),
            dst: dst.len(),
        });
    }
    Ok((0..src.len()).all(|x| f.image(src.hull(x)).is_subset(dst.hull(f.apply(x)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(s: &AuraSpace, labels: &[&str]) -> PointSet {
        s.universe().set_of(labels).unwrap()
    }

    fn family(s: &AuraSpace, groups: &[&[&str]]) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = groups.iter().map(|g| set(s, g)).collect();
        v.sort();
        v
    }

    #[test]
    fn closure_interior_derived_examples() {
        let s1 = fixtures::s1();
        assert_eq!(s1.closure(set(&s1, &["1"])), set(&s1, &["1", "2"]));
        assert_eq!(
            s1.interior(set(&s1, &["1", "2", "3"])),
            set(&s1, &["1", "2"])
        );
        assert_eq!(s1.derived_set(set(&s1, &["1"])), set(&s1, &["2"]));

        let s4 = fixtures::s4();
        assert_eq!(s4.closure(set(&s4, &["a"])), s4.full());

        let s2 = fixtures::s2();
        assert_eq!(s2.interior(set(&s2, &["a", "b"])), set(&s2, &["a"]));

        let s3 = fixtures::s3();
        assert_eq!(s3.derived_set(set(&s3, &["2"])), set(&s3, &["0", "1"]));

        for s in [&s1, &s2, &s3, &s4] {
            assert_eq!(s.closure(PointSet::EMPTY), PointSet::EMPTY);
            assert_eq!(s.derived_set(PointSet::EMPTY), PointSet::EMPTY);
            assert_eq!(s.interior(s.full()), s.full());
            assert!(s.is_a_open(PointSet::EMPTY) && s.is_a_closed(PointSet::EMPTY));
        }
    }

    #[test]
    fn a_open_examples() {
        let s5 = fixtures::s5();
        assert!(s5.is_a_open(set(&s5, &["a", "b"])));
        let s2 = fixtures::s2();
        assert!(!s2.is_a_open(set(&s2, &["a", "b"])));
    }

    #[test]
    fn tau_a_examples() {
        let s5 = fixtures::s5();
        assert_eq!(
            s5.tau_a().opens(),
            family(
                &s5,
                &[
                    &[],
                    &["a"],
                    &["a", "b"],
                    &["a", "b", "c"],
                    &["a", "b", "c", "d"]
                ]
            )
        );
        let s1 = fixtures::s1();
        assert_eq!(
            s1.tau_a().opens(),
            family(
                &s1,
                &[
                    &[],
                    &["1", "2"],
                    &["3", "4"],
                    &["5"],
                    &["1", "2", "3", "4"],
                    &["1", "2", "5"],
                    &["3", "4", "5"],
                    &["1", "2", "3", "4", "5"],
                ]
            )
        );
        let s2 = fixtures::s2();
        assert_eq!(s2.tau_a().opens(), &[PointSet::EMPTY, s2.full()]);
    }

    #[test]
    fn tau_a_matches_subset_scan() {
        for s in fixtures::all_single() {
            let scanned: Vec<PointSet> = {
                let mut v: Vec<_> = s.full().subsets().filter(|&a| s.is_a_open(a)).collect();
                v.sort();
                v
            };
            assert_eq!(s.tau_a().opens(), scanned.as_slice(), "{s:?}");
        }
    }

    #[test]
    fn classify_examples() {
        assert!(fixtures::s3().classify().transitive);
        assert!(!fixtures::s2().classify().transitive);
        let c1 = fixtures::s1().classify();
        assert!(c1.symmetric && c1.transitive);
        let c4 = fixtures::s4().classify();
        assert!(c4.trivial && c4.transitive && c4.symmetric && !c4.discrete);
    }

    #[test]
    fn validation_rejects_bad_auras() {
        let s = fixtures::s4();
        let space = s.space().clone();
        let bad = ScopeFunction::new(vec![PointSet::singleton(1), s.full(), s.full()]);
        assert_eq!(
            AuraSpace::new(space.clone(), bad).unwrap_err(),
            AuraError::PointNotInOwnAura(0)
        );
        // {b} is not τ-open in S4
        let bad = ScopeFunction::new(vec![s.full(), PointSet::singleton(1), s.full()]);
        assert_eq!(
            AuraSpace::new(space.clone(), bad).unwrap_err(),
            AuraError::OpenSetNotInTopology(1)
        );
        // discrete aura needs singletons to be open
        assert!(AuraSpace::new(space, ScopeFunction::discrete(3)).is_err());
    }

    #[test]
    fn continuity_examples() {
        let s3 = fixtures::s3();
        assert!(is_a_continuous(&FiniteMap::identity(3), &s3, &s3).unwrap());
        let s1 = fixtures::s1();
        for v in 0..3 {
            let c = FiniteMap::constant(5, 3, v).unwrap();
            assert!(is_a_continuous(&c, &s1, &s3).unwrap());
        }
        let swap = FiniteMap::new(vec![2, 1, 0], 3, 3).unwrap();
        assert!(!is_a_continuous(&swap, &s3, &s3).unwrap());
        assert!(is_a_continuous(&swap, &s1, &s3).is_err());
    }

    #[test]
    fn continuity_matches_preimage_definition() {
        let spaces = fixtures::all_single();
        for src in spaces.iter().filter(|s| s.len() <= 4) {
            for dst in spaces.iter().filter(|s| s.len() <= 3) {
                let tau_b = dst.tau_a();
                for f in FiniteMap::all(src.len(), dst.len()) {
                    let direct = tau_b.opens().iter().all(|&v| src.is_a_open(f.preimage(v)));
                    assert_eq!(is_a_continuous(&f, src, dst).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn separation_examples() {
        let d = fixtures::discrete_pair();
        assert!(d.separation_axioms().t2);
        let s2 = fixtures::s2();
        assert!(!s2.separation_axioms().t0);
        let s3 = fixtures::s3().separation_axioms();
        assert!(s3.t0 && !s3.t1);
    }

    #[test]
    fn separation_matches_open_set_quantifiers() {
        for s in fixtures::all_single() {
            let opens = s.tau_a();
            let n = s.len();
            let sep = |x: usize, y: usize| {
                opens
                    .opens()
                    .iter()
                    .any(|u| u.contains(x) && !u.contains(y))
            };
            let mut t0 = true;
            let mut t1 = true;
            let mut t2 = true;
            for x in 0..n {
                for y in 0..n {
                    if x == y {
                        continue;
                    }
                    t0 &= sep(x, y) || sep(y, x);
                    t1 &= sep(x, y) && sep(y, x);
                    t2 &= opens.opens().iter().any(|&u| {
                        u.contains(x)
                            && opens
                                .opens()
                                .iter()
                                .any(|&v| v.contains(y) && !u.intersects(v))
                    });
                }
            }
            assert_eq!(
                s.separation_axioms(),
                SeparationAxioms { t0, t1, t2 },
                "{s:?}"
            );
        }
    }

    #[test]
    fn closure_not_idempotent_on_s2() {
        let s2 = fixtures::s2();
        let a = set(&s2, &["a"]);
        assert_ne!(s2.closure(s2.closure(a)), s2.closure(a));
        assert!(!s2.is_closure_idempotent());
        assert!(fixtures::s3().is_closure_idempotent());
    }
}
