//! 𝔞-separations, components, local and path connectedness.
//!
//! On a finite space the 𝔞-open sets are the unions of hulls, so a set is
//! 𝔞-connected exactly when the graph `x - y` for `y ∈ 𝔞(x)` is connected on
//! it. Proper subsets are judged either in the subspace aura space
//! (`𝔞_A(x) = 𝔞(x) ∩ A`, the default) or in the subspace of `τ_𝔞`, where the
//! edges are `y ∈ h(x) ∩ A`. The two notions disagree for non-transitive
//! auras.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::aura::AuraSpace;
use crate::graph;
use crate::pointset::PointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubspaceNotion {
    /// Connectedness of `(A, τ_A, 𝔞_A)`.
    #[default]
    AuraSubspace,
    /// Connectedness of `A` inside `(X, τ_𝔞)`.
    TauASubspace,
}

impl SubspaceNotion {
    pub fn as_str(self) -> &'static str {
        match self {
            SubspaceNotion::AuraSubspace => "aura-subspace",
            SubspaceNotion::TauASubspace => "tau-a-subspace",
        }
    }
}

impl fmt::Display for SubspaceNotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubspaceNotion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "aura-subspace" | "aura" => Ok(SubspaceNotion::AuraSubspace),
            "tau-a-subspace" | "tau-a" => Ok(SubspaceNotion::TauASubspace),
            _ => Err(format!(
                "unknown subspace notion `{s}` (expected aura-subspace or tau-a-subspace)"
            )),
        }
    }
}

/// Two nonempty disjoint sets, open in the relevant subspace, covering it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Separation {
    pub u: PointSet,
    pub v: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<PointSet>,
}

impl ComponentPartition {
    pub fn block_of(&self, x: usize) -> Option<PointSet> {
        self.blocks.iter().copied().find(|b| b.contains(x))
    }
}

fn adjacency(s: &AuraSpace, notion: SubspaceNotion) -> &[PointSet] {
    match notion {
        SubspaceNotion::AuraSubspace => s.auras(),
        SubspaceNotion::TauASubspace => s.hulls(),
    }
}

/// Components of `a` under the chosen notion, ordered by least member.
pub fn components_of(s: &AuraSpace, a: PointSet, notion: SubspaceNotion) -> Vec<PointSet> {
    graph::components(adjacency(s, notion), a)
}

pub fn find_a_separation(s: &AuraSpace, a: PointSet) -> Option<Separation> {
    find_a_separation_with(s, a, SubspaceNotion::default())
}

/// `U` is the component of the least point of `a`, `V` the rest.
pub fn find_a_separation_with(
    s: &AuraSpace,
    a: PointSet,
    notion: SubspaceNotion,
) -> Option<Separation> {
    let blocks = components_of(s, a & s.full(), notion);
    if blocks.len() < 2 {
        return None;
    }
    let u = blocks[0];
    Some(Separation {
        u,
        v: (a & s.full()) - u,
    })
}

pub fn is_a_connected(s: &AuraSpace, a: PointSet) -> bool {
    find_a_separation(s, a).is_none()
}

pub fn is_a_connected_with(s: &AuraSpace, a: PointSet, notion: SubspaceNotion) -> bool {
    find_a_separation_with(s, a, notion).is_none()
}

/// The 𝔞-components of `X`. Both notions agree on the whole space.
pub fn a_components(s: &AuraSpace) -> ComponentPartition {
    ComponentPartition {
        blocks: components_of(s, s.full(), SubspaceNotion::default()),
    }
}

/// Every hull `h(x)` is 𝔞-connected. Since `h(x)` is contained in every
/// 𝔞-open set around `x`, this is the whole condition on a finite space.
pub fn is_a_locally_connected(s: &AuraSpace) -> bool {
    s.hulls().iter().all(|&h| is_a_connected(s, h))
}

pub fn is_a_locally_connected_with(s: &AuraSpace, notion: SubspaceNotion) -> bool {
    s.hulls().iter().all(|&h| is_a_connected_with(s, h, notion))
}

/// Comparability graph of the specialization preorder of `τ_𝔞`:
/// `z ≤ w` iff `w ∈ h(z)`.
fn comparability(s: &AuraSpace) -> Vec<PointSet> {
    graph::symmetric(s.hulls(), s.full())
}

pub fn is_a_path_connected(s: &AuraSpace) -> bool {
    let full = s.full();
    match full.first() {
        None => true,
        Some(x) => graph::reach(&comparability(s), PointSet::singleton(x)) == full,
    }
}

/// Lexicographically least among the shortest fences from `x` to `y`.
pub fn fence(s: &AuraSpace, x: usize, y: usize) -> Option<Vec<usize>> {
    let adj = comparability(s);
    let n = s.len();
    if x >= n || y >= n {
        return None;
    }
    let mut dist = vec![usize::MAX; n];
    dist[y] = 0;
    let mut frontier = PointSet::singleton(y);
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = PointSet::EMPTY;
        for z in frontier.iter() {
            for w in adj[z].iter() {
                if dist[w] == usize::MAX {
                    dist[w] = d;
                    next = next.with(w);
                }
            }
        }
        frontier = next;
    }
    if dist[x] == usize::MAX {
        return None;
    }
    let mut path = vec![x];
    let mut at = x;
    while at != y {
        at = adj[at]
            .iter()
            .find(|&w| dist[w] + 1 == dist[at])
            .expect("distances decrease along a shortest path");
        path.push(at);
    }
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn separations() {
        let s1 = fixtures::s1();
        let u = s1.universe();
        let sep = find_a_separation(&s1, s1.full()).unwrap();
        assert_eq!(sep.u, u.set_of(["1", "2"]).unwrap());
        assert_eq!(sep.v, u.set_of(["3", "4", "5"]).unwrap());
        assert!(s1.is_a_open(sep.u) && s1.is_a_open(sep.v));
        assert!(find_a_separation(&fixtures::s4(), fixtures::s4().full()).is_none());
        assert!(find_a_separation(&fixtures::s6(), fixtures::s6().full()).is_none());
    }

    #[test]
    fn connectedness() {
        let s4 = fixtures::s4();
        assert!(is_a_connected(&s4, s4.full()));
        assert!(!s4.space().is_connected());
        let s1 = fixtures::s1();
        assert!(!is_a_connected(&s1, s1.full()));
        for s in fixtures::all_single() {
            for x in 0..s.len() {
                assert!(is_a_connected(&s, PointSet::singleton(x)));
            }
            assert!(is_a_connected(&s, PointSet::EMPTY));
        }
    }

    #[test]
    fn connected_subsets_of_s2_and_s3() {
        // on {a,c}: 𝔞_Y(a) = {a}, 𝔞_Y(c) = {a,c}
        let s2 = fixtures::s2();
        let ac = s2.universe().set_of(["a", "c"]).unwrap();
        assert!(is_a_connected(&s2, ac));
        let ab = s2.universe().set_of(["a", "b"]).unwrap();
        assert!(is_a_connected_with(&s2, ab, SubspaceNotion::TauASubspace));
        assert!(is_a_connected_with(&s2, ab, SubspaceNotion::AuraSubspace));
        // S3 with {0,2}: 𝔞(0) = X reaches 2 in both notions
        let s3 = fixtures::s3();
        let a = PointSet::from_indices([0, 2]);
        assert!(is_a_connected(&s3, a));
    }

    #[test]
    fn notions_disagree_somewhere() {
        // points 0,1,2 discrete; 𝔞(0) = {0,1}, 𝔞(1) = {1,2}, 𝔞(2) = {2}:
        // on {0,2} the aura subspace has no edge but h(0) = X contains 2
        use crate::aura::ScopeFunction;
        use crate::finite_space::FiniteTopSpace;
        use crate::pointset::Universe;
        use std::sync::Arc;
        let u = Arc::new(Universe::numbered(3).unwrap());
        let space = Arc::new(FiniteTopSpace::discrete(u));
        let s = AuraSpace::new(
            space,
            ScopeFunction::new(vec![
                PointSet::from_indices([0, 1]),
                PointSet::from_indices([1, 2]),
                PointSet::from_indices([2]),
            ]),
        )
        .unwrap();
        let a = PointSet::from_indices([0, 2]);
        assert!(!is_a_connected_with(&s, a, SubspaceNotion::AuraSubspace));
        assert!(is_a_connected_with(&s, a, SubspaceNotion::TauASubspace));
    }

    #[test]
    fn components() {
        let s1 = fixtures::s1();
        let u = s1.universe();
        assert_eq!(
            a_components(&s1).blocks,
            vec![
                u.set_of(["1", "2"]).unwrap(),
                u.set_of(["3", "4"]).unwrap(),
                u.set_of(["5"]).unwrap()
            ]
        );
        let s4 = fixtures::s4();
        assert_eq!(a_components(&s4).blocks, vec![s4.full()]);
        let d = fixtures::discrete_pair();
        assert_eq!(
            a_components(&d).blocks,
            vec![PointSet::singleton(0), PointSet::singleton(1)]
        );
        assert_eq!(
            a_components(&s1).block_of(4),
            Some(u.set_of(["5"]).unwrap())
        );
    }

    #[test]
    fn local_connectedness() {
        assert!(is_a_locally_connected(&fixtures::s1()));
        assert!(is_a_locally_connected(&fixtures::s3()));
        assert!(is_a_locally_connected(&fixtures::s4()));
    }

    #[test]
    fn path_connectedness() {
        let s6 = fixtures::s6();
        assert!(is_a_path_connected(&s6));
        assert_eq!(fence(&s6, 0, 1), Some(vec![0, 1]));
        assert!(is_a_path_connected(&fixtures::s4()));
        let s1 = fixtures::s1();
        assert!(!is_a_path_connected(&s1));
        assert_eq!(fence(&s1, 0, 4), None);
        assert_eq!(fence(&s1, 1, 1), Some(vec![1]));
    }

    #[test]
    fn notion_names_round_trip() {
        for n in [SubspaceNotion::AuraSubspace, SubspaceNotion::TauASubspace] {
            assert_eq!(n.as_str().parse::<SubspaceNotion>().unwrap(), n);
        }
        assert!("weird".parse::<SubspaceNotion>().is_err());
    }
}
