//! Registered laws, checked exhaustively over every aura space with at most
//! three points (and over small factor pairs for the product laws).
//!
//! Each law is a plain function returning the first counterexample it meets.
//! The aura closure is reached through [`Ops`] so a harness can substitute a
//! broken operator and watch the suite catch it.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::aura::{is_a_continuous, AuraSpace, FiniteMap, ScopeFunction};
use crate::connectivity::{
    a_components, fence, find_a_separation, is_a_connected, is_a_connected_with,
    is_a_locally_connected, is_a_path_connected, SubspaceNotion,
};
use crate::constructions::{
    compress, expand, left_projection, product, product_box, product_topology_of_factors,
    right_projection, subspace,
};
use crate::covering::{
    fip_has_nonempty_intersection, is_a_compact, is_a_compact_oracle, is_a_lindelof,
    is_countably_a_compact, is_tau_compact, Cover,
};
use crate::finite_space::FiniteTopSpace;
use crate::generalized::{gen_family, GeneralizedClass};
use crate::pointset::{PointSet, Universe};
use crate::search::{enumerate_spaces, with_workers, SearchError};
use crate::sequences::{
    converges_to, find_convergent_subsequence, transitive_criterion, EvPSequence,
};
use crate::symbolic::{check_witness, sym_compactness_report, SymbolicSpace};

/// Largest space size the single-space laws range over.
pub const LAW_MAX_POINTS: usize = 3;

/// Operators a law may route through. Only the closure is swappable.
#[derive(Clone, Copy)]
pub struct Ops {
    pub closure: fn(&AuraSpace, PointSet) -> PointSet,
}

impl Ops {
    pub fn standard() -> Self {
        Ops {
            closure: |s, a| s.closure(a),
        }
    }

    /// A broken closure that forgets `A` itself and returns only `d_𝔞(A)`.
    pub fn faulty() -> Self {
        Ops {
            closure: |s, a| s.derived_set(a),
        }
    }

    fn cl(&self, s: &AuraSpace, a: PointSet) -> PointSet {
        (self.closure)(s, a)
    }
}

impl Default for Ops {
    fn default() -> Self {
        Ops::standard()
    }
}

type Outcome = Result<(), String>;

#[derive(Clone, Copy)]
pub enum Check {
    /// Runs on every space with at most [`LAW_MAX_POINTS`] points.
    Space(fn(&Ops, &AuraSpace) -> Outcome),
    /// Runs on ordered factor pairs of sizes 2×2, 2×3 and 3×2.
    Product(fn(&Ops, &AuraSpace, &AuraSpace) -> Outcome),
    /// Runs on ordered pairs `(X, Y)` with `|Y| ≤ |X| ≤ 3`.
    Maps(fn(&Ops, &AuraSpace, &AuraSpace) -> Outcome),
    /// Runs once.
    Once(fn(&Ops) -> Outcome),
}

#[derive(Clone, Copy)]
pub struct Law {
    pub name: &'static str,
    pub statement: &'static str,
    pub check: Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn fmt(s: &AuraSpace, a: PointSet) -> String {
    s.universe().format_set(a)
}

fn all_subsets(s: &AuraSpace) -> impl Iterator<Item = PointSet> {
    s.full().subsets()
}

fn cech_axioms(ops: &Ops, s: &AuraSpace) -> Outcome {
    ensure!(ops.cl(s, PointSet::EMPTY).is_empty(), "cl(∅) ≠ ∅");
    for a in all_subsets(s) {
        let ca = ops.cl(s, a);
        ensure!(a.is_subset(ca), "A ⊄ cl(A) at A={}", fmt(s, a));
        for b in all_subsets(s) {
            let cb = ops.cl(s, b);
            ensure!(
                ops.cl(s, a | b) == ca | cb,
                "cl(A∪B) ≠ cl(A)∪cl(B) at A={} B={}",
                fmt(s, a),
                fmt(s, b)
            );
            if a.is_subset(b) {
                ensure!(
                    ca.is_subset(cb),
                    "cl not monotone at A={} B={}",
                    fmt(s, a),
                    fmt(s, b)
                );
            }
        }
    }
    Ok(())
}

fn duality(ops: &Ops, s: &AuraSpace) -> Outcome {
    let n = s.len();
    for a in all_subsets(s) {
        let dual = ops.cl(s, a.complement(n)).complement(n);
        ensure!(
            s.interior(a) == dual,
            "int(A) ≠ X∖cl(X∖A) at A={}",
            fmt(s, a)
        );
    }
    Ok(())
}

fn derived_closure(ops: &Ops, s: &AuraSpace) -> Outcome {
    for a in all_subsets(s) {
        ensure!(
            ops.cl(s, a) == a | s.derived_set(a),
            "cl(A) ≠ A ∪ d(A) at A={}",
            fmt(s, a)
        );
    }
    Ok(())
}

fn derived_properties(_: &Ops, s: &AuraSpace) -> Outcome {
    ensure!(s.derived_set(PointSet::EMPTY).is_empty(), "d(∅) ≠ ∅");
    for a in all_subsets(s) {
        let da = s.derived_set(a);
        ensure!(
            s.is_a_closed(a) == da.is_subset(a),
            "A 𝔞-closed ⇎ d(A) ⊆ A at A={}",
            fmt(s, a)
        );
        for b in all_subsets(s) {
            let db = s.derived_set(b);
            if a.is_subset(b) {
                ensure!(
                    da.is_subset(db),
                    "d not monotone at A={} B={}",
                    fmt(s, a),
                    fmt(s, b)
                );
            }
            ensure!(
                s.derived_set(a | b) == da | db,
                "d(A∪B) ≠ d(A)∪d(B) at A={} B={}",
                fmt(s, a),
                fmt(s, b)
            );
        }
    }
    Ok(())
}

fn tau_a_coarser(_: &Ops, s: &AuraSpace) -> Outcome {
    let tau_a = s.tau_a();
    ensure!(tau_a.is_subfamily_of(s.space().topology()), "τ_𝔞 ⊄ τ");
    for a in all_subsets(s) {
        let definitional = a.iter().all(|x| s.aura(x).is_subset(a));
        ensure!(
            tau_a.contains(a) == definitional,
            "τ_𝔞 membership wrong at {}",
            fmt(s, a)
        );
    }
    Ok(())
}

fn transitive_base(ops: &Ops, s: &AuraSpace) -> Outcome {
    if !s.is_transitive() {
        return Ok(());
    }
    for x in 0..s.len() {
        ensure!(
            s.is_a_open(s.aura(x)),
            "𝔞({}) not 𝔞-open",
            s.universe().name(x)
        );
    }
    // every 𝔞-open set is the union of the auras of its points
    for u in s.tau_a().opens() {
        let union = u.iter().fold(PointSet::EMPTY, |acc, x| acc | s.aura(x));
        ensure!(union == *u, "auras are not a base at {}", fmt(s, *u));
    }
    for a in all_subsets(s) {
        let c = ops.cl(s, a);
        ensure!(ops.cl(s, c) == c, "cl not idempotent at A={}", fmt(s, a));
    }
    Ok(())
}

fn special_auras(_: &Ops, s: &AuraSpace) -> Outcome {
    let c = s.classify();
    if c.trivial {
        ensure!(
            s.tau_a().opens().len() <= 2,
            "trivial aura but τ_𝔞 not indiscrete"
        );
    }
    if c.discrete {
        ensure!(
            s.tau_a() == *s.space().topology(),
            "discrete aura but τ_𝔞 ≠ τ"
        );
    }
    Ok(())
}

fn separation_chain(_: &Ops, s: &AuraSpace) -> Outcome {
    let ax = s.separation_axioms();
    ensure!(!ax.t2 || ax.t1, "T2 without T1");
    ensure!(!ax.t1 || ax.t0, "T1 without T0");
    if ax.t2 {
        for a in all_subsets(s) {
            ensure!(s.is_a_closed(a), "T2 but {} not 𝔞-closed", fmt(s, a));
        }
    }
    Ok(())
}

fn subspace_closure(ops: &Ops, s: &AuraSpace) -> Outcome {
    for y in all_subsets(s).filter(|y| !y.is_empty()) {
        let sub = subspace(s, y).map_err(|e| e.to_string())?;
        for a in y.subsets() {
            let inside = expand(ops.cl(&sub, compress(a, y)), y);
            ensure!(
                inside == ops.cl(s, a) & y,
                "cl_Y(A) ≠ cl(A) ∩ Y at Y={} A={}",
                fmt(s, y),
                fmt(s, a)
            );
        }
    }
    Ok(())
}

fn subspace_topology_inclusion(_: &Ops, s: &AuraSpace) -> Outcome {
    let transitive = s.is_transitive();
    for y in all_subsets(s).filter(|y| !y.is_empty()) {
        let sub = subspace(s, y).map_err(|e| e.to_string())?;
        let sub_tau = sub.tau_a();
        let trace: Vec<PointSet> = s.tau_a().opens().iter().map(|&u| compress(u, y)).collect();
        for &t in &trace {
            ensure!(sub_tau.contains(t), "(τ_𝔞)_Y ⊄ τ_𝔞Y at Y={}", fmt(s, y));
        }
        if transitive {
            for &u in sub_tau.opens() {
                ensure!(
                    trace.contains(&u),
                    "transitive but (τ_𝔞)_Y ≠ τ_𝔞Y at Y={}",
                    fmt(s, y)
                );
            }
        }
    }
    Ok(())
}

fn connected_implies_a_connected(_: &Ops, s: &AuraSpace) -> Outcome {
    ensure!(
        !s.space().is_connected() || is_a_connected(s, s.full()),
        "τ-connected but not 𝔞-connected"
    );
    Ok(())
}

fn two_point_discrete() -> AuraSpace {
    let u = Arc::new(Universe::numbered(2).expect("two points"));
    AuraSpace::new(
        Arc::new(FiniteTopSpace::discrete(u)),
        ScopeFunction::discrete(2),
    )
    .expect("valid")
}

fn connected_characterizations(_: &Ops, s: &AuraSpace) -> Outcome {
    let connected = is_a_connected(s, s.full());
    let n = s.len();
    let clopen = all_subsets(s)
        .filter(|&a| !a.is_empty() && a != s.full())
        .find(|&a| s.is_a_open(a) && s.is_a_closed(a));
    ensure!(
        connected == clopen.is_none(),
        "connected={connected} but proper clopen {:?}",
        clopen.map(|c| fmt(s, c))
    );
    let two = two_point_discrete();
    for f in FiniteMap::all(n, 2) {
        if is_a_continuous(&f, s, &two).map_err(|e| e.to_string())? {
            let constant = f.image(s.full()).len() <= 1;
            ensure!(
                !connected || constant,
                "connected but continuous map onto 2 is not constant"
            );
        }
    }
    if !connected {
        let nonconstant = FiniteMap::all(n, 2)
            .any(|f| f.image(s.full()).len() == 2 && is_a_continuous(&f, s, &two).unwrap_or(false));
        ensure!(
            nonconstant,
            "disconnected but every continuous map into 2 is constant"
        );
    }
    if let Some(sep) = find_a_separation(s, s.full()) {
        ensure!(
            s.is_a_open(sep.u)
                && s.is_a_open(sep.v)
                && !sep.u.intersects(sep.v)
                && (sep.u | sep.v) == s.full(),
            "separation witness is invalid"
        );
    }
    Ok(())
}

fn connected_sets(s: &AuraSpace) -> Vec<PointSet> {
    all_subsets(s).filter(|&a| is_a_connected(s, a)).collect()
}

fn connected_union(_: &Ops, s: &AuraSpace) -> Outcome {
    let sets: Vec<PointSet> = connected_sets(s)
        .into_iter()
        .filter(|a| !a.is_empty())
        .collect();
    for &a in &sets {
        for &b in &sets {
            if a.intersects(b) {
                ensure!(
                    is_a_connected(s, a | b),
                    "{} ∪ {} not connected",
                    fmt(s, a),
                    fmt(s, b)
                );
            }
            for &c in &sets {
                if !(a & b & c).is_empty() {
                    ensure!(
                        is_a_connected(s, a | b | c),
                        "{} ∪ {} ∪ {} not connected",
                        fmt(s, a),
                        fmt(s, b),
                        fmt(s, c)
                    );
                }
            }
        }
    }
    Ok(())
}

fn component_properties(_: &Ops, s: &AuraSpace) -> Outcome {
    let parts = a_components(s);
    let mut union = PointSet::EMPTY;
    for (i, &b) in parts.blocks.iter().enumerate() {
        ensure!(!b.is_empty(), "empty component");
        ensure!(!union.intersects(b), "components overlap");
        union |= b;
        ensure!(
            is_a_connected(s, b),
            "component {} not connected",
            fmt(s, b)
        );
        ensure!(
            is_a_connected_with(s, b, SubspaceNotion::TauASubspace),
            "component {} not τ_𝔞-connected",
            fmt(s, b)
        );
        ensure!(s.is_a_closed(b), "component {} not 𝔞-closed", fmt(s, b));
        let _ = i;
    }
    ensure!(union == s.full(), "components do not cover X");
    for a in connected_sets(s) {
        if let Some(x) = a.first() {
            let block = parts.block_of(x).expect("partition covers X");
            ensure!(
                a.is_subset(block),
                "connected {} escapes its component",
                fmt(s, a)
            );
        }
    }
    Ok(())
}

fn locally_connected_components(_: &Ops, s: &AuraSpace) -> Outcome {
    if is_a_locally_connected(s) {
        for b in a_components(s).blocks {
            ensure!(
                s.is_a_open(b) && s.is_a_closed(b),
                "component {} not clopen",
                fmt(s, b)
            );
        }
    }
    Ok(())
}

fn transitive_locally_connected(_: &Ops, s: &AuraSpace) -> Outcome {
    let auras_connected = (0..s.len()).all(|x| is_a_connected(s, s.aura(x)));
    let local = is_a_locally_connected(s);
    if s.is_transitive() && auras_connected {
        ensure!(
            local,
            "transitive with connected auras but not locally connected"
        );
    }
    if s.is_transitive() && s.is_symmetric() {
        ensure!(
            local == auras_connected,
            "symmetric transitive: local ⇎ auras connected"
        );
    }
    Ok(())
}

fn path_implies_connected(_: &Ops, s: &AuraSpace) -> Outcome {
    let path = is_a_path_connected(s);
    let connected = is_a_connected(s, s.full());
    ensure!(!path || connected, "path-connected but not connected");
    ensure!(
        path == connected,
        "connected but no fence (finite equivalence broken)"
    );
    for x in 0..s.len() {
        for y in 0..s.len() {
            if let Some(f) = fence(s, x, y) {
                ensure!(
                    f.first() == Some(&x) && f.last() == Some(&y),
                    "malformed fence"
                );
                for w in f.windows(2) {
                    ensure!(
                        s.hull(w[0]).contains(w[1]) || s.hull(w[1]).contains(w[0]),
                        "fence step not comparable"
                    );
                }
            }
        }
    }
    Ok(())
}

fn sequences_up_to(n: usize, max_len: usize, min_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 0..=max_len {
        if len >= min_len {
            out.extend(frontier.iter().cloned());
        }
        frontier = frontier
            .iter()
            .flat_map(|p| {
                (0..n).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn transitive_convergence(_: &Ops, s: &AuraSpace) -> Outcome {
    if !s.is_transitive() || s.is_empty() {
        return Ok(());
    }
    let n = s.len();
    for prefix in sequences_up_to(n, 2, 0) {
        for cycle in sequences_up_to(n, 3, 1) {
            let q = EvPSequence::new(prefix.clone(), cycle).map_err(|e| e.to_string())?;
            for x in 0..n {
                ensure!(
                    converges_to(s, &q, x) == transitive_criterion(s, &q, x),
                    "convergence ⇎ criterion for {} at {}",
                    q.display(s.universe()),
                    s.universe().name(x)
                );
            }
            let sub = find_convergent_subsequence(s, &q).map_err(|e| e.to_string())?;
            let r = sub.subsequence_rule;
            let constant = EvPSequence::constant(q.term(r.start));
            ensure!(
                transitive_criterion(s, &constant, sub.witness_point),
                "subsequence witness fails the criterion"
            );
        }
    }
    Ok(())
}

fn fip_equivalence(_: &Ops, s: &AuraSpace) -> Outcome {
    let closed: Vec<PointSet> = all_subsets(s).filter(|&a| s.is_a_closed(a)).collect();
    let mut every_fip_meets = true;
    for mask in 0u32..(1 << closed.len()) {
        let family: Vec<PointSet> = (0..closed.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| closed[i])
            .collect();
        let out = fip_has_nonempty_intersection(s, &family).map_err(|e| e.to_string())?;
        if out.fip_holds && !out.intersection_nonempty {
            every_fip_meets = false;
        }
    }
    ensure!(
        is_a_compact(s, s.full()) == (every_fip_meets || s.is_empty()),
        "𝔞-compact ⇎ FIP families meet"
    );
    Ok(())
}

fn compact_chain(_: &Ops, s: &AuraSpace) -> Outcome {
    let x = s.full();
    for a in all_subsets(s) {
        ensure!(
            !is_tau_compact(s, a) || is_a_compact(s, a),
            "τ-compact but not 𝔞-compact"
        );
        ensure!(
            !is_a_compact(s, a) || is_countably_a_compact(s, a),
            "𝔞-compact but not countably"
        );
        ensure!(
            !is_a_compact(s, a) || is_a_lindelof(s, a),
            "𝔞-compact but not Lindelöf"
        );
    }
    let oracle = is_a_compact_oracle(s, x).map_err(|e| e.to_string())?;
    ensure!(
        oracle.holds == is_a_compact(s, x),
        "oracle disagrees with 𝔞-compactness"
    );
    Ok(())
}

fn generalized_hierarchy(_: &Ops, s: &AuraSpace) -> Outcome {
    let family = |c| gen_family(s, c).map_err(|e| e.to_string());
    let alpha = family(GeneralizedClass::Alpha)?;
    let semi = family(GeneralizedClass::Semi)?;
    let pre = family(GeneralizedClass::Pre)?;
    let beta = family(GeneralizedClass::Beta)?;
    for u in s.tau_a().opens() {
        ensure!(alpha.contains(u), "𝔞-open {} not α-open", fmt(s, *u));
    }
    for a in &alpha {
        ensure!(
            semi.contains(a) && pre.contains(a),
            "α-open {} not semi∧pre",
            fmt(s, *a)
        );
    }
    for a in semi.iter().chain(&pre) {
        ensure!(beta.contains(a), "semi/pre-open {} not β-open", fmt(s, *a));
    }
    Ok(())
}

fn continuity_by_preimages(_: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    let tau_b = y.tau_a();
    for f in FiniteMap::all(x.len(), y.len()) {
        let fast = is_a_continuous(&f, x, y).map_err(|e| e.to_string())?;
        let direct = tau_b.opens().iter().all(|&v| x.is_a_open(f.preimage(v)));
        ensure!(fast == direct, "continuity shortcut disagrees for {:?}", f);
    }
    Ok(())
}

fn continuous_connected(_: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    if !is_a_connected(x, x.full()) || is_a_connected(y, y.full()) {
        return Ok(());
    }
    for f in FiniteMap::all(x.len(), y.len()) {
        if f.is_surjective() && is_a_continuous(&f, x, y).map_err(|e| e.to_string())? {
            return Err(format!(
                "connected source maps onto disconnected {} by {:?}",
                y.describe(),
                f
            ));
        }
    }
    Ok(())
}

fn continuous_preserves_compact(_: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    let opens: Vec<PointSet> = y
        .tau_a()
        .opens()
        .iter()
        .copied()
        .filter(|v| !v.is_empty())
        .collect();
    let covers: Vec<Vec<PointSet>> = (0u32..(1 << opens.len()))
        .map(|mask| {
            (0..opens.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| opens[i])
                .collect::<Vec<_>>()
        })
        .filter(|c| Cover::new(y.full(), c.clone()).is_cover())
        .collect();
    for f in FiniteMap::all(x.len(), y.len()) {
        if !f.is_surjective() || !is_a_continuous(&f, x, y).map_err(|e| e.to_string())? {
            continue;
        }
        for cover in &covers {
            // pull back, extract a finite subcover upstairs, push forward
            let pulled: Vec<PointSet> = cover.iter().map(|&v| f.preimage(v)).collect();
            ensure!(
                pulled.iter().all(|&u| x.is_a_open(u)),
                "preimage not 𝔞-open"
            );
            let idx = Cover::new(x.full(), pulled)
                .minimal_subcover_indices()
                .map_err(|e| e.to_string())?;
            let pushed: Vec<PointSet> = idx.iter().map(|&i| cover[i]).collect();
            ensure!(
                Cover::new(y.full(), pushed).is_cover(),
                "pushed-forward subcover misses points of Y"
            );
        }
    }
    Ok(())
}

fn product_closure(ops: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    let p = product(x, y).map_err(|e| e.to_string())?;
    let ny = y.len();
    for a in all_subsets(x) {
        for b in all_subsets(y) {
            ensure!(
                ops.cl(&p, product_box(a, b, ny)) == product_box(ops.cl(x, a), ops.cl(y, b), ny),
                "cl(A×B) ≠ cl(A)×cl(B) at A={} B={}",
                fmt(x, a),
                fmt(y, b)
            );
        }
    }
    Ok(())
}

fn product_chain(_: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    let p = product(x, y).map_err(|e| e.to_string())?;
    let boxes = product_topology_of_factors(x, y).map_err(|e| e.to_string())?;
    let tau_p = p.tau_a();
    ensure!(boxes.is_subfamily_of(&tau_p), "(τ_𝔞)×(τ_𝔟) ⊄ τ_𝔞×𝔟");
    ensure!(
        tau_p.is_subfamily_of(p.space().topology()),
        "τ_𝔞×𝔟 ⊄ τ_X×τ_Y"
    );
    Ok(())
}

fn product_equality(_: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    if !(x.is_transitive() && y.is_transitive()) {
        return Ok(());
    }
    let p = product(x, y).map_err(|e| e.to_string())?;
    let boxes = product_topology_of_factors(x, y).map_err(|e| e.to_string())?;
    ensure!(
        p.tau_a() == boxes,
        "transitive factors but τ_𝔞×𝔟 ≠ (τ_𝔞)×(τ_𝔟)"
    );
    ensure!(
        p.is_transitive(),
        "product of transitive auras not transitive"
    );
    Ok(())
}

fn projections(_: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    let p = product(x, y).map_err(|e| e.to_string())?;
    let (nx, ny) = (x.len(), y.len());
    ensure!(
        is_a_continuous(&left_projection(nx, ny), &p, x).map_err(|e| e.to_string())?,
        "left projection not continuous"
    );
    ensure!(
        is_a_continuous(&right_projection(nx, ny), &p, y).map_err(|e| e.to_string())?,
        "right projection not continuous"
    );
    if is_a_connected(&p, p.full()) {
        ensure!(
            is_a_connected(x, x.full()) && is_a_connected(y, y.full()),
            "connected product over a disconnected factor"
        );
    }
    if is_a_compact(&p, p.full()) {
        ensure!(
            is_a_compact(x, x.full()) && is_a_compact(y, y.full()),
            "compactness lost by projection"
        );
    }
    Ok(())
}

fn product_connected(_: &Ops, x: &AuraSpace, y: &AuraSpace) -> Outcome {
    let p = product(x, y).map_err(|e| e.to_string())?;
    let factors = is_a_connected(x, x.full()) && is_a_connected(y, y.full());
    ensure!(
        factors == is_a_connected(&p, p.full()),
        "product connectedness ⇎ factors connected"
    );
    Ok(())
}

fn symbolic_chain(_: &Ops) -> Outcome {
    for m in [
        SymbolicSpace::NatSuccessor,
        SymbolicSpace::NatDiscreteAura,
        SymbolicSpace::TrivialAura("ℝ".into()),
        SymbolicSpace::CofiniteTrivial,
    ] {
        let r = sym_compactness_report(&m);
        if r.tau_compact.holds == Some(true) {
            ensure!(r.a_compact.holds, "{m}: τ-compact but not 𝔞-compact");
        }
        ensure!(
            !r.a_compact.holds || r.countably_a_compact.holds,
            "{m}: compact but not countably"
        );
        ensure!(
            !r.a_compact.holds || r.a_lindelof.holds,
            "{m}: compact but not Lindelöf"
        );
        for (name, v) in r.verdicts() {
            ensure!(
                check_witness(&m, v),
                "{m}: witness for {name} does not recheck"
            );
        }
    }
    Ok(())
}

/// Every registered law, in reporting order.
pub fn registry() -> Vec<Law> {
    use Check::*;
    vec![
        Law {
            name: "cech-axioms",
            statement: "cl_𝔞 is grounded, extensive, monotone and additive",
            check: Space(cech_axioms),
        },
        Law {
            name: "closure-interior-duality",
            statement: "int_𝔞(A) = X ∖ cl_𝔞(X ∖ A)",
            check: Space(duality),
        },
        Law {
            name: "derived-closure",
            statement: "cl_𝔞(A) = A ∪ d_𝔞(A)",
            check: Space(derived_closure),
        },
        Law {
            name: "derived-properties",
            statement: "d_𝔞 grounded, monotone, additive; A 𝔞-closed iff d_𝔞(A) ⊆ A",
            check: Space(derived_properties),
        },
        Law {
            name: "tau-a-coarser",
            statement: "τ_𝔞 ⊆ τ and matches its definition",
            check: Space(tau_a_coarser),
        },
        Law {
            name: "transitive-base",
            statement: "transitive ⇒ auras form a base of τ_𝔞 and cl_𝔞 is idempotent",
            check: Space(transitive_base),
        },
        Law {
            name: "special-auras",
            statement: "trivial ⇒ τ_𝔞 indiscrete; discrete ⇒ τ_𝔞 = τ",
            check: Space(special_auras),
        },
        Law {
            name: "separation-chain",
            statement: "𝔞-T2 ⇒ 𝔞-T1 ⇒ 𝔞-T0; 𝔞-T2 ⇒ compact sets 𝔞-closed",
            check: Space(separation_chain),
        },
        Law {
            name: "subspace-closure",
            statement: "cl_𝔞Y(A) = cl_𝔞(A) ∩ Y",
            check: Space(subspace_closure),
        },
        Law {
            name: "subspace-topology-inclusion",
            statement: "(τ_𝔞)_Y ⊆ τ_𝔞Y, with equality when transitive",
            check: Space(subspace_topology_inclusion),
        },
        Law {
            name: "connected-implies-a-connected",
            statement: "τ-connected ⇒ 𝔞-connected",
            check: Space(connected_implies_a_connected),
        },
        Law {
            name: "a-connected-characterizations",
            statement: "𝔞-connected ⇔ no proper clopen ⇔ continuous maps into 2 constant",
            check: Space(connected_characterizations),
        },
        Law {
            name: "a-connected-union",
            statement: "connected sets sharing a point have connected union",
            check: Space(connected_union),
        },
        Law {
            name: "a-component-properties",
            statement: "components are connected, maximal, 𝔞-closed and partition X",
            check: Space(component_properties),
        },
        Law {
            name: "locally-connected-components",
            statement: "locally connected ⇒ components 𝔞-clopen",
            check: Space(locally_connected_components),
        },
        Law {
            name: "transitive-locally-connected",
            statement:
                "transitive with connected auras ⇒ locally connected; iff when also symmetric",
            check: Space(transitive_locally_connected),
        },
        Law {
            name: "path-implies-connected",
            statement: "𝔞-path-connected ⇔ 𝔞-connected on finite spaces",
            check: Space(path_implies_connected),
        },
        Law {
            name: "transitive-convergence",
            statement: "transitive ⇒ (x_n →𝔞 x ⇔ eventually x_n ∈ 𝔞(x))",
            check: Space(transitive_convergence),
        },
        Law {
            name: "fip",
            statement: "𝔞-compact ⇔ 𝔞-closed families with FIP meet",
            check: Space(fip_equivalence),
        },
        Law {
            name: "compact-chain",
            statement: "τ-compact ⇒ 𝔞-compact ⇒ countably 𝔞-compact, 𝔞-Lindelöf",
            check: Space(compact_chain),
        },
        Law {
            name: "gen-compact-hierarchy",
            statement: "τ_𝔞 ⊆ α ⊆ semi ∩ pre; semi ∪ pre ⊆ β",
            check: Space(generalized_hierarchy),
        },
        Law {
            name: "aura-continuity",
            statement: "hull monotonicity ⇔ preimages of 𝔟-open sets 𝔞-open",
            check: Maps(continuity_by_preimages),
        },
        Law {
            name: "continuous-connected",
            statement: "continuous surjective images of connected spaces are connected",
            check: Maps(continuous_connected),
        },
        Law {
            name: "continuous-preserves-compact",
            statement: "continuous surjections carry finite subcovers forward",
            check: Maps(continuous_preserves_compact),
        },
        Law {
            name: "product-closure",
            statement: "cl(A × B) = cl_𝔞(A) × cl_𝔟(B)",
            check: Product(product_closure),
        },
        Law {
            name: "product-chain",
            statement: "(τ_𝔞)×(τ_𝔟) ⊆ τ_𝔞×𝔟 ⊆ τ_X × τ_Y",
            check: Product(product_chain),
        },
        Law {
            name: "product-equality",
            statement: "transitive factors ⇒ τ_𝔞×𝔟 = (τ_𝔞)×(τ_𝔟), product transitive",
            check: Product(product_equality),
        },
        Law {
            name: "projection",
            statement: "projections continuous; connectedness and compactness descend",
            check: Product(projections),
        },
        Law {
            name: "product-connected",
            statement: "product connected ⇔ both factors connected",
            check: Product(product_connected),
        },
        Law {
            name: "symbolic-compact-chain",
            statement: "compactness chain and witnesses on the infinite models",
            check: Once(symbolic_chain),
        },
    ]
}

/// The spaces each kind of law ranges over.
pub struct Universes {
    by_size: Vec<Vec<AuraSpace>>,
}

impl Universes {
    pub fn build() -> Result<Self, SearchError> {
        let by_size = (0..=LAW_MAX_POINTS)
            .map(|n| enumerate_spaces(n).map(Iterator::collect))
            .collect::<Result<_, _>>()?;
        Ok(Universes { by_size })
    }

    fn singles(&self) -> impl Iterator<Item = &AuraSpace> {
        self.by_size.iter().flatten()
    }

    fn product_pairs(&self) -> Vec<(&AuraSpace, &AuraSpace)> {
        let mut out = Vec::new();
        for (nx, ny) in [(2, 2), (2, 3), (3, 2)] {
            for x in &self.by_size[nx] {
                for y in &self.by_size[ny] {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn map_pairs(&self) -> Vec<(&AuraSpace, &AuraSpace)> {
        let mut out = Vec::new();
        for nx in 1..=LAW_MAX_POINTS {
            for ny in 1..=nx {
                for x in &self.by_size[nx] {
                    for y in &self.by_size[ny] {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }
}

fn first_failure<T: Sync>(cases: &[T], run: impl Fn(&T) -> Outcome + Sync) -> Option<String> {
    let failures: Vec<Option<String>> = cases.par_iter().map(|c| run(c).err()).collect();
    failures.into_iter().flatten().next()
}

/// Runs one law; the failure text names the witness space.
pub fn run_law(law: &Law, ops: &Ops, spaces: &Universes) -> LawOutcome {
    let (cases, failure) = match law.check {
        Check::Space(f) => {
            let singles: Vec<&AuraSpace> = spaces.singles().collect();
            let failure = first_failure(&singles, |s| {
                f(ops, s).map_err(|e| format!("{}: {e}", s.describe()))
            });
            (singles.len(), failure)
        }
        Check::Product(f) | Check::Maps(f) => {
            let pairs = match law.check {
                Check::Product(_) => spaces.product_pairs(),
                _ => spaces.map_pairs(),
            };
            let failure = first_failure(&pairs, |(x, y)| {
                f(ops, x, y).map_err(|e| format!("{} × {}: {e}", x.describe(), y.describe()))
            });
            (pairs.len(), failure)
        }
        Check::Once(f) => (1, f(ops).err()),
    };
    LawOutcome {
        name: law.name,
        statement: law.statement,
        cases,
        failure,
    }
}

pub fn run_laws(ops: &Ops, workers: usize) -> Result<Vec<LawOutcome>, SearchError> {
    let spaces = Universes::build()?;
    with_workers(workers, || {
        registry()
            .iter()
            .map(|law| run_law(law, ops, &spaces))
            .collect()
    })
}

pub fn outcomes_to_text(outcomes: &[LawOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        match &o.failure {
            None => {
                let _ = writeln!(out, "PASS law {} ({} cases)", o.name, o.cases);
            }
            Some(w) => {
                let _ = writeln!(out, "FAIL law {}: {}", o.name, w);
            }
        }
    }
    out
}
