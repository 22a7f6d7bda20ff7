//! Exhaustive enumeration of small aura spaces, predicate search and the
//! implication matrix.
//!
//! Work is split across a rayon pool by topology index and merged back in
//! index order, so reports do not depend on the worker count. "First" always
//! means first in enumeration order: topologies in canonical order, then
//! scope functions in fiber order.

mod enumerate;
mod expr;

use std::fmt::Write as _;

use indexmap::IndexMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::aura::AuraSpace;
use crate::constructions::{product, product_topology_of_factors};
use crate::finite_space::FiniteTopSpace;

pub use enumerate::{
    aura_count, enumerate_auras, enumerate_spaces, enumerate_topologies, AuraFiber,
    MAX_ENUMERATION_SIZE, TOPOLOGY_COUNTS,
};
pub use expr::{strict_subspace, Atom, PredicateExpr, Valuation};

/// Largest size scanned exhaustively without asking.
pub const FULL_SCAN_MAX: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("size {size} is out of range (maximum {max})")]
    SizeOutOfRange { size: usize, max: usize },
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("could not start worker pool: {0}")]
    Workers(String),
}

/// Seeded random sampling of `(topology, scope function)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub seed: u64,
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub limit: usize,
    /// 0 lets rayon decide.
    pub workers: usize,
    pub sampling: Option<Sampling>,
    /// Permits an exhaustive scan above [`FULL_SCAN_MAX`].
    pub long_running: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: 1,
            workers: 0,
            sampling: None,
            long_running: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchWitness {
    pub topology_index: usize,
    pub aura_index: usize,
    pub space: String,
    pub valuation: IndexMap<&'static str, bool>,
    #[serde(skip)]
    pub aura_space: AuraSpace,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchReport {
    pub size: usize,
    pub expression: String,
    pub spaces_scanned: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<Sampling>,
    pub witnesses: Vec<SearchWitness>,
}

impl SearchReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "size: {}", self.size);
        let _ = writeln!(out, "expression: {}", self.expression);
        if let Some(s) = self.sampling {
            let _ = writeln!(out, "sampling: seed={} samples={}", s.seed, s.samples);
        }
        let _ = writeln!(out, "scanned: {}", self.spaces_scanned);
        let _ = writeln!(out, "witnesses: {}", self.witnesses.len());
        for w in &self.witnesses {
            let _ = writeln!(out, "- #{}.{} {}", w.topology_index, w.aura_index, w.space);
        }
        out
    }
}

pub(crate) fn with_workers<T: Send>(
    workers: usize,
    job: impl FnOnce() -> T + Send,
) -> Result<T, SearchError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SearchError::Workers(e.to_string()))?;
    Ok(pool.install(job))
}

fn witness(t: usize, a: usize, s: AuraSpace) -> SearchWitness {
    SearchWitness {
        topology_index: t,
        aura_index: a,
        space: s.describe(),
        valuation: Valuation::of(&s).to_map(),
        aura_space: s,
    }
}

/// `(topology index, aura index, space)`.
type Hit = (usize, usize, AuraSpace);

/// Spaces on `n` points satisfying `expr`, at most `options.limit` of them.
pub fn search(
    n: usize,
    expr: &PredicateExpr,
    options: SearchOptions,
) -> Result<SearchReport, SearchError> {
    let topologies = enumerate_topologies(n)?;
    if n > FULL_SCAN_MAX && options.sampling.is_none() && !options.long_running {
        return Err(SearchError::SizeOutOfRange {
            size: n,
            max: FULL_SCAN_MAX,
        });
    }
    let limit = options.limit;
    let (scanned, found) = match options.sampling {
        Some(sampling) => {
            let fibers: Vec<AuraFiber> = topologies.iter().map(enumerate_auras).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
            let picks: Vec<(usize, usize)> = (0..sampling.samples)
                .map(|_| {
                    let t = rng.gen_range(0..fibers.len());
                    (t, rng.gen_range(0..fibers[t].total()))
                })
                .collect();
            let hits: Vec<Option<Hit>> = with_workers(options.workers, || {
                picks
                    .par_iter()
                    .map(|&(t, a)| {
                        let s = fibers[t].get(a).expect("index drawn inside the fiber");
                        expr.eval_space(&s).then_some((t, a, s))
                    })
                    .collect()
            })?;
            (
                picks.len(),
                hits.into_iter().flatten().take(limit).collect::<Vec<_>>(),
            )
        }
        None => {
            let per_topology: Vec<(usize, Vec<Hit>)> = with_workers(options.workers, || {
                topologies
                    .par_iter()
                    .enumerate()
                    .map(|(t, space)| scan_fiber(t, space, expr, limit))
                    .collect()
            })?;
            let scanned = per_topology.iter().map(|p| p.0).sum();
            let found = per_topology
                .into_iter()
                .flat_map(|p| p.1)
                .take(limit)
                .collect::<Vec<_>>();
            (scanned, found)
        }
    };
    Ok(SearchReport {
        size: n,
        expression: expr.to_string(),
        spaces_scanned: scanned,
        sampling: options.sampling,
        witnesses: found
            .into_iter()
            .map(|(t, a, s)| witness(t, a, s))
            .collect(),
    })
}

/// Scans one fiber, stopping after `limit` hits; returns how many spaces
/// were looked at.
fn scan_fiber(
    t: usize,
    space: &FiniteTopSpace,
    expr: &PredicateExpr,
    limit: usize,
) -> (usize, Vec<Hit>) {
    let mut hits = Vec::new();
    let mut seen = 0;
    for (a, s) in enumerate_auras(space).enumerate() {
        if hits.len() >= limit {
            break;
        }
        seen += 1;
        if expr.eval_space(&s) {
            hits.push((t, a, s));
        }
    }
    (seen, hits)
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MatrixEntry {
    pub premise: &'static str,
    pub conclusion: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MatrixReport {
    pub size: usize,
    pub spaces_scanned: usize,
    pub atoms: Vec<&'static str>,
    pub entries: Vec<MatrixEntry>,
}

impl MatrixReport {
    pub fn entry(&self, premise: Atom, conclusion: Atom) -> Option<&MatrixEntry> {
        self.entries
            .iter()
            .find(|e| e.premise == premise.name() && e.conclusion == conclusion.name())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "size: {}", self.size);
        let _ = writeln!(out, "scanned: {}", self.spaces_scanned);
        for e in &self.entries {
            match &e.witness {
                None => {
                    let _ = writeln!(out, "{} => {}: holds", e.premise, e.conclusion);
                }
                Some(w) => {
                    let _ = writeln!(out, "{} => {}: fails {}", e.premise, e.conclusion, w);
                }
            }
        }
        out
    }
}

/// For every ordered pair of distinct atoms `(p, q)`: does `p ⇒ q` hold on
/// every space with `n` points, and if not, the first space with `p ∧ ¬q`.
pub fn implication_matrix(n: usize, workers: usize) -> Result<MatrixReport, SearchError> {
    if n > FULL_SCAN_MAX {
        return Err(SearchError::SizeOutOfRange {
            size: n,
            max: FULL_SCAN_MAX,
        });
    }
    let topologies = enumerate_topologies(n)?;
    let valuations: Vec<Vec<Valuation>> = with_workers(workers, || {
        topologies
            .par_iter()
            .map(|t| enumerate_auras(t).map(|s| Valuation::of(&s)).collect())
            .collect()
    })?;
    let scanned = valuations.iter().map(Vec::len).sum();
    let mut entries = Vec::new();
    for p in Atom::ALL {
        for q in Atom::ALL {
            if p == q {
                continue;
            }
            let first = valuations.iter().enumerate().find_map(|(t, fiber)| {
                fiber
                    .iter()
                    .position(|v| v.get(p) && !v.get(q))
                    .map(|a| (t, a))
            });
            let witness = first.map(|(t, a)| {
                enumerate_auras(&topologies[t])
                    .get(a)
                    .expect("index from the same fiber")
                    .describe()
            });
            entries.push(MatrixEntry {
                premise: p.name(),
                conclusion: q.name(),
                holds: witness.is_none(),
                witness,
            });
        }
    }
    Ok(MatrixReport {
        size: n,
        spaces_scanned: scanned,
        atoms: Atom::ALL.iter().map(|a| a.name()).collect(),
        entries,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProductScanReport {
    pub factor_sizes: Vec<usize>,
    pub pairs_checked: usize,
    /// First factor pair with `(τ_𝔞) × (τ_𝔟) ⊊ τ_{𝔞×𝔟}`.
    pub strict_witness: Option<(String, String)>,
}

/// Compares `τ_{𝔞×𝔟}` with `(τ_𝔞) × (τ_𝔟)` over every ordered pair of
/// spaces whose sizes are listed in `sizes`.
pub fn product_strictness_scan(
    sizes: &[usize],
    workers: usize,
) -> Result<ProductScanReport, SearchError> {
    let mut spaces = Vec::new();
    for &n in sizes {
        if n > 3 {
            return Err(SearchError::SizeOutOfRange { size: n, max: 3 });
        }
        spaces.extend(enumerate_spaces(n)?);
    }
    let firsts: Vec<Option<usize>> = with_workers(workers, || {
        spaces
            .par_iter()
            .map(|x| {
                spaces.iter().position(|y| {
                    let p = product(x, y).expect("at most 9 points");
                    let boxes = product_topology_of_factors(x, y).expect("at most 9 points");
                    p.tau_a() != boxes
                })
            })
            .collect()
    })?;
    let strict_witness = firsts
        .iter()
        .enumerate()
        .find_map(|(i, j)| j.map(|j| (spaces[i].describe(), spaces[j].describe())));
    Ok(ProductScanReport {
        factor_sizes: sizes.to_vec(),
        pairs_checked: spaces.len() * spaces.len(),
        strict_witness,
    })
}
