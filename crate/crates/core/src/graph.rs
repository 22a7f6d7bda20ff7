//! Undirected connectivity over bit-mask adjacency.

use crate::pointset::PointSet;

/// Connected components of the undirected graph on `within` whose edges are
/// `x - y` for `y ∈ adj[x]`, both endpoints in `within`. Blocks are ordered
/// by their least member.
pub fn components(adj: &[PointSet], within: PointSet) -> Vec<PointSet> {
    let sym = symmetric(adj, within);
    let mut blocks = Vec::new();
    let mut left = within;
    while let Some(start) = left.first() {
        let block = reach(&sym, PointSet::singleton(start));
        blocks.push(block);
        left = left - block;
    }
    blocks
}

/// Symmetric closure of `adj` restricted to `within`.
pub fn symmetric(adj: &[PointSet], within: PointSet) -> Vec<PointSet> {
    let mut sym = vec![PointSet::EMPTY; adj.len()];
    for x in within.iter() {
        for y in (adj[x] & within).iter() {
            sym[x] = sym[x].with(y);
            sym[y] = sym[y].with(x);
        }
    }
    sym
}

/// Everything reachable from `start` along `adj`.
pub fn reach(adj: &[PointSet], start: PointSet) -> PointSet {
    let mut seen = start;
    let mut frontier = start;
    while !frontier.is_empty() {
        let mut next = PointSet::EMPTY;
        for x in frontier.iter() {
            next |= adj[x];
        }
        frontier = next - seen;
        seen |= next;
    }
    seen
}
