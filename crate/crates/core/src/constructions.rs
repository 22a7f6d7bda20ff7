//! Subspace and product aura spaces.
//!
//! Product points are named `x|y` and laid out x-major: the pair `(i, j)`
//! sits at index `i * |Y| + j`.

use std::sync::Arc;

use thiserror::Error;

use crate::aura::{AuraSpace, FiniteMap};
use crate::finite_space::{FiniteTopSpace, TopologyFamily};
use crate::pointset::{PointSet, Universe, UniverseError, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("a subspace needs a nonempty set of points")]
    EmptySubspace,
    #[error("subspace points are outside the universe")]
    OutsideUniverse,
    #[error("product of {0} × {1} points exceeds the supported maximum")]
    ProductTooLarge(usize, usize),
    #[error("iterated product of an empty list")]
    EmptyProduct,
    #[error(transparent)]
    Universe(#[from] UniverseError),
}

/// Renumbers the members of `set ∩ within` to positions inside `within`.
pub fn compress(set: PointSet, within: PointSet) -> PointSet {
    within
        .iter()
        .enumerate()
        .filter(|&(_, x)| set.contains(x))
        .map(|(k, _)| k)
        .collect()
}

/// Inverse of [`compress`].
pub fn expand(set: PointSet, within: PointSet) -> PointSet {
    within
        .iter()
        .enumerate()
        .filter(|&(k, _)| set.contains(k))
        .map(|(_, x)| x)
        .collect()
}

/// `(Y, τ_Y, 𝔞_Y)` with `𝔞_Y(y) = 𝔞(y) ∩ Y`, points keeping their order.
pub fn subspace(s: &AuraSpace, y: PointSet) -> Result<AuraSpace, ConstructionError> {
    if y.is_empty() {
        return Err(ConstructionError::EmptySubspace);
    }
    if !y.is_subset(s.full()) {
        return Err(ConstructionError::OutsideUniverse);
    }
    let u = s.universe();
    let universe = Arc::new(Universe::new(y.iter().map(|x| u.name(x).to_string()))?);
    let minimal = y
        .iter()
        .map(|x| compress(s.space().minimal_open(x), y))
        .collect();
    let space = FiniteTopSpace::from_minimal_opens(universe, minimal);
    let aura = y.iter().map(|x| compress(s.aura(x), y)).collect();
    Ok(AuraSpace::from_parts(Arc::new(space), aura))
}

/// `A × B` inside a product whose right factor has `ny` points.
pub fn product_box(a: PointSet, b: PointSet, ny: usize) -> PointSet {
    let mut out = PointSet::EMPTY;
    for i in a.iter() {
        for j in b.iter() {
            out = out.with(i * ny + j);
        }
    }
    out
}

fn product_universe(sx: &AuraSpace, sy: &AuraSpace) -> Result<Arc<Universe>, ConstructionError> {
    let (nx, ny) = (sx.len(), sy.len());
    if nx * ny > MAX_POINTS {
        return Err(ConstructionError::ProductTooLarge(nx, ny));
    }
    let (ux, uy) = (sx.universe(), sy.universe());
    let names =
        (0..nx).flat_map(|i| (0..ny).map(move |j| format!("{}|{}", ux.name(i), uy.name(j))));
    Ok(Arc::new(Universe::new(names)?))
}

fn pairwise(nx: usize, ny: usize, left: &[PointSet], right: &[PointSet]) -> Vec<PointSet> {
    (0..nx)
        .flat_map(|i| (0..ny).map(move |j| (i, j)))
        .map(|(i, j)| product_box(left[i], right[j], ny))
        .collect()
}

/// Product aura space: product topology and `(𝔞 × 𝔟)(x, y) = 𝔞(x) × 𝔟(y)`.
pub fn product(sx: &AuraSpace, sy: &AuraSpace) -> Result<AuraSpace, ConstructionError> {
    let universe = product_universe(sx, sy)?;
    let (nx, ny) = (sx.len(), sy.len());
    let minimal = pairwise(
        nx,
        ny,
        sx.space().minimal_opens(),
        sy.space().minimal_opens(),
    );
    let aura = pairwise(nx, ny, sx.auras(), sy.auras());
    let space = FiniteTopSpace::from_minimal_opens(universe, minimal);
    Ok(AuraSpace::from_parts(Arc::new(space), aura))
}

/// The box topology `(τ_𝔞) × (τ_𝔟)` on `X × Y`.
pub fn product_topology_of_factors(
    sx: &AuraSpace,
    sy: &AuraSpace,
) -> Result<TopologyFamily, ConstructionError> {
    let universe = product_universe(sx, sy)?;
    let minimal = pairwise(sx.len(), sy.len(), sx.hulls(), sy.hulls());
    Ok(TopologyFamily::from_minimal_opens(universe, &minimal))
}

/// Left fold of [`product`].
pub fn iterated_product(spaces: &[AuraSpace]) -> Result<AuraSpace, ConstructionError> {
    let (first, rest) = spaces
        .split_first()
        .ok_or(ConstructionError::EmptyProduct)?;
    rest.iter()
        .try_fold(first.clone(), |acc, s| product(&acc, s))
}

pub fn left_projection(nx: usize, ny: usize) -> FiniteMap {
    let images = (0..nx * ny).map(|p| p / ny).collect();
    FiniteMap::new(images, nx * ny, nx).expect("indices are in range")
}

pub fn right_projection(nx: usize, ny: usize) -> FiniteMap {
    let images = (0..nx * ny).map(|p| p % ny).collect();
    FiniteMap::new(images, nx * ny, ny).expect("indices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aura::is_a_continuous;
    use crate::fixtures;

    fn family(u: &Universe, sets: &[&[&str]]) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = sets
            .iter()
            .map(|s| u.set_of(s.iter().copied()).unwrap())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn compress_expand_round_trip() {
        let within = PointSet::from_indices([1, 3, 4]);
        let set = PointSet::from_indices([0, 3, 4]);
        assert_eq!(compress(set, within), PointSet::from_indices([1, 2]));
        assert_eq!(expand(compress(set, within), within), set & within);
    }

    #[test]
    fn subspace_of_s2() {
        let s2 = fixtures::s2();
        let y = s2.universe().set_of(["a", "b"]).unwrap();
        let sub = subspace(&s2, y).unwrap();
        let u = sub.universe();
        assert_eq!(sub.aura(0), u.set_of(["a", "b"]).unwrap());
        assert_eq!(sub.aura(1), u.set_of(["b"]).unwrap());
        assert_eq!(
            sub.tau_a().opens(),
            family(u, &[&[], &["b"], &["a", "b"]]).as_slice()
        );
        // (τ_𝔞)_Y is only {∅, Y} because τ_𝔞 on S2 is indiscrete
        assert_eq!(s2.tau_a().opens(), &[PointSet::EMPTY, s2.full()]);
    }

    #[test]
    fn subspace_whole_and_errors() {
        let s5 = fixtures::s5();
        assert_eq!(subspace(&s5, s5.full()).unwrap(), s5);
        assert_eq!(
            subspace(&s5, PointSet::EMPTY).unwrap_err(),
            ConstructionError::EmptySubspace
        );
        assert_eq!(
            subspace(&s5, PointSet::singleton(9)).unwrap_err(),
            ConstructionError::OutsideUniverse
        );
    }

    #[test]
    fn subspace_of_s1_block_by_definition_scan() {
        let s1 = fixtures::s1();
        let y = s1.universe().set_of(["1", "2"]).unwrap();
        let sub = subspace(&s1, y).unwrap();
        let scanned: Vec<PointSet> = sub
            .full()
            .subsets()
            .filter(|a| a.iter().all(|x| sub.aura(x).is_subset(*a)))
            .collect();
        let mut scanned = scanned;
        scanned.sort();
        assert_eq!(sub.tau_a().opens(), scanned.as_slice());
        assert_eq!(scanned, vec![PointSet::EMPTY, sub.full()]);
    }

    #[test]
    fn product_chain_example() {
        let x = fixtures::s7_x();
        let y = fixtures::s7_y();
        let p = product(&x, &y).unwrap();
        let u = p.universe();
        assert_eq!(u.names()[0], "a|1");
        let expected = family(
            u,
            &[
                &[],
                &["a|1", "b|1", "c|1"],
                &["a|2", "b|2", "c|2"],
                &["a|1", "a|2", "b|1", "b|2", "c|1", "c|2"],
            ],
        );
        assert_eq!(p.tau_a().opens(), expected.as_slice());
        assert_eq!(
            product_topology_of_factors(&x, &y).unwrap().opens(),
            expected.as_slice()
        );
    }

    #[test]
    fn trivial_aura_product() {
        let p = product(&fixtures::product_strict_x(), &fixtures::product_strict_y()).unwrap();
        assert_eq!(p.tau_a().opens(), &[PointSet::EMPTY, p.full()]);
    }

    #[test]
    fn product_with_point_copies_left_factor() {
        let point = subspace(&fixtures::s6(), PointSet::singleton(0)).unwrap();
        let s5 = fixtures::s5();
        let p = product(&s5, &point).unwrap();
        assert_eq!(p.auras(), s5.auras());
        assert_eq!(p.space().topology().opens(), s5.space().topology().opens());
        assert_eq!(p.universe().name(2), "c|a");
    }

    #[test]
    fn iterated_products() {
        let s2 = fixtures::s2();
        assert_eq!(iterated_product(std::slice::from_ref(&s2)).unwrap(), s2);
        let y = fixtures::s7_y();
        assert_eq!(
            iterated_product(&[s2.clone(), y.clone()]).unwrap(),
            product(&s2, &y).unwrap()
        );
        let point = subspace(&s2, PointSet::singleton(1)).unwrap();
        let triple = iterated_product(&[point.clone(), point.clone(), point]).unwrap();
        assert_eq!(triple.len(), 1);
        assert_eq!(triple.universe().name(0), "b|b|b");
        assert_eq!(
            iterated_product(&[]).unwrap_err(),
            ConstructionError::EmptyProduct
        );
    }

    #[test]
    fn projections_are_continuous() {
        let x = fixtures::s2();
        let y = fixtures::s6();
        let p = product(&x, &y).unwrap();
        assert!(is_a_continuous(&left_projection(3, 2), &p, &x).unwrap());
        assert!(is_a_continuous(&right_projection(3, 2), &p, &y).unwrap());
    }

    #[test]
    fn oversized_product_is_rejected() {
        let s1 = fixtures::s1();
        let big = iterated_product(&[s1.clone(), s1.clone()]).unwrap();
        assert_eq!(
            product(&big, &fixtures::s1()).unwrap_err(),
            ConstructionError::ProductTooLarge(25, 5)
        );
    }
}
