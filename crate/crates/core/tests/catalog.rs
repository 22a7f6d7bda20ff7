use aura_topology::connectivity::is_a_connected;
use aura_topology::fixtures;
use aura_topology::search::{
    aura_count, enumerate_topologies, implication_matrix, product_strictness_scan, search, Atom,
    PredicateExpr, SearchOptions,
};
use aura_topology::symbolic::{sym_compactness_report, SymbolicSpace};
use aura_topology::{parse_space, SpaceDocument};

#[test]
fn documents_round_trip() {
    for text in fixtures::ALL_JSON {
        let doc = SpaceDocument::parse(text).unwrap();
        let space = doc.to_space().unwrap();
        let again = SpaceDocument::from_space(&space, doc.name.clone());
        assert_eq!(again, doc);
        assert_eq!(parse_space(&again.to_json()).unwrap(), space);
    }
}

#[test]
fn topology_and_space_counts() {
    let counts: Vec<usize> = (0..=4)
        .map(|n| enumerate_topologies(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    let spaces: Vec<usize> = (0..=4)
        .map(|n| {
            enumerate_topologies(n)
                .unwrap()
                .iter()
                .map(aura_count)
                .sum()
        })
        .collect();
    assert_eq!(spaces, vec![1, 1, 9, 362, 59123]);
}

fn first_witness(expr: &str) -> Option<String> {
    let e = PredicateExpr::parse(expr).unwrap();
    search(3, &e, SearchOptions::default())
        .unwrap()
        .witnesses
        .first()
        .map(|w| w.space.clone())
}

#[test]
fn search_reproductions() {
    assert!(first_witness("aConnected & !tauConnected").is_some());
    assert!(first_witness("!transitive & subspaceStrict").is_some());
    assert!(first_witness("!clIdempotent").is_some());
    assert!(first_witness("!transitive & tauAIndiscrete").is_some());
    assert_eq!(first_witness("aConnected & !aPathConnected"), None);
}

#[test]
fn matrix_is_worker_independent() {
    let one = implication_matrix(3, 1).unwrap();
    let many = implication_matrix(3, 4).unwrap();
    assert_eq!(one.to_text(), many.to_text());
    assert!(
        !one.entry(Atom::AConnected, Atom::TauConnected)
            .unwrap()
            .holds
    );
    assert!(
        one.entry(Atom::TauConnected, Atom::AConnected)
            .unwrap()
            .holds
    );
    assert!(one.entry(Atom::AT2, Atom::AT1).unwrap().holds);
}

#[test]
fn product_scan_finds_no_strict_pair() {
    let report = product_strictness_scan(&[2, 3], 2).unwrap();
    assert_eq!(report.strict_witness, None);
    assert!(report.pairs_checked > 0);
}

#[test]
fn s4_is_a_connected_only() {
    let s4 = fixtures::s4();
    assert!(is_a_connected(&s4, s4.full()));
    assert!(!s4.space().is_connected());
}

#[test]
fn discrete_aura_on_naturals_is_not_compact() {
    let r = sym_compactness_report(&SymbolicSpace::NatDiscreteAura);
    assert!(!r.a_compact.holds);
    assert!(!r.a_limit_point_compact.holds);
    assert!(r.a_lindelof.holds);
}
