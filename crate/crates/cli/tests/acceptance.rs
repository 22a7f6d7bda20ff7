//! Acceptance criteria, one line each. Runs without the test harness so the
//! lines are always printed; the process fails if any criterion fails.

use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use aura_topology::connectivity::{a_components, is_a_connected};
use aura_topology::constructions::{compress, product, subspace};
use aura_topology::fixtures::{self, fixture_dir};
use aura_topology::laws::{run_laws, Ops};
use aura_topology::search::{enumerate_topologies, search, PredicateExpr, SearchOptions};
use aura_topology::sequences::{a_limits, EvPSequence};
use aura_topology::symbolic::{
    sym_aura_closure, sym_compactness_report, sym_complement, sym_derived_set, sym_intersect,
    sym_union, CoverFamily, SymbolicSet, SymbolicSpace, Witness,
};
use aura_topology::{AuraSpace, FiniteTopSpace, PointSet, ScopeFunction, TopologyFamily, Universe};

const FIXTURE_BUDGET: Duration = Duration::from_secs(1);
const LAW_BUDGET: Duration = Duration::from_secs(60);
const SYMBOLIC_BUDGET: Duration = Duration::from_secs(1);
const ENUMERATION_BUDGET: Duration = Duration::from_secs(30);
const SEARCH_BUDGET: Duration = Duration::from_secs(10);
const RANDOM_SPACE_CASES: u32 = 10_000;
const RANDOM_SYMBOLIC_CASES: u32 = 1_000;
const MATRIX_WORKERS: &str = "8";

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(budget: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    if took > budget {
        Err(format!("took {took:.2?}, budget {budget:?}"))
    } else {
        Ok(took)
    }
}

fn listing(s: &AuraSpace, sets: &[PointSet]) -> String {
    s.universe().format_family(sets)
}

fn fixture_exactness() -> Outcome {
    let started = Instant::now();
    let s5 = fixtures::s5();
    check!(
        listing(&s5, s5.tau_a().opens()) == "[{} {a} {a,b} {a,b,c} {a,b,c,d}]",
        "tau_a(S5) = {}",
        listing(&s5, s5.tau_a().opens())
    );
    let s1 = fixtures::s1();
    check!(
        listing(&s1, s1.tau_a().opens())
            == "[{} {5} {1,2} {3,4} {1,2,5} {3,4,5} {1,2,3,4} {1,2,3,4,5}]",
        "tau_a(S1) = {}",
        listing(&s1, s1.tau_a().opens())
    );
    check!(
        listing(&s1, &a_components(&s1).blocks) == "[{1,2} {3,4} {5}]",
        "components(S1) wrong"
    );
    let s2 = fixtures::s2();
    check!(
        listing(&s2, s2.tau_a().opens()) == "[{} {a,b,c}]",
        "tau_a(S2) wrong"
    );
    check!(!s2.classify().transitive, "S2 reported transitive");
    let y = s2.universe().set_of(["a", "b"]).unwrap();
    let sub = subspace(&s2, y).map_err(|e| e.to_string())?;
    check!(sub.aura(1) == PointSet::singleton(1), "aura_Y(b) ≠ {{b}}");
    check!(
        listing(&sub, sub.tau_a().opens()) == "[{} {b} {a,b}]",
        "tau of subspace wrong"
    );
    let trace: Vec<PointSet> = s2.tau_a().opens().iter().map(|&o| compress(o, y)).collect();
    let sub_tau = sub.tau_a();
    check!(
        trace.iter().all(|&t| sub_tau.contains(t))
            && sub_tau.opens().iter().any(|o| !trace.contains(o)),
        "trace of tau_a not strictly inside"
    );
    let p = product(&fixtures::s7_x(), &fixtures::s7_y()).map_err(|e| e.to_string())?;
    check!(
        listing(&p, p.tau_a().opens())
            == "[{} {a|1,b|1,c|1} {a|2,b|2,c|2} {a|1,a|2,b|1,b|2,c|1,c|2}]",
        "S7 product tau = {}",
        listing(&p, p.tau_a().opens())
    );
    let p = product(&fixtures::product_strict_x(), &fixtures::product_strict_y())
        .map_err(|e| e.to_string())?;
    check!(
        listing(&p, p.tau_a().opens()) == "[{} {a|1,a|2,b|1,b|2}]",
        "trivial product tau wrong"
    );
    let s3 = fixtures::s3();
    for (cycle, expected) in [
        (vec![2], "{0,1,2}"),
        (vec![1, 2], "{0,1}"),
        (vec![0], "{0}"),
    ] {
        let q = EvPSequence::new(Vec::new(), cycle.clone()).unwrap();
        let got = s3.universe().format_set(a_limits(&s3, &q));
        check!(got == expected, "limits of {cycle:?} = {got}");
    }
    let s4 = fixtures::s4();
    check!(
        is_a_connected(&s4, s4.full()) && !s4.space().is_connected(),
        "S4 connectedness wrong"
    );
    let took = within(FIXTURE_BUDGET, started)?;
    Ok(format!("catalog values exact in {took:.2?}"))
}

fn aura_binary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aura"))
        .args(args)
        .output()
        .expect("aura binary runs")
}

fn law_suite() -> Outcome {
    let started = Instant::now();
    let outcomes = run_laws(&Ops::standard(), 1).map_err(|e| e.to_string())?;
    let took = within(LAW_BUDGET, started)?;
    if let Some(f) = outcomes.iter().find(|o| !o.passed()) {
        return Err(format!(
            "law {} failed: {}",
            f.name,
            f.failure.as_deref().unwrap_or("")
        ));
    }
    let faulty = aura_binary(&["verify-paper", "--inject-fault"]);
    let text = String::from_utf8_lossy(&faulty.stdout);
    check!(
        faulty.status.code() == Some(1),
        "fault injection exit {:?}",
        faulty.status.code()
    );
    check!(
        text.contains("FAIL law derived-closure"),
        "fault injection did not name derived-closure"
    );
    let missing = aura_binary(&["verify-paper", "--fixtures", "/nonexistent/catalog"]);
    check!(
        missing.status.code() == Some(2),
        "missing catalog exit {:?}",
        missing.status.code()
    );
    let cases: usize = outcomes.iter().map(|o| o.cases).sum();
    Ok(format!(
        "{} laws, {cases} cases, single worker in {took:.2?}; injected fault caught",
        outcomes.len()
    ))
}

fn symbolic_separations() -> Outcome {
    let started = Instant::now();
    let succ = sym_compactness_report(&SymbolicSpace::NatSuccessor);
    let trivial = sym_compactness_report(&SymbolicSpace::TrivialAura("ℝ".into()));
    let discrete = sym_compactness_report(&SymbolicSpace::NatDiscreteAura);
    within(SYMBOLIC_BUDGET, started)?;
    let mut problems = Vec::new();
    let tail_witness = Witness::NoFiniteSubcover {
        family: CoverFamily::Tails,
    };
    if succ.a_compact.holds || succ.a_compact.witness != tail_witness {
        problems.push(format!(
            "NatSuccessor aCompact: expected false with tail-cover witness, got {} ({})",
            succ.a_compact.holds, succ.a_compact.witness
        ));
    }
    if succ.countably_a_compact.holds {
        problems.push(format!(
            "NatSuccessor countablyACompact: expected false, got true ({})",
            succ.countably_a_compact.witness
        ));
    }
    if !succ.a_limit_point_compact.holds || !succ.a_sequentially_compact.holds {
        problems.push("NatSuccessor limit-point/sequential compactness should hold".into());
    }
    let all_trivial = trivial.verdicts().iter().all(|(_, v)| v.holds);
    if !all_trivial || trivial.tau_compact.holds != Some(false) {
        problems.push("TrivialAura(ℝ) should be all-compact and τ-noncompact".into());
    }
    if discrete.a_compact.holds || discrete.a_limit_point_compact.holds {
        problems.push("NatDiscreteAura should be neither 𝔞-compact nor limit point compact".into());
    }
    if problems.is_empty() {
        Ok("NatSuccessor, TrivialAura(ℝ), NatDiscreteAura verdicts exact".into())
    } else {
        Err(problems.join("; "))
    }
}

/// Every family of subsets of an `n`-set containing ∅ and X and closed under
/// pairwise unions and intersections.
fn brute_force_topology_count(n: usize) -> usize {
    let full = (1u64 << n) - 1;
    let inner: Vec<u64> = (1..full).collect();
    let mut count = 0;
    for mask in 0u64..(1 << inner.len()) {
        let mut fam: Vec<u64> = vec![0, full];
        fam.extend(
            (0..inner.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| inner[i]),
        );
        let closed = fam.iter().all(|&a| {
            fam.iter()
                .all(|&b| fam.contains(&(a | b)) && fam.contains(&(a & b)))
        });
        if closed {
            count += 1;
        }
    }
    if n == 0 {
        1
    } else {
        count
    }
}

fn enumeration_counts() -> Outcome {
    let started = Instant::now();
    let counts: Vec<usize> = (0..=4)
        .map(|n| enumerate_topologies(n).map(|t| t.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    check!(counts == [1, 1, 4, 29, 355], "counts {counts:?}");
    for (n, &count) in counts.iter().enumerate().take(4) {
        let oracle = brute_force_topology_count(n);
        check!(oracle == count, "oracle {oracle} ≠ {} at n={n}", count);
    }
    let four = enumerate_topologies(4).map_err(|e| e.to_string())?;
    let u = Arc::new(Universe::numbered(4).unwrap());
    let mut seen = std::collections::HashSet::new();
    for t in &four {
        let family = t.topology().opens().to_vec();
        let again =
            TopologyFamily::validate(u.clone(), family.clone()).map_err(|e| e.to_string())?;
        check!(
            again.opens() == family.as_slice(),
            "n=4 topology not canonical"
        );
        check!(seen.insert(family), "duplicate topology at n=4");
    }
    let took = within(ENUMERATION_BUDGET, started)?;
    Ok(format!(
        "1,1,4,29,355 with oracle agreement at n≤3 in {took:.2?}"
    ))
}

fn search_reproductions() -> Outcome {
    let mut notes = Vec::new();
    for (expr, want) in [
        ("aConnected & !tauConnected", true),
        ("!transitive & subspaceStrict", true),
        ("!clIdempotent", true),
        ("aConnected & !aPathConnected", false),
    ] {
        let started = Instant::now();
        let e = PredicateExpr::parse(expr).map_err(|e| e.to_string())?;
        let report = search(3, &e, SearchOptions::default()).map_err(|e| e.to_string())?;
        within(SEARCH_BUDGET, started).map_err(|e| format!("{expr}: {e}"))?;
        let found = !report.witnesses.is_empty();
        check!(found == want, "{expr}: witness found = {found}");
        notes.push(format!(
            "{expr}: {}",
            if found { "witness" } else { "none" }
        ));
    }
    Ok(notes.join(", "))
}

fn random_space() -> impl Strategy<Value = (AuraSpace, PointSet, PointSet)> {
    (1usize..=6)
        .prop_flat_map(|n| {
            let full = (1u64 << n) - 1;
            (
                Just(n),
                prop::collection::vec(0..=full, 0..6),
                prop::collection::vec(0..=full, n),
                0..=full,
                0..=full,
            )
        })
        .prop_map(|(n, subbasis, extra, a, b)| {
            let u = Arc::new(Universe::numbered(n).unwrap());
            let space =
                FiniteTopSpace::generate(u, subbasis.into_iter().map(PointSet::from_bits)).unwrap();
            let aura = (0..n)
                .map(|x| {
                    PointSet::from_bits(extra[x])
                        .iter()
                        .fold(space.minimal_open(x), |acc, y| acc | space.minimal_open(y))
                })
                .collect();
            let s = AuraSpace::new(Arc::new(space), ScopeFunction::new(aura)).unwrap();
            (s, PointSet::from_bits(a), PointSet::from_bits(b))
        })
}

fn symbolic_triple() -> impl Strategy<Value = (SymbolicSet, SymbolicSet, SymbolicSet)> {
    let set = (
        prop::collection::btree_set(1u64..25, 0..8),
        prop::option::of(1u64..30),
    )
        .prop_map(|(f, t)| SymbolicSet::new(f, t).unwrap());
    (set.clone(), set.clone(), set)
}

fn property_suites() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: RANDOM_SPACE_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&random_space(), |(s, a, b)| {
            let n = s.len();
            let (ca, cb) = (s.closure(a), s.closure(b));
            let by_def: PointSet = (0..n).filter(|&x| s.aura(x).intersects(a)).collect();
            prop_assert_eq!(ca, by_def);
            prop_assert!(s.closure(PointSet::EMPTY).is_empty() && a.is_subset(ca));
            prop_assert_eq!(s.closure(a | b), ca | cb);
            prop_assert_eq!(s.interior(a), s.closure(a.complement(n)).complement(n));
            prop_assert_eq!(ca, a | s.derived_set(a));
            prop_assert_eq!(s.derived_set(a | b), s.derived_set(a) | s.derived_set(b));
            Ok(())
        })
        .map_err(|e| format!("random spaces: {e}"))?;
    let mut runner = TestRunner::new(Config {
        cases: RANDOM_SYMBOLIC_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&symbolic_triple(), |(a, b, c)| {
            prop_assert_eq!(
                sym_intersect(&a, &sym_union(&b, &c)),
                sym_union(&sym_intersect(&a, &b), &sym_intersect(&a, &c))
            );
            prop_assert_eq!(
                sym_complement(&sym_union(&a, &b)),
                sym_intersect(&sym_complement(&a), &sym_complement(&b))
            );
            prop_assert_eq!(sym_complement(&sym_complement(&a)), a.clone());
            prop_assert!(sym_union(&a, &sym_complement(&a)).is_all());
            for m in [SymbolicSpace::NatSuccessor, SymbolicSpace::NatDiscreteAura] {
                let ca = sym_aura_closure(&m, &a);
                prop_assert!(a.is_subset(&ca));
                prop_assert_eq!(
                    sym_aura_closure(&m, &sym_union(&a, &b)),
                    sym_union(&ca, &sym_aura_closure(&m, &b))
                );
                prop_assert_eq!(ca, sym_union(&a, &sym_derived_set(&m, &a)));
            }
            Ok(())
        })
        .map_err(|e| format!("symbolic sets: {e}"))?;
    Ok(format!(
        "{RANDOM_SPACE_CASES} space triples and {RANDOM_SYMBOLIC_CASES} symbolic triples pass"
    ))
}

fn determinism() -> Outcome {
    let first = aura_binary(&["verify-paper", "--json"]);
    let second = aura_binary(&["verify-paper", "--json"]);
    check!(
        first.status.success(),
        "verify-paper exit {:?}",
        first.status.code()
    );
    check!(
        first.stdout == second.stdout,
        "verify-paper --json output differs between runs"
    );
    let one = aura_binary(&["matrix", "--size", "3", "--workers", "1"]);
    let many = aura_binary(&["matrix", "--size", "3", "--workers", MATRIX_WORKERS]);
    check!(
        one.status.success() && many.status.success(),
        "matrix failed"
    );
    check!(
        one.stdout == many.stdout,
        "matrix output depends on worker count"
    );
    Ok(format!(
        "verify-paper and matrix byte-identical ({} bytes)",
        first.stdout.len()
    ))
}

fn main() {
    assert!(
        Path::new(fixture_dir()).is_dir(),
        "catalog directory present"
    );
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("fixture exactness", fixture_exactness),
        ("exhaustive law suite", law_suite),
        ("symbolic separations", symbolic_separations),
        ("enumeration counts", enumeration_counts),
        ("search reproductions", search_reproductions),
        ("property-based suites", property_suites),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(note) => println!("PASS criterion {} ({name}): {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
