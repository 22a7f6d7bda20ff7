//! The fixture verification run: concrete claims about the catalog spaces,
//! followed by every registered law.
//!
//! Each claim compares an expected rendering against the computed one, so a
//! failure can print both. Output carries no timings and is byte-stable.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::aura::AuraSpace;
use crate::connectivity::{a_components, find_a_separation, is_a_connected, is_a_path_connected};
use crate::constructions::{compress, product, product_topology_of_factors, subspace};
use crate::covering::gen_compactness;
use crate::document::{DocumentError, SpaceDocument};
use crate::fixtures::FILES;
use crate::generalized::GeneralizedClass;
use crate::laws::{run_laws, LawOutcome, Ops};
use crate::pointset::{PointSet, Universe};
use crate::search::SearchError;
use crate::sequences::{a_limits, converges_to, transitive_criterion, EvPSequence};
use crate::symbolic::{
    sym_compactness_report, sym_is_a_open, sym_subcover_check, SymbolicSet, SymbolicSpace,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("cannot read fixture {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("fixture {path}: {source}")]
    Document {
        path: PathBuf,
        #[source]
        source: DocumentError,
    },
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// The ten catalog spaces, in [`FILES`] order.
pub struct Catalog {
    spaces: Vec<AuraSpace>,
}

impl Catalog {
    pub fn load(dir: &Path) -> Result<Self, VerifyError> {
        let spaces = FILES
            .iter()
            .map(|file| {
                let path = dir.join(file);
                let text = std::fs::read_to_string(&path).map_err(|source| VerifyError::Io {
                    path: path.clone(),
                    source,
                })?;
                SpaceDocument::parse(&text)
                    .and_then(|d| d.to_space())
                    .map_err(|source| VerifyError::Document { path, source })
            })
            .collect::<Result<_, _>>()?;
        Ok(Catalog { spaces })
    }

    fn get(&self, file: &str) -> &AuraSpace {
        let i = FILES.iter().position(|f| *f == file).expect("catalog file");
        &self.spaces[i]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub fixture: &'static str,
    pub claim: &'static str,
    pub expected: String,
    pub actual: String,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

struct Claims(Vec<ClaimOutcome>);

impl Claims {
    fn push(
        &mut self,
        fixture: &'static str,
        claim: &'static str,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.0.push(ClaimOutcome {
            fixture,
            claim,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

fn set(u: &Universe, labels: &[&str]) -> PointSet {
    u.set_of(labels.iter().copied())
        .expect("labels belong to the fixture")
}

fn family(u: &Universe, sets: &[&[&str]]) -> String {
    let mut out: Vec<PointSet> = sets.iter().map(|s| set(u, s)).collect();
    out.sort();
    u.format_family(&out)
}

fn listing(s: &AuraSpace, sets: &[PointSet]) -> String {
    s.universe().format_family(sets)
}

fn components(s: &AuraSpace) -> String {
    listing(s, &a_components(s).blocks)
}

fn auras(s: &AuraSpace) -> String {
    let u = s.universe();
    let parts: Vec<String> = (0..s.len())
        .map(|x| format!("{}:{}", u.name(x), u.format_set(s.aura(x))))
        .collect();
    parts.join(" ")
}

fn cycle(s: &AuraSpace, labels: &[&str]) -> EvPSequence {
    let idx = labels
        .iter()
        .map(|l| s.universe().index_of(l).expect("label"))
        .collect();
    EvPSequence::new(Vec::new(), idx).expect("nonempty cycle")
}

/// Evaluates every catalog claim.
pub fn fixture_claims(c: &Catalog) -> Vec<ClaimOutcome> {
    let mut out = Claims(Vec::new());

    let s1 = c.get("s1.json");
    let u = s1.universe();
    let cls = s1.classify();
    out.push(
        "S1",
        "symmetric and transitive",
        "true true",
        format!("{} {}", cls.symmetric, cls.transitive),
    );
    out.push(
        "S1",
        "tau_a",
        family(
            u,
            &[
                &[],
                &["1", "2"],
                &["3", "4"],
                &["5"],
                &["1", "2", "3", "4"],
                &["1", "2", "5"],
                &["3", "4", "5"],
                &["1", "2", "3", "4", "5"],
            ],
        ),
        listing(s1, s1.tau_a().opens()),
    );
    out.push("S1", "a-components", "[{1,2} {3,4} {5}]", components(s1));

    let s2 = c.get("s2.json");
    let u = s2.universe();
    out.push(
        "S2",
        "tau_a",
        family(u, &[&[], &["a", "b", "c"]]),
        listing(s2, s2.tau_a().opens()),
    );
    out.push("S2", "transitive", false, s2.is_transitive());
    out.push(
        "S2",
        "{a,b} a-open",
        false,
        s2.is_a_open(set(u, &["a", "b"])),
    );
    let y = set(u, &["a", "b"]);
    match subspace(s2, y) {
        Ok(sub) => {
            let uy = sub.universe();
            out.push("S2", "subspace {a,b} auras", "a:{a,b} b:{b}", auras(&sub));
            out.push(
                "S2",
                "subspace {a,b} tau_a",
                family(uy, &[&[], &["b"], &["a", "b"]]),
                listing(&sub, sub.tau_a().opens()),
            );
            let sub_tau = sub.tau_a();
            let trace: Vec<PointSet> = s2.tau_a().opens().iter().map(|&o| compress(o, y)).collect();
            let inclusion = trace.iter().all(|&t| sub_tau.contains(t));
            let strict = inclusion && sub_tau.opens().iter().any(|o| !trace.contains(o));
            out.push(
                "S2",
                "trace of tau_a strictly inside subspace tau_a",
                true,
                strict,
            );
        }
        Err(e) => out.push("S2", "subspace {a,b}", "a subspace", e),
    }

    let s3 = c.get("s3.json");
    out.push("S3", "transitive", true, s3.is_transitive());
    for (labels, expected) in [
        (&["2"][..], "{0,1,2}"),
        (&["1", "2"][..], "{0,1}"),
        (&["0"][..], "{0}"),
    ] {
        let q = cycle(s3, labels);
        let claim = match labels.len() {
            1 if labels[0] == "2" => "limits of constant 2",
            1 => "limits of constant 0",
            _ => "limits of cycle 1,2",
        };
        out.push(
            "S3",
            claim,
            expected,
            s3.universe().format_set(a_limits(s3, &q)),
        );
    }
    let q = cycle(s3, &["1", "2"]);
    out.push(
        "S3",
        "cycle 1,2 converges to 0",
        true,
        converges_to(s3, &q, 0),
    );
    out.push(
        "S3",
        "cycle 1,2 lies in aura of 1",
        true,
        transitive_criterion(s3, &q, 1),
    );

    let s4 = c.get("s4.json");
    let u = s4.universe();
    out.push(
        "S4",
        "topology",
        family(u, &[&[], &["a"], &["b", "c"], &["a", "b", "c"]]),
        listing(s4, s4.space().topology().opens()),
    );
    out.push("S4", "a-connected", true, is_a_connected(s4, s4.full()));
    out.push("S4", "tau-connected", false, s4.space().is_connected());
    out.push("S4", "a-separation", "none", separation(s4));

    let s5 = c.get("s5.json");
    let u = s5.universe();
    out.push(
        "S5",
        "tau_a",
        family(
            u,
            &[
                &[],
                &["a"],
                &["a", "b"],
                &["a", "b", "c"],
                &["a", "b", "c", "d"],
            ],
        ),
        listing(s5, s5.tau_a().opens()),
    );
    out.push(
        "S5",
        "{a,b} a-open",
        true,
        s5.is_a_open(set(u, &["a", "b"])),
    );
    out.push(
        "S5",
        "X beta-compact",
        "true",
        match gen_compactness(s5, s5.full(), GeneralizedClass::Beta) {
            Ok(b) => b.to_string(),
            Err(e) => e.to_string(),
        },
    );

    let s6 = c.get("s6.json");
    out.push("S6", "a-separation", "none", separation(s6));
    out.push("S6", "a-path-connected", true, is_a_path_connected(s6));

    let (x, y) = (c.get("s7_x.json"), c.get("s7_y.json"));
    match (product(x, y), product_topology_of_factors(x, y)) {
        (Ok(p), Ok(boxes)) => {
            let u = p.universe();
            let expected = family(
                u,
                &[
                    &[],
                    &["a|1", "b|1", "c|1"],
                    &["a|2", "b|2", "c|2"],
                    &["a|1", "a|2", "b|1", "b|2", "c|1", "c|2"],
                ],
            );
            out.push(
                "S7",
                "product tau_a",
                &expected,
                listing(&p, p.tau_a().opens()),
            );
            out.push(
                "S7",
                "product of factor tau_a",
                &expected,
                listing(&p, boxes.opens()),
            );
        }
        (Err(e), _) | (_, Err(e)) => out.push("S7", "product", "a product", e),
    }

    let (x, y) = (c.get("ps_x.json"), c.get("ps_y.json"));
    match product(x, y) {
        Ok(p) => {
            let expected = family(p.universe(), &[&[], &["a|1", "a|2", "b|1", "b|2"]]);
            out.push(
                "PS",
                "product tau_a",
                expected,
                listing(&p, p.tau_a().opens()),
            );
        }
        Err(e) => out.push("PS", "product", "a product", e),
    }

    out.0
}

fn separation(s: &AuraSpace) -> String {
    match find_a_separation(s, s.full()) {
        None => "none".into(),
        Some(sep) => format!(
            "{} {}",
            s.universe().format_set(sep.u),
            s.universe().format_set(sep.v)
        ),
    }
}

/// Claims about the infinite models that the exact checkers settle.
pub fn symbolic_claims() -> Vec<ClaimOutcome> {
    let mut out = Claims(Vec::new());
    let succ = SymbolicSpace::NatSuccessor;
    let tail = SymbolicSet::tail_from(4).expect("4 is natural");
    out.push(
        "nat-successor",
        "{≥4} a-open",
        true,
        sym_is_a_open(&succ, &tail),
    );
    let trivial = SymbolicSpace::TrivialAura("ℝ".into());
    let report = sym_compactness_report(&trivial);
    out.push("trivial(ℝ)", "a-compact", true, report.a_compact.holds);
    out.push(
        "trivial(ℝ)",
        "tau-compact",
        "Some(false)",
        format!("{:?}", report.tau_compact.holds),
    );
    let discrete = SymbolicSpace::NatDiscreteAura;
    let covered = (1..=16u64).any(|k| {
        let params: Vec<u64> = (1..=k).collect();
        sym_subcover_check(&discrete, "singletons", &params).unwrap_or(true)
    });
    out.push(
        "nat-discrete",
        "singletons [1..k] cover for some k ≤ 16",
        false,
        covered,
    );
    out.0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub claims: Vec<ClaimOutcome>,
    pub laws: Vec<LawOutcome>,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            if c.passed() {
                let _ = writeln!(out, "PASS {} {}: {}", c.fixture, c.claim, c.actual);
            } else {
                let _ = writeln!(
                    out,
                    "FAIL {} {}: expected {} got {}",
                    c.fixture, c.claim, c.expected, c.actual
                );
            }
        }
        out.push_str(&crate::laws::outcomes_to_text(&self.laws));
        let failed = self.claims.iter().filter(|c| !c.passed()).count()
            + self.laws.iter().filter(|l| !l.passed()).count();
        let total = self.claims.len() + self.laws.len();
        let _ = writeln!(out, "{} of {} checks passed", total - failed, total);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Loads the catalog from `dir`, evaluates every claim and runs the laws.
pub fn verify_paper(dir: &Path, ops: &Ops, workers: usize) -> Result<VerifyReport, VerifyError> {
    let catalog = Catalog::load(dir)?;
    let mut claims = fixture_claims(&catalog);
    claims.extend(symbolic_claims());
    let laws = run_laws(ops, workers)?;
    let passed = claims.iter().all(ClaimOutcome::passed) && laws.iter().all(LawOutcome::passed);
    Ok(VerifyReport {
        passed,
        claims,
        laws,
    })
}
