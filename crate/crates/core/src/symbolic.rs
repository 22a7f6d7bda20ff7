//! Exact verdicts for four infinite aura spaces over ℕ = {1, 2, 3, …}.
//!
//! Subsets are kept in the class "finite set ∪ tail" ([`SymbolicSet`]),
//! which is closed under union, intersection and complement and contains
//! every set the models need.
//!
//! | model             | τ         | 𝔞(n)       |
//! |-------------------|-----------|------------|
//! | `NatSuccessor`    | discrete  | `{n, n+1}` |
//! | `NatDiscreteAura` | discrete  | `{n}`      |
//! | `TrivialAura(X)`  | any       | `X`        |
//! | `CofiniteTrivial` | cofinite  | `ℕ`        |
//!
//! For `TrivialAura` the carrier is only named; sets other than `∅` and the
//! whole carrier are represented by their ℕ shadow and only the distinction
//! empty / nonempty / whole matters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("0 is not a natural number here; ℕ starts at 1")]
    ZeroNotNatural,
    #[error("unknown cover family `{0}` (expected tails, singletons or whole)")]
    UnknownFamily(String),
    #[error("unknown model `{0}` (expected nat-successor, nat-discrete, trivial[:label] or cofinite-trivial)")]
    UnknownModel(String),
}

/// `finite ∪ {n : n ≥ tail}`, normalized so the representation is unique:
/// nothing in `finite` reaches `tail - 1` or beyond.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SymbolicSet {
    finite: BTreeSet<u64>,
    tail: Option<u64>,
}

impl SymbolicSet {
    pub fn empty() -> Self {
        SymbolicSet::default()
    }

    /// ℕ itself.
    pub fn all() -> Self {
        SymbolicSet {
            finite: BTreeSet::new(),
            tail: Some(1),
        }
    }

    pub fn new<I: IntoIterator<Item = u64>>(
        finite: I,
        tail: Option<u64>,
    ) -> Result<Self, SymbolicError> {
        let finite: BTreeSet<u64> = finite.into_iter().collect();
        if finite.contains(&0) || tail == Some(0) {
            return Err(SymbolicError::ZeroNotNatural);
        }
        Ok(SymbolicSet::normalized(finite, tail))
    }

    pub fn finite<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self, SymbolicError> {
        SymbolicSet::new(elements, None)
    }

    /// `{n : n ≥ k}`.
    pub fn tail_from(k: u64) -> Result<Self, SymbolicError> {
        SymbolicSet::new([], Some(k))
    }

    pub fn singleton(n: u64) -> Result<Self, SymbolicError> {
        SymbolicSet::finite([n])
    }

    fn normalized(mut finite: BTreeSet<u64>, mut tail: Option<u64>) -> Self {
        if let Some(t) = tail.as_mut() {
            finite.retain(|&n| n < *t);
            while *t > 1 && finite.remove(&(*t - 1)) {
                *t -= 1;
            }
        }
        SymbolicSet { finite, tail }
    }

    pub fn finite_part(&self) -> &BTreeSet<u64> {
        &self.finite
    }

    pub fn tail_start(&self) -> Option<u64> {
        self.tail
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= 1 && (self.finite.contains(&n) || self.tail.is_some_and(|t| n >= t))
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.tail.is_none()
    }

    pub fn is_all(&self) -> bool {
        self.tail == Some(1)
    }

    pub fn is_finite(&self) -> bool {
        self.tail.is_none()
    }

    /// Number of elements, if finite.
    pub fn len(&self) -> Option<usize> {
        self.is_finite().then_some(self.finite.len())
    }

    /// Largest number that the representation mentions explicitly.
    pub fn horizon(&self) -> u64 {
        let f = self.finite.last().copied().unwrap_or(0);
        f.max(self.tail.unwrap_or(0))
    }

    pub fn union(&self, other: &SymbolicSet) -> SymbolicSet {
        let finite = self.finite.union(&other.finite).copied().collect();
        let tail = match (self.tail, other.tail) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        SymbolicSet::normalized(finite, tail)
    }

    pub fn intersect(&self, other: &SymbolicSet) -> SymbolicSet {
        let mut finite: BTreeSet<u64> = self.finite.intersection(&other.finite).copied().collect();
        if let Some(t) = other.tail {
            finite.extend(self.finite.iter().filter(|&&n| n >= t));
        }
        if let Some(t) = self.tail {
            finite.extend(other.finite.iter().filter(|&&n| n >= t));
        }
        let tail = match (self.tail, other.tail) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        SymbolicSet::normalized(finite, tail)
    }

    pub fn complement(&self) -> SymbolicSet {
        match self.tail {
            Some(t) => {
                let finite = (1..t).filter(|n| !self.finite.contains(n)).collect();
                SymbolicSet::normalized(finite, None)
            }
            None => {
                let top = self.finite.last().copied().unwrap_or(0);
                let finite = (1..=top).filter(|n| !self.finite.contains(n)).collect();
                SymbolicSet::normalized(finite, Some(top + 1))
            }
        }
    }

    pub fn difference(&self, other: &SymbolicSet) -> SymbolicSet {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &SymbolicSet) -> bool {
        self.difference(other).is_empty()
    }

    /// `{n - 1 : n ∈ A, n ≥ 2}`.
    pub fn shift_down(&self) -> SymbolicSet {
        let finite = self
            .finite
            .iter()
            .filter(|&&n| n >= 2)
            .map(|n| n - 1)
            .collect();
        let tail = self.tail.map(|t| t.saturating_sub(1).max(1));
        SymbolicSet::normalized(finite, tail)
    }
}

impl fmt::Display for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_all() {
            return f.write_str("ℕ");
        }
        let mut parts: Vec<String> = self.finite.iter().map(u64::to_string).collect();
        if let Some(t) = self.tail {
            parts.push(format!("≥{t}"));
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SymbolicSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymbolicSpace {
    NatSuccessor,
    NatDiscreteAura,
    TrivialAura(String),
    CofiniteTrivial,
}

impl SymbolicSpace {
    pub fn name(&self) -> String {
        match self {
            SymbolicSpace::NatSuccessor => "NatSuccessor".into(),
            SymbolicSpace::NatDiscreteAura => "NatDiscreteAura".into(),
            SymbolicSpace::TrivialAura(label) => format!("TrivialAura({label})"),
            SymbolicSpace::CofiniteTrivial => "CofiniteTrivial".into(),
        }
    }

    pub fn carrier(&self) -> &str {
        match self {
            SymbolicSpace::TrivialAura(label) => label,
            _ => "ℕ",
        }
    }

    /// `𝔞(n)`.
    pub fn aura(&self, n: u64) -> Result<SymbolicSet, SymbolicError> {
        match self {
            SymbolicSpace::NatSuccessor => SymbolicSet::finite([n, n + 1]),
            SymbolicSpace::NatDiscreteAura => SymbolicSet::singleton(n),
            _ if n == 0 => Err(SymbolicError::ZeroNotNatural),
            _ => Ok(SymbolicSet::all()),
        }
    }

    fn is_trivial(&self) -> bool {
        matches!(
            self,
            SymbolicSpace::TrivialAura(_) | SymbolicSpace::CofiniteTrivial
        )
    }
}

impl fmt::Display for SymbolicSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SymbolicSpace {
    type Err = SymbolicError;

    /// Accepts `nat-successor`, `nat-discrete`, `trivial`, `trivial:<label>`
    /// and `cofinite-trivial`, or the model names themselves.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "nat-successor" | "natsuccessor" => return Ok(SymbolicSpace::NatSuccessor),
            "nat-discrete" | "nat-discrete-aura" | "natdiscreteaura" => {
                return Ok(SymbolicSpace::NatDiscreteAura)
            }
            "cofinite-trivial" | "cofinitetrivial" => return Ok(SymbolicSpace::CofiniteTrivial),
            "trivial" | "trivialaura" | "trivial-aura" => {
                return Ok(SymbolicSpace::TrivialAura("ℝ".into()))
            }
            _ => {}
        }
        let label = s.strip_prefix("trivial:").or_else(|| {
            s.strip_prefix("TrivialAura(")
                .and_then(|r| r.strip_suffix(')'))
        });
        match label {
            Some(l) if !l.is_empty() => Ok(SymbolicSpace::TrivialAura(l.to_string())),
            _ => Err(SymbolicError::UnknownModel(s.to_string())),
        }
    }
}

pub fn sym_union(a: &SymbolicSet, b: &SymbolicSet) -> SymbolicSet {
    a.union(b)
}

pub fn sym_intersect(a: &SymbolicSet, b: &SymbolicSet) -> SymbolicSet {
    a.intersect(b)
}

pub fn sym_complement(a: &SymbolicSet) -> SymbolicSet {
    a.complement()
}

pub fn sym_is_a_open(m: &SymbolicSpace, a: &SymbolicSet) -> bool {
    match m {
        // upper sets: n ∈ A ⇒ n + 1 ∈ A
        SymbolicSpace::NatSuccessor => a.is_empty() || a.finite.is_empty(),
        SymbolicSpace::NatDiscreteAura => true,
        _ => a.is_empty() || a.is_all(),
    }
}

/// `{n : 𝔞(n) ∩ A ≠ ∅}`.
pub fn sym_aura_closure(m: &SymbolicSpace, a: &SymbolicSet) -> SymbolicSet {
    match m {
        SymbolicSpace::NatSuccessor => a.union(&a.shift_down()),
        SymbolicSpace::NatDiscreteAura => a.clone(),
        _ if a.is_empty() => SymbolicSet::empty(),
        _ => SymbolicSet::all(),
    }
}

/// `{n : 𝔞(n) ∩ (A ∖ {n}) ≠ ∅}`.
pub fn sym_derived_set(m: &SymbolicSpace, a: &SymbolicSet) -> SymbolicSet {
    match m {
        SymbolicSpace::NatSuccessor => a.shift_down(),
        SymbolicSpace::NatDiscreteAura => SymbolicSet::empty(),
        _ => match a.len() {
            Some(0) => SymbolicSet::empty(),
            Some(1) => a.complement(),
            _ => SymbolicSet::all(),
        },
    }
}

/// The least 𝔞-open set containing `n`.
pub fn sym_hull(m: &SymbolicSpace, n: u64) -> Result<SymbolicSet, SymbolicError> {
    match m {
        SymbolicSpace::NatSuccessor => SymbolicSet::tail_from(n),
        SymbolicSpace::NatDiscreteAura => SymbolicSet::singleton(n),
        _ if n == 0 => Err(SymbolicError::ZeroNotNatural),
        _ => Ok(SymbolicSet::all()),
    }
}

/// The parametric covers the examples use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverFamily {
    /// `{{≥k} : k ∈ ℕ}`
    Tails,
    /// `{{n} : n ∈ ℕ}`
    Singletons,
    /// `{carrier}`
    Whole,
}

impl CoverFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverFamily::Tails => "tails",
            CoverFamily::Singletons => "singletons",
            CoverFamily::Whole => "whole",
        }
    }

    pub fn member(self, k: u64) -> Result<SymbolicSet, SymbolicError> {
        match self {
            CoverFamily::Tails => SymbolicSet::tail_from(k),
            CoverFamily::Singletons => SymbolicSet::singleton(k),
            CoverFamily::Whole => Ok(SymbolicSet::all()),
        }
    }

    /// Whether every member is 𝔞-open in `m`.
    pub fn is_a_open_in(self, m: &SymbolicSpace) -> bool {
        match self {
            CoverFamily::Tails => matches!(
                m,
                SymbolicSpace::NatSuccessor | SymbolicSpace::NatDiscreteAura
            ),
            CoverFamily::Singletons => matches!(m, SymbolicSpace::NatDiscreteAura),
            CoverFamily::Whole => true,
        }
    }
}

impl fmt::Display for CoverFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoverFamily {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tails" => Ok(CoverFamily::Tails),
            "singletons" => Ok(CoverFamily::Singletons),
            "whole" => Ok(CoverFamily::Whole),
            _ => Err(SymbolicError::UnknownFamily(s.to_string())),
        }
    }
}

/// Whether the members of `family` picked by `params` cover the carrier.
/// `whole` ignores its parameters.
pub fn sym_subcover_check(
    _m: &SymbolicSpace,
    family: &str,
    params: &[u64],
) -> Result<bool, SymbolicError> {
    let family: CoverFamily = family.parse()?;
    let mut union = SymbolicSet::empty();
    for &k in params {
        union = union.union(&family.member(k)?);
    }
    if family == CoverFamily::Whole && !params.is_empty() {
        union = SymbolicSet::all();
    }
    Ok(union.is_all())
}

/// Machine-checkable evidence behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Witness {
    /// Every 𝔞-open cover must contain the only 𝔞-open set around `point`,
    /// which is the whole carrier.
    WholeForcedBy { point: u64 },
    /// A finite subfamily of `family` covering the carrier.
    FiniteSubcover {
        family: CoverFamily,
        subfamily: Vec<u64>,
    },
    /// An 𝔞-open cover none of whose finite subfamilies covers.
    NoFiniteSubcover { family: CoverFamily },
    /// The carrier is countable, so any cover has a countable subcover.
    CountableCarrier,
    /// The only 𝔞-open cover is `{carrier}`.
    OnlyWholeCover,
    /// For infinite `A`, any `a ∈ A` with `a ≥ 2` puts `a - 1` in `d_𝔞(A)`.
    PredecessorIsLimit,
    /// `A` is infinite and `d_𝔞(A)` is empty.
    EmptyDerivedSet { set: SymbolicSet },
    /// `d_𝔞(A)` is the whole carrier whenever `A` has two points.
    DerivedSetIsWhole,
    /// Every sequence 𝔞-converges to `point`.
    EverySequenceConverges { point: Option<u64> },
    /// `x_n = n` has no 𝔞-convergent subsequence.
    InjectiveSequence,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::WholeForcedBy { point } => {
                write!(
                    f,
                    "the only 𝔞-open set containing {point} is the whole space"
                )
            }
            Witness::FiniteSubcover { family, subfamily } => {
                let ks: Vec<String> = subfamily.iter().map(u64::to_string).collect();
                write!(f, "cover {family} has finite subcover [{}]", ks.join(","))
            }
            Witness::NoFiniteSubcover { family } => {
                write!(f, "cover {family} has no finite subcover")
            }
            Witness::CountableCarrier => f.write_str("countable carrier"),
            Witness::OnlyWholeCover => f.write_str("the only 𝔞-open cover is {X}"),
            Witness::PredecessorIsLimit => f.write_str("a-1 ∈ d_𝔞(A) for every a ∈ A with a ≥ 2"),
            Witness::EmptyDerivedSet { set } => write!(f, "d_𝔞({set}) = {{}}"),
            Witness::DerivedSetIsWhole => f.write_str("d_𝔞(A) = X whenever |A| ≥ 2"),
            Witness::EverySequenceConverges { point: Some(p) } => {
                write!(f, "every sequence 𝔞-converges to {p}")
            }
            Witness::EverySequenceConverges { point: None } => {
                f.write_str("every sequence 𝔞-converges to every point")
            }
            Witness::InjectiveSequence => f.write_str("x_n = n has no 𝔞-convergent subsequence"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Witness,
}

impl Verdict {
    fn new(holds: bool, witness: Witness) -> Self {
        Verdict { holds, witness }
    }
}

/// τ-compactness of the carrier. For uncountable carriers this is a
/// classical fact recorded with the model, not a computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauCompactness {
    pub holds: Option<bool>,
    pub source: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CompactnessReport {
    pub model: String,
    pub carrier: String,
    pub tau_compact: TauCompactness,
    pub a_compact: Verdict,
    pub countably_a_compact: Verdict,
    pub a_lindelof: Verdict,
    pub a_limit_point_compact: Verdict,
    pub a_sequentially_compact: Verdict,
}

impl CompactnessReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 5] {
        [
            ("aCompact", &self.a_compact),
            ("countablyACompact", &self.countably_a_compact),
            ("aLindelof", &self.a_lindelof),
            ("aLimitPointCompact", &self.a_limit_point_compact),
            ("aSequentiallyCompact", &self.a_sequentially_compact),
        ]
    }

    /// Canonical text form, one property per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("model: {}\ncarrier: {}\n", self.model, self.carrier);
        let tau = match self.tau_compact.holds {
            Some(b) => b.to_string(),
            None => "unknown".into(),
        };
        out.push_str(&format!(
            "tauCompact: {tau} ({})\n",
            self.tau_compact.source
        ));
        for (name, v) in self.verdicts() {
            out.push_str(&format!("{name}: {} ({})\n", v.holds, v.witness));
        }
        out
    }
}

pub fn sym_compactness_report(m: &SymbolicSpace) -> CompactnessReport {
    use Witness::*;
    let (tau, a_compact, countably, lindelof, limit, sequential) = match m {
        SymbolicSpace::NatSuccessor => (
            TauCompactness {
                holds: Some(false),
                source: "discrete topology on an infinite set",
            },
            Verdict::new(true, WholeForcedBy { point: 1 }),
            Verdict::new(
                true,
                FiniteSubcover {
                    family: CoverFamily::Tails,
                    subfamily: vec![1],
                },
            ),
            Verdict::new(true, CountableCarrier),
            Verdict::new(true, PredecessorIsLimit),
            Verdict::new(true, EverySequenceConverges { point: Some(1) }),
        ),
        SymbolicSpace::NatDiscreteAura => (
            TauCompactness {
                holds: Some(false),
                source: "discrete topology on an infinite set",
            },
            Verdict::new(
                false,
                NoFiniteSubcover {
                    family: CoverFamily::Singletons,
                },
            ),
            Verdict::new(
                false,
                NoFiniteSubcover {
                    family: CoverFamily::Singletons,
                },
            ),
            Verdict::new(true, CountableCarrier),
            Verdict::new(
                false,
                EmptyDerivedSet {
                    set: SymbolicSet::all(),
                },
            ),
            Verdict::new(false, InjectiveSequence),
        ),
        SymbolicSpace::TrivialAura(label) => (
            TauCompactness {
                holds: (label == "ℝ" || label == "R").then_some(false),
                source: "imported classical fact",
            },
            Verdict::new(true, OnlyWholeCover),
            Verdict::new(true, OnlyWholeCover),
            Verdict::new(true, OnlyWholeCover),
            Verdict::new(true, DerivedSetIsWhole),
            Verdict::new(true, EverySequenceConverges { point: None }),
        ),
        SymbolicSpace::CofiniteTrivial => (
            TauCompactness {
                holds: Some(true),
                source: "cofinite topology",
            },
            Verdict::new(true, OnlyWholeCover),
            Verdict::new(true, OnlyWholeCover),
            Verdict::new(true, OnlyWholeCover),
            Verdict::new(true, DerivedSetIsWhole),
            Verdict::new(true, EverySequenceConverges { point: None }),
        ),
    };
    CompactnessReport {
        model: m.name(),
        carrier: m.carrier().to_string(),
        tau_compact: tau,
        a_compact,
        countably_a_compact: countably,
        a_lindelof: lindelof,
        a_limit_point_compact: limit,
        a_sequentially_compact: sequential,
    }
}

/// How far checks that range over ℕ look.
const CHECK_HORIZON: u64 = 64;

/// Re-derives a witness in the set algebra. Claims about all of ℕ are
/// checked up to a fixed horizon.
pub fn check_witness(m: &SymbolicSpace, verdict: &Verdict) -> bool {
    match &verdict.witness {
        Witness::WholeForcedBy { point } => {
            // the hull is 𝔞-open, and everything in it up to the horizon is
            // reached from `point` by following auras, so every 𝔞-open set
            // around `point` contains it
            let hull = match sym_hull(m, *point) {
                Ok(h) => h,
                Err(_) => return false,
            };
            let mut reach = SymbolicSet::singleton(*point).expect("hull exists, so point ≥ 1");
            loop {
                let grown = (1..=CHECK_HORIZON)
                    .filter(|&n| reach.contains(n))
                    .fold(reach.clone(), |acc, n| {
                        acc.union(&m.aura(n).expect("n ≥ 1"))
                    });
                if grown == reach {
                    break;
                }
                reach = grown;
            }
            let window = SymbolicSet::new(1..=CHECK_HORIZON, None).expect("starts at 1");
            verdict.holds
                && hull.is_all()
                && hull.contains(*point)
                && sym_is_a_open(m, &hull)
                && hull.intersect(&window).is_subset(&reach)
        }
        Witness::FiniteSubcover { family, subfamily } => {
            verdict.holds
                && family.is_a_open_in(m)
                && sym_subcover_check(m, family.as_str(), subfamily).unwrap_or(false)
        }
        Witness::NoFiniteSubcover { family } => {
            let covers = (1..=CHECK_HORIZON).all(|n| family.member(n).is_ok_and(|s| s.contains(n)));
            let none_finite = (1..=CHECK_HORIZON).all(|k| {
                let ks: Vec<u64> = (1..=k).collect();
                !sym_subcover_check(m, family.as_str(), &ks).unwrap_or(true)
            });
            !verdict.holds && family.is_a_open_in(m) && covers && none_finite
        }
        Witness::CountableCarrier => verdict.holds && m.carrier() == "ℕ",
        Witness::OnlyWholeCover => {
            // every nonempty 𝔞-open set is the carrier
            verdict.holds
                && m.is_trivial()
                && (1..=CHECK_HORIZON).all(|n| m.aura(n).is_ok_and(|a| a.is_all()))
        }
        Witness::PredecessorIsLimit => {
            verdict.holds
                && (2..=CHECK_HORIZON).all(|k| {
                    let a = SymbolicSet::tail_from(k).expect("k ≥ 1");
                    sym_derived_set(m, &a).contains(k - 1)
                })
        }
        Witness::EmptyDerivedSet { set } => {
            !verdict.holds && !set.is_finite() && sym_derived_set(m, set).is_empty()
        }
        Witness::DerivedSetIsWhole => {
            verdict.holds
                && (1..=8).all(|a| {
                    (a + 1..=9).all(|b| {
                        let pair = SymbolicSet::finite([a, b]).expect("a, b ≥ 1");
                        sym_derived_set(m, &pair).is_all()
                    })
                })
        }
        Witness::EverySequenceConverges { point } => {
            // x →𝔞 p for every sequence iff the only 𝔞-open set around p is
            // the whole carrier
            let points: Vec<u64> = match point {
                Some(p) => vec![*p],
                None => (1..=CHECK_HORIZON).collect(),
            };
            verdict.holds
                && points.iter().all(|&p| {
                    check_witness(m, &Verdict::new(true, Witness::WholeForcedBy { point: p }))
                })
        }
        Witness::InjectiveSequence => {
            // every point has a finite 𝔞-open neighbourhood, which an
            // injective sequence leaves for good
            !verdict.holds
                && (1..=CHECK_HORIZON).all(|n| {
                    m.aura(n)
                        .is_ok_and(|a| a.is_finite() && sym_is_a_open(m, &a))
                })
        }
    }
}
