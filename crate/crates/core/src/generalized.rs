//! 𝔞-α, 𝔞-semi, 𝔞-pre and 𝔞-β open sets.
//!
//! The four classes use the classical Njåstad / Levine / Mashhour /
//! Abd El-Monsef formulas with `cl` and `int` replaced by the aura operators:
//!
//! | class | condition                               |
//! |-------|-----------------------------------------|
//! | α     | `A ⊆ int_𝔞(cl_𝔞(int_𝔞(A)))`             |
//! | semi  | `A ⊆ cl_𝔞(int_𝔞(A))`                    |
//! | pre   | `A ⊆ int_𝔞(cl_𝔞(A))`                    |
//! | β     | `A ⊆ cl_𝔞(int_𝔞(cl_𝔞(A)))`             |
//!
//! Swapping in different definitions only touches [`is_gen_open`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::aura::AuraSpace;
use crate::pointset::PointSet;

/// Largest universe for which families are materialized by subset scan.
pub const MAX_SCAN_POINTS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneralizedClass {
    Alpha,
    Semi,
    Pre,
    Beta,
}

impl GeneralizedClass {
    pub const ALL: [GeneralizedClass; 4] = [
        GeneralizedClass::Alpha,
        GeneralizedClass::Semi,
        GeneralizedClass::Pre,
        GeneralizedClass::Beta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GeneralizedClass::Alpha => "alpha",
            GeneralizedClass::Semi => "semi",
            GeneralizedClass::Pre => "pre",
            GeneralizedClass::Beta => "beta",
        }
    }
}

impl fmt::Display for GeneralizedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeneralizedClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GeneralizedClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown class `{s}` (expected alpha, semi, pre or beta)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneralizedError {
    #[error("universe of {0} points is too large to scan (limit {MAX_SCAN_POINTS})")]
    UniverseTooLarge(usize),
}

pub fn is_gen_open(s: &AuraSpace, a: PointSet, class: GeneralizedClass) -> bool {
    let hull = match class {
        GeneralizedClass::Alpha => s.interior(s.closure(s.interior(a))),
        GeneralizedClass::Semi => s.closure(s.interior(a)),
        GeneralizedClass::Pre => s.interior(s.closure(a)),
        GeneralizedClass::Beta => s.closure(s.interior(s.closure(a))),
    };
    a.is_subset(hull)
}

/// Every subset satisfying [`is_gen_open`], in canonical order.
pub fn gen_family(
    s: &AuraSpace,
    class: GeneralizedClass,
) -> Result<Vec<PointSet>, GeneralizedError> {
    if s.len() > MAX_SCAN_POINTS {
        return Err(GeneralizedError::UniverseTooLarge(s.len()));
    }
    let mut family: Vec<PointSet> = s
        .full()
        .subsets()
        .filter(|&a| is_gen_open(s, a, class))
        .collect();
    family.sort_unstable();
    Ok(family)
}
