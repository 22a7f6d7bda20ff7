//! 𝔞-convergence of eventually periodic sequences.
//!
//! `x_n` is `prefix[n]` for `n < |prefix|` and then runs through `cycle`
//! forever. A point `x` is a limit iff every 𝔞-open set around `x` eventually
//! contains the sequence, i.e. iff the cycle lies in the hull `h(x)`. Any
//! sequence in a finite space has the same limits as the eventually periodic
//! one cycling through its infinitely recurring values.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::aura::AuraSpace;
use crate::pointset::{PointSet, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("the cycle of a sequence must be nonempty")]
    EmptyCycle,
    #[error("point #{0} is outside the universe")]
    OutOfRange(usize),
    #[error("unknown point `{0}` in sequence")]
    UnknownPoint(String),
    #[error("the universe is empty")]
    EmptyUniverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EvPSequence {
    prefix: Vec<usize>,
    cycle: Vec<usize>,
}

impl EvPSequence {
    pub fn new(prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self, SequenceError> {
        if cycle.is_empty() {
            return Err(SequenceError::EmptyCycle);
        }
        Ok(EvPSequence { prefix, cycle })
    }

    pub fn constant(x: usize) -> Self {
        EvPSequence {
            prefix: Vec::new(),
            cycle: vec![x],
        }
    }

    /// Parses `p1,p2;c1,c2` against point labels. Without `;` the whole
    /// text is the cycle.
    pub fn parse(text: &str, universe: &Universe) -> Result<Self, SequenceError> {
        let (prefix, cycle) = match text.split_once(';') {
            Some((p, c)) => (p, c),
            None => ("", text),
        };
        let labels = |part: &str| -> Result<Vec<usize>, SequenceError> {
            part.split(',')
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| {
                    universe
                        .index_of(l)
                        .map_err(|_| SequenceError::UnknownPoint(l.to_string()))
                })
                .collect()
        };
        EvPSequence::new(labels(prefix)?, labels(cycle)?)
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// `x_n`, counting from zero.
    pub fn term(&self, n: usize) -> usize {
        match self.prefix.get(n) {
            Some(&x) => x,
            None => self.cycle[(n - self.prefix.len()) % self.cycle.len()],
        }
    }

    /// The values taken infinitely often.
    pub fn recurring(&self) -> PointSet {
        self.cycle.iter().copied().collect()
    }

    pub fn check(&self, n: usize) -> Result<(), SequenceError> {
        match self.prefix.iter().chain(&self.cycle).find(|&&x| x >= n) {
            Some(&x) => Err(SequenceError::OutOfRange(x)),
            None => Ok(()),
        }
    }

    pub fn display<'a>(&'a self, universe: &'a Universe) -> impl fmt::Display + 'a {
        SequenceDisplay {
            seq: self,
            universe,
        }
    }
}

struct SequenceDisplay<'a> {
    seq: &'a EvPSequence,
    universe: &'a Universe,
}

impl fmt::Display for SequenceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|&x| self.universe.name(x))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.seq.prefix), join(&self.seq.cycle))
    }
}

pub fn a_limits(s: &AuraSpace, q: &EvPSequence) -> PointSet {
    let range = q.recurring();
    (0..s.len())
        .filter(|&x| range.is_subset(s.hull(x)))
        .collect()
}

pub fn converges_to(s: &AuraSpace, q: &EvPSequence, x: usize) -> bool {
    a_limits(s, q).contains(x)
}

/// The cycle lies in `𝔞(x)`; equivalent to convergence when the aura is
/// transitive.
pub fn transitive_criterion(s: &AuraSpace, q: &EvPSequence, x: usize) -> bool {
    q.recurring().is_subset(s.aura(x))
}

/// Selects the terms `x_{start}, x_{start + stride}, …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubsequenceRule {
    pub start: usize,
    pub stride: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConvergentSubsequence {
    pub witness_point: usize,
    pub subsequence_rule: SubsequenceRule,
}

/// A constant subsequence at the least recurring point.
pub fn find_convergent_subsequence(
    s: &AuraSpace,
    q: &EvPSequence,
) -> Result<ConvergentSubsequence, SequenceError> {
    if s.is_empty() {
        return Err(SequenceError::EmptyUniverse);
    }
    q.check(s.len())?;
    let witness = q.recurring().first().expect("cycle is nonempty");
    let offset = q
        .cycle
        .iter()
        .position(|&x| x == witness)
        .expect("witness is in the cycle");
    Ok(ConvergentSubsequence {
        witness_point: witness,
        subsequence_rule: SubsequenceRule {
            start: q.prefix.len() + offset,
            stride: q.cycle.len(),
        },
    })
}
