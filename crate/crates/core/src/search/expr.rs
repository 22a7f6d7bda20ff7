//! Predicate expressions over named properties of an aura space.
//!
//! ```text
//! expr  := term (('|' | '||' | 'or') term)*
//! term  := unary (('&' | '&&' | 'and') unary)*
//! unary := ('!' | 'not') unary | '(' expr ')' | atom
//! ```

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;

use crate::aura::AuraSpace;
use crate::connectivity::{is_a_connected, is_a_locally_connected, is_a_path_connected};
use crate::graph;
use crate::pointset::PointSet;

use super::SearchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Transitive,
    Symmetric,
    Trivial,
    Discrete,
    TauConnected,
    AConnected,
    APathConnected,
    ALocallyConnected,
    AT0,
    AT1,
    AT2,
    ClIdempotent,
    TauAEqualsTau,
    TauAIndiscrete,
    /// Some nonempty `Y` has `(τ_𝔞)_Y ⊊ τ_{𝔞_Y}`.
    SubspaceStrict,
}

impl Atom {
    pub const ALL: [Atom; 15] = [
        Atom::Transitive,
        Atom::Symmetric,
        Atom::Trivial,
        Atom::Discrete,
        Atom::TauConnected,
        Atom::AConnected,
        Atom::APathConnected,
        Atom::ALocallyConnected,
        Atom::AT0,
        Atom::AT1,
        Atom::AT2,
        Atom::ClIdempotent,
        Atom::TauAEqualsTau,
        Atom::TauAIndiscrete,
        Atom::SubspaceStrict,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Atom::Transitive => "transitive",
            Atom::Symmetric => "symmetric",
            Atom::Trivial => "trivial",
            Atom::Discrete => "discrete",
            Atom::TauConnected => "tauConnected",
            Atom::AConnected => "aConnected",
            Atom::APathConnected => "aPathConnected",
            Atom::ALocallyConnected => "aLocallyConnected",
            Atom::AT0 => "aT0",
            Atom::AT1 => "aT1",
            Atom::AT2 => "aT2",
            Atom::ClIdempotent => "clIdempotent",
            Atom::TauAEqualsTau => "tauAEqualsTau",
            Atom::TauAIndiscrete => "tauAIndiscrete",
            Atom::SubspaceStrict => "subspaceStrict",
        }
    }

    fn bit(self) -> u32 {
        1 << (self as u32)
    }

    pub fn evaluate(self, s: &AuraSpace) -> bool {
        let full = s.full();
        match self {
            Atom::Transitive => s.is_transitive(),
            Atom::Symmetric => s.is_symmetric(),
            Atom::Trivial => s.classify().trivial,
            Atom::Discrete => s.classify().discrete,
            Atom::TauConnected => s.space().is_connected(),
            Atom::AConnected => is_a_connected(s, full),
            Atom::APathConnected => is_a_path_connected(s),
            Atom::ALocallyConnected => is_a_locally_connected(s),
            Atom::AT0 => s.separation_axioms().t0,
            Atom::AT1 => s.separation_axioms().t1,
            Atom::AT2 => s.separation_axioms().t2,
            Atom::ClIdempotent => s.is_closure_idempotent(),
            Atom::TauAEqualsTau => s.hulls() == s.space().minimal_opens(),
            Atom::TauAIndiscrete => s.hulls().iter().all(|&h| h == full),
            Atom::SubspaceStrict => strict_subspace(s).is_some(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Atom {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Atom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| SearchError::UnknownAtom(s.to_string()))
    }
}

/// The first nonempty `Y` (canonical order) on which the subspace aura
/// topology is strictly finer than the trace of `τ_𝔞`.
pub fn strict_subspace(s: &AuraSpace) -> Option<PointSet> {
    let mut candidates: Vec<PointSet> = s.full().subsets().filter(|y| !y.is_empty()).collect();
    candidates.sort_unstable();
    candidates.into_iter().find(|&y| {
        // minimal 𝔞_Y-open set of p versus the trace h(p) ∩ Y
        let restricted: Vec<PointSet> = s.auras().iter().map(|&a| a & y).collect();
        y.iter()
            .any(|p| graph::reach(&restricted, PointSet::singleton(p)) != s.hull(p) & y)
    })
}

/// Truth values of every atom for one space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Valuation(u32);

impl Valuation {
    pub fn of(s: &AuraSpace) -> Self {
        Valuation(
            Atom::ALL
                .into_iter()
                .filter(|a| a.evaluate(s))
                .fold(0, |acc, a| acc | a.bit()),
        )
    }

    pub fn get(self, atom: Atom) -> bool {
        self.0 & atom.bit() != 0
    }

    pub fn to_map(self) -> IndexMap<&'static str, bool> {
        Atom::ALL
            .into_iter()
            .map(|a| (a.name(), self.get(a)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredicateExpr {
    Atom(Atom),
    Not(Box<PredicateExpr>),
    And(Box<PredicateExpr>, Box<PredicateExpr>),
    Or(Box<PredicateExpr>, Box<PredicateExpr>),
}

impl PredicateExpr {
    pub fn parse(text: &str) -> Result<Self, SearchError> {
        let tokens = tokenize(text)?;
        let mut parser = Parser { tokens, pos: 0 };
        let expr = parser.or()?;
        match parser.tokens.get(parser.pos) {
            None => Ok(expr),
            Some((at, tok)) => Err(SearchError::Syntax {
                position: *at,
                message: format!("unexpected `{tok}`"),
            }),
        }
    }

    pub fn eval(&self, v: Valuation) -> bool {
        match self {
            PredicateExpr::Atom(a) => v.get(*a),
            PredicateExpr::Not(e) => !e.eval(v),
            PredicateExpr::And(a, b) => a.eval(v) && b.eval(v),
            PredicateExpr::Or(a, b) => a.eval(v) || b.eval(v),
        }
    }

    /// Evaluates only the atoms the expression mentions.
    pub fn eval_space(&self, s: &AuraSpace) -> bool {
        match self {
            PredicateExpr::Atom(a) => a.evaluate(s),
            PredicateExpr::Not(e) => !e.eval_space(s),
            PredicateExpr::And(a, b) => a.eval_space(s) && b.eval_space(s),
            PredicateExpr::Or(a, b) => a.eval_space(s) || b.eval_space(s),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            PredicateExpr::Or(..) => 0,
            PredicateExpr::And(..) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for PredicateExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &PredicateExpr, min: u8| {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            PredicateExpr::Atom(a) => write!(f, "{a}"),
            PredicateExpr::Not(e) => {
                f.write_str("!")?;
                wrap(f, e, 2)
            }
            PredicateExpr::And(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" & ")?;
                wrap(f, b, 2)
            }
            PredicateExpr::Or(a, b) => {
                wrap(f, a, 0)?;
                f.write_str(" | ")?;
                wrap(f, b, 1)
            }
        }
    }
}

impl FromStr for PredicateExpr {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PredicateExpr::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    And,
    Or,
    Not,
    Open,
    Close,
    Word(String),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::And => f.write_str("&"),
            Token::Or => f.write_str("|"),
            Token::Not => f.write_str("!"),
            Token::Open => f.write_str("("),
            Token::Close => f.write_str(")"),
            Token::Word(w) => f.write_str(w),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, SearchError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '&' | '|' => {
                chars.next();
                if chars.peek().map(|p| p.1) == Some(c) {
                    chars.next();
                }
                out.push((at, if c == '&' { Token::And } else { Token::Or }));
            }
            '!' | '¬' => {
                chars.next();
                out.push((at, Token::Not));
            }
            '∧' => {
                chars.next();
                out.push((at, Token::And));
            }
            '∨' => {
                chars.next();
                out.push((at, Token::Or));
            }
            '(' => {
                chars.next();
                out.push((at, Token::Open));
            }
            ')' => {
                chars.next();
                out.push((at, Token::Close));
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut word = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let token = match word.as_str() {
                    "and" => Token::And,
                    "or" => Token::Or,
                    "not" => Token::Not,
                    _ => Token::Word(word),
                };
                out.push((at, token));
            }
            other => {
                return Err(SearchError::Syntax {
                    position: at,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn end_position(&self) -> usize {
        self.tokens
            .last()
            .map_or(0, |t| t.0 + t.1.to_string().len())
    }

    fn or(&mut self) -> Result<PredicateExpr, SearchError> {
        let mut left = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            let right = self.and()?;
            left = PredicateExpr::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<PredicateExpr, SearchError> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            let right = self.unary()?;
            left = PredicateExpr::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<PredicateExpr, SearchError> {
        let Some((at, token)) = self.tokens.get(self.pos).cloned() else {
            return Err(SearchError::Syntax {
                position: self.end_position(),
                message: "expression ends early".into(),
            });
        };
        self.pos += 1;
        match token {
            Token::Not => Ok(PredicateExpr::Not(Box::new(self.unary()?))),
            Token::Open => {
                let inner = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(SearchError::Syntax {
                        position: at,
                        message: "unclosed `(`".into(),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Word(w) => Ok(PredicateExpr::Atom(w.parse()?)),
            other => Err(SearchError::Syntax {
                position: at,
                message: format!("unexpected `{other}`"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_and_prints() {
        let e = PredicateExpr::parse("aConnected & !tauConnected").unwrap();
        assert_eq!(e.to_string(), "aConnected & !tauConnected");
        let e = PredicateExpr::parse("not (transitive or symmetric) and aT0").unwrap();
        assert_eq!(e.to_string(), "!(transitive | symmetric) & aT0");
        let e = PredicateExpr::parse("aT1∧aT2").unwrap();
        assert_eq!(e.to_string(), "aT1 & aT2");
        let e = PredicateExpr::parse("aT0 || aT1 && aT2").unwrap();
        assert_eq!(e.to_string(), "aT0 | aT1 & aT2");
        let e = PredicateExpr::parse("(aT0 | aT1) & aT2").unwrap();
        assert_eq!(e.to_string(), "(aT0 | aT1) & aT2");
        assert_eq!(PredicateExpr::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors() {
        assert_eq!(
            PredicateExpr::parse("aConnected & compact").unwrap_err(),
            SearchError::UnknownAtom("compact".into())
        );
        assert!(matches!(
            PredicateExpr::parse("(aT0").unwrap_err(),
            SearchError::Syntax { position: 0, .. }
        ));
        assert!(matches!(
            PredicateExpr::parse("aT0 &").unwrap_err(),
            SearchError::Syntax { .. }
        ));
        assert!(matches!(
            PredicateExpr::parse("aT0 aT1").unwrap_err(),
            SearchError::Syntax { position: 4, .. }
        ));
        assert!(matches!(
            PredicateExpr::parse("a$").unwrap_err(),
            SearchError::Syntax { .. }
        ));
    }

    #[test]
    fn atoms_on_fixtures() {
        let s4 = Valuation::of(&fixtures::s4());
        assert!(s4.get(Atom::AConnected) && !s4.get(Atom::TauConnected));
        assert!(s4.get(Atom::Trivial) && s4.get(Atom::TauAIndiscrete));
        let s2 = fixtures::s2();
        let v = Valuation::of(&s2);
        assert!(
            !v.get(Atom::Transitive) && v.get(Atom::TauAIndiscrete) && v.get(Atom::SubspaceStrict)
        );
        assert_eq!(
            strict_subspace(&s2),
            Some(s2.universe().set_of(["a", "b"]).unwrap())
        );
        let d = Valuation::of(&fixtures::discrete_pair());
        assert!(d.get(Atom::Discrete) && d.get(Atom::TauAEqualsTau) && d.get(Atom::AT2));
        assert!(!Valuation::of(&fixtures::s1()).get(Atom::SubspaceStrict));
    }

    #[test]
    fn lazy_and_eager_evaluation_agree() {
        let e = PredicateExpr::parse("!transitive & tauAIndiscrete | aT1").unwrap();
        for s in fixtures::all_single() {
            assert_eq!(e.eval(Valuation::of(&s)), e.eval_space(&s));
        }
    }

    #[test]
    fn atom_names_round_trip() {
        for a in Atom::ALL {
            assert_eq!(a.name().parse::<Atom>().unwrap(), a);
        }
        assert_eq!(
            Valuation::of(&fixtures::s1()).to_map().len(),
            Atom::ALL.len()
        );
    }
}
