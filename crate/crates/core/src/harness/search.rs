//! Profile-predicate search over enumerated bispaces: the first bispace in
//! canonical order whose axiom profile satisfies a boolean expression such
//! as `Tw & !T1`.

use crate::axioms::AxiomProfile;
use crate::error::{Error, Result};
use crate::harness::sweep::{pair_bispace, SWEEP_CAP};
use crate::kappa_family::{enumerate_sigma_structures, Bispace};
use crate::semi_ops::SemiOps;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ast {
    Field(&'static str),
    Not(Box<Ast>),
    And(Box<Ast>, Box<Ast>),
    Or(Box<Ast>, Box<Ast>),
}

/// Boolean expression over profile flags: `&`, `|`, `!`, parentheses, and
/// the field names T0, T1, R0, Tw, Sym, SSym, Door, C1, C2, ScEqSo
/// (case-insensitive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfilePredicate {
    ast: Ast,
    source: String,
}

impl ProfilePredicate {
    pub fn parse(text: &str) -> Result<ProfilePredicate> {
        let mut p = Parser {
            chars: text.chars().collect(),
            pos: 0,
        };
        let ast = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input in profile predicate at byte {}",
                p.pos
            )));
        }
        Ok(ProfilePredicate {
            ast,
            source: text.to_string(),
        })
    }

    pub fn eval(&self, profile: &AxiomProfile) -> bool {
        fn go(ast: &Ast, p: &AxiomProfile) -> bool {
            match ast {
                Ast::Field(name) => p.field(name).expect("validated field"),
                Ast::Not(a) => !go(a, p),
                Ast::And(a, b) => go(a, p) && go(b, p),
                Ast::Or(a, b) => go(a, p) || go(b, p),
            }
        }
        go(&self.ast, profile)
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.conj()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            lhs = Ast::Or(Box::new(lhs), Box::new(self.conj()?));
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Ast> {
        let mut lhs = self.atom()?;
        while self.peek() == Some('&') {
            self.pos += 1;
            lhs = Ast::And(Box::new(lhs), Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(Ast::Not(Box::new(self.atom()?)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("expected `)` in profile predicate".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphanumeric() => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                let word: String = self.chars[start..self.pos].iter().collect();
                let canon = AxiomProfile::FIELD_NAMES
                    .iter()
                    .find(|f| f.eq_ignore_ascii_case(&word))
                    .ok_or_else(|| Error::Parse(format!("unknown profile field `{word}`")))?;
                Ok(Ast::Field(canon))
            }
            other => Err(Error::Parse(format!(
                "expected a profile field, `!`, or `(`; got {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchHit {
    pub n: usize,
    /// Indices into the canonical structure enumeration for that n.
    pub pair: (usize, usize),
    pub bispace: Bispace,
    pub profile: AxiomProfile,
}

/// First enumerated bispace (by carrier size, then canonical pair order)
/// whose profile satisfies the predicate.
pub fn search_profile(pred: &ProfilePredicate, n_max: usize) -> Result<Option<SearchHit>> {
    if n_max == 0 || n_max > SWEEP_CAP {
        return Err(Error::SizeCap {
            got: n_max,
            cap: SWEEP_CAP,
        });
    }
    for n in 1..=n_max {
        let families = enumerate_sigma_structures(n)?;
        let count = families.len();
        for pair_idx in 0..count * count {
            let pair = (pair_idx / count, pair_idx % count);
            let bispace = pair_bispace(n, &families, pair);
            let ops = SemiOps::new(&bispace);
            let profile = ops.ctx().expect("finite").profile();
            if pred.eval(&profile) {
                return Ok(Some(SearchHit {
                    n,
                    pair,
                    bispace,
                    profile,
                }));
            }
        }
    }
    Ok(None)
}
