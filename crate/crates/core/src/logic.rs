//! Formulas over partition variables and bounded tautology search.
//!
//! Concrete syntax, loosest binding first:
//!
//! ```text
//! formula := join ( "->" formula )?        right-associative implication
//! join    := meet ( "|" meet )*            join
//! meet    := atom ( "&" atom )*            meet
//! atom    := ident | "0" | "1" | "(" formula ")"
//! ```
//!
//! A formula is a partition tautology if it evaluates to the discrete partition
//! under every substitution on every universe. No finite universe suffices to
//! decide that, so [`check_tautology`] only ever reports validity up to a bound.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::partition::{self, bell_number, enumerate_partitions, Partition, Universe};

/// Default cap on the number of formula evaluations in a tautology search.
pub const DEFAULT_WORK_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Const0,
    Const1,
    Join(Box<Formula>, Box<Formula>),
    Meet(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_owned())
    }

    pub fn join(lhs: Formula, rhs: Formula) -> Self {
        Formula::Join(Box::new(lhs), Box::new(rhs))
    }

    pub fn meet(lhs: Formula, rhs: Formula) -> Self {
        Formula::Meet(Box::new(lhs), Box::new(rhs))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Self {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    /// Variable names in sorted order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Const0 | Formula::Const1 => {}
            Formula::Join(a, b) | Formula::Meet(a, b) | Formula::Implies(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Fully parenthesized rendering; always re-parses to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => f.write_str(v),
            Formula::Const0 => f.write_str("0"),
            Formula::Const1 => f.write_str("1"),
            Formula::Join(a, b) => write!(f, "({a} | {b})"),
            Formula::Meet(a, b) => write!(f, "({a} & {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Zero,
    One,
    Arrow,
    Bar,
    Amp,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'|' => Token::Bar,
            b'&' => Token::Amp,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((i, Token::Arrow));
                i += 2;
                continue;
            }
            b'0' | b'1' if !bytes.get(i + 1).is_some_and(is_ident_byte) => {
                if c == b'0' {
                    Token::Zero
                } else {
                    Token::One
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && is_ident_byte(&bytes[i]) {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_owned())));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character `{}`", text[i..].chars().next().unwrap()),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

fn is_ident_byte(c: &u8) -> bool {
    c.is_ascii_alphanumeric() || *c == b'_'
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.to_owned() })
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.join()?;
        if self.peek() == Some(&Token::Arrow) {
            self.pos += 1;
            let rhs = self.formula()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Formula> {
        let mut lhs = self.meet()?;
        while self.peek() == Some(&Token::Bar) {
            self.pos += 1;
            lhs = Formula::join(lhs, self.meet()?);
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Formula> {
        let mut lhs = self.atom()?;
        while self.peek() == Some(&Token::Amp) {
            self.pos += 1;
            lhs = Formula::meet(lhs, self.atom()?);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Formula> {
        let f = match self.peek() {
            Some(Token::Ident(name)) => Formula::Var(name.clone()),
            Some(Token::Zero) => Formula::Const0,
            Some(Token::One) => Formula::Const1,
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.formula()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected `)`");
                }
                inner
            }
            Some(_) => return self.error("expected a variable, constant, or `(`"),
            None => return self.error("unexpected end of input"),
        };
        self.pos += 1;
        Ok(f)
    }
}

pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser { tokens: tokenize(text)?, pos: 0, end: text.len() };
    let f = p.formula()?;
    if p.pos != p.tokens.len() {
        return p.error("trailing input");
    }
    Ok(f)
}

pub type Env = BTreeMap<String, Partition>;

pub fn eval(f: &Formula, env: &Env, universe: Universe) -> Result<Partition> {
    Ok(match f {
        Formula::Var(v) => {
            let p = env.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            if p.universe() != universe {
                return Err(Error::UniverseMismatch(p.len(), universe.size()));
            }
            p.clone()
        }
        Formula::Const0 => Partition::bottom(universe),
        Formula::Const1 => Partition::top(universe),
        Formula::Join(a, b) => partition::join(&eval(a, env, universe)?, &eval(b, env, universe)?)?,
        Formula::Meet(a, b) => partition::meet(&eval(a, env, universe)?, &eval(b, env, universe)?)?,
        Formula::Implies(a, b) => partition::implication(&eval(a, env, universe)?, &eval(b, env, universe)?)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TautologyStatus {
    TautologyUpToBound,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub universe: Universe,
    pub assignment: Env,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TautologyVerdict {
    pub status: TautologyStatus,
    /// Largest universe size searched.
    pub bound: usize,
    pub witness: Option<Witness>,
    pub evaluations: u128,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub work_limit: u128,
    pub exec: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { work_limit: DEFAULT_WORK_LIMIT, exec: Execution::default() }
    }
}

/// Total evaluations needed to exhaust universes `2..=max_n` with `vars` variables.
pub fn search_cost(max_n: usize, vars: usize) -> u128 {
    (2..=max_n)
        .map(|n| bell_number(n).checked_pow(vars as u32).unwrap_or(u128::MAX))
        .fold(0u128, |acc, c| acc.saturating_add(c))
}

pub fn check_tautology(f: &Formula, max_n: usize) -> Result<TautologyVerdict> {
    check_tautology_with(f, max_n, &SearchConfig::default())
}

/// Search universes of size `2..=max_n` in increasing order, assignments in
/// restricted-growth-string order, and return the first non-top evaluation.
pub fn check_tautology_with(f: &Formula, max_n: usize, config: &SearchConfig) -> Result<TautologyVerdict> {
    if max_n < 2 {
        return Err(Error::BoundExceeded { requested: max_n as u128, limit: 2 });
    }
    let vars: Vec<String> = f.variables().into_iter().collect();
    let cost = search_cost(max_n, vars.len());
    if cost > config.work_limit {
        return Err(Error::BoundExceeded { requested: cost, limit: config.work_limit });
    }

    let mut evaluations = 0u128;
    for n in 2..=max_n {
        let universe = Universe::new(n)?;
        let partitions: Vec<Partition> = enumerate_partitions(universe)?.collect();
        let base = partitions.len();
        let total = base.pow(vars.len() as u32);
        let top = Partition::top(universe);

        let assignment = |mut idx: usize| -> Env {
            // Last variable varies fastest.
            let mut env = Env::new();
            for v in vars.iter().rev() {
                env.insert(v.clone(), partitions[idx % base].clone());
                idx /= base;
            }
            env
        };

        // Chunk by the leading variable so each worker gets a contiguous range.
        let chunk = if vars.is_empty() { 1 } else { total / base };
        let chunks = total.div_ceil(chunk);
        let found = exec::find_map_first(config.exec, chunks, |c| {
            (c * chunk..((c + 1) * chunk).min(total)).find_map(|idx| {
                let env = assignment(idx);
                match eval(f, &env, universe) {
                    Ok(value) if value == top => None,
                    Ok(_) => Some(Ok((idx, env))),
                    Err(e) => Some(Err(e)),
                }
            })
        });
        match found {
            Some(Ok((idx, env))) => {
                evaluations += idx as u128 + 1;
                return Ok(TautologyVerdict {
                    status: TautologyStatus::Counterexample,
                    bound: n,
                    witness: Some(Witness { universe, assignment: env }),
                    evaluations,
                });
            }
            Some(Err(e)) => return Err(e),
            None => evaluations += total as u128,
        }
    }
    Ok(TautologyVerdict { status: TautologyStatus::TautologyUpToBound, bound: max_n, witness: None, evaluations })
}
