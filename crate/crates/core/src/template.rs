//! Integer polynomial templates in named parameters, used by the data files
//! to describe whole families of rows (`4n-2`, `2^2 1^(2n-4)`, `4k(n-k)`).

use std::collections::BTreeMap;
use std::fmt;

pub type Env = BTreeMap<char, i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(i64),
    Var(char),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr, ParseError> {
        let mut p = Parser {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let e = p.sum()?;
        if p.pos != p.chars.len() {
            return Err(ParseError(format!("trailing input in {s:?} at {}", p.pos)));
        }
        Ok(e)
    }

    pub fn eval(&self, env: &Env) -> Result<i64, ParseError> {
        Ok(match self {
            Expr::Num(n) => *n,
            Expr::Var(v) => *env
                .get(v)
                .ok_or_else(|| ParseError(format!("unbound parameter {v}")))?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Expr::Pow(a, k) => a.eval(env)?.pow(*k),
            Expr::Neg(a) => -a.eval(env)?,
        })
    }

    pub fn vars(&self, out: &mut Vec<char>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(*v)
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Expr::Pow(a, _) | Expr::Neg(a) => a.vars(out),
        }
    }

    /// Solves `self(var) = target` when `self` is affine in `var` with the other
    /// parameters fixed by `env`.
    pub fn solve_affine(&self, var: char, target: i64, env: &Env) -> Option<i64> {
        let at = |x: i64| {
            let mut e = env.clone();
            e.insert(var, x);
            self.eval(&e).ok()
        };
        let (b, a1, a2) = (at(0)?, at(1)?, at(2)?);
        let a = a1 - b;
        if a2 - a1 != a || a == 0 {
            return None;
        }
        let d = target - b;
        (d % a == 0).then_some(d / a)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.product()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    e = Expr::Add(Box::new(e), Box::new(self.product()?));
                }
                '-' => {
                    self.pos += 1;
                    e = Expr::Sub(Box::new(e), Box::new(self.product()?));
                }
                _ => break,
            }
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    e = Expr::Mul(Box::new(e), Box::new(self.power()?));
                }
                // implicit multiplication: 2n, 4k(n-k)
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    e = Expr::Mul(Box::new(e), Box::new(self.power()?));
                }
                _ => break,
            }
        }
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            match self.atom()? {
                Expr::Num(k) if k >= 0 => return Ok(Expr::Pow(Box::new(base), k as u32)),
                _ => return Err(ParseError("exponent must be a non-negative integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(ParseError("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                s.parse()
                    .map(Expr::Num)
                    .map_err(|_| ParseError(format!("bad number {s}")))
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Expr::Var(c))
            }
            other => Err(ParseError(format!("unexpected {other:?}"))),
        }
    }
}

/// Partition template such as `3 1^(2n-1)` or `2^2 1^(2n-4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTemplate(Vec<(Expr, Expr)>);

impl PartitionTemplate {
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            let (base, mult) = match split_top_caret(tok) {
                Some((b, m)) => (b, m),
                None => (tok, "1"),
            };
            out.push((Expr::parse(base)?, Expr::parse(mult)?));
        }
        if out.is_empty() {
            return Err(ParseError("empty partition".into()));
        }
        Ok(PartitionTemplate(out))
    }

    pub fn eval(&self, env: &Env) -> Result<Vec<usize>, ParseError> {
        let mut parts = Vec::new();
        for (b, m) in &self.0 {
            let (b, m) = (b.eval(env)?, m.eval(env)?);
            if b <= 0 || m < 0 {
                return Err(ParseError(format!("part {b} with multiplicity {m}")));
            }
            parts.extend(std::iter::repeat_n(b as usize, m as usize));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(parts)
    }
}

// The caret separating a part from its multiplicity is the first one outside parentheses.
fn split_top_caret(tok: &str) -> Option<(&str, &str)> {
    let mut depth = 0;
    for (i, c) in tok.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '^' if depth == 0 => return Some((&tok[..i], &tok[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Conjunction of comparisons such as `n>=2, 2k<=n, k>=1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint(Vec<(Expr, Cmp, Expr)>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Le,
    Ge,
    Lt,
    Gt,
    Eq,
}

impl Constraint {
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let mut out = Vec::new();
        for clause in s
            .split(',')
            .map(str::trim)
            .filter(|c| !c.is_empty() && *c != "-")
        {
            let (op, at, len) = [
                ("<=", Cmp::Le),
                (">=", Cmp::Ge),
                ("<", Cmp::Lt),
                (">", Cmp::Gt),
                ("=", Cmp::Eq),
            ]
            .iter()
            .find_map(|(t, op)| clause.find(t).map(|i| (*op, i, t.len())))
            .ok_or_else(|| ParseError(format!("no comparison in {clause:?}")))?;
            out.push((
                Expr::parse(&clause[..at])?,
                op,
                Expr::parse(&clause[at + len..])?,
            ));
        }
        Ok(Constraint(out))
    }

    pub fn holds(&self, env: &Env) -> Result<bool, ParseError> {
        for (a, op, b) in &self.0 {
            let (a, b) = (a.eval(env)?, b.eval(env)?);
            let ok = match op {
                Cmp::Le => a <= b,
                Cmp::Ge => a >= b,
                Cmp::Lt => a < b,
                Cmp::Gt => a > b,
                Cmp::Eq => a == b,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn env(pairs: &[(char, i64)]) -> Env {
    pairs.iter().copied().collect()
}
