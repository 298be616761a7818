//! The group mini-language.
//!
//! ```text
//! spec  := C(n) | D(2n) | S(n) | A(n) | SL32 | FSD(q,n) | SDP(k,m,u)
//!        | perm[gen, gen, ...] | prod(spec,spec)
//! gen   := cycle cycle ...        e.g. (1 2 3)(4 5), or () for the identity
//! ```
//!
//! Cycle points are 1-based and may be separated by spaces or commas.
//! Products of generators compose left to right: `(1 2)(2 3)` applies `(1 2)`
//! first. Whitespace between tokens is ignored.

use std::fmt;

use thiserror::Error;

use ramify_core::families;
use ramify_core::{FiniteGroup, GroupError, Permutation, DEFAULT_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Parameter is the group order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Sl32,
    FieldSemidirect(u64, u32),
    /// `Z/k ⋊ Z/m` acting by `x ↦ x^u`.
    CyclicSemidirect(usize, usize, u64),
    /// Generators, each a list of 1-based cycles.
    Perm(Vec<Vec<Vec<usize>>>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot build group: {0}")]
    Build(#[from] GroupError),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: at,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => self.err(self.pos, format!("expected '{want}', found '{c}'")),
            None => self.err(self.pos, format!("expected '{want}', found end of input")),
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return self.err(start, "expected a group name");
        }
        self.pos += len;
        Ok((start, &self.src[start..start + len]))
    }

    fn number<T: std::str::FromStr>(&mut self) -> Result<T, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return self.err(start, "expected a number");
        }
        self.pos += len;
        self.src[start..start + len]
            .parse()
            .or_else(|_| self.err(start, "number out of range"))
    }

    fn args<const N: usize>(&mut self) -> Result<[u64; N], ParseError> {
        self.expect('(')?;
        let mut out = [0u64; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(',')?;
            }
            *slot = self.number()?;
        }
        self.expect(')')?;
        Ok(out)
    }

    fn size(&self, at: usize, v: u64) -> Result<usize, ParseError> {
        usize::try_from(v).or_else(|_| self.err(at, "number out of range"))
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let (at, name) = self.ident()?;
        Ok(match name {
            "C" => {
                let [n] = self.args::<1>()?;
                GroupSpec::Cyclic(self.size(at, n)?)
            }
            "D" => {
                let [n] = self.args::<1>()?;
                GroupSpec::Dihedral(self.size(at, n)?)
            }
            "S" => {
                let [n] = self.args::<1>()?;
                GroupSpec::Symmetric(self.size(at, n)?)
            }
            "A" => {
                let [n] = self.args::<1>()?;
                GroupSpec::Alternating(self.size(at, n)?)
            }
            "SL32" => GroupSpec::Sl32,
            "FSD" => {
                let [q, n] = self.args::<2>()?;
                let n = u32::try_from(n).or_else(|_| self.err(at, "number out of range"))?;
                GroupSpec::FieldSemidirect(q, n)
            }
            "SDP" => {
                let [k, m, u] = self.args::<3>()?;
                GroupSpec::CyclicSemidirect(self.size(at, k)?, self.size(at, m)?, u)
            }
            "perm" => GroupSpec::Perm(self.perm_body()?),
            "prod" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                GroupSpec::Product(Box::new(a), Box::new(b))
            }
            other => return self.err(at, format!("unknown group '{other}'")),
        })
    }

    fn perm_body(&mut self) -> Result<Vec<Vec<Vec<usize>>>, ParseError> {
        self.expect('[')?;
        let mut gens = Vec::new();
        loop {
            gens.push(self.generator()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(gens);
                }
                Some(c) => return self.err(self.pos, format!("expected ',' or ']', found '{c}'")),
                None => return self.err(self.pos, "unterminated perm[...]"),
            }
        }
    }

    fn generator(&mut self) -> Result<Vec<Vec<usize>>, ParseError> {
        let mut cycles = Vec::new();
        if self.peek() != Some('(') {
            return self.err(self.pos, "expected a cycle");
        }
        while self.peek() == Some('(') {
            self.pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(',') if !cycle.is_empty() => self.pos += 1,
                    _ => {
                        let at = self.pos;
                        let point: usize = self.number()?;
                        if point == 0 {
                            return self.err(at, "points are numbered from 1");
                        }
                        if cycle.contains(&point) {
                            return self.err(at, format!("point {point} repeated in a cycle"));
                        }
                        cycle.push(point);
                    }
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Ok(cycles)
    }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec, ParseError> {
        let mut p = Parser { src: text, pos: 0 };
        if p.peek().is_none() {
            return p.err(0, "empty group spec");
        }
        let spec = p.spec()?;
        if p.peek().is_some() {
            return p.err(p.pos, "trailing input");
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        let g = match self {
            GroupSpec::Cyclic(n) => families::cyclic(*n)?,
            GroupSpec::Dihedral(n) => families::dihedral(*n)?,
            GroupSpec::Symmetric(n) => families::symmetric(*n)?,
            GroupSpec::Alternating(n) => families::alternating(*n)?,
            GroupSpec::Sl32 => families::sl32()?,
            GroupSpec::FieldSemidirect(q, n) => families::field_semidirect(*q, *n)?,
            GroupSpec::CyclicSemidirect(k, m, u) => families::cyclic_semidirect(*k, *m, *u)?,
            GroupSpec::Perm(gens) => {
                let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1);
                let perms = gens
                    .iter()
                    .map(|cycles| {
                        let zero: Vec<Vec<usize>> = cycles
                            .iter()
                            .map(|c| c.iter().map(|&x| x - 1).collect())
                            .collect();
                        Permutation::from_cycles(degree, &zero)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                FiniteGroup::closure(&perms, DEFAULT_CAP)?
            }
            GroupSpec::Product(a, b) => families::direct_product(&a.build()?, &b.build()?)?,
        };
        Ok(g.with_label(self.to_string()))
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupSpec::parse(s)
    }
}

pub fn parse_group_spec(text: &str) -> Result<FiniteGroup, SpecError> {
    Ok(GroupSpec::parse(text)?.build()?)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::Symmetric(n) => write!(f, "S({n})"),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::Sl32 => f.write_str("SL32"),
            GroupSpec::FieldSemidirect(q, n) => write!(f, "FSD({q},{n})"),
            GroupSpec::CyclicSemidirect(k, m, u) => write!(f, "SDP({k},{m},{u})"),
            GroupSpec::Perm(gens) => {
                f.write_str("perm[")?;
                for (i, cycles) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    if cycles.is_empty() {
                        f.write_str("()")?;
                    }
                    for c in cycles {
                        let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                f.write_str("]")
            }
            GroupSpec::Product(a, b) => write!(f, "prod({a},{b})"),
        }
    }
}
