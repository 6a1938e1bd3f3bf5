//! Sparse multivariate polynomials in the variables `σ_v` (letter σ, vertex v).

mod count;
mod formal;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub use count::CountPoly;
pub use formal::{FormalPoly, Point};
pub(crate) use formal::split_top;

use crate::word::{Letter, Word};

/// The variable `letter_vertex`. Ordered vertex-major, then by letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    pub letter: Letter,
    pub vertex: u32,
}

impl Var {
    pub fn new(letter: Letter, vertex: u32) -> Self {
        Var { letter, vertex }
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.vertex, self.letter).cmp(&(other.vertex, other.letter))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.letter, self.vertex)
    }
}

impl std::str::FromStr for Var {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Var> {
        let bad = || crate::Error::Parse(format!("`{s}` is not a variable like a_1"));
        let (l, v) = s.trim().split_once('_').ok_or_else(bad)?;
        let mut chars = l.chars();
        let letter = chars.next().filter(|c| c.is_ascii_alphabetic()).ok_or_else(bad)?;
        if chars.next().is_some() {
            return Err(bad());
        }
        let vertex: u32 = v.parse().map_err(|_| bad())?;
        if vertex == 0 {
            return Err(bad());
        }
        Ok(Var { letter, vertex })
    }
}

/// A formal monomial: variables with positive exponents. Empty is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Var, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(BTreeMap::from([(v, 1)]))
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m.mul_var(v, e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &u32)> {
        self.0.iter()
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.0.keys()
    }

    pub fn degree(&self) -> u64 {
        self.0.values().map(|&e| e as u64).sum()
    }

    /// Total exponent of the variables `letter_v` over all vertices v.
    pub fn letter_degree(&self, letter: Letter) -> u64 {
        self.0
            .iter()
            .filter(|(v, _)| v.letter == letter)
            .map(|(_, &e)| e as u64)
            .sum()
    }

    pub fn mul_var(&mut self, v: Var, e: u32) {
        if e > 0 {
            *self.0.entry(v).or_insert(0) += e;
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&v, &e) in &other.0 {
            out.mul_var(v, e);
        }
        out
    }

    /// Drops every variable at `vertex`, i.e. evaluates them at 1.
    pub fn without_vertex(&self, vertex: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter(|(v, _)| v.vertex != vertex)
                .map(|(&v, &e)| (v, e))
                .collect(),
        )
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_exponents(self.0.iter().map(|(&v, &e)| (f(v), e)))
    }

    pub fn map_exponents(&self, f: impl Fn(u32) -> u32) -> Monomial {
        Monomial::from_exponents(self.0.iter().map(|(&v, &e)| (v, f(e))))
    }

    /// True when every exponent of `self` is at most the one in `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, &e)| other.exponent(v) >= e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// The monomial ∏ σ_vertex^{|w|_σ}: the abelianisation of `w` placed at `vertex`.
pub fn abelianize(w: &Word, vertex: u32) -> Monomial {
    Monomial::from_exponents(w.letters().iter().map(|&c| (Var::new(c, vertex), 1)))
}
