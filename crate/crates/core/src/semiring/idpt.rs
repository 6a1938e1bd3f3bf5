//! The free commutative idempotent semiring B[x1..xk]: finite sets of
//! exponent vectors with union as addition.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdptPoly(BTreeSet<Vec<u64>>);

impl IdptPoly {
    pub fn zero() -> Self {
        IdptPoly(BTreeSet::new())
    }

    pub fn one(k: usize) -> Self {
        IdptPoly(BTreeSet::from([vec![0; k]]))
    }

    /// The generator `x_{index+1}` raised to `exp`.
    pub fn generator_power(k: usize, index: usize, exp: u64) -> Self {
        let mut v = vec![0; k];
        v[index] = exp;
        IdptPoly(BTreeSet::from([v]))
    }

    pub fn from_monomials(monos: impl IntoIterator<Item = Vec<u64>>) -> Self {
        IdptPoly(monos.into_iter().collect())
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.0.iter()
    }

    pub fn contains(&self, mono: &[u64]) -> bool {
        self.0.contains(mono)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn arity_ok(&self, k: usize) -> bool {
        self.0.iter().all(|m| m.len() == k)
    }

    pub fn union(&self, other: &Self) -> Self {
        IdptPoly(self.0.union(&other.0).cloned().collect())
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut out = BTreeSet::new();
        for a in &self.0 {
            for b in &other.0 {
                out.insert(a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>());
            }
        }
        IdptPoly(out)
    }

    pub fn parse(text: &str, k: usize) -> Result<Self> {
        let bad = || Error::Parse(format!("`{text}` is not a set of monomials over x1..x{k}"));
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(bad)?;
        let mut out = BTreeSet::new();
        for mono in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let mut v = vec![0u64; k];
            if mono != "1" {
                for factor in mono.split('*') {
                    let (base, exp) = match factor.split_once('^') {
                        Some((b, e)) => (b, e.parse::<u64>().map_err(|_| bad())?),
                        None => (factor, 1),
                    };
                    let idx: usize = base
                        .strip_prefix('x')
                        .and_then(|i| i.parse().ok())
                        .filter(|&i| i >= 1 && i <= k)
                        .ok_or_else(bad)?;
                    v[idx - 1] += exp;
                }
            }
            out.insert(v);
        }
        Ok(IdptPoly(out))
    }
}

fn fmt_mono(m: &[u64]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for IdptPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| fmt_mono(m)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
